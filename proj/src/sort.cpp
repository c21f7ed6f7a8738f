/* Copyright 2026 The Alethe Checker Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#include "alethe/sort.hpp"

#include "alethe/error.hpp"

namespace alethe {

Sort Sort::uninterpreted(std::string name) {
  Sort s(SortKind::Uninterpreted);
  s.name_ = std::move(name);
  return s;
}

Sort Sort::function(std::vector<Sort> domain, Sort codomain) {
  if (domain.empty()) {
    throw Error(ErrorKind::SortError, "function sort with empty domain");
  }
  if (codomain.kind() == SortKind::Function) {
    throw Error(ErrorKind::SortError, "function sort with function codomain");
  }
  Sort s(SortKind::Function);
  s.parts_ = std::move(domain);
  s.parts_.push_back(std::move(codomain));
  return s;
}

std::span<const Sort> Sort::domain() const {
  if (kind_ != SortKind::Function) return {};
  return std::span<const Sort>(parts_).first(parts_.size() - 1);
}

const Sort& Sort::codomain() const {
  return kind_ == SortKind::Function ? parts_.back() : *this;
}

std::string Sort::to_string() const {
  switch (kind_) {
    case SortKind::Bool: return "Bool";
    case SortKind::Int: return "Int";
    case SortKind::Real: return "Real";
    case SortKind::Uninterpreted: return name_;
    case SortKind::Function: {
      std::string out = "(->";
      for (const Sort& s : parts_) out += " " + s.to_string();
      return out + ")";
    }
  }
  return "?";
}

}  // namespace alethe
