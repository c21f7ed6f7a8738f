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
#pragma once

#include <span>
#include <string>
#include <vector>

namespace alethe {

enum class SortKind { Bool, Int, Real, Uninterpreted, Function };

// Sorts of the UFLIRA fragment. Value type; function sorts only appear in
// signatures, never as the sort of a term.
class Sort {
 public:
  Sort() = default;

  static Sort boolean() { return Sort(SortKind::Bool); }
  static Sort integer() { return Sort(SortKind::Int); }
  static Sort real() { return Sort(SortKind::Real); }
  static Sort uninterpreted(std::string name);
  // Throws SortError for an empty domain or a function-sorted codomain.
  static Sort function(std::vector<Sort> domain, Sort codomain);

  SortKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::span<const Sort> domain() const;
  const Sort& codomain() const;

  bool is_bool() const { return kind_ == SortKind::Bool; }
  bool is_numeric() const {
    return kind_ == SortKind::Int || kind_ == SortKind::Real;
  }

  std::string to_string() const;

  friend bool operator==(const Sort&, const Sort&) = default;

 private:
  explicit Sort(SortKind kind) : kind_(kind) {}

  SortKind kind_ = SortKind::Bool;
  std::string name_;
  // Function sorts: domain followed by the codomain.
  std::vector<Sort> parts_;
};

}  // namespace alethe
