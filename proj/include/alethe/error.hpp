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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace alethe {

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const Location&, const Location&) = default;
};

enum class ErrorKind {
  LexError,
  ParseError,
  SortError,
  UndeclaredSymbol,
  UnsupportedCommand,
  UnknownPremise,
  UnclosedAnchor,
  DuplicateStepId,
  ScopeError,
  NoGoal,
  Unelaborable,
  IoError,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// The single exception type thrown by the library. Every failure that is not
// a rule-level verdict surfaces as one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<Location> location = std::nullopt);

  ErrorKind kind() const { return kind_; }
  const std::string& message() const { return message_; }
  const std::optional<Location>& location() const { return location_; }

 private:
  ErrorKind kind_;
  std::string message_;
  std::optional<Location> location_;
};

}  // namespace alethe
