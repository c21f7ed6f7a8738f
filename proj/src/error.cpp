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
#include "alethe/error.hpp"

namespace alethe {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LexError: return "LexError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SortError: return "SortError";
    case ErrorKind::UndeclaredSymbol: return "UndeclaredSymbol";
    case ErrorKind::UnsupportedCommand: return "UnsupportedCommand";
    case ErrorKind::UnknownPremise: return "UnknownPremise";
    case ErrorKind::UnclosedAnchor: return "UnclosedAnchor";
    case ErrorKind::DuplicateStepId: return "DuplicateStepId";
    case ErrorKind::ScopeError: return "ScopeError";
    case ErrorKind::NoGoal: return "NoGoal";
    case ErrorKind::Unelaborable: return "Unelaborable";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

std::string format(ErrorKind kind, const std::string& message,
                   const std::optional<Location>& location) {
  std::string out(to_string(kind));
  if (location) {
    out += " at " + std::to_string(location->line) + ":" +
           std::to_string(location->column);
  }
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<Location> location)
    : std::runtime_error(format(kind, message, location)),
      kind_(kind),
      message_(message),
      location_(location) {}

}  // namespace alethe
