// Copyright 2026 The pfphoton Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace pfphoton {

/// Input outside the domain of an operation (bad speed, non-unit axis,
/// non-null momentum, ...).
class DomainError : public std::invalid_argument {
  public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A little-group element failed to stabilise its standard vector(s).
/// This signals a construction bug, never bad user input.
class StabilityError : public std::runtime_error {
  public:
    explicit StabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// A polariser defined in one frame was applied to a state labelled by
/// another frame velocity.
class FrameMismatch : public std::invalid_argument {
  public:
    explicit FrameMismatch(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace pfphoton
