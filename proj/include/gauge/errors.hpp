// Copyright 2026 The gauge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAUGE_ERRORS_HPP
#define GAUGE_ERRORS_HPP

#include <stdexcept>

namespace gauge {

/// Invalid input: bad group, bad lattice, mismatched operands.
class SpecError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A configurable size cap would be exceeded.
class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A result failed a self-check that should hold by construction.
class InternalConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace gauge

#endif
