// Copyright 2026 The qaclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QACLAB_ERRORS_HPP
#define QACLAB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace qaclab {

/// Bad argument values: out-of-range qubits, malformed sets, invalid phases.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Text that could not be parsed. The message carries line/field context.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A structurally well-formed object that violates a model invariant.
class ValidationError : public std::runtime_error {
   public:
    explicit ValidationError(std::vector<std::string> issues);
    const std::vector<std::string> &issues() const {
        return issues_;
    }

   private:
    std::vector<std::string> issues_;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Something that cannot happen for valid inputs did happen.
class InternalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace qaclab

#endif
