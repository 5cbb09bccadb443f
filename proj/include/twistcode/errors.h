// Copyright 2026 The twistcode Authors
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

#ifndef TWISTCODE_ERRORS_H
#define TWISTCODE_ERRORS_H

#include <stdexcept>
#include <string>

namespace twistcode {

// Base of everything the library throws on bad input.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class GeometryError : public Error {
   public:
    using Error::Error;
};

class SizeError : public Error {
   public:
    using Error::Error;
};

class DomainError : public Error {
   public:
    using Error::Error;
};

class ProjectionError : public Error {
   public:
    using Error::Error;
};

class ZeroProbabilityError : public Error {
   public:
    using Error::Error;
};

// Raised when an internal consistency check fails (not a caller mistake).
class InvariantError : public Error {
   public:
    using Error::Error;
};

// Invalid experiment configuration.
class ConfigError : public Error {
   public:
    using Error::Error;
};

[[noreturn]] void fail_invariant(const std::string &what);

}  // namespace twistcode

#endif
