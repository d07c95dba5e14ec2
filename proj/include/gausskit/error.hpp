// Copyright 2026 The gausskit Authors
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

#ifndef _GAUSSKIT_ERROR_H
#define _GAUSSKIT_ERROR_H

#include <stdexcept>
#include <string>

namespace gausskit {

/// Base class of every exception thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a formula (e.g. a matrix that must be positive is not).
struct DomainError : Error {
    using Error::Error;
};

/// Parameters do not describe a valid (normalizable, positive) Gaussian state.
struct InvalidStateError : Error {
    using Error::Error;
};

/// Matrix or vector dimensions are inconsistent.
struct ShapeError : Error {
    using Error::Error;
};

/// The Gaussian integral defining a product does not converge at these parameters.
struct NotComposableError : Error {
    using Error::Error;
};

/// The requested analysis is not defined for this input (e.g. separability of a mixed state).
struct UnsupportedError : Error {
    using Error::Error;
};

/// An estimate is dominated by statistical noise.
struct IllConditionedError : Error {
    using Error::Error;
};

}  // namespace gausskit

#endif
