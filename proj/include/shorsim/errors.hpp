// Copyright 2026 The shorsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Exception types thrown across the simulator.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shorsim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UndefinedInputError : public Error {
  public:
    using Error::Error;
};

class RangeError : public Error {
  public:
    using Error::Error;
};

class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Base and modulus share a factor; the gcd is already a divisor of n.
class NotCoprimeError : public Error {
  public:
    NotCoprimeError(std::uint64_t x, std::uint64_t n, std::uint64_t gcd)
        : Error("base " + std::to_string(x) + " is not coprime to " +
                std::to_string(n) + " (gcd " + std::to_string(gcd) + ")"),
          gcd_(gcd) {}

    [[nodiscard]] std::uint64_t gcd() const noexcept { return gcd_; }

  private:
    std::uint64_t gcd_;
};

class InvalidOrderError : public Error {
  public:
    using Error::Error;
};

/// A pipeline stage was applied to a state it does not accept.
class StageOrderError : public Error {
  public:
    using Error::Error;
};

class NormalizationError : public Error {
  public:
    using Error::Error;
};

class ConditioningError : public Error {
  public:
    using Error::Error;
};

/// n is unsuitable for the requested run (even, prime, prime power, ...).
class UnsuitableInputError : public Error {
  public:
    using Error::Error;
};

} // namespace shorsim
