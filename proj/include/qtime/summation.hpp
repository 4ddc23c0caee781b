// Copyright 2026 The qtime Authors

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
 * Compensated (Kahan-Babuska-Neumaier) summation.
 */

#pragma once

#include <cmath>
#include <complex>

namespace qtime {

/**
 * Running sum with an error-compensation term.
 *
 * Neumaier's variant also handles addends larger than the running sum, which
 * plain Kahan summation loses.
 */
template <typename T> class CompensatedSum {
  public:
    CompensatedSum() = default;
    explicit CompensatedSum(T initial) : sum_(initial) {}

    CompensatedSum &operator+=(T value) {
        const T t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value)) {
            compensation_ += (sum_ - t) + value;
        } else {
            compensation_ += (value - t) + sum_;
        }
        sum_ = t;
        return *this;
    }

    [[nodiscard]] T value() const { return sum_ + compensation_; }

  private:
    T sum_{0};
    T compensation_{0};
};

/// Compensated sum of complex values, real and imaginary parts carried
/// separately.
template <typename T> class CompensatedSum<std::complex<T>> {
  public:
    CompensatedSum &operator+=(std::complex<T> value) {
        re_ += value.real();
        im_ += value.imag();
        return *this;
    }

    [[nodiscard]] std::complex<T> value() const {
        return {re_.value(), im_.value()};
    }

  private:
    CompensatedSum<T> re_;
    CompensatedSum<T> im_;
};

} // namespace qtime
