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
 * Dense complex matrices in the energy eigenbasis and the handful of linear
 * algebra kernels the verifications need.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "spectral_core.hpp"
#include "summation.hpp"

namespace qtime {

/**
 * Row-major N x N complex matrix.
 *
 * A matrix constructed with `hermitian = true` is checked on construction:
 * entries(j,k) must equal conj(entries(k,j)) to 1e-13.
 */
class OperatorMatrix {
  public:
    static constexpr double kHermitianTolerance = 1e-13;

    explicit OperatorMatrix(std::size_t n)
        : n_(n), entries_(n * n, complex_t{0.0, 0.0}) {}

    OperatorMatrix(std::size_t n, std::vector<complex_t> entries,
                   bool hermitian = false)
        : n_(n), entries_(std::move(entries)), hermitian_(hermitian) {
        if (entries_.size() != n_ * n_) {
            throw DimensionError("OperatorMatrix: expected " +
                                 std::to_string(n_ * n_) + " entries, got " +
                                 std::to_string(entries_.size()));
        }
        if (hermitian_ && hermiticity_defect() > kHermitianTolerance) {
            throw PreconditionError(
                "OperatorMatrix: tagged hermitian but entries are not");
        }
    }

    static OperatorMatrix identity(std::size_t n) {
        OperatorMatrix m(n);
        for (std::size_t j = 0; j < n; ++j) {
            m(j, j) = 1.0;
        }
        m.hermitian_ = true;
        return m;
    }

    static OperatorMatrix diagonal(std::span<const double> d) {
        OperatorMatrix m(d.size());
        for (std::size_t j = 0; j < d.size(); ++j) {
            m(j, j) = d[j];
        }
        m.hermitian_ = true;
        return m;
    }

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] bool hermitian() const { return hermitian_; }

    complex_t &operator()(std::size_t j, std::size_t k) {
        return entries_[j * n_ + k];
    }
    [[nodiscard]] complex_t operator()(std::size_t j, std::size_t k) const {
        return entries_[j * n_ + k];
    }

    [[nodiscard]] complex_t at(std::size_t j, std::size_t k) const {
        if (j >= n_ || k >= n_) {
            throw IndexError("OperatorMatrix: index out of range");
        }
        return (*this)(j, k);
    }

    [[nodiscard]] std::span<const complex_t> entries() const { return entries_; }

    /// max_{jk} |A_jk - conj(A_kj)|.
    [[nodiscard]] double hermiticity_defect() const {
        double worst = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t k = j; k < n_; ++k) {
                worst = std::max(worst, std::abs((*this)(j, k) -
                                                 std::conj((*this)(k, j))));
            }
        }
        return worst;
    }

    friend bool operator==(const OperatorMatrix &a, const OperatorMatrix &b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

  private:
    std::size_t n_;
    std::vector<complex_t> entries_;
    bool hermitian_ = false;
};

namespace detail {
inline void require_same_size(const OperatorMatrix &a, const OperatorMatrix &b,
                              const char *op) {
    if (a.size() != b.size()) {
        throw DimensionError(std::string(op) + ": size mismatch " +
                             std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    }
}
} // namespace detail

inline OperatorMatrix matmul(const OperatorMatrix &a, const OperatorMatrix &b) {
    detail::require_same_size(a, b, "matmul");
    const std::size_t n = a.size();
    OperatorMatrix c(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
            const complex_t ajl = a(j, l);
            if (ajl == complex_t{0.0, 0.0}) {
                continue;
            }
            for (std::size_t k = 0; k < n; ++k) {
                c(j, k) += ajl * b(l, k);
            }
        }
    }
    return c;
}

inline OperatorMatrix operator-(const OperatorMatrix &a, const OperatorMatrix &b) {
    detail::require_same_size(a, b, "subtract");
    const std::size_t n = a.size();
    OperatorMatrix c(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            c(j, k) = a(j, k) - b(j, k);
        }
    }
    return c;
}

inline OperatorMatrix conjugate_transpose(const OperatorMatrix &a) {
    const std::size_t n = a.size();
    OperatorMatrix c(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            c(k, j) = std::conj(a(j, k));
        }
    }
    return c;
}

/// Matrix-vector product A v.
inline std::vector<complex_t> matvec(const OperatorMatrix &a,
                                    std::span<const complex_t> v) {
    if (v.size() != a.size()) {
        throw DimensionError("apply: vector length " + std::to_string(v.size()) +
                             " does not match matrix size " +
                             std::to_string(a.size()));
    }
    const std::size_t n = a.size();
    std::vector<complex_t> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        complex_t acc{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            acc += a(j, k) * v[k];
        }
        out[j] = acc;
    }
    return out;
}

inline double vector_norm(std::span<const complex_t> v) {
    CompensatedSum<double> acc;
    for (const auto &x : v) {
        acc += std::norm(x);
    }
    return std::sqrt(acc.value());
}

/// max_{jk} |A_jk - B_jk|.
inline double max_abs_difference(const OperatorMatrix &a, const OperatorMatrix &b) {
    detail::require_same_size(a, b, "max_abs_difference");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

/**
 * Largest singular value of A by power iteration on A^H A.
 *
 * Iteration stops when the Rayleigh quotient changes by less than
 * `tolerance` relative, or after `max_iterations` steps.
 */
inline double spectral_norm(const OperatorMatrix &a, double tolerance = 1e-10,
                            int max_iterations = 10000) {
    const std::size_t n = a.size();
    if (n == 0) {
        return 0.0;
    }
    // Fixed, non-symmetric start vector so no eigen-direction is missed by
    // accident of symmetry.
    std::vector<complex_t> v(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double x = static_cast<double>(j + 1);
        v[j] = complex_t{1.0 + 0.37 * std::sin(1.3 * x), 0.21 * std::cos(0.7 * x)};
    }
    double nv = vector_norm(v);
    for (auto &x : v) {
        x /= nv;
    }

    const OperatorMatrix ah = conjugate_transpose(a);
    double lambda = 0.0;
    for (int it = 0; it < max_iterations; ++it) {
        auto av = matvec(a, v);
        const double next = std::pow(vector_norm(av), 2);
        auto w = matvec(ah, av);
        const double nw = vector_norm(w);
        if (nw == 0.0) {
            return 0.0;
        }
        for (std::size_t j = 0; j < n; ++j) {
            v[j] = w[j] / nw;
        }
        if (it > 0 && std::abs(next - lambda) <= tolerance * next) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return std::sqrt(lambda);
}

/**
 * Eigenvalues of a real symmetric matrix (row-major, n x n) by cyclic Jacobi
 * rotations, sorted ascending.
 */
inline std::vector<double> symmetric_eigenvalues(std::vector<double> m,
                                                 std::size_t n) {
    if (m.size() != n * n) {
        throw DimensionError("symmetric_eigenvalues: bad matrix size");
    }
    auto at = [&](std::size_t j, std::size_t k) -> double & { return m[j * n + k]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        double total = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                total += at(j, k) * at(j, k);
                if (j != k) {
                    off += at(j, k) * at(j, k);
                }
            }
        }
        if (off <= 1e-30 * total || off == 0.0) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t j = 0; j < n; ++j) {
        eig[j] = at(j, j);
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

/**
 * Eigenvalues of a Hermitian matrix, ascending.
 *
 * Uses the real embedding [[Re A, -Im A], [Im A, Re A]], whose spectrum is
 * that of A with every eigenvalue doubled.
 */
inline std::vector<double> hermitian_eigenvalues(const OperatorMatrix &a) {
    const std::size_t n = a.size();
    const std::size_t m = 2 * n;
    std::vector<double> real(m * m);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const complex_t z = a(j, k);
            real[j * m + k] = z.real();
            real[j * m + (k + n)] = -z.imag();
            real[(j + n) * m + k] = z.imag();
            real[(j + n) * m + (k + n)] = z.real();
        }
    }
    auto doubled = symmetric_eigenvalues(std::move(real), m);
    std::vector<double> eig(n);
    for (std::size_t j = 0; j < n; ++j) {
        eig[j] = 0.5 * (doubled[2 * j] + doubled[2 * j + 1]);
    }
    return eig;
}

/// Number of eigenvalues with |lambda| > tolerance.
inline std::size_t hermitian_rank(const OperatorMatrix &a, double tolerance = 1e-10) {
    const auto eig = hermitian_eigenvalues(a);
    return static_cast<std::size_t>(std::count_if(
        eig.begin(), eig.end(), [&](double x) { return std::abs(x) > tolerance; }));
}

} // namespace qtime
