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

#include <cmath>
#include <complex>
#include <vector>

#include "test_helpers.hpp"

#include "qtime/galapon_operator.hpp"
#include "qtime/linalg.hpp"
#include "qtime/random.hpp"

using namespace qtime;
using namespace qtime::test;
using Catch::Approx;

namespace {

OperatorMatrix random_hermitian(std::size_t n, SplitMix64 &rng) {
    OperatorMatrix m(n);
    for (std::size_t j = 0; j < n; ++j) {
        m(j, j) = rng.gaussian_pair().first;
        for (std::size_t k = j + 1; k < n; ++k) {
            auto [a, b] = rng.gaussian_pair();
            m(j, k) = {a, b};
            m(k, j) = {a, -b};
        }
    }
    return m;
}

} // namespace

TEST_CASE("OperatorMatrix construction", "[linalg]") {
    CHECK_THROWS_AS(OperatorMatrix(2, std::vector<complex_t>(3)), DimensionError);
    std::vector<complex_t> bad{0.0, complex_t{0.0, 1.0}, complex_t{0.0, 1.0}, 0.0};
    CHECK_THROWS_AS(OperatorMatrix(2, bad, true), PreconditionError);
    CHECK_NOTHROW(OperatorMatrix(2, bad, false));
    CHECK_THROWS_AS(OperatorMatrix(2).at(2, 0), IndexError);
}

TEST_CASE("matmul and apply agree with hand products", "[linalg]") {
    OperatorMatrix a(2, {1.0, 2.0, 3.0, 4.0});
    OperatorMatrix b(2, {0.0, complex_t{0.0, 1.0}, 1.0, 0.0});
    const auto c = matmul(a, b);
    CHECK(c(0, 0) == complex_t{2.0, 0.0});
    CHECK(c(0, 1) == complex_t{0.0, 1.0});
    CHECK(c(1, 0) == complex_t{4.0, 0.0});
    CHECK(c(1, 1) == complex_t{0.0, 3.0});

    const std::vector<complex_t> v{1.0, complex_t{0.0, 1.0}};
    const auto av = matvec(a, v);
    CHECK(av[0] == complex_t{1.0, 2.0});
    CHECK(av[1] == complex_t{3.0, 4.0});
    CHECK_THROWS_AS(matvec(a, std::vector<complex_t>(3)), DimensionError);
    CHECK_THROWS_AS(matmul(a, OperatorMatrix(3)), DimensionError);
}

TEST_CASE("hermitian eigenvalues match known spectra", "[linalg]") {
    SECTION("Pauli Y") {
        OperatorMatrix y(2, {0.0, complex_t{0.0, -1.0}, complex_t{0.0, 1.0}, 0.0}, true);
        const auto e = hermitian_eigenvalues(y);
        CHECK(e[0] == Approx(-1.0).margin(1e-14));
        CHECK(e[1] == Approx(1.0).margin(1e-14));
    }
    SECTION("trace and Frobenius norm are preserved") {
        SplitMix64 rng(3);
        for (std::size_t n : {3u, 7u, 16u}) {
            const auto m = random_hermitian(n, rng);
            const auto e = hermitian_eigenvalues(m);
            double tr = 0.0, fro = 0.0, esum = 0.0, esq = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                tr += m(j, j).real();
                for (std::size_t k = 0; k < n; ++k) {
                    fro += std::norm(m(j, k));
                }
                esum += e[j];
                esq += e[j] * e[j];
            }
            CHECK(esum == Approx(tr).margin(1e-11));
            CHECK(esq == Approx(fro).epsilon(1e-11));
        }
    }
}

TEST_CASE("spectral norm by power iteration", "[linalg]") {
    SplitMix64 rng(11);
    for (std::size_t n : {2u, 5u, 12u}) {
        const auto m = random_hermitian(n, rng);
        const auto e = hermitian_eigenvalues(m);
        const double expected = std::max(std::abs(e.front()), std::abs(e.back()));
        CHECK(spectral_norm(m) == Approx(expected).epsilon(1e-8));
    }
    CHECK(spectral_norm(OperatorMatrix(3)) == 0.0);
}

TEST_CASE("rank of projectors", "[linalg]") {
    for (std::size_t n = 2; n <= 12; ++n) {
        CHECK(hermitian_rank(projector_onto_s(n)) == n - 1);
        CHECK(hermitian_rank(OperatorMatrix::identity(n)) == n);
    }
}
