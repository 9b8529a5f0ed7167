// Copyright 2026 The qwalk Authors
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

#include "qwalk/linalg.h"

#include <random>

#include "gtest/gtest.h"

using namespace qwalk;

TEST(linalg, products_and_adjoint) {
    Mat2 a({1, 2}, {0, -1}, 3.0, {0.5, 0.5});
    Mat2 b = a.adjoint();
    EXPECT_EQ(b(0, 1), Complex(3.0, 0.0));
    EXPECT_EQ(b(1, 0), Complex(0, 1));
    EXPECT_EQ(a * Mat2::identity(), a);
    CoinState h = CoinState::horizontal();
    EXPECT_EQ(a * h, a.column(0));
}

TEST(linalg, outer_and_inner) {
    CoinState u{{0, 1}, 2.0};
    Mat2 p = Mat2::outer(u, u);
    EXPECT_TRUE(p.is_hermitian());
    EXPECT_NEAR(p.trace().real(), u.norm_sq(), 1e-15);
    EXPECT_NEAR(std::abs(inner(u, u) - Complex(u.norm_sq())), 0.0, 1e-15);
}

TEST(linalg, normalize_rejects_zero) {
    EXPECT_THROW(CoinState{}.normalized(), std::invalid_argument);
    EXPECT_NEAR((CoinState{3.0, 4.0}.normalized().norm_sq()), 1.0, 1e-15);
}

TEST(linalg, hermitian_eigenvalues_match_trace_and_determinant) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    for (int k = 0; k < 200; ++k) {
        double a = g(rng), d = g(rng);
        Complex b(g(rng), g(rng));
        Mat2 m(a, b, std::conj(b), d);
        auto ev = hermitian_eigenvalues(m);
        EXPECT_LE(ev.low, ev.high);
        EXPECT_NEAR(ev.low + ev.high, a + d, 1e-12);
        EXPECT_NEAR(ev.low * ev.high, m.determinant().real(), 1e-11);
    }
    auto diag = hermitian_eigenvalues(Mat2(0.25, 0.0, 0.0, -2.0));
    EXPECT_EQ(diag.low, -2.0);
    EXPECT_EQ(diag.high, 0.25);
}

TEST(linalg, unitarity_check) {
    EXPECT_TRUE(Mat2::identity().is_unitary());
    EXPECT_FALSE(Mat2(1.0, 0.0, 0.0, 1.0 + 1e-9).is_unitary());
    EXPECT_TRUE(Mat2(1.0, 0.0, 0.0, 1.0 + 1e-12).is_unitary());
    EXPECT_FALSE(Mat2(std::nan(""), 0.0, 0.0, 1.0).is_unitary());
}
