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

#include "qwalk/walk.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracle.h"
#include "qwalk/errors.h"

using namespace qwalk;

namespace {

constexpr double kPi = std::numbers::pi;
const double kRoot2 = std::sqrt(2.0);

WalkState random_state(std::mt19937_64 &rng, int lo, int hi) {
    std::normal_distribution<double> g;
    std::vector<CoinState> amps;
    double n = 0;
    for (int x = lo; x <= hi; ++x) {
        amps.push_back({{g(rng), g(rng)}, {g(rng), g(rng)}});
        n += amps.back().norm_sq();
    }
    for (auto &a : amps) a = a * (1.0 / std::sqrt(n));
    return WalkState(lo, amps);
}

double state_gap(const WalkState &a, const WalkState &b) {
    double g = 0;
    int lo = std::min(a.min_position(), b.min_position());
    int hi = std::max(a.max_position(), b.max_position());
    for (int x = lo; x <= hi; ++x) {
        g = std::max(g, std::abs(a.at(x).h - b.at(x).h));
        g = std::max(g, std::abs(a.at(x).v - b.at(x).v));
    }
    return g;
}

}  // namespace

TEST(coin_matrix, special_angles) {
    EXPECT_LE(max_abs_diff(coin_matrix(0), Mat2(1.0, 0.0, 0.0, -1.0)), 1e-15);
    EXPECT_LE(max_abs_diff(coin_matrix(kPi / 4), Mat2(0.0, 1.0, 1.0, 0.0)), 1e-15);
    double r = kRoot2 / 2;
    EXPECT_LE(max_abs_diff(coin_matrix(kPi / 8), Mat2(r, r, r, -r)), 1e-15);
}

TEST(coin_matrix, reflection_properties) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int k = 0; k < 100; ++k) {
        Mat2 c = coin_matrix(u(rng));
        EXPECT_LE(max_abs_diff(c * c, Mat2::identity()), 1e-12);
        EXPECT_TRUE(c.is_unitary(1e-12));
        EXPECT_TRUE(c.is_hermitian());
        EXPECT_NEAR(c.determinant().real(), -1.0, 1e-12);
    }
}

TEST(coin_op, rejects_non_unitary) {
    EXPECT_THROW(CoinOp(Mat2(1.0, 1.0, 0.0, 1.0)), NonUnitaryCoin);
    EXPECT_NO_THROW(CoinOp::from_angle(0.3));
}

TEST(apply_coins, hadamard_column) {
    WalkState s = apply_coins(WalkState::localized(0, CoinState::horizontal()), StepSpec().angle(0, kPi / 8));
    EXPECT_NEAR(s.at(0).h.real(), kRoot2 / 2, 1e-15);
    EXPECT_NEAR(s.at(0).v.real(), kRoot2 / 2, 1e-15);
}

TEST(apply_coins, swap_coin_on_vertical) {
    WalkState s = apply_coins(WalkState::localized(-1, CoinState::vertical()), StepSpec().angle(-1, kPi / 4));
    EXPECT_NEAR(std::abs(s.at(-1).h - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.at(-1).v), 0.0, 1e-15);
}

TEST(apply_coins, empty_step_is_identity) {
    std::mt19937_64 rng(5);
    WalkState s = random_state(rng, -2, 3);
    EXPECT_EQ(state_gap(apply_coins(s, StepSpec()), s), 0.0);
}

TEST(apply_coins, validation_errors) {
    WalkState s = WalkState::localized(0, CoinState::horizontal());
    EXPECT_THROW(apply_coins(s, StepSpec().custom(0, Mat2(2.0, 0.0, 0.0, 1.0))), NonUnitaryCoin);
    // Invalid coins are rejected even at sites the walker does not occupy.
    EXPECT_THROW(apply_coins(s, StepSpec().custom(5, Mat2(2.0, 0.0, 0.0, 1.0))), NonUnitaryCoin);
    EXPECT_THROW(apply_coins(s, StepSpec().angle(0, -0.1)), AngleOutOfRange);
    EXPECT_THROW(apply_coins(s, StepSpec().angle(0, kPi / 4 + 1e-6)), AngleOutOfRange);
    EXPECT_NO_THROW(apply_coins(s, StepSpec().angle(0, kPi / 4)));
    EXPECT_NO_THROW(apply_coins(s, StepSpec().angle(0, 0.0)));
}

TEST(shift, moves_h_right_and_v_left) {
    WalkState s = shift(WalkState::localized(0, CoinState::horizontal()));
    EXPECT_EQ(position_distribution(s), (Distribution{{1, 1.0}}));

    double r = kRoot2 / 2;
    WalkState t = shift(WalkState::localized(0, {r, r}));
    EXPECT_NEAR(t.at(1).h.real(), r, 1e-15);
    EXPECT_NEAR(t.at(-1).v.real(), r, 1e-15);
    EXPECT_EQ(t.at(0).norm_sq(), 0.0);
}

TEST(shift, first_usd_step_state) {
    double phi = 0.9;
    WalkState s = shift(WalkState::localized(0, {std::cos(phi / 2), std::sin(phi / 2)}));
    EXPECT_NEAR(s.at(1).h.real(), std::cos(phi / 2), 1e-15);
    EXPECT_NEAR(s.at(-1).v.real(), std::sin(phi / 2), 1e-15);
    EXPECT_EQ(std::abs(s.at(1).v), 0.0);
    EXPECT_EQ(std::abs(s.at(-1).h), 0.0);
}

TEST(shift, unshift_inverts) {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 20; ++k) {
        WalkState s = random_state(rng, -3, 4);
        EXPECT_LE(state_gap(unshift(shift(s)), s), 1e-15);
        EXPECT_LE(state_gap(shift(unshift(s)), s), 1e-15);
    }
}

TEST(run, rejects_empty_protocol) { EXPECT_THROW(Protocol({}), DomainError); }

TEST(run, single_identity_step_is_a_shift) {
    std::mt19937_64 rng(9);
    WalkState s = random_state(rng, -1, 2);
    EXPECT_EQ(state_gap(run(s, Protocol({StepSpec()})), shift(s)), 0.0);
}

TEST(run, ballistic_h_walker) {
    Protocol p({StepSpec(), StepSpec(), StepSpec()});
    EXPECT_EQ(position_distribution(run(WalkState::localized(0, CoinState::horizontal()), p)),
              (Distribution{{3, 1.0}}));
}

TEST(walk_properties, unitarity_and_inner_products) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        WalkState a = random_state(rng, -3, 3);
        WalkState b = random_state(rng, -3, 3);
        StepSpec spec = oracle::random_step(rng, 4);
        WalkState a2 = apply_step(a, spec);
        WalkState b2 = apply_step(b, spec);
        EXPECT_NEAR(a2.norm_sq(), 1.0, 1e-12);
        EXPECT_LE(std::abs(inner(a2, b2) - inner(a, b)), 1e-10);
    }
}

TEST(walk_properties, locality_and_parity) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + trial % 6;
        Protocol p = oracle::random_protocol(rng, n);
        WalkState s = run(WalkState::localized(0, random_state(rng, 0, 0).at(0)), p);
        for (const auto &[x, prob] : position_distribution(s)) {
            EXPECT_LE(std::abs(x), n);
            EXPECT_EQ((x - n) % 2, 0) << "x=" << x << " n=" << n;
        }
        EXPECT_NEAR(s.norm_sq(), 1.0, 1e-12);
    }
}

TEST(position_distribution, prunes_tiny_weights_only) {
    WalkState s(0, {{1.0, 0.0}, {1e-8, 0.0}, {4e-8, 0.0}});
    Distribution d = position_distribution(s);
    EXPECT_FALSE(d.contains(1));  // 1e-16
    EXPECT_TRUE(d.contains(2));   // 1.6e-15
    EXPECT_GT(s.at(1).norm_sq(), 0.0);
}

TEST(coin_state_at, zero_weight) {
    WalkState s = shift(WalkState::localized(0, CoinState::horizontal()));
    EXPECT_THROW(coin_state_at(s, 0), ZeroWeight);
    EXPECT_THROW(coin_state_at(s, 7), ZeroWeight);
    auto c = coin_state_at(s, 1);
    EXPECT_EQ(c.weight, 1.0);
    EXPECT_EQ(c.coin, CoinState::horizontal());
}
