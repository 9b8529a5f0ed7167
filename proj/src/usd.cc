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

#include "qwalk/usd.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/errors.h"

namespace qwalk {

UsdParams::UsdParams(double alpha, double phi)
    : alpha_(alpha), beta_(std::sqrt(1.0 - alpha * alpha)), phi_(phi) {}

UsdParams UsdParams::from_alpha(double alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha >= 1.0) {
        throw DomainError("alpha must lie in [0, 1), got " + std::to_string(alpha));
    }
    return UsdParams(alpha, std::acos(alpha));
}

UsdParams UsdParams::from_phi(double phi) {
    if (!std::isfinite(phi) || phi <= 0.0 || phi > std::numbers::pi / 2) {
        throw DomainError("phi must lie in (0, pi/2], got " + std::to_string(phi));
    }
    // cos(pi/2) evaluates to 6e-17; the orthogonal pair is alpha = 0 exactly.
    double alpha = phi == std::numbers::pi / 2 ? 0.0 : std::cos(phi);
    return UsdParams(alpha, phi);
}

std::string_view to_string(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

CoinState prepare_coin(const UsdParams &params, Sign sign) {
    double half = params.phi() / 2;
    double s = sign == Sign::Plus ? 1.0 : -1.0;
    return {std::cos(half), s * std::sin(half)};
}

CoinState prepare_superposition(const UsdParams &params, double a, double b) {
    double norm_sq = a * a + b * b + 2 * a * b * params.alpha();
    if (!std::isfinite(norm_sq) || norm_sq <= 1e-12) {
        throw DegenerateSuperposition("a psi_+ + b psi_- has vanishing norm");
    }
    CoinState plus = prepare_coin(params, Sign::Plus);
    CoinState minus = prepare_coin(params, Sign::Minus);
    return (plus * a + minus * b) * (1.0 / std::sqrt(norm_sq));
}

double conditional_coin_angle(double alpha) {
    // 1 - tan^2(phi/2) = 2 alpha / (1 + alpha); this form stays exact at alpha = 0.
    double arg = std::sqrt(std::clamp(2 * alpha / (1 + alpha), 0.0, 1.0));
    return 0.5 * std::acos(arg);
}

UsdProtocol compile(const UsdParams &params) {
    UsdAngles angles{std::numbers::pi / 4, conditional_coin_angle(params.alpha()), std::numbers::pi / 8};
    StepSpec step1;
    StepSpec step2;
    step2.angle(-1, angles.theta_m1_2).angle(1, angles.theta_1_2);
    StepSpec step3;
    step3.angle(0, angles.theta_0_3);
    return {params, angles, Protocol({step1, step2, step3})};
}

int outcome_position(OutcomeKind k) {
    switch (k) {
    case OutcomeKind::ConclusivePlus:
        return 1;
    case OutcomeKind::ConclusiveMinus:
        return -1;
    case OutcomeKind::Inconclusive:
        return 3;
    }
    return 0;
}

std::string_view to_string(OutcomeKind k) {
    switch (k) {
    case OutcomeKind::ConclusivePlus:
        return "conclusive_plus";
    case OutcomeKind::ConclusiveMinus:
        return "conclusive_minus";
    case OutcomeKind::Inconclusive:
        return "inconclusive";
    }
    return "";
}

std::array<Outcome, 3> discriminate(const UsdProtocol &usd, const CoinState &coin0) {
    WalkState final_state = run(WalkState::localized(0, coin0.normalized()), usd.protocol);
    std::array<Outcome, 3> out{};
    double captured = 0.0;
    for (size_t k = 0; k < kOutcomeKinds.size(); ++k) {
        int x = outcome_position(kOutcomeKinds[k]);
        double p = final_state.at(x).norm_sq();
        out[k] = {kOutcomeKinds[k], x, p};
        captured += p;
    }
    double leaked = std::max(0.0, final_state.norm_sq() - captured);
    if (leaked > kLeakageTolerance) {
        throw LeakageError("probability " + std::to_string(leaked) + " outside positions {-1, 1, 3}");
    }
    return out;
}

std::array<Outcome, 3> discriminate(const UsdParams &params, const CoinState &coin0) {
    return discriminate(compile(params), coin0);
}

double success_probability(const UsdParams &params) { return 1.0 - params.alpha(); }

}  // namespace qwalk
