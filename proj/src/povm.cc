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

#include "qwalk/povm.h"

#include <algorithm>
#include <cmath>

namespace qwalk {

namespace {

WalkState apply_coins_adjoint(const WalkState &state, const StepSpec &spec) {
    std::vector<CoinState> amps = state.amplitudes();
    for (const auto &[x, action] : spec.coins()) {
        auto m = spec.matrix_at(x);
        if (m && x >= state.min_position() && x <= state.max_position()) {
            auto &slot = amps[static_cast<size_t>(x - state.offset())];
            slot = m->adjoint() * slot;
        }
    }
    return WalkState(state.offset(), std::move(amps));
}

}  // namespace

KrausOp kraus_from_walk(const Protocol &protocol, int i) {
    CoinState col_h = run(WalkState::localized(0, CoinState::horizontal()), protocol).at(i);
    CoinState col_v = run(WalkState::localized(0, CoinState::vertical()), protocol).at(i);
    return {Mat2::from_columns(col_h, col_v), i};
}

std::vector<KrausOp> kraus_operators(const Protocol &protocol) {
    WalkState from_h = run(WalkState::localized(0, CoinState::horizontal()), protocol);
    WalkState from_v = run(WalkState::localized(0, CoinState::vertical()), protocol);
    int n = static_cast<int>(protocol.size());
    std::vector<KrausOp> out;
    for (int x = -n; x <= n; ++x) {
        Mat2 m = Mat2::from_columns(from_h.at(x), from_v.at(x));
        if (m.max_abs() > 0.0) {
            out.push_back({m, x});
        }
    }
    return out;
}

PovmElement povm_element(const KrausOp &k) { return {k.m.adjoint() * k.m, k.outcome_position}; }

PovmElement reversed_walk_element(const Protocol &protocol, int i, const CoinState &psi_i) {
    WalkState s = WalkState::localized(i, psi_i.normalized());
    for (auto step = protocol.steps().rbegin(); step != protocol.steps().rend(); ++step) {
        s = apply_coins_adjoint(unshift(s), *step);
    }
    CoinState tilde = s.at(0);
    return {Mat2::outer(tilde, tilde), i};
}

UsdPovm closed_form_usd_elements(const UsdParams &params) {
    double half = params.phi() / 2;
    double s = std::sin(half);
    double c = std::cos(half);
    double scale = 1.0 / (2 * c * c);
    CoinState plus_dir{s, c};
    CoinState minus_dir{-s, c};
    double t = std::tan(half);
    double inconclusive = std::max(0.0, 1.0 - t * t);
    return {
        Mat2::outer(plus_dir, plus_dir) * scale,
        Mat2::outer(minus_dir, minus_dir) * scale,
        Mat2{inconclusive, 0.0, 0.0, 0.0},
    };
}

UsdPovm walk_usd_elements(const UsdProtocol &usd) {
    auto element = [&](int x) { return povm_element(kraus_from_walk(usd.protocol, x)).e; };
    return {element(1), element(-1), element(3)};
}

CompletenessReport verify_completeness(std::span<const PovmElement> elements) {
    Mat2 sum = Mat2::zero();
    CompletenessReport report{0.0, {}, true};
    for (const auto &el : elements) {
        sum = sum + el.e;
        double low = hermitian_eigenvalues(el.e).low;
        report.min_eigenvalues.push_back(low);
        if (!(low >= -kPsdTolerance) || !el.e.is_hermitian(kTolerance)) {
            report.pass = false;
        }
    }
    report.deviation = max_abs_diff(sum, Mat2::identity());
    if (!(report.deviation <= kCompletenessTolerance)) {
        report.pass = false;
    }
    return report;
}

double expectation(const Mat2 &e, const CoinState &c) { return inner(c, e * c).real(); }

}  // namespace qwalk
