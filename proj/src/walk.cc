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

#include "qwalk/errors.h"

namespace qwalk {

namespace {

// Slack on the closed interval [0, pi/4] for angles that went through a
// degree conversion.
constexpr double kAngleSlack = 1e-12;

Mat2 checked_matrix(int x, const CoinAction &action) {
    if (const auto *a = std::get_if<AngleCoin>(&action)) {
        if (!std::isfinite(a->theta) || a->theta < -kAngleSlack || a->theta > std::numbers::pi / 4 + kAngleSlack) {
            throw AngleOutOfRange("coin angle at x=" + std::to_string(x) + " is " + std::to_string(a->theta) +
                                  " rad, outside [0, pi/4]");
        }
        return coin_matrix(a->theta);
    }
    const auto &c = std::get<CustomCoin>(action);
    if (!c.m.is_unitary(kUnitaryTolerance)) {
        throw NonUnitaryCoin("custom coin at x=" + std::to_string(x) + " is not unitary");
    }
    return c.m;
}

}  // namespace

Mat2 coin_matrix(double theta) {
    double c = std::cos(2 * theta);
    double s = std::sin(2 * theta);
    return {c, s, s, -c};
}

CoinOp::CoinOp(const Mat2 &m) : m_(m) {
    if (!m.is_unitary(kUnitaryTolerance)) {
        throw NonUnitaryCoin("coin matrix is not unitary: " + to_string(m));
    }
}

StepSpec &StepSpec::set(int x, CoinAction action) {
    if (std::holds_alternative<IdentityCoin>(action)) {
        coins_.erase(x);
    } else {
        coins_.insert_or_assign(x, std::move(action));
    }
    return *this;
}

bool StepSpec::is_identity() const { return coins_.empty(); }

std::optional<Mat2> StepSpec::matrix_at(int x) const {
    auto it = coins_.find(x);
    if (it == coins_.end()) {
        return std::nullopt;
    }
    return checked_matrix(x, it->second);
}

void StepSpec::validate() const {
    for (const auto &[x, action] : coins_) {
        checked_matrix(x, action);
    }
}

Protocol::Protocol(std::vector<StepSpec> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) {
        throw DomainError("a protocol needs at least one step");
    }
}

WalkState::WalkState(int offset, std::vector<CoinState> amps) : offset_(offset), amps_(std::move(amps)) {
    if (amps_.empty()) {
        amps_.emplace_back();
    }
}

WalkState WalkState::localized(int x, const CoinState &coin) { return WalkState(x, {coin}); }

CoinState WalkState::at(int x) const {
    if (x < min_position() || x > max_position()) {
        return {};
    }
    return amps_[static_cast<size_t>(x - offset_)];
}

double WalkState::norm_sq() const {
    double n = 0.0;
    for (const auto &a : amps_) {
        n += a.norm_sq();
    }
    return n;
}

Complex inner(const WalkState &a, const WalkState &b) {
    Complex r{};
    int lo = std::max(a.min_position(), b.min_position());
    int hi = std::min(a.max_position(), b.max_position());
    for (int x = lo; x <= hi; ++x) {
        r += inner(a.at(x), b.at(x));
    }
    return r;
}

WalkState apply_coins(const WalkState &state, const StepSpec &spec) {
    std::vector<CoinState> amps = state.amplitudes();
    for (const auto &[x, action] : spec.coins()) {
        Mat2 m = checked_matrix(x, action);
        if (x >= state.min_position() && x <= state.max_position()) {
            auto &slot = amps[static_cast<size_t>(x - state.offset())];
            slot = m * slot;
        }
    }
    return WalkState(state.offset(), std::move(amps));
}

WalkState shift(const WalkState &state) {
    const auto &in = state.amplitudes();
    std::vector<CoinState> out(in.size() + 2);
    for (size_t k = 0; k < in.size(); ++k) {
        out[k + 2].h = in[k].h;
        out[k].v = in[k].v;
    }
    return WalkState(state.offset() - 1, std::move(out));
}

WalkState unshift(const WalkState &state) {
    const auto &in = state.amplitudes();
    std::vector<CoinState> out(in.size() + 2);
    for (size_t k = 0; k < in.size(); ++k) {
        out[k].h = in[k].h;
        out[k + 2].v = in[k].v;
    }
    return WalkState(state.offset() - 1, std::move(out));
}

WalkState apply_step(const WalkState &state, const StepSpec &spec) { return shift(apply_coins(state, spec)); }

WalkState run(const WalkState &state, const Protocol &protocol) {
    WalkState s = state;
    for (const auto &step : protocol.steps()) {
        s = apply_step(s, step);
    }
    return s;
}

Distribution position_distribution(const WalkState &state) {
    Distribution d;
    for (int x = state.min_position(); x <= state.max_position(); ++x) {
        double p = state.at(x).norm_sq();
        if (p >= kPruneThreshold) {
            d[x] = p;
        }
    }
    return d;
}

ConditionalCoin coin_state_at(const WalkState &state, int x) {
    CoinState c = state.at(x);
    double w = c.norm_sq();
    if (w <= kPruneThreshold) {
        throw ZeroWeight("no walker amplitude at x=" + std::to_string(x));
    }
    return {c.normalized(), w};
}

}  // namespace qwalk
