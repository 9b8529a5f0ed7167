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

#ifndef QWALK_WALK_H
#define QWALK_WALK_H

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "qwalk/linalg.h"

namespace qwalk {

/// The half-wave-plate coin [[cos 2t, sin 2t], [sin 2t, -cos 2t]].
/// A real reflection: symmetric, unitary, involutory, determinant -1.
/// Any finite angle is accepted; the [0, pi/4] range is enforced by StepSpec.
Mat2 coin_matrix(double theta);

/// Unit-modulus coin operator. Construction fails with NonUnitaryCoin unless
/// m^dagger m = 1 within kUnitaryTolerance.
class CoinOp {
  public:
    explicit CoinOp(const Mat2 &m);
    static CoinOp from_angle(double theta) { return CoinOp(coin_matrix(theta)); }

    const Mat2 &matrix() const { return m_; }

  private:
    Mat2 m_;
};

struct IdentityCoin {
    bool operator==(const IdentityCoin &) const = default;
};
struct AngleCoin {
    double theta;  // radians
    bool operator==(const AngleCoin &) const = default;
};
/// Unvalidated custom matrix; checked for unitarity when applied.
struct CustomCoin {
    Mat2 m;
    bool operator==(const CustomCoin &) const = default;
};
using CoinAction = std::variant<IdentityCoin, AngleCoin, CustomCoin>;

/// Position -> coin action for a single step. Unlisted positions get the
/// identity.
class StepSpec {
  public:
    StepSpec() = default;

    StepSpec &set(int x, CoinAction action);
    StepSpec &angle(int x, double theta) { return set(x, AngleCoin{theta}); }
    StepSpec &custom(int x, const Mat2 &m) { return set(x, CustomCoin{m}); }

    const std::map<int, CoinAction> &coins() const { return coins_; }
    bool is_identity() const;

    /// Matrix to apply at x, or nullopt for an identity coin. Throws
    /// AngleOutOfRange or NonUnitaryCoin when the stored action is invalid.
    std::optional<Mat2> matrix_at(int x) const;

    /// Checks every stored action; same errors as matrix_at.
    void validate() const;

    bool operator==(const StepSpec &) const = default;

  private:
    std::map<int, CoinAction> coins_;
};

/// Ordered non-empty list of steps.
class Protocol {
  public:
    explicit Protocol(std::vector<StepSpec> steps);

    const std::vector<StepSpec> &steps() const { return steps_; }
    size_t size() const { return steps_.size(); }
    const StepSpec &operator[](size_t n) const { return steps_[n]; }

  private:
    std::vector<StepSpec> steps_;
};

/// Walker-plus-coin wavefunction on the integer line. Amplitudes are stored
/// densely; index k holds position offset() + k.
class WalkState {
  public:
    WalkState(int offset, std::vector<CoinState> amps);
    /// |x> (x) coin
    static WalkState localized(int x, const CoinState &coin);

    int offset() const { return offset_; }
    int min_position() const { return offset_; }
    int max_position() const { return offset_ + static_cast<int>(amps_.size()) - 1; }
    const std::vector<CoinState> &amplitudes() const { return amps_; }

    /// Zero outside the stored window.
    CoinState at(int x) const;
    double norm_sq() const;

  private:
    int offset_;
    std::vector<CoinState> amps_;
};

/// <a|b> over the full walker-plus-coin space.
Complex inner(const WalkState &a, const WalkState &b);

/// Left-multiplies each site's coin vector by that site's coin.
WalkState apply_coins(const WalkState &state, const StepSpec &spec);
/// Conditional shift: |H> amplitude moves to x+1, |V> to x-1.
WalkState shift(const WalkState &state);
/// Inverse of shift: |H> moves to x-1, |V> to x+1.
WalkState unshift(const WalkState &state);
WalkState apply_step(const WalkState &state, const StepSpec &spec);
WalkState run(const WalkState &state, const Protocol &protocol);

using Distribution = std::map<int, double>;

/// Amplitudes below this probability are dropped from position_distribution.
inline constexpr double kPruneThreshold = 1e-15;

/// P(x) = |aH(x)|^2 + |aV(x)|^2, pruned at kPruneThreshold.
Distribution position_distribution(const WalkState &state);

struct ConditionalCoin {
    CoinState coin;  // normalized
    double weight;   // P(x)
};

/// Normalized coin state found at x. Throws ZeroWeight if P(x) <= 1e-15.
ConditionalCoin coin_state_at(const WalkState &state, int x);

}  // namespace qwalk

#endif
