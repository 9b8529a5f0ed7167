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

// Unambiguous discrimination of the pair {|0>, alpha|0> + beta|1>} with a
// three-step position-dependent-coin walk. The pair is encoded in the coin as
// psi_{+/-} = cos(phi/2)|H> +/- sin(phi/2)|V> with cos(phi) = alpha; the
// walker ends at x=+1 only for psi_+, at x=-1 only for psi_-, and at x=+3
// for an inconclusive result.

#ifndef QWALK_USD_H
#define QWALK_USD_H

#include <array>
#include <string_view>

#include "qwalk/walk.h"

namespace qwalk {

/// Overlap parameterization of the state pair. alpha in [0, 1).
class UsdParams {
  public:
    /// Throws DomainError unless alpha in [0, 1).
    static UsdParams from_alpha(double alpha);
    /// phi in (0, pi/2]; alpha = cos(phi).
    static UsdParams from_phi(double phi);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double phi() const { return phi_; }

  private:
    UsdParams(double alpha, double phi);
    double alpha_;
    double beta_;
    double phi_;
};

enum class Sign { Plus, Minus };

std::string_view to_string(Sign s);

/// psi_+ or psi_-.
CoinState prepare_coin(const UsdParams &params, Sign sign);

/// Normalized a psi_+ + b psi_-. Throws DegenerateSuperposition when the
/// unnormalized squared norm a^2 + b^2 + 2ab cos(phi) is <= 1e-12.
CoinState prepare_superposition(const UsdParams &params, double a, double b);

/// Half-wave-plate angle of the x=1 coin on step two:
/// (1/2) arccos sqrt(1 - tan^2(phi/2)), evaluated from alpha = cos(phi).
double conditional_coin_angle(double alpha);

struct UsdAngles {
    double theta_m1_2;  // x=-1, step 2: always pi/4
    double theta_1_2;   // x=+1, step 2: depends on phi
    double theta_0_3;   // x=0, step 3: always pi/8
};

struct UsdProtocol {
    UsdParams params;
    UsdAngles angles;
    Protocol protocol;
};

UsdProtocol compile(const UsdParams &params);

enum class OutcomeKind { ConclusivePlus, ConclusiveMinus, Inconclusive };

inline constexpr std::array<OutcomeKind, 3> kOutcomeKinds = {
    OutcomeKind::ConclusivePlus, OutcomeKind::ConclusiveMinus, OutcomeKind::Inconclusive};

int outcome_position(OutcomeKind k);
std::string_view to_string(OutcomeKind k);

struct Outcome {
    OutcomeKind kind;
    int position;
    double probability;
};

/// Probability left outside x in {-1, 1, 3} above which discriminate throws.
inline constexpr double kLeakageTolerance = 1e-9;

/// Runs |x=0> (x) coin0 through the compiled walk and reports the three
/// outcomes in kOutcomeKinds order. coin0 is normalized first. Throws
/// LeakageError if probability elsewhere exceeds kLeakageTolerance.
std::array<Outcome, 3> discriminate(const UsdProtocol &usd, const CoinState &coin0);
std::array<Outcome, 3> discriminate(const UsdParams &params, const CoinState &coin0);

/// eta = 2 sin^2(phi/2) = 1 - alpha.
double success_probability(const UsdParams &params);

}  // namespace qwalk

#endif
