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

#ifndef QWALK_EXPERIMENT_H
#define QWALK_EXPERIMENT_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qwalk/reference_data.h"
#include "qwalk/usd.h"
#include "qwalk/walk.h"

namespace qwalk {

/// Identifier of the sampling algorithm recorded in every CountRecord.
/// std::mt19937_64 seeded with the raw seed; each shot draws one 64-bit word,
/// keeps the top 53 bits as a uniform double in [0, 1) and inverts the
/// cumulative distribution over positions in ascending order.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/u53-inverse-cdf/v1";

struct CountRecord {
    std::int64_t shots = 0;
    std::map<int, std::int64_t> counts;  // every position of the input distribution
    Distribution probs_hat;              // counts / shots
    std::uint64_t seed = 0;
    std::string rng_algorithm;
};

/// Tolerance on sum(p) - 1 for distributions fed to sampling and distances.
inline constexpr double kDistributionTolerance = 1e-9;

/// Throws BadDistribution on negative/non-finite entries or a sum off by more
/// than kDistributionTolerance.
void validate_distribution(const Distribution &dist);

/// Multinomial draw of `shots` outcomes. Same inputs give the same counts.
CountRecord sample_counts(const Distribution &dist, std::int64_t shots, std::uint64_t seed);

/// sqrt(p (1 - p) / shots).
double binomial_uncertainty(double p_hat, std::int64_t shots);

struct DistanceReport {
    double d = 0.0;
    std::map<int, double> per_position_gap;  // P_exp(x) - P_th(x) on the union of supports
};

/// d = (1/2) sum_x |P_exp(x) - P_th(x)|.
DistanceReport l1_distance(const Distribution &p_exp, const Distribution &p_th);

/// |<target|coin at x>|^2. Throws ZeroWeight if P(x) <= 1e-15.
double coin_fidelity(const WalkState &state, int x, const CoinState &target);

/// Splits one user seed into independent per-item seeds (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct Table1Row {
    reference::Table1Entry reference;
    double alpha_exact;            // cos(phi)
    UsdAngles angles;              // compiled from the printed phi
    double theta_1_2_from_alpha;   // compiled from the printed (rounded) alpha
    double theta_1_2_gap_arcmin;   // |compiled - printed|, from phi
    Distribution theory;
    double eta_theory;             // 1 - alpha_exact
    CountRecord sampled;
    double eta_sampled;
    double eta_sampled_uncertainty;
    double d_sampled;
    bool measured_within_3sigma;   // |eta_measured - eta_theory| <= 3 * printed uncertainty
};

/// One row per published Table I entry, each sampled with
/// derive_seed(seed, row index).
std::vector<Table1Row> table1_report(std::int64_t shots, std::uint64_t seed);

struct Fig2dReport {
    UsdParams params;
    CoinState input;
    Distribution theory;
    CountRecord sampled;
    DistanceReport distance;
    double symmetry_gap;  // |P_hat(1) - P_hat(-1)|
};

/// Superposition psi_+ + psi_- (that is, |H>) at phi = 45 degrees.
Fig2dReport fig2d_report(std::int64_t shots, std::uint64_t seed);

}  // namespace qwalk

#endif
