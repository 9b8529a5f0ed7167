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

#include "qwalk/experiment.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qwalk/angles.h"
#include "qwalk/errors.h"

namespace qwalk {

void validate_distribution(const Distribution &dist) {
    if (dist.empty()) {
        throw BadDistribution("empty distribution");
    }
    double total = 0.0;
    for (const auto &[x, p] : dist) {
        if (!std::isfinite(p) || p < 0.0) {
            throw BadDistribution("probability at x=" + std::to_string(x) + " is " + std::to_string(p));
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kDistributionTolerance) {
        throw BadDistribution("probabilities sum to " + std::to_string(total));
    }
}

CountRecord sample_counts(const Distribution &dist, std::int64_t shots, std::uint64_t seed) {
    validate_distribution(dist);
    if (shots < 1) {
        throw DomainError("shots must be >= 1");
    }
    std::vector<int> positions;
    std::vector<double> cumulative;
    double acc = 0.0;
    for (const auto &[x, p] : dist) {
        acc += p;
        positions.push_back(x);
        cumulative.push_back(acc);
    }
    std::vector<std::int64_t> bins(positions.size(), 0);
    std::mt19937_64 gen(seed);
    for (std::int64_t s = 0; s < shots; ++s) {
        double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        size_t k = std::min(static_cast<size_t>(it - cumulative.begin()), bins.size() - 1);
        ++bins[k];
    }
    CountRecord rec;
    rec.shots = shots;
    rec.seed = seed;
    rec.rng_algorithm = std::string(kRngAlgorithm);
    for (size_t k = 0; k < positions.size(); ++k) {
        rec.counts[positions[k]] = bins[k];
        rec.probs_hat[positions[k]] = static_cast<double>(bins[k]) / static_cast<double>(shots);
    }
    return rec;
}

double binomial_uncertainty(double p_hat, std::int64_t shots) {
    return std::sqrt(std::max(0.0, p_hat * (1.0 - p_hat)) / static_cast<double>(shots));
}

DistanceReport l1_distance(const Distribution &p_exp, const Distribution &p_th) {
    validate_distribution(p_exp);
    validate_distribution(p_th);
    DistanceReport r;
    for (const auto &[x, p] : p_exp) {
        r.per_position_gap[x] = p;
    }
    for (const auto &[x, p] : p_th) {
        r.per_position_gap[x] -= p;
    }
    double total = 0.0;
    for (const auto &[x, gap] : r.per_position_gap) {
        total += std::abs(gap);
    }
    r.d = std::clamp(0.5 * total, 0.0, 1.0);
    return r;
}

double coin_fidelity(const WalkState &state, int x, const CoinState &target) {
    return std::clamp(fidelity(target.normalized(), coin_state_at(state, x).coin), 0.0, 1.0);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<Table1Row> table1_report(std::int64_t shots, std::uint64_t seed) {
    std::vector<Table1Row> rows;
    for (size_t k = 0; k < reference::kTable1.size(); ++k) {
        const auto &ref = reference::kTable1[k];
        UsdParams params = UsdParams::from_phi(deg_to_rad(ref.phi_deg));
        UsdProtocol usd = compile(params);
        WalkState final_state = run(WalkState::localized(0, prepare_coin(params, ref.input)), usd.protocol);
        Distribution theory = position_distribution(final_state);
        CountRecord sampled = sample_counts(theory, shots, derive_seed(seed, k));

        int conclusive = ref.input == Sign::Plus ? 1 : -1;
        double eta_theory = success_probability(params);
        double eta_hat = sampled.probs_hat.contains(conclusive) ? sampled.probs_hat.at(conclusive) : 0.0;

        rows.push_back(Table1Row{
            .reference = ref,
            .alpha_exact = params.alpha(),
            .angles = usd.angles,
            .theta_1_2_from_alpha = compile(UsdParams::from_alpha(ref.alpha)).angles.theta_1_2,
            .theta_1_2_gap_arcmin = arcminute_gap(usd.angles.theta_1_2, ref.theta_1_2.to_radians()),
            .theory = theory,
            .eta_theory = eta_theory,
            .sampled = sampled,
            .eta_sampled = eta_hat,
            .eta_sampled_uncertainty = binomial_uncertainty(eta_hat, shots),
            .d_sampled = l1_distance(sampled.probs_hat, theory).d,
            .measured_within_3sigma = std::abs(ref.eta.value - eta_theory) <= 3 * ref.eta.uncertainty,
        });
    }
    return rows;
}

Fig2dReport fig2d_report(std::int64_t shots, std::uint64_t seed) {
    UsdParams params = UsdParams::from_phi(deg_to_rad(reference::kFig2dPhiDeg));
    CoinState input = prepare_superposition(params, 1.0, 1.0);
    Distribution theory = position_distribution(run(WalkState::localized(0, input), compile(params).protocol));
    CountRecord sampled = sample_counts(theory, shots, seed);
    auto hat = [&](int x) { return sampled.probs_hat.contains(x) ? sampled.probs_hat.at(x) : 0.0; };
    return {params, input, theory, sampled, l1_distance(sampled.probs_hat, theory), std::abs(hat(1) - hat(-1))};
}

}  // namespace qwalk
