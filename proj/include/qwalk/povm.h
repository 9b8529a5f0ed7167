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

#ifndef QWALK_POVM_H
#define QWALK_POVM_H

#include <span>
#include <vector>

#include "qwalk/usd.h"
#include "qwalk/walk.h"

namespace qwalk {

/// K_i = <i| U |0>, the coin-space operator induced by finding the walker at
/// outcome_position after the walk starts at x=0.
struct KrausOp {
    Mat2 m;
    int outcome_position;
};

/// E_i = K_i^dagger K_i.
struct PovmElement {
    Mat2 e;
    int outcome_position;
};

/// Column c of the result is the coin amplitude at x=i after running
/// |0> (x) |c>, c in {H, V}. Unreachable positions give the zero matrix.
KrausOp kraus_from_walk(const Protocol &protocol, int i);

/// Kraus operators for every position in [-n, n] with a nonzero column.
std::vector<KrausOp> kraus_operators(const Protocol &protocol);

PovmElement povm_element(const KrausOp &k);

/// Backward construction: apply the inverse walk, one step at a time as
/// coin^dagger after inverse shift, to |i> (x) |psi_i>, project the walker on
/// <x=0|, and take the outer product of the resulting coin vector with
/// itself. Equals K_i^dagger |psi_i><psi_i| K_i for normalized psi_i, which
/// is E_i whenever psi_i spans the range of a rank-one K_i (for the USD walk:
/// |H> at x=+1, |V> at x=-1).
PovmElement reversed_walk_element(const Protocol &protocol, int i, const CoinState &psi_i);

struct UsdPovm {
    Mat2 plus;
    Mat2 minus;
    Mat2 inconclusive;
};

/// E_+/- = (1 / (2 cos^2(phi/2))) (+/-sin(phi/2)|H> + cos(phi/2)|V>)(h.c.),
/// E_? = 1 - E_+ - E_- = (1 - tan^2(phi/2)) |H><H|.
UsdPovm closed_form_usd_elements(const UsdParams &params);

/// Walk-extracted USD elements at x = +1, -1, +3.
UsdPovm walk_usd_elements(const UsdProtocol &usd);

struct CompletenessReport {
    double deviation;                  // max |(sum E_i - 1)_{rc}|
    std::vector<double> min_eigenvalues;
    bool pass;
};

inline constexpr double kCompletenessTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-12;

CompletenessReport verify_completeness(std::span<const PovmElement> elements);

/// <c|E|c>, real part.
double expectation(const Mat2 &e, const CoinState &c);

}  // namespace qwalk

#endif
