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

// Published photonic-experiment values for the three-step discrimination
// walk. Used for side-by-side comparison only; nothing asserts equality
// against the measured numbers, since the apparatus imperfections behind
// them are not modeled.

#ifndef QWALK_REFERENCE_DATA_H
#define QWALK_REFERENCE_DATA_H

#include <array>
#include <string_view>

#include "qwalk/angles.h"
#include "qwalk/usd.h"

namespace qwalk::reference {

struct Measured {
    double value;
    double uncertainty;
};

struct Table1Entry {
    double alpha;  // as printed, three decimals
    int phi_deg;
    Sign input;
    Dms theta_m1_2;
    Dms theta_1_2;
    Dms theta_0_3;
    Measured eta;
    Measured d;
};

inline constexpr std::string_view kProvenance = "photonic three-step walk experiment, Table I";

inline constexpr Dms dm(int deg, int min) { return Dms{false, deg, min}; }

// clang-format off
inline constexpr std::array<Table1Entry, 12> kTable1 = {{
    {0.707, 45, Sign::Plus,  dm(45, 0), dm(12, 14), dm(22, 30), {0.2861, 0.0030}, {0.0171, 0.0046}},
    {0.588, 54, Sign::Plus,  dm(45, 0), dm(15, 19), dm(22, 30), {0.4037, 0.0038}, {0.0184, 0.0047}},
    {0.454, 63, Sign::Plus,  dm(45, 0), dm(18, 54), dm(22, 30), {0.5362, 0.0045}, {0.0192, 0.0047}},
    {0.309, 72, Sign::Plus,  dm(45, 0), dm(23, 18), dm(22, 30), {0.6834, 0.0054}, {0.0127, 0.0046}},
    {0.156, 81, Sign::Plus,  dm(45, 0), dm(29, 20), dm(22, 30), {0.8384, 0.0062}, {0.0066, 0.0044}},
    {0.000, 90, Sign::Plus,  dm(45, 0), dm(45, 0),  dm(22, 30), {0.9940, 0.0070}, {0.0060, 0.0035}},
    {0.707, 45, Sign::Minus, dm(45, 0), dm(12, 14), dm(22, 30), {0.2875, 0.0031}, {0.0152, 0.0045}},
    {0.588, 54, Sign::Minus, dm(45, 0), dm(15, 19), dm(22, 30), {0.4066, 0.0039}, {0.0156, 0.0047}},
    {0.454, 63, Sign::Minus, dm(45, 0), dm(18, 54), dm(22, 30), {0.5365, 0.0045}, {0.0183, 0.0046}},
    {0.309, 72, Sign::Minus, dm(45, 0), dm(23, 18), dm(22, 30), {0.6854, 0.0055}, {0.0136, 0.0049}},
    {0.156, 81, Sign::Minus, dm(45, 0), dm(29, 20), dm(22, 30), {0.8394, 0.0063}, {0.0071, 0.0043}},
    {0.000, 90, Sign::Minus, dm(45, 0), dm(45, 0),  dm(22, 30), {0.9920, 0.0071}, {0.0080, 0.0036}},
}};
// clang-format on

/// Superposition input |H> at phi = 45 degrees: measured conclusive rates.
/// P(3) was not published.
inline constexpr int kFig2dPhiDeg = 45;
inline constexpr Measured kFig2dP1 = {0.0854, 0.0015};
inline constexpr Measured kFig2dPm1 = {0.0850, 0.0015};

/// Reported per-step interference visibility. Metadata only.
inline constexpr double kVisibility = 0.998;
/// Reported lower bound on the coin-state fidelity at x = +/-1.
inline constexpr double kCoinFidelityBound = 0.9911;
/// About 1000 coincidences per second over 40 s.
inline constexpr long long kReferenceShots = 40000;

}  // namespace qwalk::reference

#endif
