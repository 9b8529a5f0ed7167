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

// Radians are the only unit inside the library. Degrees and
// degree-arcminute values exist only at I/O boundaries.

#ifndef QWALK_ANGLES_H
#define QWALK_ANGLES_H

#include <numbers>
#include <string>
#include <string_view>

namespace qwalk {

constexpr double deg_to_rad(double deg) { return deg * (std::numbers::pi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / std::numbers::pi); }

/// An angle rounded to whole arcminutes.
struct Dms {
    bool negative = false;
    int degrees = 0;
    int minutes = 0;  // [0, 60)

    int total_minutes() const { return (negative ? -1 : 1) * (degrees * 60 + minutes); }
    double to_radians() const { return deg_to_rad(total_minutes() / 60.0); }
    bool operator==(const Dms &) const = default;
};

/// Nearest arcminute; exact half-minutes round away from zero.
Dms to_dms(double radians);
Dms round_minutes(double minutes);
Dms dms_from_minutes(int total_minutes);

/// "12°14′", or "45°" when minutes are zero. ascii=true gives "12d14'".
std::string format_dms(const Dms &a, bool ascii = false);

/// Accepts the forms format_dms emits plus bare decimal degrees ("22.5").
/// Throws std::invalid_argument.
Dms parse_dms(std::string_view text);

/// |a - b| in arcminutes.
double arcminute_gap(double radians_a, double radians_b);

}  // namespace qwalk

#endif
