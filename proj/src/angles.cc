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

#include "qwalk/angles.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr std::string_view kDegreeMarks[] = {"°", "d", "o"};
constexpr std::string_view kMinuteMarks[] = {"′", "'"};

double parse_number(std::string_view s, std::string_view whole) {
    double v = 0.0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("malformed angle '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

Dms dms_from_minutes(int total_minutes) {
    Dms r;
    r.negative = total_minutes < 0;
    int m = std::abs(total_minutes);
    r.degrees = m / 60;
    r.minutes = m % 60;
    return r;
}

Dms round_minutes(double minutes) {
    // std::round rounds half away from zero.
    return dms_from_minutes(static_cast<int>(std::round(minutes)));
}

Dms to_dms(double radians) { return round_minutes(rad_to_deg(radians) * 60.0); }

std::string format_dms(const Dms &a, bool ascii) {
    std::string out = a.negative ? "-" : "";
    out += std::to_string(a.degrees);
    out += ascii ? "d" : "°";
    if (a.minutes != 0) {
        out += std::to_string(a.minutes);
        out += ascii ? "'" : "′";
    }
    return out;
}

Dms parse_dms(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    for (auto mark : kDegreeMarks) {
        auto pos = s.find(mark);
        if (pos == std::string_view::npos) {
            continue;
        }
        double deg = parse_number(s.substr(0, pos), text);
        std::string_view rest = s.substr(pos + mark.size());
        double minutes = 0.0;
        if (!rest.empty()) {
            bool found = false;
            for (auto mm : kMinuteMarks) {
                if (rest.size() >= mm.size() && rest.substr(rest.size() - mm.size()) == mm) {
                    rest.remove_suffix(mm.size());
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw std::invalid_argument("missing arcminute mark in '" + std::string(text) + "'");
            }
            minutes = parse_number(rest, text);
        }
        if (minutes < 0 || minutes >= 60) {
            throw std::invalid_argument("arcminutes out of range in '" + std::string(text) + "'");
        }
        Dms r = to_dms(deg_to_rad(deg + minutes / 60.0));
        r.negative = negative && r.total_minutes() != 0;
        return r;
    }
    Dms r = to_dms(deg_to_rad(parse_number(s, text)));
    r.negative = negative && r.total_minutes() != 0;
    return r;
}

double arcminute_gap(double radians_a, double radians_b) { return std::abs(rad_to_deg(radians_a - radians_b)) * 60.0; }

}  // namespace qwalk
