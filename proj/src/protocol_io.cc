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

#include "qwalk/protocol_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "qwalk/angles.h"
#include "qwalk/errors.h"

namespace qwalk {

namespace {

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

template <typename T>
bool parse_full(std::string_view s, T &out) {
    s = trim(s);
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && end == s.data() + s.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        if (i >= s.size()) break;
        size_t j = i;
        int depth = 0;
        while (j < s.size() && (depth > 0 || (s[j] != ' ' && s[j] != '\t'))) {
            if (s[j] == '(') ++depth;
            if (s[j] == ')') --depth;
            ++j;
        }
        out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

CoinAction parse_action(std::string_view spec, int line) {
    if (spec == "id") {
        return IdentityCoin{};
    }
    if (spec.starts_with("custom(")) {
        if (!spec.ends_with(")")) {
            throw ProtocolParseError(line, "unterminated custom(...) in '" + std::string(spec) + "'");
        }
        std::string_view body = spec.substr(7, spec.size() - 8);
        std::vector<double> vals;
        while (true) {
            auto comma = body.find(',');
            double v = 0;
            if (!parse_full(body.substr(0, comma), v)) {
                throw ProtocolParseError(line, "bad number in '" + std::string(spec) + "'");
            }
            vals.push_back(v);
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        Mat2 m;
        if (vals.size() == 4) {
            m = Mat2(vals[0], vals[1], vals[2], vals[3]);
        } else if (vals.size() == 8) {
            m = Mat2({vals[0], vals[1]}, {vals[2], vals[3]}, {vals[4], vals[5]}, {vals[6], vals[7]});
        } else {
            throw ProtocolParseError(line, "custom coin needs 4 real or 8 (re, im) entries, got " +
                                               std::to_string(vals.size()));
        }
        return CustomCoin{m};
    }
    double deg = 0;
    if (!parse_full(spec, deg)) {
        throw ProtocolParseError(line, "expected angle in degrees, 'id' or custom(...), got '" + std::string(spec) + "'");
    }
    return AngleCoin{deg_to_rad(deg)};
}

}  // namespace

Protocol parse_protocol(std::string_view text) {
    std::vector<StepSpec> steps;
    int line_no = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;

        StepSpec step;
        if (line != "identity" && line != "-") {
            for (auto entry : split_ws(line)) {
                auto colon = entry.find(':');
                int x = 0;
                if (colon == std::string_view::npos || !parse_full(entry.substr(0, colon), x)) {
                    throw ProtocolParseError(line_no, "expected 'x:coin', got '" + std::string(entry) + "'");
                }
                if (step.coins().contains(x)) {
                    throw ProtocolParseError(line_no, "position " + std::to_string(x) + " listed twice");
                }
                step.set(x, parse_action(entry.substr(colon + 1), line_no));
            }
        }
        try {
            step.validate();
        } catch (const DomainError &e) {
            throw ProtocolParseError(line_no, e.what());
        }
        steps.push_back(std::move(step));
    }
    if (steps.empty()) {
        throw ProtocolParseError(std::max(line_no, 1), "protocol has no steps");
    }
    return Protocol(std::move(steps));
}

Protocol load_protocol(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open protocol file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("error reading '" + path.string() + "'");
    }
    return parse_protocol(buf.str());
}

std::string format_protocol(const Protocol &protocol) {
    std::ostringstream out;
    out << std::setprecision(17);
    for (const auto &step : protocol.steps()) {
        if (step.is_identity()) {
            out << "identity\n";
            continue;
        }
        bool first = true;
        for (const auto &[x, action] : step.coins()) {
            if (!first) out << ' ';
            first = false;
            out << x << ':';
            if (const auto *a = std::get_if<AngleCoin>(&action)) {
                out << rad_to_deg(a->theta);
            } else {
                const Mat2 &m = std::get<CustomCoin>(action).m;
                out << "custom(";
                for (int k = 0; k < 4; ++k) {
                    Complex z = m(k / 2, k % 2);
                    out << (k ? "," : "") << z.real() << ',' << z.imag();
                }
                out << ')';
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace qwalk
