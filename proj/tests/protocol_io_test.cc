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

#include <cstdlib>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracle.h"
#include "qwalk/errors.h"
#include "qwalk/usd.h"

using namespace qwalk;

namespace {

std::filesystem::path data_dir() {
    const char *d = std::getenv("QWALK_DATA_DIR");
    return d ? std::filesystem::path(d) : std::filesystem::path("data");
}

int parse_error_line(std::string_view text) {
    try {
        parse_protocol(text);
    } catch (const ProtocolParseError &e) {
        return e.line;
    }
    return -1;
}

}  // namespace

TEST(parse_protocol, entries_and_comments) {
    Protocol p = parse_protocol(
        "# header\n"
        "\n"
        "identity   # first\n"
        "-1:45 1:12.5\n"
        "0:id 2:custom(0,1,1,0)\n"
        "-\n"
        "3:custom(0,0,1,0,1,0,0,0)\n");
    ASSERT_EQ(p.size(), 5u);
    EXPECT_TRUE(p[0].is_identity());
    EXPECT_NEAR(std::get<AngleCoin>(p[1].coins().at(-1)).theta, std::numbers::pi / 4, 1e-15);
    EXPECT_NEAR(std::get<AngleCoin>(p[1].coins().at(1)).theta, 12.5 * std::numbers::pi / 180, 1e-15);
    EXPECT_EQ(p[2].coins().size(), 1u);
    EXPECT_EQ(std::get<CustomCoin>(p[2].coins().at(2)).m, Mat2(0.0, 1.0, 1.0, 0.0));
    EXPECT_TRUE(p[3].is_identity());
    EXPECT_EQ(std::get<CustomCoin>(p[4].coins().at(3)).m, Mat2(Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)));
}

TEST(parse_protocol, diagnostics_carry_line_numbers) {
    EXPECT_EQ(parse_error_line("identity\n0:abc\n"), 2);
    EXPECT_EQ(parse_error_line("# c\n\n0:50\n"), 3);            // angle above 45 degrees
    EXPECT_EQ(parse_error_line("0:-1\n"), 1);                   // negative angle
    EXPECT_EQ(parse_error_line("0:10\n1:custom(1,1,0,1)\n"), 2);  // not unitary
    EXPECT_EQ(parse_error_line("0:custom(1,0,0)\n"), 1);
    EXPECT_EQ(parse_error_line("0:custom(1,0,0,1\n"), 1);
    EXPECT_EQ(parse_error_line("x:10\n"), 1);
    EXPECT_EQ(parse_error_line("10\n"), 1);
    EXPECT_EQ(parse_error_line("0:10 0:20\n"), 1);
    EXPECT_EQ(parse_error_line("# nothing\n\n"), 2);
    EXPECT_EQ(parse_error_line(""), 1);
}

TEST(parse_protocol, format_round_trip) {
    std::mt19937_64 rng(81);
    for (int k = 0; k < 20; ++k) {
        Protocol p = oracle::random_protocol(rng, 1 + k % 5);
        Protocol q = parse_protocol(format_protocol(p));
        ASSERT_EQ(p.size(), q.size());
        WalkState a = run(WalkState::localized(0, CoinState{0.6, Complex(0, 0.8)}), p);
        WalkState b = run(WalkState::localized(0, CoinState{0.6, Complex(0, 0.8)}), q);
        EXPECT_NEAR(std::abs(inner(a, b)), 1.0, 1e-12);
    }
}

TEST(load_protocol, shipped_usd_file_matches_compiled_walk) {
    Protocol file = load_protocol(data_dir() / "protocols" / "usd_45.walk");
    auto p = UsdParams::from_phi(std::numbers::pi / 4);
    UsdProtocol usd = compile(p);
    CoinState plus = prepare_coin(p, Sign::Plus);
    WalkState a = run(WalkState::localized(0, plus), file);
    WalkState b = run(WalkState::localized(0, plus), usd.protocol);
    for (int x = -3; x <= 3; ++x) {
        EXPECT_NEAR(std::abs(a.at(x).h - b.at(x).h), 0, 1e-12);
        EXPECT_NEAR(std::abs(a.at(x).v - b.at(x).v), 0, 1e-12);
    }
}

TEST(load_protocol, missing_file_is_io_error) {
    EXPECT_THROW(load_protocol("/nonexistent/dir/none.walk"), IoError);
}
