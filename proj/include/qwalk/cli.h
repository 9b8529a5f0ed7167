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

// Command implementations behind the `qwalk` executable. Each command turns a
// RunConfig into a JSON document; render() turns that document into the
// requested output format. Argument parsing lives in tools/.

#ifndef QWALK_CLI_H
#define QWALK_CLI_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qwalk/linalg.h"
#include "qwalk/usd.h"

namespace qwalk::cli {

enum class Format { Json, Text, Csv };

/// Input coin selection: psi_+, psi_-, a psi_+ + b psi_-, or an explicit
/// coin vector.
struct StateChoice {
    enum class Kind { Plus, Minus, Superposition, Custom } kind = Kind::Plus;
    double a = 1.0;
    double b = 1.0;
    CoinState custom{};
};

/// plus | minus | H | V | superposition:a,b | custom:aH,aV | custom:reH,imH,reV,imV.
/// Throws DomainError.
StateChoice parse_state(std::string_view text);
std::string describe(const StateChoice &s);

inline constexpr std::int64_t kDefaultShots = 40000;
inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr std::string_view kSeedEnvVar = "QWALK_SEED";
inline constexpr int kSchemaVersion = 1;

struct RunConfig {
    std::string command;
    std::optional<double> alpha;
    StateChoice state;
    std::int64_t shots = kDefaultShots;
    std::uint64_t seed = kDefaultSeed;
    Format format = Format::Json;
    std::optional<std::string> protocol_file;
    bool per_step = false;
};

/// kDefaultSeed unless QWALK_SEED holds an unsigned integer.
std::uint64_t default_seed();

CoinState resolve_state(const StateChoice &s, const UsdParams &params);

nlohmann::json cmd_discriminate(const RunConfig &config);
nlohmann::json cmd_povm(const RunConfig &config);
nlohmann::json cmd_table1(const RunConfig &config);
nlohmann::json cmd_fig2d(const RunConfig &config);
nlohmann::json cmd_walk(const RunConfig &config);

/// Dispatches on config.command.
nlohmann::json execute(const RunConfig &config);

std::string render(const nlohmann::json &report, Format format);

}  // namespace qwalk::cli

#endif
