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

// qwalk: position-dependent-coin quantum walks for unambiguous state
// discrimination. Exit codes: 0 ok, 2 domain or usage error, 3 I/O error.

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "qwalk/cli.h"
#include "qwalk/errors.h"

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;

}  // namespace

int main(int argc, char **argv) {
    using namespace qwalk;
    cli::RunConfig config;
    std::string state = "plus";
    std::string output;
    double alpha = 0.0;
    std::string format = "json";
    const std::map<std::string, cli::Format> formats = {
        {"json", cli::Format::Json}, {"text", cli::Format::Text}, {"csv", cli::Format::Csv}};

    try {
        config.seed = cli::default_seed();
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }

    CLI::App app{"Discrete-time quantum walks with position-dependent coins: unambiguous state "
                 "discrimination and POVM extraction"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", format, "output format: json | text | csv")
            ->check(CLI::IsMember({"json", "text", "csv"}, CLI::ignore_case));
        sub->add_option("-o,--output", output, "write the report here instead of stdout");
    };
    auto add_alpha = [&](CLI::App *sub) {
        return sub->add_option("--alpha", alpha, "overlap alpha of the pair {|0>, alpha|0> + beta|1>}, in [0, 1)");
    };
    auto add_sampling = [&](CLI::App *sub) {
        sub->add_option("--shots", config.shots, "number of sampled detection events")->check(CLI::PositiveNumber);
        sub->add_option("--seed", config.seed, "sampling seed (default: $QWALK_SEED or 1)");
    };
    auto add_state = [&](CLI::App *sub) {
        sub->add_option("--state", state,
                        "input coin: plus | minus | H | V | superposition:a,b | custom:aH,aV | custom:reH,imH,reV,imV");
    };

    auto *disc = app.add_subcommand("discriminate", "run the three-step discrimination walk on one input");
    add_alpha(disc)->required();
    add_common(disc);
    add_state(disc);
    add_sampling(disc);

    auto *povm = app.add_subcommand("povm", "walk-extracted and closed-form POVM elements");
    add_alpha(povm)->required();
    add_common(povm);

    auto *table1 = app.add_subcommand("table1", "recompute the published angle schedule and success rates");
    add_common(table1);
    add_sampling(table1);

    auto *fig2d = app.add_subcommand("fig2d", "equal-weight superposition input at phi = 45 degrees");
    add_common(fig2d);
    add_sampling(fig2d);

    auto *walk = app.add_subcommand("walk", "run a protocol file and print position distributions");
    add_alpha(walk)->description("alpha used by --state plus|minus|superposition (default: cos 45 degrees)");
    add_common(walk);
    add_state(walk);
    walk->add_option("--protocol", config.protocol_file, "protocol file")->required();
    walk->add_flag("--per-step", config.per_step, "emit the distribution after every step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitDomain;
    }

    for (auto *sub : app.get_subcommands()) {
        config.command = sub->get_name();
        if (sub->get_option_no_throw("--alpha") && sub->count("--alpha")) config.alpha = alpha;
        config.format = formats.at(CLI::detail::to_lower(format));
    }

    try {
        config.state = cli::parse_state(state);
        std::string rendered = cli::render(cli::execute(config), config.format);
        if (output.empty()) {
            std::cout << rendered;
        } else {
            std::ofstream out(output, std::ios::binary);
            out << rendered;
            if (!out) throw IoError("cannot write '" + output + "'");
        }
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception &e) {
        // DomainError, LeakageError and malformed protocol files.
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
