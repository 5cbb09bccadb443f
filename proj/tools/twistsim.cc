// Copyright 2026 The twistcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// twistsim: batch runner for derivations, invariant suites and Monte Carlo runs.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "twistcode/errors.h"
#include "twistcode/experiment.h"
#include "twistcode/mbb.h"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kInvariantFailure = 2;

struct Flags {
    std::string config;
    std::optional<uint64_t> seed;
    std::optional<long> shots;
    std::string out;
    std::string format;
};

void add_flags(CLI::App *sub, Flags &f) {
    sub->add_option("--config", f.config, "JSON experiment config");
    sub->add_option("--seed", f.seed, "master seed (u64)");
    sub->add_option("--shots", f.shots, "Monte Carlo shots");
    sub->add_option("--out", f.out, "output path (default stdout)");
    sub->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

// Write via a sibling temp file so a failed run never leaves a truncated report.
void write_atomically(const std::string &path, const std::string &text) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream o(tmp, std::ios::binary);
        if (!o) {
            throw twistcode::ConfigError("cannot write '" + path + "'");
        }
        o << text;
        if (!o) {
            throw twistcode::ConfigError("cannot write '" + path + "'");
        }
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"twist-defect surface code simulator"};
    app.set_version_flag("--version", twistcode::library_version());
    app.require_subcommand(1);
    Flags f;
    const std::pair<const char *, const char *> kinds[] = {
        {"derive", "Jordan-Wigner mode structure and pair parity operators"},
        {"verify", "run the invariant checks"},
        {"mbb", "one measurement-based braiding cycle with its correction"},
        {"stats", "parity-flip statistics for repeated braids"},
        {"oracle-check", "compare the tableau simulator with the dense oracle"},
    };
    for (const auto &[kind, what] : kinds) {
        add_flags(app.add_subcommand(kind, what), f);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kConfigError;
    }
    std::string kind = app.get_subcommands().front()->get_name();

    twistcode::ExperimentConfig cfg;
    std::string rendered;
    try {
        if (!f.config.empty()) {
            cfg = twistcode::load_config(f.config);
        }
        if (cfg.kind.empty()) {
            cfg.kind = kind;
        } else if (cfg.kind != kind) {
            throw twistcode::ConfigError("config kind '" + cfg.kind + "' does not match subcommand '" + kind + "'");
        }
        if (f.seed) {
            cfg.seed = *f.seed;
        }
        if (f.shots) {
            cfg.shots = *f.shots;
        }
        if (!f.out.empty()) {
            cfg.out = f.out;
        }
        if (!f.format.empty()) {
            cfg.format = f.format;
        }
        twistcode::validate_config(cfg);
        twistcode::worker_count();
    } catch (const twistcode::Error &e) {
        std::cerr << "twistsim: config error: " << e.what() << "\n";
        return kConfigError;
    }

    twistcode::Report report;
    try {
        report = twistcode::run_experiment(cfg);
        rendered = twistcode::render(report, cfg.format);
    } catch (const twistcode::ConfigError &e) {
        std::cerr << "twistsim: config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception &e) {
        std::cerr << "twistsim: invariant failure: " << e.what() << "\n";
        return kInvariantFailure;
    }

    try {
        if (cfg.out.empty()) {
            std::cout << rendered;
            std::cout.flush();
        } else {
            write_atomically(cfg.out, rendered);
        }
    } catch (const std::exception &e) {
        std::cerr << "twistsim: " << e.what() << "\n";
        return kConfigError;
    }
    if (!report.passed()) {
        for (const auto &c : report.checks) {
            if (!c.pass) {
                std::cerr << "twistsim: invariant violated: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
                          << "\n";
            }
        }
        return kInvariantFailure;
    }
    return kOk;
}
