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

#ifndef TWISTCODE_EXPERIMENT_H
#define TWISTCODE_EXPERIMENT_H

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twistcode/lattice.h"

namespace twistcode {

std::string library_version();

struct LatticeSpec {
    int width = 0;
    int height = 0;
    std::vector<DislocationSegment> segments;
};

struct ExperimentConfig {
    // derive, verify, mbb, stats or oracle-check.
    std::string kind;
    std::optional<LatticeSpec> lattice;
    // anyon, fock or lattice.
    std::string backend = "anyon";
    uint64_t seed = 1;
    long shots = 10000;
    std::vector<int> n_braids = {0, 1, 2, 3};
    std::complex<double> alpha = 1.0;
    std::complex<double> beta = 0.0;
    std::optional<std::array<int, 3>> outcomes;
    int max_attempts = 64;
    bool include_shots = false;
    std::string out;
    std::string format = "json";
};

// Strict: unknown keys and wrong types throw ConfigError.
ExperimentConfig parse_config(const nlohmann::json &j);
ExperimentConfig load_config(const std::string &path);
// Validates ranges and builds the lattice once; throws ConfigError.
void validate_config(const ExperimentConfig &cfg);
nlohmann::ordered_json config_to_json(const ExperimentConfig &cfg);
// FNV-1a 64 of the canonical config dump, as 16 hex digits.
std::string config_hash(const ExperimentConfig &cfg);

// Default lattices: one twist pair, three twist pairs, twist free.
LatticeSpec single_pair_spec();
LatticeSpec three_pair_spec();
LatticeSpec small_oracle_spec();
TwistLattice build(const LatticeSpec &spec);

struct InvariantCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct Report {
    nlohmann::ordered_json body;
    std::vector<InvariantCheck> checks;
    bool passed() const;
};

// Tableau against the dense state vector on a small lattice.
struct OracleCheck {
    size_t steps = 0;
    size_t deterministic_mismatches = 0;
    size_t probability_mismatches = 0;
    double tv_distance = 0.0;
    double tv_sigma = 0.0;
    long shots = 0;
    bool passed() const;
};
OracleCheck oracle_check(const TwistLattice &lat, long shots, uint64_t seed);

// Hole scheme against the direct scheme on copies of the same state.
struct HoleCheck {
    long shots = 0;
    long agree = 0;
    long trivial_plus = 0;
    long trivial_shots = 0;
    bool passed() const { return agree == shots && trivial_plus == trivial_shots; }
};
HoleCheck hole_vs_direct(long shots, uint64_t seed);

Report run_experiment(const ExperimentConfig &cfg);
// JSON document or CSV table, newline terminated.
std::string render(const Report &r, const std::string &format);

}  // namespace twistcode

#endif
