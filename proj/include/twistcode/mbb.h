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

#ifndef TWISTCODE_MBB_H
#define TWISTCODE_MBB_H

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistcode/dense.h"
#include "twistcode/rng.h"
#include "twistcode/stabilizer_sim.h"
#include "twistcode/topo_state.h"

namespace twistcode {

// Parity convention shared by all backends: (-1)^n = -i gamma_a gamma_b, a < b.
class Backend {
   public:
    virtual ~Backend() = default;
    virtual std::string tag() const = 0;
    virtual int anyons() const = 0;
    // Back to the configured initial state.
    virtual void reset() = 0;
    // forced in {0, 1} postselects; throws ZeroProbabilityError if impossible.
    virtual int measure_pair(int a, int b, Rng &rng, int forced = -1) = 0;
    // Definite label, or nullopt.
    virtual std::optional<int> peek_pair(int a, int b) const = 0;
    // i gamma_a gamma_b.
    virtual void apply_bilinear(int a, int b) = 0;
    // Amplitudes in the FockSpace layout, when the backend has them.
    virtual std::optional<Eigen::VectorXcd> fock_state() const { return std::nullopt; }
    virtual std::unique_ptr<Backend> clone() const = 0;
};

class AnyonBackend : public Backend {
   public:
    explicit AnyonBackend(TopoState initial) : initial_(initial), state_(std::move(initial)) {}
    std::string tag() const override { return "anyon"; }
    int anyons() const override { return state_.anyons(); }
    void reset() override { state_ = initial_; }
    int measure_pair(int a, int b, Rng &rng, int forced = -1) override;
    std::optional<int> peek_pair(int a, int b) const override;
    void apply_bilinear(int a, int b) override { state_ = twistcode::apply_bilinear(state_, a, b); }
    std::optional<Eigen::VectorXcd> fock_state() const override { return to_fock(state_); }
    std::unique_ptr<Backend> clone() const override { return std::make_unique<AnyonBackend>(*this); }
    const TopoState &state() const { return state_; }

   private:
    TopoState initial_;
    TopoState state_;
};

class FockBackend : public Backend {
   public:
    FockBackend(size_t modes, Eigen::VectorXcd initial);
    std::string tag() const override { return "fock"; }
    int anyons() const override { return static_cast<int>(space_->modes()); }
    void reset() override { state_ = initial_; }
    int measure_pair(int a, int b, Rng &rng, int forced = -1) override;
    std::optional<int> peek_pair(int a, int b) const override;
    void apply_bilinear(int a, int b) override;
    std::optional<Eigen::VectorXcd> fock_state() const override { return state_; }
    std::unique_ptr<Backend> clone() const override { return std::make_unique<FockBackend>(*this); }
    const FockSpace &space() const { return *space_; }

   private:
    std::shared_ptr<const FockSpace> space_;
    Eigen::VectorXcd initial_;
    Eigen::VectorXcd state_;
};

// Twists of a planar lattice act as the anyons: anyon k is twist k - 1.
// Pair parities are read out with the direct scheme.
class LatticeBackend : public Backend {
   public:
    // Ground state with the listed pairs postselected into the vacuum.
    LatticeBackend(std::shared_ptr<const TwistLattice> lat, const std::vector<AnyonPair> &vacuum_pairs, uint64_t seed);
    std::string tag() const override { return "lattice"; }
    int anyons() const override { return static_cast<int>(lat_->twists().size()); }
    void reset() override {
        sim_ = *initial_;
        pairing_ = initial_pairing_;
    }
    int measure_pair(int a, int b, Rng &rng, int forced = -1) override;
    std::optional<int> peek_pair(int a, int b) const override;
    void apply_bilinear(int a, int b) override;
    std::unique_ptr<Backend> clone() const override { return std::make_unique<LatticeBackend>(*this); }
    // Labels follow the anyon convention for this pairing, see label_sign.
    const std::vector<AnyonPair> &pairing() const { return pairing_; }

    // Reduced spin form of -i gamma_a gamma_b.
    const PauliString &pair_operator(int a, int b) const;
    const LatticeSimulator &simulator() const { return sim_; }
    // Direct-scheme runs whose syndrome check failed.
    size_t syndrome_failures() const { return syndrome_failures_; }
    void set_syndrome_check(bool on) { check_syndrome_ = on; }

   private:
    std::shared_ptr<const TwistLattice> lat_;
    std::shared_ptr<const std::map<AnyonPair, PauliString>> ops_;
    std::shared_ptr<const LatticeSimulator> initial_;
    LatticeSimulator sim_;
    std::vector<AnyonPair> initial_pairing_;
    std::vector<AnyonPair> pairing_;
    bool check_syndrome_ = false;
    size_t syndrome_failures_ = 0;
};

struct MBBRoles {
    int a1 = 1;
    int a2 = 2;
    int a3 = 3;
    int a4 = 4;
};

struct MBBRecord {
    int n12_initial = 0;
    int n13 = 0;
    int n14 = 0;
    int n12_final = 0;
    std::string backend;
    // Measurements per step; all 1 for the fixed cycle.
    std::array<int, 3> attempts = {1, 1, 1};
    int measurements = 0;
    bool operator==(const MBBRecord &) const = default;
};

enum class CorrectionOp : uint8_t { I, X, Y, Z };

std::string correction_name(CorrectionOp c);
CorrectionOp correction_for(const MBBRecord &r);
// Anyon roles of the Majorana bilinear behind a correction.
std::optional<std::pair<int, int>> correction_pair(CorrectionOp c, const MBBRoles &roles = {});
void apply_correction(Backend &b, CorrectionOp c, const MBBRoles &roles = {});

// Called after each measurement step with the step index 0..2.
using StepObserver = std::function<void(int, const Backend &)>;

// Fixed three-measurement cycle. `inject` forces the three outcomes.
MBBRecord run_cycle(Backend &b, const MBBRoles &roles, Rng &rng, const std::optional<std::array<int, 3>> &inject = {},
                    const StepObserver &observer = {});
// Cycle plus the Pauli correction.
MBBRecord braid(Backend &b, const MBBRoles &roles, Rng &rng);
// Forced variant: after a nonzero outcome the previous pair is re-measured and
// the target tried again, up to max_attempts per step.
MBBRecord run_forced(Backend &b, const MBBRoles &roles, Rng &rng, int max_attempts);

// |<R_34 initial | final>| with R_34 = (1 + gamma_4 gamma_3) / sqrt(2).
double verify_braid_equivalence(const Backend &initial, const Backend &final_corrected, const MBBRoles &roles = {});

struct StatsResult {
    int n_braids = 0;
    long shots = 0;
    long flips = 0;
    double frequency = 0.0;
    double sigma = 0.0;
    // Wilson score interval at 95 %.
    double ci_low = 0.0;
    double ci_high = 0.0;
};

// Worker count from TWISTCODE_WORKERS, else the hardware concurrency.
int worker_count();

// Parity-flip frequency of (3, 5) after n_braids braids of (3, 4) using the
// ancillas (1, 2). Every shot re-prepares the backend's initial state.
// per_shot, when given, receives the flip bit of every shot in shot order.
StatsResult run_statistics(const Backend &prototype, int n_braids, long shots, uint64_t seed, int workers = 0,
                          std::vector<uint8_t> *per_shot = nullptr);

// The 6-anyon initial state: vacuum in (12)(35)(46).
TopoState statistics_initial_state();
std::vector<AnyonPair> statistics_pairing();

}  // namespace twistcode

#endif
