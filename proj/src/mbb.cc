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

#include "twistcode/mbb.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "twistcode/errors.h"
#include "twistcode/jordan_wigner.h"

namespace twistcode {

namespace {

AnyonPair ordered(int a, int b) {
    if (a == b) {
        throw DomainError("a pair needs two distinct anyons");
    }
    return {std::min(a, b), std::max(a, b)};
}

std::optional<int> definite(double p0) {
    if (p0 > 1.0 - 1e-12) {
        return 0;
    }
    if (p0 < 1e-12) {
        return 1;
    }
    return std::nullopt;
}

}  // namespace

// ---- anyon backend

int AnyonBackend::measure_pair(int a, int b, Rng &rng, int forced) {
    AnyonPair p = ordered(a, b);
    TopoState t = transform_state(state_, pairing_with(state_, p));
    int flip = label_sign(t.pairing(), p) < 0;
    PairOutcome m = twistcode::measure_pair(t, p, rng, forced < 0 ? -1 : (forced ^ flip));
    state_ = m.state;
    return m.n ^ flip;
}

std::optional<int> AnyonBackend::peek_pair(int a, int b) const {
    AnyonPair p = ordered(a, b);
    int flip = label_sign(pairing_with(state_, p), p) < 0;
    auto v = definite(pair_probability(state_, p, 0));
    if (v) {
        return *v ^ flip;
    }
    return v;
}

// ---- Fock backend

FockBackend::FockBackend(size_t modes, Eigen::VectorXcd initial)
    : space_(std::make_shared<const FockSpace>(modes)), initial_(std::move(initial)) {
    if (initial_.size() != static_cast<Eigen::Index>(space_->dim()) || std::abs(initial_.norm() - 1.0) > 1e-12) {
        throw DomainError("initial Fock state must be a unit vector of the right dimension");
    }
    state_ = initial_;
}

int FockBackend::measure_pair(int a, int b, Rng &rng, int forced) {
    AnyonPair p = ordered(a, b);
    if (p.second > anyons()) {
        throw DomainError("anyon index out of range");
    }
    return space_->measure(state_, p.first - 1, p.second - 1, rng, forced);
}

std::optional<int> FockBackend::peek_pair(int a, int b) const {
    AnyonPair p = ordered(a, b);
    return definite(space_->probability_zero(state_, p.first - 1, p.second - 1));
}

void FockBackend::apply_bilinear(int a, int b) {
    state_ = cdouble(0, 1) * (space_->gamma(a - 1) * (space_->gamma(b - 1) * state_));
}

// ---- lattice backend

LatticeBackend::LatticeBackend(std::shared_ptr<const TwistLattice> lat, const std::vector<AnyonPair> &vacuum_pairs,
                               uint64_t seed)
    : lat_(lat), sim_(LatticeSimulator::init_ground(lat, seed)) {
    const TwistLattice &l = *lat_;
    JWPath path = fully_substituted_path(l);
    std::vector<MajoranaMode> modes;
    for (const auto &t : l.twists()) {
        modes.push_back(twist_mode(l, path, t.id));
    }
    auto ops = std::make_shared<std::map<AnyonPair, PauliString>>();
    for (size_t a = 0; a < modes.size(); a++) {
        for (size_t b = a + 1; b < modes.size(); b++) {
            // mode_parity is i g g in path order.
            PauliString q = mode_parity(modes[a], modes[b], path);
            if (path.key(modes[a]) < path.key(modes[b])) {
                q.set_phase(q.phase() * Phase::minus_one());
            }
            (*ops)[{static_cast<int>(a) + 1, static_cast<int>(b) + 1}] = reduce_by_stabilizers(q, l);
        }
    }
    ops_ = ops;
    for (int k = 2; k <= anyons(); k++) {
        sim_.register_logical(pair_operator(1, k));
    }
    auto cls = classify_modes(l, path);
    if (!cls.edge.empty() && !modes.empty()) {
        sim_.register_logical(reduce_by_stabilizers(mode_parity(cls.edge.front(), modes[0], path), l));
    }
    pairing_ = standard_pairing(anyons());
    for (const auto &p : vacuum_pairs) {
        pairing_ = pairing_with(anyons(), pairing_, p);
    }
    for (const auto &p : vacuum_pairs) {
        sim_.measure_pauli(pair_operator(p.first, p.second), label_sign(pairing_, ordered(p.first, p.second)));
    }
    initial_pairing_ = pairing_;
    initial_ = std::make_shared<const LatticeSimulator>(sim_);
}

const PauliString &LatticeBackend::pair_operator(int a, int b) const {
    auto it = ops_->find(ordered(a, b));
    if (it == ops_->end()) {
        throw DomainError("anyon index out of range");
    }
    return it->second;
}

int LatticeBackend::measure_pair(int a, int b, Rng &rng, int forced) {
    const PauliString &q = pair_operator(a, b);
    pairing_ = pairing_with(anyons(), pairing_, ordered(a, b));
    int sign = label_sign(pairing_, ordered(a, b));
    sim_.rng().seed(rng());
    if (forced >= 0) {
        sim_.measure_pauli(q, forced ? -sign : sign);
    }
    ParityReadout r = sim_.measure_parity_direct(q, {check_syndrome_});
    if (check_syndrome_ && !r.syndrome_clean) {
        syndrome_failures_++;
    }
    int n = r.outcome * sign < 0 ? 1 : 0;
    if (forced >= 0 && n != forced) {
        fail_invariant("direct parity readout disagrees with the injected outcome");
    }
    return n;
}

std::optional<int> LatticeBackend::peek_pair(int a, int b) const {
    auto v = sim_.peek(pair_operator(a, b));
    if (!v) {
        return std::nullopt;
    }
    return *v * label_sign(pairing_with(anyons(), pairing_, ordered(a, b)), ordered(a, b)) < 0 ? 1 : 0;
}

void LatticeBackend::apply_bilinear(int a, int b) {
    sim_.apply_pauli(pair_operator(a, b));
}

// ---- protocol

std::string correction_name(CorrectionOp c) {
    switch (c) {
        case CorrectionOp::I:
            return "I";
        case CorrectionOp::X:
            return "X";
        case CorrectionOp::Y:
            return "Y";
        case CorrectionOp::Z:
            return "Z";
    }
    return "?";
}

CorrectionOp correction_for(const MBBRecord &r) {
    bool differ = r.n13 != r.n14;
    if (r.n12_final == 0) {
        return differ ? CorrectionOp::Z : CorrectionOp::I;
    }
    return differ ? CorrectionOp::X : CorrectionOp::Y;
}

std::optional<std::pair<int, int>> correction_pair(CorrectionOp c, const MBBRoles &roles) {
    switch (c) {
        case CorrectionOp::I:
            return std::nullopt;
        case CorrectionOp::X:
            return std::pair{roles.a1, roles.a3};
        case CorrectionOp::Y:
            return std::pair{roles.a1, roles.a4};
        case CorrectionOp::Z:
            return std::pair{roles.a3, roles.a4};
    }
    return std::nullopt;
}

void apply_correction(Backend &b, CorrectionOp c, const MBBRoles &roles) {
    if (auto p = correction_pair(c, roles)) {
        b.apply_bilinear(p->first, p->second);
    }
}

namespace {

void require_vacuum(const Backend &b, const MBBRoles &roles) {
    auto v = b.peek_pair(roles.a1, roles.a2);
    if (!v || *v != 0) {
        throw DomainError("ancilla pair is not initialized in the vacuum");
    }
}

}  // namespace

MBBRecord run_cycle(Backend &b, const MBBRoles &roles, Rng &rng, const std::optional<std::array<int, 3>> &inject,
                    const StepObserver &observer) {
    require_vacuum(b, roles);
    MBBRecord r;
    r.backend = b.tag();
    const std::pair<int, int> targets[3] = {{roles.a1, roles.a3}, {roles.a1, roles.a4}, {roles.a1, roles.a2}};
    int *slots[3] = {&r.n13, &r.n14, &r.n12_final};
    for (int k = 0; k < 3; k++) {
        *slots[k] = b.measure_pair(targets[k].first, targets[k].second, rng, inject ? (*inject)[k] : -1);
        r.measurements++;
        if (observer) {
            observer(k, b);
        }
    }
    return r;
}

MBBRecord braid(Backend &b, const MBBRoles &roles, Rng &rng) {
    MBBRecord r = run_cycle(b, roles, rng);
    apply_correction(b, correction_for(r), roles);
    return r;
}

MBBRecord run_forced(Backend &b, const MBBRoles &roles, Rng &rng, int max_attempts) {
    if (max_attempts < 1) {
        throw DomainError("max_attempts must be positive");
    }
    require_vacuum(b, roles);
    MBBRecord r;
    r.backend = b.tag();
    const std::pair<int, int> targets[3] = {{roles.a1, roles.a3}, {roles.a1, roles.a4}, {roles.a1, roles.a2}};
    const std::pair<int, int> previous[3] = {{roles.a1, roles.a2}, {roles.a1, roles.a3}, {roles.a1, roles.a4}};
    for (int k = 0; k < 3; k++) {
        int attempts = 1;
        int n = b.measure_pair(targets[k].first, targets[k].second, rng);
        r.measurements++;
        while (n != 0) {
            if (attempts >= max_attempts) {
                throw Error("forced measurement did not reach the vacuum within " + std::to_string(max_attempts) +
                            " attempts");
            }
            b.measure_pair(previous[k].first, previous[k].second, rng);
            n = b.measure_pair(targets[k].first, targets[k].second, rng);
            r.measurements += 2;
            attempts++;
        }
        r.attempts[k] = attempts;
    }
    return r;
}

double verify_braid_equivalence(const Backend &initial, const Backend &final_corrected, const MBBRoles &roles) {
    auto u = initial.fock_state();
    auto v = final_corrected.fock_state();
    if (!u || !v) {
        throw DomainError("braid equivalence needs a backend with state access");
    }
    FockSpace fs(static_cast<size_t>(initial.anyons()));
    Eigen::VectorXcd ru = fs.braid(roles.a3 - 1, roles.a4 - 1) * *u;
    return fidelity_up_to_phase(ru, *v);
}

int worker_count() {
    if (const char *e = std::getenv("TWISTCODE_WORKERS")) {
        char *end = nullptr;
        long n = std::strtol(e, &end, 10);
        if (end != e && *end == '\0' && n >= 1) {
            return static_cast<int>(std::min(n, 256L));
        }
        throw DomainError("TWISTCODE_WORKERS must be a positive integer");
    }
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : static_cast<int>(h);
}

TopoState statistics_initial_state() {
    return TopoState::basis(6, statistics_pairing(), {0, 0, 0});
}

std::vector<AnyonPair> statistics_pairing() {
    return make_pairing(6, {{1, 2}, {3, 5}, {4, 6}});
}

StatsResult run_statistics(const Backend &prototype, int n_braids, long shots, uint64_t seed, int workers,
                          std::vector<uint8_t> *per_shot) {
    if (shots <= 0) {
        throw DomainError("shots must be positive");
    }
    if (n_braids < 0) {
        throw DomainError("n_braids must be non-negative");
    }
    if (prototype.anyons() < 6) {
        throw DomainError("statistics need six anyons");
    }
    if (workers <= 0) {
        workers = worker_count();
    }
    workers = static_cast<int>(std::min<long>(workers, shots));
    std::atomic<long> flips{0};
    if (per_shot) {
        per_shot->assign(static_cast<size_t>(shots), 0);
    }
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&](int w) {
        try {
            auto b = prototype.clone();
            long local = 0;
            for (long s = w; s < shots; s += workers) {
                b->reset();
                Rng rng(derive_seed(seed, static_cast<uint64_t>(s)));
                auto before = b->peek_pair(3, 5);
                if (!before) {
                    throw DomainError("P35 is not definite in the initial state");
                }
                for (int k = 0; k < n_braids; k++) {
                    braid(*b, MBBRoles{}, rng);
                }
                bool flip = b->measure_pair(3, 5, rng) != *before;
                local += flip;
                if (per_shot) {
                    (*per_shot)[static_cast<size_t>(s)] = flip;
                }
            }
            flips += local;
        } catch (...) {
            std::lock_guard<std::mutex> g(err_mu);
            if (!err) {
                err = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; w++) {
            pool.emplace_back(work, w);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (err) {
        std::rethrow_exception(err);
    }
    StatsResult r;
    r.n_braids = n_braids;
    r.shots = shots;
    r.flips = flips.load();
    double n = static_cast<double>(shots);
    double p = r.flips / n;
    r.frequency = p;
    r.sigma = std::sqrt(p * (1 - p) / n);
    const double z = 1.959963984540054;
    double denom = 1 + z * z / n;
    double mid = (p + z * z / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
    r.ci_low = std::max(0.0, mid - half);
    r.ci_high = std::min(1.0, mid + half);
    return r;
}

}  // namespace twistcode
