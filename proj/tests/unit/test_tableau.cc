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

#include <gtest/gtest.h>

#include "oracle.h"
#include "twistcode/errors.h"
#include "twistcode/tableau.h"

using namespace twistcode;

namespace {

// Dense reference: project v onto the (outcome) eigenspace of p.
double project(Eigen::VectorXcd &v, const PauliString &p, size_t n, int outcome) {
    oracle::M m = oracle::pauli(p, n);
    Eigen::VectorXcd w = 0.5 * (v + static_cast<double>(outcome) * (m * v));
    double prob = w.squaredNorm();
    if (prob > 1e-12) {
        v = w / std::sqrt(prob);
    }
    return prob;
}

void check_against_dense(size_t n, uint64_t seed, int steps) {
    Rng rng(seed);
    Tableau t(n);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(size_t{1} << n);
    v[0] = 1.0;
    for (int k = 0; k < steps; k++) {
        PauliString p = oracle::random_pauli(rng, n, false);
        if (p.is_identity_up_to_phase()) {
            continue;
        }
        if (coin(rng)) {
            p.set_phase(Phase::minus_one());
        }
        Eigen::VectorXcd probe = v;
        double plus = project(probe, p, n, 1);
        auto peek = t.peek(p);
        if (std::abs(plus - 1.0) < 1e-9) {
            ASSERT_TRUE(peek.has_value());
            EXPECT_EQ(*peek, 1);
        } else if (plus < 1e-9) {
            ASSERT_TRUE(peek.has_value());
            EXPECT_EQ(*peek, -1);
        } else {
            EXPECT_NEAR(plus, 0.5, 1e-9);
            EXPECT_FALSE(peek.has_value());
        }
        Tableau::Measurement m = t.measure(p, rng);
        EXPECT_EQ(m.deterministic, peek.has_value());
        EXPECT_GT(project(v, p, n, m.outcome), 1e-9);
        EXPECT_TRUE(t.check_invariants());
        if (coin(rng)) {
            PauliString e = oracle::random_pauli(rng, n, false);
            t.apply_pauli(e);
            v = oracle::pauli(e, n) * v;
        }
    }
}

}  // namespace

TEST(Tableau, StartsInAllZeros) {
    Tableau t(3);
    for (SiteId s = 0; s < 3; s++) {
        EXPECT_EQ(t.peek(PauliString::single(s, Letter::Z)), 1);
        EXPECT_FALSE(t.peek(PauliString::single(s, Letter::X)).has_value());
    }
}

TEST(Tableau, ExhaustiveTwoQubitAgainstDense) {
    const Letter all[] = {Letter::I, Letter::X, Letter::Y, Letter::Z};
    Rng rng(5);
    for (Letter a0 : all) {
        for (Letter a1 : all) {
            PauliString prep({{0, a0}, {1, a1}});
            if (prep.is_identity_up_to_phase()) {
                continue;
            }
            for (Letter b0 : all) {
                for (Letter b1 : all) {
                    PauliString q({{0, b0}, {1, b1}});
                    if (q.is_identity_up_to_phase()) {
                        continue;
                    }
                    Tableau t(2);
                    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
                    v[0] = 1.0;
                    int o = t.measure(prep, rng).outcome;
                    project(v, prep, 2, o);
                    Eigen::VectorXcd w = v;
                    double plus = project(w, q, 2, 1);
                    auto peek = t.peek(q);
                    if (std::abs(plus - 0.5) < 1e-9) {
                        EXPECT_FALSE(peek);
                    } else {
                        ASSERT_TRUE(peek);
                        EXPECT_EQ(*peek, plus > 0.5 ? 1 : -1);
                    }
                }
            }
        }
    }
}

TEST(Tableau, RandomSequencesAgreeWithDense) {
    for (uint64_t seed = 1; seed <= 20; seed++) {
        check_against_dense(4, seed, 40);
    }
}

TEST(Tableau, RepeatedMeasurementIsStable) {
    Rng rng(9);
    Tableau t(3);
    PauliString p = PauliString::parse("X0 Y1 Z2");
    auto first = t.measure(p, rng);
    EXPECT_FALSE(first.deterministic);
    for (int k = 0; k < 5; k++) {
        auto again = t.measure(p, rng);
        EXPECT_TRUE(again.deterministic);
        EXPECT_EQ(again.outcome, first.outcome);
    }
}

TEST(Tableau, ForcedOutcomes) {
    Rng rng(1);
    Tableau t(2);
    EXPECT_EQ(t.measure(PauliString::parse("X0"), rng, -1).outcome, -1);
    EXPECT_EQ(t.peek(PauliString::parse("X0")), -1);
    EXPECT_THROW(t.measure(PauliString::parse("X0"), rng, 1), ZeroProbabilityError);
    EXPECT_THROW(t.measure(PauliString::parse("Z1"), rng, -1), ZeroProbabilityError);
}

TEST(Tableau, SerializeRoundTrip) {
    Rng rng(2);
    Tableau t(5);
    for (const char *s : {"X0 X1", "Y2 Z3", "X4 Z0"}) {
        t.measure(PauliString::parse(s), rng);
    }
    Tableau u = Tableau::deserialize(t.serialize());
    EXPECT_EQ(u, t);
    EXPECT_THROW(Tableau::deserialize("garbage"), Error);
}

TEST(Tableau, RejectsNonHermitianAndOutOfRange) {
    Rng rng(1);
    Tableau t(2);
    EXPECT_THROW(t.measure(PauliString::parse("i·X0"), rng), Error);
    EXPECT_THROW(t.measure(PauliString::parse("X5"), rng), Error);
}
