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
#include "twistcode/lattice.h"
#include "twistcode/pauli.h"

using namespace twistcode;

TEST(Pauli, XTimesZIsMinusIY) {
    PauliString p = PauliString::parse("X1") * PauliString::parse("Z1");
    EXPECT_EQ(p, PauliString({{1, Letter::Y}}, Phase::minus_i()));
    EXPECT_EQ(p.str(), "-i·Y1");
}

TEST(Pauli, SelfInverse) {
    PauliString p = PauliString::parse("X1") * PauliString::parse("X1");
    EXPECT_TRUE(p.is_identity_up_to_phase());
    EXPECT_EQ(p.phase(), Phase::one());
}

TEST(Pauli, TwoSiteProductMatchesMatrices) {
    PauliString a = PauliString::parse("X1 Z2");
    PauliString b = PauliString::parse("Z1 X2");
    PauliString ab = a * b;
    EXPECT_EQ(ab, PauliString::parse("Y1 Y2"));
    EXPECT_TRUE((oracle::pauli(a, 3) * oracle::pauli(b, 3) - oracle::pauli(ab, 3)).norm() < 1e-12);
}

TEST(Pauli, CommutationExamples) {
    EXPECT_FALSE(commutes(PauliString::parse("X1"), PauliString::parse("Z1")));
    EXPECT_TRUE(commutes(PauliString::parse("X1"), PauliString::parse("Z2")));
}

TEST(Pauli, NeighbouringPlaquettesCommute) {
    TwistLattice lat = build_lattice(6, 4, {});
    auto a = lat.plaquette_at(1, 1);
    auto b = lat.plaquette_at(1, 2);
    ASSERT_TRUE(a && b);
    size_t shared = 0;
    for (SiteId s : lat.plaquette(*a).sites) {
        for (SiteId t : lat.plaquette(*b).sites) {
            shared += s == t;
        }
    }
    EXPECT_EQ(shared, 2u);
    EXPECT_TRUE(commutes(lat.stabilizer(*a), lat.stabilizer(*b)));
}

TEST(Pauli, SingleSiteTableExhaustive) {
    const Letter all[] = {Letter::I, Letter::X, Letter::Y, Letter::Z};
    for (Letter a : all) {
        for (Letter b : all) {
            PauliString p = PauliString::single(0, a) * PauliString::single(0, b);
            oracle::M want = oracle::single(a) * oracle::single(b);
            EXPECT_LT((oracle::pauli(p, 1) - want).norm(), 1e-12) << letter_char(a) << letter_char(b);
        }
    }
}

TEST(Pauli, RandomProductsAgreeWithKroneckerOracle) {
    Rng rng(7);
    for (int t = 0; t < 300; t++) {
        PauliString p = oracle::random_pauli(rng, 4);
        PauliString q = oracle::random_pauli(rng, 4);
        oracle::M mp = oracle::pauli(p, 4);
        oracle::M mq = oracle::pauli(q, 4);
        EXPECT_LT((oracle::pauli(p * q, 4) - mp * mq).norm(), 1e-12);
        bool c = (mp * mq - mq * mp).norm() < 1e-12;
        EXPECT_EQ(commutes(p, q), c);
        EXPECT_EQ(multiply(p, q), p * q);
    }
}

TEST(Pauli, AssociativeAndHermiticity) {
    Rng rng(11);
    for (int t = 0; t < 200; t++) {
        PauliString p = oracle::random_pauli(rng, 6);
        PauliString q = oracle::random_pauli(rng, 6);
        PauliString r = oracle::random_pauli(rng, 6);
        EXPECT_EQ((p * q) * r, p * (q * r));
        oracle::M m = oracle::pauli(p, 6);
        EXPECT_EQ(p.is_hermitian(), (m - m.adjoint()).norm() < 1e-12);
    }
}

TEST(Pauli, ParseRoundTrip) {
    for (const char *s : {"i·X12 Y11 Y10 Z9 X20 Z19", "-X13 Y12 Y11 Z10 X18 Z19", "-i·Y0", "Z4"}) {
        PauliString p = PauliString::parse(s);
        EXPECT_EQ(PauliString::parse(p.str()), p);
    }
    PauliString p = PauliString::parse("i·X12 Y11 Y10 Z9 X20 Z19");
    EXPECT_EQ(p.str_in_order({12, 11, 10, 9, 20, 19}), "i·X12 Y11 Y10 Z9 X20 Z19");
    EXPECT_EQ(p.weight(), 6u);
    EXPECT_EQ(p.phase(), Phase::i());
}

TEST(Pauli, ParseRejectsJunk) {
    EXPECT_THROW(PauliString::parse("Q3"), Error);
    EXPECT_THROW(PauliString::parse("X1 Z1"), Error);
    EXPECT_THROW(PauliString::parse("X"), Error);
}

TEST(Pauli, PhasePrefixes) {
    EXPECT_EQ(Phase::one().prefix(), "");
    EXPECT_EQ(Phase::i().prefix(), "i·");
    EXPECT_EQ(Phase::minus_one().prefix(), "-");
    EXPECT_EQ(Phase::minus_i().prefix(), "-i·");
    EXPECT_EQ(Phase::i() * Phase::i(), Phase::minus_one());
    EXPECT_EQ(Phase::i().conj(), Phase::minus_i());
}
