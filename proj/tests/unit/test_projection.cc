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
#include "twistcode/dense.h"
#include "twistcode/errors.h"
#include "twistcode/projection.h"

using namespace twistcode;

namespace {

double norm(const SparseOp &m) {
    return Matrix(m).norm();
}

}  // namespace

TEST(Projection, SquareIsHermitianInvolution) {
    MajoranaCluster cl(4);
    SparseOp a = build_majorana_plaquette(cl, PlaquetteKind::Square, {0, 1, 2, 3});
    EXPECT_LT(norm(SparseOp(a * a) - cl.identity()), 1e-12);
    EXPECT_LT(norm(SparseOp(a - SparseOp(a.adjoint()))), 1e-12);
}

TEST(Projection, PentagonOmitsTwistGammaB) {
    MajoranaCluster cl(5);
    SparseOp a = build_majorana_plaquette(cl, PlaquetteKind::Pentagon, {0, 1, 2, 3, 4});
    const SparseOp &g = cl.gamma(4, Flavor::B);
    EXPECT_LT(norm(SparseOp(a * g - g * a)), 1e-12);
    // every gamma that does appear anticommutes with it
    const SparseOp &h = cl.gamma(4, Flavor::A);
    EXPECT_LT(norm(SparseOp(a * h + h * a)), 1e-12);
    EXPECT_LT(norm(SparseOp(a * a) - cl.identity()), 1e-12);
}

TEST(Projection, ArityMismatch) {
    MajoranaCluster cl(5);
    EXPECT_THROW(build_majorana_plaquette(cl, PlaquetteKind::Pentagon, {0, 1, 2, 3}), DomainError);
    EXPECT_THROW(build_majorana_plaquette(cl, PlaquetteKind::Square, {0, 1, 2, 3, 4}), DomainError);
    EXPECT_THROW(MajoranaCluster(6), SizeError);
    EXPECT_THROW(cl.gamma(5, Flavor::A), DomainError);
}

TEST(Projection, SiteParityIsIdentityOnSpins) {
    MajoranaCluster cl(3);
    for (uint32_t n = 0; n < 3; n++) {
        Matrix m = project_to_spins(cl, cl.parity(n));
        EXPECT_LT((m - Matrix::Identity(8, 8)).norm(), 1e-12);
    }
}

TEST(Projection, SquareProjectsToSpinPlaquette) {
    MajoranaCluster cl(4);
    Matrix m = project_to_spins(cl, build_majorana_plaquette(cl, PlaquetteKind::Square, {0, 1, 2, 3}));
    EXPECT_LT((m - oracle::pauli(PauliString::parse("X0 Z1 X2 Z3"), 4)).norm(), 1e-12);
}

TEST(Projection, PentagonProjectsToSpinPentagon) {
    MajoranaCluster cl(5);
    Matrix m = project_to_spins(cl, build_majorana_plaquette(cl, PlaquetteKind::Pentagon, {0, 1, 2, 3, 4}));
    EXPECT_LT((m - oracle::pauli(PauliString::parse("X0 Z1 X2 Z3 Y4"), 5)).norm(), 1e-12);
}

TEST(Projection, SingleSiteBilinearsProjectToPaulis) {
    MajoranaCluster cl(1);
    // constant is -1 with unit-square Majoranas
    Matrix x = project_to_spins(cl, cl.bilinear(0, Flavor::A, 0, Flavor::B));
    EXPECT_LT((x + oracle::pauli(PauliString::parse("X0"), 1)).norm(), 1e-12);
}

TEST(Projection, BareBilinearRejected) {
    MajoranaCluster cl(4);
    const std::complex<double> i(0, 1);
    EXPECT_THROW(project_to_spins(cl, SparseOp(i * cl.bilinear(0, Flavor::B, 3, Flavor::D))), ProjectionError);
}

TEST(Projection, OneLinkChainIsPhysical) {
    MajoranaCluster cl(2);
    SparseOp p = string_parity(cl, {{0, 1, Link::Type::AC}}, {0, 1});
    EXPECT_TRUE(cl.commutes_with_parities(p));
    EXPECT_FALSE(cl.commutes_with_parities(cl.bilinear(0, Flavor::B, 1, Flavor::D)));
}

TEST(Projection, DressedParityMatchesJordanWigner) {
    using T = Link::Type;
    EXPECT_TRUE(verify_string_parity({{0, 1, T::AC}}, {0, 1}));
    EXPECT_TRUE(verify_string_parity({{0, 1, T::AC}, {1, 2, T::AC}}, {0, 2}, 3, 1));
    EXPECT_TRUE(verify_string_parity({{0, 1, T::AC}, {1, 2, T::AC}, {2, 3, T::AC}}, {0, 3}, 4, 1));
}

TEST(Projection, EmptyChainIsUnphysical) {
    EXPECT_FALSE(verify_string_parity({}, {0, 1}));
    EXPECT_THROW(verify_string_parity({{0, 1, Link::Type::AC}}, {0, 2}, 3, 1), DomainError);
    EXPECT_THROW(verify_string_parity({}, {0, 1}, 3, 2), SizeError);
}

TEST(Projection, EmbeddingIsIsometryOntoPhysicalSpace) {
    MajoranaCluster cl(3);
    Matrix e(cl.embedding());
    EXPECT_LT((e.adjoint() * e - Matrix::Identity(8, 8)).norm(), 1e-12);
    Matrix p(cl.parity_projector());
    EXPECT_LT((e * e.adjoint() - p).norm(), 1e-12);
}
