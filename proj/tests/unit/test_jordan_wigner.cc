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

#include <algorithm>
#include <gtest/gtest.h>

#include "twistcode/errors.h"
#include "twistcode/jordan_wigner.h"
#include "twistcode/lattice.h"

using namespace twistcode;

namespace {

MajoranaMode ga(SiteId s) {
    return {s, MajoranaKind::A};
}
MajoranaMode gb(SiteId s) {
    return {s, MajoranaKind::B};
}

std::vector<SiteId> unpaired_sites(const ModeClassification &c) {
    std::vector<SiteId> out;
    for (const auto &m : c.unpaired) {
        out.push_back(m.site);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SiteId> twist_sites(const TwistLattice &lat) {
    std::vector<SiteId> out;
    for (const auto &t : lat.twists()) {
        out.push_back(t.site);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(JordanWigner, YIsIGammaBGammaA) {
    TwistLattice lat = build_lattice(6, 4, {});
    JWPath path = JWPath::serpentine(lat);
    for (SiteId s : {0u, 7u, 15u}) {
        MajoranaMonomial m = jw_map(PauliString::single(s, Letter::Y), path);
        EXPECT_EQ(m, MajoranaMonomial::canonical({gb(s), ga(s)}, Phase::i(), path));
        EXPECT_EQ(majorana_to_spin(m, path), PauliString::single(s, Letter::Y));
    }
}

TEST(JordanWigner, FirstSiteHasNoString) {
    TwistLattice lat = build_lattice(6, 4, {});
    JWPath path = JWPath::serpentine(lat);
    SiteId first = path.order().front();
    EXPECT_EQ(jw_map(PauliString::single(first, Letter::X), path),
              MajoranaMonomial::canonical({gb(first)}, Phase::one(), path));
    EXPECT_EQ(jw_map(PauliString::single(first, Letter::Z), path),
              MajoranaMonomial::canonical({ga(first)}, Phase::one(), path));
    // The next site on the path carries one Y of string.
    SiteId second = path.order()[1];
    EXPECT_EQ(majorana_to_spin(MajoranaMonomial::canonical({gb(second)}, Phase::one(), path), path),
              PauliString({{first, Letter::Y}, {second, Letter::X}}));
}

TEST(JordanWigner, ClockwiseSquareIsBTypePairProduct) {
    TwistLattice lat = build_lattice(8, 6, {});
    JWPath path = JWPath::serpentine(lat);
    size_t checked = 0;
    for (const auto &p : lat.plaquettes()) {
        if (p.orientation != Orientation::Clockwise || p.row == 0 || lat.on_boundary(p.sites[0])) {
            continue;
        }
        // corners 1..4 = TR, BR, BL, TL
        SiteId c1 = p.sites[0], c2 = p.sites[1], c3 = p.sites[2], c4 = p.sites[3];
        MajoranaMonomial want = MajoranaMonomial::canonical({gb(c1), gb(c4)}, Phase::i(), path)
                                    .times(MajoranaMonomial::canonical({gb(c3), gb(c2)}, Phase::i(), path), path);
        EXPECT_EQ(jw_map(lat.stabilizer(p.id), path), want) << "plaquette " << p.id;
        checked++;
    }
    EXPECT_GT(checked, 0u);
}

TEST(JordanWigner, EveryPlaquetteImageIsPairProduct) {
    for (auto lat : {build_lattice(8, 6, {}), build_lattice(8, 6, {{1, 1, 4}}),
                     build_lattice(10, 6, {{1, 1, 2}, {1, 5, 6}, {3, 1, 2}})}) {
        JWPath path = JWPath::serpentine(lat);
        for (const auto &p : lat.plaquettes()) {
            EXPECT_TRUE(is_pair_product(jw_map(lat.stabilizer(p.id), path))) << p.id;
        }
    }
}

TEST(JordanWigner, TwistFreeHasNoUnpairedBulkModes) {
    TwistLattice lat = build_lattice(8, 6, {});
    EXPECT_TRUE(classify_modes(lat, JWPath::serpentine(lat)).unpaired.empty());
}

TEST(JordanWigner, OnePairTwoUnpairedModesAtTwists) {
    TwistLattice lat = build_lattice(8, 6, {{1, 1, 4}});
    ModeClassification c = classify_modes(lat, JWPath::serpentine(lat));
    ASSERT_EQ(c.unpaired.size(), 2u);
    EXPECT_EQ(unpaired_sites(c), twist_sites(lat));
    EXPECT_EQ(c.unpaired[0].str(), "ga13");
    EXPECT_EQ(c.unpaired[1].str(), "ga18");
}

TEST(JordanWigner, TwoPairsFourUnpairedModes) {
    TwistLattice lat = build_lattice(10, 6, {{1, 1, 2}, {1, 5, 6}});
    ModeClassification c = classify_modes(lat, JWPath::serpentine(lat));
    EXPECT_EQ(c.unpaired.size(), 4u);
    EXPECT_EQ(unpaired_sites(c), twist_sites(lat));
}

TEST(JordanWigner, UnpairedCountIndependentOfPath) {
    TwistLattice lat = build_lattice(8, 6, {{1, 1, 4}});
    const int w = lat.width(), h = lat.height();
    std::vector<SiteId> mirrored, row_major, bottom_up;
    for (int r = 0; r < h; r++) {
        for (int k = 0; k < w; k++) {
            mirrored.push_back(lat.site(r, (r % 2 == 1) ? k : w - 1 - k));
            row_major.push_back(lat.site(r, k));
            bottom_up.push_back(lat.site(h - 1 - r, (r % 2 == 0) ? k : w - 1 - k));
        }
    }
    std::vector<SiteId> reversed = JWPath::serpentine(lat).order();
    std::reverse(reversed.begin(), reversed.end());
    for (const auto &order : {mirrored, row_major, bottom_up, reversed}) {
        ModeClassification c = classify_modes(lat, JWPath::from_order(lat, order));
        EXPECT_EQ(c.unpaired.size(), 2u);
        EXPECT_EQ(unpaired_sites(c), twist_sites(lat));
    }
}

TEST(JordanWigner, PathAdjacentModesGiveWeightTwoString) {
    JWPath path = JWPath::bare({0, 1, 2, 3});
    PauliString p = mode_parity(gb(1), gb(2), path);
    EXPECT_EQ(p.weight(), 2u);
    EXPECT_EQ(p.at(1), Letter::Z);
    EXPECT_EQ(p.at(2), Letter::X);
    EXPECT_TRUE(p.is_hermitian());
    EXPECT_EQ(p, PauliString::parse("-Z1 X2"));
    EXPECT_EQ(mode_parity(gb(2), gb(1), path), p);
}

TEST(JordanWigner, SinglePairParityHasStringShape) {
    TwistLattice lat = build_lattice(8, 6, {{1, 1, 4}});
    JWPath path = pair_path(lat, 0);
    PauliString p = parity_operator(lat, path, 0);
    std::vector<SiteId> support;
    for (SiteId s : path.order()) {
        if (p.at(s) != Letter::I) {
            support.push_back(s);
        }
    }
    ASSERT_GE(support.size(), 3u);
    // a-type modes: endpoints X then Z (b-type would give Z then X)
    EXPECT_EQ(p.at(support.front()), Letter::X);
    EXPECT_EQ(p.at(support.back()), Letter::Z);
    for (size_t k = 1; k + 1 < support.size(); k++) {
        SiteId s = support[k];
        bool substituted = path.substitution(s) != Substitution::None;
        if (!substituted) {
            EXPECT_EQ(p.at(s), Letter::Y) << s;
        } else {
            EXPECT_NE(p.at(s), Letter::Y) << s;
            EXPECT_TRUE(lat.on_boundary(s));
        }
    }
    EXPECT_EQ(p.str_in_order(path.order()), "X13 Y12 Y11 Y10 Y9 Z8 X16 Y17 Z18");
}

TEST(JordanWigner, ParityRoundTripsToTwistBilinear) {
    TwistLattice lat = build_lattice(8, 6, {{1, 1, 4}});
    JWPath path = pair_path(lat, 0);
    PauliString p = parity_operator(lat, path, 0);
    MajoranaMode m1 = twist_mode(lat, path, 0);
    MajoranaMode m2 = twist_mode(lat, path, 1);
    std::vector<MajoranaMode> f = {m1, m2};
    if (path.key(m2) < path.key(m1)) {
        std::swap(f[0], f[1]);
    }
    EXPECT_EQ(jw_map(p, path), MajoranaMonomial::canonical(f, Phase::i(), path));
}

TEST(JordanWigner, ReductionOfPlaquetteIsIdentity) {
    TwistLattice lat = build_lattice(8, 6, {{1, 1, 4}});
    for (PlaquetteId id : {0u, 8u, 11u}) {
        PauliString r = reduce_by_stabilizers(lat.stabilizer(id), lat);
        EXPECT_TRUE(r.is_identity_up_to_phase());
    }
}

TEST(JordanWigner, ReductionStaysInCoset) {
    TwistLattice lat = build_lattice(8, 6, {{1, 1, 4}});
    JWPath path = pair_path(lat, 0);
    PauliString p = parity_operator(lat, path, 0);
    PauliString r = reduce_by_stabilizers(p, lat);
    EXPECT_TRUE(in_plaquette_group(lat, r * p));
    EXPECT_LE(r.weight(), p.weight());
    EXPECT_TRUE(in_commutant(lat, p));
    EXPECT_FALSE(in_plaquette_group(lat, p));
}

TEST(JordanWigner, SubstitutionOnlyOnBoundary) {
    TwistLattice lat = build_lattice(8, 6, {});
    JWPath path = JWPath::serpentine(lat);
    EXPECT_THROW(path.substitute(lat.site(2, 3), Substitution::SwapXY), Error);
    EXPECT_NO_THROW(path.substitute(lat.site(2, 0), Substitution::SwapXY));
}
