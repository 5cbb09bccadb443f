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

#include <cmath>

#include "twistcode/dense.h"
#include "twistcode/errors.h"
#include "twistcode/topo_state.h"

using namespace twistcode;

namespace {

using C = std::complex<double>;

std::vector<std::vector<AnyonPair>> all_pairings(int n) {
    std::vector<std::vector<AnyonPair>> out;
    std::function<void(std::vector<int>, std::vector<AnyonPair>)> rec = [&](std::vector<int> left,
                                                                          std::vector<AnyonPair> acc) {
        if (left.empty()) {
            out.push_back(make_pairing(n, acc));
            return;
        }
        int a = left.front();
        for (size_t k = 1; k < left.size(); k++) {
            std::vector<int> rest;
            for (size_t j = 1; j < left.size(); j++) {
                if (j != k) {
                    rest.push_back(left[j]);
                }
            }
            auto next = acc;
            next.push_back({a, left[k]});
            rec(rest, next);
        }
    };
    std::vector<int> all;
    for (int a = 1; a <= n; a++) {
        all.push_back(a);
    }
    rec(all, {});
    return out;
}

Eigen::VectorXcd random_amplitudes(Rng &rng, int size) {
    Eigen::VectorXcd v(size);
    for (int k = 0; k < size; k++) {
        v[k] = C(uniform01(rng) - 0.5, uniform01(rng) - 0.5);
    }
    return v.normalized();
}

}  // namespace

TEST(TopoState, FifteenSixAnyonPairings) {
    EXPECT_EQ(all_pairings(6).size(), 15u);
    EXPECT_EQ(all_pairings(4).size(), 3u);
}

TEST(TopoState, BasisLabelsAreFockParities) {
    FockSpace f(6);
    for (const auto &p : all_pairings(6)) {
        for (int m = 0; m < 8; m++) {
            std::vector<int> labels = {m & 1, (m >> 1) & 1, (m >> 2) & 1};
            TopoState s = TopoState::basis(6, p, labels);
            Eigen::VectorXcd v = to_fock(s);
            EXPECT_NEAR(v.norm(), 1.0, 1e-12);
            for (size_t k = 0; k < 3; k++) {
                auto q = p[k];
                double e = v.dot(f.pair_parity(q.first - 1, q.second - 1) * v).real();
                double want = label_sign(p, q) * (labels[k] ? -1.0 : 1.0);
                EXPECT_NEAR(e, want, 1e-12);
            }
        }
    }
}

TEST(TopoState, TransformsAreRouteIndependent) {
    Rng rng(12);
    auto ps = all_pairings(6);
    TopoState s = TopoState::from_amplitudes(6, standard_pairing(6), random_amplitudes(rng, 8));
    Eigen::VectorXcd ref = to_fock(s);
    for (const auto &a : ps) {
        TopoState sa = transform_state(s, a);
        EXPECT_NEAR(std::abs(sa.norm() - 1.0), 0.0, 1e-12);
        EXPECT_LT((to_fock(sa) - ref).norm(), 1e-12);
        for (const auto &b : ps) {
            TopoState sb = transform_state(sa, b);
            EXPECT_LT((to_fock(sb) - ref).norm(), 1e-12);
        }
    }
}

TEST(TopoState, BilinearsBraidsAndProbabilitiesMatchFock) {
    FockSpace f(6);
    Rng rng(21);
    const C i(0, 1);
    for (const auto &p : all_pairings(6)) {
        TopoState s = TopoState::from_amplitudes(6, p, random_amplitudes(rng, 8));
        Eigen::VectorXcd v = to_fock(s);
        for (int a = 1; a <= 6; a++) {
            for (int b = a + 1; b <= 6; b++) {
                Eigen::VectorXcd bil = i * f.gamma(a - 1) * f.gamma(b - 1) * v;
                EXPECT_LT((to_fock(apply_bilinear(s, a, b)) - bil).norm(), 1e-12);
                Eigen::VectorXcd br = f.braid(a - 1, b - 1) * v;
                EXPECT_LT((to_fock(apply_braid(s, a, b)) - br).norm(), 1e-12);
            }
        }
        for (const auto &q : p) {
            double p0 = f.probability_zero(v, q.first - 1, q.second - 1);
            double want = label_sign(p, q) > 0 ? p0 : 1.0 - p0;
            EXPECT_NEAR(pair_probability(s, q, 0), want, 1e-12);
        }
    }
}

TEST(TopoState, MeasurementMatchesFockProjection) {
    FockSpace f(6);
    Rng rng(5);
    for (const auto &p : all_pairings(6)) {
        TopoState s = TopoState::from_amplitudes(6, p, random_amplitudes(rng, 8));
        for (const auto &q : p) {
            for (int n = 0; n < 2; n++) {
                PairOutcome o = measure_pair(s, q, rng, n);
                EXPECT_EQ(o.n, n);
                Eigen::VectorXcd v = to_fock(s);
                Eigen::VectorXcd proj =
                    0.5 * (v + label_sign(p, q) * (n ? -1.0 : 1.0) * (f.pair_parity(q.first - 1, q.second - 1) * v));
                EXPECT_NEAR(o.probability, proj.squaredNorm(), 1e-12);
                EXPECT_LT((to_fock(o.state) - proj.normalized()).norm(), 1e-12);
            }
        }
    }
}

TEST(TopoState, DefiniteLabelMeasuresWithCertainty) {
    Rng rng(1);
    TopoState s = TopoState::basis(4, standard_pairing(4), {1, 0});
    PairOutcome o = measure_pair(s, {1, 2}, rng);
    EXPECT_EQ(o.n, 1);
    EXPECT_NEAR(o.probability, 1.0, 1e-15);
    EXPECT_THROW(measure_pair(s, {1, 2}, rng, 0), ZeroProbabilityError);
    EXPECT_THROW(measure_pair(s, {1, 3}, rng), DomainError);
    EXPECT_EQ(s.sector(), Sector::Odd);
}

TEST(TopoState, MeasuringThirteenOnInitialState) {
    const C alpha(0.6, 0.0), beta(0.0, 0.8);
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(4);
    amp[0] = alpha;  // |0>_12 |0>_34
    amp[2] = beta;   // |0>_12 |1>_34
    TopoState s = TopoState::from_amplitudes(4, standard_pairing(4), amp);
    EXPECT_EQ(s.sector(), Sector::Mixed);
    TopoState t = transform_state(s, {{1, 3}, {2, 4}});
    const C ph = std::polar(1.0, -M_PI / 8) / std::sqrt(2.0);
    const C i(0, 1);
    EXPECT_LT(std::abs(t.amplitude({0, 0}) - ph * alpha), 1e-12);
    EXPECT_LT(std::abs(t.amplitude({1, 1}) - ph * i * alpha), 1e-12);
    EXPECT_LT(std::abs(t.amplitude({0, 1}) - ph * beta), 1e-12);
    EXPECT_LT(std::abs(t.amplitude({1, 0}) - ph * i * beta), 1e-12);
    EXPECT_NEAR(pair_probability(t, {1, 3}, 0), 0.5, 1e-12);
    EXPECT_NEAR(pair_probability(t, {1, 3}, 1), 0.5, 1e-12);

    Rng rng(1);
    PairOutcome zero = measure_pair(t, {1, 3}, rng, 0);
    const C e = std::polar(1.0, -M_PI / 8);
    EXPECT_LT(std::abs(zero.state.amplitude({0, 0}) - e * alpha), 1e-12);
    EXPECT_LT(std::abs(zero.state.amplitude({0, 1}) - e * beta), 1e-12);
    PairOutcome one = measure_pair(t, {1, 3}, rng, 1);
    EXPECT_LT(std::abs(one.state.amplitude({1, 1}) - i * e * alpha), 1e-12);
    EXPECT_LT(std::abs(one.state.amplitude({1, 0}) - i * e * beta), 1e-12);
}

TEST(TopoState, PairingValidation) {
    EXPECT_THROW(make_pairing(6, {{1, 2}, {3, 4}}), DomainError);
    EXPECT_THROW(make_pairing(4, {{1, 2}, {2, 3}}), DomainError);
    EXPECT_THROW(make_pairing(5, {{1, 2}, {3, 4}}), DomainError);
    EXPECT_EQ(make_pairing(4, {{4, 2}, {3, 1}}), (std::vector<AnyonPair>{{1, 3}, {2, 4}}));
    EXPECT_THROW(TopoState::from_amplitudes(4, standard_pairing(4), Eigen::VectorXcd::Ones(4)), DomainError);
    EXPECT_THROW(TopoState::basis(4, standard_pairing(4), {2, 0}), DomainError);
}

TEST(TopoState, PairingWithAndInner) {
    Rng rng(3);
    TopoState s = TopoState::from_amplitudes(6, standard_pairing(6), random_amplitudes(rng, 8));
    auto p = pairing_with(s, {3, 5});
    bool has = false;
    for (const auto &q : p) {
        has |= q == AnyonPair{3, 5};
    }
    EXPECT_TRUE(has);
    TopoState t = transform_state(s, p);
    EXPECT_NEAR(fidelity_up_to_phase(s, t), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(inner(s, t) - 1.0), 0.0, 1e-12);
}
