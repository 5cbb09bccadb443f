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

#include "twistcode/projection.h"

#include <bit>
#include <cmath>

#include "twistcode/errors.h"
#include "twistcode/jordan_wigner.h"

namespace twistcode {

namespace {

double op_norm(const SparseOp &m) {
    return m.norm();
}

}  // namespace

MajoranaCluster::MajoranaCluster(size_t sites) : sites_(sites) {
    if (sites == 0 || sites > kMaxClusterSites) {
        throw SizeError("cluster limited to " + std::to_string(kMaxClusterSites) + " sites");
    }
    size_t nf = 2 * sites;
    size_t d = dim();
    std::vector<SparseOp> ann;
    for (size_t f = 0; f < nf; f++) {
        SparseOp c(d, d);
        std::vector<Eigen::Triplet<cdouble>> t;
        for (uint64_t s = 0; s < d; s++) {
            if ((s >> f) & 1) {
                int below = std::popcount(s & ((uint64_t{1} << f) - 1));
                t.emplace_back(s ^ (uint64_t{1} << f), s, (below & 1) ? -1.0 : 1.0);
            }
        }
        c.setFromTriplets(t.begin(), t.end());
        ann.push_back(c);
    }
    const cdouble mi(0, -1);
    for (size_t n = 0; n < sites; n++) {
        const SparseOp &pa = ann[2 * n];
        const SparseOp &pb = ann[2 * n + 1];
        SparseOp pad = pa.adjoint();
        SparseOp pbd = pb.adjoint();
        gammas_.push_back(pa + pad);                  // a
        gammas_.push_back(SparseOp(mi * (pb - pbd)));  // b
        gammas_.push_back(pb + pbd);                  // c
        gammas_.push_back(SparseOp(mi * (pa - pad)));  // d
    }
    size_t sd = size_t{1} << sites;
    std::vector<Eigen::Triplet<cdouble>> et;
    for (uint64_t b = 0; b < sd; b++) {
        Vector v = Vector::Zero(d);
        v[0] = 1.0;
        for (size_t n = 0; n < sites; n++) {
            if ((b >> n) & 1) {
                v = ann[2 * n].adjoint() * (ann[2 * n + 1].adjoint() * v);
            }
        }
        for (uint64_t k = 0; k < d; k++) {
            if (std::abs(v[k]) > 0.5) {
                et.emplace_back(k, b, v[k]);
            }
        }
    }
    embed_ = SparseOp(d, sd);
    embed_.setFromTriplets(et.begin(), et.end());
}

const FockOperator &MajoranaCluster::gamma(uint32_t site, Flavor f) const {
    if (site >= sites_) {
        throw DomainError("site " + std::to_string(site) + " outside the cluster");
    }
    return gammas_[4 * site + static_cast<size_t>(f)];
}

FockOperator MajoranaCluster::bilinear(uint32_t m, Flavor f, uint32_t n, Flavor g) const {
    return SparseOp(cdouble(0, 1) * (gamma(m, f) * gamma(n, g)));
}

FockOperator MajoranaCluster::link(const Link &l) const {
    if (l.type == Link::Type::AC) {
        return bilinear(l.m, Flavor::A, l.n, Flavor::C);
    }
    return bilinear(l.m, Flavor::B, l.n, Flavor::D);
}

FockOperator MajoranaCluster::parity(uint32_t site) const {
    return gamma(site, Flavor::A) * gamma(site, Flavor::B) * gamma(site, Flavor::C) * gamma(site, Flavor::D);
}

FockOperator MajoranaCluster::identity() const {
    SparseOp id(dim(), dim());
    id.setIdentity();
    return id;
}

FockOperator MajoranaCluster::parity_projector() const {
    SparseOp p = identity();
    for (uint32_t n = 0; n < sites_; n++) {
        p = p * SparseOp((identity() + parity(n)) * 0.5);
    }
    return p;
}

bool MajoranaCluster::commutes_with_parities(const FockOperator &op, double tol) const {
    for (uint32_t n = 0; n < sites_; n++) {
        SparseOp d = parity(n);
        if (op_norm(SparseOp(op * d - d * op)) > tol) {
            return false;
        }
    }
    return true;
}

FockOperator build_majorana_plaquette(const MajoranaCluster &cl, PlaquetteKind kind,
                                      const std::vector<uint32_t> &s) {
    size_t want = kind == PlaquetteKind::Square ? 4 : 5;
    if (s.size() != want) {
        throw DomainError("plaquette needs " + std::to_string(want) + " sites, got " + std::to_string(s.size()));
    }
    using F = Flavor;
    SparseOp out = cl.bilinear(s[0], F::B, s[1], F::D) * cl.bilinear(s[1], F::A, s[2], F::C) *
                   cl.bilinear(s[2], F::D, s[3], F::B);
    if (kind == PlaquetteKind::Square) {
        out = out * cl.bilinear(s[3], F::C, s[0], F::A);
    } else {
        out = out * cl.bilinear(s[3], F::C, s[4], F::A) * cl.bilinear(s[4], F::C, s[0], F::A);
    }
    return out;
}

Matrix project_to_spins(const MajoranaCluster &cl, const FockOperator &op) {
    if (!cl.commutes_with_parities(op)) {
        throw ProjectionError("operator leaves the even-parity subspace");
    }
    return Matrix(SparseOp(cl.embedding().adjoint() * op * cl.embedding()));
}

FockOperator string_parity(const MajoranaCluster &cl, const std::vector<Link> &chain,
                           std::pair<uint32_t, uint32_t> endpoints) {
    // The chain must walk from the first endpoint to the second.
    uint32_t at = endpoints.first;
    for (const auto &l : chain) {
        if (l.m == at) {
            at = l.n;
        } else if (l.n == at) {
            at = l.m;
        } else {
            throw DomainError("disconnected chain");
        }
    }
    if (!chain.empty() && at != endpoints.second) {
        throw DomainError("disconnected chain");
    }
    for (const auto &l : chain) {
        bool b_used = l.type == Link::Type::BD && l.m == endpoints.first;
        bool d_used = l.type == Link::Type::BD && l.n == endpoints.second;
        if (b_used || d_used) {
            throw DomainError("chain reuses an endpoint Majorana");
        }
    }
    SparseOp out = cl.bilinear(endpoints.first, Flavor::B, endpoints.second, Flavor::D);
    for (const auto &l : chain) {
        out = out * cl.link(l);
    }
    return out;
}

PauliString mini_lattice_parity(int width, int height, std::pair<uint32_t, uint32_t> endpoints) {
    std::vector<SiteId> order;
    for (int r = 0; r < height; r++) {
        for (int k = 0; k < width; k++) {
            order.push_back(static_cast<SiteId>(r * width + ((r % 2 == 0) ? k : width - 1 - k)));
        }
    }
    JWPath path = JWPath::bare(std::move(order));
    return mode_parity({endpoints.first, MajoranaKind::A}, {endpoints.second, MajoranaKind::B}, path);
}

bool verify_string_parity(const std::vector<Link> &chain, std::pair<uint32_t, uint32_t> endpoints, int width,
                          int height) {
    if (width < 1 || height < 1 || static_cast<size_t>(width * height) > kMaxClusterSites) {
        throw SizeError("mini-lattice limited to " + std::to_string(kMaxClusterSites) + " sites");
    }
    MajoranaCluster cl(static_cast<size_t>(width * height));
    SparseOp p = string_parity(cl, chain, endpoints);
    if (!cl.commutes_with_parities(p)) {
        return false;
    }
    Matrix spin = project_to_spins(cl, p);
    PauliString expected = mini_lattice_parity(width, height, endpoints);
    // Each interior site of the chain contributes g^c g^a = -(g^a g^c).
    if (!chain.empty() && chain.size() % 2 == 0) {
        expected.set_phase(expected.phase() * Phase::minus_one());
    }
    Matrix want = pauli_matrix(expected, cl.sites());
    return (spin - want).norm() < 1e-12;
}

}  // namespace twistcode
