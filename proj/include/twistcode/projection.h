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

#ifndef TWISTCODE_PROJECTION_H
#define TWISTCODE_PROJECTION_H

#include <utility>
#include <vector>

#include "twistcode/dense.h"
#include "twistcode/lattice.h"

namespace twistcode {

enum class Flavor : uint8_t { A = 0, B = 1, C = 2, D = 3 };

// u^{ac}_{mn} = i gamma^a_m gamma^c_n, u^{bd}_{mn} = i gamma^b_m gamma^d_n.
struct Link {
    enum class Type : uint8_t { AC, BD };
    uint32_t m;
    uint32_t n;
    Type type;
};

using FockOperator = SparseOp;

constexpr size_t kMaxClusterSites = 5;

// Four Majoranas per site, two fermions psi_alpha = (g^a + i g^d)/2 and
// psi_beta = (g^c + i g^b)/2 per site, ordered site-major.
class MajoranaCluster {
   public:
    explicit MajoranaCluster(size_t sites);

    size_t sites() const { return sites_; }
    size_t dim() const { return size_t{1} << (2 * sites_); }
    const FockOperator &gamma(uint32_t site, Flavor f) const;
    FockOperator bilinear(uint32_t m, Flavor f, uint32_t n, Flavor g) const;
    FockOperator link(const Link &l) const;
    // D_n = g^a g^b g^c g^d.
    FockOperator parity(uint32_t site) const;
    FockOperator identity() const;
    // Projector onto D_n = +1 for every n.
    FockOperator parity_projector() const;
    // Columns: effective spin basis states; |dn> = psi_alpha^dag psi_beta^dag |00>.
    const SparseOp &embedding() const { return embed_; }

    bool commutes_with_parities(const FockOperator &op, double tol = 1e-12) const;

   private:
    size_t sites_;
    std::vector<FockOperator> gammas_;
    SparseOp embed_;
};

FockOperator build_majorana_plaquette(const MajoranaCluster &cl, PlaquetteKind kind,
                                      const std::vector<uint32_t> &sites);

// Compression onto the even-parity subspace in the effective spin basis.
Matrix project_to_spins(const MajoranaCluster &cl, const FockOperator &op);

// i g^b_{first} g^d_{second} times the ordered product of the chain's links.
FockOperator string_parity(const MajoranaCluster &cl, const std::vector<Link> &chain,
                           std::pair<uint32_t, uint32_t> endpoints);

// Jordan-Wigner parity of the endpoint modes on a serpentine width x height
// mini-lattice.
PauliString mini_lattice_parity(int width, int height, std::pair<uint32_t, uint32_t> endpoints);

// Dressed parity on a width x height mini-lattice (at most 5 sites) must be
// physical and project onto the Jordan-Wigner parity of the matching modes.
bool verify_string_parity(const std::vector<Link> &chain, std::pair<uint32_t, uint32_t> endpoints, int width = 2,
                          int height = 2);

}  // namespace twistcode

#endif
