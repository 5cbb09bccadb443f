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

#include "twistcode/logicals.h"

#include "twistcode/errors.h"

namespace twistcode {

TwistLogicals twist_logicals(const TwistLattice &lat, size_t pair) {
    JWPath path = pair_path(lat, pair);
    TwistLogicals out;
    out.z = reduce_by_stabilizers(parity_operator(lat, path, pair), lat);
    ModeClassification c = classify_modes(lat, path);
    if (c.edge.empty()) {
        fail_invariant("no free edge mode");
    }
    MajoranaMode edge = c.edge.front();
    MajoranaMode t1 = twist_mode(lat, path, lat.pair_twists(pair).first);
    out.x = reduce_by_stabilizers(mode_parity(edge, t1, path), lat);
    if (commutes(out.z, out.x) || in_plaquette_group(lat, out.z) || in_plaquette_group(lat, out.x)) {
        fail_invariant("twist logicals of pair " + std::to_string(pair));
    }
    return out;
}

}  // namespace twistcode
