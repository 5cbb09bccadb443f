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

#ifndef TWISTCODE_LOGICALS_H
#define TWISTCODE_LOGICALS_H

#include <utility>

#include "twistcode/jordan_wigner.h"
#include "twistcode/lattice.h"

namespace twistcode {

struct TwistLogicals {
    // Reduced spin form of i * gamma(t1) * gamma(t2).
    PauliString z;
    // Reduced spin form of i * gamma(edge) * gamma(t1), using the first free
    // edge mode along the path.
    PauliString x;
};

TwistLogicals twist_logicals(const TwistLattice &lat, size_t pair);

}  // namespace twistcode

#endif
