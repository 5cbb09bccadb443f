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

#include "twistcode/ising.h"

#include <cmath>

#include "twistcode/errors.h"

namespace twistcode {

namespace {

constexpr Charge kCharges[] = {Charge::I, Charge::Sigma, Charge::Psi};

Charge sector_charge(Parity p) {
    return p == Parity::Even ? Charge::I : Charge::Psi;
}

Charge label_charge(int n) {
    return n == 0 ? Charge::I : Charge::Psi;
}

// Moves taking the (12)(34) tree to the given pairing.
Matrix2 word(Pairing4 p, Parity parity) {
    Charge c = sector_charge(parity);
    Matrix2 conv = Matrix2::Zero();
    Matrix2 right = Matrix2::Zero();
    for (int n = 0; n < 2; n++) {
        Charge a = label_charge(n);
        Charge b = fuse(a, c).front();
        // (12)_a (34)_b -> ((12)_a 3)_sigma 4
        FMatrix f = f_matrix(c, a, Charge::Sigma, Charge::Sigma);
        if (f.left.size() != 1 || f.right.size() != 1 || f.left[0] != Charge::Sigma || f.right[0] != b) {
            fail_invariant("unexpected fusion space in the pair tree");
        }
        conv(n, n) = f.m(0, 0);
        right(n, n) = r_symbol(b, Charge::Sigma, Charge::Sigma);
    }
    Matrix2 mid = conv.inverse() * b_sigma() * conv;
    switch (p) {
        case Pairing4::P12_34:
            return Matrix2::Identity();
        case Pairing4::P13_24:
            return mid;
        case Pairing4::P14_23:
            return mid * right;
    }
    throw DomainError("invalid pairing");
}

}  // namespace

std::string charge_name(Charge c) {
    switch (c) {
        case Charge::I:
            return "I";
        case Charge::Sigma:
            return "sigma";
        case Charge::Psi:
            return "psi";
    }
    return "?";
}

std::vector<Charge> fuse(Charge a, Charge b) {
    if (a == Charge::I) {
        return {b};
    }
    if (b == Charge::I) {
        return {a};
    }
    if (a == Charge::Sigma && b == Charge::Sigma) {
        return {Charge::I, Charge::Psi};
    }
    if (a == Charge::Psi && b == Charge::Psi) {
        return {Charge::I};
    }
    return {Charge::Sigma};
}

bool fusion_allowed(Charge a, Charge b, Charge c) {
    for (Charge x : fuse(a, b)) {
        if (x == c) {
            return true;
        }
    }
    return false;
}

FMatrix f_matrix(Charge d, Charge a, Charge b, Charge c) {
    FMatrix f;
    for (Charge e : kCharges) {
        if (fusion_allowed(a, b, e) && fusion_allowed(e, c, d)) {
            f.left.push_back(e);
        }
        if (fusion_allowed(b, c, e) && fusion_allowed(a, e, d)) {
            f.right.push_back(e);
        }
    }
    if (f.left.size() != f.right.size()) {
        fail_invariant("F-move between spaces of different dimension");
    }
    size_t k = f.left.size();
    f.m = MatrixX::Ones(k, k);
    if (d == Charge::Sigma && a == Charge::Sigma && b == Charge::Sigma && c == Charge::Sigma) {
        f.m << 1, 1, 1, -1;
        f.m /= std::sqrt(2.0);
    } else if ((d == Charge::Psi && a == Charge::Sigma && b == Charge::Psi && c == Charge::Sigma) ||
               (d == Charge::Sigma && a == Charge::Psi && b == Charge::Sigma && c == Charge::Psi)) {
        f.m *= -1.0;
    }
    return f;
}

std::complex<double> r_symbol(Charge c, Charge a, Charge b) {
    using std::polar;
    if (!fusion_allowed(a, b, c)) {
        return 0.0;
    }
    if (a == Charge::I || b == Charge::I) {
        return 1.0;
    }
    if (a == Charge::Sigma && b == Charge::Sigma) {
        return c == Charge::I ? polar(1.0, -M_PI / 8) : polar(1.0, 3 * M_PI / 8);
    }
    if (a == Charge::Psi && b == Charge::Psi) {
        return -1.0;
    }
    return {0.0, -1.0};
}

Matrix2 r_sigma_sigma() {
    Matrix2 r = Matrix2::Zero();
    r(0, 0) = r_symbol(Charge::I, Charge::Sigma, Charge::Sigma);
    r(1, 1) = r_symbol(Charge::Psi, Charge::Sigma, Charge::Sigma);
    return r;
}

Matrix2 b_sigma() {
    Matrix2 f = f_matrix(Charge::Sigma, Charge::Sigma, Charge::Sigma, Charge::Sigma).m;
    return f.inverse() * r_sigma_sigma() * f;
}

std::string pairing_name(Pairing4 p) {
    switch (p) {
        case Pairing4::P12_34:
            return "12,34";
        case Pairing4::P13_24:
            return "13,24";
        case Pairing4::P14_23:
            return "14,23";
    }
    return "?";
}

Pairing4 parse_pairing4(const std::string &s) {
    for (Pairing4 p : {Pairing4::P12_34, Pairing4::P13_24, Pairing4::P14_23}) {
        if (pairing_name(p) == s) {
            return p;
        }
    }
    throw DomainError("invalid pairing '" + s + "'");
}

Matrix2 pair_transform(Parity parity, Pairing4 from, Pairing4 to) {
    return word(to, parity) * word(from, parity).inverse();
}

}  // namespace twistcode
