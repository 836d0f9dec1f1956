// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>

#include "qd/group.hpp"

namespace qd {

using cplx = std::complex<double>;

// Element of the quantum double D(G): sparse combination of basis elements
// (delta_s (x) g), keyed lexicographically by (s, g). All structure maps are
// exact when coefficients are exact (integer-valued doubles stay exact here).
struct DoubleElement {
    const FiniteGroup* g = nullptr;
    std::map<std::pair<int, int>, cplx> coeffs;

    void add(int s, int x, cplx c);
    DoubleElement& operator+=(const DoubleElement& o);
    DoubleElement& operator*=(cplx c);
    bool operator==(const DoubleElement& o) const { return coeffs == o.coeffs; }
};

// Element of D(G) (x) D(G).
struct DoubleTensor {
    const FiniteGroup* g = nullptr;
    std::map<std::array<int, 4>, cplx> coeffs;  // (s1,g1,s2,g2)

    void add(std::array<int, 4> k, cplx c);
    bool operator==(const DoubleTensor& o) const { return coeffs == o.coeffs; }
};

// Triple tensors appear only inside the quasitriangularity checks.
struct DoubleTriple {
    const FiniteGroup* g = nullptr;
    std::map<std::array<int, 6>, cplx> coeffs;

    void add(std::array<int, 6> k, cplx c);
    bool operator==(const DoubleTriple& o) const { return coeffs == o.coeffs; }
};

DoubleElement double_basis(const FiniteGroup& g, int s, int x, cplx c = 1.0);
DoubleElement double_unit(const FiniteGroup& g);  // sum_s delta_s (x) e

DoubleElement multiply(const DoubleElement& a, const DoubleElement& b);
DoubleTensor comultiply(const DoubleElement& a);
cplx counit(const DoubleElement& a);
DoubleElement antipode(const DoubleElement& a);
DoubleElement star(const DoubleElement& a);

DoubleTensor tensor_product(const DoubleElement& a, const DoubleElement& b);
DoubleTensor multiply(const DoubleTensor& a, const DoubleTensor& b);
DoubleTriple multiply(const DoubleTriple& a, const DoubleTriple& b);

DoubleTensor r_matrix(const FiniteGroup& g);
// Solves R R^-1 = unit (x) unit in the sparse basis.
DoubleTensor r_inverse(const FiniteGroup& g);

struct QuasitriangularReport {
    bool coproduct_right = false;   // (Delta (x) Id)(R) == R13 R23
    bool coproduct_left = false;    // (Id (x) Delta)(R) == R13 R12
    bool opposite_coproduct = false;  // Delta^op(x) R == R Delta(x) on all basis x
    bool all() const { return coproduct_right && coproduct_left && opposite_coproduct; }
};
QuasitriangularReport verify_quasitriangular(const FiniteGroup& g);

struct HopfAxiomReport {
    bool assoc = false;
    bool coassoc = false;
    bool counit_laws = false;
    bool antipode = false;        // mu (S (x) Id) Delta == eta eps == mu (Id (x) S) Delta
    bool star_involutive = false;
    bool star_antimultiplicative = false;
    bool all() const {
        return assoc && coassoc && counit_laws && antipode && star_involutive &&
               star_antimultiplicative;
    }
};
// Exact checks on every basis element (pairs/triples as required).
HopfAxiomReport verify_hopf_axioms(const FiniteGroup& g);

// JSON as a list of {s, g, re, im}, ordered by (s, g).
std::string double_to_json(const DoubleElement& a);
DoubleElement double_from_json(const FiniteGroup& g, const std::string& text);

}  // namespace qd
