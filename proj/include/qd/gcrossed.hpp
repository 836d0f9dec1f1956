// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qd/group.hpp"

namespace qd {

// Finite abelian coefficient group with a designated +/-1 embedding and an
// action of the symmetry group by automorphisms fixing +/-1. Values are exact
// group elements (roots of unity by exponent, the t-group by a 2-bit code).
struct CoefficientGroup {
    std::string name;
    int size = 1;
    int one = 0;
    int minus_one = 0;
    std::vector<int> mul;     // size x size, row-major
    std::vector<int> inv;
    std::vector<std::vector<int>> action;  // per symmetry element, a permutation
    std::vector<std::string> value_names;

    int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * size + b]; }
    int inverse(int a) const { return inv[a]; }
    int act(int g, int a) const { return action[g][a]; }

    // mu_N (N-th roots of unity by exponent), trivial symmetry action.
    // minus_one requires even N.
    static CoefficientGroup roots_of_unity(int n, int sym_order);
    // {1, -1, t, -t} with t^2 = 1; the nontrivial Z2 symmetry element sends t -> -t.
    static CoefficientGroup t_group(const FiniteGroup& sym);

    void verify(const FiniteGroup& sym) const;  // abelian, action by automorphisms fixing +/-1
};

// Pointed G-crossed skeletal data: G-graded invertible labels with fusion,
// label action, and F/R/eta/mu values in the coefficient group.
struct GCrossedSkeleton {
    FiniteGroup sym;
    CoefficientGroup coeff;
    int nlabels = 0;
    std::vector<std::string> label_names;
    std::vector<int> grading;              // label -> sym element
    std::vector<std::vector<int>> fuse;    // (i,j) -> ij
    std::vector<std::vector<int>> act;     // (g,i) -> g(i)
    std::vector<std::vector<std::vector<int>>> f;          // F(i,j,k)
    std::vector<std::vector<int>> r;                       // R(i,j)
    std::vector<std::vector<std::vector<int>>> eta;        // eta(g,h)_i
    std::vector<std::vector<std::vector<int>>> mu;         // mu_g(i,j)

    int unit_label() const;
    // Structural invariants: grading/fusion/action compatibility, associative
    // pointed fusion, strict unit (F with a unit argument equals 1).
    void verify_structure() const;
};

struct CoherenceReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> violations;  // first few, formatted tuples
    bool pass() const { return violations.empty(); }
};

CoherenceReport pentagon_check(const GCrossedSkeleton& s);
CoherenceReport eta_check(const GCrossedSkeleton& s);
CoherenceReport mu_check(const GCrossedSkeleton& s);
// Both heptagon equations, all admissible tuples.
CoherenceReport heptagon_check(const GCrossedSkeleton& s);

// Serial reference evaluators (identical verdicts; kept for kernel testing).
CoherenceReport pentagon_check_serial(const GCrossedSkeleton& s);

// 3-cochains on a small group valued in mu_N, by exponent.
struct Cochain3 {
    int n = 1;                                         // mu_N
    std::vector<std::vector<std::vector<int>>> v;      // exponent per (a,b,c)
};
struct Cochain2 {
    int n = 1;
    std::vector<std::vector<int>> v;
};

Cochain3 coboundary(const FiniteGroup& g, const Cochain2& beta);
Cochain3 cochain_mul(const Cochain3& a, const Cochain3& b);
bool is_cocycle(const FiniteGroup& g, const Cochain3& f);

struct CocycleClass {
    bool trivial = false;
    std::optional<Cochain2> witness;  // coboundary preimage when trivial
    std::size_t candidates_checked = 0;
};
// Brute-force coboundary search; throws NotACocycle if the cocycle condition
// fails. Searches all 2-cochains when feasible, else all normalized ones.
CocycleClass cocycle_class(const FiniteGroup& g, const Cochain3& f);

std::string skeleton_to_json(const GCrossedSkeleton& s);
GCrossedSkeleton skeleton_from_json(const std::string& text);

}  // namespace qd
