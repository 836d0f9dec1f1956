// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "qd/error.hpp"

namespace qd {

// Finite group presented by its Cayley table. Element 0 need not be the
// identity; the identity is detected at build time.
class FiniteGroup {
  public:
    // Validates the table (associativity, two-sided identity, inverses) and
    // throws Error{NotAssociative|NoIdentity|NoInverse} naming the violator.
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

    int order() const { return n_; }
    int identity() const { return e_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
    bool is_abelian() const;

    const std::vector<int>& flat_table() const { return table_; }
    std::string to_table_text() const;

    FiniteGroup() = default;  // empty placeholder; real instances via from_table

  private:
    int n_ = 0;
    int e_ = 0;
    std::vector<int> table_;  // row-major n x n
    std::vector<int> inv_;
};

// Conjugacy class with the deterministic iterator convention:
// representative = minimal element index, q_i = minimal solution of
// q r q^-1 = c_i (the representative itself gets q = identity).
struct ConjugacyClass {
    int class_id = 0;
    std::vector<int> elements;   // ascending element index; elements[i] = c_i
    int representative = 0;      // r_C = elements.front()
    std::vector<int> iterators;  // q_i with q_i r q_i^-1 = c_i
};

struct Centralizer {
    int class_id = 0;
    std::vector<int> elements;       // subset of G, ascending
    std::vector<int> index_in_sub;   // size |G|, -1 if not a member
    FiniteGroup group;               // embedded Cayley table
};

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);
Centralizer centralizer(const FiniteGroup& g, const ConjugacyClass& cls);

// Class/position lookup: for each element, which class and which slot i.
struct ClassIndex {
    std::vector<int> class_of;  // element -> class_id
    std::vector<int> pos_of;    // element -> i with c_i = element
};
ClassIndex class_index(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes);

// Built-in catalog: "trivial", "Z2".."Z8", "S3", "S4", "D4", "Q8".
FiniteGroup catalog_group(const std::string& name);
std::vector<std::string> catalog_names();

// Text format: line 1 = n, then n lines of n space-separated 0-based indices.
FiniteGroup parse_group_table(const std::string& text);

}  // namespace qd
