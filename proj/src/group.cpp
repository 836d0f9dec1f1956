// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#include "qd/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace qd {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n <= 0) fail("NoIdentity", "empty table");
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(table[r].size()) != n)
            fail("NoIdentity", "row " + std::to_string(r) + " has wrong length");
        for (int c = 0; c < n; ++c)
            if (table[r][c] < 0 || table[r][c] >= n)
                fail("NoIdentity", "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                       ") out of range");
    }

    FiniteGroup g;
    g.n_ = n;
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) g.table_[static_cast<std::size_t>(r) * n + c] = table[r][c];

    // Exactly one two-sided identity.
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = g.mul(cand, x) == x && g.mul(x, cand) == x;
        if (ok) {
            if (e >= 0) fail("NoIdentity", "two identities: " + std::to_string(e) + " and " +
                                               std::to_string(cand));
            e = cand;
        }
    }
    if (e < 0) fail("NoIdentity", "no two-sided identity element");
    g.e_ = e;

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    fail("NotAssociative", "triple (" + std::to_string(a) + "," +
                                               std::to_string(b) + "," + std::to_string(c) + ")");

    g.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == e && g.mul(b, a) == e) g.inv_[a] = b;
        if (g.inv_[a] < 0) fail("NoInverse", "element " + std::to_string(a));
    }
    return g;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::string FiniteGroup::to_table_text() const {
    std::ostringstream os;
    os << n_ << "\n";
    for (int r = 0; r < n_; ++r) {
        for (int c = 0; c < n_; ++c) os << (c ? " " : "") << mul(r, c);
        os << "\n";
    }
    return os.str();
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<ConjugacyClass> out;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::set<int> cls;
        for (int h = 0; h < n; ++h) cls.insert(g.conj(h, x));
        ConjugacyClass c;
        c.class_id = static_cast<int>(out.size());
        c.elements.assign(cls.begin(), cls.end());
        c.representative = c.elements.front();
        for (int el : c.elements) seen[el] = true;
        c.iterators.reserve(c.elements.size());
        for (int el : c.elements) {
            if (el == c.representative) {
                c.iterators.push_back(g.identity());
                continue;
            }
            int q = -1;
            for (int cand = 0; cand < n; ++cand)
                if (g.conj(cand, c.representative) == el) {
                    q = cand;
                    break;
                }
            c.iterators.push_back(q);
        }
        out.push_back(std::move(c));
    }
    return out;
}

Centralizer centralizer(const FiniteGroup& g, const ConjugacyClass& cls) {
    const int n = g.order();
    Centralizer z;
    z.class_id = cls.class_id;
    for (int m = 0; m < n; ++m)
        if (g.mul(m, cls.representative) == g.mul(cls.representative, m)) z.elements.push_back(m);
    z.index_in_sub.assign(n, -1);
    for (std::size_t i = 0; i < z.elements.size(); ++i)
        z.index_in_sub[z.elements[i]] = static_cast<int>(i);
    const int k = static_cast<int>(z.elements.size());
    std::vector<std::vector<int>> sub(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            int prod = g.mul(z.elements[a], z.elements[b]);
            int idx = z.index_in_sub[prod];
            if (idx < 0) fail("NoInverse", "centralizer not closed under product");
            sub[a][b] = idx;
        }
    z.group = FiniteGroup::from_table(sub);
    return z;
}

ClassIndex class_index(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes) {
    ClassIndex ix;
    ix.class_of.assign(g.order(), -1);
    ix.pos_of.assign(g.order(), -1);
    for (const auto& c : classes)
        for (std::size_t i = 0; i < c.elements.size(); ++i) {
            ix.class_of[c.elements[i]] = c.class_id;
            ix.pos_of[c.elements[i]] = static_cast<int>(i);
        }
    return ix;
}

namespace {

FiniteGroup cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup::from_table(t);
}

// Symmetric group S_k with elements enumerated in lexicographic order.
FiniteGroup symmetric(int k) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int n = static_cast<int>(perms.size());
    auto find = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> q(k);
            for (int i = 0; i < k; ++i) q[i] = perms[a][perms[b][i]];  // a after b
            t[a][b] = find(q);
        }
    return FiniteGroup::from_table(t);
}

// Dihedral group of the square as permutations of its 4 corners.
FiniteGroup dihedral4() {
    auto rot = [](int c) { return (c + 1) % 4; };
    auto ref = [](int c) { return (4 - c) % 4; };
    std::vector<std::vector<int>> elems;  // corner images
    for (int s = 0; s < 2; ++s)
        for (int r = 0; r < 4; ++r) {
            std::vector<int> img(4);
            for (int c = 0; c < 4; ++c) {
                int x = c;
                if (s) x = ref(x);
                for (int i = 0; i < r; ++i) x = rot(x);
                img[c] = x;
            }
            elems.push_back(img);
        }
    const int n = 8;
    auto find = [&](const std::vector<int>& q) {
        for (int i = 0; i < n; ++i)
            if (elems[i] == q) return i;
        return -1;
    };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> q(4);
            for (int c = 0; c < 4; ++c) q[c] = elems[a][elems[b][c]];
            t[a][b] = find(q);
        }
    return FiniteGroup::from_table(t);
}

// Quaternion group {1,-1,i,-i,j,-j,k,-k} in that order.
FiniteGroup quaternion8() {
    // Encode q = (sign, axis) with axis 0=1, 1=i, 2=j, 3=k.
    auto idx = [](int sign, int axis) { return axis * 2 + (sign < 0 ? 1 : 0); };
    // i*j=k, j*k=i, k*i=j
    static const int eps[4][4] = {
        // axis multiplication table: result axis, with sign via levi-civita below
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    };
    auto sgn = [](int a, int b) {
        if (a == 0 || b == 0) return 1;
        if (a == b) return -1;              // i*i = -1
        // cyclic (1,2,3) -> +, anticyclic -> -
        if ((a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1)) return 1;
        return -1;
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sa = (a % 2) ? -1 : 1, xa = a / 2;
            int sb = (b % 2) ? -1 : 1, xb = b / 2;
            int axis = eps[xa][xb];
            int s = sa * sb * sgn(xa, xb);
            t[a][b] = idx(s, axis);
        }
    // reorder to {1,-1,i,-i,...} = identity first
    return FiniteGroup::from_table(t);
}

}  // namespace

FiniteGroup catalog_group(const std::string& name) {
    if (name == "trivial") return cyclic(1);
    if (name.size() == 2 && name[0] == 'Z' && name[1] >= '2' && name[1] <= '8')
        return cyclic(name[1] - '0');
    if (name == "S3") return symmetric(3);
    if (name == "S4") return symmetric(4);
    if (name == "D4") return dihedral4();
    if (name == "Q8") return quaternion8();
    fail("UnknownGroup", name);
}

std::vector<std::string> catalog_names() {
    return {"trivial", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "S3", "S4", "D4", "Q8"};
}

FiniteGroup parse_group_table(const std::string& text) {
    std::istringstream is(text);
    int n = 0;
    if (!(is >> n) || n <= 0) fail("ParseError", "line 1: expected positive order");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!(is >> t[r][c]))
                fail("ParseError", "row " + std::to_string(r + 1) + ": expected " +
                                       std::to_string(n) + " entries");
    return FiniteGroup::from_table(t);
}

}  // namespace qd
