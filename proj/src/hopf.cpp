// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#include "qd/hopf.hpp"

#include <json.hpp>

namespace qd {

namespace {
constexpr double kZero = 0.0;

void check_same_group(const FiniteGroup* a, const FiniteGroup* b) {
    if (a == nullptr || b == nullptr || a->order() != b->order() ||
        a->flat_table() != b->flat_table())
        fail("GroupMismatch", "operands live over different groups");
}
}  // namespace

void DoubleElement::add(int s, int x, cplx c) {
    auto key = std::make_pair(s, x);
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
        if (c != kZero) coeffs.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == kZero) coeffs.erase(it);
}

DoubleElement& DoubleElement::operator+=(const DoubleElement& o) {
    check_same_group(g, o.g);
    for (auto& [k, c] : o.coeffs) add(k.first, k.second, c);
    return *this;
}

DoubleElement& DoubleElement::operator*=(cplx c) {
    if (c == kZero) {
        coeffs.clear();
        return *this;
    }
    for (auto& [k, v] : coeffs) v *= c;
    return *this;
}

void DoubleTensor::add(std::array<int, 4> k, cplx c) {
    auto it = coeffs.find(k);
    if (it == coeffs.end()) {
        if (c != kZero) coeffs.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == kZero) coeffs.erase(it);
}

void DoubleTriple::add(std::array<int, 6> k, cplx c) {
    auto it = coeffs.find(k);
    if (it == coeffs.end()) {
        if (c != kZero) coeffs.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == kZero) coeffs.erase(it);
}

DoubleElement double_basis(const FiniteGroup& g, int s, int x, cplx c) {
    DoubleElement e;
    e.g = &g;
    e.add(s, x, c);
    return e;
}

DoubleElement double_unit(const FiniteGroup& g) {
    DoubleElement e;
    e.g = &g;
    for (int s = 0; s < g.order(); ++s) e.add(s, g.identity(), 1.0);
    return e;
}

// (delta_s (x) a)(delta_t (x) b) = [s == a t a^-1] delta_s (x) ab
DoubleElement multiply(const DoubleElement& a, const DoubleElement& b) {
    check_same_group(a.g, b.g);
    const FiniteGroup& g = *a.g;
    DoubleElement out;
    out.g = a.g;
    for (auto& [ka, ca] : a.coeffs)
        for (auto& [kb, cb] : b.coeffs) {
            if (ka.first != g.conj(ka.second, kb.first)) continue;
            out.add(ka.first, g.mul(ka.second, kb.second), ca * cb);
        }
    return out;
}

DoubleTensor comultiply(const DoubleElement& a) {
    const FiniteGroup& g = *a.g;
    DoubleTensor out;
    out.g = a.g;
    for (auto& [k, c] : a.coeffs) {
        for (int x = 0; x < g.order(); ++x) {
            int y = g.mul(g.inv(x), k.first);  // x y = s
            out.add({x, k.second, y, k.second}, c);
        }
    }
    return out;
}

cplx counit(const DoubleElement& a) {
    cplx out = 0;
    for (auto& [k, c] : a.coeffs)
        if (k.first == a.g->identity()) out += c;
    return out;
}

// S(delta_s (x) x) = delta_{x^-1 s^-1 x} (x) x^-1
DoubleElement antipode(const DoubleElement& a) {
    const FiniteGroup& g = *a.g;
    DoubleElement out;
    out.g = a.g;
    for (auto& [k, c] : a.coeffs)
        out.add(g.conj(g.inv(k.second), g.inv(k.first)), g.inv(k.second), c);
    return out;
}

// (delta_s (x) x)^* = delta_{x^-1 s x} (x) x^-1, antilinear.
DoubleElement star(const DoubleElement& a) {
    const FiniteGroup& g = *a.g;
    DoubleElement out;
    out.g = a.g;
    for (auto& [k, c] : a.coeffs)
        out.add(g.conj(g.inv(k.second), k.first), g.inv(k.second), std::conj(c));
    return out;
}

DoubleTensor tensor_product(const DoubleElement& a, const DoubleElement& b) {
    check_same_group(a.g, b.g);
    DoubleTensor out;
    out.g = a.g;
    for (auto& [ka, ca] : a.coeffs)
        for (auto& [kb, cb] : b.coeffs)
            out.add({ka.first, ka.second, kb.first, kb.second}, ca * cb);
    return out;
}

DoubleTensor multiply(const DoubleTensor& a, const DoubleTensor& b) {
    check_same_group(a.g, b.g);
    const FiniteGroup& g = *a.g;
    DoubleTensor out;
    out.g = a.g;
    for (auto& [ka, ca] : a.coeffs)
        for (auto& [kb, cb] : b.coeffs) {
            if (ka[0] != g.conj(ka[1], kb[0])) continue;
            if (ka[2] != g.conj(ka[3], kb[2])) continue;
            out.add({ka[0], g.mul(ka[1], kb[1]), ka[2], g.mul(ka[3], kb[3])}, ca * cb);
        }
    return out;
}

DoubleTriple multiply(const DoubleTriple& a, const DoubleTriple& b) {
    check_same_group(a.g, b.g);
    const FiniteGroup& g = *a.g;
    DoubleTriple out;
    out.g = a.g;
    for (auto& [ka, ca] : a.coeffs)
        for (auto& [kb, cb] : b.coeffs) {
            if (ka[0] != g.conj(ka[1], kb[0])) continue;
            if (ka[2] != g.conj(ka[3], kb[2])) continue;
            if (ka[4] != g.conj(ka[5], kb[4])) continue;
            out.add({ka[0], g.mul(ka[1], kb[1]), ka[2], g.mul(ka[3], kb[3]), ka[4],
                     g.mul(ka[5], kb[5])},
                    ca * cb);
        }
    return out;
}

// R = sum_g (delta_g (x) e) (x) (1 (x) g); expanding 1 = sum_t delta_t gives
// |G|^2 basis terms, coefficient 1 each.
DoubleTensor r_matrix(const FiniteGroup& g) {
    DoubleTensor out;
    out.g = &g;
    for (int x = 0; x < g.order(); ++x)
        for (int t = 0; t < g.order(); ++t) out.add({x, g.identity(), t, x}, 1.0);
    return out;
}

DoubleTensor r_inverse(const FiniteGroup& g) {
    // Solve R X = unit (x) unit in the sparse basis. Left multiplication by R
    // sends each basis element to exactly one basis element with coefficient 1
    // (checked below), so the solve reduces to inverting that permutation and
    // applying it to the right-hand side.
    const int n = g.order();
    DoubleTensor r = r_matrix(g);
    std::map<std::array<int, 4>, std::array<int, 4>> perm_inv;
    for (int t1 = 0; t1 < n; ++t1)
        for (int h1 = 0; h1 < n; ++h1)
            for (int t2 = 0; t2 < n; ++t2)
                for (int h2 = 0; h2 < n; ++h2) {
                    DoubleTensor basis;
                    basis.g = &g;
                    basis.add({t1, h1, t2, h2}, 1.0);
                    DoubleTensor prod = multiply(r, basis);
                    if (prod.coeffs.size() != 1 || prod.coeffs.begin()->second != 1.0)
                        fail("NumericalFailure", "left action of R is not a basis permutation");
                    perm_inv[prod.coeffs.begin()->first] = {t1, h1, t2, h2};
                }
    DoubleTensor out;
    out.g = &g;
    for (int s1 = 0; s1 < n; ++s1)
        for (int s2 = 0; s2 < n; ++s2) {
            auto it = perm_inv.find({s1, g.identity(), s2, g.identity()});
            if (it == perm_inv.end()) fail("NumericalFailure", "R is not invertible");
            out.add(it->second, 1.0);
        }
    DoubleTensor unit2 = tensor_product(double_unit(g), double_unit(g));
    if (!(multiply(r, out) == unit2) || !(multiply(out, r) == unit2))
        fail("NumericalFailure", "R inverse verification failed");
    return out;
}

namespace {

DoubleTriple lift(const DoubleTensor& t, int leg1, int leg2) {
    // Places tensor legs at positions leg1 < leg2 and fills the remaining leg
    // with the unit sum_s delta_s (x) e.
    const FiniteGroup& g = *t.g;
    DoubleTriple out;
    out.g = t.g;
    int other = 3 - leg1 - leg2;
    for (auto& [k, c] : t.coeffs)
        for (int s = 0; s < g.order(); ++s) {
            std::array<int, 6> key{};
            key[2 * leg1] = k[0];
            key[2 * leg1 + 1] = k[1];
            key[2 * leg2] = k[2];
            key[2 * leg2 + 1] = k[3];
            key[2 * other] = s;
            key[2 * other + 1] = g.identity();
            out.add(key, c);
        }
    return out;
}

}  // namespace

QuasitriangularReport verify_quasitriangular(const FiniteGroup& g) {
    QuasitriangularReport rep;
    const int n = g.order();
    DoubleTensor r = r_matrix(g);

    // (Delta (x) Id)(R) and (Id (x) Delta)(R)
    DoubleTriple dl, dr;
    dl.g = dr.g = &g;
    for (auto& [k, c] : r.coeffs) {
        for (int x = 0; x < n; ++x) {
            int y = g.mul(g.inv(x), k[0]);
            dl.add({x, k[1], y, k[1], k[2], k[3]}, c);  // Delta on leg 1
            int y2 = g.mul(g.inv(x), k[2]);
            dr.add({k[0], k[1], x, k[3], y2, k[3]}, c);  // Delta on leg 2
        }
    }
    DoubleTriple r13 = lift(r, 0, 2);
    DoubleTriple r23 = lift(r, 1, 2);
    DoubleTriple r12 = lift(r, 0, 1);
    rep.coproduct_right = (dl == multiply(r13, r23));
    rep.coproduct_left = (dr == multiply(r13, r12));

    // Delta^op(x) R == R Delta(x) for every basis element x.
    rep.opposite_coproduct = true;
    for (int s = 0; s < n && rep.opposite_coproduct; ++s)
        for (int h = 0; h < n && rep.opposite_coproduct; ++h) {
            DoubleTensor d = comultiply(double_basis(g, s, h));
            DoubleTensor dop;
            dop.g = &g;
            for (auto& [k, c] : d.coeffs) dop.add({k[2], k[3], k[0], k[1]}, c);
            if (!(multiply(dop, r) == multiply(r, d))) rep.opposite_coproduct = false;
        }
    return rep;
}

HopfAxiomReport verify_hopf_axioms(const FiniteGroup& g) {
    HopfAxiomReport rep;
    const int n = g.order();
    auto basis = [&](int s, int h) { return double_basis(g, s, h); };

    rep.assoc = true;
    for (int s1 = 0; s1 < n; ++s1)
        for (int h1 = 0; h1 < n; ++h1)
            for (int s2 = 0; s2 < n; ++s2)
                for (int h2 = 0; h2 < n; ++h2)
                    for (int s3 = 0; s3 < n; ++s3)
                        for (int h3 = 0; h3 < n; ++h3) {
                            auto a = basis(s1, h1), b = basis(s2, h2), c = basis(s3, h3);
                            if (!(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)))) {
                                rep.assoc = false;
                                goto assoc_done;
                            }
                        }
assoc_done:

    rep.coassoc = true;
    for (int s = 0; s < n && rep.coassoc; ++s)
        for (int h = 0; h < n && rep.coassoc; ++h) {
            DoubleTensor d = comultiply(basis(s, h));
            DoubleTriple left, right;
            left.g = right.g = &g;
            for (auto& [k, c] : d.coeffs) {
                // (Delta (x) Id) Delta
                for (int x = 0; x < n; ++x) {
                    int y = g.mul(g.inv(x), k[0]);
                    left.add({x, k[1], y, k[1], k[2], k[3]}, c);
                }
                // (Id (x) Delta) Delta
                for (int x = 0; x < n; ++x) {
                    int y = g.mul(g.inv(x), k[2]);
                    right.add({k[0], k[1], x, k[3], y, k[3]}, c);
                }
            }
            if (!(left == right)) rep.coassoc = false;
        }

    rep.counit_laws = true;
    for (int s = 0; s < n && rep.counit_laws; ++s)
        for (int h = 0; h < n && rep.counit_laws; ++h) {
            DoubleTensor d = comultiply(basis(s, h));
            DoubleElement l, r2;
            l.g = r2.g = &g;
            for (auto& [k, c] : d.coeffs) {
                if (k[0] == g.identity()) l.add(k[2], k[3], c);   // (eps (x) id)
                if (k[2] == g.identity()) r2.add(k[0], k[1], c);  // (id (x) eps)
            }
            if (!(l == basis(s, h)) || !(r2 == basis(s, h))) rep.counit_laws = false;
        }

    rep.antipode = true;
    for (int s = 0; s < n && rep.antipode; ++s)
        for (int h = 0; h < n && rep.antipode; ++h) {
            DoubleElement x = basis(s, h);
            DoubleTensor d = comultiply(x);
            DoubleElement m1, m2;
            m1.g = m2.g = &g;
            for (auto& [k, c] : d.coeffs) {
                DoubleElement lhs = double_basis(g, k[0], k[1], c);
                DoubleElement rhs = double_basis(g, k[2], k[3], 1.0);
                m1 += multiply(antipode(lhs), rhs);
                m2 += multiply(lhs, antipode(rhs));
            }
            DoubleElement want = double_unit(g);
            want *= counit(x);
            if (!(m1 == want) || !(m2 == want)) rep.antipode = false;
        }

    rep.star_involutive = true;
    rep.star_antimultiplicative = true;
    for (int s1 = 0; s1 < n; ++s1)
        for (int h1 = 0; h1 < n; ++h1) {
            auto a = basis(s1, h1);
            if (!(star(star(a)) == a)) rep.star_involutive = false;
            for (int s2 = 0; s2 < n; ++s2)
                for (int h2 = 0; h2 < n; ++h2) {
                    auto b = basis(s2, h2);
                    if (!(star(multiply(a, b)) == multiply(star(b), star(a))))
                        rep.star_antimultiplicative = false;
                }
        }
    return rep;
}

std::string double_to_json(const DoubleElement& a) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto& [k, c] : a.coeffs) {
        nlohmann::ordered_json t;
        t["s"] = k.first;
        t["g"] = k.second;
        t["re"] = c.real();
        t["im"] = c.imag();
        arr.push_back(t);
    }
    return arr.dump();
}

DoubleElement double_from_json(const FiniteGroup& g, const std::string& text) {
    auto j = nlohmann::json::parse(text);
    DoubleElement out;
    out.g = &g;
    for (auto& t : j)
        out.add(t.at("s").get<int>(), t.at("g").get<int>(),
                cplx(t.at("re").get<double>(), t.at("im").get<double>()));
    return out;
}

}  // namespace qd
