// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#include "qd/gcrossed.hpp"

#include <json.hpp>

#include "qd/parallel.hpp"

namespace qd {

CoefficientGroup CoefficientGroup::roots_of_unity(int n, int sym_order) {
    CoefficientGroup c;
    c.name = "mu" + std::to_string(n);
    c.size = n;
    c.one = 0;
    c.minus_one = (n % 2 == 0) ? n / 2 : 0;
    c.mul.resize(static_cast<std::size_t>(n) * n);
    c.inv.resize(n);
    for (int a = 0; a < n; ++a) {
        c.inv[a] = (n - a) % n;
        for (int b = 0; b < n; ++b) c.mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    }
    std::vector<int> id(n);
    for (int a = 0; a < n; ++a) id[a] = a;
    c.action.assign(sym_order, id);
    for (int a = 0; a < n; ++a) c.value_names.push_back(a == 0 ? "1" : "w^" + std::to_string(a));
    return c;
}

CoefficientGroup CoefficientGroup::t_group(const FiniteGroup& sym) {
    if (sym.order() != 2) fail("NotACocycle", "t-group coefficients expect a Z2 symmetry");
    CoefficientGroup c;
    c.name = "t4";
    c.size = 4;  // order: 1, -1, t, -t
    c.one = 0;
    c.minus_one = 1;
    // t^2 = 1, (-1)^2 = 1, abelian
    auto code = [](int sign, int has_t) { return has_t * 2 + (sign < 0 ? 1 : 0); };
    c.mul.resize(16);
    c.inv.resize(4);
    for (int a = 0; a < 4; ++a) {
        int sa = (a & 1) ? -1 : 1, ta = a >> 1;
        for (int b = 0; b < 4; ++b) {
            int sb = (b & 1) ? -1 : 1, tb = b >> 1;
            c.mul[static_cast<std::size_t>(a) * 4 + b] = code(sa * sb, ta ^ tb);
        }
        c.inv[a] = a;  // every element squares to 1
    }
    c.action = {{0, 1, 2, 3}, {0, 1, 3, 2}};  // nontrivial element: t <-> -t
    c.value_names = {"1", "-1", "t", "-t"};
    return c;
}

void CoefficientGroup::verify(const FiniteGroup& sym) const {
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            if (times(a, b) != times(b, a)) fail("NotACocycle", "coefficients not abelian");
    if (times(minus_one, minus_one) != one) fail("NotACocycle", "-1 * -1 != 1");
    if (static_cast<int>(action.size()) != sym.order())
        fail("NotACocycle", "action table size mismatch");
    for (int g = 0; g < sym.order(); ++g) {
        if (action[g][one] != one || action[g][minus_one] != minus_one)
            fail("NotACocycle", "action does not fix +/-1");
        for (int a = 0; a < size; ++a)
            for (int b = 0; b < size; ++b)
                if (act(g, times(a, b)) != times(act(g, a), act(g, b)))
                    fail("NotACocycle", "action not by automorphisms");
    }
    for (int g = 0; g < sym.order(); ++g)
        for (int h = 0; h < sym.order(); ++h)
            for (int a = 0; a < size; ++a)
                if (act(sym.mul(g, h), a) != act(g, act(h, a)))
                    fail("NotACocycle", "action not a homomorphism");
}

int GCrossedSkeleton::unit_label() const {
    for (int i = 0; i < nlabels; ++i) {
        bool unit = true;
        for (int j = 0; j < nlabels && unit; ++j)
            unit = fuse[i][j] == j && fuse[j][i] == j;
        if (unit) return i;
    }
    fail("NotACocycle", "no unit label");
}

void GCrossedSkeleton::verify_structure() const {
    coeff.verify(sym);
    int u = unit_label();
    if (grading[u] != sym.identity()) fail("NotACocycle", "unit label not trivially graded");
    for (int i = 0; i < nlabels; ++i)
        for (int j = 0; j < nlabels; ++j) {
            if (grading[fuse[i][j]] != sym.mul(grading[i], grading[j]))
                fail("NotACocycle", "grading not multiplicative");
            for (int k = 0; k < nlabels; ++k)
                if (fuse[fuse[i][j]][k] != fuse[i][fuse[j][k]])
                    fail("NotACocycle", "pointed fusion not associative");
        }
    for (int g = 0; g < sym.order(); ++g)
        for (int i = 0; i < nlabels; ++i) {
            for (int j = 0; j < nlabels; ++j)
                if (act[g][fuse[i][j]] != fuse[act[g][i]][act[g][j]])
                    fail("NotACocycle", "label action not multiplicative");
            for (int h = 0; h < sym.order(); ++h)
                if (act[sym.mul(g, h)][i] != act[g][act[h][i]])
                    fail("NotACocycle", "label action not a homomorphism");
        }
    // strict unit: any F with a unit argument equals 1
    for (int i = 0; i < nlabels; ++i)
        for (int j = 0; j < nlabels; ++j) {
            if (f[u][i][j] != coeff.one || f[i][u][j] != coeff.one || f[i][j][u] != coeff.one)
                fail("NotACocycle", "F not strict at the unit label");
        }
}

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

struct Violations {
    std::vector<std::string> items;
    void add(const std::string& s) {
        if (items.size() < 8) items.push_back(s);
    }
    static Violations merge(Violations a, const Violations& b) {
        for (auto& s : b.items) a.add(s);
        return a;
    }
};

}  // namespace

CoherenceReport pentagon_check(const GCrossedSkeleton& s) {
    CoherenceReport rep;
    rep.name = "pentagon";
    const int n = s.nlabels;
    const auto& c = s.coeff;
    std::size_t total = static_cast<std::size_t>(n) * n * n * n;
    rep.checked = total;
    Violations v = par::parallel_reduce(
        total, Violations{},
        [&](std::size_t lo, std::size_t hi) {
            Violations part;
            for (std::size_t t = lo; t < hi; ++t) {
                int i = static_cast<int>(t / (static_cast<std::size_t>(n) * n * n));
                int j = static_cast<int>(t / (static_cast<std::size_t>(n) * n)) % n;
                int k = static_cast<int>(t / n) % n;
                int l = static_cast<int>(t % n);
                int lhs = c.times(c.times(s.f[i][j][k], s.f[i][s.fuse[j][k]][l]), s.f[j][k][l]);
                int rhs = c.times(s.f[s.fuse[i][j]][k][l], s.f[i][j][s.fuse[k][l]]);
                if (lhs != rhs) part.add(tuple_str({i, j, k, l}));
            }
            return part;
        },
        Violations::merge);
    rep.violations = v.items;
    return rep;
}

CoherenceReport pentagon_check_serial(const GCrossedSkeleton& s) {
    CoherenceReport rep;
    rep.name = "pentagon";
    const int n = s.nlabels;
    const auto& c = s.coeff;
    Violations v;
    std::size_t total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    ++total;
                    int lhs =
                        c.times(c.times(s.f[i][j][k], s.f[i][s.fuse[j][k]][l]), s.f[j][k][l]);
                    int rhs = c.times(s.f[s.fuse[i][j]][k][l], s.f[i][j][s.fuse[k][l]]);
                    if (lhs != rhs) v.add(tuple_str({i, j, k, l}));
                }
    rep.checked = total;
    rep.violations = v.items;
    return rep;
}

CoherenceReport eta_check(const GCrossedSkeleton& s) {
    CoherenceReport rep;
    rep.name = "eta-condition";
    const auto& c = s.coeff;
    const int ng = s.sym.order(), n = s.nlabels;
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h)
            for (int k = 0; k < ng; ++k)
                for (int i = 0; i < n; ++i) {
                    ++rep.checked;
                    int lhs = c.times(s.eta[g][h][s.act[k][i]], s.eta[s.sym.mul(g, h)][k][i]);
                    int rhs = c.times(s.eta[h][k][i], s.eta[g][s.sym.mul(h, k)][i]);
                    if (lhs != rhs && rep.violations.size() < 8)
                        rep.violations.push_back(tuple_str({g, h, k, i}));
                }
    return rep;
}

CoherenceReport mu_check(const GCrossedSkeleton& s) {
    CoherenceReport rep;
    rep.name = "mu-condition";
    const auto& c = s.coeff;
    const int ng = s.sym.order(), n = s.nlabels;
    for (int g = 0; g < ng; ++g)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    ++rep.checked;
                    int lhs = c.times(c.times(s.f[i][j][k], s.mu[g][i][s.fuse[j][k]]),
                                      s.mu[g][j][k]);
                    int rhs = c.times(c.times(s.mu[g][s.fuse[i][j]][k], s.mu[g][i][j]),
                                      s.f[s.act[g][i]][s.act[g][j]][s.act[g][k]]);
                    if (lhs != rhs && rep.violations.size() < 8)
                        rep.violations.push_back(tuple_str({g, i, j, k}));
                }
    return rep;
}

CoherenceReport heptagon_check(const GCrossedSkeleton& s) {
    CoherenceReport rep;
    rep.name = "heptagons";
    const auto& c = s.coeff;
    const int n = s.nlabels;
    for (int i = 0; i < n; ++i) {
        int g = s.grading[i];
        for (int j = 0; j < n; ++j) {
            int h = s.grading[j];
            for (int k = 0; k < n; ++k) {
                rep.checked += 2;
                // R(i,k) F(g(j),i,k)^-1 R(i,j)
                int lhs1 = c.times(c.times(s.r[i][k], c.inverse(s.f[s.act[g][j]][i][k])),
                                   s.r[i][j]);
                int rhs1 = c.times(
                    c.times(c.inverse(s.f[s.act[g][j]][s.act[g][k]][i]),
                            c.inverse(s.mu[g][j][k])),
                    c.times(s.r[i][s.fuse[j][k]], c.inverse(s.f[i][j][k])));
                if (lhs1 != rhs1 && rep.violations.size() < 8)
                    rep.violations.push_back("eq1" + tuple_str({i, j, k}));
                // R(i,h(k)) F(i,h(k),j) R(j,k)
                int hk = s.act[h][k];
                int lhs2 = c.times(c.times(s.r[i][hk], s.f[i][hk][j]), s.r[j][k]);
                int rhs2 = c.times(
                    c.times(s.f[s.act[s.sym.mul(g, h)][k]][i][j], s.eta[g][h][k]),
                    c.times(s.r[s.fuse[i][j]][k], s.f[i][j][k]));
                if (lhs2 != rhs2 && rep.violations.size() < 8)
                    rep.violations.push_back("eq2" + tuple_str({i, j, k}));
            }
        }
    }
    return rep;
}

Cochain3 coboundary(const FiniteGroup& g, const Cochain2& beta) {
    const int n = g.order();
    Cochain3 out;
    out.n = beta.n;
    out.v.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cc = 0; cc < n; ++cc) {
                int e = beta.v[b][cc] - beta.v[g.mul(a, b)][cc] + beta.v[a][g.mul(b, cc)] -
                        beta.v[a][b];
                out.v[a][b][cc] = ((e % beta.n) + beta.n) % beta.n;
            }
    return out;
}

Cochain3 cochain_mul(const Cochain3& a, const Cochain3& b) {
    Cochain3 out = a;
    const int n = static_cast<int>(a.v.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) out.v[x][y][z] = (a.v[x][y][z] + b.v[x][y][z]) % a.n;
    return out;
}

bool is_cocycle(const FiniteGroup& g, const Cochain3& f) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    int lhs = f.v[a][b][c] + f.v[a][g.mul(b, c)][d] + f.v[b][c][d];
                    int rhs = f.v[g.mul(a, b)][c][d] + f.v[a][b][g.mul(c, d)];
                    if (((lhs - rhs) % f.n + f.n) % f.n != 0) return false;
                }
    return true;
}

CocycleClass cocycle_class(const FiniteGroup& g, const Cochain3& f) {
    if (g.order() > 4 || f.n > 8) fail("NotACocycle", "cocycle_class bounds: |G|<=4, N<=8");
    if (!is_cocycle(g, f)) fail("NotACocycle", "input 3-cochain fails the cocycle identity");
    const int n = g.order();
    const int nn = f.n;

    // Enumerate all 2-cochains when the full space is small; otherwise only
    // normalized ones (unit arguments mapped to 1), which suffices for
    // normalized F.
    std::vector<std::pair<int, int>> slots;
    double full = std::pow(static_cast<double>(nn), n * n);
    bool normalized_only = full > (1 << 24);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (normalized_only && (a == g.identity() || b == g.identity())) continue;
            slots.emplace_back(a, b);
        }
    std::size_t count = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) count *= static_cast<std::size_t>(nn);

    CocycleClass out;
    Cochain2 beta;
    beta.n = nn;
    beta.v.assign(n, std::vector<int>(n, 0));
    for (std::size_t code = 0; code < count; ++code) {
        std::size_t c = code;
        for (auto& [a, b] : slots) {
            beta.v[a][b] = static_cast<int>(c % nn);
            c /= nn;
        }
        ++out.candidates_checked;
        if (coboundary(g, beta).v == f.v) {
            out.trivial = true;
            out.witness = beta;
            return out;
        }
    }
    out.trivial = false;
    return out;
}

std::string skeleton_to_json(const GCrossedSkeleton& s) {
    nlohmann::ordered_json j;
    j["sym_order"] = s.sym.order();
    j["sym_table"] = nlohmann::ordered_json::array();
    for (int r = 0; r < s.sym.order(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 0; c < s.sym.order(); ++c) row.push_back(s.sym.mul(r, c));
        j["sym_table"].push_back(row);
    }
    j["coeff"] = s.coeff.name;
    j["labels"] = s.label_names;
    j["grading"] = s.grading;
    j["fusion"] = s.fuse;
    j["action"] = s.act;
    auto cname = [&](int v) { return s.coeff.value_names[v]; };
    nlohmann::ordered_json fj = nlohmann::ordered_json::array();
    for (int i = 0; i < s.nlabels; ++i)
        for (int jj = 0; jj < s.nlabels; ++jj)
            for (int k = 0; k < s.nlabels; ++k)
                if (s.f[i][jj][k] != s.coeff.one)
                    fj.push_back({{"i", i}, {"j", jj}, {"k", k}, {"v", cname(s.f[i][jj][k])}});
    j["F"] = fj;
    nlohmann::ordered_json rj = nlohmann::ordered_json::array();
    for (int i = 0; i < s.nlabels; ++i)
        for (int jj = 0; jj < s.nlabels; ++jj)
            rj.push_back({{"i", i}, {"j", jj}, {"v", cname(s.r[i][jj])}});
    j["R"] = rj;
    nlohmann::ordered_json ej = nlohmann::ordered_json::array();
    for (int gx = 0; gx < s.sym.order(); ++gx)
        for (int h = 0; h < s.sym.order(); ++h)
            for (int i = 0; i < s.nlabels; ++i)
                if (s.eta[gx][h][i] != s.coeff.one)
                    ej.push_back({{"g", gx}, {"h", h}, {"i", i}, {"v", cname(s.eta[gx][h][i])}});
    j["eta"] = ej;
    nlohmann::ordered_json mj = nlohmann::ordered_json::array();
    for (int gx = 0; gx < s.sym.order(); ++gx)
        for (int i = 0; i < s.nlabels; ++i)
            for (int jj = 0; jj < s.nlabels; ++jj)
                if (s.mu[gx][i][jj] != s.coeff.one)
                    mj.push_back({{"g", gx}, {"i", i}, {"j", jj}, {"v", cname(s.mu[gx][i][jj])}});
    j["mu"] = mj;
    return j.dump(2);
}

GCrossedSkeleton skeleton_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    GCrossedSkeleton s;
    int ng = j.at("sym_order").get<int>();
    std::vector<std::vector<int>> table(ng, std::vector<int>(ng));
    for (int r = 0; r < ng; ++r)
        for (int c = 0; c < ng; ++c) table[r][c] = j.at("sym_table")[r][c].get<int>();
    s.sym = FiniteGroup::from_table(table);
    std::string coeff = j.at("coeff").get<std::string>();
    if (coeff == "t4")
        s.coeff = CoefficientGroup::t_group(s.sym);
    else if (coeff.rfind("mu", 0) == 0)
        s.coeff = CoefficientGroup::roots_of_unity(std::stoi(coeff.substr(2)), ng);
    else
        fail("ParseError", "unknown coefficient group " + coeff);
    s.label_names = j.at("labels").get<std::vector<std::string>>();
    s.nlabels = static_cast<int>(s.label_names.size());
    s.grading = j.at("grading").get<std::vector<int>>();
    s.fuse = j.at("fusion").get<std::vector<std::vector<int>>>();
    s.act = j.at("action").get<std::vector<std::vector<int>>>();
    auto cvalue = [&](const std::string& name) {
        for (int v = 0; v < s.coeff.size; ++v)
            if (s.coeff.value_names[v] == name) return v;
        fail("ParseError", "unknown coefficient value " + name);
    };
    const int n = s.nlabels;
    s.f.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, s.coeff.one)));
    for (auto& t : j.at("F"))
        s.f[t.at("i").get<int>()][t.at("j").get<int>()][t.at("k").get<int>()] =
            cvalue(t.at("v").get<std::string>());
    s.r.assign(n, std::vector<int>(n, s.coeff.one));
    for (auto& t : j.at("R"))
        s.r[t.at("i").get<int>()][t.at("j").get<int>()] = cvalue(t.at("v").get<std::string>());
    s.eta.assign(ng, std::vector<std::vector<int>>(ng, std::vector<int>(n, s.coeff.one)));
    for (auto& t : j.at("eta"))
        s.eta[t.at("g").get<int>()][t.at("h").get<int>()][t.at("i").get<int>()] =
            cvalue(t.at("v").get<std::string>());
    s.mu.assign(ng, std::vector<std::vector<int>>(n, std::vector<int>(n, s.coeff.one)));
    for (auto& t : j.at("mu"))
        s.mu[t.at("g").get<int>()][t.at("i").get<int>()][t.at("j").get<int>()] =
            cvalue(t.at("v").get<std::string>());
    s.verify_structure();
    return s;
}

}  // namespace qd
