// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qd/rep.hpp"

using namespace qd;

namespace {
const DoubleContext& ctx_z2() {
    static DoubleContext c = DoubleContext::make(catalog_group("Z2"));
    return c;
}
const DoubleContext& ctx_z3() {
    static DoubleContext c = DoubleContext::make(catalog_group("Z3"));
    return c;
}
const DoubleContext& ctx_s3() {
    static DoubleContext c = DoubleContext::make(catalog_group("S3"));
    return c;
}
std::vector<DGRep> simples_of(const DoubleContext& ctx) {
    std::vector<DGRep> out;
    for (auto& l : all_labels(ctx)) out.push_back(build_irrep(ctx, l));
    return out;
}
}  // namespace

TEST_CASE("irrep census") {
    auto z2 = simples_of(ctx_z2());
    REQUIRE(z2.size() == 4);
    for (auto& s : z2) CHECK(s.dim == 1);

    auto s3 = simples_of(ctx_s3());
    REQUIRE(s3.size() == 8);
    std::multiset<int> dims;
    int sumsq = 0;
    for (auto& s : s3) {
        dims.insert(s.dim);
        sumsq += s.dim * s.dim;
    }
    CHECK(dims == std::multiset<int>{1, 1, 2, 2, 2, 2, 3, 3});
    CHECK(sumsq == 36);

    // count equals sum over classes of centralizer irrep counts
    int expect = 0;
    for (auto& v : ctx_s3().cent_irreps) expect += static_cast<int>(v.size());
    CHECK(static_cast<int>(s3.size()) == expect);
}

TEST_CASE("trivial label is the unit rep") {
    // find the label with class {e} and trivial centralizer irrep
    const auto& ctx = ctx_z2();
    for (auto& l : all_labels(ctx)) {
        if (ctx.classes[l.class_id].representative != ctx.group.identity()) continue;
        const auto& r = ctx.cent_irreps[l.class_id][l.irrep_index];
        bool trivial = true;
        for (auto& ch : r.character) trivial = trivial && std::abs(ch - cplx(1.0)) < 1e-9;
        if (!trivial) continue;
        auto rep = build_irrep(ctx, l);
        CHECK(rep.dim == 1);
        CHECK(std::abs(rep.proj[ctx.group.identity()](0, 0) - 1.0) < 1e-12);
        for (int x = 0; x < 2; ++x) CHECK(std::abs(rep.act[x](0, 0) - 1.0) < 1e-12);
    }
}

TEST_CASE("rep_apply is a star homomorphism") {
    const auto& ctx = ctx_s3();
    auto simples = simples_of(ctx);
    const auto& rep = simples[6];  // some higher-dim simple
    CHECK(max_abs_diff(rep_apply(rep, double_unit(ctx.group)), Mat::Identity(rep.dim, rep.dim)) <
          1e-12);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d6(0, 5);
    std::uniform_real_distribution<double> dr(-1, 1);
    for (int it = 0; it < 50; ++it) {
        DoubleElement x, y;
        x.g = y.g = &ctx.group;
        for (int t = 0; t < 3; ++t) {
            x.add(d6(rng), d6(rng), cplx(dr(rng), dr(rng)));
            y.add(d6(rng), d6(rng), cplx(dr(rng), dr(rng)));
        }
        CHECK(max_abs_diff(rep_apply(rep, multiply(x, y)), rep_apply(rep, x) * rep_apply(rep, y)) <
              1e-10);
        CHECK(max_abs_diff(rep_apply(rep, star(x)), rep_apply(rep, x).adjoint()) < 1e-10);
    }
    // trivial rep evaluates via the counit pattern
    auto unit = unit_rep(ctx);
    for (int s = 0; s < 6; ++s)
        for (int g = 0; g < 6; ++g) {
            cplx v = rep_apply(unit, double_basis(ctx.group, s, g))(0, 0);
            CHECK(std::abs(v - (s == ctx.group.identity() ? cplx(1) : cplx(0))) < 1e-12);
        }
}

TEST_CASE("tensor with unit is strict") {
    const auto& ctx = ctx_s3();
    auto simples = simples_of(ctx);
    auto u = unit_rep(ctx);
    for (auto& v : simples) {
        auto vu = tensor_rep(v, u);
        CHECK(vu.dim == v.dim);
        for (int x = 0; x < 6; ++x) {
            CHECK(max_abs_diff(vu.proj[x], v.proj[x]) < 1e-12);
            CHECK(max_abs_diff(vu.act[x], v.act[x]) < 1e-12);
        }
    }
    CHECK(tensor_rep(simples[6], simples[7]).dim == simples[6].dim * simples[7].dim);
}

TEST_CASE("D(Z2) toric code structure") {
    const auto& ctx = ctx_z2();
    auto simples = simples_of(ctx);
    auto table = fusion_table(ctx);
    // pointed Z2 x Z2 table: every row is a permutation, unit row delta
    int unit_idx = -1;
    for (std::size_t i = 0; i < table.labels.size(); ++i) {
        bool is_unit = ctx.classes[table.labels[i].class_id].representative ==
                       ctx.group.identity();
        const auto& r = ctx.cent_irreps[table.labels[i].class_id][table.labels[i].irrep_index];
        for (auto& chv : r.character) is_unit = is_unit && std::abs(chv - cplx(1.0)) < 1e-9;
        if (is_unit) unit_idx = static_cast<int>(i);
    }
    REQUIRE(unit_idx >= 0);
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
            CHECK(table.n[unit_idx][j][k] == (j == k ? 1 : 0));
    // group-like: each product is a single simple
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int total = 0;
            for (int k = 0; k < 4; ++k) total += table.n[i][j][k];
            CHECK(total == 1);
        }
    // x (x) x = 1 for every simple (Z2 x Z2 group structure)
    for (int i = 0; i < 4; ++i) CHECK(table.n[i][i][unit_idx] == 1);
    CHECK(table.symmetric);

    // e (x) m = psi: the two nontrivial simples with either nontrivial class
    // or nontrivial centralizer character multiply to the one with both.
    int e_idx = -1, m_idx = -1, psi_idx = -1;
    for (int i = 0; i < 4; ++i) {
        bool triv_class = ctx.classes[table.labels[i].class_id].representative ==
                          ctx.group.identity();
        const auto& r = ctx.cent_irreps[table.labels[i].class_id][table.labels[i].irrep_index];
        bool triv_char = true;
        for (auto& chv : r.character) triv_char = triv_char && std::abs(chv - cplx(1.0)) < 1e-9;
        if (triv_class && !triv_char) e_idx = i;
        if (!triv_class && triv_char) m_idx = i;
        if (!triv_class && !triv_char) psi_idx = i;
    }
    REQUIRE((e_idx >= 0 && m_idx >= 0 && psi_idx >= 0));
    CHECK(table.n[e_idx][m_idx][psi_idx] == 1);
    CHECK(table.n[psi_idx][psi_idx][unit_idx] == 1);
    CHECK(table.n[e_idx][e_idx][unit_idx] == 1);

    // decompose(e (x) m) = {psi} via both oracles (inside decompose)
    auto em = tensor_rep(simples[e_idx], simples[m_idx]);
    auto mult = decompose(em, simples);
    for (int k = 0; k < 4; ++k) CHECK(mult[k] == (k == psi_idx ? 1 : 0));

    // double braid c_{m,e} c_{e,m} = -1 on the 1-dim space
    Mat cme = braid(simples[m_idx], simples[e_idx]);
    Mat cem = braid(simples[e_idx], simples[m_idx]);
    CHECK(std::abs((cme * cem)(0, 0) + 1.0) < 1e-12);
}

TEST_CASE("decompose identities") {
    const auto& ctx = ctx_s3();
    auto simples = simples_of(ctx);
    for (std::size_t i = 0; i < simples.size(); ++i) {
        auto mult = decompose(simples[i], simples);
        for (std::size_t k = 0; k < simples.size(); ++k)
            CHECK(mult[k] == (k == i ? 1 : 0));
    }
    // X (x) dual(X) contains the unit exactly once
    auto u = unit_rep(ctx);
    for (auto& x : simples) {
        auto xx = tensor_rep(x, dual_rep(x));
        CHECK(hom_dim(u, xx) == 1);
    }
}

TEST_CASE("pairwise inequivalence via hom dimension") {
    const auto& ctx = ctx_s3();
    auto simples = simples_of(ctx);
    for (std::size_t i = 0; i < simples.size(); ++i)
        for (std::size_t j = 0; j < simples.size(); ++j)
            CHECK(hom_dim(simples[i], simples[j]) == (i == j ? 1 : 0));
}

TEST_CASE("fusion for D(Z3) is pointed Z3 x Z3") {
    auto table = fusion_table(ctx_z3());
    REQUIRE(table.labels.size() == 9);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            int total = 0;
            for (int k = 0; k < 9; ++k) total += table.n[i][j][k];
            CHECK(total == 1);
            CHECK(table.dims[i] == 1);
        }
    CHECK(table.symmetric);
}

TEST_CASE("fusion for D(S3) satisfies dimension identity and symmetry report") {
    auto table = fusion_table(ctx_s3());
    REQUIRE(table.labels.size() == 8);
    // dimension identity is asserted inside fusion_table; spot check the report
    CHECK(table.symmetric);
}

TEST_CASE("braiding: unit, naturality, hexagons") {
    const auto& ctx = ctx_z2();
    auto simples = simples_of(ctx);
    auto u = unit_rep(ctx);
    for (auto& v : simples) {
        Mat c = braid(u, v);
        CHECK(max_abs_diff(c, Mat::Identity(v.dim, v.dim)) < 1e-12);
        Mat c2 = braid(v, u);
        CHECK(max_abs_diff(c2, Mat::Identity(v.dim, v.dim)) < 1e-12);
    }
    // hexagons on all triples of D(Z2) simples (strict associators)
    for (auto& a : simples)
        for (auto& b : simples)
            for (auto& c : simples) {
                Mat lhs1 = braid(a, tensor_rep(b, c));
                Mat rhs1 = kron(Mat::Identity(b.dim, b.dim), braid(a, c)) *
                           kron(braid(a, b), Mat::Identity(c.dim, c.dim));
                CHECK(max_abs_diff(lhs1, rhs1) < 1e-10);
                Mat lhs2 = braid(tensor_rep(a, b), c);
                Mat rhs2 = kron(braid(a, c), Mat::Identity(b.dim, b.dim)) *
                           kron(Mat::Identity(a.dim, a.dim), braid(b, c));
                CHECK(max_abs_diff(lhs2, rhs2) < 1e-10);
            }
}

TEST_CASE("hexagons for D(S3)") {
    const auto& ctx = ctx_s3();
    auto simples = simples_of(ctx);
    for (auto& a : simples)
        for (auto& b : simples)
            for (auto& c : simples) {
                Mat lhs1 = braid(a, tensor_rep(b, c));
                Mat rhs1 = kron(Mat::Identity(b.dim, b.dim), braid(a, c)) *
                           kron(braid(a, b), Mat::Identity(c.dim, c.dim));
                CHECK(max_abs_diff(lhs1, rhs1) < 1e-9);
                Mat lhs2 = braid(tensor_rep(a, b), c);
                Mat rhs2 = kron(braid(a, c), Mat::Identity(b.dim, b.dim)) *
                           kron(Mat::Identity(a.dim, a.dim), braid(b, c));
                CHECK(max_abs_diff(lhs2, rhs2) < 1e-9);
            }
}

TEST_CASE("braiding naturality against found intertwiners") {
    const auto& ctx = ctx_s3();
    auto simples = simples_of(ctx);
    // V = X6 (x) X7 decomposes; take T: simple -> V for each simple with hom
    auto v = tensor_rep(simples[6], simples[7]);
    const auto& w = simples[3];
    Mat cvw = braid(v, w);
    for (auto& x : simples) {
        for (auto& T : intertwiner_basis(x, v)) {
            Mat lhs = cvw * kron(T, Mat::Identity(w.dim, w.dim));
            Mat rhs = kron(Mat::Identity(w.dim, w.dim), T) * braid(x, w);
            CHECK(max_abs_diff(lhs, rhs) < 1e-9);
        }
    }
}

TEST_CASE("duals and quantum dimensions") {
    for (const auto* ctx : {&ctx_z2(), &ctx_s3()}) {
        auto simples = simples_of(*ctx);
        for (auto& v : simples) {
            CHECK(std::abs(quantum_dimension(v) - v.dim) < 1e-9);
        }
    }
    auto u = unit_rep(ctx_z2());
    auto du = dual_rep(u);
    CHECK(hom_dim(u, du) == 1);
}

TEST_CASE("muger center is trivial") {
    for (const auto* ctx : {&ctx_z2(), &ctx_z3(), &ctx_s3()}) {
        auto center = muger_center(*ctx);
        REQUIRE(center.size() == 1);
        const auto& l = center[0];
        CHECK(ctx->classes[l.class_id].representative == ctx->group.identity());
        const auto& r = ctx->cent_irreps[l.class_id][l.irrep_index];
        for (auto& chv : r.character) CHECK(std::abs(chv - cplx(1.0)) < 1e-9);
    }
}

TEST_CASE("json outputs") {
    auto table = fusion_table(ctx_z2());
    auto j = fusion_to_json(table);
    CHECK(j.find("labels") != std::string::npos);
    auto simples = simples_of(ctx_z2());
    CHECK(braid_to_json(braid(simples[1], simples[2])).size() > 2);
}
