// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "qd/group.hpp"
#include "qd/irreps.hpp"

using namespace qd;

TEST_CASE("build_group basics") {
    auto t = FiniteGroup::from_table({{0}});
    CHECK(t.order() == 1);
    CHECK(t.identity() == 0);

    auto z2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
    CHECK(z2.order() == 2);
    CHECK(z2.inv(1) == 1);

    auto s3 = catalog_group("S3");
    CHECK(s3.order() == 6);
    // brute-force commutativity scan finds a non-commuting pair
    bool noncomm = false;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            if (s3.mul(a, b) != s3.mul(b, a)) noncomm = true;
    CHECK(noncomm);
    CHECK(!s3.is_abelian());
    CHECK(catalog_group("Z5").is_abelian());
}

TEST_CASE("build_group rejects bad tables") {
    // not associative (and has an identity row/col): Z3 table with one entry patched
    CHECK_THROWS_WITH_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 1, 2}}),
                         doctest::Contains("NoIdentity"), Error);
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), Error);
    // latin-square-free table without identity
    CHECK_THROWS_WITH_AS(FiniteGroup::from_table({{1, 0}, {0, 0}}), doctest::Contains("NoIdentity"),
                         Error);
    // associativity violation named
    try {
        FiniteGroup::from_table({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK((e.kind() == "NotAssociative" || e.kind() == "NoInverse" ||
               e.kind() == "NoIdentity"));
    }
}

TEST_CASE("parse and round-trip table text") {
    auto z4 = catalog_group("Z4");
    auto z4b = parse_group_table(z4.to_table_text());
    CHECK(z4b.order() == 4);
    CHECK(z4b.flat_table() == z4.flat_table());
    CHECK_THROWS_WITH_AS(parse_group_table("2\n0 1\n1"), doctest::Contains("row 2"), Error);
}

TEST_CASE("conjugacy classes") {
    auto z2 = catalog_group("Z2");
    CHECK(conjugacy_classes(z2).size() == 2);

    auto s3 = catalog_group("S3");
    auto cs = conjugacy_classes(s3);
    std::multiset<std::size_t> sizes;
    for (auto& c : cs) sizes.insert(c.elements.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});

    auto q8 = catalog_group("Q8");
    auto cq = conjugacy_classes(q8);
    std::multiset<std::size_t> qsizes;
    for (auto& c : cq) qsizes.insert(c.elements.size());
    CHECK(qsizes == std::multiset<std::size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("iterator convention") {
    for (auto name : {"S3", "S4", "D4", "Q8", "Z6"}) {
        auto g = catalog_group(name);
        for (auto& c : conjugacy_classes(g)) {
            CHECK(c.representative == c.elements.front());
            for (std::size_t i = 0; i < c.elements.size(); ++i) {
                CHECK(g.conj(c.iterators[i], c.representative) == c.elements[i]);
                if (c.elements[i] == c.representative) CHECK(c.iterators[i] == g.identity());
            }
        }
    }
}

TEST_CASE("centralizers and orbit-stabilizer") {
    auto s3 = catalog_group("S3");
    auto cs = conjugacy_classes(s3);
    for (auto& c : cs) {
        auto z = centralizer(s3, c);
        CHECK(c.elements.size() * z.elements.size() == 6);
        if (c.elements.size() == 3) CHECK(z.elements.size() == 2);  // transpositions
        if (c.elements.size() == 2) CHECK(z.elements.size() == 3);  // 3-cycles
        // subgroup sanity: contains identity, closed under inverse
        CHECK(z.index_in_sub[s3.identity()] >= 0);
        for (int m : z.elements) CHECK(z.index_in_sub[s3.inv(m)] >= 0);
    }

    auto z2 = catalog_group("Z2");
    auto cz = conjugacy_classes(z2);
    CHECK(centralizer(z2, cz[1]).elements.size() == 2);
}

TEST_CASE("unique g = q n factorization") {
    for (auto name : {"S3", "D4", "Q8", "S4"}) {
        auto g = catalog_group(name);
        for (auto& c : conjugacy_classes(g)) {
            auto z = centralizer(g, c);
            for (int x = 0; x < g.order(); ++x) {
                int count = 0;
                for (int q : c.iterators)
                    for (int m : z.elements)
                        if (g.mul(q, m) == x) ++count;
                CHECK(count == 1);
            }
        }
    }
}

TEST_CASE("irreps of cyclic groups match characters") {
    for (int n = 2; n <= 8; ++n) {
        auto g = catalog_group("Z" + std::to_string(n));
        auto rs = irreps(g);
        REQUIRE(static_cast<int>(rs.size()) == n);
        for (auto& r : rs) CHECK(r.dim == 1);
        // every character is chi_k(j) = exp(2 pi i k j / n) for some k
        for (auto& r : rs) {
            // identify k from the value at generator 1
            double ang = std::arg(r.character[1]);
            double k = ang * n / (2 * M_PI);
            long kk = std::lround(k < 0 ? k + n : k);
            for (int j = 0; j < n; ++j) {
                cplx want = std::polar(1.0, 2 * M_PI * double(kk) * j / n);
                CHECK(std::abs(r.character[j] - want) < 1e-8);
            }
        }
    }
}

TEST_CASE("irrep census for catalog") {
    for (auto name : catalog_names()) {
        auto g = catalog_group(name);
        auto rs = irreps(g);
        CHECK(rs.size() == conjugacy_classes(g).size());
        int sumsq = 0;
        for (auto& r : rs) sumsq += r.dim * r.dim;
        CHECK(sumsq == g.order());
    }
    auto s3 = irreps(catalog_group("S3"));
    std::multiset<int> dims;
    for (auto& r : s3) dims.insert(r.dim);
    CHECK(dims == std::multiset<int>{1, 1, 2});
    CHECK(irreps(catalog_group("trivial")).size() == 1);
}

TEST_CASE("schur orthogonality for every ordered pair") {
    for (auto name : {"trivial", "Z2", "Z6", "S3", "D4", "Q8"}) {
        auto g = catalog_group(name);
        auto rs = irreps(g);
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < rs.size(); ++j)
                CHECK(schur_check(rs[i], rs[j], g, i == j));
    }
}

TEST_CASE("schur on specific spec cases") {
    auto z2 = catalog_group("Z2");
    auto rs = irreps(z2);
    REQUIRE(rs.size() == 2);
    // trivial vs trivial: sum = |H|; trivial vs sign: 0
    CHECK(schur_check(rs[0], rs[0], z2, true));
    CHECK(schur_check(rs[0], rs[1], z2, false));
    auto s3 = irreps(catalog_group("S3"));
    CHECK(schur_check(s3[2], s3[2], catalog_group("S3"), true));
}
