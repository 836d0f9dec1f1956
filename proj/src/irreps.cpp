// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#include "qd/irreps.hpp"

#include <algorithm>
#include <random>

namespace qd {

double max_abs_diff(const Mat& a, const Mat& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

namespace {

Mat regular_mat(const FiniteGroup& h, int g) {
    const int n = h.order();
    Mat m = Mat::Zero(n, n);
    for (int k = 0; k < n; ++k) m(h.mul(g, k), k) = 1.0;
    return m;
}

bool char_equal(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace

namespace {

std::vector<UnitaryIrrep> irreps_attempt(const FiniteGroup& h, const IrrepOptions& opt,
                                         std::mt19937_64& rng);

}  // namespace

std::vector<UnitaryIrrep> irreps(const FiniteGroup& h, const IrrepOptions& opt) {
    const int n = h.order();
    if (n > opt.max_order)
        fail("NumericalFailure",
             "group order " + std::to_string(n) + " above bound " + std::to_string(opt.max_order));
    std::mt19937_64 rng(opt.seed);
    // A fresh random draw separates clustered eigenvalues; a handful of
    // attempts keeps the procedure deterministic for a given seed.
    for (int attempt = 0; attempt < 4; ++attempt) {
        try {
            return irreps_attempt(h, opt, rng);
        } catch (const Error&) {
            if (attempt == 3) throw;
        }
    }
    fail("NumericalFailure", "unreachable");
}

namespace {

std::vector<UnitaryIrrep> irreps_attempt(const FiniteGroup& h, const IrrepOptions& opt,
                                         std::mt19937_64& rng) {
    const int n = h.order();
    std::normal_distribution<double> nd(0.0, 1.0);
    Mat x(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) x(r, c) = cplx(nd(rng), nd(rng));
    Mat herm = (x + x.adjoint()) / 2.0;

    // Twirl into the commutant of the regular representation.
    std::vector<Mat> reg(n);
    for (int g = 0; g < n; ++g) reg[g] = regular_mat(h, g);
    Mat twirl = Mat::Zero(n, n);
    for (int g = 0; g < n; ++g) twirl += reg[g] * herm * reg[g].adjoint();
    twirl /= static_cast<double>(n);
    twirl = (twirl + twirl.adjoint()) / 2.0;

    Eigen::SelfAdjointEigenSolver<Mat> es(twirl);
    if (es.info() != Eigen::Success) fail("NumericalFailure", "eigendecomposition failed");

    // Group eigenvectors into eigenspaces; each is an irreducible carrier.
    const double gap = 1e-7 * n;
    std::vector<UnitaryIrrep> found;
    int lo = 0;
    while (lo < n) {
        int hi = lo + 1;
        while (hi < n && es.eigenvalues()(hi) - es.eigenvalues()(hi - 1) < gap) ++hi;
        Mat basis = es.eigenvectors().middleCols(lo, hi - lo);
        // Orthonormalize (defensive against clustered eigenvalues).
        Eigen::HouseholderQR<Mat> qr(basis);
        basis = qr.householderQ() * Mat::Identity(n, hi - lo);

        UnitaryIrrep r;
        r.dim = hi - lo;
        r.mats.resize(n);
        r.character.resize(n);
        for (int g = 0; g < n; ++g) {
            r.mats[g] = basis.adjoint() * reg[g] * basis;
            r.character[g] = r.mats[g].trace();
        }
        // Keep only one copy per equivalence class (characters match).
        bool dup = false;
        for (const auto& f : found)
            if (f.dim == r.dim && char_equal(f.character, r.character, opt.tol * n)) dup = true;
        if (!dup) found.push_back(std::move(r));
        lo = hi;
    }

    std::stable_sort(found.begin(), found.end(),
                     [](const UnitaryIrrep& a, const UnitaryIrrep& b) { return a.dim < b.dim; });

    // Postconditions.
    auto classes = conjugacy_classes(h);
    if (found.size() != classes.size())
        fail("NumericalFailure", "irrep count " + std::to_string(found.size()) +
                                     " != class count " + std::to_string(classes.size()));
    int sumsq = 0;
    for (const auto& r : found) sumsq += r.dim * r.dim;
    if (sumsq != n) fail("NumericalFailure", "sum of squared dims != |H|");
    for (const auto& r : found) {
        const double tol = opt.tol * r.dim;
        for (int a = 0; a < n; ++a) {
            if (max_abs_diff(r.mats[a] * r.mats[a].adjoint(), Mat::Identity(r.dim, r.dim)) > tol)
                fail("NumericalFailure", "irrep not unitary");
            for (int b = 0; b < n; ++b)
                if (max_abs_diff(r.mats[a] * r.mats[b], r.mats[h.mul(a, b)]) > tol)
                    fail("NumericalFailure", "irrep not a homomorphism");
        }
        cplx norm = 0;
        for (int g = 0; g < n; ++g) norm += r.character[g] * std::conj(r.character[g]);
        norm /= static_cast<double>(n);
        if (std::abs(norm - 1.0) > tol) fail("NumericalFailure", "irrep not irreducible");
    }
    return found;
}

}  // namespace

bool schur_check(const UnitaryIrrep& r1, const UnitaryIrrep& r2, const FiniteGroup& h,
                 bool same_irrep, double tol) {
    const int n = h.order();
    for (int j = 0; j < r1.dim; ++j)
        for (int k = 0; k < r1.dim; ++k)
            for (int l = 0; l < r2.dim; ++l)
                for (int m = 0; m < r2.dim; ++m) {
                    cplx s = 0;
                    for (int g = 0; g < n; ++g) s += r1.mats[g](j, k) * std::conj(r2.mats[g](l, m));
                    cplx want = 0;
                    if (same_irrep && j == l && k == m)
                        want = static_cast<double>(n) / r1.dim;
                    if (std::abs(s - want) > tol * n) return false;
                }
    return true;
}

}  // namespace qd
