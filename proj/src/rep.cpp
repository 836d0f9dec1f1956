// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#include "qd/rep.hpp"

#include <Eigen/SVD>
#include <json.hpp>

#include "qd/parallel.hpp"

namespace qd {

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Mat swap_matrix(int da, int db) {
    Mat s = Mat::Zero(da * db, da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) s(j * da + i, i * db + j) = 1.0;
    return s;
}

DoubleContext DoubleContext::make(const FiniteGroup& g, std::uint64_t seed, double tol) {
    DoubleContext ctx;
    ctx.group = g;
    ctx.classes = conjugacy_classes(g);
    ctx.cls_index = class_index(g, ctx.classes);
    ctx.seed = seed;
    ctx.tol = tol;
    for (auto& c : ctx.classes) {
        ctx.cents.push_back(centralizer(g, c));
        IrrepOptions opt;
        opt.seed = seed + static_cast<std::uint64_t>(c.class_id);
        opt.tol = tol;
        ctx.cent_irreps.push_back(irreps(ctx.cents.back().group, opt));
    }
    return ctx;
}

int DoubleContext::num_labels() const {
    int n = 0;
    for (auto& v : cent_irreps) n += static_cast<int>(v.size());
    return n;
}

std::vector<DGIrrepLabel> all_labels(const DoubleContext& ctx) {
    std::vector<DGIrrepLabel> out;
    for (std::size_t c = 0; c < ctx.classes.size(); ++c)
        for (std::size_t r = 0; r < ctx.cent_irreps[c].size(); ++r)
            out.push_back({static_cast<int>(c), static_cast<int>(r)});
    return out;
}

int label_dim(const DoubleContext& ctx, const DGIrrepLabel& label) {
    return static_cast<int>(ctx.classes[label.class_id].elements.size()) *
           ctx.cent_irreps[label.class_id][label.irrep_index].dim;
}

void verify_dgrep(const DGRep& rep, double tol_scale) {
    const FiniteGroup& g = rep.ctx->group;
    const double tol = rep.ctx->tol * rep.dim * tol_scale;
    Mat sum = Mat::Zero(rep.dim, rep.dim);
    for (int x = 0; x < g.order(); ++x) sum += rep.proj[x];
    if (max_abs_diff(sum, Mat::Identity(rep.dim, rep.dim)) > tol)
        fail("CovarianceViolation", "grading projectors do not resolve the identity");
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) {
            Mat want = (x == y) ? rep.proj[x] : Mat::Zero(rep.dim, rep.dim);
            if (max_abs_diff(rep.proj[x] * rep.proj[y], want) > tol)
                fail("CovarianceViolation", "grading projectors not orthogonal");
        }
    for (int x = 0; x < g.order(); ++x) {
        if (max_abs_diff(rep.act[x] * rep.act[x].adjoint(), Mat::Identity(rep.dim, rep.dim)) > tol)
            fail("CovarianceViolation", "action not unitary");
        for (int y = 0; y < g.order(); ++y)
            if (max_abs_diff(rep.act[x] * rep.act[y], rep.act[g.mul(x, y)]) > tol)
                fail("CovarianceViolation", "action not a homomorphism");
    }
    for (int h = 0; h < g.order(); ++h)
        for (int x = 0; x < g.order(); ++x)
            if (max_abs_diff(rep.act[h] * rep.proj[x] * rep.act[h].adjoint(),
                             rep.proj[g.conj(h, x)]) > tol)
                fail("CovarianceViolation", "grading/action covariance fails");
}

DGRep build_irrep(const DoubleContext& ctx, const DGIrrepLabel& label) {
    const FiniteGroup& g = ctx.group;
    const ConjugacyClass& cls = ctx.classes[label.class_id];
    const Centralizer& cent = ctx.cents[label.class_id];
    const UnitaryIrrep& r = ctx.cent_irreps[label.class_id][label.irrep_index];
    const int nc = static_cast<int>(cls.elements.size());
    const int dr = r.dim;

    DGRep rep;
    rep.ctx = &ctx;
    rep.dim = nc * dr;
    rep.proj.assign(g.order(), Mat::Zero(rep.dim, rep.dim));
    rep.act.assign(g.order(), Mat::Zero(rep.dim, rep.dim));

    // Basis |i,j> at index i*dr + j; P_x picks out x == c_i.
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < dr; ++j)
            rep.proj[cls.elements[i]](i * dr + j, i * dr + j) = 1.0;

    for (int h = 0; h < g.order(); ++h) {
        for (int i = 0; i < nc; ++i) {
            int target = g.conj(h, cls.elements[i]);
            int ip = ctx.cls_index.pos_of[target];
            // m = q_{i'}^-1 h q_i lies in the centralizer.
            int m = g.mul(g.mul(g.inv(cls.iterators[ip]), h), cls.iterators[i]);
            int msub = cent.index_in_sub[m];
            if (msub < 0) fail("CovarianceViolation", "iterator convention broke q' h q in N_C");
            for (int j = 0; j < dr; ++j)
                for (int jp = 0; jp < dr; ++jp)
                    rep.act[h](ip * dr + jp, i * dr + j) = r.mats[msub](jp, j);
        }
    }
    verify_dgrep(rep);
    return rep;
}

DGRep unit_rep(const DoubleContext& ctx) {
    DGRep rep;
    rep.ctx = &ctx;
    rep.dim = 1;
    rep.proj.assign(ctx.group.order(), Mat::Zero(1, 1));
    rep.proj[ctx.group.identity()](0, 0) = 1.0;
    rep.act.assign(ctx.group.order(), Mat::Identity(1, 1));
    return rep;
}

Mat rep_apply(const DGRep& rep, const DoubleElement& x) {
    Mat out = Mat::Zero(rep.dim, rep.dim);
    for (auto& [k, c] : x.coeffs) out += c * (rep.proj[k.first] * rep.act[k.second]);
    return out;
}

DGRep tensor_rep(const DGRep& v, const DGRep& w) {
    const FiniteGroup& g = v.ctx->group;
    DGRep rep;
    rep.ctx = v.ctx;
    rep.dim = v.dim * w.dim;
    rep.proj.assign(g.order(), Mat::Zero(rep.dim, rep.dim));
    rep.act.assign(g.order(), Mat::Zero(rep.dim, rep.dim));
    for (int x = 0; x < g.order(); ++x) {
        for (int a = 0; a < g.order(); ++a) {
            int b = g.mul(g.inv(a), x);
            rep.proj[x] += kron(v.proj[a], w.proj[b]);
        }
        rep.act[x] = kron(v.act[x], w.act[x]);
    }
    return rep;
}

DGRep dual_rep(const DGRep& v) {
    const FiniteGroup& g = v.ctx->group;
    DGRep rep;
    rep.ctx = v.ctx;
    rep.dim = v.dim;
    rep.proj.assign(g.order(), Mat());
    rep.act.assign(g.order(), Mat());
    for (int x = 0; x < g.order(); ++x) {
        rep.proj[x] = v.proj[g.inv(x)].transpose();
        rep.act[x] = v.act[g.inv(x)].transpose();
    }
    return rep;
}

std::vector<Mat> intertwiner_basis(const DGRep& a, const DGRep& b) {
    // f : a -> b with f pi_a(x) = pi_b(x) f for the generators delta_s (x) e
    // and 1 (x) g. Unknown f is (b.dim x a.dim); stack the commutation
    // constraints and take the nullspace.
    const FiniteGroup& g = a.ctx->group;
    const int rows = b.dim, cols = a.dim;
    const int nv = rows * cols;
    std::vector<Mat> lhs;
    auto constraint = [&](const Mat& mb, const Mat& ma) {
        // f ma - mb f = 0  ->  (ma^T (x) I - I (x) mb) vec(f) = 0, vec column-major
        lhs.push_back(kron(ma.transpose(), Mat::Identity(rows, rows)) -
                      kron(Mat::Identity(cols, cols), mb));
    };
    for (int s = 0; s < g.order(); ++s) constraint(b.proj[s], a.proj[s]);
    for (int x = 0; x < g.order(); ++x) constraint(b.act[x], a.act[x]);
    Mat big(static_cast<Eigen::Index>(lhs.size()) * nv, nv);
    for (std::size_t i = 0; i < lhs.size(); ++i)
        big.middleRows(static_cast<Eigen::Index>(i) * nv, nv) = lhs[i];
    Eigen::JacobiSVD<Mat> svd(big, Eigen::ComputeThinV);
    int rank = 0;
    if (svd.singularValues().size() > 0 && svd.singularValues()(0) > 1e-12) {
        const double cut = 1e-8 * svd.singularValues()(0);
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > cut) ++rank;
    }
    int null_dim = nv - rank;
    std::vector<Mat> out;
    for (int k = 0; k < null_dim; ++k) {
        Vec vecf = svd.matrixV().col(nv - 1 - k);
        Mat f(rows, cols);
        for (int c = 0; c < cols; ++c) f.col(c) = vecf.segment(c * rows, rows);
        out.push_back(f);
    }
    return out;
}

namespace {

// Averaged projector onto intertwiners in Hom(a, b); its trace is dim Hom.
Mat hom_projector(const DGRep& a, const DGRep& b) {
    const FiniteGroup& g = a.ctx->group;
    const int rows = b.dim, cols = a.dim;
    Mat e = Mat::Zero(rows * cols, rows * cols);
    // E(f) = (1/|G|) sum_{h,x} [P_x rho(h)]_b f [P_{h^-1 x h} rho(h^-1)]_a
    for (int h = 0; h < g.order(); ++h)
        for (int x = 0; x < g.order(); ++x) {
            Mat left = b.proj[x] * b.act[h];
            Mat right = a.proj[g.conj(g.inv(h), x)] * a.act[g.inv(h)];
            e += kron(right.transpose(), left);
        }
    return e / static_cast<double>(g.order());
}

}  // namespace

int hom_dim(const DGRep& a, const DGRep& b) {
    Mat e = hom_projector(a, b);
    double tr = e.trace().real();
    long rounded = std::lround(tr);
    if (std::abs(tr - static_cast<double>(rounded)) > 1e-6)
        fail("NumericalFailure", "intertwiner projector trace not integral");
    return static_cast<int>(rounded);
}

std::vector<int> decompose(const DGRep& rep, const std::vector<DGRep>& simples) {
    std::vector<int> mult(simples.size(), 0);
    int total = 0;
    for (std::size_t k = 0; k < simples.size(); ++k) {
        mult[k] = hom_dim(simples[k], rep);
        total += mult[k] * simples[k].dim;
    }
    if (total != rep.dim)
        fail("IncompleteSimples", "sum m_k d_k = " + std::to_string(total) +
                                      " != " + std::to_string(rep.dim));
    // Independent oracle: the commutant dimension equals sum m_k^2.
    auto comm = intertwiner_basis(rep, rep);
    long want = 0;
    for (int m : mult) want += static_cast<long>(m) * m;
    if (static_cast<long>(comm.size()) != want)
        fail("IncompleteSimples", "commutant dimension " + std::to_string(comm.size()) +
                                      " != sum m_k^2 = " + std::to_string(want));
    return mult;
}

FusionTable fusion_table(const DoubleContext& ctx) {
    if (ctx.group.order() > 12)
        fail("NumericalFailure", "fusion table restricted to |G| <= 12");
    FusionTable t;
    t.labels = all_labels(ctx);
    std::vector<DGRep> simples;
    for (auto& l : t.labels) simples.push_back(build_irrep(ctx, l));
    for (auto& s : simples) t.dims.push_back(s.dim);
    const int n = static_cast<int>(t.labels.size());
    t.n.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<std::vector<int>> rows(pairs.size());
    par::parallel_for(pairs.size(), [&](std::size_t p) {
        auto [i, j] = pairs[p];
        rows[p] = decompose(tensor_rep(simples[i], simples[j]), simples);
    });
    for (std::size_t p = 0; p < pairs.size(); ++p) t.n[pairs[p].first][pairs[p].second] = rows[p];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long d = 0;
            for (int k = 0; k < n; ++k) {
                d += static_cast<long>(t.n[i][j][k]) * t.dims[k];
                if (t.n[i][j][k] != t.n[j][i][k]) t.symmetric = false;
            }
            if (d != static_cast<long>(t.dims[i]) * t.dims[j])
                fail("IncompleteSimples", "dimension identity fails in fusion table");
        }
    return t;
}

Mat braid(const DGRep& v, const DGRep& w) {
    const FiniteGroup& g = v.ctx->group;
    Mat rmat = Mat::Zero(v.dim * w.dim, v.dim * w.dim);
    for (int x = 0; x < g.order(); ++x) rmat += kron(v.proj[x], w.act[x]);
    Mat c = swap_matrix(v.dim, w.dim) * rmat;
    const double tol = v.ctx->tol * v.dim * w.dim;
    if (max_abs_diff(c * c.adjoint(), Mat::Identity(c.rows(), c.cols())) > tol)
        fail("NumericalFailure", "braiding not unitary");
    // Intertwiner property against every basis element of D(G).
    DGRep vw = tensor_rep(v, w);
    DGRep wv = tensor_rep(w, v);
    for (int s = 0; s < g.order(); ++s)
        for (int x = 0; x < g.order(); ++x) {
            DoubleElement e = double_basis(g, s, x);
            if (max_abs_diff(c * rep_apply(vw, e), rep_apply(wv, e) * c) > tol)
                fail("NumericalFailure", "braiding does not intertwine");
        }
    return c;
}

Mat multiplet_braiding(const DGRep& d1, const DGRep& d2) {
    const FiniteGroup& g = d1.ctx->group;
    // Flipped universal R used by the ribbon-multiplet calculus.
    Mat rmat = Mat::Zero(d1.dim * d2.dim, d1.dim * d2.dim);
    for (int x = 0; x < g.order(); ++x) rmat += kron(d1.act[x], d2.proj[x]);
    return swap_matrix(d1.dim, d2.dim) * rmat;
}

DualityData duality_maps(const DGRep& v) {
    const FiniteGroup& g = v.ctx->group;
    const int d = v.dim;
    DualityData out;
    out.ev = Mat::Zero(1, d * d);    // on V* (x) V: (phi, x) -> phi(x)
    out.coev = Mat::Zero(d * d, 1);  // into V (x) V*
    for (int i = 0; i < d; ++i) {
        out.ev(0, i * d + i) = 1.0;
        out.coev(i * d + i, 0) = 1.0;
    }
    const double tol = v.ctx->tol * d * d;
    DGRep vs = dual_rep(v);
    DGRep vsv = tensor_rep(vs, v);
    DGRep vvs = tensor_rep(v, vs);
    for (int s = 0; s < g.order(); ++s)
        for (int x = 0; x < g.order(); ++x) {
            DoubleElement e = double_basis(g, s, x);
            cplx eps = counit(e);
            if (max_abs_diff(out.ev * rep_apply(vsv, e), eps * out.ev) > tol)
                fail("NumericalFailure", "evaluation is not a morphism");
            if (max_abs_diff(rep_apply(vvs, e) * out.coev, eps * out.coev) > tol)
                fail("NumericalFailure", "coevaluation is not a morphism");
        }
    // zig-zags: (Id (x) ev)(coev (x) Id) = Id_V and (ev (x) Id)(Id (x) coev) = Id_V*
    Mat z1 = Mat::Zero(d, d), z2 = Mat::Zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            cplx acc1 = 0, acc2 = 0;
            for (int a = 0; a < d; ++a) {
                acc1 += out.coev(i * d + a, 0) * out.ev(0, a * d + j);
                acc2 += out.coev(a * d + i, 0) * out.ev(0, j * d + a);
            }
            z1(i, j) = acc1;
            z2(i, j) = acc2;
        }
    if (max_abs_diff(z1, Mat::Identity(d, d)) > tol || max_abs_diff(z2, Mat::Identity(d, d)) > tol)
        fail("NumericalFailure", "zig-zag equations fail");
    return out;
}

double quantum_dimension(const DGRep& v) {
    DualityData d = duality_maps(v);
    return (d.coev.adjoint() * d.coev)(0, 0).real();
}

std::vector<DGIrrepLabel> muger_center(const DoubleContext& ctx) {
    auto labels = all_labels(ctx);
    std::vector<DGRep> simples;
    for (auto& l : labels) simples.push_back(build_irrep(ctx, l));
    std::vector<DGIrrepLabel> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        bool central = true;
        for (std::size_t j = 0; j < labels.size() && central; ++j) {
            Mat cij = braid(simples[i], simples[j]);
            Mat cji = braid(simples[j], simples[i]);
            Mat dbl = cji * cij;
            if (max_abs_diff(dbl, Mat::Identity(dbl.rows(), dbl.cols())) >
                ctx.tol * dbl.rows() * 10)
                central = false;
        }
        if (central) out.push_back(labels[i]);
    }
    return out;
}

std::string fusion_to_json(const FusionTable& t) {
    nlohmann::ordered_json j;
    j["labels"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.labels.size(); ++i) {
        nlohmann::ordered_json l;
        l["C"] = t.labels[i].class_id;
        l["R"] = t.labels[i].irrep_index;
        l["dim"] = t.dims[i];
        j["labels"].push_back(l);
    }
    j["N"] = t.n;
    j["symmetric"] = t.symmetric;
    return j.dump();
}

std::string braid_to_json(const Mat& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(row);
    }
    return rows.dump();
}

}  // namespace qd
