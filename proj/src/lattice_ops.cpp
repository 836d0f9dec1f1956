// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#include "qd/lattice_ops.hpp"

#include <algorithm>
#include <cmath>

#include "qd/parallel.hpp"

namespace qd::lat {

ConfigCodec::ConfigCodec(const Patch& p, const FiniteGroup& g) {
    nedges_ = static_cast<int>(p.edges.size());
    bits_ = 1;
    while ((1 << bits_) < g.order()) ++bits_;
    if (bits_ * nedges_ > 192)
        fail("SupportMismatch", "patch/group too large for the packed configuration");
}

int ConfigCodec::get(const PackedConfig& c, int edge) const {
    int pos = edge * bits_;
    int word = pos >> 6, off = pos & 63;
    std::uint64_t mask = (bits_ == 64) ? ~0ull : ((1ull << bits_) - 1);
    std::uint64_t lo = c.w[word] >> off;
    if (off + bits_ > 64 && word + 1 < 3) lo |= c.w[word + 1] << (64 - off);
    return static_cast<int>(lo & mask);
}

void ConfigCodec::set(PackedConfig& c, int edge, int val) const {
    int pos = edge * bits_;
    int word = pos >> 6, off = pos & 63;
    std::uint64_t mask = ((1ull << bits_) - 1);
    c.w[word] &= ~(mask << off);
    c.w[word] |= (static_cast<std::uint64_t>(val) & mask) << off;
    if (off + bits_ > 64 && word + 1 < 3) {
        int spill = off + bits_ - 64;
        std::uint64_t himask = (1ull << spill) - 1;
        c.w[word + 1] &= ~himask;
        c.w[word + 1] |= (static_cast<std::uint64_t>(val) >> (bits_ - spill)) & himask;
    }
}

PackedConfig ConfigCodec::trivial(const FiniteGroup& g) const {
    PackedConfig c;
    for (int e = 0; e < nedges_; ++e) set(c, e, g.identity());
    return c;
}

void SparseState::add(const PackedConfig& c, cplx a) {
    auto it = amp.find(c);
    if (it == amp.end()) {
        if (a != cplx(0.0)) amp.emplace(c, a);
        return;
    }
    it->second += a;
    if (std::abs(it->second) < 1e-15) amp.erase(it);
}

double SparseState::norm() const {
    double s = 0;
    for (auto& [c, a] : amp) s += std::norm(a);
    return std::sqrt(s);
}

SparseState& SparseState::operator*=(cplx s) {
    for (auto& [c, a] : amp) a *= s;
    return *this;
}

SparseState& SparseState::operator+=(const SparseState& o) {
    for (auto& [c, a] : o.amp) add(c, a);
    return *this;
}

cplx inner(const SparseState& a, const SparseState& b) {
    const SparseState& small = a.amp.size() <= b.amp.size() ? a : b;
    const SparseState& big = a.amp.size() <= b.amp.size() ? b : a;
    bool conj_first = &small == &a;
    cplx s = 0;
    for (auto& [c, amp] : small.amp) {
        auto it = big.amp.find(c);
        if (it == big.amp.end()) continue;
        s += conj_first ? std::conj(amp) * it->second : std::conj(it->second) * amp;
    }
    return s;
}

double max_amp_diff(const SparseState& a, const SparseState& b) {
    double m = 0;
    for (auto& [c, amp] : a.amp) {
        auto it = b.amp.find(c);
        cplx other = it == b.amp.end() ? cplx(0) : it->second;
        m = std::max(m, std::abs(amp - other));
    }
    for (auto& [c, amp] : b.amp)
        if (!a.amp.count(c)) m = std::max(m, std::abs(amp));
    return m;
}

namespace {

// How a dual triangle's L^h acts on its canonical edge value, as
// alpha -> l * alpha * r with l, r in {h, h^-1, e} (one side only).
struct LAction {
    bool left;     // multiply on the left
    bool inverse;  // use h^-1
};

// apply_l_edge: left ? (hh * a) : (a * hh^-1) with hh = inverse ? h^-1 : h.
// The four dual-triangle cases, with e* the dual of the canonical edge:
//   e* = (f(s0), f(s1)), v(s0) = d0(e):  L_e^h     -> a |-> h a        {left,  plain}
//   e* = (f(s0), f(s1)), v(s0) = d1(e):  R_e^{h^-1} -> a |-> a h       {right, inverse}
//   e* = (f(s1), f(s0)), v(s0) = d0(e):  L_e^{h^-1} -> a |-> h^-1 a    {left,  inverse}
//   e* = (f(s1), f(s0)), v(s0) = d1(e):  R_e^h     -> a |-> a h^-1     {right, plain}
LAction l_action(const Triangle& tau) {
    bool fwd = right_face(tau.e) == tau.s0.f;  // e* oriented f(s0) -> f(s1)
    bool at_origin = tau.e.from == tau.s0.v;
    if (fwd && at_origin) return {true, false};
    if (fwd && !at_origin) return {false, true};
    if (!fwd && at_origin) return {true, true};
    return {false, false};
}

int apply_l_edge(const FiniteGroup& g, const LAction& act, int h, int a) {
    int hh = act.inverse ? g.inv(h) : h;
    return act.left ? g.mul(hh, a) : g.mul(a, g.inv(hh));
}

int oriented_value(const FiniteGroup& g, const ConfigCodec& codec, const PackedConfig& c,
                   int edge_id, bool along) {
    int v = codec.get(c, edge_id);
    return along ? v : g.inv(v);
}

struct Walker {
    const LatticeEnv& env;
    PackedConfig& c;

    // Applies F^{h,g}; returns false if the delta annihilates.
    bool f_walk(const Ribbon& rho, int h, int g) {
        const FiniteGroup& grp = *env.group;
        int hcur = h, gcur = g;
        for (auto& tau : rho.t) {
            int eid = env.patch->edge_index(tau.e);
            if (!tau.dual) {
                bool along = tau.e.from == tau.s0.v;
                int k = oriented_value(grp, env.codec, c, eid, along);
                hcur = grp.conj(grp.inv(k), hcur);
                gcur = grp.mul(grp.inv(k), gcur);
            } else {
                int val = env.codec.get(c, eid);
                env.codec.set(c, eid, apply_l_edge(grp, l_action(tau), hcur, val));
            }
        }
        return gcur == grp.identity();
    }

    void l_walk(const Ribbon& rho, int h) {
        const FiniteGroup& grp = *env.group;
        int hcur = h;
        for (auto& tau : rho.t) {
            int eid = env.patch->edge_index(tau.e);
            if (!tau.dual) {
                bool along = tau.e.from == tau.s0.v;
                int k = oriented_value(grp, env.codec, c, eid, along);
                hcur = grp.conj(grp.inv(k), hcur);
            } else {
                int val = env.codec.get(c, eid);
                env.codec.set(c, eid, apply_l_edge(grp, l_action(tau), hcur, val));
            }
        }
    }
};

}  // namespace

int flux(const LatticeEnv& env, const Ribbon& rho, const PackedConfig& c) {
    const FiniteGroup& g = *env.group;
    int acc = g.identity();
    for (auto& tau : rho.t) {
        if (tau.dual) continue;
        int eid = env.patch->edge_index(tau.e);
        bool along = tau.e.from == tau.s0.v;
        acc = g.mul(acc, oriented_value(g, env.codec, c, eid, along));
    }
    return acc;
}

int flux_site(const LatticeEnv& env, const Site& s, const PackedConfig& c) {
    return flux(env, face_loop(s), c);
}

bool apply_prim(const LatticeEnv& env, const Prim& prim, PackedConfig& c, cplx& coeff) {
    const FiniteGroup& g = *env.group;
    if (std::holds_alternative<PrimF>(prim)) {
        const auto& p = std::get<PrimF>(prim);
        Walker w{env, c};
        return w.f_walk(*p.rho, p.h, p.g);
    }
    if (std::holds_alternative<PrimL>(prim)) {
        const auto& p = std::get<PrimL>(prim);
        Walker w{env, c};
        w.l_walk(*p.rho, p.h);
        return true;
    }
    if (std::holds_alternative<PrimT>(prim)) {
        const auto& p = std::get<PrimT>(prim);
        return flux(env, *p.rho, c) == p.g;
    }
    if (std::holds_alternative<PrimGauge>(prim)) {
        const auto& p = std::get<PrimGauge>(prim);
        // alpha'_e = g_{d0 e} alpha_e g_{d1 e}^-1 with the element at p.v only
        for (int dir = 0; dir < 3; ++dir) {
            Edge out{p.v, dir};
            if (env.patch->has_edge(out)) {
                int eid = env.patch->edge_index(out);
                env.codec.set(c, eid, g.mul(p.h, env.codec.get(c, eid)));
            }
            Edge in{p.v - kDirs[dir], dir};
            if (env.patch->has_edge(in)) {
                int eid = env.patch->edge_index(in);
                env.codec.set(c, eid, g.mul(env.codec.get(c, eid), g.inv(p.h)));
            }
        }
        return true;
    }
    const auto& p = std::get<PrimDiag>(prim);
    for (auto& [eid, val] : p.edge_vals)
        if (env.codec.get(c, eid) != val) return false;
    (void)coeff;
    return true;
}

Op Op::identity() {
    Op op;
    op.terms.push_back(Term{});
    return op;
}

Op Op::operator*(const Op& o) const {
    Op out;
    for (auto& a : terms)
        for (auto& b : o.terms) {
            Term t;
            t.coeff = a.coeff * b.coeff;
            t.seq = a.seq;
            t.seq.insert(t.seq.end(), b.seq.begin(), b.seq.end());
            out.terms.push_back(std::move(t));
        }
    return out;
}

Op Op::operator+(const Op& o) const {
    Op out = *this;
    out.terms.insert(out.terms.end(), o.terms.begin(), o.terms.end());
    return out;
}

Op Op::operator*(cplx s) const {
    Op out = *this;
    for (auto& t : out.terms) t.coeff *= s;
    return out;
}

namespace {
Prim prim_adjoint(const FiniteGroup& g, const Prim& prim) {
    if (std::holds_alternative<PrimF>(prim)) {
        auto p = std::get<PrimF>(prim);
        p.h = g.inv(p.h);
        return p;
    }
    if (std::holds_alternative<PrimL>(prim)) {
        auto p = std::get<PrimL>(prim);
        p.h = g.inv(p.h);
        return p;
    }
    if (std::holds_alternative<PrimGauge>(prim)) {
        auto p = std::get<PrimGauge>(prim);
        p.h = g.inv(p.h);
        return p;
    }
    return prim;  // diagonal projectors are self-adjoint
}
}  // namespace

std::vector<int> Op::support(const LatticeEnv& env) const {
    std::vector<int> out;
    for (auto& t : terms)
        for (auto& p : t.seq) {
            if (std::holds_alternative<PrimF>(p))
                for (auto& e : std::get<PrimF>(p).rho->support())
                    out.push_back(env.patch->edge_index(e));
            if (std::holds_alternative<PrimL>(p))
                for (auto& e : std::get<PrimL>(p).rho->support())
                    out.push_back(env.patch->edge_index(e));
            if (std::holds_alternative<PrimT>(p))
                for (auto& e : std::get<PrimT>(p).rho->support())
                    out.push_back(env.patch->edge_index(e));
            if (std::holds_alternative<PrimGauge>(p)) {
                Vtx v = std::get<PrimGauge>(p).v;
                for (int dir = 0; dir < 3; ++dir) {
                    Edge out_e{v, dir}, in_e{v - kDirs[dir], dir};
                    if (env.patch->has_edge(out_e)) out.push_back(env.patch->edge_index(out_e));
                    if (env.patch->has_edge(in_e)) out.push_back(env.patch->edge_index(in_e));
                }
            }
            if (std::holds_alternative<PrimDiag>(p))
                for (auto& [eid, val] : std::get<PrimDiag>(p).edge_vals) out.push_back(eid);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Op op_adjoint(const LatticeEnv& env, const Op& op) {
    Op out;
    for (auto& t : op.terms) {
        Term a;
        a.coeff = std::conj(t.coeff);
        for (auto it = t.seq.rbegin(); it != t.seq.rend(); ++it)
            a.seq.push_back(prim_adjoint(*env.group, *it));
        out.terms.push_back(std::move(a));
    }
    return out;
}

SparseState apply_to_basis(const LatticeEnv& env, const Op& op, const PackedConfig& c) {
    SparseState out;
    for (auto& t : op.terms) {
        PackedConfig cur = c;
        cplx coeff = t.coeff;
        bool alive = true;
        for (auto it = t.seq.rbegin(); it != t.seq.rend() && alive; ++it)
            alive = apply_prim(env, *it, cur, coeff);
        if (alive) out.add(cur, coeff);
    }
    return out;
}

SparseState apply_serial(const LatticeEnv& env, const Op& op, const SparseState& s) {
    SparseState out;
    for (auto& [c, a] : s.amp) {
        SparseState part = apply_to_basis(env, op, c);
        for (auto& [cc, aa] : part.amp) out.add(cc, a * aa);
    }
    return out;
}

SparseState apply(const LatticeEnv& env, const Op& op, const SparseState& s) {
    std::vector<const PackedConfig*> keys;
    std::vector<cplx> amps;
    keys.reserve(s.amp.size());
    for (auto& [c, a] : s.amp) {
        keys.push_back(&c);
        amps.push_back(a);
    }
    SparseState out = par::parallel_reduce(
        keys.size(), SparseState{},
        [&](std::size_t lo, std::size_t hi) {
            SparseState part;
            for (std::size_t i = lo; i < hi; ++i) {
                SparseState one = apply_to_basis(env, op, *keys[i]);
                for (auto& [cc, aa] : one.amp) part.add(cc, amps[i] * aa);
            }
            return part;
        },
        [](SparseState acc, const SparseState& part) {
            acc += part;
            return acc;
        });
    return out;
}

Op triangle_op_l(const LatticeEnv& env, const Triangle& tau, int h) {
    if (!tau.dual) fail("InvalidRibbon", "L is defined on dual triangles");
    Ribbon r;
    r.t.push_back(tau);
    return ribbon_l(env, r, h);
}

Op triangle_op_t(const LatticeEnv& env, const Triangle& tau, int g) {
    if (tau.dual) fail("InvalidRibbon", "T is defined on direct triangles");
    Ribbon r;
    r.t.push_back(tau);
    return ribbon_t(env, r, g);
}

Op ribbon_f(const LatticeEnv& env, const Ribbon& rho, int h, int g) {
    rho.validate();
    for (auto& e : rho.support()) env.patch->edge_index(e);
    Term t;
    t.seq.push_back(PrimF{std::make_shared<Ribbon>(rho), h, g});
    return Op(std::move(t));
}

Op ribbon_l(const LatticeEnv& env, const Ribbon& rho, int h) {
    rho.validate();
    for (auto& e : rho.support()) env.patch->edge_index(e);
    Term t;
    t.seq.push_back(PrimL{std::make_shared<Ribbon>(rho), h});
    return Op(std::move(t));
}

Op ribbon_t(const LatticeEnv& env, const Ribbon& rho, int g) {
    rho.validate();
    for (auto& e : rho.support()) env.patch->edge_index(e);
    Term t;
    t.seq.push_back(PrimT{std::make_shared<Ribbon>(rho), g});
    return Op(std::move(t));
}

Op gauge_a(const LatticeEnv& env, Vtx v, int h) {
    (void)env;
    Term t;
    t.seq.push_back(PrimGauge{v, h});
    return Op(std::move(t));
}

Op gauge_a_avg(const LatticeEnv& env, Vtx v) {
    Op out;
    for (int h = 0; h < env.group->order(); ++h) out = out + gauge_a(env, v, h);
    return out * cplx(1.0 / env.group->order());
}

Op flux_b(const LatticeEnv& env, const Site& s, int g) {
    Term t;
    t.seq.push_back(PrimT{std::make_shared<Ribbon>(face_loop(s)), g});
    return Op(std::move(t));
}

Op flux_b_face(const LatticeEnv& env, const Face& f) {
    Site s{vertices_ccw(f)[0], f};
    return flux_b(env, s, env.group->identity());
}

Op boundary_proj(const LatticeEnv& env, const std::vector<int>& b) {
    if (b.size() != env.patch->boundary_edges.size())
        fail("SupportMismatch", "boundary condition has the wrong number of edges");
    PrimDiag d;
    for (std::size_t k = 0; k < b.size(); ++k)
        d.edge_vals.emplace_back(env.patch->boundary_edges[k], b[k]);
    Term t;
    t.seq.push_back(std::move(d));
    return Op(std::move(t));
}

Op site_a_via_ribbon(const LatticeEnv& env, const Site& s, int h) {
    return ribbon_f(env, star_loop(s), h, env.group->identity());
}

Op site_b_via_ribbon(const LatticeEnv& env, const Site& s, int g) {
    return ribbon_f(env, face_loop(s), env.group->identity(), g);
}

namespace {

struct RCData {
    const ConjugacyClass* cls;
    const Centralizer* cent;
    const UnitaryIrrep* irr;
};

RCData rc_data(const DoubleContext& ctx, const DGIrrepLabel& rc) {
    return {&ctx.classes[rc.class_id], &ctx.cents[rc.class_id],
            &ctx.cent_irreps[rc.class_id][rc.irrep_index]};
}

}  // namespace

Op wigner_d_u(const LatticeEnv& env, const DoubleContext& ctx, const Site& s,
              const DGIrrepLabel& rc, int i, int j) {
    auto d = rc_data(ctx, rc);
    const FiniteGroup& g = *env.group;
    int qi = d.cls->iterators[i];
    int ci = d.cls->elements[i];
    Op out;
    for (std::size_t msub = 0; msub < d.cent->elements.size(); ++msub) {
        int m = d.cent->elements[msub];
        cplx coeff = std::conj(d.irr->mats[msub](j, j)) *
                     cplx(static_cast<double>(d.irr->dim) / d.cent->elements.size());
        out = out + (gauge_a(env, s.v, g.conj(qi, m)) * flux_b(env, s, ci)) * coeff;
    }
    return out;
}

Op wigner_d(const LatticeEnv& env, const DoubleContext& ctx, const Site& s,
            const DGIrrepLabel& rc) {
    auto d = rc_data(ctx, rc);
    const FiniteGroup& g = *env.group;
    Op out;
    for (std::size_t msub = 0; msub < d.cent->elements.size(); ++msub) {
        int m = d.cent->elements[msub];
        cplx coeff = std::conj(d.irr->character[msub]) *
                     cplx(static_cast<double>(d.irr->dim) / d.cent->elements.size());
        for (std::size_t i = 0; i < d.cls->elements.size(); ++i) {
            int q = d.cls->iterators[i];
            out = out + (gauge_a(env, s.v, g.conj(q, m)) * flux_b(env, s, g.conj(q, d.cls->representative))) * coeff;
        }
    }
    return out;
}

Op label_changer_a(const LatticeEnv& env, const DoubleContext& ctx, const Site& s,
                   const DGIrrepLabel& rc, int i2, int j2, int i1, int j1) {
    auto d = rc_data(ctx, rc);
    const FiniteGroup& g = *env.group;
    Op out;
    for (std::size_t msub = 0; msub < d.cent->elements.size(); ++msub) {
        int m = d.cent->elements[msub];
        cplx coeff = std::conj(d.irr->mats[msub](j2, j1)) *
                     cplx(static_cast<double>(d.irr->dim) / d.cent->elements.size());
        int elem = g.mul(g.mul(d.cls->iterators[i2], m), g.inv(d.cls->iterators[i1]));
        out = out + gauge_a(env, s.v, elem) * coeff;
    }
    return out;
}

Op charge_k(const LatticeEnv& env, const DoubleContext& ctx, const Ribbon& sigma,
            const DGIrrepLabel& rc) {
    if (!sigma.closed()) fail("RibbonNotClosed", "charge detector needs a closed ribbon");
    auto d = rc_data(ctx, rc);
    const FiniteGroup& g = *env.group;
    Op out;
    for (std::size_t msub = 0; msub < d.cent->elements.size(); ++msub) {
        int m = d.cent->elements[msub];
        cplx coeff = std::conj(d.irr->character[msub]) *
                     cplx(static_cast<double>(d.irr->dim) / d.cent->elements.size());
        for (int q : d.cls->iterators)
            out = out +
                  ribbon_f(env, sigma, g.conj(q, m), g.conj(q, d.cls->representative)) * coeff;
    }
    return out;
}

Op ribbon_f_rc(const LatticeEnv& env, const DoubleContext& ctx, const Ribbon& rho,
               const DGIrrepLabel& rc, int i, int j, int ip, int jp) {
    auto d = rc_data(ctx, rc);
    const FiniteGroup& g = *env.group;
    Op out;
    for (std::size_t msub = 0; msub < d.cent->elements.size(); ++msub) {
        int m = d.cent->elements[msub];
        cplx coeff = std::conj(d.irr->mats[msub](j, jp)) *
                     cplx(static_cast<double>(d.irr->dim) / d.cent->elements.size());
        int hlab = g.inv(d.cls->elements[i]);
        int glab = g.mul(g.mul(d.cls->iterators[i], m), g.inv(d.cls->iterators[ip]));
        out = out + ribbon_f(env, rho, hlab, glab) * coeff;
    }
    return out;
}

OpMatrix OpMatrix::mul(const OpMatrix& o) const {
    OpMatrix out(rows, o.cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < o.cols; ++c) {
            Op acc;
            for (int k = 0; k < cols; ++k) acc = acc + at(r, k) * o.at(k, c);
            out.at(r, c) = acc;
        }
    return out;
}

OpMatrix OpMatrix::tensor(const OpMatrix& o) const {
    OpMatrix out(rows * o.rows, cols * o.cols);
    for (int r1 = 0; r1 < rows; ++r1)
        for (int c1 = 0; c1 < cols; ++c1)
            for (int r2 = 0; r2 < o.rows; ++r2)
                for (int c2 = 0; c2 < o.cols; ++c2)
                    out.at(r1 * o.rows + r2, c1 * o.cols + c2) = at(r1, c1) * o.at(r2, c2);
    return out;
}

OpMatrix OpMatrix::direct_sum(const OpMatrix& o) const {
    OpMatrix out(rows + o.rows, cols + o.cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out.at(r, c) = at(r, c);
    for (int r = 0; r < o.rows; ++r)
        for (int c = 0; c < o.cols; ++c) out.at(rows + r, cols + c) = o.at(r, c);
    return out;
}

OpMatrix OpMatrix::scalar(const Mat& numeric) {
    OpMatrix out(static_cast<int>(numeric.rows()), static_cast<int>(numeric.cols()));
    for (Eigen::Index r = 0; r < numeric.rows(); ++r)
        for (Eigen::Index c = 0; c < numeric.cols(); ++c)
            if (std::abs(numeric(r, c)) > 1e-15)
                out.at(static_cast<int>(r), static_cast<int>(c)) =
                    Op::identity() * numeric(r, c);
    return out;
}

OpMatrix opmatrix_adjoint(const LatticeEnv& env, const OpMatrix& a) {
    OpMatrix out(a.cols, a.rows);
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c) out.at(c, r) = op_adjoint(env, a.at(r, c));
    return out;
}

OpMatrix bold_multiplet(const LatticeEnv& env, const Ribbon& rho, const DGRep& d) {
    const Site a = rho.start(), b = rho.finish();
    if (a.v == b.v || a.f == b.f)
        fail("EndpointCollision", "multiplet endpoints must have distinct vertex and face");
    const FiniteGroup& g = *env.group;
    OpMatrix out(d.dim, d.dim);
    for (int aa = 0; aa < g.order(); ++aa)
        for (int bb = 0; bb < g.order(); ++bb) {
            Mat dm = d.proj[aa] * d.act[bb];
            Op f;
            bool have = false;
            for (int r = 0; r < d.dim; ++r)
                for (int c = 0; c < d.dim; ++c)
                    if (std::abs(dm(r, c)) > 1e-14) {
                        if (!have) {
                            f = ribbon_f(env, rho, aa, bb);
                            have = true;
                        }
                        out.at(r, c) = out.at(r, c) + f * dm(r, c);
                    }
        }
    return out;
}

OpMatrix amplimorphism(const LatticeEnv& env, const Ribbon& rho, const DGRep& d, const Op& o) {
    OpMatrix f = bold_multiplet(env, rho, d);
    OpMatrix mid(d.dim, d.dim);
    for (int r = 0; r < d.dim; ++r) mid.at(r, r) = o;
    return f.mul(mid).mul(opmatrix_adjoint(env, f));
}

namespace {

std::vector<PackedConfig> check_configs(const LatticeEnv& env, const std::vector<int>& supp,
                                        const CheckOptions& opt) {
    const FiniteGroup& g = *env.group;
    std::vector<PackedConfig> configs;
    double total = std::pow(static_cast<double>(g.order()), static_cast<double>(supp.size()));
    if (total <= static_cast<double>(opt.max_exhaustive)) {
        std::size_t count = static_cast<std::size_t>(total + 0.5);
        for (std::size_t code = 0; code < count; ++code) {
            PackedConfig c = env.codec.trivial(g);
            std::size_t x = code;
            for (int eid : supp) {
                env.codec.set(c, eid, static_cast<int>(x % g.order()));
                x /= g.order();
            }
            configs.push_back(c);
        }
    } else {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<int> pick(0, g.order() - 1);
        for (int s = 0; s < opt.nsamples; ++s) {
            PackedConfig c = env.codec.trivial(g);
            for (int eid : supp) env.codec.set(c, eid, pick(rng));
            configs.push_back(c);
        }
    }
    return configs;
}

}  // namespace

double op_deviation(const LatticeEnv& env, const Op& a, const Op& b, const CheckOptions& opt) {
    std::vector<int> supp = a.support(env);
    for (int e : b.support(env)) supp.push_back(e);
    std::sort(supp.begin(), supp.end());
    supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
    auto configs = check_configs(env, supp, opt);
    return par::parallel_reduce(
        configs.size(), 0.0,
        [&](std::size_t lo, std::size_t hi) {
            double m = 0;
            for (std::size_t i = lo; i < hi; ++i)
                m = std::max(m, max_amp_diff(apply_to_basis(env, a, configs[i]),
                                             apply_to_basis(env, b, configs[i])));
            return m;
        },
        [](double x, double y) { return std::max(x, y); });
}

double opmatrix_deviation(const LatticeEnv& env, const OpMatrix& a, const OpMatrix& b,
                          const CheckOptions& opt) {
    if (a.rows != b.rows || a.cols != b.cols)
        fail("SupportMismatch", "operator matrices of different shape");
    double m = 0;
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c)
            m = std::max(m, op_deviation(env, a.at(r, c), b.at(r, c), opt));
    return m;
}

double op_deviation_on(const LatticeEnv& env, const Op& a, const Op& b,
                       const std::vector<const SparseState*>& states) {
    double m = 0;
    for (auto* s : states) m = std::max(m, max_amp_diff(apply(env, a, *s), apply(env, b, *s)));
    return m;
}

}  // namespace qd::lat
