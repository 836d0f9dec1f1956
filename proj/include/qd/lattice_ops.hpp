// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <unordered_map>
#include <variant>

#include "qd/lattice.hpp"
#include "qd/rep.hpp"

namespace qd::lat {

// Gauge configuration on the patch, packed a few bits per edge. 192 bits
// cover every patch/group pair used here (checked at codec construction).
struct PackedConfig {
    std::array<std::uint64_t, 3> w{0, 0, 0};
    friend bool operator==(const PackedConfig&, const PackedConfig&) = default;
};

struct PackedConfigHash {
    std::size_t operator()(const PackedConfig& c) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : c.w) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

class ConfigCodec {
  public:
    ConfigCodec() = default;
    ConfigCodec(const Patch& p, const FiniteGroup& g);
    int bits() const { return bits_; }
    int num_edges() const { return nedges_; }
    int get(const PackedConfig& c, int edge) const;
    void set(PackedConfig& c, int edge, int val) const;
    PackedConfig trivial(const FiniteGroup& g) const;

  private:
    int bits_ = 0;
    int nedges_ = 0;
};

// Sparse superposition of gauge configurations.
struct SparseState {
    std::unordered_map<PackedConfig, cplx, PackedConfigHash> amp;

    void add(const PackedConfig& c, cplx a);
    double norm() const;
    SparseState& operator*=(cplx s);
    SparseState& operator+=(const SparseState& o);
};

cplx inner(const SparseState& a, const SparseState& b);
double max_amp_diff(const SparseState& a, const SparseState& b);

// Environment shared by all operators on one patch.
struct LatticeEnv {
    const FiniteGroup* group = nullptr;
    const Patch* patch = nullptr;
    ConfigCodec codec;

    LatticeEnv(const FiniteGroup& g, const Patch& p) : group(&g), patch(&p), codec(p, g) {}
};

// Monomial primitives: each maps a basis configuration to (coefficient,
// configuration), with at most one output term.
struct PrimF {  // ribbon operator F^{h,g}
    std::shared_ptr<const Ribbon> rho;
    int h = 0, g = 0;
};
struct PrimL {  // L^h = sum_g F^{h,g}
    std::shared_ptr<const Ribbon> rho;
    int h = 0;
};
struct PrimT {  // T^g = F^{1,g} (diagonal flux projector along the ribbon)
    std::shared_ptr<const Ribbon> rho;
    int g = 0;
};
struct PrimGauge {  // gauge transformation at a vertex, restricted to the patch
    Vtx v;
    int h = 0;
};
struct PrimDiag {  // projector onto fixed values on a set of edges
    std::vector<std::pair<int, int>> edge_vals;  // (edge id, value)
};
using Prim = std::variant<PrimF, PrimL, PrimT, PrimGauge, PrimDiag>;

struct Term {
    cplx coeff{1.0, 0.0};
    std::vector<Prim> seq;  // composition; seq.back() acts first
};

struct Op {
    std::vector<Term> terms;

    Op() = default;
    explicit Op(Term t) : terms{std::move(t)} {}
    static Op identity();
    static Op zero() { return Op(); }

    Op operator*(const Op& o) const;   // composition: (*this) after o
    Op operator+(const Op& o) const;
    Op operator*(cplx s) const;
    std::vector<int> support(const LatticeEnv& env) const;  // sorted edge ids
};

Op op_adjoint(const LatticeEnv& env, const Op& op);

// Applies one monomial primitive; returns false if the term annihilates.
bool apply_prim(const LatticeEnv& env, const Prim& prim, PackedConfig& c, cplx& coeff);
// Applies a full operator to a basis configuration (sums the term results).
SparseState apply_to_basis(const LatticeEnv& env, const Op& op, const PackedConfig& c);
SparseState apply(const LatticeEnv& env, const Op& op, const SparseState& s);
SparseState apply_serial(const LatticeEnv& env, const Op& op, const SparseState& s);

// Flux of a configuration through a ribbon (ordered product along the direct
// path); throws SupportMismatch if the ribbon leaves the patch.
int flux(const LatticeEnv& env, const Ribbon& rho, const PackedConfig& c);
int flux_site(const LatticeEnv& env, const Site& s, const PackedConfig& c);

// Elementary operators.
Op triangle_op_l(const LatticeEnv& env, const Triangle& tau, int h);  // dual triangle
Op triangle_op_t(const LatticeEnv& env, const Triangle& tau, int g);  // direct triangle
Op ribbon_f(const LatticeEnv& env, const Ribbon& rho, int h, int g);
Op ribbon_l(const LatticeEnv& env, const Ribbon& rho, int h);
Op ribbon_t(const LatticeEnv& env, const Ribbon& rho, int g);
Op gauge_a(const LatticeEnv& env, Vtx v, int h);           // A_v^h
Op gauge_a_avg(const LatticeEnv& env, Vtx v);              // A_v projector
Op flux_b(const LatticeEnv& env, const Site& s, int g);    // B_s^g
Op flux_b_face(const LatticeEnv& env, const Face& f);      // B_f = B_s^1
Op boundary_proj(const LatticeEnv& env, const std::vector<int>& b);  // P_b

// Site operators via ribbon loops (contract-checked against the direct forms).
Op site_a_via_ribbon(const LatticeEnv& env, const Site& s, int h);
Op site_b_via_ribbon(const LatticeEnv& env, const Site& s, int g);

// Wigner projectors and label changers at a site.
Op wigner_d(const LatticeEnv& env, const DoubleContext& ctx, const Site& s,
            const DGIrrepLabel& rc);
Op wigner_d_u(const LatticeEnv& env, const DoubleContext& ctx, const Site& s,
              const DGIrrepLabel& rc, int i, int j);
Op label_changer_a(const LatticeEnv& env, const DoubleContext& ctx, const Site& s,
                   const DGIrrepLabel& rc, int i2, int j2, int i1, int j1);

// Charge detector on a closed ribbon; throws RibbonNotClosed.
Op charge_k(const LatticeEnv& env, const DoubleContext& ctx, const Ribbon& sigma,
            const DGIrrepLabel& rc);

// Ribbon operators in the representation basis, F^{RC;uv}.
Op ribbon_f_rc(const LatticeEnv& env, const DoubleContext& ctx, const Ribbon& rho,
               const DGIrrepLabel& rc, int i, int j, int ip, int jp);

// Matrix of operators (ribbon multiplets, amplimorphism images).
struct OpMatrix {
    int rows = 0, cols = 0;
    std::vector<Op> m;  // row-major
    Op& at(int r, int c) { return m[static_cast<std::size_t>(r) * cols + c]; }
    const Op& at(int r, int c) const { return m[static_cast<std::size_t>(r) * cols + c]; }

    OpMatrix() = default;
    OpMatrix(int r, int c) : rows(r), cols(c), m(static_cast<std::size_t>(r) * c) {}
    OpMatrix mul(const OpMatrix& o) const;
    OpMatrix tensor(const OpMatrix& o) const;   // kron on indices, operator product
    OpMatrix direct_sum(const OpMatrix& o) const;
    static OpMatrix scalar(const Mat& numeric);  // numeric matrix of multiples of Id
};

OpMatrix opmatrix_adjoint(const LatticeEnv& env, const OpMatrix& a);

// Bold ribbon multiplet for a D(G)-representation D.
OpMatrix bold_multiplet(const LatticeEnv& env, const Ribbon& rho, const DGRep& d);
// mu_rho^D(O) = F^D (O (x) I) (F^D)^*.
OpMatrix amplimorphism(const LatticeEnv& env, const Ribbon& rho, const DGRep& d, const Op& o);

// Identity-checking harness: max deviation between two operators over either
// every configuration on their joint support (when |G|^{|support|} fits the
// budget) or seeded random configurations.
struct CheckOptions {
    std::uint64_t seed = 42;
    std::size_t max_exhaustive = 1u << 20;
    int nsamples = 100;
};
double op_deviation(const LatticeEnv& env, const Op& a, const Op& b, const CheckOptions& opt = {});
double opmatrix_deviation(const LatticeEnv& env, const OpMatrix& a, const OpMatrix& b,
                          const CheckOptions& opt = {});
// Deviation measured on explicitly supplied states.
double op_deviation_on(const LatticeEnv& env, const Op& a, const Op& b,
                       const std::vector<const SparseState*>& states);

}  // namespace qd::lat
