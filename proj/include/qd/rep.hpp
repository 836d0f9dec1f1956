// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qd/hopf.hpp"
#include "qd/irreps.hpp"

namespace qd {

// Shared context: group, classes, centralizers and their unitary irreps.
struct DoubleContext {
    FiniteGroup group;
    std::vector<ConjugacyClass> classes;
    std::vector<Centralizer> cents;
    std::vector<std::vector<UnitaryIrrep>> cent_irreps;  // per class
    ClassIndex cls_index;
    std::uint64_t seed = 42;
    double tol = 1e-9;

    static DoubleContext make(const FiniteGroup& g, std::uint64_t seed = 42, double tol = 1e-9);
    int num_labels() const;
};

// Irreducible representation label (C, R): conjugacy class + centralizer irrep.
struct DGIrrepLabel {
    int class_id = 0;
    int irrep_index = 0;
    bool operator==(const DGIrrepLabel& o) const {
        return class_id == o.class_id && irrep_index == o.irrep_index;
    }
};

// Finite-dimensional representation of D(G): grading projectors P_g plus a
// unitary G-action, with pi(delta_s (x) g) = P_s rho(g).
struct DGRep {
    const DoubleContext* ctx = nullptr;
    int dim = 0;
    std::vector<Mat> proj;  // per group element
    std::vector<Mat> act;   // per group element
};

// Checked invariants: sum_g P_g = 1, P_g orthogonal, rho homomorphism + unitary,
// covariance rho(h) P_g rho(h)^-1 = P_{h g h^-1}. Throws CovarianceViolation.
void verify_dgrep(const DGRep& rep, double tol_scale = 1.0);

DGRep build_irrep(const DoubleContext& ctx, const DGIrrepLabel& label);
std::vector<DGIrrepLabel> all_labels(const DoubleContext& ctx);
DGRep unit_rep(const DoubleContext& ctx);
int label_dim(const DoubleContext& ctx, const DGIrrepLabel& label);

Mat rep_apply(const DGRep& rep, const DoubleElement& x);
DGRep tensor_rep(const DGRep& v, const DGRep& w);
DGRep dual_rep(const DGRep& v);

// Multiplicities of each simple in rep, computed two independent ways
// (averaged intertwiner projections and the commutant-dimension solve) which
// must agree; throws IncompleteSimples on dimension mismatch.
std::vector<int> decompose(const DGRep& rep, const std::vector<DGRep>& simples);

// dim Hom(a, b) via the averaged intertwiner projector.
int hom_dim(const DGRep& a, const DGRep& b);
// Orthonormal-ish basis of Hom(a, b) (intertwiners b <- a), via nullspace solve.
std::vector<Mat> intertwiner_basis(const DGRep& a, const DGRep& b);

struct FusionTable {
    std::vector<DGIrrepLabel> labels;
    std::vector<int> dims;
    std::vector<std::vector<std::vector<int>>> n;  // n[i][j][k] = N^k_{ij}
    bool symmetric = true;                         // checked, not assumed
};
FusionTable fusion_table(const DoubleContext& ctx);

// Braiding c_{V,W} = swap . (pi_V (x) pi_W)(R) : V (x) W -> W (x) V.
// Unitarity and the intertwiner property are verified on all basis elements.
Mat braid(const DGRep& v, const DGRep& w);

// Multiplet braiding B(D1,D2) = P12 . (D1 x D2)(R) with the flipped R used by
// the ribbon-multiplet calculus; maps V1 (x) V2 -> V2 (x) V1.
Mat multiplet_braiding(const DGRep& d1, const DGRep& d2);

// Rigidity data for the dual: evaluation d: V* (x) V -> C and coevaluation
// b: C -> V (x) V*; zig-zags and morphism property are verified.
struct DualityData {
    Mat ev;    // 1 x (dim^2)
    Mat coev;  // (dim^2) x 1
};
DualityData duality_maps(const DGRep& v);
double quantum_dimension(const DGRep& v);

std::vector<DGIrrepLabel> muger_center(const DoubleContext& ctx);

Mat kron(const Mat& a, const Mat& b);
Mat swap_matrix(int da, int db);  // e_a (x) e_b -> e_b (x) e_a

std::string fusion_to_json(const FusionTable& t);
std::string braid_to_json(const Mat& m);

}  // namespace qd
