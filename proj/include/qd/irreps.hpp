// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qd/group.hpp"

namespace qd {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

struct UnitaryIrrep {
    int dim = 0;
    std::vector<Mat> mats;        // element -> dim x dim unitary
    std::vector<cplx> character;  // element -> trace
};

struct IrrepOptions {
    std::uint64_t seed = 42;
    double tol = 1e-9;     // scaled by matrix dimension in checks
    int max_order = 24;
};

// Complete list of unitary irreps by numerical splitting of the regular
// representation (seeded twirl of a random Hermitian, simultaneous block
// diagonalization). Postconditions verified: count == #classes,
// sum dim^2 == |H|, homomorphism/unitarity/irreducibility within tolerance.
std::vector<UnitaryIrrep> irreps(const FiniteGroup& h, const IrrepOptions& opt = {});

// Entrywise Schur orthogonality between two produced irreps:
// sum_h M1^{jk}(h) conj(M2^{lm}(h)) == delta_{R1,R2} delta_{jl} delta_{km} |H|/dim.
bool schur_check(const UnitaryIrrep& r1, const UnitaryIrrep& r2, const FiniteGroup& h,
                 bool same_irrep, double tol = 1e-9);

// max |A - B| entry
double max_abs_diff(const Mat& a, const Mat& b);

}  // namespace qd
