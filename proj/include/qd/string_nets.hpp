// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qd/lattice_ops.hpp"

namespace qd::lat {

// Boundary condition: values on patch.boundary_edges, by position.
using Boundary = std::vector<int>;

Boundary boundary_of(const LatticeEnv& env, const PackedConfig& c);
Boundary trivial_boundary(const LatticeEnv& env);
// Flux through the boundary ribbon read off a boundary condition.
int boundary_flux(const LatticeEnv& env, const Boundary& b);
// Position i(b) of the boundary flux inside its conjugacy class.
int boundary_class_pos(const LatticeEnv& env, const DoubleContext& ctx, const Boundary& b);

// Canonical string net with flux c_i at s0, trivial elsewhere: the image of
// the all-trivial configuration under F_fiducial^{c_i^-1, 1}.
PackedConfig base_config(const LatticeEnv& env, const DoubleContext& ctx, int class_id, int i);

// Membership in pack^{C;i}: flat on every face but f0, flux c_i at s0.
bool in_pack(const LatticeEnv& env, const DoubleContext& ctx, int class_id, int i,
             const PackedConfig& c);
// Centralizer label m with flux_fiducial = q_i m q_{i(b)}^-1; -1 if undefined.
int m_of(const LatticeEnv& env, const DoubleContext& ctx, int class_id, int i,
         const PackedConfig& c);

// Orbit of the bulk gauge group (assignments on V_n minus the origin).
std::vector<PackedConfig> gauge_orbit(const LatticeEnv& env, const PackedConfig& base);
SparseState uniform_state(const std::vector<PackedConfig>& configs);

// Independent pack sampler: random values on a spanning tree, remaining edges
// solved from the flatness constraints (used as the transitivity oracle).
PackedConfig solve_pack_config(const LatticeEnv& env, const DoubleContext& ctx, int class_id,
                               int i, std::mt19937_64& rng);
// Gauge-fixed normal form: constant exactly on bulk gauge orbits.
PackedConfig pack_normal_form(const LatticeEnv& env, const DoubleContext& ctx,
                              const PackedConfig& c);

// Block of eta vectors for fixed (C; i, b): one per centralizer element.
struct EtaBlock {
    int class_id = 0;
    int i = 0;
    Boundary b;
    int ib = 0;  // i(b)
    std::vector<PackedConfig> base_m;  // representative per centralizer index
    std::vector<SparseState> eta;      // uniform orbit superpositions
};
EtaBlock eta_block(const LatticeEnv& env, const DoubleContext& ctx, int class_id, int i,
                   const PackedConfig& member);
// eta^{RC;uv} with u = (i, j) fixed by the block and v = (b, jp).
SparseState eta_rc(const LatticeEnv& env, const DoubleContext& ctx, const EtaBlock& blk,
                   int irrep_index, int j, int jp);
// Patch ground state: trivial class, trivial boundary.
SparseState patch_ground_state(const LatticeEnv& env, const DoubleContext& ctx);

// Boundary gauge transformation with one group element per ring vertex.
Op ring_gauge(const LatticeEnv& env, const std::vector<int>& g_ring);
// Transport U_{b2 b1} between compatible boundary conditions: maps
// pack^{C;i b1} to pack^{C;i b2} fixing everything away from the ring.
Op boundary_transport(const LatticeEnv& env, const DoubleContext& ctx, int class_id,
                      const Boundary& b2, const Boundary& b1);
// Boundary label changer  A~^{RC; (b2,j2') (b1,j1')}.
Op label_changer_boundary(const LatticeEnv& env, const DoubleContext& ctx,
                          const DGIrrepLabel& rc, const Boundary& b2, int j2p,
                          const Boundary& b1, int j1p);

// Flux of a configuration along a direct vertex path (face-move tests).
int flux_path(const LatticeEnv& env, const std::vector<Vtx>& path, const PackedConfig& c);

}  // namespace qd::lat
