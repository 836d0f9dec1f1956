// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "qd/error.hpp"

namespace qd::lat {

// Triangular lattice in axial coordinates: vertex (a1, a2) sits at
// a1*l1 + a2*l2 with l1 = (1, 0), l2 = (1/2, sqrt3/2). The six neighbour
// steps are +-d1 = (1,0), +-d2 = (0,1), +-d3 = (1,-1). Canonical (left to
// right oriented) edges point along d1, d2, d3.
struct Vtx {
    int a1 = 0, a2 = 0;
    friend auto operator<=>(const Vtx&, const Vtx&) = default;
};

inline Vtx operator+(Vtx v, Vtx w) { return {v.a1 + w.a1, v.a2 + w.a2}; }
inline Vtx operator-(Vtx v, Vtx w) { return {v.a1 - w.a1, v.a2 - w.a2}; }

inline constexpr std::array<Vtx, 3> kDirs{{{1, 0}, {0, 1}, {1, -1}}};

int hexdist(Vtx v);  // graph distance to the origin

// Faces: Up(a) = {a, a+d1, a+d2}, Down(a) = {a, a+d1, a+d3}.
struct Face {
    Vtx a;
    bool up = true;
    friend auto operator<=>(const Face&, const Face&) = default;
};

struct Edge {  // canonical oriented edge: from -> from + kDirs[dir]
    Vtx from;
    int dir = 0;
    Vtx to() const { return from + kDirs[dir]; }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::array<Vtx, 3> vertices_ccw(const Face& f);   // counterclockwise
std::array<Edge, 3> edges_of_face(const Face& f);
// Dual edge orientation: crossing e from its right face to its left face.
Face right_face(const Edge& e);
Face left_face(const Edge& e);
// The six faces around v in counterclockwise order (starting near angle -90).
std::array<Face, 6> faces_ccw(Vtx v);

// Cartesian position (x, y/sqrt3-scaled) helpers for orientation tests.
std::pair<double, double> pos(Vtx v);
std::pair<double, double> centroid(const Face& f);

struct Site {
    Vtx v;
    Face f;
    friend auto operator<=>(const Site&, const Site&) = default;
};

// Triangle between neighbouring sites. Direct: sites share the face and e
// joins their vertices. Dual: sites share the vertex and the dual of e joins
// their faces.
struct Triangle {
    Site s0, s1;
    Edge e;
    bool dual = false;
    friend auto operator<=>(const Triangle&, const Triangle&) = default;

    Triangle reversed() const { return {s1, s0, e, dual}; }
    // Orientation label per the ribbon-algebra convention used throughout:
    // direct triangles are positive when their face lies to the right of
    // (v(s0) -> v(s1)); dual triangles when their vertex lies to the left of
    // (f(s0) -> f(s1)).
    bool positive() const;
    void validate() const;
};

Triangle direct_triangle(const Site& s0, Vtx v1);            // same face
Triangle dual_triangle(const Site& s0, const Face& f1);      // same vertex

struct Ribbon {
    std::vector<Triangle> t;

    bool empty() const { return t.empty(); }
    std::size_t size() const { return t.size(); }
    Site start() const { return t.front().s0; }
    Site finish() const { return t.back().s1; }
    bool closed() const { return !empty() && start() == finish(); }
    Ribbon reversed() const;
    // Consecutive sites match and no unoriented edge appears twice; throws
    // InvalidRibbon otherwise.
    void validate() const;
    // +1 all positive, -1 all negative, 0 mixed or empty.
    int sign() const;
    std::vector<Edge> support() const;
    // Oriented direct-triangle traversals as (from, to) vertex pairs.
    std::vector<std::pair<Vtx, Vtx>> direct_path() const;
};

Ribbon concat(const Ribbon& a, const Ribbon& b);
// Closed direct ribbon counterclockwise around f(s) from s, and closed dual
// ribbon counterclockwise around v(s) from s.
Ribbon face_loop(const Site& s);
Ribbon star_loop(const Site& s);
// Dual triangles pivoting clockwise around v from face `from` to face `to`.
std::vector<Triangle> pivot_cw(Vtx v, const Face& from, const Face& to);

// Finite patch of radius n around s0 = (origin, Up(origin)).
struct Patch {
    int n = 1;
    std::vector<Vtx> vertices;        // V_n
    std::vector<Face> faces;          // F_n (faces meeting V_n)
    std::vector<Edge> edges;          // E_n (edges of F_n faces), sorted
    std::vector<int> boundary_edges;  // ids of edges on exactly one F_n face
    std::vector<Vtx> ring;            // boundary cycle vertices, ccw from s_n
    std::vector<Edge> ring_edges;     // oriented cycle edges (ring[k] -> ring[k+1])
    Site s0;
    Site sn;          // end of the fiducial ribbon, on the boundary cycle
    Ribbon fiducial;  // positive ribbon with direct path along the +x axis
    Ribbon boundary;  // closed positive ribbon, ccw, direct path = boundary edges

    static Patch make(int n);

    int edge_index(const Edge& e) const;
    bool has_edge(const Edge& e) const { return edge_lookup_.count(e) > 0; }
    bool face_in_patch(const Face& f) const;
    bool vertex_in_v(Vtx v) const { return hexdist(v) <= n; }
    // Sites whose face loop and star loop stay inside the patch.
    bool site_interior(const Site& s) const;
    std::vector<Site> interior_sites() const;

  private:
    std::map<Edge, int> edge_lookup_;
    std::map<Face, int> face_lookup_;
};

// Seeded random ribbon of the requested sign (+1/-1) and length, with both
// end sites having distinct vertices and faces; triangles stay in the patch.
std::optional<Ribbon> random_ribbon(const Patch& p, std::mt19937_64& rng, int len, int sign,
                                    int attempts = 200);
// Same, but growing from the given start site and avoiding the given edges.
std::optional<Ribbon> random_ribbon_from(const Patch& p, std::mt19937_64& rng, int len, int sign,
                                         const Site& start, const std::vector<Edge>& avoid = {},
                                         int attempts = 200);

}  // namespace qd::lat
