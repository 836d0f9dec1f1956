// Copyright (c) 2026 the qdlab authors
// SPDX-License-Identifier: Apache-2.0

#include "qd/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qd::lat {

int hexdist(Vtx v) {
    return std::max({std::abs(v.a1), std::abs(v.a2), std::abs(v.a1 + v.a2)});
}

std::array<Vtx, 3> vertices_ccw(const Face& f) {
    if (f.up) return {f.a, f.a + kDirs[0], f.a + kDirs[1]};
    return {f.a, f.a + kDirs[2], f.a + kDirs[0]};
}

std::array<Edge, 3> edges_of_face(const Face& f) {
    if (f.up) return {Edge{f.a, 0}, Edge{f.a, 1}, Edge{f.a + kDirs[1], 2}};
    return {Edge{f.a, 0}, Edge{f.a, 2}, Edge{f.a + kDirs[2], 1}};
}

Face right_face(const Edge& e) {
    switch (e.dir) {
        case 0: return Face{e.from, false};                          // Down(v)
        case 1: return Face{e.from, true};                           // Up(v)
        default: return Face{e.from - kDirs[1], true};               // Up(v - d2)
    }
}

Face left_face(const Edge& e) {
    switch (e.dir) {
        case 0: return Face{e.from, true};                                   // Up(v)
        case 1: return Face{e.from - kDirs[0] + kDirs[1], false};            // Down(v-d1+d2)
        default: return Face{e.from, false};                                 // Down(v)
    }
}

std::pair<double, double> pos(Vtx v) {
    return {v.a1 + 0.5 * v.a2, 0.8660254037844386 * v.a2};
}

std::pair<double, double> centroid(const Face& f) {
    auto vs = vertices_ccw(f);
    double x = 0, y = 0;
    for (auto& v : vs) {
        auto [px, py] = pos(v);
        x += px;
        y += py;
    }
    return {x / 3, y / 3};
}

std::array<Face, 6> faces_ccw(Vtx v) {
    // Angles of centroids relative to v: Up(v-d2) -90, Down(v) -30, Up(v) 30,
    // Down(v-d3) 90, Up(v-d1) 150, Down(v-d1) 210.
    return {Face{v - kDirs[1], true},  Face{v, false},           Face{v, true},
            Face{v - kDirs[2], false}, Face{v - kDirs[0], true}, Face{v - kDirs[0], false}};
}

namespace {

double cross(std::pair<double, double> a, std::pair<double, double> b) {
    return a.first * b.second - a.second * b.first;
}

std::pair<double, double> sub(std::pair<double, double> a, std::pair<double, double> b) {
    return {a.first - b.first, a.second - b.second};
}

std::pair<double, double> midpoint(const Edge& e) {
    auto [x0, y0] = pos(e.from);
    auto [x1, y1] = pos(e.to());
    return {(x0 + x1) / 2, (y0 + y1) / 2};
}

bool face_has_vertex(const Face& f, Vtx v) {
    auto vs = vertices_ccw(f);
    return vs[0] == v || vs[1] == v || vs[2] == v;
}

bool faces_share_vertex_edge(const Face& a, const Face& b, Vtx v, Edge* out) {
    for (auto& ea : edges_of_face(a))
        for (auto& eb : edges_of_face(b))
            if (ea == eb && (ea.from == v || ea.to() == v)) {
                *out = ea;
                return true;
            }
    return false;
}

}  // namespace

void Triangle::validate() const {
    if (!dual) {
        if (!(s0.f == s1.f)) fail("InvalidRibbon", "direct triangle sites must share a face");
        bool joins = (e.from == s0.v && e.to() == s1.v) || (e.from == s1.v && e.to() == s0.v);
        if (!joins) fail("InvalidRibbon", "direct triangle edge must join the two vertices");
        if (!face_has_vertex(s0.f, s0.v) || !face_has_vertex(s0.f, s1.v))
            fail("InvalidRibbon", "direct triangle sites not on their face");
    } else {
        if (!(s0.v == s1.v)) fail("InvalidRibbon", "dual triangle sites must share a vertex");
        Face r = right_face(e), l = left_face(e);
        bool joins = (r == s0.f && l == s1.f) || (r == s1.f && l == s0.f);
        if (!joins) fail("InvalidRibbon", "dual triangle edge must join the two faces");
        if (!face_has_vertex(s0.f, s0.v) || !face_has_vertex(s1.f, s0.v))
            fail("InvalidRibbon", "dual triangle faces not at their vertex");
    }
}

bool Triangle::positive() const {
    if (!dual) {
        // e_tau = v(s0) -> v(s1); positive when the face is on its right.
        auto d = sub(pos(s1.v), pos(s0.v));
        auto rel = sub(centroid(s0.f), midpoint(e));
        return cross(d, rel) < 0;
    }
    // e*_tau = f(s0) -> f(s1); positive when the vertex is on its left.
    auto d = sub(centroid(s1.f), centroid(s0.f));
    auto rel = sub(pos(s0.v), midpoint(e));
    return cross(d, rel) > 0;
}

Triangle direct_triangle(const Site& s0, Vtx v1) {
    Edge e{s0.v, 0};
    bool found = false;
    for (int dir = 0; dir < 3 && !found; ++dir) {
        if (s0.v + kDirs[dir] == v1) {
            e = Edge{s0.v, dir};
            found = true;
        }
        if (s0.v - kDirs[dir] == v1) {
            e = Edge{v1, dir};
            found = true;
        }
    }
    if (!found) fail("InvalidRibbon", "direct triangle endpoints not adjacent");
    Triangle t{s0, Site{v1, s0.f}, e, false};
    t.validate();
    return t;
}

Triangle dual_triangle(const Site& s0, const Face& f1) {
    Edge e;
    if (!faces_share_vertex_edge(s0.f, f1, s0.v, &e))
        fail("InvalidRibbon", "dual triangle faces not adjacent at the vertex");
    Triangle t{s0, Site{s0.v, f1}, e, true};
    t.validate();
    return t;
}

Ribbon Ribbon::reversed() const {
    Ribbon r;
    r.t.reserve(t.size());
    for (auto it = t.rbegin(); it != t.rend(); ++it) r.t.push_back(it->reversed());
    return r;
}

void Ribbon::validate() const {
    std::set<Edge> used;
    for (std::size_t i = 0; i < t.size(); ++i) {
        t[i].validate();
        if (i + 1 < t.size() && !(t[i].s1 == t[i + 1].s0))
            fail("InvalidRibbon", "consecutive triangles do not chain");
        if (!used.insert(t[i].e).second) fail("InvalidRibbon", "edge used twice");
    }
}

int Ribbon::sign() const {
    if (t.empty()) return 0;
    bool pos = t.front().positive();
    for (auto& tr : t)
        if (tr.positive() != pos) return 0;
    return pos ? 1 : -1;
}

std::vector<Edge> Ribbon::support() const {
    std::vector<Edge> out;
    for (auto& tr : t) out.push_back(tr.e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<Vtx, Vtx>> Ribbon::direct_path() const {
    std::vector<std::pair<Vtx, Vtx>> out;
    for (auto& tr : t)
        if (!tr.dual) out.emplace_back(tr.s0.v, tr.s1.v);
    return out;
}

Ribbon concat(const Ribbon& a, const Ribbon& b) {
    if (!a.empty() && !b.empty() && !(a.finish() == b.start()))
        fail("InvalidRibbon", "concatenation endpoints do not match");
    Ribbon r = a;
    r.t.insert(r.t.end(), b.t.begin(), b.t.end());
    r.validate();
    return r;
}

Ribbon face_loop(const Site& s) {
    auto vs = vertices_ccw(s.f);
    int start = 0;
    while (!(vs[start] == s.v)) ++start;
    Ribbon r;
    for (int k = 0; k < 3; ++k) {
        Vtx a = vs[(start + k) % 3], b = vs[(start + k + 1) % 3];
        r.t.push_back(direct_triangle(Site{a, s.f}, b));
    }
    r.validate();
    return r;
}

Ribbon star_loop(const Site& s) {
    auto fs = faces_ccw(s.v);
    int start = 0;
    while (!(fs[start] == s.f)) ++start;
    Ribbon r;
    for (int k = 0; k < 6; ++k) {
        const Face& a = fs[(start + k) % 6];
        const Face& b = fs[(start + k + 1) % 6];
        r.t.push_back(dual_triangle(Site{s.v, a}, b));
    }
    r.validate();
    return r;
}

std::vector<Triangle> pivot_cw(Vtx v, const Face& from, const Face& to) {
    auto fs = faces_ccw(v);
    int a = -1, b = -1;
    for (int k = 0; k < 6; ++k) {
        if (fs[k] == from) a = k;
        if (fs[k] == to) b = k;
    }
    if (a < 0 || b < 0) fail("InvalidRibbon", "pivot faces not at the vertex");
    std::vector<Triangle> out;
    int cur = a;
    while (cur != b) {
        int next = (cur + 5) % 6;  // clockwise
        out.push_back(dual_triangle(Site{v, fs[cur]}, fs[next]));
        cur = next;
    }
    return out;
}

namespace {

// Positive ribbon whose direct path follows the oriented vertex list, with
// per-step faces on the left of travel, joined by clockwise dual pivots.
Ribbon ribbon_along(const std::vector<Vtx>& path, const std::vector<Face>& left_faces) {
    Ribbon r;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        Site s{path[k], left_faces[k]};
        if (k > 0 && !(left_faces[k - 1] == left_faces[k])) {
            auto pivots = pivot_cw(path[k], left_faces[k - 1], left_faces[k]);
            r.t.insert(r.t.end(), pivots.begin(), pivots.end());
        }
        r.t.push_back(direct_triangle(s, path[k + 1]));
    }
    r.validate();
    return r;
}

Face left_of_travel(Vtx from, Vtx to) {
    for (int dir = 0; dir < 3; ++dir) {
        if (from + kDirs[dir] == to) return left_face(Edge{from, dir});
        if (to + kDirs[dir] == from) return right_face(Edge{to, dir});
    }
    fail("InvalidRibbon", "vertices not adjacent");
}

}  // namespace

Patch Patch::make(int n) {
    if (n < 1) fail("RegionTooSmall", "patch radius must be at least 1");
    Patch p;
    p.n = n;
    for (int a1 = -(n + 2); a1 <= n + 2; ++a1)
        for (int a2 = -(n + 2); a2 <= n + 2; ++a2)
            if (hexdist({a1, a2}) <= n) p.vertices.push_back({a1, a2});
    std::sort(p.vertices.begin(), p.vertices.end());

    std::set<Face> fset;
    for (auto v : p.vertices)
        for (auto& f : faces_ccw(v)) fset.insert(f);
    p.faces.assign(fset.begin(), fset.end());
    for (std::size_t i = 0; i < p.faces.size(); ++i) p.face_lookup_[p.faces[i]] = (int)i;

    std::set<Edge> eset;
    for (auto& f : p.faces)
        for (auto& e : edges_of_face(f)) eset.insert(e);
    p.edges.assign(eset.begin(), eset.end());
    for (std::size_t i = 0; i < p.edges.size(); ++i) p.edge_lookup_[p.edges[i]] = (int)i;

    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        int count = (p.face_lookup_.count(right_face(p.edges[i])) ? 1 : 0) +
                    (p.face_lookup_.count(left_face(p.edges[i])) ? 1 : 0);
        if (count == 1) p.boundary_edges.push_back((int)i);
    }

    p.s0 = Site{{0, 0}, Face{{0, 0}, true}};

    // Fiducial ribbon: direct path (0,0) -> (n+1, 0) with faces above the axis.
    std::vector<Vtx> path;
    std::vector<Face> lf;
    for (int i = 0; i <= n + 1; ++i) path.push_back({i, 0});
    for (int i = 0; i <= n; ++i) lf.push_back(Face{{i, 0}, true});
    p.fiducial = ribbon_along(path, lf);
    if (!(p.fiducial.start() == p.s0)) fail("InvalidRibbon", "fiducial ribbon start");
    p.sn = p.fiducial.finish();

    // Boundary cycle: walk boundary edges counterclockwise starting at v(sn).
    std::map<Vtx, std::vector<int>> by_vertex;
    for (int id : p.boundary_edges) {
        by_vertex[p.edges[id].from].push_back(id);
        by_vertex[p.edges[id].to()].push_back(id);
    }
    for (auto& [v, ids] : by_vertex)
        if (ids.size() != 2) fail("InvalidRibbon", "boundary is not a single cycle");
    Vtx start = p.sn.v;
    if (!by_vertex.count(start)) fail("InvalidRibbon", "fiducial end not on the boundary cycle");
    // choose the ccw continuation: the one whose left face is in the patch
    auto step_from = [&](Vtx at, int avoid_edge) -> std::pair<Vtx, int> {
        for (int id : by_vertex[at]) {
            if (id == avoid_edge) continue;
            const Edge& e = p.edges[id];
            Vtx other = (e.from == at) ? e.to() : e.from;
            Face lface = (e.from == at) ? left_face(e) : right_face(e);
            if (p.face_lookup_.count(lface)) return {other, id};
        }
        fail("InvalidRibbon", "no ccw boundary continuation");
    };
    Vtx cur = start;
    int cur_edge = -1;
    do {
        auto [next, id] = step_from(cur, cur_edge);
        p.ring.push_back(cur);
        const Edge& e = p.edges[id];
        p.ring_edges.push_back(e);
        cur_edge = id;
        cur = next;
    } while (!(cur == start));
    if (p.ring.size() != p.boundary_edges.size())
        fail("InvalidRibbon", "boundary cycle does not cover all boundary edges");

    // Boundary ribbon from s_n all the way around (faces left of travel),
    // closing with the final pivots back to s_n's face.
    {
        std::vector<Vtx> bpath = p.ring;
        bpath.push_back(start);
        std::vector<Face> blf;
        for (std::size_t k = 0; k + 1 < bpath.size(); ++k)
            blf.push_back(left_of_travel(bpath[k], bpath[k + 1]));
        if (!(blf.front() == p.sn.f))
            fail("InvalidRibbon", "boundary ribbon does not start at s_n's face");
        Ribbon r = ribbon_along(bpath, blf);
        auto closing = pivot_cw(start, blf.back(), p.sn.f);
        r.t.insert(r.t.end(), closing.begin(), closing.end());
        r.validate();
        if (!r.closed()) fail("InvalidRibbon", "boundary ribbon does not close");
        p.boundary = r;
    }
    return p;
}

int Patch::edge_index(const Edge& e) const {
    auto it = edge_lookup_.find(e);
    if (it == edge_lookup_.end()) fail("SupportMismatch", "edge outside the patch");
    return it->second;
}

bool Patch::face_in_patch(const Face& f) const { return face_lookup_.count(f) > 0; }

bool Patch::site_interior(const Site& s) const {
    for (auto& e : edges_of_face(s.f))
        if (!has_edge(e)) return false;
    for (auto& f : faces_ccw(s.v))
        for (auto& e : edges_of_face(f))
            if (!has_edge(e)) return false;
    return true;
}

std::vector<Site> Patch::interior_sites() const {
    std::vector<Site> out;
    for (auto v : vertices)
        for (auto& f : faces_ccw(v)) {
            Site s{v, f};
            if (site_interior(s)) out.push_back(s);
        }
    return out;
}

namespace {

std::optional<Ribbon> grow_ribbon(const Patch& p, std::mt19937_64& rng, int len, int sign,
                                  const Site& start, const std::vector<Edge>& avoid);

}  // namespace

std::optional<Ribbon> random_ribbon(const Patch& p, std::mt19937_64& rng, int len, int sign,
                                    int attempts) {
    auto interior = p.interior_sites();
    if (interior.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, interior.size() - 1);
    for (int att = 0; att < attempts; ++att) {
        auto r = grow_ribbon(p, rng, len, sign, interior[pick(rng)], {});
        if (r) return r;
    }
    return std::nullopt;
}

std::optional<Ribbon> random_ribbon_from(const Patch& p, std::mt19937_64& rng, int len, int sign,
                                         const Site& start, const std::vector<Edge>& avoid,
                                         int attempts) {
    for (int att = 0; att < attempts; ++att) {
        auto r = grow_ribbon(p, rng, len, sign, start, avoid);
        if (r) return r;
    }
    return std::nullopt;
}

namespace {

std::optional<Ribbon> grow_ribbon(const Patch& p, std::mt19937_64& rng, int len, int sign,
                                  const Site& start, const std::vector<Edge>& avoid) {
    {
        Ribbon r;
        Site cur = start;
        std::set<Edge> used(avoid.begin(), avoid.end());
        bool ok = true;
        for (int k = 0; k < len && ok; ++k) {
            // candidate continuations from cur with the requested sign
            std::vector<Triangle> cands;
            for (auto& f : faces_ccw(cur.v))
                if (f == cur.f)
                    for (auto w : vertices_ccw(f))
                        if (!(w == cur.v)) {
                            Triangle t = direct_triangle(cur, w);
                            if ((t.positive() ? 1 : -1) == sign) cands.push_back(t);
                        }
            auto fs = faces_ccw(cur.v);
            for (int i = 0; i < 6; ++i)
                if (fs[i] == cur.f) {
                    for (int d : {1, 5}) {
                        Triangle t = dual_triangle(cur, fs[(i + d) % 6]);
                        if ((t.positive() ? 1 : -1) == sign) cands.push_back(t);
                    }
                }
            std::shuffle(cands.begin(), cands.end(), rng);
            bool advanced = false;
            for (auto& t : cands) {
                if (used.count(t.e) || !p.has_edge(t.e)) continue;
                used.insert(t.e);
                r.t.push_back(t);
                cur = t.s1;
                advanced = true;
                break;
            }
            ok = advanced;
        }
        if (!ok) return std::nullopt;
        r.validate();
        if (r.sign() != sign) return std::nullopt;
        Site a = r.start(), b = r.finish();
        if (a.v == b.v || a.f == b.f) return std::nullopt;
        if (!p.site_interior(a) || !p.site_interior(b)) return std::nullopt;
        return r;
    }
}

}  // namespace

}  // namespace qd::lat
