#include "tropilift/morphism.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tropilift {

std::vector<std::string> validate_morphism(const Morphism& f) {
    std::vector<std::string> out;
    for (const auto& d : validate_model(f.source)) out.push_back("source: " + d);
    for (const auto& d : validate_model(f.target)) out.push_back("target: " + d);
    if (!out.empty()) return out;

    int nv = f.source.vertex_count(), ne = f.source.edge_count();
    if ((int)f.vertex_map.size() != nv || (int)f.edge_map.size() != ne ||
        (int)f.contracted_to.size() != ne || (int)f.edge_degree.size() != ne) {
        out.push_back("morphism arrays do not match the source model");
        return out;
    }
    for (int v = 0; v < nv; ++v)
        if (f.vertex_map[v] < 0 || f.vertex_map[v] >= f.target.vertex_count()) {
            out.push_back("vertex '" + f.source.vertex(v).id + "' maps outside the target");
            return out;
        }

    for (int e = 0; e < ne; ++e) {
        const Edge& ed = f.source.edge(e);
        const std::string& id = ed.id;
        if (f.edge_map[e] >= f.target.edge_count()) {
            out.push_back("edge '" + id + "' maps to an unknown target edge");
            continue;
        }
        if (f.contracted(e)) {
            if (f.edge_degree[e] != 0) out.push_back("contracted edge '" + id + "' has nonzero degree");
            int w = f.contracted_to[e];
            if (w < 0 || w >= f.target.vertex_count()) {
                out.push_back("contracted edge '" + id + "' lacks a contraction vertex");
                continue;
            }
            if (f.vertex_map[ed.ends[0]] != w || f.vertex_map[ed.ends[1]] != w)
                out.push_back("contracted edge '" + id + "': endpoints do not map to the contraction vertex");
        } else {
            if (f.edge_degree[e] < 1) out.push_back("edge '" + id + "' has degree < 1 but is not contracted");
            const Edge& te = f.target.edge(f.edge_map[e]);
            int a = f.vertex_map[ed.ends[0]], b = f.vertex_map[ed.ends[1]];
            bool straight = (a == te.ends[0] && b == te.ends[1]);
            bool flipped = (a == te.ends[1] && b == te.ends[0]);
            if (!straight && !flipped) {
                out.push_back("edge '" + id + "': endpoint images do not match target edge '" + te.id + "'");
                continue;
            }
            if (te.len.infinite != ed.len.infinite) {
                out.push_back("edge '" + id + "': infinite edges must map to infinite edges");
                continue;
            }
            if (ed.len.infinite) {
                if (!straight) out.push_back("edge '" + id + "': infinite end maps to a finite end");
            } else if (f.edge_degree[e] > 0 && te.len.value != ed.len.value * f.edge_degree[e]) {
                out.push_back("edge '" + id + "': length mismatch (target length must be degree * source length)");
            }
        }
    }

    if (f.target.edge_count() == 0) {
        for (int v = 0; v < nv; ++v) {
            if (f.source.vertex(v).infinite) continue;
            auto it = f.point_target_degrees.find(v);
            if (it == f.point_target_degrees.end())
                out.push_back("degrees required for point target (missing at vertex '" +
                              f.source.vertex(v).id + "')");
            else if (it->second < 1)
                out.push_back("non-positive point-target degree at vertex '" + f.source.vertex(v).id + "'");
        }
    }
    return out;
}

void require_valid(const Morphism& f) {
    auto diag = validate_morphism(f);
    if (!diag.empty()) throw std::invalid_argument("invalid morphism: " + diag.front());
}

PointLoc map_point(const Morphism& f, const PointLoc& p) {
    if (p.is_vertex()) return PointLoc::at_vertex(f.vertex_map[p.vertex]);
    int e = p.edge;
    if (f.contracted(e)) return PointLoc::at_vertex(f.contracted_to[e]);
    const Edge& ed = f.source.edge(e);
    const Edge& te = f.target.edge(f.edge_map[e]);
    bool flipped = (f.vertex_map[ed.ends[0]] == te.ends[1] && f.vertex_map[ed.ends[1]] == te.ends[0]);
    Rat img = p.offset * f.edge_degree[e];
    if (flipped) img = te.len.value - img;
    return PointLoc::on_edge(f.edge_map[e], img);
}

std::optional<EdgeEnd> direction_image(const Morphism& f, const EdgeEnd& d) {
    if (f.contracted(d.edge)) return std::nullopt;
    const Edge& ed = f.source.edge(d.edge);
    const Edge& te = f.target.edge(f.edge_map[d.edge]);
    int image_vertex = f.vertex_map[ed.ends[d.end]];
    return EdgeEnd{f.edge_map[d.edge], image_vertex == te.ends[0] ? 0 : 1};
}

LocalDegreeResult local_degree(const Morphism& f, int source_vertex) {
    LocalDegreeResult res;
    if (f.target.edge_count() == 0) {
        auto it = f.point_target_degrees.find(source_vertex);
        if (it == f.point_target_degrees.end())
            throw std::invalid_argument("degrees required for point target");
        res.harmonic = true;
        res.degree = it->second;
        return res;
    }
    int p = f.vertex_map[source_vertex];
    std::map<EdgeEnd, long long> sums;
    for (const auto& dir : f.target.incident(p)) sums[dir] = 0;
    for (const auto& dir : f.source.incident(source_vertex)) {
        auto img = direction_image(f, dir);
        if (img) sums[*img] += f.edge_degree[dir.edge];
    }
    long long common = sums.begin()->second;
    res.harmonic = true;
    for (const auto& [dir, s] : sums) {
        if (s != common) {
            res.harmonic = false;
            res.mismatches.push_back("direction along target edge '" + f.target.edge(dir.edge).id +
                                     "' sums to " + std::to_string(s) + " != " + std::to_string(common));
        }
    }
    if (res.harmonic) res.degree = common;
    return res;
}

namespace {

bool surjective(const Morphism& f) {
    std::vector<char> vhit(f.target.vertex_count(), 0), ehit(f.target.edge_count(), 0);
    for (int v = 0; v < f.source.vertex_count(); ++v) vhit[f.vertex_map[v]] = 1;
    for (int e = 0; e < f.source.edge_count(); ++e)
        if (!f.contracted(e)) ehit[f.edge_map[e]] = 1;
    return std::all_of(vhit.begin(), vhit.end(), [](char c) { return c != 0; }) &&
           std::all_of(ehit.begin(), ehit.end(), [](char c) { return c != 0; });
}

}  // namespace

bool is_harmonic(const Morphism& f) {
    if (!surjective(f)) return false;
    for (int v = 0; v < f.source.vertex_count(); ++v)
        if (!local_degree(f, v).harmonic) return false;
    return true;
}

bool is_finite(const Morphism& f) {
    for (int e = 0; e < f.source.edge_count(); ++e)
        if (f.contracted(e)) return false;
    return true;
}

long long morphism_degree(const Morphism& f) {
    if (!is_harmonic(f)) throw std::invalid_argument("degree is defined for harmonic morphisms only");
    std::vector<long long> fiber(f.target.vertex_count(), 0);
    for (int v = 0; v < f.source.vertex_count(); ++v)
        fiber[f.vertex_map[v]] += local_degree(f, v).degree;
    for (long long s : fiber)
        if (s != fiber[0]) throw std::logic_error("fiber degree sums disagree across target vertices");
    return fiber[0];
}

Ramification ramification_divisor(const Morphism& f) {
    Ramification ram;
    for (int v = 0; v < f.source.vertex_count(); ++v) {
        auto ld = local_degree(f, v);
        if (!ld.harmonic) throw std::invalid_argument("ramification divisor needs a harmonic morphism");
        long long dv = ld.degree;
        long long gs = f.source.vertex(v).genus;
        long long gt = f.target.vertex(f.vertex_map[v]).genus;
        long long slack = 0;
        long long zero_dirs = 0;
        for (const auto& dir : f.source.incident(v)) {
            slack += f.edge_degree[dir.edge] - 1;
            if (f.edge_degree[dir.edge] == 0) ++zero_dirs;
        }
        long long r = dv * (2 - 2 * gt) - (2 - 2 * gs) - slack;
        divisor_add(ram.divisor, PointLoc::at_vertex(v), r);
        if (dv != 0) ram.reduced[v] = r - zero_dirs;
    }
    return ram;
}

bool riemann_hurwitz_check(const Morphism& f) {
    Divisor lhs = canonical_divisor(f.source);
    Divisor rhs =
        divisor_sum(pullback_divisor(f, canonical_divisor(f.target)), ramification_divisor(f).divisor);
    return lhs == rhs;
}

bool is_effective(const Morphism& f) {
    Ramification ram = ramification_divisor(f);
    for (const auto& [v, r] : ram.reduced)
        if (!f.source.vertex(v).infinite && r < 0) return false;
    return true;
}

bool is_etale(const Morphism& f) { return ramification_divisor(f).divisor.empty(); }

bool is_generically_etale(const Morphism& f) {
    for (const auto& [p, c] : ramification_divisor(f).divisor)
        if (!f.source.vertex(p.vertex).infinite) return false;
    return true;
}

bool is_tame(const Morphism& f, long long char_p) {
    if (char_p == 0) return true;
    for (int e = 0; e < f.source.edge_count(); ++e)
        if (int_gcd(Int(f.edge_degree[e]), Int(char_p)) != 1) return false;
    return true;
}

Divisor pushforward_divisor(const Morphism& f, const Divisor& on_source) {
    Divisor out;
    for (const auto& [p, c] : on_source) divisor_add(out, map_point(f, p), c);
    return out;
}

Divisor pullback_divisor(const Morphism& f, const Divisor& on_target) {
    Divisor out;
    for (const auto& [x, c] : on_target) {
        if (x.is_vertex()) {
            for (int v = 0; v < f.source.vertex_count(); ++v) {
                if (f.vertex_map[v] != x.vertex) continue;
                auto ld = local_degree(f, v);
                if (!ld.harmonic) throw std::invalid_argument("pullback needs a harmonic morphism");
                divisor_add(out, PointLoc::at_vertex(v), c * ld.degree);
            }
        } else {
            const Edge& te = f.target.edge(x.edge);
            for (int e = 0; e < f.source.edge_count(); ++e) {
                if (f.contracted(e) || f.edge_map[e] != x.edge) continue;
                const Edge& ed = f.source.edge(e);
                bool flipped =
                    (f.vertex_map[ed.ends[0]] == te.ends[1] && f.vertex_map[ed.ends[1]] == te.ends[0]);
                Rat t = (flipped && !te.len.infinite) ? (te.len.value - x.offset) : x.offset;
                divisor_add(out, PointLoc::on_edge(e, t / f.edge_degree[e]), c * f.edge_degree[e]);
            }
        }
    }
    return out;
}

Divisor fiber_divisor(const Morphism& f, const PointLoc& x) {
    if (!is_finite(f)) throw std::invalid_argument("fiber divisors need a finite morphism");
    return pullback_divisor(f, Divisor{{x, 1}});
}

std::vector<Partition> local_partitions(const Morphism& f, int source_vertex) {
    auto ld = local_degree(f, source_vertex);
    if (!ld.harmonic) throw std::invalid_argument("local partitions need a harmonic vertex");
    if (ld.degree <= 0) throw std::invalid_argument("local partitions need positive local degree");
    if (f.target.edge_count() == 0) return {};
    int p = f.vertex_map[source_vertex];
    std::map<EdgeEnd, std::vector<long long>> groups;
    for (const auto& dir : f.target.incident(p)) groups[dir] = {};
    for (const auto& dir : f.source.incident(source_vertex)) {
        auto img = direction_image(f, dir);
        if (img) groups[*img].push_back(f.edge_degree[dir.edge]);
    }
    std::vector<Partition> out;
    for (auto& [dir, parts] : groups) out.emplace_back(Partition(std::move(parts)));
    return out;
}

Morphism identity_morphism(const Graph& g) {
    Morphism f;
    f.source = g;
    f.target = g;
    f.vertex_map.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) f.vertex_map[v] = v;
    f.edge_map.resize(g.edge_count());
    f.contracted_to.assign(g.edge_count(), -1);
    f.edge_degree.assign(g.edge_count(), 1);
    for (int e = 0; e < g.edge_count(); ++e) f.edge_map[e] = e;
    if (g.edge_count() == 0)
        for (int v = 0; v < g.vertex_count(); ++v) f.point_target_degrees[v] = 1;
    return f;
}

// --- weak resolution ----------------------------------------------------------

namespace {

// Splits a contracted source edge at the given offset; the two halves stay
// contracted. Rebuilds the source model and remaps.
Morphism split_contracted_edge(const Morphism& f, int edge, const Rat& offset, int* out_mid) {
    Refinement r = subdivide(f.source, {PointLoc::on_edge(edge, offset)});
    Morphism g;
    g.source = r.graph;
    g.target = f.target;
    g.vertex_map.assign(g.source.vertex_count(), -1);
    for (int v = 0; v < f.source.vertex_count(); ++v) g.vertex_map[r.fwd.vertex_map[v]] = f.vertex_map[v];
    g.edge_map.assign(g.source.edge_count(), -1);
    g.contracted_to.assign(g.source.edge_count(), -1);
    g.edge_degree.assign(g.source.edge_count(), 0);
    for (int e = 0; e < f.source.edge_count(); ++e) {
        for (int seg : r.fwd.edge_splits[e].segments) {
            g.edge_map[seg] = f.edge_map[e];
            g.contracted_to[seg] = f.contracted_to[e];
            g.edge_degree[seg] = f.edge_degree[e];
        }
    }
    int mid = r.fwd.edge_splits[edge].cut_vertices.at(0);
    g.vertex_map[mid] = f.contracted_to[edge];
    if (out_mid) *out_mid = mid;
    g.point_target_degrees = f.point_target_degrees;
    return g;
}

// Attaches a copy of the target tree at source vertex v (image x), mapping
// isomorphically with degree 1 everywhere.
void attach_target_copy(Morphism& f, int v, const std::string& tag) {
    int x = f.vertex_map[v];
    std::vector<int> copy(f.target.vertex_count(), -1);
    copy[x] = v;
    for (int w = 0; w < f.target.vertex_count(); ++w) {
        if (w == x) continue;
        const Vertex& vt = f.target.vertex(w);
        copy[w] = f.source.add_vertex(f.source.fresh_vertex_id(tag + "." + vt.id), 0, vt.infinite);
        f.vertex_map.push_back(w);
    }
    for (int e = 0; e < f.target.edge_count(); ++e) {
        const Edge& te = f.target.edge(e);
        f.source.add_edge(f.source.fresh_edge_id(tag + "." + te.id), copy[te.ends[0]], copy[te.ends[1]],
                          te.len);
        f.edge_map.push_back(e);
        f.contracted_to.push_back(-1);
        f.edge_degree.push_back(1);
    }
}

// Attaches one branch (finite stub of length h continued by an infinite end)
// at source vertex w, mapping degree 1 onto target edges (stub_edge, inf_edge).
void attach_branch(Morphism& f, int w, const Rat& h, int stub_edge, int inf_edge, const std::string& tag) {
    int c0 = f.source.add_vertex(f.source.fresh_vertex_id(tag + ".n"));
    f.vertex_map.push_back(f.target.edge(stub_edge).ends[1]);
    f.source.add_edge(f.source.fresh_edge_id(tag + ".s"), w, c0, Length::finite(h));
    f.edge_map.push_back(stub_edge);
    f.contracted_to.push_back(-1);
    f.edge_degree.push_back(1);
    int cinf = f.source.add_vertex(f.source.fresh_vertex_id(tag + ".ninf"), 0, true);
    f.vertex_map.push_back(f.target.edge(inf_edge).ends[1]);
    f.source.add_edge(f.source.fresh_edge_id(tag + ".i"), c0, cinf, Length::inf());
    f.edge_map.push_back(inf_edge);
    f.contracted_to.push_back(-1);
    f.edge_degree.push_back(1);
}

// Attaches one infinite leaf edge at w mapping degree 1 onto inf_edge.
void attach_infinite_leaf(Morphism& f, int w, int inf_edge, const std::string& tag) {
    int cinf = f.source.add_vertex(f.source.fresh_vertex_id(tag + ".z"), 0, true);
    f.vertex_map.push_back(f.target.edge(inf_edge).ends[1]);
    f.source.add_edge(f.source.fresh_edge_id(tag + ".ze"), w, cinf, Length::inf());
    f.edge_map.push_back(inf_edge);
    f.contracted_to.push_back(-1);
    f.edge_degree.push_back(1);
}

}  // namespace

Morphism weak_resolution(const Morphism& f0) {
    require_valid(f0);
    if (first_betti(f0.target) != 0) throw std::invalid_argument("weak resolution needs a tree target");
    if (!is_harmonic(f0)) throw std::invalid_argument("weak resolution needs a harmonic morphism");
    if (is_finite(f0)) return f0;

    Morphism f = f0;
    int tagc = 0;

    // phase 1: every locally-constant vertex receives a copy of the target
    if (f.target.edge_count() > 0) {
        std::vector<int> constant_vertices;
        for (int v = 0; v < f.source.vertex_count(); ++v) {
            bool all_contracted = f.source.valence(v) > 0;
            for (const auto& dir : f.source.incident(v))
                if (!f.contracted(dir.edge)) all_contracted = false;
            if (all_contracted) constant_vertices.push_back(v);
        }
        for (int v : constant_vertices) attach_target_copy(f, v, "res" + std::to_string(tagc++));
    }

    // phase 2: split each contracted edge over a fresh target branch
    for (;;) {
        int edge = -1;
        for (int e = 0; e < f.source.edge_count(); ++e)
            if (f.contracted(e)) { edge = e; break; }
        if (edge < 0) break;

        const Edge ed = f.source.edge(edge);
        int x = f.contracted_to[edge];
        bool infinite_case = ed.len.infinite;
        Rat h = infinite_case ? Rat(1) : ed.len.value / 2;
        int u = ed.ends[0], v = ed.ends[1];

        // fiber over x with local degrees, before this step's changes
        std::vector<std::pair<int, long long>> fiber;
        for (int w = 0; w < f.source.vertex_count(); ++w) {
            if (f.vertex_map[w] != x || f.source.vertex(w).infinite) continue;
            fiber.emplace_back(w, local_degree(f, w).degree);
        }

        std::string tag = "res" + std::to_string(tagc++);

        // new target branch at x: finite stub of length h, then an infinite end
        int n0 = f.target.add_vertex(f.target.fresh_vertex_id(tag + ".t0"));
        int stub = f.target.add_edge(f.target.fresh_edge_id(tag + ".e0"), x, n0, Length::finite(h));
        int ninf = f.target.add_vertex(f.target.fresh_vertex_id(tag + ".tinf"), 0, true);
        int einf = f.target.add_edge(f.target.fresh_edge_id(tag + ".einf"), n0, ninf, Length::inf());

        int mid = -1;
        f = split_contracted_edge(f, edge, h, &mid);
        for (const auto& dir : f.source.incident(mid)) {
            int e = dir.edge;
            if (f.source.edge(e).len.infinite) {
                f.edge_map[e] = einf;
                f.edge_degree[e] = 1;
                f.contracted_to[e] = -1;
                f.vertex_map[f.source.far_vertex(dir)] = ninf;
            } else {
                f.edge_map[e] = stub;
                f.edge_degree[e] = 1;
                f.contracted_to[e] = -1;
            }
        }
        f.vertex_map[mid] = n0;
        if (!infinite_case) {
            // the split point has two stub-directed halves; give it a matching
            // pair of infinite ends upward
            attach_infinite_leaf(f, mid, einf, tag + ".m0");
            attach_infinite_leaf(f, mid, einf, tag + ".m1");
        }

        // the halves already give the split edge's endpoints one unit toward
        // the stub; every other fiber vertex needs its full local degree
        for (const auto& [w, dw] : fiber) {
            long long need = dw;
            if (w == u) need -= 1;
            if (!infinite_case && w == v) need -= 1;
            for (long long k = 0; k < need; ++k)
                attach_branch(f, w, h, stub, einf, tag + ".b" + std::to_string(w) + "_" + std::to_string(k));
        }
    }

    require_valid(f);
    if (!is_harmonic(f) || !is_finite(f))
        throw std::logic_error("weak resolution failed to produce a finite harmonic morphism");
    return f;
}

}  // namespace tropilift
