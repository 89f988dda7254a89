#pragma once

#include "tropilift/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace tropilift {

struct Vertex {
    std::string id;
    int genus = 0;
    bool infinite = false;
};

struct Edge {
    std::string id;
    int ends[2];  // infinite edges are normalized so ends[0] is the finite endpoint
    Length len;
};

/// A tangent direction at a vertex: the end of an incident edge.
/// Parallel edges yield distinct directions.
struct EdgeEnd {
    int edge;
    int end;  // 0 or 1; vertex(edge.ends[end]) is where the direction is based
    bool operator==(const EdgeEnd& o) const { return edge == o.edge && end == o.end; }
    bool operator<(const EdgeEnd& o) const {
        return edge != o.edge ? edge < o.edge : end < o.end;
    }
};

/// A point of the graph: a vertex, or an interior point of an edge at a given
/// offset from the edge's end 0 (0 < offset < length; on infinite edges the
/// offset is the finite distance from the finite endpoint).
struct PointLoc {
    int vertex = -1;  // >= 0 for vertex locations
    int edge = -1;    // >= 0 for edge locations
    Rat offset = 0;

    static PointLoc at_vertex(int v) { return PointLoc{v, -1, 0}; }
    static PointLoc on_edge(int e, const Rat& off) { return PointLoc{-1, e, off}; }
    bool is_vertex() const { return vertex >= 0; }

    bool operator==(const PointLoc& o) const {
        return vertex == o.vertex && edge == o.edge && offset == o.offset;
    }
    bool operator<(const PointLoc& o) const {
        if (vertex != o.vertex) return vertex < o.vertex;
        if (edge != o.edge) return edge < o.edge;
        return offset < o.offset;
    }
};

/// Integer-weighted finite sum of points; canonical form drops zero
/// coefficients.
using Divisor = std::map<PointLoc, long long>;

void divisor_add(Divisor& d, const PointLoc& p, long long coeff);
Divisor divisor_sum(const Divisor& a, const Divisor& b);
Divisor divisor_neg(const Divisor& a);
long long divisor_degree(const Divisor& d);
bool divisor_effective(const Divisor& d);

/// A model of a compact connected metric graph: named vertices (with genus
/// and infinity markers) and named edges with exact rational or infinite
/// lengths. Loop edges are rejected; parallel edges are fine.
class Graph {
public:
    int add_vertex(const std::string& id, int genus = 0, bool infinite = false);
    /// Throws on loops, duplicate ids, unknown endpoints, or edges joining
    /// two infinite vertices.
    int add_edge(const std::string& id, int u, int v, const Length& len);
    /// Loop helper: realizes a loop at v as two parallel edges through a
    /// fresh midpoint vertex, half the circumference each.
    std::pair<int, int> add_loop(const std::string& id, int v, const Rat& circumference);

    int vertex_count() const { return (int)vertices_.size(); }
    int edge_count() const { return (int)edges_.size(); }
    const Vertex& vertex(int i) const { return vertices_[i]; }
    const Edge& edge(int i) const { return edges_[i]; }
    int find_vertex(const std::string& id) const;  // -1 if absent
    int find_edge(const std::string& id) const;
    int require_vertex(const std::string& id) const;  // throws if absent
    int require_edge(const std::string& id) const;

    const std::vector<EdgeEnd>& incident(int v) const { return adjacency_[v]; }
    int end_vertex(const EdgeEnd& d) const { return edges_[d.edge].ends[d.end]; }
    int far_vertex(const EdgeEnd& d) const { return edges_[d.edge].ends[1 - d.end]; }
    int valence(int v) const { return (int)adjacency_[v].size(); }
    int genus_at(int v) const { return vertices_[v].genus; }

    bool is_connected() const;
    std::string fresh_vertex_id(const std::string& base) const;
    std::string fresh_edge_id(const std::string& base) const;

    void set_genus(int v, int g) { vertices_[v].genus = g; }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeEnd>> adjacency_;
    std::map<std::string, int> vertex_index_;
    std::map<std::string, int> edge_index_;
};

/// Empty iff all model invariants hold; otherwise one message per violation,
/// each naming the offending vertex or edge.
std::vector<std::string> validate_model(const Graph& g);
void require_valid(const Graph& g);

long long first_betti(const Graph& g);
/// h1 plus the sum of vertex genera.
long long graph_genus(const Graph& g);
/// Coefficient val(p) + 2 genus(p) - 2 at every vertex, zeros dropped.
Divisor canonical_divisor(const Graph& g);

/// Translates locations of one model into a refinement of it.
class PointMap {
public:
    PointLoc map_point(const PointLoc& p) const;
    Divisor map_divisor(const Divisor& d) const;

    struct EdgeSplit {
        std::vector<Rat> cuts;          // interior cut offsets, strictly increasing
        std::vector<int> cut_vertices;  // new vertex per cut
        std::vector<int> segments;      // new edge per segment (cuts.size()+1 of them)
    };
    std::vector<int> vertex_map;        // old vertex -> new vertex
    std::vector<EdgeSplit> edge_splits; // per old edge
    Rat scale = 1;                      // new offsets = scale * old offsets
};

struct Refinement {
    Graph graph;
    PointMap fwd;
};

/// Promotes the given points to vertices; lengths split exactly, duplicates
/// deduplicated, metric space unchanged.
Refinement subdivide(const Graph& g, const std::vector<PointLoc>& points);

struct Uniformization {
    Graph graph;  // all finite edges of length 1
    PointMap fwd; // includes the scale factor
    Rat scale;
};

/// Scales all lengths by the lcm of the denominators, then splits every
/// finite edge into unit edges. Infinite edges are untouched.
Uniformization uniformize(const Graph& g);

struct Modification {
    Graph graph;
    PointMap fwd;        // original model into the modified one
    int attach_vertex;   // image of the modification point in the new graph
    int leaf_vertex;     // the new leaf
    int leaf_edge;
    PointLoc base_point; // in original coordinates

    /// Retraction: pushes a divisor on the modified graph back to the
    /// original one; points of the new edge land on the base point.
    Divisor retract_divisor(const Divisor& on_modified) const;
};

/// Attaches a new genus-0 leaf (infinite by default) at a finite point p.
Modification elementary_modification(const Graph& g, const PointLoc& p,
                                     const Length& new_length = Length::inf());

struct BridgeReport {
    std::set<int> bridges;  // finite edges whose removal disconnects the finite part
    std::set<int> leaves;   // infinite leaf edges, reported separately
};
BridgeReport bridges(const Graph& g);

/// Suppresses 2-valent genus-0 finite vertices (merging their edges) wherever
/// this does not create a loop. Where suppression would create a loop the
/// vertex is kept but relocated to the antipode of the cycle's attachment
/// point, a canonical position that exposes metric symmetries.
struct EssentialModel {
    Graph graph;
    std::vector<PointLoc> vertex_pos;  // position of each input vertex in the new model
};
EssentialModel essential_model(const Graph& g);

// Small builders used throughout the test-suite and the fixture catalog.
Graph make_circle(int n_vertices, const Rat& total_length = 0);  // 0 means n units
Graph make_banana(const std::vector<Rat>& lengths);
Graph make_path(int n_edges);

}  // namespace tropilift
