#pragma once

#include "tropilift/graph.hpp"
#include "tropilift/partition.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropilift {

/// A morphism of metric-graph models: vertices map to vertices, every source
/// edge maps onto a single target edge (a dilation by its edge degree) or is
/// contracted to a target vertex. For a single-vertex target the local
/// degrees cannot be derived and must be supplied.
struct Morphism {
    Graph source;
    Graph target;
    std::vector<int> vertex_map;               // source vertex -> target vertex
    std::vector<int> edge_map;                 // source edge -> target edge; -1 when contracted
    std::vector<int> contracted_to;            // target vertex for contracted edges; -1 otherwise
    std::vector<long long> edge_degree;        // dilation factor per source edge; 0 iff contracted
    std::map<int, long long> point_target_degrees;  // required iff the target has no edges

    bool contracted(int e) const { return edge_map[e] < 0; }
};

std::vector<std::string> validate_morphism(const Morphism& f);
void require_valid(const Morphism& f);

/// Image of a point under the morphism.
PointLoc map_point(const Morphism& f, const PointLoc& p);

/// Image of a tangent direction; empty for contracted edges.
std::optional<EdgeEnd> direction_image(const Morphism& f, const EdgeEnd& d);

struct LocalDegreeResult {
    bool harmonic = false;
    long long degree = 0;                 // valid when harmonic
    std::vector<std::string> mismatches;  // offending target directions otherwise
};

/// Sums the directional degrees over each target direction at the image
/// vertex; harmonic iff they agree.
LocalDegreeResult local_degree(const Morphism& f, int source_vertex);

bool is_harmonic(const Morphism& f);
bool is_finite(const Morphism& f);

/// Total degree; throws unless harmonic. Asserts the fiber sums agree over
/// every target vertex.
long long morphism_degree(const Morphism& f);

struct Ramification {
    Divisor divisor;                      // coefficients at source vertices
    std::map<int, long long> reduced;     // reduced values, for vertices of nonzero local degree
};
Ramification ramification_divisor(const Morphism& f);

bool riemann_hurwitz_check(const Morphism& f);
bool is_effective(const Morphism& f);
bool is_etale(const Morphism& f);
bool is_generically_etale(const Morphism& f);
/// All edge degrees coprime to char_p (true whenever char_p == 0).
bool is_tame(const Morphism& f, long long char_p);

Divisor pushforward_divisor(const Morphism& f, const Divisor& on_source);
Divisor pullback_divisor(const Morphism& f, const Divisor& on_target);
/// The fiber over x as a divisor, each preimage weighted by its local degree.
Divisor fiber_divisor(const Morphism& f, const PointLoc& x);

/// One partition of the local degree per tangent direction at the image
/// vertex; contracted directions are excluded.
std::vector<Partition> local_partitions(const Morphism& f, int source_vertex);

Morphism identity_morphism(const Graph& g);

/// Resolves all contractions of a harmonic morphism onto a metric tree:
/// attaches a copy of the target at every locally-constant vertex, then
/// splits each contracted edge over a fresh target branch. The result is
/// finite, harmonic, and agrees with the input away from the contracted set.
Morphism weak_resolution(const Morphism& f);

}  // namespace tropilift
