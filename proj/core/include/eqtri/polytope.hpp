#pragma once

#include <istream>
#include <string>
#include <vector>

namespace eqtri {

// Simple polytope given by its vertex-facet incidence.
struct SimplePolytope {
    int n = 0;  // dimension
    int m = 0;  // number of facets
    std::vector<std::vector<int>> vertex_facets;  // sorted facet indices per vertex

    std::size_t vertex_count() const { return vertex_facets.size(); }
};

// A face is keyed by the facets containing it; the empty set is the polytope.
struct Face {
    std::vector<int> facets;
    std::vector<int> vertices;

    int codim() const { return static_cast<int>(facets.size()); }
    bool operator==(const Face&) const = default;
};

// Throws std::invalid_argument when a vertex is not in exactly n facets, two
// vertices share a facet set, an index is out of range or a facet has no vertex.
SimplePolytope parse_polytope(const std::vector<std::vector<int>>& incidence, int n, int m);

// Header "n m", then one line of facet indices per vertex; '#' starts a comment.
SimplePolytope read_polytope(std::istream& in);

// All faces, ordered by codimension and then by facet set.
std::vector<Face> face_lattice(const SimplePolytope& Q);

// Vertices v_0..v_n, facets F_0..F_n, v_i in F_j iff i != j.
SimplePolytope simplex_polytope(int n);

// Symbol j in 0..n per facet; symbol 0 stands for e_1 + ... + e_n.
using CharacteristicFunction = std::vector<int>;

bool validate_characteristic(const SimplePolytope& Q, const CharacteristicFunction& xi);

// Whitespace separated symbols, one per facet, written "3" or "e3".
CharacteristicFunction read_characteristic(std::istream& in);

}  // namespace eqtri
