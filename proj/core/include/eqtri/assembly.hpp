#pragma once

#include <string>
#include <vector>

#include "eqtri/block.hpp"
#include "eqtri/complex.hpp"
#include "eqtri/polytope.hpp"

namespace eqtri {

inline constexpr int kDefaultMaxToricDimension = 3;

// Cube of the cubical subdivision attached to a face: its corners are the
// centers of the faces containing it, keyed by facet subsets of the base.
struct CubicalCell {
    Face base;
    std::vector<std::vector<int>> corners;
};

std::vector<CubicalCell> cubical_subdivision(const SimplePolytope& Q);

// true when the cube of `inner` is a face of the cube of `outer`
bool is_cell_face(const CubicalCell& inner, const CubicalCell& outer);

// Coned factors for the symbols e_j (j >= 1) carried by the facets of sigma;
// when e_0 is among them, the factor with the least index not already coned
// is coned over the diagonal circle.
FactorSpec block_spec_for_face(const SimplePolytope& Q, const CharacteristicFunction& xi, const Face& sigma);

// Vertex of the assembled complex: a face (by facet set) and a residue
// vector in the quotient torus over it, of length dim of the face.
struct GlobalVertexLabel {
    std::vector<int> facets;
    std::vector<int> residue;

    std::string render() const;  // "τ:<facets>|t:<digits>"
    static GlobalVertexLabel parse(const std::string& label);
    bool operator==(const GlobalVertexLabel&) const = default;
};

// Coordinates of Z_3^n surviving in the quotient by the span of the symbols
// (1-based symbols, 0 for the diagonal).  `host` is the coordinate absorbed by
// the diagonal, or -1.
struct QuotientBasis {
    int n = 0;
    std::vector<int> kept;  // 0-based coordinates, increasing
    int host = -1;

    static QuotientBasis of(const std::vector<int>& symbols, int n);
    std::vector<int> reduce(const std::vector<int>& x) const;  // canonical residue
    std::vector<int> lift(const std::vector<int>& t) const;    // representative in Z_3^n
};

struct AssembledComplex {
    SimplicialComplex complex;
    SimplePolytope polytope;
    CharacteristicFunction xi;
    std::vector<Face> faces;
    // per face, the facets of its block in vertex ids of `complex`
    std::vector<std::vector<Simplex>> blocks;
    // per facet of `complex`, the index of the vertex face whose cell holds it
    std::vector<std::size_t> facet_cell;
    GroupAction action;
    // per face: 1 if the block equals the relabelled product block, else 0
    std::vector<int> matches_product_block;
};

// Builds the triangulation of M(Q, xi).  Validates block nesting, per-face
// vertex counts, equivariance, and agreement with the product blocks for every
// face without the diagonal symbol.  Failures throw ConstructionError.
AssembledComplex assemble_toric(const SimplePolytope& Q, const CharacteristicFunction& xi,
                                int max_n = kDefaultMaxToricDimension);

// Simplex with xi(F_i) = e_i.
AssembledComplex assemble_cpn(int n, int max_n = kDefaultMaxToricDimension);

// (4^{n+1} - 1) / 3, checked against sum_k C(n+1, k+1) 3^k.
unsigned long long vertex_count_formula(int n);

// Z_3^n action on complexes labelled by GlobalVertexLabel.
GroupAction global_action(const SimplicialComplex& K, const CharacteristicFunction& xi, int n);

// Label in the assembled complex of a vertex of the product block of sigma.
std::string block_to_global_label(const CharacteristicFunction& xi, const Face& sigma, const FactorSpec& spec,
                                  const std::vector<int>& block_vertex);

}  // namespace eqtri
