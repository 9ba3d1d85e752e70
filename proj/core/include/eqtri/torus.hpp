#pragma once

#include <string>
#include <vector>

#include "eqtri/complex.hpp"

namespace eqtri {

// Coordinates in thirds: grid vertices of the cube carry values 0..3,
// torus vertices carry residues 0..2.  Labels are "g:<digits>" and
// "t:<digits>" respectively, one digit per coordinate.
using Coords = std::vector<int>;

std::string grid_label(const Coords& x);
std::string torus_label(const Coords& t);
Coords parse_digits(const std::string& label, char prefix);

inline constexpr int kDefaultMaxDimension = 6;

// Unit cube on its 2^n corners, cut into the n! monotone chains.
SimplicialComplex freudenthal_cube(int n);

// Cube subdivided into 3^n subcubes of side 1/3, each with the translated
// chain triangulation.  4^n vertices.
SimplicialComplex triangulate_cube(int n, int max_n = kDefaultMaxDimension);

// Quotient of the subdivided cube by reduction mod 3 (strict relabeling).
SimplicialComplex torus_complex(int n, int max_n = kDefaultMaxDimension);

// Generator i adds 1 mod 3 to coordinate i, on all of Z_3^n.
GroupAction z3n_action(int n);

// Inclusion of the k-torus on the selected coordinates (1-based, increasing);
// other coordinates are set to 0.
SimplicialMap subtorus_inclusion(int n, const std::vector<int>& coords);
// Projection onto the selected coordinates.
SimplicialMap subtorus_projection(int n, const std::vector<int>& coords);

struct DiagonalTorus {
    SimplicialComplex complex;
    int diagonal_factor = 0;  // factor carried by the diagonal circle
};

// Torus triangulation read in the basis where factor k is the diagonal
// circle.  The same simplices as torus_complex(n); the construction through
// the translated pieces of the parallelepiped is run and compared, and a
// mismatch throws ConstructionError.
DiagonalTorus torus_k_complex(int n, int k, int max_n = kDefaultMaxDimension);

// Facets of the subdivided parallelepiped spanned by the diagonal and the
// coordinate directions other than k, assembled from translated pieces of
// the subdivided cube.  Grid coordinates range over 0..6.
std::vector<std::vector<Coords>> parallelepiped_pieces(int n, int k);

}  // namespace eqtri
