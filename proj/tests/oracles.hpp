#pragma once

// Brute-force reference computations.  None of these call into the library
// beyond reading a complex's facets and labels.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "eqtri/complex.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<long long>>;

// Invariant factors d_k = g_k / g_{k-1}, g_k the gcd of all k x k minors.
std::vector<long long> minor_gcd_factors(const Matrix& M);

// Every face of K, by enumerating subsets of every facet.
std::set<std::vector<std::string>> all_faces(const eqtri::SimplicialComplex& K);
std::vector<std::size_t> f_vector(const eqtri::SimplicialComplex& K);

// Betti numbers over F_p from the subset-enumerated faces.
std::vector<std::size_t> betti_mod_p(const eqtri::SimplicialComplex& K, std::uint32_t p);

std::uint64_t binomial(unsigned n, unsigned k);

// sum over nonempty proper subsets S of {0..n}: 3^(n - |S|), plus 3^n for
// the whole simplex
std::uint64_t simplex_global_vertices(int n);

Matrix random_matrix(std::mt19937& rng, int max_dim, int bound);

}  // namespace oracle
