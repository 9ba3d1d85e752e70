#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace eqtri {

using Vertex = std::uint32_t;
using Simplex = std::vector<Vertex>;  // strictly increasing vertex ids

// Raised when a construction step produces something that is not a valid
// complex (bad gluing, non-simplicial identification, ...).
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

using SimplexSet = std::unordered_set<Simplex, SimplexHash>;

// Abstract simplicial complex stored by its facets.  Vertex ids index into
// the label table; the id order is the global vertex order of the complex.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // labels[i] names vertex i.  Facets are normalized: sorted, deduplicated,
    // and any facet contained in another one is dropped.  Unused labels are
    // removed (order of the survivors is preserved).
    static SimplicialComplex from_indexed(std::vector<std::string> labels, std::vector<Simplex> facets);

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const { return labels_.at(v); }
    std::optional<Vertex> find(std::string_view label) const;

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t facet_count() const { return facets_.size(); }
    const std::vector<Simplex>& facets() const { return facets_; }
    // facets containing v, as indices into facets()
    const std::vector<std::uint32_t>& facets_of(Vertex v) const { return incidence_.at(v); }

    int dimension() const { return dim_; }
    bool empty() const { return facets_.empty(); }

    // all faces of dimension d, sorted
    std::vector<Simplex> faces(int d) const;
    bool contains(const Simplex& s) const;

    // facets written with labels, in facet order
    std::vector<std::vector<std::string>> labeled_facets() const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<Simplex> facets_;
    std::vector<std::vector<std::uint32_t>> incidence_;
    int dim_ = -1;
};

// Vertices are plain integers, ordered numerically.
SimplicialComplex make_complex(const std::vector<std::vector<long long>>& facets);
// Vertices are label strings, ordered lexicographically.
SimplicialComplex make_complex(const std::vector<std::vector<std::string>>& facets);

std::vector<std::size_t> f_vector(const SimplicialComplex& K);
long long euler_characteristic(const SimplicialComplex& K);

SimplicialComplex star(const SimplicialComplex& K, Vertex v);
SimplicialComplex link(const SimplicialComplex& K, Vertex v);
SimplicialComplex star(const SimplicialComplex& K, std::string_view label);
SimplicialComplex link(const SimplicialComplex& K, std::string_view label);

// Apex is appended last in the vertex order.
SimplicialComplex cone(const SimplicialComplex& K, const std::string& apex);

using LabelJoin = std::function<std::string(const std::string&, const std::string&)>;

// Staircase triangulation of |K| x |L|: each product of facets F x G is cut
// into the maximal chains of the grid poset F x G.  Product vertices are
// ordered lexicographically by (id in K, id in L).
SimplicialComplex staircase_product(const SimplicialComplex& K, const SimplicialComplex& L,
                                    const LabelJoin& join = {});

// Image of K under a vertex relabeling.  Collapsed simplices drop dimension
// unless strict is set, in which case a collision inside a simplex throws.
// Output vertices are ordered lexicographically by label.
SimplicialComplex relabel(const SimplicialComplex& K, const std::function<std::string(const std::string&)>& f,
                          bool strict = false);

// Full subcomplex on the vertices selected by keep.
SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::function<bool(Vertex)>& keep);

// Facet-by-facet comparison through labels.
bool same_complex(const SimplicialComplex& K, const SimplicialComplex& L);
bool is_subcomplex(const SimplicialComplex& K, const SimplicialComplex& L);

bool is_pure(const SimplicialComplex& K);

struct PseudomanifoldCheck {
    bool ok = false;
    std::string reason;
    Simplex witness;  // offending ridge or facet
    std::size_t boundary_ridges = 0;
};
PseudomanifoldCheck check_pseudomanifold(const SimplicialComplex& K, bool allow_boundary = false);
bool is_pseudomanifold(const SimplicialComplex& K, bool allow_boundary = false);

// Codimension-one faces that lie in exactly one facet.
SimplicialComplex boundary(const SimplicialComplex& K);

// Finite group (Z_3)^rank acting by permutations of a labelled point set.
struct GroupAction {
    int rank = 0;
    std::vector<std::string> points;
    std::vector<std::vector<std::uint32_t>> generators;
};

// Validates that each generator is a permutation of order dividing 3 and that
// generators commute.
GroupAction make_action(std::vector<std::string> points, std::vector<std::vector<std::uint32_t>> generators);

// permutation of the element prod g_i^{e_i}
std::vector<std::uint32_t> group_element(const GroupAction& A, const std::vector<int>& exponents);
std::vector<std::vector<int>> all_exponents(int rank);

// Every generator maps every facet of K onto a facet of K.  Throws if some
// vertex of K is not a point of the action.
bool is_equivariant(const SimplicialComplex& K, const GroupAction& A);
// Same, for an explicit permutation of the action's points.
bool preserves_facets(const SimplicialComplex& K, const GroupAction& A, const std::vector<std::uint32_t>& perm);

struct SimplicialMap {
    SimplicialComplex source;
    SimplicialComplex target;
    std::vector<Vertex> image;  // image[v] for each source vertex
};

// image of every facet of the source is a face of the target
bool is_simplicial(const SimplicialMap& f);

std::string format_simplex(const SimplicialComplex& K, const Simplex& s);

}  // namespace eqtri
