#include <doctest.h>

#include <map>
#include <set>

#include "eqtri/assembly.hpp"
#include "eqtri/homology.hpp"
#include "eqtri/torus.hpp"
#include "oracles.hpp"

using namespace eqtri;

namespace {

SimplePolytope square() { return parse_polytope({{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 2, 4); }

SimplePolytope prism() {
    return parse_polytope({{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {0, 2, 4}}, 3, 5);
}

std::size_t pow3(int e) {
    std::size_t p = 1;
    while (e-- > 0) p *= 3;
    return p;
}

void check_face_counts(const AssembledComplex& A) {
    std::map<std::vector<int>, std::size_t> seen;
    for (const auto& l : A.complex.labels()) ++seen[GlobalVertexLabel::parse(l).facets];
    CHECK(seen.size() == A.faces.size());
    for (const auto& f : A.faces) CHECK(seen[f.facets] == pow3(A.polytope.n - f.codim()));
}

void check_nesting(const AssembledComplex& A) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < A.faces.size(); ++i) index[A.faces[i].facets] = i;
    const auto& labels = A.complex.labels();
    auto as_complex = [&](std::size_t f) { return SimplicialComplex::from_indexed(labels, A.blocks[f]); };
    for (std::size_t f = 0; f < A.faces.size(); ++f) {
        const auto& S = A.faces[f].facets;
        for (std::size_t drop = 0; drop < S.size(); ++drop) {
            auto sub = S;
            sub.erase(sub.begin() + static_cast<long>(drop));
            CHECK(is_subcomplex(as_complex(index.at(sub)), as_complex(f)));
        }
    }
}

bool spheres_only(const HomologyProfile& h, int n) {
    std::vector<std::size_t> want(static_cast<std::size_t>(2 * n + 1), 0);
    for (int i = 0; i <= n; ++i) want[static_cast<std::size_t>(2 * i)] = 1;
    for (const auto& t : h.torsion)
        if (!t.empty()) return false;
    return h.betti == want;
}

}  // namespace

TEST_SUITE("assembly") {

TEST_CASE("quotient bases") {
    auto plain = QuotientBasis::of({}, 3);
    CHECK(plain.kept == std::vector<int>{0, 1, 2});
    CHECK(plain.host == -1);
    auto own = QuotientBasis::of({2}, 3);
    CHECK(own.kept == std::vector<int>{0, 2});
    CHECK(own.reduce({1, 2, 0}) == std::vector<int>{1, 0});
    auto diag = QuotientBasis::of({0}, 3);
    CHECK(diag.host == 0);
    CHECK(diag.kept == std::vector<int>{1, 2});
    // (1,1,1) is killed
    CHECK(diag.reduce({1, 1, 1}) == std::vector<int>{0, 0});
    CHECK(diag.reduce({2, 0, 1}) == std::vector<int>{1, 2});
    auto mixed = QuotientBasis::of({0, 1}, 3);
    CHECK(mixed.host == 1);
    CHECK(mixed.kept == std::vector<int>{2});
    for (const auto& b : {plain, own, diag, mixed}) {
        std::vector<int> t(b.kept.size(), 2);
        CHECK(b.reduce(b.lift(t)) == t);
    }
    CHECK_THROWS_AS(QuotientBasis::of({0, 1}, 1), std::invalid_argument);
}

TEST_CASE("global labels") {
    GlobalVertexLabel g{{0, 2}, {1}};
    CHECK(g.render() == "\xCF\x84:0,2|t:1");
    CHECK(GlobalVertexLabel::parse(g.render()) == g);
    GlobalVertexLabel top{{}, {0, 2}};
    CHECK(GlobalVertexLabel::parse(top.render()) == top);
    for (const char* bad : {"t:01", "\xCF\x84:0,|t:1", "\xCF\x84:2,0|t:1", "\xCF\x84:0|t:3", "\xCF\x84:0"})
        CHECK_THROWS_AS(GlobalVertexLabel::parse(bad), std::invalid_argument);
}

TEST_CASE("block specs per face") {
    auto D = simplex_polytope(3);
    CharacteristicFunction xi{0, 1, 2, 3};
    auto spec = [&](std::vector<int> facets) { return to_string(block_spec_for_face(D, xi, Face{facets, {}})); };
    CHECK(spec({}) == "sss");
    CHECK(spec({2}) == "scs");
    CHECK(spec({0}) == "zss");
    CHECK(spec({0, 1}) == "czs");
    CHECK(spec({0, 1, 2}) == "ccz");
    CHECK(spec({1, 2, 3}) == "ccc");
}

TEST_CASE("cubical subdivision") {
    auto cells = cubical_subdivision(square());
    CHECK(cells.size() == 9);
    for (const auto& c : cells) CHECK(c.corners.size() == (1u << c.base.codim()));
    const auto& whole = cells.front();
    for (const auto& c : cells) CHECK(is_cell_face(whole, c));
    CHECK_FALSE(is_cell_face(cells.back(), whole));
}

TEST_CASE("vertex count formula") {
    CHECK(vertex_count_formula(1) == 5);
    CHECK(vertex_count_formula(2) == 21);
    CHECK(vertex_count_formula(3) == 85);
    for (int n = 1; n <= 12; ++n) CHECK(vertex_count_formula(n) == oracle::simplex_global_vertices(n));
    CHECK_THROWS_AS(vertex_count_formula(0), std::invalid_argument);
}

TEST_CASE("complex projective line") {
    auto A = assemble_cpn(1);
    CHECK(A.complex.vertex_count() == 5);
    CHECK(A.complex.facet_count() == 6);
    CHECK(f_vector(A.complex) == std::vector<std::size_t>{5, 9, 6});
    CHECK(euler_characteristic(A.complex) == 2);
    CHECK(homology(A.complex).betti == std::vector<std::size_t>{1, 0, 1});
    CHECK(is_pseudomanifold(A.complex));
}

TEST_CASE("complex projective plane") {
    auto A = assemble_cpn(2);
    const auto& K = A.complex;
    CHECK(K.vertex_count() == 21);
    CHECK(f_vector(K) == oracle::f_vector(K));
    CHECK(euler_characteristic(K) == 3);
    CHECK(is_pure(K));
    CHECK(K.dimension() == 4);
    CHECK(is_pseudomanifold(K));
    CHECK(spheres_only(homology(K), 2));
    CHECK(homology(K).betti == oracle::betti_mod_p(K, 1000003));
    CHECK(is_equivariant(K, A.action));
    check_face_counts(A);
    check_nesting(A);
    for (Vertex v = 0; v < K.vertex_count(); ++v) {
        auto L = link(K, v);
        CHECK(is_pseudomanifold(L));
        CHECK(homology(L).betti == std::vector<std::size_t>{1, 0, 0, 1});
    }
}

TEST_CASE("complex projective space") {
    auto A = assemble_cpn(3);
    CHECK(A.complex.vertex_count() == 85);
    CHECK(euler_characteristic(A.complex) == 4);
    CHECK(is_pseudomanifold(A.complex));
    check_face_counts(A);
    CHECK(A.facet_cell.size() == A.complex.facet_count());
}

TEST_CASE("orbits divide the group order") {
    for (int n = 1; n <= 3; ++n) {
        auto A = assemble_cpn(n);
        std::vector<char> done(A.complex.vertex_count(), 0);
        for (Vertex v = 0; v < A.complex.vertex_count(); ++v) {
            if (done[v]) continue;
            std::set<std::uint32_t> orbit;
            for (const auto& e : all_exponents(n)) orbit.insert(group_element(A.action, e)[v]);
            for (auto w : orbit) done[w] = 1;
            CHECK(pow3(n) % orbit.size() == 0);
        }
    }
}

TEST_CASE("blocks without the diagonal symbol are product blocks") {
    for (int n = 1; n <= 3; ++n) {
        auto A = assemble_cpn(n);
        CharacteristicFunction xi(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) xi[static_cast<std::size_t>(i)] = i;
        for (std::size_t f = 0; f < A.faces.size(); ++f) {
            auto spec = block_spec_for_face(A.polytope, xi, A.faces[f]);
            CAPTURE(to_string(spec));
            if (!spec.has_zero()) CHECK(A.matches_product_block[f] == 1);
            // over the diagonal the mapping cylinder is larger than the product
            if (spec.has_zero() && n >= 2) {
                CHECK(A.matches_product_block[f] == 0);
                CHECK(A.blocks[f].size() > build_block(spec, n).facet_count());
            }
        }
    }
}

TEST_CASE("block vertices map into the complex") {
    auto A = assemble_cpn(2);
    CharacteristicFunction xi{0, 1, 2};
    const Face& edge12 = A.faces.back();  // facets {1,2}: the vertex v_0
    REQUIRE(edge12.facets == std::vector<int>{1, 2});
    auto spec = block_spec_for_face(A.polytope, xi, edge12);
    CHECK(block_to_global_label(xi, edge12, spec, {kApex, kApex}) == "\xCF\x84:1,2|t:");
    CHECK(block_to_global_label(xi, edge12, spec, {2, 1}) == "\xCF\x84:|t:21");
    CHECK(block_to_global_label(xi, edge12, spec, {kApex, 1}) == "\xCF\x84:1|t:1");
}

TEST_CASE("product of spheres and other toric manifolds") {
    auto A = assemble_toric(square(), {1, 2, 1, 2});
    CHECK(A.complex.vertex_count() == 25);
    CHECK(homology(A.complex).betti == std::vector<std::size_t>{1, 0, 2, 0, 1});
    check_face_counts(A);
    check_nesting(A);
    auto H = assemble_toric(square(), {1, 2, 0, 2});
    CHECK(homology(H.complex).betti == std::vector<std::size_t>{1, 0, 2, 0, 1});
    CHECK(is_equivariant(H.complex, H.action));
    auto P = assemble_toric(prism(), {1, 2, 3, 0, 0});
    CHECK(P.complex.vertex_count() == 27 + 5 * 9 + 9 * 3 + 6);
    // euler characteristic counts the vertices of the polytope
    CHECK(euler_characteristic(P.complex) == 6);
    CHECK(homology(P.complex).betti == std::vector<std::size_t>{1, 0, 2, 0, 2, 0, 1});
}

TEST_CASE("simplex with the standard characteristic is the projective plane") {
    auto A = assemble_toric(simplex_polytope(2), {0, 1, 2});
    auto B = assemble_cpn(2);
    CHECK(A.complex.labels() == B.complex.labels());
    CHECK(A.complex.facets() == B.complex.facets());
}

TEST_CASE("assembly rejects bad input") {
    CHECK_THROWS_AS(assemble_toric(square(), {1, 1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(assemble_toric(square(), {1, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(assemble_cpn(0), std::invalid_argument);
    CHECK_THROWS_AS(assemble_cpn(4), std::invalid_argument);
}

TEST_CASE("assembly is deterministic") {
    auto A = assemble_cpn(2);
    auto B = assemble_cpn(2);
    CHECK(A.complex.labels() == B.complex.labels());
    CHECK(A.complex.facets() == B.complex.facets());
    CHECK(A.blocks == B.blocks);
}

}  // TEST_SUITE
