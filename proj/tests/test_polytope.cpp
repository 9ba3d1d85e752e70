#include <doctest.h>

#include <sstream>

#include "eqtri/polytope.hpp"
#include "oracles.hpp"

using namespace eqtri;

namespace {

SimplePolytope square() { return parse_polytope({{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 2, 4); }

// triangular prism: facets 0,1,2 sides, 3 bottom, 4 top
SimplePolytope prism() {
    return parse_polytope({{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {0, 2, 4}}, 3, 5);
}

}  // namespace

TEST_SUITE("polytope") {

TEST_CASE("parse and validate") {
    auto Q = square();
    CHECK(Q.vertex_count() == 4);
    CHECK_THROWS_AS(parse_polytope({{0, 1}, {1}}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_polytope({{0, 1}, {1, 2}, {2, 0}, {0, 1}}, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_polytope({{0, 5}, {1, 2}, {2, 0}}, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_polytope({{0, 0}, {1, 2}, {2, 0}}, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_polytope({{0, 1}, {1, 2}, {2, 0}}, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_polytope({}, 2, 3), std::invalid_argument);
}

TEST_CASE("read from text") {
    std::istringstream in("# square\n2 4\n0 1\n1 2 # corner\n2 3\n3 0\n");
    auto Q = read_polytope(in);
    CHECK(Q.n == 2);
    CHECK(Q.m == 4);
    CHECK(Q.vertex_facets[3] == std::vector<int>{0, 3});
    std::istringstream bad("2 4\n0 x\n");
    CHECK_THROWS_AS(read_polytope(bad), std::invalid_argument);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_polytope(empty), std::invalid_argument);
}

TEST_CASE("face lattice of the simplex") {
    for (int n = 1; n <= 4; ++n) {
        auto faces = face_lattice(simplex_polytope(n));
        // every proper subset of the n+1 facets
        CHECK(faces.size() == (1u << (n + 1)) - 1);
        for (std::size_t i = 1; i < faces.size(); ++i) CHECK(faces[i - 1].codim() <= faces[i].codim());
        CHECK(faces.front().facets.empty());
        CHECK(faces.front().vertices.size() == static_cast<std::size_t>(n + 1));
    }
}

TEST_CASE("face lattice of the square and the prism") {
    auto F = face_lattice(square());
    CHECK(F.size() == 9);
    // opposite edges do not meet
    for (const auto& f : F) CHECK(f.facets != std::vector<int>{0, 2});
    auto P = face_lattice(prism());
    // 1 + 5 facets + 9 edges + 6 vertices
    CHECK(P.size() == 21);
    for (const auto& f : P) {
        CHECK(static_cast<int>(f.vertices.size()) >= 1);
        if (f.codim() == 3) CHECK(f.vertices.size() == 1);
    }
}

TEST_CASE("characteristic functions") {
    auto D = simplex_polytope(2);
    CHECK(validate_characteristic(D, {0, 1, 2}));
    CHECK_FALSE(validate_characteristic(D, {0, 1, 1}));
    CHECK_FALSE(validate_characteristic(D, {0, 1}));
    CHECK_FALSE(validate_characteristic(D, {0, 1, 3}));
    CHECK(validate_characteristic(square(), {1, 2, 1, 2}));
    CHECK_FALSE(validate_characteristic(square(), {1, 1, 2, 2}));
    std::istringstream in("e1 e2\n1 2\n");
    CHECK(read_characteristic(in) == CharacteristicFunction{1, 2, 1, 2});
    std::istringstream bad("e-1\n");
    CHECK_THROWS_AS(read_characteristic(bad), std::invalid_argument);
}

}  // TEST_SUITE
