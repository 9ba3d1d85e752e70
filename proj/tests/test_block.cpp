#include <doctest.h>

#include "eqtri/block.hpp"
#include "eqtri/homology.hpp"
#include "eqtri/torus.hpp"

using namespace eqtri;

namespace {

std::vector<FactorSpec> all_specs(int n) {
    std::vector<FactorSpec> out;
    std::vector<std::string> words{""};
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& w : words)
            for (char c : {'s', 'c', 'z'}) next.push_back(w + c);
        words = std::move(next);
    }
    for (const auto& w : words)
        if (std::count(w.begin(), w.end(), 'z') <= 1) out.push_back(parse_factor_spec(w));
    return out;
}

SimplicialComplex torus_in_block(int n) { return relabel(torus_complex(n), torus_to_block_label); }

}  // namespace

TEST_SUITE("block") {

TEST_CASE("factor specs") {
    auto s = parse_factor_spec("zcs");
    CHECK(s.n() == 3);
    CHECK(s.coned_count() == 2);
    CHECK(s.has_zero());
    CHECK(to_string(s) == "zcs");
    CHECK_THROWS_AS(parse_factor_spec("zz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_factor_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_factor_spec("sx"), std::invalid_argument);
}

TEST_CASE("block labels") {
    CHECK(block_label({0, kApex, 2}) == "b:0c2");
    CHECK(parse_block_label("b:0c2") == std::vector<int>{0, kApex, 2});
    CHECK(block_label({2}) < block_label({kApex}));
    CHECK_THROWS_AS(parse_block_label("b:3"), std::invalid_argument);
    CHECK(torus_to_block_label("t:01") == "b:01");
    CHECK(swap_factors("b:0c", 0, 1) == "b:c0");
}

TEST_CASE("cone over the circle") {
    auto D = cone_circle();
    CHECK(f_vector(D) == std::vector<std::size_t>{4, 6, 3});
    CHECK(euler_characteristic(D) == 1);
    auto rim = boundary(D);
    CHECK(rim.vertex_count() == 3);
    CHECK(rim.facet_count() == 3);
    CHECK(is_equivariant(D, block_action(parse_factor_spec("c"))));
}

TEST_CASE("fundamental cells") {
    CHECK(fundamental_cell(parse_factor_spec("s")).facet_count() == 1);
    auto t = fundamental_cell(parse_factor_spec("c"));
    CHECK(t.facet_count() == 1);
    CHECK(t.vertex_count() == 3);
    auto prism = fundamental_cell(parse_factor_spec("sz"));
    CHECK(prism.facet_count() == 3);
    CHECK(prism.vertex_count() == 6);
    CHECK(prism.dimension() == 3);
}

TEST_CASE("small blocks") {
    auto C1 = build_block(parse_factor_spec("c"));
    CHECK(same_complex(C1, cone_circle()));
    CHECK(same_complex(build_block(parse_factor_spec("z")), C1));
    CHECK(homology(C1).betti == std::vector<std::size_t>{1, 0, 0});
    auto C12 = build_block(parse_factor_spec("cc"));
    CHECK(C12.vertex_count() == 16);
    CHECK(euler_characteristic(C12) == 1);
    CHECK(is_subcomplex(build_block(parse_factor_spec("cs")), C12));
    CHECK(is_subcomplex(build_block(parse_factor_spec("sc")), C12));
    CHECK(homology(build_block(parse_factor_spec("cs"))).betti == std::vector<std::size_t>{1, 1, 0, 0});
    CHECK_THROWS_AS(build_block(parse_factor_spec("cccc")), std::invalid_argument);
}

TEST_CASE("vertex counts") {
    CHECK(block_vertex_count(parse_factor_spec("sss")) == 27);
    CHECK(block_vertex_count(parse_factor_spec("css")) == 36);
    CHECK(block_vertex_count(parse_factor_spec("ccc")) == 64);
}

TEST_CASE("every block of dimension at most 2") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& spec : all_specs(n)) {
            CAPTURE(to_string(spec));
            auto B = build_block(spec);
            CHECK(B.vertex_count() == block_vertex_count(spec));
            CHECK(is_pure(B));
            CHECK(B.dimension() == n + spec.coned_count());
            CHECK(is_pseudomanifold(B, true));
            CHECK(euler_characteristic(B) == (spec.coned_count() == n ? 1 : 0));
            CHECK(is_equivariant(B, block_action(spec)));
            CHECK(is_subcomplex(torus_in_block(n), B));
            for (const auto& sub : uncone_specs(spec)) CHECK(is_subcomplex(build_block(sub), B));
            CHECK(validate_overlaps(spec) == static_cast<std::size_t>(n == 1 ? 3 : 36));
        }
}

TEST_CASE("diagonal cone can move between factors") {
    auto swapped = [](const SimplicialComplex& K, int a, int b) {
        return relabel(K, [&](const std::string& l) { return swap_factors(l, a, b); });
    };
    CHECK(same_complex(swapped(build_block(parse_factor_spec("zs")), 0, 1), build_block(parse_factor_spec("sz"))));
    CHECK(same_complex(swapped(build_block(parse_factor_spec("zsc")), 0, 1), build_block(parse_factor_spec("szc"))));
}

TEST_CASE("own cone sits inside the mixed block") {
    CHECK(is_subcomplex(build_block(parse_factor_spec("sc")), build_block(parse_factor_spec("zc"))));
    CHECK(is_subcomplex(build_block(parse_factor_spec("scs")), build_block(parse_factor_spec("zcs"))));
}

}  // TEST_SUITE
