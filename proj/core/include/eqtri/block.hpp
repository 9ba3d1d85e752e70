#pragma once

#include <string>
#include <vector>

#include "eqtri/complex.hpp"

namespace eqtri {

// Per-factor kind of a block.  A coned factor replaces its circle by the disk
// with boundary that circle; the zero-coned factor is the disk over the
// diagonal circle (at most one per block).
enum class FactorKind { circle, coned_own, coned_zero };

struct FactorSpec {
    std::vector<FactorKind> kinds;

    int n() const { return static_cast<int>(kinds.size()); }
    int coned_count() const;
    bool has_zero() const;
    bool operator==(const FactorSpec&) const = default;
};

// One character per factor: 's' circle, 'c' coned, 'z' coned over the
// diagonal circle.  Throws std::invalid_argument on bad input.
FactorSpec parse_factor_spec(const std::string& text);
std::string to_string(const FactorSpec& spec);
void validate(const FactorSpec& spec);

// Block vertices: one entry per factor, a residue 0..2 or kApex at the cone
// point.  Rendered as "b:<chars>" with 'c' for the apex, so the apex sorts
// after every residue.
inline constexpr int kApex = 3;
inline constexpr int kDefaultMaxBlockDimension = 3;

std::string block_label(const std::vector<int>& v);
std::vector<int> parse_block_label(const std::string& label);

// Disk over the 3-vertex circle: boundary b:0, b:1, b:2 and apex b:c.
SimplicialComplex cone_circle();

// Staircase product of the factor cells: the edge {0,1} for a circle factor,
// the triangle {0,1,apex} for a coned one.
SimplicialComplex fundamental_cell(const FactorSpec& spec);

// Checks that any two translates of the fundamental cell induce the same
// triangulation on their common face.  Returns the number of pairs checked;
// throws ConstructionError naming (g, h, face) on a mismatch.
std::size_t validate_overlaps(const FactorSpec& spec);

// Union of the 3^n translates of the fundamental cell, after the overlap check.
SimplicialComplex build_block(const FactorSpec& spec, int max_n = kDefaultMaxBlockDimension);

std::size_t block_vertex_count(const FactorSpec& spec);

// Z_3^n rotating each factor's residue and fixing the apex.
GroupAction block_action(const FactorSpec& spec);

// Specs obtained by replacing any nonempty set of coned factors by circles.
std::vector<FactorSpec> uncone_specs(const FactorSpec& spec);

// "t:<digits>" to "b:<digits>"
std::string torus_to_block_label(const std::string& torus_label);
// exchange the entries of factors a and b (0-based) of a block label
std::string swap_factors(const std::string& block_label, int a, int b);

}  // namespace eqtri
