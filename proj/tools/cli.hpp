#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqtri/complex.hpp"
#include "eqtri/polytope.hpp"

namespace eqtri::cli {

// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kConstruction = 3 };

// On-disk complex.  The characteristic, if any, is carried in a leading
// "# characteristic <symbols>" comment.
struct ComplexFile {
    SimplicialComplex complex;
    std::optional<CharacteristicFunction> characteristic;
    // normalizations applied on read (absorbed facets, unused vertices, ...)
    std::vector<std::string> notes;
};

// Vertex labels are put in lexicographic order on read, so any valid file
// reads back to the canonical vertex order.  Throws std::invalid_argument
// with the offending line number.
ComplexFile read_complex_file(std::istream& in);
ComplexFile read_complex_file(const std::string& path);

std::string write_canonical(const ComplexFile& f);
std::string write_json(const ComplexFile& f);
std::string write_facets_only(const ComplexFile& f);

enum class LabelSchema { plain, grid, torus, block, global };
LabelSchema detect_schema(const SimplicialComplex& K);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    nlohmann::json witness = nlohmann::json::object();
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool ok() const;
    std::string text() const;
    nlohmann::json json() const;
};

inline const std::vector<std::string> kAllChecks = {"complex", "pure", "pseudomanifold", "equivariance", "links",
                                                    "counts"};

// Empty `checks` runs every check that applies to the label schema.
VerificationReport verify(const ComplexFile& f, std::vector<std::string> checks, bool allow_boundary = false);

// target: {"torus", n} | {"cube", n} | {"block", spec} | {"cpn", n} |
// {"toric", polytope-file, characteristic-file}.  max_n < 0 picks the
// per-target default.
ComplexFile build(const std::vector<std::string>& target, int max_n = -1);
int default_max_n(const std::string& kind);

// Betti/torsion table, Euler characteristic and f-vector.
std::string homology_report(const SimplicialComplex& K);

}  // namespace eqtri::cli
