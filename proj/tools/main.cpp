#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "eqtri/complex.hpp"
#include "eqtri/parallel.hpp"

using namespace eqtri;

namespace {

bool quiet = false;

void note(const std::string& msg) {
    if (!quiet) std::cerr << "eqtri: " << msg << "\n";
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f || !(f << text)) throw std::invalid_argument("cannot write '" + out + "'");
}

void apply_thread_env() {
    const char* env = std::getenv("TORIC_THREADS");
    if (!env || !*env) return;
    unsigned n = 0;
    std::string s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || p != s.data() + s.size() || n == 0) {
        note("ignoring TORIC_THREADS='" + s + "' (expected a positive integer)");
        return;
    }
    set_thread_limit(n);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant triangulations of tori, blocks and toric manifolds"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("-q,--quiet", quiet, "Suppress notes on stderr");

    std::string out;
    int max_n = -1;
    std::vector<std::string> target;
    auto* build = app.add_subcommand("build", "Build a complex: torus N | cube N | block SPEC | cpn N | toric POLY CHAR");
    build->add_option("target", target, "Target kind and its arguments")->required();
    build->add_option("-o,--out", out, "Output file (default stdout)");
    build->add_option("--max-n", max_n, "Override the dimension limit");

    std::string input;
    std::vector<std::string> checks;
    std::string verify_format = "text";
    bool allow_boundary = false;
    auto* verify = app.add_subcommand("verify", "Run verification checks on a complex file");
    verify->add_option("file", input, "Complex file")->required();
    verify->add_option("--checks", checks, "Comma-separated: complex,pure,pseudomanifold,equivariance,links,counts,all")
        ->delimiter(',');
    verify->add_option("--format", verify_format, "Report format")->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--allow-boundary", allow_boundary, "Accept ridges in a single facet");
    verify->add_option("-o,--out", out, "Report file (default stdout)");

    auto* homology = app.add_subcommand("homology", "Integer homology, Euler characteristic and f-vector");
    homology->add_option("file", input, "Complex file")->required();
    homology->add_option("-o,--out", out, "Output file (default stdout)");

    std::string export_format = "canonical";
    auto* exporter = app.add_subcommand("export", "Rewrite a complex file in another format");
    exporter->add_option("file", input, "Complex file")->required();
    exporter->add_option("--format", export_format, "Output format")
        ->check(CLI::IsMember({"canonical", "json", "facets-only"}));
    exporter->add_option("-o,--out", out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? cli::kOk : cli::kUsage;
    }

    try {
        apply_thread_env();
        if (*build) {
            const int limit = cli::default_max_n(target.front());
            if (max_n >= 0 && max_n > limit)
                note("--max-n " + std::to_string(max_n) + " is above the default " + std::to_string(limit) +
                     "; construction cost grows exponentially");
            auto f = cli::build(target, max_n);
            emit(cli::write_canonical(f), out);
            note("built " + std::to_string(f.complex.vertex_count()) + " vertices, " +
                 std::to_string(f.complex.facet_count()) + " facets");
            return cli::kOk;
        }
        auto f = cli::read_complex_file(input);
        if (*verify) {
            if (std::find(checks.begin(), checks.end(), "all") != checks.end()) checks = cli::kAllChecks;
            auto rep = cli::verify(f, checks, allow_boundary);
            emit(verify_format == "json" ? rep.json().dump(2) + "\n" : rep.text(), out);
            return rep.ok() ? cli::kOk : cli::kCheckFailed;
        }
        if (*homology) {
            emit(cli::homology_report(f.complex), out);
            return cli::kOk;
        }
        if (export_format == "json") emit(cli::write_json(f), out);
        else if (export_format == "facets-only") emit(cli::write_facets_only(f), out);
        else emit(cli::write_canonical(f), out);
        return cli::kOk;
    } catch (const ConstructionError& e) {
        std::cerr << "eqtri: construction failed: " << e.what() << "\n";
        return cli::kConstruction;
    } catch (const std::invalid_argument& e) {
        std::cerr << "eqtri: " << e.what() << "\n";
        return cli::kUsage;
    } catch (const std::exception& e) {
        std::cerr << "eqtri: " << e.what() << "\n";
        return cli::kConstruction;
    }
}
