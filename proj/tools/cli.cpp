#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "eqtri/assembly.hpp"
#include "eqtri/block.hpp"
#include "eqtri/homology.hpp"
#include "eqtri/parallel.hpp"
#include "eqtri/torus.hpp"

namespace eqtri::cli {

namespace {

const std::string kCharacteristicTag = "# characteristic";

long long parse_count(const std::string& tok, const std::string& what, int line = 0) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || v < 0) {
        std::string where = line ? "line " + std::to_string(line) + ": " : "";
        throw std::invalid_argument(where + "bad " + what + " '" + tok + "'");
    }
    return v;
}

std::string join_symbols(const CharacteristicFunction& xi) {
    std::string s;
    for (std::size_t i = 0; i < xi.size(); ++i) s += (i ? " " : "") + std::to_string(xi[i]);
    return s;
}

std::size_t ipow(std::size_t b, int e) {
    std::size_t p = 1;
    for (int i = 0; i < e; ++i) p *= b;
    return p;
}

}  // namespace

ComplexFile read_complex_file(std::istream& in) {
    ComplexFile out;
    std::string line;
    int no = 0;
    long long dim = -2, nv = -1, nf = -1;
    std::vector<std::string> labels;
    std::vector<Simplex> facets;
    while (std::getline(in, line)) {
        ++no;
        if (line.rfind(kCharacteristicTag, 0) == 0) {
            if (out.characteristic) throw std::invalid_argument("line " + std::to_string(no) + ": second characteristic");
            std::istringstream ls(line.substr(kCharacteristicTag.size()));
            CharacteristicFunction xi;
            for (std::string t; ls >> t;) xi.push_back(static_cast<int>(parse_count(t, "symbol", no)));
            if (xi.empty()) throw std::invalid_argument("line " + std::to_string(no) + ": empty characteristic");
            out.characteristic = std::move(xi);
            continue;
        }
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        auto fail = [&](const std::string& msg) { return std::invalid_argument("line " + std::to_string(no) + ": " + msg); };
        if (nv < 0) {
            if (tok.size() != 6 || tok[0] != "dim" || tok[2] != "vertices" || tok[4] != "facets")
                throw fail("expected header 'dim <d> vertices <v> facets <f>'");
            dim = tok[1] == "-1" ? -1 : parse_count(tok[1], "dimension", no);
            nv = parse_count(tok[3], "vertex count", no);
            nf = parse_count(tok[5], "facet count", no);
            continue;
        }
        if (tok[0] == "v") {
            if (!facets.empty()) throw fail("vertex line after facet lines");
            if (tok.size() != 3) throw fail("expected 'v <index> <label>'");
            if (parse_count(tok[1], "vertex index", no) != static_cast<long long>(labels.size()))
                throw fail("vertex index " + tok[1] + " out of sequence");
            if (static_cast<long long>(labels.size()) >= nv) throw fail("more vertices than declared");
            labels.push_back(tok[2]);
        } else if (tok[0] == "s") {
            if (tok.size() < 2) throw fail("empty facet");
            Simplex s;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                auto v = parse_count(tok[i], "vertex index", no);
                if (v >= static_cast<long long>(labels.size())) throw fail("facet references undeclared vertex " + tok[i]);
                s.push_back(static_cast<Vertex>(v));
            }
            auto sorted = s;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw fail("repeated vertex in facet");
            if (static_cast<long long>(facets.size()) >= nf) throw fail("more facets than declared");
            facets.push_back(std::move(s));
        } else {
            throw fail("unknown record '" + tok[0] + "'");
        }
    }
    if (nv < 0) throw std::invalid_argument("missing header");
    if (static_cast<long long>(labels.size()) != nv)
        throw std::invalid_argument("declared " + std::to_string(nv) + " vertices, found " + std::to_string(labels.size()));
    if (static_cast<long long>(facets.size()) != nf)
        throw std::invalid_argument("declared " + std::to_string(nf) + " facets, found " + std::to_string(facets.size()));
    if (facets.empty()) throw std::invalid_argument("complex has no facets");

    // lexicographic vertex order
    std::vector<Vertex> order(labels.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return labels[a] < labels[b]; });
    std::vector<Vertex> rank(labels.size());
    std::vector<std::string> sorted(labels.size());
    for (Vertex i = 0; i < order.size(); ++i) {
        rank[order[i]] = i;
        sorted[i] = labels[order[i]];
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate vertex label");
    std::vector<char> used(labels.size(), 0);
    for (auto& s : facets)
        for (auto& v : s) {
            used[v] = 1;
            v = rank[v];
        }
    if (auto unused = std::count(used.begin(), used.end(), 0))
        out.notes.push_back(std::to_string(unused) + " declared vertices lie in no facet");
    const std::size_t raw = facets.size();
    out.complex = SimplicialComplex::from_indexed(std::move(sorted), std::move(facets));
    if (out.complex.facet_count() != raw)
        out.notes.push_back(std::to_string(raw - out.complex.facet_count()) + " facet lines are repeated or non-maximal");
    if (out.complex.dimension() != dim)
        out.notes.push_back("declared dimension " + std::to_string(dim) + ", actual " +
                            std::to_string(out.complex.dimension()));
    return out;
}

ComplexFile read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return read_complex_file(in);
}

std::string write_canonical(const ComplexFile& f) {
    const auto& K = f.complex;
    std::string out;
    if (f.characteristic) out += kCharacteristicTag + " " + join_symbols(*f.characteristic) + "\n";
    out += "dim " + std::to_string(K.dimension()) + " vertices " + std::to_string(K.vertex_count()) + " facets " +
           std::to_string(K.facet_count()) + "\n";
    for (Vertex v = 0; v < K.vertex_count(); ++v) {
        const auto& l = K.label(v);
        if (l.empty() || l.find_first_of(" \t\r\n#") != std::string::npos)
            throw std::invalid_argument("label '" + l + "' cannot be written");
        out += "v " + std::to_string(v) + " " + l + "\n";
    }
    for (const auto& s : K.facets()) {
        out += "s";
        for (Vertex v : s) out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

std::string write_json(const ComplexFile& f) {
    nlohmann::json j;
    j["dim"] = f.complex.dimension();
    j["vertices"] = f.complex.labels();
    j["facets"] = f.complex.facets();
    if (f.characteristic) j["characteristic"] = *f.characteristic;
    return j.dump() + "\n";
}

std::string write_facets_only(const ComplexFile& f) {
    std::string out;
    for (const auto& s : f.complex.facets()) {
        for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + f.complex.label(s[i]);
        out += "\n";
    }
    return out;
}

LabelSchema detect_schema(const SimplicialComplex& K) {
    auto all = [&](auto&& pred) { return std::all_of(K.labels().begin(), K.labels().end(), pred); };
    auto prefixed = [&](const std::string& p) { return all([&](const std::string& l) { return l.rfind(p, 0) == 0; }); };
    if (K.vertex_count() == 0) return LabelSchema::plain;
    if (prefixed("t:")) return LabelSchema::torus;
    if (prefixed("g:")) return LabelSchema::grid;
    if (prefixed("b:")) return LabelSchema::block;
    if (prefixed("\xCF\x84:")) return LabelSchema::global;
    return LabelSchema::plain;
}

bool VerificationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string VerificationReport::text() const {
    std::string out;
    for (const auto& c : checks) out += (c.pass ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
    out += ok() ? "overall: PASS\n" : "overall: FAIL\n";
    return out;
}

nlohmann::json VerificationReport::json() const {
    nlohmann::json j;
    j["ok"] = ok();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"witness", c.witness}});
    return j;
}

namespace {

std::vector<std::string> labels_of(const SimplicialComplex& K, const Simplex& s) {
    std::vector<std::string> out;
    for (Vertex v : s) out.push_back(K.label(v));
    return out;
}

CheckResult check_complex(const ComplexFile& f) {
    CheckResult r;
    r.name = "complex";
    r.pass = f.notes.empty();
    r.witness["vertices"] = f.complex.vertex_count();
    r.witness["facets"] = f.complex.facet_count();
    r.witness["notes"] = f.notes;
    r.detail = std::to_string(f.complex.vertex_count()) + " vertices, " + std::to_string(f.complex.facet_count()) +
               " facets";
    for (const auto& n : f.notes) r.detail += "; " + n;
    return r;
}

CheckResult check_pure(const SimplicialComplex& K) {
    CheckResult r;
    r.name = "pure";
    r.pass = is_pure(K);
    r.witness["dimension"] = K.dimension();
    if (r.pass) {
        r.detail = "dimension " + std::to_string(K.dimension());
    } else {
        auto it = std::min_element(K.facets().begin(), K.facets().end(),
                                   [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
        r.witness["facet"] = labels_of(K, *it);
        r.detail = "facet " + format_simplex(K, *it) + " has dimension " + std::to_string(it->size() - 1);
    }
    return r;
}

CheckResult check_pseudo(const SimplicialComplex& K, bool allow_boundary) {
    CheckResult r;
    r.name = "pseudomanifold";
    auto c = check_pseudomanifold(K, allow_boundary);
    r.pass = c.ok;
    r.witness["boundary_ridges"] = c.boundary_ridges;
    if (c.ok) {
        r.detail = c.boundary_ridges ? std::to_string(c.boundary_ridges) + " boundary ridges" : "closed";
    } else {
        r.detail = c.reason;
        if (!c.witness.empty()) {
            r.witness["simplex"] = labels_of(K, c.witness);
            r.detail += " at " + format_simplex(K, c.witness);
        }
    }
    return r;
}

std::optional<GroupAction> action_for(const ComplexFile& f, std::string& why) {
    const auto& K = f.complex;
    switch (detect_schema(K)) {
        case LabelSchema::torus: {
            auto n = parse_digits(K.label(0), 't').size();
            for (const auto& l : K.labels())
                if (parse_digits(l, 't').size() != n) {
                    why = "torus labels of different lengths";
                    return std::nullopt;
                }
            if (K.vertex_count() != ipow(3, static_cast<int>(n))) {
                why = "torus labels do not cover Z_3^" + std::to_string(n);
                return std::nullopt;
            }
            return z3n_action(static_cast<int>(n));
        }
        case LabelSchema::block: {
            const auto n = parse_block_label(K.label(0)).size();
            FactorSpec spec;
            spec.kinds.assign(n, FactorKind::circle);
            for (const auto& l : K.labels()) {
                auto v = parse_block_label(l);
                if (v.size() != n) {
                    why = "block labels of different lengths";
                    return std::nullopt;
                }
                for (std::size_t j = 0; j < n; ++j)
                    if (v[j] == kApex) spec.kinds[j] = FactorKind::coned_own;
            }
            return block_action(spec);
        }
        case LabelSchema::global: {
            if (!f.characteristic) {
                why = "file carries no characteristic";
                return std::nullopt;
            }
            auto g = GlobalVertexLabel::parse(K.label(0));
            int n = static_cast<int>(g.facets.size() + g.residue.size());
            return global_action(K, *f.characteristic, n);
        }
        default: why = "labels carry no group action"; return std::nullopt;
    }
}

CheckResult check_equivariance(const ComplexFile& f) {
    CheckResult r;
    r.name = "equivariance";
    std::string why;
    std::optional<GroupAction> A;
    try {
        A = action_for(f, why);
    } catch (const std::invalid_argument& e) {
        why = e.what();
    }
    if (!A) {
        r.detail = why;
        return r;
    }
    auto elements = all_exponents(A->rank);
    r.pass = true;
    std::size_t tested = 0;
    for (const auto& e : elements) {
        ++tested;
        if (!preserves_facets(f.complex, *A, group_element(*A, e))) {
            r.pass = false;
            r.witness["element"] = e;
            break;
        }
    }
    r.witness["elements_tested"] = tested;
    r.detail = std::to_string(tested) + " group elements tested";
    if (!r.pass) r.detail += ", element " + r.witness["element"].dump() + " moves a facet off the complex";
    return r;
}

bool sphere_homology(const HomologyProfile& h, int d) {
    if (d < 0) return false;
    std::vector<std::size_t> want(static_cast<std::size_t>(d) + 1, 0);
    want[0] += 1;
    want[static_cast<std::size_t>(d)] += 1;
    bool torsion_free = std::all_of(h.torsion.begin(), h.torsion.end(), [](const auto& t) { return t.empty(); });
    return torsion_free && h.betti == want;
}

bool ball_homology(const HomologyProfile& h) {
    bool torsion_free = std::all_of(h.torsion.begin(), h.torsion.end(), [](const auto& t) { return t.empty(); });
    return torsion_free && !h.betti.empty() && h.betti[0] == 1 &&
           std::all_of(h.betti.begin() + 1, h.betti.end(), [](std::size_t b) { return b == 0; });
}

CheckResult check_links(const SimplicialComplex& K, bool allow_boundary) {
    CheckResult r;
    r.name = "links";
    const int d = K.dimension();
    std::mutex m;
    std::optional<Vertex> bad;
    std::string reason;
    parallel_for(K.vertex_count(), [&](std::size_t i) {
        const auto v = static_cast<Vertex>(i);
        auto L = link(K, v);
        std::string why;
        if (L.empty() || L.dimension() != d - 1) {
            why = "link has dimension " + std::to_string(L.dimension());
        } else {
            auto pm = check_pseudomanifold(L, allow_boundary);
            if (!pm.ok) {
                why = "link is not a pseudomanifold (" + pm.reason + ")";
            } else {
                auto h = homology(L);
                bool fine = pm.boundary_ridges ? ball_homology(h) : sphere_homology(h, d - 1);
                if (!fine) why = "link homology " + format_profile(h);
            }
        }
        if (!why.empty()) {
            std::lock_guard lock(m);
            if (!bad || v < *bad) {
                bad = v;
                reason = why;
            }
        }
    });
    r.pass = !bad;
    r.witness["vertices_checked"] = K.vertex_count();
    if (bad) {
        r.witness["vertex"] = K.label(*bad);
        r.detail = "vertex " + K.label(*bad) + ": " + reason;
    } else {
        r.detail = std::to_string(K.vertex_count()) + " links are " +
                   (allow_boundary ? "homology spheres or balls" : "homology spheres");
    }
    return r;
}

CheckResult check_counts(const ComplexFile& f) {
    CheckResult r;
    r.name = "counts";
    const auto& K = f.complex;
    const std::size_t V = K.vertex_count();
    r.witness["vertices"] = V;
    auto expect = [&](std::size_t want, const std::string& what) {
        r.pass = V == want;
        r.witness["expected"] = want;
        r.detail = std::to_string(V) + " vertices, " + what + " " + std::to_string(want);
    };
    try {
        switch (detect_schema(K)) {
            case LabelSchema::torus:
                expect(ipow(3, static_cast<int>(parse_digits(K.label(0), 't').size())), "3^n =");
                break;
            case LabelSchema::grid:
                expect(ipow(4, static_cast<int>(parse_digits(K.label(0), 'g').size())), "4^n =");
                break;
            case LabelSchema::block: {
                auto n = parse_block_label(K.label(0)).size();
                FactorSpec spec;
                spec.kinds.assign(n, FactorKind::circle);
                for (const auto& l : K.labels()) {
                    auto v = parse_block_label(l);
                    for (std::size_t j = 0; j < n && j < v.size(); ++j)
                        if (v[j] == kApex) spec.kinds[j] = FactorKind::coned_own;
                }
                expect(block_vertex_count(spec), "product of factor counts =");
                break;
            }
            case LabelSchema::global: {
                std::map<std::vector<int>, std::size_t> per_face;
                int n = -1;
                for (const auto& l : K.labels()) {
                    auto g = GlobalVertexLabel::parse(l);
                    int m = static_cast<int>(g.facets.size() + g.residue.size());
                    if (n >= 0 && m != n) throw std::invalid_argument("labels disagree on the dimension");
                    n = m;
                    ++per_face[g.facets];
                }
                r.pass = true;
                nlohmann::json faces = nlohmann::json::object();
                std::string first_bad;
                for (const auto& [S, c] : per_face) {
                    const auto want = ipow(3, n - static_cast<int>(S.size()));
                    const std::string key = GlobalVertexLabel{S, {}}.render();
                    faces[key] = c;
                    if (c != want && r.pass) {
                        r.pass = false;
                        first_bad = "face " + key + " carries " + std::to_string(c) + ", expected " +
                                    std::to_string(want);
                    }
                }
                r.witness["per_face"] = faces;
                r.detail = std::to_string(V) + " vertices over " + std::to_string(per_face.size()) + " faces";
                if (f.characteristic && static_cast<int>(f.characteristic->size()) == n + 1) {
                    const auto want = vertex_count_formula(n);
                    r.witness["expected"] = want;
                    r.detail += ", (4^(n+1)-1)/3 = " + std::to_string(want);
                    if (V != want) {
                        r.pass = false;
                        if (first_bad.empty()) first_bad = "total differs from (4^(n+1)-1)/3";
                    }
                }
                if (!first_bad.empty()) r.detail += "; " + first_bad;
                break;
            }
            default: r.detail = "labels carry no counting schema"; break;
        }
    } catch (const std::invalid_argument& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

}  // namespace

VerificationReport verify(const ComplexFile& f, std::vector<std::string> checks, bool allow_boundary) {
    const auto schema = detect_schema(f.complex);
    if (checks.empty()) {
        checks = {"complex", "pure", "pseudomanifold", "links"};
        if (schema == LabelSchema::torus || schema == LabelSchema::block ||
            (schema == LabelSchema::global && f.characteristic))
            checks.push_back("equivariance");
        if (schema != LabelSchema::plain) checks.push_back("counts");
    }
    VerificationReport rep;
    for (const auto& c : checks) {
        if (c == "complex") rep.checks.push_back(check_complex(f));
        else if (c == "pure") rep.checks.push_back(check_pure(f.complex));
        else if (c == "pseudomanifold") rep.checks.push_back(check_pseudo(f.complex, allow_boundary));
        else if (c == "equivariance") rep.checks.push_back(check_equivariance(f));
        else if (c == "links") rep.checks.push_back(check_links(f.complex, allow_boundary));
        else if (c == "counts") rep.checks.push_back(check_counts(f));
        else throw std::invalid_argument("unknown check '" + c + "'");
    }
    return rep;
}

int default_max_n(const std::string& kind) {
    if (kind == "torus" || kind == "cube") return kDefaultMaxDimension;
    if (kind == "block") return kDefaultMaxBlockDimension;
    return kDefaultMaxToricDimension;
}

ComplexFile build(const std::vector<std::string>& target, int max_n) {
    if (target.empty()) throw std::invalid_argument("missing build target");
    const auto& kind = target[0];
    auto need = [&](std::size_t k) {
        if (target.size() != k + 1)
            throw std::invalid_argument("'" + kind + "' takes " + std::to_string(k) + " argument" + (k == 1 ? "" : "s"));
    };
    auto dim = [&] {
        need(1);
        auto n = parse_count(target[1], "dimension");
        if (n > 1000) throw std::invalid_argument("dimension " + target[1] + " out of range");
        return static_cast<int>(n);
    };
    if (max_n < 0) max_n = default_max_n(kind);
    ComplexFile out;
    if (kind == "torus") {
        out.complex = torus_complex(dim(), max_n);
    } else if (kind == "cube") {
        out.complex = triangulate_cube(dim(), max_n);
    } else if (kind == "block") {
        need(1);
        out.complex = build_block(parse_factor_spec(target[1]), max_n);
    } else if (kind == "cpn") {
        auto A = assemble_cpn(dim(), max_n);
        out.complex = std::move(A.complex);
        out.characteristic = std::move(A.xi);
    } else if (kind == "toric") {
        need(2);
        std::ifstream pin(target[1]);
        if (!pin) throw std::invalid_argument("cannot open '" + target[1] + "'");
        std::ifstream cin(target[2]);
        if (!cin) throw std::invalid_argument("cannot open '" + target[2] + "'");
        auto Q = read_polytope(pin);
        auto xi = read_characteristic(cin);
        auto A = assemble_toric(Q, xi, max_n);
        out.complex = std::move(A.complex);
        out.characteristic = std::move(A.xi);
    } else {
        throw std::invalid_argument("unknown build target '" + kind + "' (torus, cube, block, cpn, toric)");
    }
    return out;
}

std::string homology_report(const SimplicialComplex& K) {
    auto h = homology(K);
    std::ostringstream out;
    out << "dim  betti  torsion\n";
    for (std::size_t i = 0; i < h.betti.size(); ++i) {
        out << i << std::string(5 - std::min<std::size_t>(4, std::to_string(i).size()), ' ') << h.betti[i];
        out << std::string(7 - std::min<std::size_t>(6, std::to_string(h.betti[i]).size()), ' ');
        if (h.torsion[i].empty()) {
            out << "-";
        } else {
            for (std::size_t k = 0; k < h.torsion[i].size(); ++k) out << (k ? " " : "") << "Z/" << h.torsion[i][k];
        }
        out << "\n";
    }
    out << "homology " << format_profile(h) << "\n";
    out << "euler " << euler_characteristic(K) << "\n";
    out << "f-vector";
    for (auto c : f_vector(K)) out << " " << c;
    out << "\n";
    return out.str();
}

}  // namespace eqtri::cli
