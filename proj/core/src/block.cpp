#include "eqtri/block.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace eqtri {

int FactorSpec::coned_count() const {
    return static_cast<int>(std::count_if(kinds.begin(), kinds.end(), [](FactorKind k) { return k != FactorKind::circle; }));
}

bool FactorSpec::has_zero() const {
    return std::find(kinds.begin(), kinds.end(), FactorKind::coned_zero) != kinds.end();
}

FactorSpec parse_factor_spec(const std::string& text) {
    FactorSpec spec;
    for (char c : text) {
        switch (c) {
            case 's': spec.kinds.push_back(FactorKind::circle); break;
            case 'c': spec.kinds.push_back(FactorKind::coned_own); break;
            case 'z': spec.kinds.push_back(FactorKind::coned_zero); break;
            default: throw std::invalid_argument(std::string("bad factor kind '") + c + "' (expected s, c or z)");
        }
    }
    validate(spec);
    return spec;
}

std::string to_string(const FactorSpec& spec) {
    std::string s;
    for (auto k : spec.kinds) s.push_back(k == FactorKind::circle ? 's' : k == FactorKind::coned_own ? 'c' : 'z');
    return s;
}

void validate(const FactorSpec& spec) {
    if (spec.kinds.empty()) throw std::invalid_argument("block needs at least one factor");
    if (std::count(spec.kinds.begin(), spec.kinds.end(), FactorKind::coned_zero) > 1)
        throw std::invalid_argument("at most one factor may be coned over the diagonal circle");
}

std::string block_label(const std::vector<int>& v) {
    std::string s = "b:";
    for (int x : v) s.push_back(x == kApex ? 'c' : static_cast<char>('0' + x));
    return s;
}

std::vector<int> parse_block_label(const std::string& label) {
    if (label.size() < 2 || label.compare(0, 2, "b:") != 0)
        throw std::invalid_argument("label '" + label + "' is not a block label");
    std::vector<int> v;
    for (std::size_t i = 2; i < label.size(); ++i) {
        char c = label[i];
        if (c == 'c') v.push_back(kApex);
        else if (c >= '0' && c <= '2') v.push_back(c - '0');
        else throw std::invalid_argument("bad block label '" + label + "'");
    }
    return v;
}

SimplicialComplex cone_circle() {
    auto circle = make_complex(std::vector<std::vector<std::string>>{{"b:0", "b:1"}, {"b:1", "b:2"}, {"b:0", "b:2"}});
    return cone(circle, "b:c");
}

SimplicialComplex fundamental_cell(const FactorSpec& spec) {
    validate(spec);
    auto factor = [](FactorKind k) {
        if (k == FactorKind::circle) return make_complex(std::vector<std::vector<std::string>>{{"0", "1"}});
        return make_complex(std::vector<std::vector<std::string>>{{"0", "1", "c"}});
    };
    auto cell = factor(spec.kinds.front());
    for (std::size_t j = 1; j < spec.kinds.size(); ++j)
        cell = staircase_product(cell, factor(spec.kinds[j]), [](const std::string& a, const std::string& b) { return a + b; });
    return relabel(cell, [](const std::string& l) { return "b:" + l; });
}

namespace {

using Code = std::uint32_t;  // base-4 digits, first factor most significant

Code encode(const std::vector<int>& v) {
    Code c = 0;
    for (int x : v) c = c * 4 + static_cast<Code>(x);
    return c;
}

std::vector<int> decode(Code c, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
        v[static_cast<std::size_t>(j)] = static_cast<int>(c % 4);
        c /= 4;
    }
    return v;
}

std::vector<std::vector<int>> group_elements(int n) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& e : out)
            for (int c = 0; c < 3; ++c) {
                auto f = e;
                f.push_back(c);
                next.push_back(std::move(f));
            }
        out = std::move(next);
    }
    return out;
}

using CodeSimplex = std::vector<Code>;

std::vector<CodeSimplex> translate(const std::vector<CodeSimplex>& cell, const std::vector<int>& g, int n) {
    std::vector<CodeSimplex> out;
    out.reserve(cell.size());
    for (const auto& s : cell) {
        CodeSimplex t;
        for (Code c : s) {
            auto v = decode(c, n);
            for (int j = 0; j < n; ++j) {
                auto& x = v[static_cast<std::size_t>(j)];
                if (x != kApex) x = (x + g[static_cast<std::size_t>(j)]) % 3;
            }
            t.push_back(encode(v));
        }
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
    }
    return out;
}

// maximal faces of the triangulation that lie inside the vertex set common
std::vector<CodeSimplex> restrict_to(const std::vector<CodeSimplex>& facets, const std::vector<Code>& common) {
    std::vector<CodeSimplex> out;
    for (const auto& f : facets) {
        CodeSimplex s;
        std::set_intersection(f.begin(), f.end(), common.begin(), common.end(), std::back_inserter(s));
        if (!s.empty()) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::vector<CodeSimplex> maximal;
    for (const auto& s : out) {
        bool inside = std::any_of(out.begin(), out.end(), [&](const CodeSimplex& t) {
            return t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
        });
        if (!inside) maximal.push_back(s);
    }
    return maximal;
}

std::vector<Code> vertices_of(const std::vector<CodeSimplex>& facets) {
    std::vector<Code> v;
    for (const auto& f : facets) v.insert(v.end(), f.begin(), f.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string format_element(const std::vector<int>& g) {
    std::string s = "(";
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
    return s + ")";
}

std::string format_codes(const CodeSimplex& s, int n) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + block_label(decode(s[i], n));
    return out + "}";
}

struct Translates {
    std::vector<std::vector<int>> elements;
    std::vector<std::vector<CodeSimplex>> cells;
};

Translates all_translates(const FactorSpec& spec) {
    const int n = spec.n();
    auto cell = fundamental_cell(spec);
    std::vector<CodeSimplex> base;
    for (const auto& f : cell.facets()) {
        CodeSimplex s;
        for (Vertex v : f) s.push_back(encode(parse_block_label(cell.label(v))));
        std::sort(s.begin(), s.end());
        base.push_back(std::move(s));
    }
    Translates t;
    t.elements = group_elements(n);
    for (const auto& g : t.elements) t.cells.push_back(translate(base, g, n));
    return t;
}

std::size_t check_translates(const Translates& t, int n) {
    std::vector<std::vector<Code>> verts;
    for (const auto& c : t.cells) verts.push_back(vertices_of(c));
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < t.cells.size(); ++a) {
        for (std::size_t b = a + 1; b < t.cells.size(); ++b) {
            std::vector<Code> common;
            std::set_intersection(verts[a].begin(), verts[a].end(), verts[b].begin(), verts[b].end(),
                                  std::back_inserter(common));
            ++pairs;
            if (common.empty()) continue;
            auto ra = restrict_to(t.cells[a], common);
            auto rb = restrict_to(t.cells[b], common);
            if (ra != rb) {
                std::vector<CodeSimplex> diff;
                std::set_symmetric_difference(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(diff));
                throw ConstructionError("translates " + format_element(t.elements[a]) + " and " +
                                        format_element(t.elements[b]) + " disagree on face " +
                                        format_codes(diff.front(), n));
            }
        }
    }
    return pairs;
}

}  // namespace

std::size_t validate_overlaps(const FactorSpec& spec) {
    validate(spec);
    return check_translates(all_translates(spec), spec.n());
}

SimplicialComplex build_block(const FactorSpec& spec, int max_n) {
    validate(spec);
    const int n = spec.n();
    if (n > max_n)
        throw std::invalid_argument("block dimension " + std::to_string(n) + " exceeds the limit " + std::to_string(max_n));
    auto t = all_translates(spec);
    check_translates(t, n);

    Code total = 1;
    for (int j = 0; j < n; ++j) total *= 4;
    std::vector<std::string> labels;
    labels.reserve(total);
    for (Code c = 0; c < total; ++c) labels.push_back(block_label(decode(c, n)));
    std::vector<Simplex> facets;
    for (const auto& cell : t.cells)
        for (const auto& s : cell) facets.emplace_back(s.begin(), s.end());
    return SimplicialComplex::from_indexed(std::move(labels), std::move(facets));
}

std::size_t block_vertex_count(const FactorSpec& spec) {
    validate(spec);
    std::size_t c = 1;
    for (auto k : spec.kinds) c *= k == FactorKind::circle ? 3 : 4;
    return c;
}

GroupAction block_action(const FactorSpec& spec) {
    validate(spec);
    const int n = spec.n();
    std::vector<std::vector<int>> pts{{}};
    for (auto k : spec.kinds) {
        std::vector<std::vector<int>> next;
        for (const auto& p : pts)
            for (int x = 0; x < (k == FactorKind::circle ? 3 : 4); ++x) {
                auto q = p;
                q.push_back(x);
                next.push_back(std::move(q));
            }
        pts = std::move(next);
    }
    std::vector<std::string> points;
    std::map<std::vector<int>, std::uint32_t> index;
    for (std::uint32_t i = 0; i < pts.size(); ++i) {
        points.push_back(block_label(pts[i]));
        index[pts[i]] = i;
    }
    std::vector<std::vector<std::uint32_t>> gens;
    for (int j = 0; j < n; ++j) {
        std::vector<std::uint32_t> g(pts.size());
        for (std::uint32_t i = 0; i < pts.size(); ++i) {
            auto q = pts[i];
            auto& x = q[static_cast<std::size_t>(j)];
            if (x != kApex) x = (x + 1) % 3;
            g[i] = index.at(q);
        }
        gens.push_back(std::move(g));
    }
    return make_action(std::move(points), std::move(gens));
}

std::vector<FactorSpec> uncone_specs(const FactorSpec& spec) {
    std::vector<int> coned;
    for (int j = 0; j < spec.n(); ++j)
        if (spec.kinds[static_cast<std::size_t>(j)] != FactorKind::circle) coned.push_back(j);
    std::vector<FactorSpec> out;
    for (unsigned mask = 1; mask < (1u << coned.size()); ++mask) {
        FactorSpec s = spec;
        for (std::size_t i = 0; i < coned.size(); ++i)
            if (mask & (1u << i)) s.kinds[static_cast<std::size_t>(coned[i])] = FactorKind::circle;
        out.push_back(std::move(s));
    }
    return out;
}

std::string torus_to_block_label(const std::string& torus_label) {
    if (torus_label.size() < 2 || torus_label.compare(0, 2, "t:") != 0)
        throw std::invalid_argument("label '" + torus_label + "' is not a torus label");
    return "b:" + torus_label.substr(2);
}

std::string swap_factors(const std::string& label, int a, int b) {
    auto v = parse_block_label(label);
    std::swap(v.at(static_cast<std::size_t>(a)), v.at(static_cast<std::size_t>(b)));
    return block_label(v);
}

}  // namespace eqtri
