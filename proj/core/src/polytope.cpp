#include "eqtri/polytope.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqtri {

namespace {

int parse_int(const std::string& tok, int line) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw std::invalid_argument("line " + std::to_string(line) + ": '" + tok + "' is not an integer");
    return v;
}

// non-comment lines split into tokens, with their line numbers
std::vector<std::pair<int, std::vector<std::string>>> tokenize(std::istream& in) {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (!toks.empty()) out.emplace_back(no, std::move(toks));
    }
    return out;
}

}  // namespace

SimplePolytope parse_polytope(const std::vector<std::vector<int>>& incidence, int n, int m) {
    if (incidence.empty()) throw std::invalid_argument("polytope has no vertices");
    if (n < 1) throw std::invalid_argument("polytope dimension must be at least 1");
    if (m < n + 1) throw std::invalid_argument("an n-polytope has at least n+1 facets");
    SimplePolytope Q;
    Q.n = n;
    Q.m = m;
    std::set<std::vector<int>> seen;
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    for (std::size_t v = 0; v < incidence.size(); ++v) {
        auto f = incidence[v];
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("vertex " + std::to_string(v) + " lists a facet twice");
        for (int x : f) {
            if (x < 0 || x >= m) throw std::invalid_argument("vertex " + std::to_string(v) + ": facet index out of range");
            used[static_cast<std::size_t>(x)] = 1;
        }
        if (static_cast<int>(f.size()) != n)
            throw std::invalid_argument("not simple: vertex " + std::to_string(v) + " lies in " +
                                        std::to_string(f.size()) + " facets, expected " + std::to_string(n));
        if (!seen.insert(f).second)
            throw std::invalid_argument("vertex " + std::to_string(v) + " duplicates the facet set of another vertex");
        Q.vertex_facets.push_back(std::move(f));
    }
    for (int x = 0; x < m; ++x)
        if (!used[static_cast<std::size_t>(x)]) throw std::invalid_argument("facet " + std::to_string(x) + " contains no vertex");
    return Q;
}

SimplePolytope read_polytope(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) throw std::invalid_argument("empty polytope file");
    const auto& head = lines.front();
    if (head.second.size() != 2) throw std::invalid_argument("line " + std::to_string(head.first) + ": expected header 'n m'");
    int n = parse_int(head.second[0], head.first);
    int m = parse_int(head.second[1], head.first);
    std::vector<std::vector<int>> incidence;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<int> row;
        for (const auto& t : lines[i].second) row.push_back(parse_int(t, lines[i].first));
        incidence.push_back(std::move(row));
    }
    return parse_polytope(incidence, n, m);
}

std::vector<Face> face_lattice(const SimplePolytope& Q) {
    std::set<std::vector<int>> keys;
    for (const auto& vf : Q.vertex_facets) {
        const std::size_t k = vf.size();
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::vector<int> S;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) S.push_back(vf[i]);
            keys.insert(std::move(S));
        }
    }
    std::vector<Face> faces;
    for (const auto& S : keys) {
        Face f;
        f.facets = S;
        for (std::size_t v = 0; v < Q.vertex_facets.size(); ++v) {
            const auto& vf = Q.vertex_facets[v];
            if (std::includes(vf.begin(), vf.end(), S.begin(), S.end())) f.vertices.push_back(static_cast<int>(v));
        }
        // keep only facet sets that are the full set shared by their support
        std::vector<int> shared = Q.vertex_facets[static_cast<std::size_t>(f.vertices.front())];
        for (int v : f.vertices) {
            const auto& vf = Q.vertex_facets[static_cast<std::size_t>(v)];
            std::vector<int> tmp;
            std::set_intersection(shared.begin(), shared.end(), vf.begin(), vf.end(), std::back_inserter(tmp));
            shared = std::move(tmp);
        }
        if (shared == S) faces.push_back(std::move(f));
    }
    std::stable_sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) { return a.codim() < b.codim(); });
    return faces;
}

SimplePolytope simplex_polytope(int n) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    std::vector<std::vector<int>> inc;
    for (int i = 0; i <= n; ++i) {
        std::vector<int> row;
        for (int j = 0; j <= n; ++j)
            if (j != i) row.push_back(j);
        inc.push_back(std::move(row));
    }
    return parse_polytope(inc, n, n + 1);
}

bool validate_characteristic(const SimplePolytope& Q, const CharacteristicFunction& xi) {
    if (static_cast<int>(xi.size()) != Q.m) return false;
    for (int s : xi)
        if (s < 0 || s > Q.n) return false;
    for (const auto& vf : Q.vertex_facets) {
        std::vector<int> syms;
        for (int f : vf) syms.push_back(xi[static_cast<std::size_t>(f)]);
        std::sort(syms.begin(), syms.end());
        if (std::adjacent_find(syms.begin(), syms.end()) != syms.end()) return false;
    }
    return true;
}

CharacteristicFunction read_characteristic(std::istream& in) {
    CharacteristicFunction xi;
    for (const auto& [no, toks] : tokenize(in)) {
        for (auto t : toks) {
            if (!t.empty() && (t[0] == 'e' || t[0] == 'E')) t.erase(0, 1);
            int s = parse_int(t, no);
            if (s < 0) throw std::invalid_argument("line " + std::to_string(no) + ": negative symbol");
            xi.push_back(s);
        }
    }
    if (xi.empty()) throw std::invalid_argument("empty characteristic file");
    return xi;
}

}  // namespace eqtri
