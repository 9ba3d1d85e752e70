#include "eqtri/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace eqtri {

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Vertex v : s) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

namespace {

void check_simplex(Simplex& s, std::size_t nlabels) {
    if (s.empty()) throw std::invalid_argument("empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("duplicate vertex within a simplex");
    if (s.back() >= nlabels) throw std::invalid_argument("vertex id out of range");
}

// drop facets contained in a strictly larger one
std::vector<Simplex> absorb(std::vector<Simplex> facets, std::size_t nverts) {
    bool uniform = std::all_of(facets.begin(), facets.end(),
                               [&](const Simplex& s) { return s.size() == facets.front().size(); });
    if (facets.empty() || uniform) return facets;
    std::stable_sort(facets.begin(), facets.end(),
                     [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
    std::vector<std::vector<std::uint32_t>> inc(nverts);
    std::vector<Simplex> kept;
    for (auto& s : facets) {
        Vertex best = s.front();
        for (Vertex v : s)
            if (inc[v].size() < inc[best].size()) best = v;
        bool inside = false;
        for (auto fi : inc[best]) {
            const auto& f = kept[fi];
            if (f.size() > s.size() && std::includes(f.begin(), f.end(), s.begin(), s.end())) {
                inside = true;
                break;
            }
        }
        if (inside) continue;
        for (Vertex v : s) inc[v].push_back(static_cast<std::uint32_t>(kept.size()));
        kept.push_back(std::move(s));
    }
    return kept;
}

template <class Fn>
void for_each_subset(const Simplex& f, std::size_t k, Fn&& fn) {
    if (k > f.size()) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    Simplex sub(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) sub[i] = f[idx[i]];
        fn(sub);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == f.size() - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_indexed(std::vector<std::string> labels, std::vector<Simplex> facets) {
    for (auto& s : facets) check_simplex(s, labels.size());
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    facets = absorb(std::move(facets), labels.size());

    std::vector<char> used(labels.size(), 0);
    for (const auto& s : facets)
        for (Vertex v : s) used[v] = 1;
    std::vector<Vertex> remap(labels.size(), 0);
    SimplicialComplex K;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!used[i]) continue;
        remap[i] = static_cast<Vertex>(K.labels_.size());
        K.labels_.push_back(std::move(labels[i]));
    }
    for (auto& s : facets)
        for (auto& v : s) v = remap[v];
    std::sort(facets.begin(), facets.end());
    K.facets_ = std::move(facets);

    K.index_.reserve(K.labels_.size());
    for (std::size_t i = 0; i < K.labels_.size(); ++i)
        if (!K.index_.emplace(K.labels_[i], static_cast<Vertex>(i)).second)
            throw std::invalid_argument("duplicate vertex label '" + K.labels_[i] + "'");
    K.incidence_.assign(K.labels_.size(), {});
    for (std::size_t fi = 0; fi < K.facets_.size(); ++fi) {
        const auto& s = K.facets_[fi];
        K.dim_ = std::max(K.dim_, static_cast<int>(s.size()) - 1);
        for (Vertex v : s) K.incidence_[v].push_back(static_cast<std::uint32_t>(fi));
    }
    return K;
}

std::optional<Vertex> SimplicialComplex::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Simplex> SimplicialComplex::faces(int d) const {
    std::vector<Simplex> out;
    if (d < 0) return out;
    for (const auto& f : facets_)
        for_each_subset(f, static_cast<std::size_t>(d) + 1, [&](const Simplex& s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    if (s.empty()) return true;
    Vertex best = s.front();
    for (Vertex v : s) {
        if (v >= incidence_.size()) return false;
        if (incidence_[v].size() < incidence_[best].size()) best = v;
    }
    for (auto fi : incidence_[best]) {
        const auto& f = facets_[fi];
        if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
    }
    return false;
}

std::vector<std::vector<std::string>> SimplicialComplex::labeled_facets() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(facets_.size());
    for (const auto& f : facets_) {
        std::vector<std::string> row;
        for (Vertex v : f) row.push_back(labels_[v]);
        out.push_back(std::move(row));
    }
    return out;
}

SimplicialComplex make_complex(const std::vector<std::vector<long long>>& facets) {
    if (facets.empty()) throw std::invalid_argument("empty facet list");
    std::vector<long long> verts;
    for (const auto& f : facets) verts.insert(verts.end(), f.begin(), f.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<std::string> labels;
    for (auto v : verts) labels.push_back(std::to_string(v));
    std::vector<Simplex> simplices;
    for (const auto& f : facets) {
        Simplex s;
        for (auto v : f)
            s.push_back(static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()));
        simplices.push_back(std::move(s));
    }
    return SimplicialComplex::from_indexed(std::move(labels), std::move(simplices));
}

SimplicialComplex make_complex(const std::vector<std::vector<std::string>>& facets) {
    if (facets.empty()) throw std::invalid_argument("empty facet list");
    std::vector<std::string> labels;
    for (const auto& f : facets) labels.insert(labels.end(), f.begin(), f.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<Simplex> simplices;
    for (const auto& f : facets) {
        Simplex s;
        for (const auto& v : f)
            s.push_back(static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()));
        simplices.push_back(std::move(s));
    }
    return SimplicialComplex::from_indexed(std::move(labels), std::move(simplices));
}

std::vector<std::size_t> f_vector(const SimplicialComplex& K) {
    std::vector<std::size_t> f;
    for (int d = 0; d <= K.dimension(); ++d) f.push_back(K.faces(d).size());
    return f;
}

long long euler_characteristic(const SimplicialComplex& K) {
    long long chi = 0, sign = 1;
    for (auto c : f_vector(K)) {
        chi += sign * static_cast<long long>(c);
        sign = -sign;
    }
    return chi;
}

namespace {

Vertex require_vertex(const SimplicialComplex& K, std::string_view label) {
    auto v = K.find(label);
    if (!v) throw std::invalid_argument("unknown vertex '" + std::string(label) + "'");
    return *v;
}

}  // namespace

SimplicialComplex star(const SimplicialComplex& K, Vertex v) {
    if (v >= K.vertex_count()) throw std::invalid_argument("unknown vertex");
    std::vector<Simplex> out;
    for (auto fi : K.facets_of(v)) out.push_back(K.facets()[fi]);
    return SimplicialComplex::from_indexed(K.labels(), std::move(out));
}

SimplicialComplex link(const SimplicialComplex& K, Vertex v) {
    if (v >= K.vertex_count()) throw std::invalid_argument("unknown vertex");
    std::vector<Simplex> out;
    for (auto fi : K.facets_of(v)) {
        Simplex s;
        for (Vertex w : K.facets()[fi])
            if (w != v) s.push_back(w);
        if (!s.empty()) out.push_back(std::move(s));
    }
    return SimplicialComplex::from_indexed(K.labels(), std::move(out));
}

SimplicialComplex star(const SimplicialComplex& K, std::string_view label) { return star(K, require_vertex(K, label)); }
SimplicialComplex link(const SimplicialComplex& K, std::string_view label) { return link(K, require_vertex(K, label)); }

SimplicialComplex cone(const SimplicialComplex& K, const std::string& apex) {
    if (K.find(apex)) throw std::invalid_argument("cone apex '" + apex + "' is already a vertex");
    auto labels = K.labels();
    auto a = static_cast<Vertex>(labels.size());
    labels.push_back(apex);
    std::vector<Simplex> out;
    for (auto f : K.facets()) {
        f.push_back(a);
        out.push_back(std::move(f));
    }
    if (out.empty()) out.push_back({a});
    return SimplicialComplex::from_indexed(std::move(labels), std::move(out));
}

SimplicialComplex staircase_product(const SimplicialComplex& K, const SimplicialComplex& L, const LabelJoin& join) {
    const std::size_t nl = L.vertex_count();
    std::vector<std::string> labels;
    labels.reserve(K.vertex_count() * nl);
    for (const auto& a : K.labels())
        for (const auto& b : L.labels()) labels.push_back(join ? join(a, b) : "(" + a + "," + b + ")");

    std::vector<Simplex> out;
    for (const auto& F : K.facets()) {
        for (const auto& G : L.facets()) {
            const std::size_t p = F.size() - 1, q = G.size() - 1;
            // steps[i] set: step i advances in F
            std::vector<bool> steps(p + q, false);
            std::fill(steps.begin(), steps.begin() + static_cast<long>(p), true);
            std::sort(steps.begin(), steps.end());
            do {
                Simplex s;
                std::size_t i = 0, j = 0;
                s.push_back(static_cast<Vertex>(F[i] * nl + G[j]));
                for (bool inF : steps) {
                    if (inF) ++i; else ++j;
                    s.push_back(static_cast<Vertex>(F[i] * nl + G[j]));
                }
                out.push_back(std::move(s));
            } while (std::next_permutation(steps.begin(), steps.end()));
        }
    }
    return SimplicialComplex::from_indexed(std::move(labels), std::move(out));
}

SimplicialComplex relabel(const SimplicialComplex& K, const std::function<std::string(const std::string&)>& f,
                          bool strict) {
    std::vector<std::string> image;
    image.reserve(K.vertex_count());
    for (const auto& l : K.labels()) image.push_back(f(l));
    std::vector<std::string> targets = image;
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    std::vector<Vertex> map(image.size());
    for (std::size_t i = 0; i < image.size(); ++i)
        map[i] = static_cast<Vertex>(std::lower_bound(targets.begin(), targets.end(), image[i]) - targets.begin());

    std::vector<Simplex> out;
    out.reserve(K.facet_count());
    for (const auto& s : K.facets()) {
        Simplex t;
        for (Vertex v : s) t.push_back(map[v]);
        std::sort(t.begin(), t.end());
        auto dup = std::adjacent_find(t.begin(), t.end());
        if (dup != t.end()) {
            if (strict)
                throw ConstructionError("identification is not simplicial: " + format_simplex(K, s) +
                                        " has two vertices mapped to '" + targets[*dup] + "'");
            t.erase(std::unique(t.begin(), t.end()), t.end());
        }
        out.push_back(std::move(t));
    }
    return SimplicialComplex::from_indexed(std::move(targets), std::move(out));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::function<bool(Vertex)>& keep) {
    std::vector<Simplex> out;
    for (const auto& f : K.facets()) {
        Simplex s;
        for (Vertex v : f)
            if (keep(v)) s.push_back(v);
        if (!s.empty()) out.push_back(std::move(s));
    }
    return SimplicialComplex::from_indexed(K.labels(), std::move(out));
}

namespace {

// facets of K rewritten in L's vertex ids; nullopt if some label is missing
std::optional<std::vector<Simplex>> translate(const SimplicialComplex& K, const SimplicialComplex& L) {
    std::vector<Vertex> map(K.vertex_count());
    for (Vertex v = 0; v < K.vertex_count(); ++v) {
        auto w = L.find(K.label(v));
        if (!w) return std::nullopt;
        map[v] = *w;
    }
    std::vector<Simplex> out;
    out.reserve(K.facet_count());
    for (const auto& f : K.facets()) {
        Simplex s;
        for (Vertex v : f) s.push_back(map[v]);
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

bool same_complex(const SimplicialComplex& K, const SimplicialComplex& L) {
    if (K.vertex_count() != L.vertex_count() || K.facet_count() != L.facet_count()) return false;
    auto t = translate(K, L);
    if (!t) return false;
    std::sort(t->begin(), t->end());
    return *t == L.facets();
}

bool is_subcomplex(const SimplicialComplex& K, const SimplicialComplex& L) {
    auto t = translate(K, L);
    if (!t) return false;
    return std::all_of(t->begin(), t->end(), [&](const Simplex& s) { return L.contains(s); });
}

bool is_pure(const SimplicialComplex& K) {
    return std::all_of(K.facets().begin(), K.facets().end(),
                       [&](const Simplex& s) { return static_cast<int>(s.size()) == K.dimension() + 1; });
}

namespace {

struct DisjointSets {
    std::vector<std::uint32_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t root(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void join(std::uint32_t a, std::uint32_t b) { parent[root(a)] = root(b); }
};

}  // namespace

PseudomanifoldCheck check_pseudomanifold(const SimplicialComplex& K, bool allow_boundary) {
    PseudomanifoldCheck r;
    if (K.empty()) {
        r.reason = "empty complex";
        return r;
    }
    for (const auto& f : K.facets()) {
        if (static_cast<int>(f.size()) != K.dimension() + 1) {
            r.reason = "not pure";
            r.witness = f;
            return r;
        }
    }
    struct RidgeUse {
        std::uint32_t count = 0;
        std::uint32_t first = 0;
    };
    std::unordered_map<Simplex, RidgeUse, SimplexHash> ridges;
    ridges.reserve(K.facet_count() * (K.dimension() + 1));
    DisjointSets comps(K.facet_count());
    for (std::uint32_t fi = 0; fi < K.facet_count(); ++fi) {
        const auto& f = K.facets()[fi];
        for (std::size_t skip = 0; skip < f.size(); ++skip) {
            Simplex ridge;
            ridge.reserve(f.size() - 1);
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != skip) ridge.push_back(f[i]);
            auto& use = ridges[ridge];
            if (use.count == 0) use.first = fi;
            else comps.join(use.first, fi);
            ++use.count;
        }
    }
    // report the smallest offending ridge for determinism
    const Simplex* bad = nullptr;
    std::uint32_t bad_count = 0;
    for (const auto& [ridge, use] : ridges) {
        if (use.count == 1) ++r.boundary_ridges;
        bool wrong = use.count > 2 || (use.count == 1 && !allow_boundary);
        if (wrong && (!bad || ridge < *bad)) {
            bad = &ridge;
            bad_count = use.count;
        }
    }
    if (bad) {
        r.reason = "ridge in " + std::to_string(bad_count) + " facet" + (bad_count == 1 ? "" : "s");
        r.witness = *bad;
        return r;
    }
    auto root = comps.root(0);
    for (std::uint32_t fi = 1; fi < K.facet_count(); ++fi) {
        if (comps.root(fi) != root) {
            r.reason = "not strongly connected";
            r.witness = K.facets()[fi];
            return r;
        }
    }
    r.ok = true;
    return r;
}

bool is_pseudomanifold(const SimplicialComplex& K, bool allow_boundary) {
    return check_pseudomanifold(K, allow_boundary).ok;
}

SimplicialComplex boundary(const SimplicialComplex& K) {
    std::unordered_map<Simplex, std::uint32_t, SimplexHash> count;
    for (const auto& f : K.facets()) {
        for (std::size_t skip = 0; skip < f.size(); ++skip) {
            Simplex ridge;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != skip) ridge.push_back(f[i]);
            ++count[ridge];
        }
    }
    std::vector<Simplex> out;
    for (auto& [ridge, c] : count)
        if (c == 1 && !ridge.empty()) out.push_back(ridge);
    return SimplicialComplex::from_indexed(K.labels(), std::move(out));
}

GroupAction make_action(std::vector<std::string> points, std::vector<std::vector<std::uint32_t>> generators) {
    const std::size_t n = points.size();
    for (std::size_t g = 0; g < generators.size(); ++g) {
        const auto& p = generators[g];
        if (p.size() != n) throw std::invalid_argument("generator " + std::to_string(g) + " has wrong size");
        std::vector<char> hit(n, 0);
        for (auto x : p) {
            if (x >= n || hit[x]) throw std::invalid_argument("generator " + std::to_string(g) + " is not a permutation");
            hit[x] = 1;
        }
        for (std::size_t x = 0; x < n; ++x)
            if (p[p[p[x]]] != x) throw std::invalid_argument("generator " + std::to_string(g) + " has order not dividing 3");
    }
    for (std::size_t a = 0; a < generators.size(); ++a)
        for (std::size_t b = a + 1; b < generators.size(); ++b)
            for (std::size_t x = 0; x < n; ++x)
                if (generators[a][generators[b][x]] != generators[b][generators[a][x]])
                    throw std::invalid_argument("generators do not commute");
    GroupAction A;
    A.rank = static_cast<int>(generators.size());
    A.points = std::move(points);
    A.generators = std::move(generators);
    return A;
}

std::vector<std::uint32_t> group_element(const GroupAction& A, const std::vector<int>& exponents) {
    std::vector<std::uint32_t> perm(A.points.size());
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::size_t i = 0; i < A.generators.size() && i < exponents.size(); ++i) {
        int e = ((exponents[i] % 3) + 3) % 3;
        for (int k = 0; k < e; ++k)
            for (auto& x : perm) x = A.generators[i][x];
    }
    return perm;
}

std::vector<std::vector<int>> all_exponents(int rank) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < rank; ++i) {
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

bool preserves_facets(const SimplicialComplex& K, const GroupAction& A, const std::vector<std::uint32_t>& perm) {
    std::unordered_map<std::string_view, std::uint32_t> point_of;
    for (std::uint32_t i = 0; i < A.points.size(); ++i) point_of.emplace(A.points[i], i);
    std::vector<Vertex> map(K.vertex_count());
    bool closed = true;
    for (Vertex v = 0; v < K.vertex_count(); ++v) {
        auto it = point_of.find(K.label(v));
        if (it == point_of.end())
            throw std::invalid_argument("action is not defined on vertex '" + K.label(v) + "'");
        auto w = K.find(A.points[perm[it->second]]);
        if (!w) closed = false;
        else map[v] = *w;
    }
    if (!closed) return false;
    SimplexSet facets(K.facets().begin(), K.facets().end());
    for (const auto& f : K.facets()) {
        Simplex s;
        for (Vertex v : f) s.push_back(map[v]);
        std::sort(s.begin(), s.end());
        if (!facets.count(s)) return false;
    }
    return true;
}

bool is_equivariant(const SimplicialComplex& K, const GroupAction& A) {
    for (const auto& g : A.generators)
        if (!preserves_facets(K, A, g)) return false;
    return true;
}

bool is_simplicial(const SimplicialMap& f) {
    if (f.image.size() != f.source.vertex_count()) return false;
    for (const auto& s : f.source.facets()) {
        Simplex t;
        for (Vertex v : s) t.push_back(f.image[v]);
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        if (!f.target.contains(t)) return false;
    }
    return true;
}

std::string format_simplex(const SimplicialComplex& K, const Simplex& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ", ";
        os << (s[i] < K.vertex_count() ? K.label(s[i]) : "#" + std::to_string(s[i]));
    }
    os << '}';
    return os.str();
}

}  // namespace eqtri
