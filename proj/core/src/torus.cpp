#include "eqtri/torus.hpp"

#include <algorithm>
#include <numeric>

namespace eqtri {

namespace {

std::string digits(const Coords& x) {
    std::string s;
    for (int v : x) s.push_back(static_cast<char>('0' + v));
    return s;
}

void check_range(int n, int max_n) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    if (n > max_n) throw std::invalid_argument("dimension " + std::to_string(n) + " exceeds the limit " + std::to_string(max_n));
}

// all vectors in {0..base-1}^n, first coordinate most significant
std::vector<Coords> grid(int n, int base) {
    std::vector<Coords> out{{}};
    for (int i = 0; i < n; ++i) {
        std::vector<Coords> next;
        for (const auto& c : out)
            for (int v = 0; v < base; ++v) {
                auto d = c;
                d.push_back(v);
                next.push_back(std::move(d));
            }
        out = std::move(next);
    }
    return out;
}

// monotone chains of unit steps starting at each base point
template <class Fn>
void for_each_chain(int n, const std::vector<Coords>& bases, Fn&& fn) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (const auto& b : bases) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<Coords> chain{b};
            Coords x = b;
            for (int j : perm) {
                ++x[static_cast<std::size_t>(j)];
                chain.push_back(x);
            }
            fn(chain);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

std::vector<std::vector<Coords>> cube_chains(int n) {
    std::vector<std::vector<Coords>> out;
    for_each_chain(n, grid(n, 3), [&](const std::vector<Coords>& c) { out.push_back(c); });
    return out;
}

SimplicialComplex from_coords(const std::vector<std::vector<Coords>>& facets, char prefix) {
    std::vector<std::vector<std::string>> lf;
    lf.reserve(facets.size());
    for (const auto& f : facets) {
        std::vector<std::string> row;
        for (const auto& x : f) row.push_back(std::string(1, prefix) + ":" + digits(x));
        lf.push_back(std::move(row));
    }
    return make_complex(lf);
}

SimplicialComplex point_complex() { return make_complex(std::vector<std::vector<std::string>>{{"t:"}}); }

void check_coords(int n, const std::vector<int>& coords) {
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 1 || coords[i] > n) throw std::invalid_argument("coordinate index out of range");
        if (i && coords[i] <= coords[i - 1]) throw std::invalid_argument("coordinate indices must increase");
    }
}

}  // namespace

std::string grid_label(const Coords& x) { return "g:" + digits(x); }
std::string torus_label(const Coords& t) { return "t:" + digits(t); }

Coords parse_digits(const std::string& label, char prefix) {
    if (label.size() < 2 || label[0] != prefix || label[1] != ':')
        throw std::invalid_argument("label '" + label + "' is not of the form " + std::string(1, prefix) + ":<digits>");
    Coords x;
    for (std::size_t i = 2; i < label.size(); ++i) {
        char c = label[i];
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in label '" + label + "'");
        x.push_back(c - '0');
    }
    return x;
}

SimplicialComplex freudenthal_cube(int n) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    std::vector<std::vector<Coords>> facets;
    for_each_chain(n, {Coords(static_cast<std::size_t>(n), 0)}, [&](const std::vector<Coords>& c) { facets.push_back(c); });
    return from_coords(facets, 'g');
}

SimplicialComplex triangulate_cube(int n, int max_n) {
    check_range(n, max_n);
    return from_coords(cube_chains(n), 'g');
}

SimplicialComplex torus_complex(int n, int max_n) {
    check_range(n, max_n);
    return relabel(
        triangulate_cube(n, max_n),
        [](const std::string& l) {
            auto x = parse_digits(l, 'g');
            for (auto& v : x) v %= 3;
            return torus_label(x);
        },
        true);
}

GroupAction z3n_action(int n) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    auto pts = grid(n, 3);
    std::vector<std::string> points;
    for (const auto& p : pts) points.push_back(torus_label(p));
    std::vector<std::vector<std::uint32_t>> gens;
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint32_t> g(pts.size());
        std::uint32_t stride = 1;
        for (int j = i + 1; j < n; ++j) stride *= 3;
        for (std::uint32_t idx = 0; idx < pts.size(); ++idx) {
            int c = pts[idx][static_cast<std::size_t>(i)];
            g[idx] = c == 2 ? idx - 2 * stride : idx + stride;
        }
        gens.push_back(std::move(g));
    }
    return make_action(std::move(points), std::move(gens));
}

SimplicialMap subtorus_inclusion(int n, const std::vector<int>& coords) {
    check_coords(n, coords);
    SimplicialMap f;
    const int k = static_cast<int>(coords.size());
    f.source = k ? torus_complex(k) : point_complex();
    f.target = torus_complex(n);
    for (const auto& l : f.source.labels()) {
        auto t = parse_digits(l, 't');
        Coords x(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < k; ++i) x[static_cast<std::size_t>(coords[static_cast<std::size_t>(i)] - 1)] = t[static_cast<std::size_t>(i)];
        f.image.push_back(*f.target.find(torus_label(x)));
    }
    if (!is_simplicial(f)) throw ConstructionError("subtorus inclusion is not simplicial");
    return f;
}

SimplicialMap subtorus_projection(int n, const std::vector<int>& coords) {
    check_coords(n, coords);
    SimplicialMap f;
    const int k = static_cast<int>(coords.size());
    f.source = torus_complex(n);
    f.target = k ? torus_complex(k) : point_complex();
    for (const auto& l : f.source.labels()) {
        auto x = parse_digits(l, 't');
        Coords t;
        for (int c : coords) t.push_back(x[static_cast<std::size_t>(c - 1)]);
        f.image.push_back(*f.target.find(torus_label(t)));
    }
    if (!is_simplicial(f)) throw ConstructionError("subtorus projection is not simplicial");
    return f;
}

std::vector<std::vector<Coords>> parallelepiped_pieces(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("diagonal factor out of range");
    const auto chains = cube_chains(n);
    const std::size_t kk = static_cast<std::size_t>(k - 1);
    std::vector<std::vector<Coords>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (mask & (1u << kk)) continue;
        for (const auto& c : chains) {
            bool inside = true;
            std::vector<Coords> moved;
            for (const auto& x0 : c) {
                Coords x = x0;
                for (int i = 0; i < n; ++i)
                    if (mask & (1u << i)) x[static_cast<std::size_t>(i)] += 3;
                const int d = x[kk];
                for (int i = 0; i < n && inside; ++i) {
                    if (static_cast<std::size_t>(i) == kk) continue;
                    const int xi = x[static_cast<std::size_t>(i)];
                    // parallelepiped: 0 <= x_i - x_k <= 1;  piece: x_i >= 1 on the mask, <= 1 off it
                    if (xi - d < 0 || xi - d > 3) inside = false;
                    if ((mask & (1u << i)) ? xi < 3 : xi > 3) inside = false;
                }
                if (d < 0 || d > 3) inside = false;
                if (!inside) break;
                moved.push_back(std::move(x));
            }
            if (inside) out.push_back(std::move(moved));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DiagonalTorus torus_k_complex(int n, int k, int max_n) {
    check_range(n, max_n);
    if (k < 1 || k > n) throw std::invalid_argument("diagonal factor out of range");
    DiagonalTorus out{torus_complex(n, max_n), k};

    auto pieces = parallelepiped_pieces(n, k);
    std::size_t expected = 1;
    for (int i = 1; i <= n; ++i) expected *= static_cast<std::size_t>(3 * i);
    if (pieces.size() != expected)
        throw ConstructionError("parallelepiped pieces give " + std::to_string(pieces.size()) + " simplices, expected " +
                                std::to_string(expected));
    for (auto& f : pieces)
        for (auto& x : f)
            for (auto& v : x) v %= 3;
    auto via_pieces = from_coords(pieces, 't');
    if (!same_complex(via_pieces, out.complex))
        throw ConstructionError("parallelepiped construction does not reproduce the torus triangulation");
    return out;
}

}  // namespace eqtri
