#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

namespace {

long long det(const Matrix& A) {
    const std::size_t n = A.size();
    if (n == 1) return A[0][0];
    long long d = 0;
    for (std::size_t c = 0; c < n; ++c) {
        Matrix sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(A[r][k]);
            sub.push_back(row);
        }
        d += (c % 2 ? -1 : 1) * A[0][c] * det(sub);
    }
    return d;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) s.push_back(i);
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// rank over F_p of a matrix given as sparse rows
std::size_t rank_mod_p(std::vector<std::map<std::size_t, std::uint32_t>> rows, std::uint32_t p) {
    std::size_t rank = 0;
    std::map<std::size_t, std::map<std::size_t, std::uint32_t>> pivots;  // lead column -> row
    for (auto& row : rows) {
        while (!row.empty()) {
            auto lead = row.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                auto inv = inverse(row.begin()->second, p);
                for (auto& [c, v] : row) v = static_cast<std::uint32_t>(std::uint64_t(v) * inv % p);
                pivots.emplace(lead, row);
                ++rank;
                break;
            }
            const auto f = row.begin()->second;
            for (const auto& [c, v] : it->second) {
                auto& x = row[c];
                x = static_cast<std::uint32_t>((x + p - std::uint64_t(f) * v % p) % p);
                if (x == 0) row.erase(c);
            }
        }
    }
    return rank;
}

}  // namespace

std::vector<long long> minor_gcd_factors(const Matrix& M) {
    const std::size_t r = M.size(), c = r ? M[0].size() : 0;
    std::vector<long long> g{1};
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        long long gk = 0;
        for (const auto& rs : subsets(r, k))
            for (const auto& cs : subsets(c, k)) {
                Matrix sub;
                for (auto i : rs) {
                    std::vector<long long> row;
                    for (auto j : cs) row.push_back(M[i][j]);
                    sub.push_back(row);
                }
                gk = std::gcd(gk, std::llabs(det(sub)));
            }
        if (gk == 0) break;
        g.push_back(gk);
    }
    std::vector<long long> d;
    for (std::size_t k = 1; k < g.size(); ++k) d.push_back(g[k] / g[k - 1]);
    return d;
}

std::set<std::vector<std::string>> all_faces(const eqtri::SimplicialComplex& K) {
    std::set<std::vector<std::string>> out;
    for (const auto& f : K.labeled_facets()) {
        auto sorted = f;
        std::sort(sorted.begin(), sorted.end());
        for (std::uint32_t mask = 1; mask < (1u << sorted.size()); ++mask) {
            std::vector<std::string> s;
            for (std::size_t i = 0; i < sorted.size(); ++i)
                if (mask & (1u << i)) s.push_back(sorted[i]);
            out.insert(s);
        }
    }
    return out;
}

std::vector<std::size_t> f_vector(const eqtri::SimplicialComplex& K) {
    std::vector<std::size_t> f;
    for (const auto& s : all_faces(K)) {
        if (f.size() < s.size()) f.resize(s.size(), 0);
        ++f[s.size() - 1];
    }
    return f;
}

std::vector<std::size_t> betti_mod_p(const eqtri::SimplicialComplex& K, std::uint32_t p) {
    std::vector<std::vector<std::vector<std::string>>> by_dim;
    for (const auto& s : all_faces(K)) {
        if (by_dim.size() < s.size()) by_dim.resize(s.size());
        by_dim[s.size() - 1].push_back(s);
    }
    std::vector<std::map<std::vector<std::string>, std::size_t>> index(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d)
        for (std::size_t i = 0; i < by_dim[d].size(); ++i) index[d][by_dim[d][i]] = i;
    std::vector<std::size_t> rank(by_dim.size() + 1, 0);
    for (std::size_t d = 1; d < by_dim.size(); ++d) {
        std::vector<std::map<std::size_t, std::uint32_t>> rows;
        for (const auto& s : by_dim[d]) {
            std::map<std::size_t, std::uint32_t> row;
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto t = s;
                t.erase(t.begin() + static_cast<long>(i));
                row[index[d - 1].at(t)] = i % 2 ? p - 1 : 1;
            }
            rows.push_back(row);
        }
        rank[d] = rank_mod_p(rows, p);
    }
    std::vector<std::size_t> b;
    for (std::size_t d = 0; d < by_dim.size(); ++d) b.push_back(by_dim[d].size() - rank[d] - rank[d + 1]);
    return b;
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t simplex_global_vertices(int n) {
    std::uint64_t total = 0;
    for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
        int k = __builtin_popcount(mask);
        if (k > n) continue;
        std::uint64_t p = 1;
        for (int i = 0; i < n - k; ++i) p *= 3;
        total += p;
    }
    return total;
}

Matrix random_matrix(std::mt19937& rng, int max_dim, int bound) {
    std::uniform_int_distribution<int> dim(1, max_dim), val(-bound, bound);
    Matrix M(static_cast<std::size_t>(dim(rng)), std::vector<long long>(static_cast<std::size_t>(dim(rng))));
    for (auto& row : M)
        for (auto& x : row) x = val(rng);
    return M;
}

}  // namespace oracle
