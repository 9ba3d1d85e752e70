#include "eqtri/homology.hpp"

#include <algorithm>
#include <sstream>

#include "eqtri/parallel.hpp"

namespace eqtri {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (auto v : r) data_.emplace_back(v);
    }
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

IntegerMatrix SparseMatrix::to_dense() const {
    IntegerMatrix M(rows_, columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (const auto& [r, v] : columns_[c]) M(r, c) = v;
    return M;
}

SparseMatrix SparseMatrix::from_dense(const IntegerMatrix& M) {
    SparseMatrix S(M.rows(), M.cols());
    for (std::size_t c = 0; c < M.cols(); ++c)
        for (std::size_t r = 0; r < M.rows(); ++r)
            if (M(r, c) != 0) S.columns_[c].emplace_back(static_cast<std::uint32_t>(r), M(r, c));
    return S;
}

namespace {

bool find_pivot(const IntegerMatrix& M, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < M.rows(); ++i) {
        for (std::size_t j = t; j < M.cols(); ++j) {
            const auto& v = M(i, j);
            if (v == 0) continue;
            Integer a = abs(v);
            if (!found || a < best) {
                best = a;
                pr = i;
                pc = j;
                found = true;
                if (best == 1) return true;
            }
        }
    }
    return found;
}

void swap_rows(IntegerMatrix& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(a, j), M(b, j));
}

void swap_cols(IntegerMatrix& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < M.rows(); ++i) std::swap(M(i, a), M(i, b));
}

}  // namespace

std::vector<Integer> smith_normal_form(IntegerMatrix M) {
    std::vector<Integer> diag;
    const std::size_t R = M.rows(), C = M.cols();
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        std::size_t pr = 0, pc = 0;
        if (!find_pivot(M, t, pr, pc)) break;
        swap_rows(M, t, pr);
        swap_cols(M, t, pc);
        while (true) {
            bool dirty = false;
            const Integer p = M(t, t);
            for (std::size_t i = t + 1; i < R; ++i) {
                if (M(i, t) == 0) continue;
                Integer q = M(i, t) / p;
                if (q != 0)
                    for (std::size_t j = t; j < C; ++j)
                        if (M(t, j) != 0) M(i, j) -= q * M(t, j);
                if (M(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (M(t, j) == 0) continue;
                Integer q = M(t, j) / p;
                if (q != 0)
                    for (std::size_t i = t; i < R; ++i)
                        if (M(i, t) != 0) M(i, j) -= q * M(i, t);
                if (M(t, j) != 0) dirty = true;
            }
            if (!dirty) {
                // pivot must divide the rest of the submatrix
                for (std::size_t i = t + 1; i < R && !dirty; ++i)
                    for (std::size_t j = t + 1; j < C && !dirty; ++j)
                        if (M(i, j) % p != 0) {
                            for (std::size_t k = t; k < C; ++k) M(t, k) += M(i, k);
                            dirty = true;
                        }
                if (!dirty) break;
            }
            find_pivot(M, t, pr, pc);
            swap_rows(M, t, pr);
            swap_cols(M, t, pc);
        }
        diag.push_back(abs(M(t, t)));
    }
    return diag;
}

namespace {

// a - f * b for sorted sparse columns
SparseColumn axpy(const SparseColumn& a, const Integer& f, const SparseColumn& b) {
    SparseColumn out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -f * b[j].second);
            ++j;
        } else {
            Integer v = a[i].second - f * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

struct Reduction {
    std::size_t rank = 0;
    std::vector<Integer> factors;           // full invariant factor list
    std::vector<std::uint32_t> unit_rows;   // rows carrying a unit pivot
};

// Column reduction with unit pivots on the lowest entry.  Columns whose lowest
// entry is not a unit are set aside; after the sweep they are cleared against
// every pivot row and the leftover block goes through the dense algorithm.
// The pivot block is unitriangular, so the invariant factors are ones for the
// pivots followed by those of the leftover block.
Reduction reduce_sparse(const SparseMatrix& M, const std::vector<char>& skip) {
    Reduction out;
    const std::size_t R = M.rows(), C = M.cols();
    std::vector<std::int64_t> pivot_of_row(R, -1);
    std::vector<SparseColumn> reduced(C);
    std::vector<std::size_t> deferred;
    for (std::size_t j = 0; j < C; ++j) {
        if (!skip.empty() && skip[j]) continue;
        SparseColumn col = M.column(j);
        while (!col.empty()) {
            auto p = pivot_of_row[col.back().first];
            if (p < 0) break;
            const auto& pc = reduced[static_cast<std::size_t>(p)];
            Integer f = col.back().second * pc.back().second;
            col = axpy(col, f, pc);
        }
        if (col.empty()) continue;
        if (abs(col.back().second) == 1) {
            pivot_of_row[col.back().first] = static_cast<std::int64_t>(j);
            out.unit_rows.push_back(col.back().first);
        } else {
            deferred.push_back(j);
        }
        reduced[j] = std::move(col);
    }
    const std::size_t pivots = out.unit_rows.size();

    std::vector<std::uint32_t> rest_rows;
    for (auto d : deferred) {
        auto& col = reduced[d];
        while (true) {
            auto it = std::find_if(col.rbegin(), col.rend(), [&](const auto& e) { return pivot_of_row[e.first] >= 0; });
            if (it == col.rend()) break;
            const auto& pc = reduced[static_cast<std::size_t>(pivot_of_row[it->first])];
            Integer f = it->second * pc.back().second;
            col = axpy(col, f, pc);
        }
        for (const auto& e : col) rest_rows.push_back(e.first);
    }
    std::sort(rest_rows.begin(), rest_rows.end());
    rest_rows.erase(std::unique(rest_rows.begin(), rest_rows.end()), rest_rows.end());

    out.factors.assign(pivots, Integer(1));
    if (!deferred.empty() && !rest_rows.empty()) {
        IntegerMatrix D(rest_rows.size(), deferred.size());
        for (std::size_t c = 0; c < deferred.size(); ++c)
            for (const auto& [r, v] : reduced[deferred[c]]) {
                auto row = std::lower_bound(rest_rows.begin(), rest_rows.end(), r) - rest_rows.begin();
                D(static_cast<std::size_t>(row), c) = v;
            }
        for (auto& f : smith_normal_form(std::move(D))) out.factors.push_back(std::move(f));
    }
    out.rank = out.factors.size();
    return out;
}

Reduction reduce(const SparseMatrix& M, const std::vector<char>& skip) {
    if (M.rows() * M.cols() > kDenseEntryLimit) return reduce_sparse(M, skip);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < M.cols(); ++j)
        if (skip.empty() || !skip[j]) keep.push_back(j);
    IntegerMatrix D(M.rows(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
        for (const auto& [r, v] : M.column(keep[c])) D(r, c) = v;
    Reduction out;
    out.factors = smith_normal_form(std::move(D));
    out.rank = out.factors.size();
    return out;
}

}  // namespace

std::vector<Integer> smith_normal_form(const SparseMatrix& M) { return reduce(M, {}).factors; }

ChainComplex boundary_matrices(const SimplicialComplex& K) {
    ChainComplex C;
    const int D = K.dimension();
    if (D < 0) return C;
    C.basis.resize(static_cast<std::size_t>(D) + 1);
    parallel_for(C.basis.size(), [&](std::size_t i) { C.basis[i] = K.faces(static_cast<int>(i)); });
    C.boundary.resize(static_cast<std::size_t>(D) + 1);
    parallel_for(static_cast<std::size_t>(D), [&](std::size_t k) {
        const std::size_t i = k + 1;
        const auto& rows = C.basis[i - 1];
        SparseMatrix M(rows.size(), C.basis[i].size());
        for (std::size_t c = 0; c < C.basis[i].size(); ++c) {
            const auto& s = C.basis[i][c];
            auto& col = M.column(c);
            Simplex face(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::copy(s.begin(), s.begin() + static_cast<long>(drop), face.begin());
                std::copy(s.begin() + static_cast<long>(drop) + 1, s.end(), face.begin() + static_cast<long>(drop));
                auto r = std::lower_bound(rows.begin(), rows.end(), face) - rows.begin();
                col.emplace_back(static_cast<std::uint32_t>(r), Integer(drop % 2 ? -1 : 1));
            }
            std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        }
        C.boundary[i] = std::move(M);
    });
    // boundary of a boundary vanishes
    for (std::size_t i = 1; i + 1 < C.boundary.size(); ++i) {
        const auto& lo = C.boundary[i];
        const auto& hi = C.boundary[i + 1];
        std::vector<long long> acc(lo.rows(), 0);
        for (std::size_t c = 0; c < hi.cols(); ++c) {
            std::vector<std::uint32_t> touched;
            for (const auto& [r, v] : hi.column(c)) {
                long long sv = v.convert_to<long long>();
                for (const auto& [rr, vv] : lo.column(r)) {
                    acc[rr] += sv * vv.convert_to<long long>();
                    touched.push_back(rr);
                }
            }
            for (auto rr : touched) {
                if (acc[rr] != 0)
                    throw ConstructionError("boundary of boundary is nonzero in degree " + std::to_string(i + 1));
            }
        }
    }
    return C;
}

HomologyProfile homology(const ChainComplex& C) {
    HomologyProfile h;
    const std::size_t D = C.basis.size();
    if (D == 0) return h;
    std::vector<Reduction> red(D + 1);
    std::vector<char> skip;
    for (std::size_t i = D - 1; i >= 1; --i) {
        red[i] = reduce(C.boundary[i], skip);
        // a unit pivot on row s of this map makes column s of the next map a
        // combination of earlier columns; it reduces to zero
        skip.assign(C.basis[i - 1].size(), 0);
        for (auto r : red[i].unit_rows) skip[r] = 1;
    }
    h.betti.resize(D);
    h.torsion.resize(D);
    for (std::size_t i = 0; i < D; ++i) {
        std::size_t rank_in = i >= 1 ? red[i].rank : 0;
        std::size_t rank_out = i + 1 < D ? red[i + 1].rank : 0;
        h.betti[i] = C.basis[i].size() - rank_in - rank_out;
        if (i + 1 < D)
            for (const auto& f : red[i + 1].factors)
                if (f > 1) h.torsion[i].push_back(f);
    }
    return h;
}

HomologyProfile homology(const SimplicialComplex& K) { return homology(boundary_matrices(K)); }

long long HomologyProfile::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t i = 0; i < betti.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long long>(betti[i]);
    return chi;
}

std::string format_profile(const HomologyProfile& h) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < h.betti.size(); ++i) os << (i ? "," : "") << h.betti[i];
    os << ')';
    for (std::size_t i = 0; i < h.torsion.size(); ++i) {
        if (h.torsion[i].empty()) continue;
        os << " H" << i << " torsion";
        for (const auto& t : h.torsion[i]) os << " Z/" << t;
    }
    return os.str();
}

}  // namespace eqtri
