#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eqtri/complex.hpp"

namespace eqtri {

using Integer = boost::multiprecision::cpp_int;

// Dense row-major matrix.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

using SparseColumn = std::vector<std::pair<std::uint32_t, Integer>>;  // sorted by row

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    std::size_t nonzeros() const;
    SparseColumn& column(std::size_t c) { return columns_[c]; }
    const SparseColumn& column(std::size_t c) const { return columns_[c]; }

    IntegerMatrix to_dense() const;
    static SparseMatrix from_dense(const IntegerMatrix& M);

private:
    std::size_t rows_ = 0;
    std::vector<SparseColumn> columns_;
};

// Matrices with more entries than this are reduced in sparse form.
inline constexpr std::size_t kDenseEntryLimit = 100000;

// Invariant factors d_1 | d_2 | ... | d_r of M, all positive.  Pivot: the
// nonzero entry of least absolute value, ties to the smallest row, then column.
std::vector<Integer> smith_normal_form(IntegerMatrix M);
std::vector<Integer> smith_normal_form(const SparseMatrix& M);

struct SmithSummary {
    std::size_t rank = 0;
    std::vector<Integer> torsion;  // invariant factors greater than 1
};

struct ChainComplex {
    // basis[i]: the i-simplices in canonical (sorted) order
    std::vector<std::vector<Simplex>> basis;
    // boundary[i]: matrix of the boundary map from i-chains to (i-1)-chains;
    // boundary[0] is an empty placeholder
    std::vector<SparseMatrix> boundary;
};

// Builds all boundary maps and checks that consecutive maps compose to zero.
ChainComplex boundary_matrices(const SimplicialComplex& K);

struct HomologyProfile {
    std::vector<std::size_t> betti;
    std::vector<std::vector<Integer>> torsion;

    long long euler_characteristic() const;
    bool operator==(const HomologyProfile&) const = default;
};

HomologyProfile homology(const SimplicialComplex& K);
HomologyProfile homology(const ChainComplex& C);

std::string format_profile(const HomologyProfile& h);

}  // namespace eqtri
