#ifndef EQMAPS_EXACTLINALG_HPP
#define EQMAPS_EXACTLINALG_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "eqmaps/rationals.hpp"

namespace eqmaps::linalg {

// Finite-support map degree -> dimension; zero dimensions are not stored.
using graded_dims = std::map<int, long long>;

struct matrix_entry {
    int row = 0;
    int col = 0;
    rational value;
};

// Sparse matrix over Q. Stored entries are nonzero, unique per (row, col),
// and kept sorted by (row, col).
class sparse_matrix {
public:
    sparse_matrix() = default;
    sparse_matrix(int rows, int cols);
    sparse_matrix(int rows, int cols, std::vector<matrix_entry> entries);

    static sparse_matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<matrix_entry>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    // Adds a nonzero entry; rejects duplicates, zeros and out-of-range indices.
    void add_entry(int row, int col, rational value);

    sparse_matrix transposed() const;

    bool operator==(const sparse_matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<matrix_entry> entries_;
};

sparse_matrix multiply(const sparse_matrix& a, const sparse_matrix& b);

// Rank over Q by fraction-free (integer-preserving) elimination with
// Markowitz-style fill-minimizing pivot selection. Deterministic.
int rank(const sparse_matrix& m);

// Graded chain complex over Q. dims[d] is the rank of the degree-d chain
// group; boundaries[d] maps degree-d chains to degree-(d-1) chains, so
// boundaries[0] has zero rows and boundaries[d] has shape dims[d-1] x dims[d].
struct chain_complex {
    std::vector<long long> dims;
    std::vector<sparse_matrix> boundaries;

    // Shape validation only; the differential identity is checked by
    // homology_dims.
    void validate() const;

    long long euler_characteristic() const;
};

// dim H_d = dims[d] - rank(boundaries[d]) - rank(boundaries[d+1]).
// Rejects complexes whose composite boundary is nonzero, naming the degree.
graded_dims homology_dims(const chain_complex& c);

long long euler_characteristic(const graded_dims& dims);

}  // namespace eqmaps::linalg

#endif
