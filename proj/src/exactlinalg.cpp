#include "eqmaps/exactlinalg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace eqmaps::linalg {

namespace {

void check_shape(int rows, int cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("sparse_matrix: negative dimension");
}

}  // namespace

sparse_matrix::sparse_matrix(int rows, int cols) : rows_(rows), cols_(cols)
{
    check_shape(rows, cols);
}

sparse_matrix::sparse_matrix(int rows, int cols, std::vector<matrix_entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    check_shape(rows, cols);
    std::sort(entries_.begin(), entries_.end(), [](const matrix_entry& a, const matrix_entry& b) {
        return std::pair(a.row, a.col) < std::pair(b.row, b.col);
    });
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const matrix_entry& e = entries_[i];
        if (e.row < 0 || e.row >= rows_ || e.col < 0 || e.col >= cols_)
            throw std::invalid_argument("sparse_matrix: entry index out of range");
        if (e.value == 0)
            throw std::invalid_argument("sparse_matrix: explicit zero entry");
        if (i > 0 && entries_[i - 1].row == e.row && entries_[i - 1].col == e.col)
            throw std::invalid_argument("sparse_matrix: duplicate (row, col) entry");
    }
}

sparse_matrix sparse_matrix::identity(int n)
{
    sparse_matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.add_entry(i, i, rational(1));
    return m;
}

void sparse_matrix::add_entry(int row, int col, rational value)
{
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw std::invalid_argument("sparse_matrix: entry index out of range");
    if (value == 0)
        throw std::invalid_argument("sparse_matrix: explicit zero entry");
    matrix_entry e{row, col, std::move(value)};
    auto pos = std::lower_bound(entries_.begin(), entries_.end(), e,
                                [](const matrix_entry& a, const matrix_entry& b) {
                                    return std::pair(a.row, a.col) < std::pair(b.row, b.col);
                                });
    if (pos != entries_.end() && pos->row == row && pos->col == col)
        throw std::invalid_argument("sparse_matrix: duplicate (row, col) entry");
    entries_.insert(pos, std::move(e));
}

sparse_matrix sparse_matrix::transposed() const
{
    std::vector<matrix_entry> t;
    t.reserve(entries_.size());
    for (const matrix_entry& e : entries_)
        t.push_back({e.col, e.row, e.value});
    return sparse_matrix(cols_, rows_, std::move(t));
}

sparse_matrix multiply(const sparse_matrix& a, const sparse_matrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: inner dimensions differ");
    // Group b's entries by row for the accumulation pass.
    std::vector<std::vector<const matrix_entry*>> b_rows(b.rows());
    for (const matrix_entry& e : b.entries())
        b_rows[e.row].push_back(&e);

    std::map<std::pair<int, int>, rational> acc;
    for (const matrix_entry& ea : a.entries()) {
        for (const matrix_entry* eb : b_rows[ea.col]) {
            acc[{ea.row, eb->col}] += ea.value * eb->value;
        }
    }
    std::vector<matrix_entry> out;
    for (auto& [rc, v] : acc) {
        if (v != 0)
            out.push_back({rc.first, rc.second, std::move(v)});
    }
    return sparse_matrix(a.rows(), b.cols(), std::move(out));
}

namespace {

// One live row of the elimination: sorted (col, integer value) pairs.
using int_row = std::vector<std::pair<int, bigint>>;

void divide_by_content(int_row& row)
{
    if (row.empty())
        return;
    bigint g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            break;
    }
    if (g > 1) {
        for (auto& [c, v] : row)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    // Normalize the leading sign so runs are input-determined.
    if (row.front().second < 0) {
        for (auto& [c, v] : row)
            v = -v;
    }
}

const bigint* row_value_at(const int_row& row, int col)
{
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const std::pair<int, bigint>& p, int c) { return p.first < c; });
    if (it == row.end() || it->first != col)
        return nullptr;
    return &it->second;
}

// row := pivot_value * row - factor * pivot_row, fraction-free.
int_row combine_rows(const int_row& row, const bigint& pivot_value, const bigint& factor,
                     const int_row& pivot_row)
{
    int_row out;
    out.reserve(row.size() + pivot_row.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot_row.size()) {
        if (j == pivot_row.size() || (i < row.size() && row[i].first < pivot_row[j].first)) {
            out.emplace_back(row[i].first, pivot_value * row[i].second);
            ++i;
        } else if (i == row.size() || pivot_row[j].first < row[i].first) {
            out.emplace_back(pivot_row[j].first, -factor * pivot_row[j].second);
            ++j;
        } else {
            bigint v = pivot_value * row[i].second - factor * pivot_row[j].second;
            if (v != 0)
                out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    divide_by_content(out);
    return out;
}

}  // namespace

int rank(const sparse_matrix& m)
{
    // Clear denominators row by row (rank is invariant under row scaling).
    std::vector<int_row> rows(m.rows());
    {
        std::vector<bigint> row_lcm(m.rows(), 1);
        for (const matrix_entry& e : m.entries())
            mpz_lcm(row_lcm[e.row].get_mpz_t(), row_lcm[e.row].get_mpz_t(),
                    e.value.get_den().get_mpz_t());
        for (const matrix_entry& e : m.entries()) {
            bigint v = e.value.get_num() * (row_lcm[e.row] / e.value.get_den());
            rows[e.row].emplace_back(e.col, std::move(v));
        }
        for (int_row& r : rows)
            divide_by_content(r);
    }

    std::vector<int> col_count(m.cols(), 0);
    std::vector<bool> live(m.rows(), false);
    long long live_entries = 0;
    for (int r = 0; r < m.rows(); ++r) {
        if (!rows[r].empty()) {
            live[r] = true;
            live_entries += static_cast<long long>(rows[r].size());
            for (const auto& [c, v] : rows[r])
                ++col_count[c];
        }
    }

    int rank_count = 0;
    while (live_entries > 0) {
        // Markowitz pivot: minimize (row_nnz - 1) * (col_nnz - 1).
        long long best_score = std::numeric_limits<long long>::max();
        int pivot_row = -1, pivot_col = -1;
        for (int r = 0; r < m.rows(); ++r) {
            if (!live[r])
                continue;
            const long long rw = static_cast<long long>(rows[r].size()) - 1;
            for (const auto& [c, v] : rows[r]) {
                const long long score = rw * (col_count[c] - 1);
                if (score < best_score ||
                    (score == best_score && std::pair(r, c) < std::pair(pivot_row, pivot_col))) {
                    best_score = score;
                    pivot_row = r;
                    pivot_col = c;
                }
            }
            if (best_score == 0)
                break;
        }

        const int_row pivot = std::move(rows[pivot_row]);
        live[pivot_row] = false;
        live_entries -= static_cast<long long>(pivot.size());
        for (const auto& [c, v] : pivot)
            --col_count[c];
        const bigint& pivot_value = *row_value_at(pivot, pivot_col);
        ++rank_count;

        if (col_count[pivot_col] > 0) {
            for (int r = 0; r < m.rows(); ++r) {
                if (!live[r])
                    continue;
                const bigint* f = row_value_at(rows[r], pivot_col);
                if (f == nullptr)
                    continue;
                for (const auto& [c, v] : rows[r])
                    --col_count[c];
                live_entries -= static_cast<long long>(rows[r].size());
                rows[r] = combine_rows(rows[r], pivot_value, *f, pivot);
                live_entries += static_cast<long long>(rows[r].size());
                for (const auto& [c, v] : rows[r])
                    ++col_count[c];
                if (rows[r].empty())
                    live[r] = false;
            }
        }
    }
    return rank_count;
}

void chain_complex::validate() const
{
    if (boundaries.size() != dims.size())
        throw std::invalid_argument("chain_complex: need one boundary map per degree");
    for (std::size_t d = 0; d < dims.size(); ++d) {
        if (dims[d] < 0)
            throw std::invalid_argument("chain_complex: negative chain group rank");
        const long long expected_rows = d == 0 ? 0 : dims[d - 1];
        if (boundaries[d].rows() != expected_rows || boundaries[d].cols() != dims[d]) {
            std::ostringstream msg;
            msg << "chain_complex: boundary in degree " << d << " has shape "
                << boundaries[d].rows() << "x" << boundaries[d].cols() << ", expected "
                << expected_rows << "x" << dims[d];
            throw std::invalid_argument(msg.str());
        }
    }
}

long long chain_complex::euler_characteristic() const
{
    long long chi = 0;
    for (std::size_t d = 0; d < dims.size(); ++d)
        chi += (d % 2 == 0) ? dims[d] : -dims[d];
    return chi;
}

graded_dims homology_dims(const chain_complex& c)
{
    c.validate();
    for (std::size_t d = 2; d < c.boundaries.size(); ++d) {
        if (!multiply(c.boundaries[d - 1], c.boundaries[d]).is_zero()) {
            std::ostringstream msg;
            msg << "chain_complex: composite boundary is nonzero entering degree "
                << (d - 2) << " (from degree " << d << ")";
            throw std::invalid_argument(msg.str());
        }
    }

    std::vector<int> ranks(c.dims.size() + 1, 0);
    for (std::size_t d = 0; d < c.boundaries.size(); ++d)
        ranks[d] = rank(c.boundaries[d]);

    graded_dims out;
    for (std::size_t d = 0; d < c.dims.size(); ++d) {
        const long long h = c.dims[d] - ranks[d] - ranks[d + 1];
        if (h < 0)
            throw std::logic_error("homology_dims: negative dimension (rank inconsistency)");
        if (h > 0)
            out[static_cast<int>(d)] = h;
    }
    return out;
}

long long euler_characteristic(const graded_dims& dims)
{
    long long chi = 0;
    for (const auto& [d, v] : dims)
        chi += (d % 2 == 0) ? v : -v;
    return chi;
}

}  // namespace eqmaps::linalg
