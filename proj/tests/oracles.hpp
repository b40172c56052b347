#ifndef EQMAPS_TEST_ORACLES_HPP
#define EQMAPS_TEST_ORACLES_HPP

// Independent reference implementations used only by tests. These stay
// deliberately naive: textbook dense elimination, schoolbook long division,
// exhaustive assignment enumeration.

#include <set>
#include <vector>

#include "eqmaps/rationals.hpp"

namespace oracles {

using eqmaps::bigint;
using eqmaps::rational;

// Dense Gaussian elimination over Q, no pivot strategy beyond first-nonzero.
inline int dense_rank(std::vector<std::vector<rational>> m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            const rational f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Schoolbook long division of num by den (den[0] == 1), coefficients 0..T.
inline std::vector<bigint> long_division_series(std::vector<bigint> num,
                                                const std::vector<bigint>& den, int T)
{
    num.resize(static_cast<std::size_t>(T) + den.size() + 1, bigint(0));
    std::vector<bigint> out;
    for (int d = 0; d <= T; ++d) {
        const bigint c = num[static_cast<std::size_t>(d)];
        out.push_back(c);
        if (c == 0)
            continue;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[static_cast<std::size_t>(d) + j] -= c * den[j];
    }
    return out;
}

// Set partitions counted by brute force: all k^n assignments, deduplicated by
// their canonical block form.
inline long long count_partitions_exhaustive(int n, int k, bool even_only)
{
    std::set<std::vector<std::vector<int>>> seen;
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
        for (int i = 0; i < n; ++i)
            blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])].push_back(i + 1);
        bool ok = true;
        for (const auto& b : blocks) {
            if (b.empty() || (even_only && b.size() % 2 != 0)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::sort(blocks.begin(), blocks.end());
            seen.insert(blocks);
        }
        int pos = n - 1;
        while (pos >= 0 && assign[static_cast<std::size_t>(pos)] == k - 1) {
            assign[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0)
            break;
        ++assign[static_cast<std::size_t>(pos)];
    }
    return static_cast<long long>(seen.size());
}

}  // namespace oracles

#endif
