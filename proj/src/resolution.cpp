#include "eqmaps/resolution.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "eqmaps/rationals.hpp"

namespace eqmaps::resolution {

namespace {

constexpr int kMaxEvenN = 12;
constexpr int kMaxOracleN = 10;

void check_row(int N, int s)
{
    if (N < 2 || N % 2 != 0)
        throw std::invalid_argument("horizontal complex: N must be even and >= 2");
    if (N > kMaxEvenN)
        throw std::invalid_argument("horizontal complex: N exceeds the supported bound 12");
    if (s < 0 || s > N / 2 - 1)
        throw std::invalid_argument("horizontal complex: s must lie in [0, N/2-1]");
}

// Weighted partition count: sum over partitions of an N-set into k blocks of
// even size of prod (|block|-1)!. Summing over the even size multisets
// (n_1 >= ... >= n_k), each multiset contributes N! / (prod n_i * prod m_r!)
// where m_r are the multiplicities: N!/(prod n_i! prod m_r!) set partitions,
// each of weight prod (n_i - 1)!.
long long weighted_even_partition_sum(int N, int k)
{
    long long total = 0;
    std::vector<int> sizes;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (static_cast<int>(sizes.size()) == k) {
            if (remaining != 0)
                return;
            long long denom = 1;
            int run = 1;
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                denom *= sizes[i];
                if (i + 1 < sizes.size() && sizes[i + 1] == sizes[i])
                    ++run;
                else {
                    denom *= factorial(run);
                    run = 1;
                }
            }
            total += factorial(N) / denom;
            return;
        }
        const int slots = k - static_cast<int>(sizes.size());
        for (int part = std::min(max_part, remaining - 2 * (slots - 1)); part >= 2; part -= 2) {
            sizes.push_back(part);
            rec(remaining - part, part);
            sizes.pop_back();
        }
    };
    rec(N, N);
    return total;
}

}  // namespace

long long e1_block_dim(int N, int p, int s)
{
    check_row(N, s);
    if (p < N / 2 - 1 || p > N - 2 - s)
        throw std::invalid_argument("e1_block_dim: p must lie in [N/2-1, N-2-s]");
    const int k = N - p - 1;
    return weighted_even_partition_sum(N, k) * binomial(N - p - 2, s);
}

long long horizontal_euler_sum(int N, int s)
{
    check_row(N, s);
    long long sum = 0;
    for (int p = N / 2 - 1; p <= N - 2 - s; ++p) {
        const long long term = e1_block_dim(N, p, s);
        sum += (p % 2 == 0) ? term : -term;
    }
    return sum;
}

long long horizontal_euler_closed(int N, int s)
{
    check_row(N, s);
    // coefficients of prod_{r=1}^{N/2-1} (1 + (2r-1) tau)
    std::vector<long long> poly{1};
    for (int r = 1; r <= N / 2 - 1; ++r) {
        std::vector<long long> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += poly[i] * (2 * r - 1);
        }
        poly = std::move(next);
    }
    const long long coeff = poly[static_cast<std::size_t>(N / 2 - 1 - s)];
    const long long value = double_factorial(N - 1) * coeff;
    return (s % 2 == 0) ? value : -value;
}

std::vector<int> odd_places(int N)
{
    std::vector<int> places;
    for (int i = 3; i <= N - 1; i += 2)
        places.push_back(i);
    return places;
}

long long permutation_count_for_places(int N, const std::vector<int>& places)
{
    if (N < 2 || N % 2 != 0 || N > kMaxOracleN)
        throw std::invalid_argument("permutation oracle: N must be even, 2 <= N <= 10");
    for (int i : places)
        if (i < 3 || i > N - 1 || i % 2 == 0)
            throw std::invalid_argument("permutation oracle: invalid selected place");

    std::vector<int> rest;
    for (int x = 2; x <= N; ++x)
        rest.push_back(x);

    long long count = 0;
    std::vector<int> perm(static_cast<std::size_t>(N) + 1, 0);  // 1-based positions
    perm[1] = 1;
    do {
        for (int i = 2; i <= N; ++i)
            perm[static_cast<std::size_t>(i)] = rest[static_cast<std::size_t>(i - 2)];
        // Positions i >= 2 holding a value smaller than everything after them.
        int running_min = N + 1;
        std::vector<bool> suffix_min(static_cast<std::size_t>(N) + 1, false);
        for (int i = N; i >= 2; --i) {
            if (perm[static_cast<std::size_t>(i)] < running_min) {
                running_min = perm[static_cast<std::size_t>(i)];
                suffix_min[static_cast<std::size_t>(i)] = true;
            }
        }
        bool match = true;
        std::size_t next = 0;
        for (int i = 3; i <= N - 1 && match; i += 2) {
            const bool selected = next < places.size() && places[next] == i;
            if (selected)
                ++next;
            if (suffix_min[static_cast<std::size_t>(i)] != selected)
                match = false;
        }
        if (match)
            ++count;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return count;
}

long long combi_closed_count(int N, const std::vector<int>& places)
{
    long long value = double_factorial(N - 1) * double_factorial(N - 3);
    for (int i : places) {
        if ((N - i) < 1)
            throw std::invalid_argument("combi_closed_count: place out of range");
        value /= (N - i);
    }
    return value;
}

long long permutation_oracle(int N, int s)
{
    check_row(N, s);
    if (N > kMaxOracleN)
        throw std::invalid_argument("permutation_oracle: N exceeds the brute-force bound 10");
    const std::vector<int> places = odd_places(N);
    long long total = 0;
    // All s-subsets of the odd places, as bitmasks.
    const int P = static_cast<int>(places.size());
    for (int mask = 0; mask < (1 << P); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != s)
            continue;
        std::vector<int> chosen;
        for (int b = 0; b < P; ++b)
            if (mask & (1 << b))
                chosen.push_back(places[static_cast<std::size_t>(b)]);
        total += permutation_count_for_places(N, chosen);
    }
    return (s % 2 == 0) ? total : -total;
}

series::laurent_polynomial phi_poincare_closed(int N, int m)
{
    if (N < 2 || N % 2 != 0)
        throw std::invalid_argument("phi_poincare_closed: N must be even");
    if (m < 1 || m % 2 != 1)
        throw std::invalid_argument("phi_poincare_closed: m must be odd");
    // Coefficients in x = t^{m-1}, then shift by (m-1)N/2. Degrees collapse
    // additively when m = 1, handled by accumulating into a term map.
    std::vector<long long> poly{1};
    for (int r = 1; r <= N / 2 - 1; ++r) {
        std::vector<long long> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += poly[i] * (2 * r - 1);
        }
        poly = std::move(next);
    }
    const long long lead = double_factorial(N - 1);
    std::map<int, bigint> terms;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const int degree = (m - 1) * (N / 2 + static_cast<int>(k));
        terms[degree] += to_bigint(lead) * to_bigint(poly[k]);
    }
    return series::laurent_polynomial::from_terms(terms);
}

series::laurent_polynomial phi_poincare_from_euler(int N, int m)
{
    if (N < 2 || N % 2 != 0)
        throw std::invalid_argument("phi_poincare_from_euler: N must be even");
    if (m < 1 || m % 2 != 1)
        throw std::invalid_argument("phi_poincare_from_euler: m must be odd");
    std::map<int, bigint> terms;
    for (int s = 0; s <= N / 2 - 1; ++s) {
        long long chi = horizontal_euler_closed(N, s);
        if (chi < 0)
            chi = -chi;
        terms[(m - 1) * (N - 1 - s)] += to_bigint(chi);
    }
    return series::laurent_polynomial::from_terms(terms);
}

}  // namespace eqmaps::resolution
