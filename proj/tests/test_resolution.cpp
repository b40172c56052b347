#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqmaps/partitions.hpp"
#include "eqmaps/resolution.hpp"

using namespace eqmaps;
using namespace eqmaps::resolution;

namespace {

// Literal description of the block dimension: enumerate the even partitions
// and add their weights.
long long block_dim_by_enumeration(int N, int p, int s)
{
    long long sum = 0;
    for (const auto& part : partitions::enumerate_partitions(N, N - p - 1, true))
        sum += partitions::partition_weight(part);
    return sum * binomial(N - p - 2, s);
}

}  // namespace

TEST_CASE("block dimensions of the horizontal complexes")
{
    CHECK(e1_block_dim(4, 1, 0) == 3);
    CHECK(e1_block_dim(4, 2, 0) == 6);
    CHECK(e1_block_dim(4, 1, 1) == 3);

    for (int N = 2; N <= 8; N += 2)
        for (int s = 0; s <= N / 2 - 1; ++s)
            for (int p = N / 2 - 1; p <= N - 2 - s; ++p)
                CHECK(e1_block_dim(N, p, s) == block_dim_by_enumeration(N, p, s));

    CHECK_THROWS_AS(e1_block_dim(4, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(e1_block_dim(5, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(e1_block_dim(4, 1, 2), std::invalid_argument);
}

TEST_CASE("block dimensions agree with the chain-level homology ranks")
{
    // The weight of each partition is the top relative homology rank of its
    // order-complex block, so the block dimension has a second, chain-level
    // route for small N.
    for (int N : {4, 6}) {
        for (int s = 0; s <= N / 2 - 1; ++s) {
            for (int p = N / 2 - 1; p <= N - 2 - s; ++p) {
                const int k = N - p - 1;
                long long total = 0;
                for (const auto& part : partitions::enumerate_partitions(N, k, true)) {
                    const auto h = partitions::relative_partition_homology(part);
                    REQUIRE(h.size() == 1);
                    total += h.begin()->second;
                }
                CHECK(e1_block_dim(N, p, s) == total * binomial(N - p - 2, s));
            }
        }
    }
}

TEST_CASE("horizontal Euler characteristics, alternating sums")
{
    CHECK(horizontal_euler_sum(4, 0) == 3);
    CHECK(horizontal_euler_sum(4, 1) == -3);
    CHECK(horizontal_euler_sum(6, 0) == 45);
}

TEST_CASE("horizontal Euler characteristics, closed form")
{
    CHECK(horizontal_euler_closed(4, 0) == 3);
    CHECK(horizontal_euler_closed(4, 1) == -3);
    CHECK(horizontal_euler_closed(6, 0) == 45);
    CHECK(horizontal_euler_closed(8, 2) == 945);
}

TEST_CASE("sum route equals closed route for all rows")
{
    for (int N = 2; N <= 10; N += 2)
        for (int s = 0; s <= N / 2 - 1; ++s)
            CHECK(horizontal_euler_sum(N, s) == horizontal_euler_closed(N, s));
}

TEST_CASE("permutation oracle equals both routes")
{
    CHECK(permutation_oracle(4, 0) == 3);
    CHECK(permutation_oracle(4, 1) == -3);
    for (int N = 2; N <= 8; N += 2)
        for (int s = 0; s <= N / 2 - 1; ++s)
            CHECK(permutation_oracle(N, s) == horizontal_euler_closed(N, s));
    CHECK_THROWS_AS(permutation_oracle(12, 0), std::invalid_argument);
}

TEST_CASE("per-place-set counts match the closed fraction")
{
    CHECK(permutation_count_for_places(6, {3}) == 15);
    CHECK(combi_closed_count(6, {3}) == 15);

    for (int N = 2; N <= 8; N += 2) {
        const auto places = odd_places(N);
        const int P = static_cast<int>(places.size());
        for (int mask = 0; mask < (1 << P); ++mask) {
            std::vector<int> chosen;
            for (int b = 0; b < P; ++b)
                if (mask & (1 << b))
                    chosen.push_back(places[static_cast<std::size_t>(b)]);
            CHECK(permutation_count_for_places(N, chosen) == combi_closed_count(N, chosen));
        }
    }
}

TEST_CASE("absolute Euler characteristics sum to (N-1)!")
{
    for (int N = 2; N <= 12; N += 2) {
        long long total = 0;
        for (int s = 0; s <= N / 2 - 1; ++s)
            total += std::abs(horizontal_euler_closed(N, s));
        CHECK(total == factorial(N - 1));
    }
}

TEST_CASE("residual fiber polynomial, closed form")
{
    CHECK(phi_poincare_closed(4, 3) ==
          series::laurent_polynomial::from_terms({{4, bigint(3)}, {6, bigint(3)}}));
    for (int m : {3, 5})
        CHECK(phi_poincare_closed(2, m) ==
              series::laurent_polynomial::from_terms({{m - 1, bigint(1)}}));
    CHECK(phi_poincare_closed(6, 3).sum_of_coefficients() == 120);
    CHECK_THROWS_AS(phi_poincare_closed(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(phi_poincare_closed(4, 2), std::invalid_argument);
}

TEST_CASE("residual fiber polynomial from Euler characteristics")
{
    CHECK(phi_poincare_from_euler(4, 3) == phi_poincare_closed(4, 3));
    CHECK(phi_poincare_from_euler(2, 5) ==
          series::laurent_polynomial::from_terms({{4, bigint(1)}}));
    for (int N = 2; N <= 8; N += 2)
        for (int m : {1, 3, 5})
            CHECK(phi_poincare_from_euler(N, m) == phi_poincare_closed(N, m));
}

TEST_CASE("residual fiber polynomial lives in even degrees")
{
    for (int N = 2; N <= 8; N += 2) {
        for (int m : {3, 5, 7}) {
            for (const auto& [d, c] : phi_poincare_closed(N, m).terms()) {
                CHECK(d % 2 == 0);
                CHECK(c > 0);
            }
        }
    }
}
