#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "eqmaps/partitions.hpp"
#include "oracles.hpp"

using namespace eqmaps;
using namespace eqmaps::partitions;

namespace {

set_partition make(int n, std::vector<std::vector<int>> blocks)
{
    return set_partition(n, std::move(blocks));
}

}  // namespace

TEST_CASE("set partition normalisation and validation")
{
    const auto p = make(4, {{3, 4}, {2, 1}});
    CHECK(p.blocks() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    CHECK(p.block_sizes() == std::vector<int>{2, 2});

    CHECK_THROWS_AS(make(3, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make(3, {{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make(3, {{1, 2}, {}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(make(3, {{1, 2}, {4}}), std::invalid_argument);
}

TEST_CASE("refinement order")
{
    const auto fine = make(4, {{1}, {2}, {3, 4}});
    const auto coarse = make(4, {{1, 2}, {3, 4}});
    CHECK(fine.refines(coarse));
    CHECK_FALSE(coarse.refines(fine));
    CHECK(coarse.refines(coarse));
    CHECK(set_partition::discrete(4).refines(coarse));
    CHECK(fine.refines(set_partition::single_block(4)));
}

TEST_CASE("enumeration of the even two-block partitions of a 4-set")
{
    const auto parts = enumerate_partitions(4, 2, true);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == make(4, {{1, 2}, {3, 4}}));
    CHECK(parts[1] == make(4, {{1, 3}, {2, 4}}));
    CHECK(parts[2] == make(4, {{1, 4}, {2, 3}}));
}

TEST_CASE("enumeration counts against the exhaustive oracle")
{
    CHECK(enumerate_partitions(6, 2, true).size() == 15);
    CHECK(enumerate_partitions(5, 2, true).empty());

    for (int n = 1; n <= 7; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (bool even : {false, true}) {
                CHECK(static_cast<long long>(enumerate_partitions(n, k, even).size()) ==
                      oracles::count_partitions_exhaustive(n, k, even));
            }
        }
    }
    CHECK_THROWS_AS(enumerate_partitions(4, 5, false), std::invalid_argument);
}

TEST_CASE("partition weights")
{
    CHECK(partition_weight(make(4, {{1, 2}, {3, 4}})) == 1);
    CHECK(partition_weight(make(6, {{1, 2}, {3, 4, 5, 6}})) == 6);
    CHECK(partition_weight(set_partition::single_block(6)) == 120);
    CHECK(partition_weight(set_partition::discrete(5)) == 1);
}

TEST_CASE("order complex of a single pair")
{
    const auto pair = order_complex_pair(make(2, {{1, 2}}));
    REQUIRE(pair.vertices.size() == 2);
    CHECK(pair.vertices[0] == set_partition::discrete(2));
    CHECK(pair.vertices[1] == set_partition::single_block(2));
    CHECK(pair.root_vertex == 1);
    REQUIRE(pair.simplices.size() == 3);
    // boundary subcomplex: exactly the simplices missing the root, here the
    // single vertex {1|2}
    int boundary_count = 0;
    for (std::size_t i = 0; i < pair.simplices.size(); ++i)
        if (pair.in_boundary[i]) {
            ++boundary_count;
            CHECK(pair.simplices[i] == std::vector<int>{0});
        }
    CHECK(boundary_count == 1);
}

TEST_CASE("order complex vertex counts are Bell numbers")
{
    const long long bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (int n = 2; n <= 6; ++n) {
        const auto pair = order_complex_pair(set_partition::single_block(n));
        CHECK(static_cast<long long>(pair.vertices.size()) == bell[n]);
    }
    // matches the 4-vertex diamond = order complex of a product of two
    // two-element lattices
    const auto pair = order_complex_pair(make(4, {{1, 2}, {3, 4}}));
    CHECK(pair.vertices.size() == 4);
    CHECK(pair.simplices.size() == 4 + 5 + 2);
}

TEST_CASE("order complex rejects oversized ground sets")
{
    CHECK_THROWS_WITH_AS(order_complex_pair(set_partition::single_block(9)),
                         doctest::Contains("size"), std::invalid_argument);
}

TEST_CASE("relative homology of the residual blocks")
{
    // Weight in degree n - k - 1. The smallest case is a single point pair.
    CHECK(relative_partition_homology(make(2, {{1, 2}})) == linalg::graded_dims{{0, 1}});
    CHECK(relative_partition_homology(set_partition::single_block(4)) ==
          linalg::graded_dims{{2, 6}});
    CHECK(relative_partition_homology(make(4, {{1, 2}, {3, 4}})) == linalg::graded_dims{{1, 1}});
    // blocks of odd size follow the same weight rule
    CHECK(relative_partition_homology(set_partition::single_block(3)) ==
          linalg::graded_dims{{1, 2}});
    CHECK(relative_partition_homology(make(5, {{1, 2, 3}, {4, 5}})) ==
          linalg::graded_dims{{2, 2}});

    CHECK_THROWS_AS(relative_partition_homology(set_partition::discrete(3)),
                    std::invalid_argument);
}

TEST_CASE("every even-block partition of a 6-set concentrates at its weight")
{
    for (int k = 1; k <= 3; ++k) {
        for (const auto& part : enumerate_partitions(6, k, true)) {
            const auto h = relative_partition_homology(part);
            REQUIRE(h.size() == 1);
            CHECK(h.count(6 - k - 1) == 1);
            CHECK(h.at(6 - k - 1) == partition_weight(part));
        }
    }
}

TEST_CASE("relative homology equals shifted reduced homology of the link")
{
    // The complex is a cone over the link of the root, so the relative
    // groups are the reduced link homology shifted up by one. The link here
    // is the order complex of the strict, non-discrete refinements; its
    // absolute homology is computed from scratch as a second route.
    for (const auto& part :
         {make(4, {{1, 2}, {3, 4}}), set_partition::single_block(4),
          set_partition::single_block(5), make(6, {{1, 2}, {3, 4, 5, 6}}),
          make(6, {{1, 2, 3}, {4, 5, 6}})}) {
        const auto pair = order_complex_pair(part);
        const int root = pair.root_vertex;

        // absolute chain complex of the link (drop root and discrete vertex)
        std::vector<std::vector<int>> link;
        for (const auto& s : pair.simplices)
            if (s.back() != root && std::find(s.begin(), s.end(), 0) == s.end())
                link.push_back(s);

        linalg::graded_dims link_reduced;
        if (link.empty()) {
            link_reduced[-1] = 1;  // reduced homology of the empty complex
        } else {
            int top = 0;
            for (const auto& s : link)
                top = std::max(top, static_cast<int>(s.size()) - 1);
            std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(top) + 1);
            for (const auto& s : link) {
                auto& idx = index[s.size() - 1];
                idx.emplace(s, static_cast<int>(idx.size()));
            }
            linalg::chain_complex complex;
            for (int d = 0; d <= top; ++d)
                complex.dims.push_back(
                    static_cast<long long>(index[static_cast<std::size_t>(d)].size()));
            complex.boundaries.emplace_back(0, static_cast<int>(complex.dims[0]));
            for (int d = 1; d <= top; ++d) {
                linalg::sparse_matrix bnd(static_cast<int>(complex.dims[d - 1]),
                                          static_cast<int>(complex.dims[d]));
                for (const auto& [s, col] : index[static_cast<std::size_t>(d)]) {
                    for (std::size_t drop = 0; drop < s.size(); ++drop) {
                        std::vector<int> face;
                        for (std::size_t i = 0; i < s.size(); ++i)
                            if (i != drop)
                                face.push_back(s[i]);
                        bnd.add_entry(index[static_cast<std::size_t>(d - 1)].at(face),
                                      static_cast<int>(col),
                                      rational(drop % 2 == 0 ? 1 : -1));
                    }
                }
                complex.boundaries.push_back(std::move(bnd));
            }
            link_reduced = linalg::homology_dims(complex);
            REQUIRE(link_reduced.count(0) == 1);
            if (--link_reduced[0] == 0)
                link_reduced.erase(0);
        }

        linalg::graded_dims shifted;
        for (const auto& [d, v] : link_reduced)
            shifted[d + 1] = v;
        CHECK(relative_partition_homology(part) == shifted);
    }
}

TEST_CASE("relative Euler characteristic matches the homology")
{
    for (const auto& part : {make(4, {{1, 2}, {3, 4}}), set_partition::single_block(4),
                             set_partition::single_block(5), make(6, {{1, 2}, {3, 4, 5, 6}})}) {
        const auto pair = order_complex_pair(part);
        // Simplices of the residual block: contain the root, avoid the
        // discrete vertex (index 0 in the finest-first order).
        long long chi = 0;
        for (std::size_t i = 0; i < pair.simplices.size(); ++i) {
            const auto& s = pair.simplices[i];
            if (pair.in_boundary[i])
                continue;
            if (std::find(s.begin(), s.end(), 0) != s.end())
                continue;
            chi += (s.size() % 2 == 1) ? 1 : -1;
        }
        CHECK(chi == linalg::euler_characteristic(relative_partition_homology(part)));
    }
}
