#ifndef EQMAPS_PARTITIONS_HPP
#define EQMAPS_PARTITIONS_HPP

#include <string>
#include <vector>

#include "eqmaps/exactlinalg.hpp"

namespace eqmaps::partitions {

// Partition of {1..n} into disjoint nonempty blocks. Normal form: each block
// sorted ascending, blocks ordered by their minimum element.
class set_partition {
public:
    set_partition(int n, std::vector<std::vector<int>> blocks);

    static set_partition single_block(int n);
    static set_partition discrete(int n);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    std::vector<int> block_sizes() const;
    bool is_discrete() const { return block_count() == n_; }

    // True iff every block of *this is contained in a block of coarser.
    bool refines(const set_partition& coarser) const;

    std::string to_string() const;

    auto operator<=>(const set_partition&) const = default;

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
};

// All partitions of {1..n} into exactly k blocks, in lexicographic order of
// their block-assignment (restricted growth) vectors. With even_only, keeps
// only partitions all of whose blocks have even size (possibly none).
std::vector<set_partition> enumerate_partitions(int n, int k, bool even_only);

// All partitions refining a, including a itself and the discrete partition,
// in a deterministic order (coarser first: block count ascending, then lex).
std::vector<set_partition> all_refinements(const set_partition& a);

// Product of (|block| - 1)! over the blocks.
long long partition_weight(const set_partition& a);

// Order complex of the refinements of a root partition A: vertices are the
// subpartitions (discrete included, A maximal), simplices are the chains in
// refinement order, each listed coarsest-last as sorted vertex indices. The
// boundary flag marks the simplices not containing the maximal vertex A.
struct simplicial_pair {
    std::vector<set_partition> vertices;
    std::vector<std::vector<int>> simplices;
    std::vector<bool> in_boundary;
    int root_vertex = -1;
};

// Practical bound n <= 8; also rejects complexes whose chain count exceeds an
// internal budget, reporting the count.
simplicial_pair order_complex_pair(const set_partition& a);

// dim H_*(Delta_A, dDelta_A; Q) of the residual block of the root partition.
// The block excludes the discrete partition: the poset is the one whose
// vertices index strata, and with the discrete vertex present every relative
// class bounds. Concentrated in degree n - k - 1 with rank prod (|block|-1)!
// whenever every block has size >= 2.
linalg::graded_dims relative_partition_homology(const set_partition& a);

}  // namespace eqmaps::partitions

#endif
