#include "eqmaps/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace eqmaps::partitions {

namespace {

constexpr int kMaxGroundSet = 8;
constexpr long long kMaxChains = 2'000'000;

}  // namespace

set_partition::set_partition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks))
{
    if (n_ < 1)
        throw std::invalid_argument("set_partition: ground set must be nonempty");
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    int total = 0;
    for (auto& block : blocks_) {
        if (block.empty())
            throw std::invalid_argument("set_partition: empty block");
        std::sort(block.begin(), block.end());
        for (int x : block) {
            if (x < 1 || x > n_)
                throw std::invalid_argument("set_partition: element out of range");
            if (seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("set_partition: repeated element");
            seen[static_cast<std::size_t>(x)] = true;
            ++total;
        }
    }
    if (total != n_)
        throw std::invalid_argument("set_partition: blocks do not cover the ground set");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
}

set_partition set_partition::single_block(int n)
{
    std::vector<int> block(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        block[static_cast<std::size_t>(i)] = i + 1;
    return set_partition(n, {block});
}

set_partition set_partition::discrete(int n)
{
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i)
        blocks.push_back({i});
    return set_partition(n, std::move(blocks));
}

std::vector<int> set_partition::block_sizes() const
{
    std::vector<int> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& b : blocks_)
        sizes.push_back(static_cast<int>(b.size()));
    return sizes;
}

bool set_partition::refines(const set_partition& coarser) const
{
    if (n_ != coarser.n_)
        throw std::invalid_argument("set_partition::refines: ground sets differ");
    std::vector<int> owner(static_cast<std::size_t>(n_) + 1, -1);
    for (int b = 0; b < coarser.block_count(); ++b)
        for (int x : coarser.blocks_[static_cast<std::size_t>(b)])
            owner[static_cast<std::size_t>(x)] = b;
    for (const auto& block : blocks_) {
        const int target = owner[static_cast<std::size_t>(block[0])];
        for (int x : block)
            if (owner[static_cast<std::size_t>(x)] != target)
                return false;
    }
    return true;
}

std::string set_partition::to_string() const
{
    std::ostringstream out;
    out << "{";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b > 0)
            out << "|";
        for (int x : blocks_[b])
            out << x;
    }
    out << "}";
    return out.str();
}

namespace {

// Enumerates restricted growth strings over `elements` (sorted ascending),
// visiting block lists in lexicographic order of the assignment vector.
void enumerate_rgs(const std::vector<int>& elements,
                   const std::function<void(const std::vector<std::vector<int>>&)>& visit)
{
    const int n = static_cast<int>(elements.size());
    if (n == 0)
        return;
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int max_used) {
        if (i == n) {
            std::vector<std::vector<int>> blocks(static_cast<std::size_t>(max_used) + 1);
            for (int j = 0; j < n; ++j)
                blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(j)])].push_back(
                    elements[static_cast<std::size_t>(j)]);
            visit(blocks);
            return;
        }
        for (int b = 0; b <= max_used + 1 && b < n; ++b) {
            assign[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(max_used, b));
        }
    };
    rec(0, -1);
}

}  // namespace

std::vector<set_partition> enumerate_partitions(int n, int k, bool even_only)
{
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("enumerate_partitions: need 1 <= k <= n");
    if (n > 14)
        throw std::invalid_argument("enumerate_partitions: ground set too large (n <= 14)");
    std::vector<int> elements(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        elements[static_cast<std::size_t>(i)] = i + 1;

    std::vector<set_partition> out;
    enumerate_rgs(elements, [&](const std::vector<std::vector<int>>& blocks) {
        if (static_cast<int>(blocks.size()) != k)
            return;
        if (even_only) {
            for (const auto& b : blocks)
                if (b.size() % 2 != 0)
                    return;
        }
        out.emplace_back(n, blocks);
    });
    return out;
}

std::vector<set_partition> all_refinements(const set_partition& a)
{
    // Partitions of each block independently, then all combinations.
    std::vector<std::vector<std::vector<std::vector<int>>>> per_block;
    for (const auto& block : a.blocks()) {
        std::vector<std::vector<std::vector<int>>> options;
        enumerate_rgs(block,
                      [&](const std::vector<std::vector<int>>& blocks) { options.push_back(blocks); });
        per_block.push_back(std::move(options));
    }

    std::vector<set_partition> out;
    std::vector<std::size_t> choice(per_block.size(), 0);
    while (true) {
        std::vector<std::vector<int>> blocks;
        for (std::size_t b = 0; b < per_block.size(); ++b)
            for (const auto& piece : per_block[b][choice[b]])
                blocks.push_back(piece);
        out.emplace_back(a.n(), std::move(blocks));

        std::size_t pos = 0;
        while (pos < choice.size()) {
            if (++choice[pos] < per_block[pos].size())
                break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == choice.size())
            break;
    }

    std::sort(out.begin(), out.end(), [](const set_partition& x, const set_partition& y) {
        if (x.block_count() != y.block_count())
            return x.block_count() < y.block_count();
        return x < y;
    });
    return out;
}

long long partition_weight(const set_partition& a)
{
    long long w = 1;
    for (const auto& block : a.blocks())
        w *= factorial(static_cast<int>(block.size()) - 1);
    return w;
}

namespace {

// Successor lists of the strict refinement order (finer -> coarser) among
// vertices sorted finest-first, so successors always have larger indices.
std::vector<std::vector<int>> coarsening_dag(const std::vector<set_partition>& verts)
{
    const int n = static_cast<int>(verts.size());
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (verts[static_cast<std::size_t>(i)] != verts[static_cast<std::size_t>(j)] &&
                verts[static_cast<std::size_t>(i)].refines(verts[static_cast<std::size_t>(j)]))
                succ[static_cast<std::size_t>(i)].push_back(j);
    return succ;
}

// Total number of nonempty chains of the order, via the chains-ending-at DP.
long long count_chains(const std::vector<std::vector<int>>& succ)
{
    const int n = static_cast<int>(succ.size());
    std::vector<long long> ending(static_cast<std::size_t>(n), 1);
    for (int v = 0; v < n; ++v)
        for (int w : succ[static_cast<std::size_t>(v)])
            ending[static_cast<std::size_t>(w)] += ending[static_cast<std::size_t>(v)];
    long long total = 0;
    for (int v = 0; v < n; ++v)
        total += ending[static_cast<std::size_t>(v)];
    return total;
}

std::vector<set_partition> sorted_finest_first(std::vector<set_partition> verts)
{
    std::sort(verts.begin(), verts.end(), [](const set_partition& x, const set_partition& y) {
        if (x.block_count() != y.block_count())
            return x.block_count() > y.block_count();
        return x < y;
    });
    return verts;
}

void check_ground_set(const set_partition& a)
{
    if (a.n() > kMaxGroundSet) {
        std::ostringstream msg;
        msg << "order complex limited to ground sets of size <= " << kMaxGroundSet << ", got "
            << a.n();
        throw std::invalid_argument(msg.str());
    }
}

void check_chain_budget(long long chains)
{
    if (chains > kMaxChains) {
        std::ostringstream msg;
        msg << "order complex too large: " << chains << " chains exceed the budget of "
            << kMaxChains;
        throw std::length_error(msg.str());
    }
}

void enumerate_chains(const std::vector<std::vector<int>>& succ,
                      const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> chain;
    std::function<void(int)> extend = [&](int v) {
        chain.push_back(v);
        visit(chain);
        for (int w : succ[static_cast<std::size_t>(v)])
            extend(w);
        chain.pop_back();
    };
    for (int v = 0; v < static_cast<int>(succ.size()); ++v)
        extend(v);
}

bool chain_order(const std::vector<int>& x, const std::vector<int>& y)
{
    if (x.size() != y.size())
        return x.size() < y.size();
    return x < y;
}

}  // namespace

simplicial_pair order_complex_pair(const set_partition& a)
{
    check_ground_set(a);
    simplicial_pair pair;
    pair.vertices = sorted_finest_first(all_refinements(a));
    const auto succ = coarsening_dag(pair.vertices);
    check_chain_budget(count_chains(succ));

    pair.root_vertex = static_cast<int>(pair.vertices.size()) - 1;  // a is coarsest
    enumerate_chains(succ, [&](const std::vector<int>& chain) { pair.simplices.push_back(chain); });
    std::sort(pair.simplices.begin(), pair.simplices.end(), chain_order);
    pair.in_boundary.reserve(pair.simplices.size());
    for (const auto& simplex : pair.simplices)
        pair.in_boundary.push_back(simplex.back() != pair.root_vertex);
    return pair;
}

linalg::graded_dims relative_partition_homology(const set_partition& a)
{
    check_ground_set(a);
    if (a.is_discrete())
        throw std::invalid_argument(
            "relative_partition_homology: the discrete partition has no residual block");

    // Vertices of the block: strict refinements of a, discrete excluded.
    std::vector<set_partition> open_verts;
    for (const set_partition& p : all_refinements(a))
        if (p != a && !p.is_discrete())
            open_verts.push_back(p);
    open_verts = sorted_finest_first(std::move(open_verts));
    const auto succ = coarsening_dag(open_verts);
    check_chain_budget(count_chains(succ) + 1);

    // Relative chains in degree d: chains of d open vertices with the root
    // appended; degree 0 is the root alone (the empty open chain).
    std::vector<std::vector<int>> chains;
    chains.push_back({});
    enumerate_chains(succ, [&](const std::vector<int>& c) { chains.push_back(c); });
    std::sort(chains.begin(), chains.end(), chain_order);

    const int top = static_cast<int>(chains.back().size());
    std::vector<std::map<std::vector<int>, int>> index_of(static_cast<std::size_t>(top) + 1);
    std::vector<long long> dims(static_cast<std::size_t>(top) + 1, 0);
    for (const auto& c : chains) {
        auto& idx = index_of[c.size()];
        idx.emplace(c, static_cast<int>(idx.size()));
        ++dims[c.size()];
    }

    linalg::chain_complex complex;
    complex.dims = dims;
    complex.boundaries.emplace_back(0, static_cast<int>(dims[0]));
    for (int d = 1; d <= top; ++d) {
        linalg::sparse_matrix bnd(static_cast<int>(dims[static_cast<std::size_t>(d - 1)]),
                                  static_cast<int>(dims[static_cast<std::size_t>(d)]));
        for (const auto& [chain, col] : index_of[static_cast<std::size_t>(d)]) {
            std::vector<int> face;
            face.reserve(chain.size() - 1);
            // Faces dropping one open vertex; dropping the appended root
            // lands in the boundary subcomplex and contributes nothing.
            for (std::size_t drop = 0; drop < chain.size(); ++drop) {
                face.clear();
                for (std::size_t i = 0; i < chain.size(); ++i)
                    if (i != drop)
                        face.push_back(chain[i]);
                const int sign = drop % 2 == 0 ? 1 : -1;
                bnd.add_entry(index_of[static_cast<std::size_t>(d - 1)].at(face),
                              static_cast<int>(col), rational(sign));
            }
        }
        complex.boundaries.push_back(std::move(bnd));
    }

    return linalg::homology_dims(complex);
}

}  // namespace eqmaps::partitions
