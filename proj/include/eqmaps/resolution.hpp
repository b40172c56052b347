#ifndef EQMAPS_RESOLUTION_HPP
#define EQMAPS_RESOLUTION_HPP

#include <vector>

#include "eqmaps/series.hpp"

namespace eqmaps::resolution {

// Dimension of the filtration-p block of the horizontal row q = s*m:
// the weighted count of partitions of {1..N} into N-p-1 even blocks, each
// counted with weight prod (|block|-1)!, times binom(N-p-2, s).
// Valid for N even, 0 <= s <= N/2-1, p in [N/2-1, N-2-s].
long long e1_block_dim(int N, int p, int s);

// Alternating sum sum_p (-1)^p e1_block_dim(N, p, s) over the valid p range.
long long horizontal_euler_sum(int N, int s);

// (-1)^s (N-1)!! [tau^{N/2-1-s}] (1+tau)(1+3 tau)...(1+(N-3) tau).
long long horizontal_euler_closed(int N, int s);

// The odd places {3, 5, ..., N-1} usable as selected places.
std::vector<int> odd_places(int N);

// Permutations (1, a_2, ..., a_N) of {1..N} whose suffix-minimum positions
// among the odd places are exactly `places`. Brute force; N <= 10.
long long permutation_count_for_places(int N, const std::vector<int>& places);

// The closed count (N-1)!! (N-3)!! / prod (N - i) over the selected places i.
long long combi_closed_count(int N, const std::vector<int>& places);

// (-1)^s times the total over all s-subsets of odd places of
// permutation_count_for_places; equals horizontal_euler_closed(N, s).
long long permutation_oracle(int N, int s);

// (N-1)!! t^{(m-1)N/2} prod_{r=1}^{N/2-1} (1 + (2r-1) t^{m-1}); the Poincare
// polynomial of the residual fiber homology for N even, m odd.
series::laurent_polynomial phi_poincare_closed(int N, int m);

// Same polynomial assembled from the horizontal Euler characteristics:
// |horizontal_euler_closed(N, s)| placed in degree (m-1)(N-1-s).
series::laurent_polynomial phi_poincare_from_euler(int N, int m);

}  // namespace eqmaps::resolution

#endif
