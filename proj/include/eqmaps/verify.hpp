#ifndef EQMAPS_VERIFY_HPP
#define EQMAPS_VERIFY_HPP

#include "eqmaps/report.hpp"

namespace eqmaps::verify {

// Every verification below is a dual-route (or multi-route) comparison run
// over the full desk-scale parameter grid; the suites are the machine
// contract behind `verify-all` and the acceptance tests.

// First-page series vs closed forms for the general/even/odd families,
// 1 <= m < M <= 9, free and based.
report::report_document verify_tables(int truncation);

// Lens-equivariant family for r in {2,3,4,6}, 0 < s <= r, odd m < M <= 9,
// plus the r = 2 page-level match with the even/odd families.
report::report_document verify_lens(int truncation);

// Triple-route horizontal Euler characteristics: alternating block sums,
// closed form, permutation oracle, and per-place-set counts.
report::report_document verify_euler_routes();

// Residual fiber polynomial, closed form vs Euler-characteristic assembly.
report::report_document verify_phi_routes();

// Chain-level order-complex blocks: concentration and rank for every
// even-block partition of ground sets of size <= 6.
report::report_document verify_partition_blocks();

// Poincare duality pairs and vanishing Euler characteristics of the twisted
// configuration homology providers.
report::report_document verify_duality_euler();

// Target-sphere differential bookkeeping for all table rows.
report::report_document verify_leray(int truncation);

// Wedge support and degeneration classification across all built pages.
report::report_document verify_structural(int truncation);

report::report_document verify_all(int truncation);

}  // namespace eqmaps::verify

#endif
