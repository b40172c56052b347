#ifndef EQMAPS_SPECSEQ_HPP
#define EQMAPS_SPECSEQ_HPP

#include <map>
#include <utility>
#include <vector>

#include "eqmaps/confighom.hpp"
#include "eqmaps/mapspace.hpp"
#include "eqmaps/series.hpp"

namespace eqmaps::specseq {

// Support wedge of the first page: p < 0, q + p(W - dim X - dim CLambda) >= 0
// and q <= -pW. Here W = M+1, dim X = m, dim CLambda = 0.
struct wedge_spec {
    int W = 0;
    int dim_x = 0;
    int dim_clambda = 0;
};

// First-page dimensions of the map-space spectral sequence, assembled down to
// column p_min. Cells are keyed by (p, q) with p <= 0; (0, 0) always holds 1.
struct e1_page {
    map_space_spec spec;
    wedge_spec wedge;
    int p_min = -1;
    std::map<std::pair<int, int>, long long> cells;
};

// The configuration space and reduced rank-one system feeding column p = -N
// of the family's page.
struct column_source {
    confighom::space_kind space;
    confighom::coeff_system coeff;
    int lens_r = 1;
};
column_source family_column_source(const map_space_spec& spec);

// Assembles columns p in [p_min, -1] from the Borel-Moore homology of the
// family's configuration spaces: the cell at (p, q) is bar H_{-p(M+1)-q}.
e1_page build_e1(const map_space_spec& spec, int p_min);

// Depth sufficient for series coefficients up to degree T.
int default_p_min(const map_space_spec& spec, int T);

bool wedge_support_check(const e1_page& page);

enum class degeneration { lacunary, asserted, unknown };

// lacunary when no differential bidegree connects two nonzero cells of the
// stored page; asserted for the families whose collapse is carried by the
// cup-power argument instead; unknown otherwise.
degeneration degeneration_status(const e1_page& page);
std::string to_string(degeneration d);

// Raised by total_poincare when the page depth cannot certify completeness of
// the requested truncation.
class insufficient_depth : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Coefficient of t^c = sum of dims over cells with p + q = c.
series::poincare_series total_poincare(const e1_page& page, int truncation);

// The q-progression of the target-sphere differential pairs
// (E_M^{0,q}, E_M^{M,q-M+1}) for the free family's evaluation bundle.
struct dm_pairs {
    bool empty = true;
    long long first_q = 0;
    long long step = 0;

    std::vector<long long> q_values(long long max_q) const;
};
dm_pairs leray_dm_pairs(const map_space_spec& spec);

// Checks fiber(t) * (1 + t^M) - sum over pairs (t^q + t^{q+1}) = total(t) up
// to the truncation, with no subtraction driving a coefficient negative.
bool leray_verify(const series::rational_expr& fiber, int M, const std::vector<long long>& pair_qs,
                  const series::rational_expr& total, int truncation);

}  // namespace eqmaps::specseq

#endif
