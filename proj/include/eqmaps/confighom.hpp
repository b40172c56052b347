#ifndef EQMAPS_CONFIGHOM_HPP
#define EQMAPS_CONFIGHOM_HPP

#include <stdexcept>
#include <string>

#include "eqmaps/exactlinalg.hpp"
#include "eqmaps/series.hpp"

namespace eqmaps::confighom {

// Rank-one local systems with order-2 monodromies. sign_q twists by the
// parity of the point permutation; theta_tilde_q twists when the union of
// point traces is the nonzero class of H_1 of the projective space; theta_q
// is the ordered-space analogue; or_q twists along orientation-destroying
// traces of the underlying manifold.
enum class coeff_system { const_q, sign_q, theta_tilde_q, theta_tilde_sign_q, theta_q, or_q };

enum class space_kind { euclidean, sphere, proj_space, proj_space_punctured, lens, lens_punctured };

enum class variant_kind { homology, cohomology, borel_moore };

struct config_space_spec {
    space_kind space = space_kind::euclidean;
    int m = 1;   // dimension of the underlying manifold
    int N = 1;   // number of configuration points
    int r = 1;   // lens order (lens spaces only)
    bool ordered = false;
    coeff_system coeff = coeff_system::const_q;
    variant_kind variant = variant_kind::cohomology;

    void validate() const;
    std::string describe() const;
};

// Raised when the requested (space, system, parity) combination is not pinned
// by any implemented rule; carries the id of the nearest covered rule.
class uncovered_case : public std::domain_error {
public:
    uncovered_case(const std::string& what, std::string nearest);
    const std::string& nearest_rule() const { return nearest_; }

private:
    std::string nearest_;
};

// Exact graded dimensions over Q of the requested twisted (co)homology.
// Borel-Moore degrees mirror cohomology through the orientation sheaf of the
// configuration space (an open Nm-manifold).
linalg::graded_dims config_homology(const config_space_spec& spec);

// prod_{a=1}^{N-1} (1 + a t^{m-1}): ordered configurations of Euclidean space
// (equally, of a punctured lens space for odd m). Coefficient sum N!.
series::laurent_polynomial ordered_config_poincare(int m, int N);

// prod_{j=1}^{N} (1 + (2j-1) t^{m-1}), m odd: the tower covering the ordered
// configurations of the punctured projective space. Coefficient sum 2^N N!.
series::laurent_polynomial punctured_cover_poincare(int m, int N);

// The theta-twisted homology of ordered configurations of the punctured
// projective space (m odd) is N!-dimensional and purely even; the individual
// degrees are not pinned, so only the summary is exposed.
struct theta_total_summary {
    long long dimension = 0;
    bool even_degrees_only = true;
};
theta_total_summary punctured_ordered_theta_summary(int m, int N);

std::string to_string(coeff_system c);
std::string to_string(space_kind s);

}  // namespace eqmaps::confighom

#endif
