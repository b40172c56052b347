#include "eqmaps/specseq.hpp"

#include <sstream>
#include <stdexcept>

namespace eqmaps::specseq {

namespace {

using confighom::coeff_system;
using confighom::space_kind;

coeff_system reduced_power_sheaf(int M, bool with_theta_factor)
{
    // (sign)^{(x) M}, optionally tensored with theta^{(x) (M+1)}; both twists
    // have order two, so only the parities of the exponents survive.
    const bool sign_bit = M % 2 == 1;
    const bool theta_bit = with_theta_factor && (M + 1) % 2 == 1;
    if (sign_bit && theta_bit)
        return coeff_system::theta_tilde_sign_q;
    if (sign_bit)
        return coeff_system::sign_q;
    if (theta_bit)
        return coeff_system::theta_tilde_q;
    return coeff_system::const_q;
}

}  // namespace

column_source family_column_source(const map_space_spec& spec)
{
    switch (spec.family) {
    case map_family::general:
        return {spec.based ? space_kind::euclidean : space_kind::sphere,
                reduced_power_sheaf(spec.M, false), 1};
    case map_family::even_maps:
        return {spec.based ? space_kind::proj_space_punctured : space_kind::proj_space,
                reduced_power_sheaf(spec.M, false), 1};
    case map_family::odd_maps:
        return {spec.based ? space_kind::proj_space_punctured : space_kind::proj_space,
                reduced_power_sheaf(spec.M, true), 1};
    case map_family::lens_equivariant:
        return {spec.based ? space_kind::lens_punctured : space_kind::lens,
                coeff_system::sign_q, spec.lens_tau()};
    }
    throw std::logic_error("family_column_source: unreachable");
}

e1_page build_e1(const map_space_spec& spec, int p_min)
{
    spec.validate();
    if (p_min >= 0)
        throw std::invalid_argument("build_e1: p_min must be negative");

    e1_page page;
    page.spec = spec;
    page.wedge = {spec.M + 1, spec.m, 0};
    page.p_min = p_min;
    page.cells[{0, 0}] = 1;

    const column_source src = family_column_source(spec);
    for (int N = 1; N <= -p_min; ++N) {
        confighom::config_space_spec cfg;
        cfg.space = src.space;
        cfg.m = spec.m;
        cfg.N = N;
        cfg.r = src.lens_r;
        cfg.coeff = src.coeff;
        cfg.variant = confighom::variant_kind::borel_moore;
        for (const auto& [i, dim] : confighom::config_homology(cfg)) {
            const int q = N * (spec.M + 1) - i;
            page.cells[{-N, q}] += dim;
        }
    }
    return page;
}

int default_p_min(const map_space_spec& spec, int T)
{
    return -(T / (spec.M - spec.m)) - 1;
}

bool wedge_support_check(const e1_page& page)
{
    const int slope = page.wedge.W - page.wedge.dim_x - page.wedge.dim_clambda;
    for (const auto& [pq, dim] : page.cells) {
        if (dim == 0)
            continue;
        const auto [p, q] = pq;
        if (p > 0)
            return false;
        if (p == 0 && !(q == 0 && dim == 1))
            return false;
        if (q + p * slope < 0)
            return false;
        if (q > -static_cast<long long>(p) * page.wedge.W)
            return false;
    }
    return true;
}

namespace {

// Families whose first page carries cells that some differential bidegree
// could join, but where the multiplicative (cup-power) argument forces the
// collapse anyway.
bool cup_power_asserted(const map_space_spec& spec)
{
    if (spec.family == map_family::lens_equivariant)
        return !spec.based;
    const bool m_odd = spec.m % 2 == 1;
    const bool M_odd = spec.M % 2 == 1;
    if (!m_odd && !M_odd)
        return spec.family == map_family::odd_maps || spec.family == map_family::general;
    if (m_odd && M_odd)
        return !spec.based;
    return false;
}

}  // namespace

degeneration degeneration_status(const e1_page& page)
{
    std::vector<std::pair<int, int>> live;
    for (const auto& [pq, dim] : page.cells)
        if (dim > 0)
            live.push_back(pq);

    bool hit = false;
    for (const auto& [p1, q1] : live) {
        for (const auto& [p2, q2] : live) {
            const int r = p2 - p1;
            if (r >= 1 && q2 == q1 - r + 1) {
                hit = true;
                break;
            }
        }
        if (hit)
            break;
    }
    if (!hit)
        return degeneration::lacunary;
    if (cup_power_asserted(page.spec))
        return degeneration::asserted;
    return degeneration::unknown;
}

std::string to_string(degeneration d)
{
    switch (d) {
    case degeneration::lacunary: return "lacunary";
    case degeneration::asserted: return "asserted";
    case degeneration::unknown: return "unknown";
    }
    return "?";
}

series::poincare_series total_poincare(const e1_page& page, int truncation)
{
    // Columns p = -N only reach total degrees >= N(M-m); completeness up to
    // the truncation needs every column through N = floor(T/(M-m)).
    const int gap = page.spec.M - page.spec.m;
    if (static_cast<long long>(-page.p_min) < truncation / gap) {
        std::ostringstream msg;
        msg << "page depth p_min=" << page.p_min << " cannot certify series coefficients up to "
            << truncation << " (need depth " << truncation / gap << ")";
        throw insufficient_depth(msg.str());
    }
    series::poincare_series out(truncation);
    for (const auto& [pq, dim] : page.cells) {
        const long long total = static_cast<long long>(pq.first) + pq.second;
        if (total >= 0 && total <= truncation)
            out.add_coeff(static_cast<int>(total), to_bigint(dim));
    }
    return out;
}

std::vector<long long> dm_pairs::q_values(long long max_q) const
{
    std::vector<long long> out;
    if (empty)
        return out;
    for (long long q = first_q; q <= max_q; q += step)
        out.push_back(q);
    return out;
}

dm_pairs leray_dm_pairs(const map_space_spec& spec)
{
    spec.validate();
    if (spec.based)
        throw std::invalid_argument("leray_dm_pairs: the evaluation bundle lives over the free "
                                    "family only");
    const int m = spec.m;
    const int M = spec.M;
    const bool m_odd = m % 2 == 1;
    const bool M_odd = M % 2 == 1;

    dm_pairs pairs;
    if (spec.family == map_family::lens_equivariant || (m_odd && M_odd))
        return pairs;  // no differential acts

    if (m_odd && !M_odd) {
        if (spec.family == map_family::odd_maps) {
            pairs = {false, M - 1, 2 * M - m - 1};
        } else {
            // even and general families share this row
            pairs = {false, 2 * M - m - 1, 2 * M - m - 1};
        }
        return pairs;
    }
    if (!m_odd && !M_odd) {
        if (spec.family == map_family::odd_maps)
            pairs = {false, M - 1, M - m};
        else if (spec.family == map_family::general)
            pairs = {false, 2 * M - m - 1, M - m};
        return pairs;  // even-maps family: empty
    }
    return pairs;  // m even, M odd: empty in all families
}

bool leray_verify(const series::rational_expr& fiber, int M, const std::vector<long long>& pair_qs,
                  const series::rational_expr& total, int truncation)
{
    const series::rational_expr product =
        fiber * series::rational_expr::from_polynomial(series::poly_one_plus(M));
    series::poincare_series lhs = expand(product, truncation);
    for (long long q : pair_qs) {
        for (long long d : {q, q + 1}) {
            if (d > truncation)
                continue;
            lhs.add_coeff(static_cast<int>(d), bigint(-1));
            if (lhs.coeff(static_cast<int>(d)) < 0) {
                std::ostringstream msg;
                msg << "leray_verify: cancelling the pair at q=" << q
                    << " drives the coefficient of t^" << d << " negative";
                throw std::invalid_argument(msg.str());
            }
        }
    }
    return lhs == expand(total, truncation);
}

}  // namespace eqmaps::specseq
