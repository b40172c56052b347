#include "eqmaps/confighom.hpp"

#include <map>
#include <sstream>

namespace eqmaps::confighom {

namespace {

bool is_lens_like(space_kind s)
{
    return s == space_kind::lens || s == space_kind::lens_punctured;
}

bool is_proj_like(space_kind s)
{
    return s == space_kind::proj_space || s == space_kind::proj_space_punctured;
}

// Order-2 twist content of a coefficient system: a sign component and a
// theta component. or_q resolves through the orientation behaviour of the
// underlying manifold before reaching here.
struct twist {
    bool sign = false;
    bool theta = false;

    twist tensor(const twist& other) const { return {sign != other.sign, theta != other.theta}; }
};

twist system_twist(coeff_system c)
{
    switch (c) {
    case coeff_system::const_q: return {false, false};
    case coeff_system::sign_q: return {true, false};
    case coeff_system::theta_tilde_q: return {false, true};
    case coeff_system::theta_tilde_sign_q: return {true, true};
    default:
        throw std::logic_error("system_twist: not an unordered rank-one system");
    }
}

// Orientation sheaf of the unordered configuration space B(X, N), expressed
// in the same two twist bits: (sign)^{dim X} twisted further by the
// orientation class of X itself (theta on even projective spaces).
twist orientation_twist(space_kind space, int m)
{
    twist t;
    t.sign = (m % 2 == 1);
    t.theta = is_proj_like(space) && (m % 2 == 0);
    return t;
}

linalg::graded_dims dims_single(int degree)
{
    return {{degree, 1}};
}

linalg::graded_dims dims_pair(int lo, int hi)
{
    if (lo == hi)
        return {{lo, 2}};
    return {{lo, 1}, {hi, 1}};
}

[[noreturn]] void uncovered(const config_space_spec& spec, const std::string& gap,
                            const std::string& nearest)
{
    std::ostringstream msg;
    msg << "no covered rule for " << spec.describe() << ": " << gap
        << " (nearest covered rule: " << nearest << ")";
    throw uncovered_case(msg.str(), nearest);
}

// Cohomology dimensions of H^*(B(space, N); system), for the reduced twist.
// The sign component is trivial on one-point configurations, so it is
// dropped before dispatch when N = 1.
linalg::graded_dims unordered_cohomology(const config_space_spec& spec, int m, int N, twist t)
{
    if (N == 1)
        t.sign = false;
    const bool m_odd = m % 2 == 1;

    switch (spec.space) {
    case space_kind::euclidean:
        if (!t.sign) {
            if (m_odd || N == 1)
                return dims_single(0);  // euclid_const
            return dims_pair(0, m - 1);
        }
        if (m_odd)
            return dims_single((m - 1) * (N / 2));  // euclid_sign_odd
        return {};                                  // euclid_sign_even: total vanishing

    case space_kind::sphere:
        if (N == 1)
            return dims_pair(0, m);
        if (!t.sign) {
            if (m_odd)
                return dims_pair(0, m);  // sphere_const_odd
            if (N == 2)
                return dims_single(0);  // two points on an even sphere: projective space
            return dims_pair(0, 2 * m - 1);  // sphere_const_even
        }
        if (m_odd) {
            if (N % 2 == 1)
                return dims_pair((m - 1) * (N - 1) / 2, (m - 1) * (N - 1) / 2 + m);
            return {};  // sphere_sign_odd: even point counts vanish
        }
        // sphere_sign_even: survives only through the two-point stratum
        if (N == 2)
            return dims_single(m);
        return {};

    case space_kind::lens:
        if (!t.sign)
            return dims_pair(0, m);  // lens_const: same shape as the sphere
        if (N % 2 == 1)
            return dims_pair((m - 1) * (N - 1) / 2, (m - 1) * (N - 1) / 2 + m);  // lens_sign
        return {};

    case space_kind::lens_punctured:
        if (!t.sign)
            return dims_single(0);                   // punct_lens_const
        return dims_single((m - 1) * (N / 2));       // punct_lens_sign

    case space_kind::proj_space:
        if (m_odd) {
            if (!t.sign && !t.theta)
                return dims_pair(0, m);  // proj_const_odd (lens of order 2)
            if (t.sign && !t.theta) {
                if (N % 2 == 1)
                    return dims_pair((m - 1) * (N - 1) / 2, (m - 1) * (N - 1) / 2 + m);
                return {};  // proj_sign_odd
            }
            if (t.sign && t.theta) {
                if (N % 2 == 0)
                    return dims_pair((N / 2) * (m - 1), (N / 2) * (m - 1) + m);
                return {};  // proj_theta_sign_odd: odd point counts vanish
            }
            // theta alone, m odd
            if (N == 1)
                return {};  // twisted odd projective space is rationally trivial
            uncovered(spec, "the plain theta system on odd projective configurations is only "
                            "pinned together with the sign twist",
                      "proj_theta_sign_odd");
        } else {
            if (!t.sign && !t.theta) {
                if (N == 1)
                    return dims_single(0);
                return dims_pair(0, 2 * m - 1);  // proj_const_even
            }
            if (!t.sign && t.theta) {
                if (N == 1)
                    return dims_single(m);  // twisted even projective space
                return {};                  // proj_theta_even: vanishes through duality
            }
            if (t.sign && t.theta)
                return {};  // proj_theta_sign_even: vanishes through duality
            uncovered(spec, "the sign system on even projective configurations is not pinned "
                            "in ordinary cohomology",
                      "proj_const_even");
        }

    case space_kind::proj_space_punctured:
        if (m_odd) {
            if (!t.sign && !t.theta)
                return dims_single(0);  // punct_proj_const_odd
            if (t.sign && !t.theta)
                return dims_single((m - 1) * (N / 2));  // punct_proj_sign_odd
            if (t.sign && t.theta)
                return dims_single((m - 1) * ((N + 1) / 2));  // punct_proj_theta_sign_odd
            // theta alone, m odd
            if (N == 1)
                return dims_single(m - 1);  // punctured space retracts one dimension down
            uncovered(spec, "the plain theta system on punctured odd projective configurations "
                            "is only pinned together with the sign twist",
                      "punct_proj_theta_sign_odd");
        } else {
            if (!t.sign && !t.theta)
                return dims_pair(0, m - 1);  // punct_proj_const_even
            if (!t.sign && t.theta)
                return {};  // punct_proj_theta_even
            if (t.sign && t.theta)
                return {};  // punct_proj_theta_sign_even
            uncovered(spec, "the sign system on punctured even projective configurations is "
                            "not pinned in ordinary cohomology",
                      "punct_proj_const_even");
        }
    }
    throw std::logic_error("unordered_cohomology: unreachable");
}

linalg::graded_dims mirror_dims(const linalg::graded_dims& dims, long long top)
{
    linalg::graded_dims out;
    for (const auto& [d, v] : dims)
        out[static_cast<int>(top - d)] = v;
    return out;
}

linalg::graded_dims dims_from_laurent(const series::laurent_polynomial& p)
{
    linalg::graded_dims out;
    for (const auto& [d, c] : p.terms())
        out[d] = c.get_si();
    return out;
}

linalg::graded_dims ordered_dispatch(const config_space_spec& spec)
{
    const int m = spec.m;
    const int N = spec.N;
    const bool m_odd = m % 2 == 1;

    if (spec.coeff == coeff_system::theta_q) {
        if (spec.space == space_kind::proj_space) {
            if (m_odd && N % 2 == 1)
                return {};  // ordered_proj_theta_odd: total vanishing
            uncovered(spec, "theta coefficients on ordered projective configurations are pinned "
                            "only for odd dimension and odd point count",
                      "ordered_proj_theta_odd_vanish");
        }
        if (spec.space == space_kind::proj_space_punctured)
            uncovered(spec, "only the total dimension is pinned; see "
                            "punctured_ordered_theta_summary",
                      "punctured_ordered_theta_total");
        uncovered(spec, "theta coefficients live on projective configurations only",
                  "ordered_proj_theta_odd_vanish");
    }

    // Constant coefficients from here on.
    const bool bm = spec.variant == variant_kind::borel_moore;
    switch (spec.space) {
    case space_kind::euclidean: {
        const auto dims = dims_from_laurent(ordered_config_poincare(m, N));
        return bm ? mirror_dims(dims, static_cast<long long>(m) * N) : dims;
    }
    case space_kind::lens_punctured: {
        // Same answer as Euclidean space (odd m).
        const auto dims = dims_from_laurent(ordered_config_poincare(m, N));
        return bm ? mirror_dims(dims, static_cast<long long>(m) * N) : dims;
    }
    case space_kind::sphere:
    case space_kind::lens: {
        if (!m_odd)
            uncovered(spec, "ordered configurations of even spheres are not pinned",
                      "ordered_lens_const");
        // One factor of the total space, then ordered flat configurations.
        series::laurent_polynomial p = series::laurent_polynomial::from_terms(
            {{0, bigint(1)}, {m, bigint(1)}});
        if (N >= 2)
            p = p * ordered_config_poincare(m, N - 1);
        const auto dims = dims_from_laurent(p);
        return bm ? mirror_dims(dims, static_cast<long long>(m) * N) : dims;
    }
    case space_kind::proj_space:
    case space_kind::proj_space_punctured: {
        if (!m_odd && bm)
            return {};  // ordered_proj_bm_even: total vanishing
        uncovered(spec, "ordered projective configurations with constant coefficients are "
                        "pinned only in Borel-Moore degree for even dimension",
                  "ordered_proj_bm_even_vanish");
    }
    }
    throw std::logic_error("ordered_dispatch: unreachable");
}

}  // namespace

uncovered_case::uncovered_case(const std::string& what, std::string nearest)
    : std::domain_error(what), nearest_(std::move(nearest))
{
}

void config_space_spec::validate() const
{
    if (m < 1)
        throw std::invalid_argument("config_space_spec: dimension m must be >= 1");
    if (N < 1)
        throw std::invalid_argument("config_space_spec: point count N must be >= 1");
    if (is_lens_like(space)) {
        if (m % 2 == 0)
            throw std::invalid_argument("config_space_spec: lens spaces need odd dimension");
        if (r < 1)
            throw std::invalid_argument("config_space_spec: lens order r must be >= 1");
    }
    if (coeff == coeff_system::theta_q && !ordered)
        throw std::invalid_argument("config_space_spec: theta coefficients need ordered "
                                    "configurations (use theta-tilde on unordered ones)");
    if (ordered && coeff != coeff_system::theta_q && coeff != coeff_system::const_q)
        throw std::invalid_argument("config_space_spec: ordered configurations support only "
                                    "constant or theta coefficients");
    if ((coeff == coeff_system::theta_tilde_q || coeff == coeff_system::theta_tilde_sign_q ||
         coeff == coeff_system::theta_q) &&
        !is_proj_like(space))
        throw std::invalid_argument(
            "config_space_spec: theta-type systems live on projective configurations only");
}

std::string config_space_spec::describe() const
{
    std::ostringstream out;
    out << (ordered ? "I(" : "B(");
    switch (space) {
    case space_kind::euclidean: out << "R^" << m; break;
    case space_kind::sphere: out << "S^" << m; break;
    case space_kind::proj_space: out << "RP^" << m; break;
    case space_kind::proj_space_punctured: out << "RP^" << m << "_*"; break;
    case space_kind::lens: out << "L^" << m << "_" << r; break;
    case space_kind::lens_punctured: out << "L^" << m << "_" << r << ",*"; break;
    }
    out << ", " << N << ") with " << to_string(coeff) << " coefficients, ";
    switch (variant) {
    case variant_kind::homology: out << "homology"; break;
    case variant_kind::cohomology: out << "cohomology"; break;
    case variant_kind::borel_moore: out << "Borel-Moore homology"; break;
    }
    return out.str();
}

linalg::graded_dims config_homology(const config_space_spec& spec)
{
    spec.validate();
    if (spec.ordered)
        return ordered_dispatch(spec);

    // or_q is the orientation twist of the underlying manifold: trivial on
    // orientable spaces, the theta system on even projective spaces.
    coeff_system coeff = spec.coeff;
    if (coeff == coeff_system::or_q) {
        if (is_proj_like(spec.space) && spec.m % 2 == 0)
            coeff = coeff_system::theta_tilde_q;
        else
            coeff = coeff_system::const_q;
    }

    twist t = system_twist(coeff);
    if (spec.variant == variant_kind::borel_moore) {
        // bar H_i(B, L) = H^{Nm-i}(B, L (x) or) on the open Nm-manifold.
        t = t.tensor(orientation_twist(spec.space, spec.m));
        const auto coh = unordered_cohomology(spec, spec.m, spec.N, t);
        return mirror_dims(coh, static_cast<long long>(spec.m) * spec.N);
    }
    // Homology and cohomology have equal dimensions over Q in finite type.
    return unordered_cohomology(spec, spec.m, spec.N, t);
}

series::laurent_polynomial ordered_config_poincare(int m, int N)
{
    if (m < 1 || N < 1)
        throw std::invalid_argument("ordered_config_poincare: need m >= 1, N >= 1");
    std::map<int, bigint> terms;
    std::vector<bigint> poly{bigint(1)};  // in x = t^{m-1}
    for (int a = 1; a <= N - 1; ++a) {
        std::vector<bigint> next(poly.size() + 1, bigint(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += poly[i] * a;
        }
        poly = std::move(next);
    }
    for (std::size_t k = 0; k < poly.size(); ++k)
        terms[(m - 1) * static_cast<int>(k)] += poly[k];
    return series::laurent_polynomial::from_terms(terms);
}

series::laurent_polynomial punctured_cover_poincare(int m, int N)
{
    if (m < 1 || m % 2 != 1)
        throw std::invalid_argument("punctured_cover_poincare: m must be odd");
    if (N < 1)
        throw std::invalid_argument("punctured_cover_poincare: need N >= 1");
    std::map<int, bigint> terms;
    std::vector<bigint> poly{bigint(1)};
    for (int j = 1; j <= N; ++j) {
        std::vector<bigint> next(poly.size() + 1, bigint(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += poly[i] * (2 * j - 1);
        }
        poly = std::move(next);
    }
    for (std::size_t k = 0; k < poly.size(); ++k)
        terms[(m - 1) * static_cast<int>(k)] += poly[k];
    return series::laurent_polynomial::from_terms(terms);
}

theta_total_summary punctured_ordered_theta_summary(int m, int N)
{
    if (m < 1 || m % 2 != 1)
        throw std::invalid_argument("punctured_ordered_theta_summary: m must be odd");
    if (N < 1 || N > 20)
        throw std::invalid_argument("punctured_ordered_theta_summary: need 1 <= N <= 20");
    return {factorial(N), true};
}

std::string to_string(coeff_system c)
{
    switch (c) {
    case coeff_system::const_q: return "constant";
    case coeff_system::sign_q: return "sign";
    case coeff_system::theta_tilde_q: return "theta-tilde";
    case coeff_system::theta_tilde_sign_q: return "theta-tilde-sign";
    case coeff_system::theta_q: return "theta";
    case coeff_system::or_q: return "orientation";
    }
    return "?";
}

std::string to_string(space_kind s)
{
    switch (s) {
    case space_kind::euclidean: return "euclid";
    case space_kind::sphere: return "sphere";
    case space_kind::proj_space: return "rp";
    case space_kind::proj_space_punctured: return "rp-star";
    case space_kind::lens: return "lens";
    case space_kind::lens_punctured: return "lens-star";
    }
    return "?";
}

}  // namespace eqmaps::confighom
