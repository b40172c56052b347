#include "eqmaps/series.hpp"

#include <sstream>
#include <stdexcept>

namespace eqmaps::series {

polynomial poly_trimmed(polynomial p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    return p;
}

polynomial poly_add(const polynomial& a, const polynomial& b)
{
    polynomial out(std::max(a.size(), b.size()), bigint(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return poly_trimmed(std::move(out));
}

polynomial poly_sub(const polynomial& a, const polynomial& b)
{
    polynomial out(std::max(a.size(), b.size()), bigint(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    return poly_trimmed(std::move(out));
}

polynomial poly_mul(const polynomial& a, const polynomial& b)
{
    if (a.empty() || b.empty())
        return {};
    polynomial out(a.size() + b.size() - 1, bigint(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return poly_trimmed(std::move(out));
}

polynomial poly_one_plus(int k, long long c)
{
    polynomial p(static_cast<std::size_t>(k) + 1, bigint(0));
    p[0] = 1;
    p[static_cast<std::size_t>(k)] += to_bigint(c);
    return poly_trimmed(std::move(p));
}

polynomial poly_monomial(int k, long long c)
{
    if (c == 0)
        return {};
    polynomial p(static_cast<std::size_t>(k) + 1, bigint(0));
    p[static_cast<std::size_t>(k)] = to_bigint(c);
    return p;
}

std::string poly_to_string(const polynomial& p)
{
    if (p.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = 0; d < p.size(); ++d) {
        if (p[d] == 0)
            continue;
        bigint c = p[d];
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        if (d == 0) {
            out << c.get_str();
        } else {
            if (c != 1)
                out << c.get_str() << "*";
            out << "t";
            if (d > 1)
                out << "^" << d;
        }
    }
    return out.str();
}

poincare_series::poincare_series(int truncation)
    : truncation_(truncation), coeffs_(static_cast<std::size_t>(truncation) + 1, bigint(0))
{
    if (truncation < 0)
        throw std::invalid_argument("poincare_series: negative truncation");
}

poincare_series::poincare_series(int truncation, std::vector<bigint> coeffs)
    : truncation_(truncation), coeffs_(std::move(coeffs))
{
    if (truncation < 0 || coeffs_.size() != static_cast<std::size_t>(truncation) + 1)
        throw std::invalid_argument("poincare_series: coefficient array must have length T+1");
}

const bigint& poincare_series::coeff(int d) const
{
    if (d < 0 || d > truncation_)
        throw std::out_of_range("poincare_series: degree out of range");
    return coeffs_[static_cast<std::size_t>(d)];
}

void poincare_series::set_coeff(int d, bigint v)
{
    if (d < 0 || d > truncation_)
        throw std::out_of_range("poincare_series: degree out of range");
    coeffs_[static_cast<std::size_t>(d)] = std::move(v);
}

void poincare_series::add_coeff(int d, const bigint& v)
{
    if (d < 0 || d > truncation_)
        throw std::out_of_range("poincare_series: degree out of range");
    coeffs_[static_cast<std::size_t>(d)] += v;
}

void poincare_series::check_same_truncation(const poincare_series& other) const
{
    if (truncation_ != other.truncation_)
        throw std::invalid_argument("poincare_series: truncation mismatch");
}

poincare_series poincare_series::operator+(const poincare_series& other) const
{
    check_same_truncation(other);
    poincare_series out(truncation_);
    for (int d = 0; d <= truncation_; ++d)
        out.coeffs_[d] = coeffs_[d] + other.coeffs_[d];
    return out;
}

poincare_series poincare_series::operator-(const poincare_series& other) const
{
    check_same_truncation(other);
    poincare_series out(truncation_);
    for (int d = 0; d <= truncation_; ++d)
        out.coeffs_[d] = coeffs_[d] - other.coeffs_[d];
    return out;
}

poincare_series poincare_series::operator*(const poincare_series& other) const
{
    check_same_truncation(other);
    poincare_series out(truncation_);
    for (int i = 0; i <= truncation_; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (int j = 0; i + j <= truncation_; ++j)
            out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return out;
}

std::string poincare_series::to_string() const
{
    polynomial p(coeffs_);
    std::string body = poly_to_string(poly_trimmed(std::move(p)));
    std::ostringstream out;
    out << body << " + O(t^" << (truncation_ + 1) << ")";
    return out.str();
}

rational_expr::rational_expr(polynomial num, polynomial den)
    : num_(poly_trimmed(std::move(num))), den_(poly_trimmed(std::move(den)))
{
    if (den_.empty() || den_[0] != 1)
        throw std::invalid_argument("rational_expr: denominator constant term must be 1");
}

rational_expr rational_expr::from_polynomial(polynomial num)
{
    return rational_expr(std::move(num), polynomial{bigint(1)});
}

rational_expr rational_expr::operator*(const rational_expr& other) const
{
    return rational_expr(poly_mul(num_, other.num_), poly_mul(den_, other.den_));
}

rational_expr rational_expr::operator+(const rational_expr& other) const
{
    return rational_expr(
        poly_add(poly_mul(num_, other.den_), poly_mul(other.num_, den_)),
        poly_mul(den_, other.den_));
}

std::string rational_expr::to_string() const
{
    if (den_.size() == 1)
        return poly_to_string(num_);
    return "(" + poly_to_string(num_) + ") / (" + poly_to_string(den_) + ")";
}

poincare_series expand(const rational_expr& e, int truncation)
{
    const polynomial& num = e.num();
    const polynomial& den = e.den();
    poincare_series out(truncation);
    for (int d = 0; d <= truncation; ++d) {
        bigint c = d < static_cast<int>(num.size()) ? num[d] : bigint(0);
        const int jmax = std::min<int>(d, static_cast<int>(den.size()) - 1);
        for (int j = 1; j <= jmax; ++j)
            c -= den[j] * out.coeff(d - j);
        out.set_coeff(d, std::move(c));
    }
    return out;
}

laurent_polynomial::laurent_polynomial(int offset, std::vector<bigint> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
    while (!coeffs_.empty() && coeffs_.front() == 0) {
        coeffs_.erase(coeffs_.begin());
        ++offset_;
    }
    if (coeffs_.empty())
        offset_ = 0;
}

laurent_polynomial laurent_polynomial::from_terms(const std::map<int, bigint>& terms)
{
    std::map<int, bigint> nonzero;
    for (const auto& [d, c] : terms)
        if (c != 0)
            nonzero[d] = c;
    if (nonzero.empty())
        return laurent_polynomial();
    const int lo = nonzero.begin()->first;
    const int hi = nonzero.rbegin()->first;
    std::vector<bigint> coeffs(static_cast<std::size_t>(hi - lo) + 1, bigint(0));
    for (const auto& [d, c] : nonzero)
        coeffs[static_cast<std::size_t>(d - lo)] = c;
    return laurent_polynomial(lo, std::move(coeffs));
}

int laurent_polynomial::lowest_degree() const
{
    if (is_zero())
        throw std::logic_error("laurent_polynomial: zero polynomial has no degree");
    return offset_;
}

int laurent_polynomial::highest_degree() const
{
    if (is_zero())
        throw std::logic_error("laurent_polynomial: zero polynomial has no degree");
    return offset_ + static_cast<int>(coeffs_.size()) - 1;
}

bigint laurent_polynomial::coeff(int degree) const
{
    const int idx = degree - offset_;
    if (idx < 0 || idx >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[static_cast<std::size_t>(idx)];
}

std::map<int, bigint> laurent_polynomial::terms() const
{
    std::map<int, bigint> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            out[offset_ + static_cast<int>(i)] = coeffs_[i];
    return out;
}

laurent_polynomial laurent_polynomial::operator*(const laurent_polynomial& other) const
{
    if (is_zero() || other.is_zero())
        return laurent_polynomial();
    std::vector<bigint> out(coeffs_.size() + other.coeffs_.size() - 1, bigint(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return laurent_polynomial(offset_ + other.offset_, std::move(out));
}

laurent_polynomial laurent_polynomial::shifted(int degree_shift) const
{
    if (is_zero())
        return laurent_polynomial();
    return laurent_polynomial(offset_ + degree_shift, coeffs_);
}

bigint laurent_polynomial::sum_of_coefficients() const
{
    bigint s = 0;
    for (const bigint& c : coeffs_)
        s += c;
    return s;
}

std::string laurent_polynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, c0] : terms()) {
        bigint c = c0;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        if (d == 0) {
            out << c.get_str();
        } else {
            if (c != 1)
                out << c.get_str() << "*";
            out << "t";
            if (d != 1)
                out << "^" << d;
        }
    }
    return out.str();
}

bool poincare_dual_check(const laurent_polynomial& homology, const laurent_polynomial& borel_moore,
                         long long top_dim)
{
    std::map<int, bigint> reflected;
    for (const auto& [d, c] : homology.terms())
        reflected[static_cast<int>(top_dim - d)] = c;
    return laurent_polynomial::from_terms(reflected) == borel_moore;
}

bigint euler_char(const laurent_polynomial& p)
{
    bigint chi = 0;
    for (const auto& [d, c] : p.terms())
        chi += (d % 2 == 0) ? c : -c;
    return chi;
}

long long stable_range_bound(long long k, long long n, long long d)
{
    if (k <= n)
        throw std::invalid_argument("stable_range_bound: requires k > n");
    if (d < 0)
        throw std::invalid_argument("stable_range_bound: requires d >= 0");
    return (k - n) * (d + 1);
}

namespace {

rational_expr make(polynomial num, polynomial den)
{
    return rational_expr(std::move(num), std::move(den));
}

// Series of the general-maps row with m odd, M even; shared with the
// even-maps family: 1 + t^{M-m}(1+t^m)/(1-t^{2M-m-1}).
rational_expr odd_even_free_form(int m, int M)
{
    const polynomial den = poly_sub({bigint(1)}, poly_monomial(2 * M - m - 1));
    const polynomial num =
        poly_add(den, poly_mul(poly_monomial(M - m), poly_one_plus(m)));
    return make(num, den);
}

}  // namespace

rational_expr table_closed_form(const map_space_spec& spec)
{
    spec.validate();
    const int m = spec.m;
    const int M = spec.M;
    const bool m_odd = m % 2 == 1;
    const bool M_odd = M % 2 == 1;
    const polynomial one{bigint(1)};

    if (spec.family == map_family::lens_equivariant) {
        const polynomial den = poly_sub(one, poly_monomial(M - m));
        return spec.based ? make(one, den) : make(poly_one_plus(M), den);
    }

    if (m_odd && M_odd) {
        // All three families agree in this row.
        const polynomial den = poly_sub(one, poly_monomial(M - m));
        return spec.based ? make(one, den) : make(poly_one_plus(M), den);
    }

    switch (spec.family) {
    case map_family::even_maps:
        if (!m_odd) {
            return spec.based ? make(one, one) : make(poly_one_plus(M), one);
        } else {  // m odd, M even
            const polynomial den = poly_sub(one, poly_monomial(2 * M - m - 1));
            return spec.based ? make(poly_one_plus(M - m), den) : odd_even_free_form(m, M);
        }
    case map_family::odd_maps:
        if (!m_odd && !M_odd) {
            const polynomial den = poly_sub(one, poly_monomial(M - m));
            return spec.based ? make(poly_one_plus(M - 1), den)
                              : make(poly_one_plus(2 * M - 1), den);
        } else if (!m_odd && M_odd) {
            return spec.based ? make(one, one) : make(poly_one_plus(M), one);
        } else {  // m odd, M even
            const polynomial den = poly_sub(one, poly_monomial(2 * M - m - 1));
            return spec.based ? make(poly_one_plus(M - 1), den)
                              : make(poly_one_plus(2 * M - 1), den);
        }
    case map_family::general:
        if (!m_odd && !M_odd) {
            const polynomial den = poly_sub(one, poly_monomial(M - m));
            if (spec.based)
                return make(poly_one_plus(2 * M - m - 1), den);
            // t^M + (1 + t^{3M-m-1})/(1 - t^{M-m})
            const polynomial num =
                poly_add(poly_mul(poly_monomial(M), den), poly_one_plus(3 * M - m - 1));
            return make(num, den);
        } else if (!m_odd && M_odd) {
            return spec.based ? make(poly_one_plus(M - m), one)
                              : make(poly_mul(poly_one_plus(M), poly_one_plus(M - m)), one);
        } else {  // m odd, M even
            const polynomial den = poly_sub(one, poly_monomial(2 * M - m - 1));
            return spec.based ? make(poly_one_plus(M - m), den) : odd_even_free_form(m, M);
        }
    case map_family::lens_equivariant:
        break;  // handled above
    }
    throw std::logic_error("table_closed_form: unreachable");
}

}  // namespace eqmaps::series
