#ifndef EQMAPS_SERIES_HPP
#define EQMAPS_SERIES_HPP

#include <map>
#include <string>
#include <vector>

#include "eqmaps/mapspace.hpp"
#include "eqmaps/rationals.hpp"

namespace eqmaps::series {

// Dense integer polynomial, coefficients ascending in t; trailing zeros are
// trimmed, the zero polynomial is the empty vector.
using polynomial = std::vector<bigint>;

polynomial poly_trimmed(polynomial p);
polynomial poly_add(const polynomial& a, const polynomial& b);
polynomial poly_sub(const polynomial& a, const polynomial& b);
polynomial poly_mul(const polynomial& a, const polynomial& b);
// 1 + c * t^k
polynomial poly_one_plus(int k, long long c = 1);
polynomial poly_monomial(int k, long long c = 1);
std::string poly_to_string(const polynomial& p);

// Truncated integer power series in t: coefficients 0..T.
class poincare_series {
public:
    explicit poincare_series(int truncation);
    poincare_series(int truncation, std::vector<bigint> coeffs);

    int truncation() const { return truncation_; }
    const bigint& coeff(int d) const;
    void set_coeff(int d, bigint v);
    void add_coeff(int d, const bigint& v);
    const std::vector<bigint>& coeffs() const { return coeffs_; }

    poincare_series operator+(const poincare_series&) const;
    poincare_series operator-(const poincare_series&) const;
    poincare_series operator*(const poincare_series&) const;
    bool operator==(const poincare_series&) const = default;

    std::string to_string() const;

private:
    void check_same_truncation(const poincare_series&) const;

    int truncation_;
    std::vector<bigint> coeffs_;
};

// num(t) / den(t) with den(0) = 1, so the series expansion is well defined.
class rational_expr {
public:
    rational_expr(polynomial num, polynomial den);
    static rational_expr from_polynomial(polynomial num);

    const polynomial& num() const { return num_; }
    const polynomial& den() const { return den_; }

    rational_expr operator*(const rational_expr&) const;
    rational_expr operator+(const rational_expr&) const;

    std::string to_string() const;

private:
    polynomial num_;
    polynomial den_;
};

poincare_series expand(const rational_expr& e, int truncation);

// Finite-support Laurent polynomial; offset is the lowest stored exponent
// (may be negative). Zero is offset 0 with no coefficients.
class laurent_polynomial {
public:
    laurent_polynomial() = default;
    laurent_polynomial(int offset, std::vector<bigint> coeffs);
    static laurent_polynomial from_terms(const std::map<int, bigint>& terms);

    bool is_zero() const { return coeffs_.empty(); }
    int lowest_degree() const;
    int highest_degree() const;
    bigint coeff(int degree) const;
    std::map<int, bigint> terms() const;

    laurent_polynomial operator*(const laurent_polynomial&) const;
    laurent_polynomial shifted(int degree_shift) const;
    bool operator==(const laurent_polynomial&) const = default;

    bigint sum_of_coefficients() const;
    std::string to_string() const;

private:
    int offset_ = 0;
    std::vector<bigint> coeffs_;  // first and last entries nonzero unless empty
};

// True iff borel_moore(t) == t^top_dim * homology(1/t).
bool poincare_dual_check(const laurent_polynomial& homology, const laurent_polynomial& borel_moore,
                         long long top_dim);

// Alternating coefficient sum sum_d (-1)^d c_d.
bigint euler_char(const laurent_polynomial& p);

// (k - n)(d + 1); the dimension below which the non-resultant inclusion is a
// cohomology isomorphism. Rejects k <= n.
long long stable_range_bound(long long k, long long n, long long d);

// The closed-form Poincare series of the map-space family selected by spec:
// row by the parities of (m, M), column by the based flag.
rational_expr table_closed_form(const map_space_spec& spec);

}  // namespace eqmaps::series

#endif
