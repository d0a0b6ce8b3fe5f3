#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "valdim/ints.hpp"

namespace valdim {

/// Exact Laurent polynomial in one variable t with int64 coefficients.
/// Canonical form: no stored zero coefficients; equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(int exp, std::int64_t c);
    static LaurentPoly constant(std::int64_t c) { return monomial(0, c); }
    static LaurentPoly one() { return constant(1); }

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t coeff(int exp) const;
    const std::map<int, std::int64_t>& coeffs() const { return coeffs_; }

    int min_exp() const;  // requires non-zero
    int max_exp() const;  // requires non-zero

    std::int64_t eval_at_one() const;
    LaurentPoly substitute_t_inverse() const;
    bool is_palindromic() const;  // invariant under t <-> 1/t

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    LaurentPoly scaled(std::int64_t c) const;

    bool operator==(const LaurentPoly&) const = default;

    /// Rendering like "t^4 + 2 + t^-4", for reports and CLI output.
    std::string to_string() const;

private:
    void set(int exp, std::int64_t c);
    std::map<int, std::int64_t> coeffs_;
};

/// Polynomial in x with LaurentPoly coefficients; exponents are >= 0.
class CharSeries {
public:
    CharSeries() = default;

    static CharSeries one() { return monomial_x(0, LaurentPoly::one()); }
    static CharSeries monomial_x(int xexp, LaurentPoly c);

    bool is_zero() const { return coeffs_.empty(); }
    LaurentPoly coeff_x(int k) const;
    const std::map<int, LaurentPoly>& coeffs() const { return coeffs_; }
    int degree() const;  // -1 for the zero series

    CharSeries shift_x(int k) const;               // multiply by x^k
    CharSeries scaled_by(const LaurentPoly& c) const;

    CharSeries& operator+=(const CharSeries& o);
    CharSeries& operator-=(const CharSeries& o);
    friend CharSeries operator+(CharSeries a, const CharSeries& b) { return a += b; }
    friend CharSeries operator-(CharSeries a, const CharSeries& b) { return a -= b; }
    friend CharSeries operator*(const CharSeries& a, const CharSeries& b);

    bool operator==(const CharSeries&) const = default;

    void add_term(int xexp, const LaurentPoly& c);

private:
    std::map<int, LaurentPoly> coeffs_;
};

/// Dense integer polynomial in x; trailing zeros are trimmed.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<std::int64_t> ascending);
    explicit IntPoly(std::vector<std::int64_t> ascending);

    static IntPoly one() { return IntPoly({1}); }
    static IntPoly monomial(int exp, std::int64_t c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::int64_t coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : 0;
    }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly pow(int e) const;

    bool operator==(const IntPoly&) const = default;

private:
    void trim();
    std::vector<std::int64_t> c_;
};

/// numerator/denominator pair expandable as a power series at x = 0.
struct RationalGF {
    IntPoly num;
    IntPoly den;
};

/// First `terms` power-series coefficients of num/den, by the linear
/// recurrence induced by the denominator. The denominator must have constant
/// term +1 or -1 so the recurrence stays in exact integers.
std::vector<std::int64_t> expand_rational(const RationalGF& gf, int terms);

/// Sparse bivariate integer polynomial in (x, y). Carrier for the printed
/// two-variable numerators/denominators and for denominator-cleared identity
/// checks; only the monomial substitutions the checks need are provided.
class BiIntPoly {
public:
    BiIntPoly() = default;

    static BiIntPoly monomial(int i, int j, std::int64_t c);
    static BiIntPoly one() { return monomial(0, 0, 1); }
    static BiIntPoly var_x() { return monomial(1, 0, 1); }
    static BiIntPoly var_y() { return monomial(0, 1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t coeff(int i, int j) const;
    const std::map<std::pair<int, int>, std::int64_t>& coeffs() const { return coeffs_; }
    int degree_x() const;
    int degree_y() const;

    BiIntPoly& operator+=(const BiIntPoly& o);
    BiIntPoly& operator-=(const BiIntPoly& o);
    friend BiIntPoly operator+(BiIntPoly a, const BiIntPoly& b) { return a += b; }
    friend BiIntPoly operator-(BiIntPoly a, const BiIntPoly& b) { return a -= b; }
    friend BiIntPoly operator*(const BiIntPoly& a, const BiIntPoly& b);
    BiIntPoly operator-() const;
    BiIntPoly pow(int e) const;

    /// p(x, y) -> p(x, x*y): exponent map (i, j) -> (i+j, j).
    BiIntPoly substitute_second_xy() const;
    /// p(x, y) -> p(y, x*y): exponent map (i, j) -> (j, i+j).
    BiIntPoly substitute_first_y_second_xy() const;
    /// p(x, y) -> p(-x, -y): negate odd-total-degree monomials.
    BiIntPoly substitute_negate_both() const;
    /// p(x, y) -> p(-x, x) as a univariate polynomial.
    IntPoly eval_neg_x_x() const;

    bool operator==(const BiIntPoly&) const = default;

private:
    void set(int i, int j, std::int64_t c);
    std::map<std::pair<int, int>, std::int64_t> coeffs_;
};

} // namespace valdim
