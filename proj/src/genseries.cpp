#include "valdim/genseries.hpp"

#include <numeric>
#include <stdexcept>

namespace valdim {

namespace {

IntPoly one_minus_xk(int k) { return IntPoly::one() - IntPoly::monomial(k, 1); }
IntPoly one_plus_xk(int k) { return IntPoly::one() + IntPoly::monomial(k, 1); }

using B = BiIntPoly;
B C(std::int64_t c) { return B::monomial(0, 0, c); }
B X(int i) { return B::monomial(i, 0, 1); }
B Y(int j) { return B::monomial(0, j, 1); }
B XY(int i, int j) { return B::monomial(i, j, 1); }

// Exact rational on int64, just enough for the closed-form dimension
// polynomials.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Frac of(std::int64_t n, std::int64_t d) {
        Frac f{n, d};
        f.normalize();
        return f;
    }
    void normalize() {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) { num = checked_sub(0, num); den = checked_sub(0, den); }
        const std::int64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    Frac operator+(const Frac& o) const {
        return of(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                  checked_mul(den, o.den));
    }
    Frac operator*(const Frac& o) const {
        return of(checked_mul(num, o.num), checked_mul(den, o.den));
    }
};

Frac operator*(std::int64_t c, const Frac& f) { return Frac::of(checked_mul(c, f.num), f.den); }

// i^k + (-i)^k, period 4.
std::int64_t i_pow_sum(int k) {
    static constexpr std::int64_t table[4] = {2, 0, -2, 0};
    return table[k % 4];
}

// sqrt(3) * sin(pi k / 3), period 6, always a multiple of 3/2.
Frac sqrt3_sin(int k) {
    static constexpr std::int64_t twice[6] = {0, 3, 3, 0, -3, -3};
    return Frac::of(twice[k % 6], 2);
}

std::int64_t sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

} // namespace

std::string group_name(GroupTag g) {
    switch (g) {
        case GroupTag::sp: return "sp";
        case GroupTag::sp_u1: return "sp-u1";
        case GroupTag::sp_sp1: return "sp-sp1";
        case GroupTag::u_infty: return "u";
    }
    throw std::logic_error("bad group tag");
}

RationalGF global_dim_series(GroupTag g) {
    switch (g) {
        case GroupTag::sp:
            return {IntPoly{1, -3, 6, -3, 1},
                    one_minus_xk(1).pow(7) * one_plus_xk(1).pow(3)};
        case GroupTag::sp_u1:
            return {IntPoly{1, -2, 2, 0, 2, -2, 1},
                    one_plus_xk(2) * IntPoly{1, 1, 1} * one_plus_xk(1).pow(2) *
                        one_minus_xk(1).pow(6)};
        case GroupTag::sp_sp1:
            return {IntPoly{1, 0, 0, 1, 2, 1},
                    one_plus_xk(2) * IntPoly{1, 1, 1} * one_plus_xk(1).pow(2) *
                        one_minus_xk(1).pow(4)};
        case GroupTag::u_infty:
            return unitary_global_series();
    }
    throw std::logic_error("bad group tag");
}

RationalGF exterior_dim_series(GroupTag g) {
    switch (g) {
        case GroupTag::sp:
            return {IntPoly::one(), one_minus_xk(2).pow(3)};
        case GroupTag::sp_u1:
            return {IntPoly::one(), one_minus_xk(2) * one_minus_xk(4)};
        case GroupTag::sp_sp1:
            return {IntPoly::one(), one_minus_xk(4)};
        case GroupTag::u_infty:
            break;
    }
    throw std::invalid_argument("no exterior-dimension series for the unitary tag");
}

BiRational splitting_form(GroupTag g) {
    switch (g) {
        case GroupTag::sp:
            // x(1-xy) / ((1-x)^3 (1-y)^7)
            return {X(1) * (C(1) - XY(1, 1)),
                    (C(1) - X(1)).pow(3) * (C(1) - Y(1)).pow(7)};
        case GroupTag::sp_u1: {
            B num = -X(1) * (C(1) + C(3) * Y(2) + C(3) * Y(3) + Y(5)) +
                    X(2) * (C(3) * Y(6) - C(3) * Y(1) + Y(2) - Y(4) - Y(5) + C(1)) +
                    X(3) * (C(-4) * Y(2) + C(2) * Y(1) - C(2) * Y(6) + C(2) * Y(7) - C(2) + C(4) * Y(5)) +
                    X(4) * (-Y(5) + Y(2) - C(3) * Y(1) + C(3) * Y(6) + Y(3) - Y(7)) +
                    X(5) * (Y(7) + Y(2) + C(3) * Y(5) + C(3) * Y(4));
            B den = (C(-1) + Y(1)).pow(6) * (C(-1) + XY(2, 1)) * (C(-1) + X(1)).pow(2) *
                    (C(1) + X(2)) * (C(1) + Y(1)).pow(2) * (C(1) + Y(2)) *
                    (Y(2) + Y(1) + C(1));
            return {num, den};
        }
        case GroupTag::sp_sp1: {
            // Sign-corrected transcription; see README notes on the closed forms.
            B num = -(X(1) * (C(1) + Y(1)) * (Y(5) + Y(4) + C(2) * Y(3) + C(2) * Y(2) + C(1)) +
                      X(2) * (C(2) * Y(5) + Y(3) - C(1)) +
                      X(3) * (-Y(7) - Y(5) + Y(4) + Y(3) + Y(2) + C(1)) +
                      X(4) * (Y(1) + C(1)) * (C(2) * Y(4) + C(3) * Y(2) + Y(1) + C(1)) -
                      X(5) * Y(1) * (C(-1) + Y(1)) * (C(1) + Y(1)) * (Y(2) + C(1)) *
                          (Y(2) + Y(1) + C(1)));
            B den = (-X(3) + X(2) - X(1) + C(1)) * (C(-1) + Y(2)) * (C(-1) + Y(1)).pow(2) *
                    (C(-1) + XY(2, 1)) * (Y(6) + Y(5) + Y(4) - Y(2) - Y(1) - C(1));
            return {num, den};
        }
        case GroupTag::u_infty:
            break;
    }
    throw std::invalid_argument("no splitting form for the unitary tag");
}

std::vector<std::int64_t> splitting_eval(GroupTag g, int terms) {
    const BiRational form = splitting_form(g);
    const IntPoly den = form.den.eval_neg_x_x();
    if (den.is_zero()) throw std::domain_error("substitution degenerates");
    return expand_rational({form.num.eval_neg_x_x(), den}, terms);
}

std::int64_t global_dim(GroupTag g, int k) {
    if (k < 0) throw std::invalid_argument("degree must be >= 0");
    const std::int64_t kk = k;
    switch (g) {
        case GroupTag::sp: {
            std::int64_t poly = checked_add(
                checked_mul(2, checked_mul(kk, checked_mul(kk, checked_mul(kk, kk)))),
                checked_mul(24, checked_mul(kk, checked_mul(kk, kk))));
            poly = checked_add(poly, checked_mul(100, checked_mul(kk, kk)));
            poly = checked_add(poly, checked_mul(168, kk));
            poly = checked_add(poly, 405);
            poly = checked_add(poly, checked_mul(315, sign_pow(k)));
            const std::int64_t v = checked_mul(checked_mul(kk + 4, kk + 2), poly);
            if (v % 5760 != 0) throw std::domain_error("formula transcription error");
            return v / 5760;
        }
        case GroupTag::sp_u1: {
            Frac s = Frac::of(i_pow_sum(k), 8);
            s = s + Frac::of(4 * sign_pow(k + 1), 81) * sqrt3_sin(k);
            s = s + Frac::of(checked_mul(checked_add(15, checked_mul(5, kk)), sign_pow(k)), 64);
            s = s + Frac::of(33, 64);
            s = s + kk * Frac::of(421, 960);
            s = s + checked_mul(kk, kk) * Frac::of(5, 24);
            s = s + checked_mul(kk, checked_mul(kk, kk)) * Frac::of(7, 108);
            s = s + checked_mul(kk, checked_mul(kk, checked_mul(kk, kk))) * Frac::of(1, 96);
            s = s + checked_mul(kk, checked_mul(kk, checked_mul(kk, checked_mul(kk, kk)))) *
                        Frac::of(1, 1440);
            if (s.den != 1) throw std::domain_error("formula transcription error");
            return s.num;
        }
        case GroupTag::sp_sp1: {
            Frac s = Frac::of(checked_mul(3, i_pow_sum(k)), 16);
            s = s + Frac::of(2 * sign_pow(k + 1), 27) * sqrt3_sin(k);
            s = s + Frac::of(checked_mul(checked_add(5, kk), sign_pow(k)), 32);
            s = s + Frac::of(15, 32);
            s = s + kk * Frac::of(37, 96);
            s = s + checked_mul(kk, kk) * Frac::of(3, 16);
            s = s + checked_mul(kk, checked_mul(kk, kk)) * Frac::of(5, 144);
            if (s.den != 1) throw std::domain_error("formula transcription error");
            return s.num;
        }
        case GroupTag::u_infty:
            break;
    }
    throw std::invalid_argument("no closed-form dimension for the unitary tag");
}

std::int64_t unitary_dim(int n, int k) {
    if (n < 0 || k < 0 || k > 2 * n) throw std::invalid_argument("degree out of range");
    return std::min(k / 2, (2 * n - k) / 2) + 1;
}

RationalGF unitary_global_series() {
    return {IntPoly::one(), one_minus_xk(1) * one_minus_xk(2)};
}

} // namespace valdim
