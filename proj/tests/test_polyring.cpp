#include <doctest.h>

#include <limits>
#include <random>

#include "oracles.hpp"
#include "valdim/genseries.hpp"
#include "valdim/polyring.hpp"

using namespace valdim;

namespace {

LaurentPoly lp(std::initializer_list<std::pair<int, std::int64_t>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += LaurentPoly::monomial(e, c);
    return p;
}

} // namespace

TEST_CASE("laurent basics") {
    const LaurentPoly p = lp({{2, 1}, {0, 1}, {-2, 1}});
    CHECK(p.eval_at_one() == 3);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.is_palindromic());
    CHECK(lp({{4, 1}, {2, 1}}).substitute_t_inverse() == lp({{-4, 1}, {-2, 1}}));
    const LaurentPoly t_plus_tinv = lp({{1, 1}, {-1, 1}});
    CHECK(t_plus_tinv * t_plus_tinv == lp({{2, 1}, {0, 2}, {-2, 1}}));
    CHECK_FALSE(lp({{1, 1}, {0, 1}}).is_palindromic());
    CHECK((p - p).is_zero());
    CHECK(p.to_string() == "t^2 + 1 + t^-2");
}

TEST_CASE("laurent and charseries ring axioms on random inputs") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 300; ++i) {
        const LaurentPoly a = testing::random_laurent(rng);
        const LaurentPoly b = testing::random_laurent(rng);
        const LaurentPoly c = testing::random_laurent(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    std::uniform_int_distribution<int> xe(0, 4);
    auto random_series = [&](int terms) {
        CharSeries s;
        for (int i = 0; i < terms; ++i) s.add_term(xe(rng), testing::random_laurent(rng, 3, 5, 2));
        return s;
    };
    for (int i = 0; i < 150; ++i) {
        const CharSeries a = random_series(3);
        const CharSeries b = random_series(3);
        const CharSeries c = random_series(2);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * CharSeries::one() == a);
    }
}

TEST_CASE("charseries ops") {
    CharSeries s = CharSeries::monomial_x(0, LaurentPoly::one());
    CHECK(s.shift_x(1) == CharSeries::monomial_x(1, LaurentPoly::one()));
    CharSeries e;
    e.add_term(2, lp({{2, 1}, {0, 1}, {-2, 1}}));
    e.add_term(0, LaurentPoly::one());
    CHECK(e.coeff_x(2) == lp({{2, 1}, {0, 1}, {-2, 1}}));
    CHECK(e.coeff_x(5).is_zero());
    CHECK(e.degree() == 2);
    CHECK(e.scaled_by(LaurentPoly::constant(2)).coeff_x(0) == LaurentPoly::constant(2));
    CHECK_THROWS_AS(s.add_term(-1, LaurentPoly::one()), std::invalid_argument);
}

TEST_CASE("overflow is detected, not wrapped") {
    const auto big = LaurentPoly::monomial(0, std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + LaurentPoly::one(), ArithmeticOverflow);
    CHECK_THROWS_AS(big * LaurentPoly::constant(2), ArithmeticOverflow);
    IntPoly p({std::numeric_limits<std::int64_t>::max()});
    CHECK_THROWS_AS(p + IntPoly({1}), ArithmeticOverflow);
}

TEST_CASE("expand_rational examples") {
    CHECK(expand_rational({IntPoly::one(), IntPoly{1, -1}}, 4) ==
          std::vector<std::int64_t>{1, 1, 1, 1});
    const RationalGF u_inf = {IntPoly::one(), IntPoly{1, -1} * IntPoly{1, 0, -1}};
    CHECK(expand_rational(u_inf, 6) == std::vector<std::int64_t>{1, 1, 2, 2, 3, 3});
    const auto sp = global_dim_series(GroupTag::sp);
    CHECK(expand_rational(sp, 11) ==
          std::vector<std::int64_t>{1, 1, 7, 14, 42, 84, 182, 330, 603, 1001, 1645});
}

TEST_CASE("expand_rational error cases") {
    CHECK_THROWS_AS(expand_rational({IntPoly::one(), IntPoly{0, 1}}, 3), std::domain_error);
    CHECK_THROWS_AS(expand_rational({IntPoly::one(), IntPoly{2, 1}}, 3), std::domain_error);
    // constant term -1 is allowed
    CHECK(expand_rational({IntPoly{-1}, IntPoly{-1, 1}}, 3) ==
          std::vector<std::int64_t>{1, 1, 1});
}

TEST_CASE("expand_rational agrees with the long-division oracle") {
    for (GroupTag g : {GroupTag::sp, GroupTag::sp_u1, GroupTag::sp_sp1, GroupTag::u_infty}) {
        const RationalGF gf = global_dim_series(g);
        CHECK(expand_rational(gf, 30) == testing::long_division_expand(gf.num, gf.den, 30));
    }
    for (GroupTag g : {GroupTag::sp, GroupTag::sp_u1, GroupTag::sp_sp1}) {
        const RationalGF gf = exterior_dim_series(g);
        CHECK(expand_rational(gf, 30) == testing::long_division_expand(gf.num, gf.den, 30));
    }
}

TEST_CASE("intpoly arithmetic") {
    const IntPoly a{1, -1};
    CHECK(a.pow(2) == IntPoly{1, -2, 1});
    CHECK(a * IntPoly{1, 1} == IntPoly{1, 0, -1});
    CHECK((a - a).is_zero());
    CHECK(IntPoly{0, 0, 0}.is_zero());
    CHECK(IntPoly::monomial(3, 2).degree() == 3);
}

TEST_CASE("bivariate polynomial substitutions") {
    // p = x + y^2
    const BiIntPoly p = BiIntPoly::var_x() + BiIntPoly::monomial(0, 2, 1);
    // p(x, xy) = x + x^2 y^2
    CHECK(p.substitute_second_xy() ==
          BiIntPoly::var_x() + BiIntPoly::monomial(2, 2, 1));
    // p(y, xy) = y + x^2 y^2
    CHECK(p.substitute_first_y_second_xy() ==
          BiIntPoly::var_y() + BiIntPoly::monomial(2, 2, 1));
    // p(-x, -y) = -x + y^2
    CHECK(p.substitute_negate_both() ==
          BiIntPoly::monomial(1, 0, -1) + BiIntPoly::monomial(0, 2, 1));
    // (x - y) at (-x, x) is -2x
    const BiIntPoly xmy = BiIntPoly::var_x() - BiIntPoly::var_y();
    CHECK(xmy.eval_neg_x_x() == IntPoly{0, -2});
    // (1 - xy) at (-x, x) is 1 + x^2
    const BiIntPoly one_m_xy = BiIntPoly::one() - BiIntPoly::monomial(1, 1, 1);
    CHECK(one_m_xy.eval_neg_x_x() == IntPoly{1, 0, 1});
    CHECK((p * p).coeff(1, 2) == 2);
    CHECK(p.pow(2) == p * p);
}
