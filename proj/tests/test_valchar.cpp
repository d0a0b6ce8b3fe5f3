#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "valdim/genseries.hpp"
#include "valdim/valchar.hpp"

using namespace valdim;

namespace {

LaurentPoly lp(std::initializer_list<std::pair<int, std::int64_t>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += LaurentPoly::monomial(e, c);
    return p;
}

} // namespace

TEST_CASE("valuation character series, n=1") {
    const CharSeries s = valuation_char_series(1);
    CHECK(s.coeff_x(0) == LaurentPoly::one());
    CHECK(s.coeff_x(1) == LaurentPoly::one());
    CHECK(s.coeff_x(2) == lp({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}}));
    CHECK(s.coeff_x(3) == LaurentPoly::one());
    CHECK(s.coeff_x(4) == LaurentPoly::one());
    CHECK(s.degree() == 4);
}

TEST_CASE("valuation character series, n=2 spot values") {
    const CharSeries s = valuation_char_series(2);
    CHECK(s.coeff_x(0) == LaurentPoly::one());
    CHECK(s.coeff_x(3) == lp({{4, 2}, {2, 2}, {0, 5}, {-2, 2}, {-4, 2}}));
    CHECK(s.coeff_x(4) == lp({{8, 1}, {6, 1}, {4, 4}, {2, 4}, {0, 9},
                              {-2, 4}, {-4, 4}, {-6, 1}, {-8, 1}}));
    CHECK(s.coeff_x(6) == lp({{4, 1}, {2, 1}, {0, 3}, {-2, 1}, {-4, 1}}));
    CHECK(s.degree() == 8);
}

TEST_CASE("exterior character lookups") {
    CHECK(exterior_char(1, 2) == lp({{2, 1}, {0, 1}, {-2, 1}}));
    CHECK(exterior_char(2, 4) == lp({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}}));
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 4 * n; k += 2) CHECK(exterior_char(n, k).is_zero());
    CHECK(exterior_char(2, -1).is_zero());
    CHECK(exterior_char(2, 9).is_zero());
}

TEST_CASE("double-form character lookups") {
    CHECK(double_form_char(1, 2, 2) == lp({{4, 1}, {2, 2}, {0, 4}, {-2, 2}, {-4, 1}}));
    CHECK(double_form_char(1, 1, 3) == lp({{2, 1}, {0, 2}, {-2, 1}}));
    CHECK(double_form_char(1, 1, 2).is_zero());  // odd total degree
    CHECK(double_form_char(2, -1, 1).is_zero());
    CHECK(double_form_char(1, 5, 1).is_zero());  // index above 4n
    CHECK(double_form_char(0, 0, 0) == LaurentPoly::one());
}

TEST_CASE("double-form index symmetries") {
    for (int n = 0; n <= 2; ++n)
        for (int k = 0; k <= 4 * n; ++k)
            for (int l = 0; l <= 4 * n; ++l) {
                if ((k + l) % 2 != 0) continue;
                const LaurentPoly v = double_form_char(n, k, l);
                CHECK(v == double_form_char(n, l, k));
                CHECK(v == double_form_char(n, k, 4 * n - l));
            }
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> idx(0, 12);
    for (int i = 0; i < 200; ++i) {
        int k = idx(rng), l = idx(rng);
        if ((k + l) % 2 != 0) ++l;
        CHECK(double_form_char(3, k, l) == double_form_char(3, l, k));
        CHECK(double_form_char(3, k, l) == double_form_char(3, k, 12 - l));
    }
}

TEST_CASE("the two assembly routes agree") {
    for (int n = 1; n <= 4; ++n)
        CHECK(valuation_char_series(n) == valuation_char_series_degreewise(n));
}

TEST_CASE("valuation table golden rows") {
    const ValuationTable t2 = valuation_table(2);
    const std::vector<std::int64_t> sp2 = {1, 1, 7, 13, 29, 13, 7, 1, 1};
    const std::vector<std::int64_t> u12 = {1, 1, 3, 5, 9, 5, 3, 1, 1};
    const std::vector<std::int64_t> sp12 = {1, 1, 2, 3, 5, 3, 2, 1, 1};
    REQUIRE(t2.rows.size() == 9);
    for (int k = 0; k <= 8; ++k) {
        CHECK(t2.rows[static_cast<std::size_t>(k)].dim_sp == sp2[static_cast<std::size_t>(k)]);
        CHECK(t2.rows[static_cast<std::size_t>(k)].dim_sp_u1 == u12[static_cast<std::size_t>(k)]);
        CHECK(t2.rows[static_cast<std::size_t>(k)].dim_sp_sp1 == sp12[static_cast<std::size_t>(k)]);
    }

    const ValuationTable t3 = valuation_table(3);
    const std::vector<std::int64_t> sp3 = {1, 1, 7, 14, 41, 71, 111, 71, 41, 14, 7, 1, 1};
    REQUIRE(t3.rows.size() == 13);
    for (int k = 0; k <= 12; ++k)
        CHECK(t3.rows[static_cast<std::size_t>(k)].dim_sp == sp3[static_cast<std::size_t>(k)]);
}

TEST_CASE("valuation table decompositions, n=1 and n=2") {
    const ValuationTable t1 = valuation_table(1);
    for (int k : {0, 1, 3, 4})
        CHECK(t1.rows[static_cast<std::size_t>(k)].decomposition == RepElem::trivial());
    RepElem v4v0 = RepElem::irreducible(4) + RepElem::trivial();
    CHECK(t1.rows[2].decomposition == v4v0);

    const ValuationTable t2 = valuation_table(2);
    RepElem k2 = RepElem::irreducible(4) + RepElem::trivial().scaled(2);
    RepElem k3 = RepElem::irreducible(4).scaled(2) + RepElem::trivial().scaled(3);
    RepElem k4 = RepElem::irreducible(8) + RepElem::irreducible(4).scaled(3) +
                 RepElem::trivial().scaled(5);
    CHECK(t2.rows[2].decomposition == k2);
    CHECK(t2.rows[6].decomposition == k2);
    CHECK(t2.rows[3].decomposition == k3);
    CHECK(t2.rows[5].decomposition == k3);
    CHECK(t2.rows[4].decomposition == k4);
}

TEST_CASE("table structure: endpoints, palindromic dimensions, genuine multiplicities") {
    for (int n = 1; n <= 5; ++n) {
        const ValuationTable t = valuation_table(n);
        REQUIRE(static_cast<int>(t.rows.size()) == 4 * n + 1);
        for (int k : {0, 1, 4 * n - 1, 4 * n})
            CHECK(t.rows[static_cast<std::size_t>(k)].decomposition == RepElem::trivial());
        for (int k = 0; k <= 4 * n; ++k) {
            const auto& a = t.rows[static_cast<std::size_t>(k)];
            const auto& b = t.rows[static_cast<std::size_t>(4 * n - k)];
            CHECK(a.dim_sp == b.dim_sp);
            CHECK(a.dim_sp_u1 == b.dim_sp_u1);
            CHECK(a.dim_sp_sp1 == b.dim_sp_sp1);
            CHECK(a.decomposition.is_genuine());
        }
    }
}

TEST_CASE("stable range: table dimensions match the global series for k <= n") {
    for (int n = 1; n <= 4; ++n) {
        const ValuationTable t = valuation_table(n);
        const auto sp = expand_rational(global_dim_series(GroupTag::sp), n + 1);
        const auto u1 = expand_rational(global_dim_series(GroupTag::sp_u1), n + 1);
        const auto s1 = expand_rational(global_dim_series(GroupTag::sp_sp1), n + 1);
        for (int k = 0; k <= n; ++k) {
            CHECK(t.rows[static_cast<std::size_t>(k)].dim_sp == sp[static_cast<std::size_t>(k)]);
            CHECK(t.rows[static_cast<std::size_t>(k)].dim_sp_u1 == u1[static_cast<std::size_t>(k)]);
            CHECK(t.rows[static_cast<std::size_t>(k)].dim_sp_sp1 == s1[static_cast<std::size_t>(k)]);
        }
    }
}

// Not asserted by the source material; recorded as an observation. The full
// characters (not just dimensions) come out palindromic in the degree for
// every computed n.
TEST_CASE("observation (non-normative): characters are degree-palindromic for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        const CharSeries s = valuation_char_series(n);
        for (int k = 0; k <= 4 * n; ++k) CHECK(s.coeff_x(k) == s.coeff_x(4 * n - k));
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(valuation_char_series(0), std::invalid_argument);
    CHECK_THROWS_AS(valuation_table(0), std::invalid_argument);
}
