#include "valdim/valchar.hpp"

#include <stdexcept>

namespace valdim {

namespace {

// 1 + x(t^4 + t^-4) + x^2
CharSeries prefactor_middle() {
    CharSeries s = CharSeries::one();
    s.add_term(1, LaurentPoly::monomial(4, 1) + LaurentPoly::monomial(-4, 1));
    s.add_term(2, LaurentPoly::one());
    return s;
}

// x(1 + x(t^4 + 1 + t^-4) + x^2)
CharSeries prefactor_last() {
    CharSeries s;
    s.add_term(1, LaurentPoly::one());
    s.add_term(2, LaurentPoly::monomial(4, 1) + LaurentPoly::one() + LaurentPoly::monomial(-4, 1));
    s.add_term(3, LaurentPoly::one());
    return s;
}

} // namespace

LaurentPoly exterior_char(int n, int k) {
    if (k < 0 || k > 4 * n) return {};
    return exterior_char_series(n).coeff_x(k);
}

LaurentPoly double_form_char(int n, int k, int l) {
    if (k < 0 || l < 0) return {};
    if ((k + l) % 2 != 0) return {};
    if (k > 4 * n || l > 4 * n) return {};
    return double_form_char_series(n, (k + l) / 2).coeff_x(k);
}

CharSeries valuation_char_series(int n) {
    if (n < 1) throw std::invalid_argument("quaternionic dimension must be >= 1");
    CharSeries s = exterior_char_series(n);
    s -= double_form_char_series(n - 1, 2 * n);
    s -= prefactor_middle() * double_form_char_series(n - 1, 2 * n - 1);
    s += prefactor_last() * double_form_char_series(n - 1, 2 * n - 2);
    return s;
}

CharSeries valuation_char_series_degreewise(int n) {
    if (n < 1) throw std::invalid_argument("quaternionic dimension must be >= 1");
    const int nn = n - 1;
    const LaurentPoly minus_v4_plus_v2 =
        character(RepElem::irreducible(2) - RepElem::irreducible(4));
    const LaurentPoly v4_minus_v2_plus_v0 = character(
        RepElem::irreducible(4) - RepElem::irreducible(2) + RepElem::irreducible(0));

    CharSeries out;
    for (int k = 0; k <= 4 * n; ++k) {
        LaurentPoly v = exterior_char(n, k);
        v -= double_form_char(nn, k, k - 2);
        v -= double_form_char(nn, k, k - 4);
        v += double_form_char(nn, k - 1, k - 1);
        v += minus_v4_plus_v2 * double_form_char(nn, k - 1, k - 3);
        v += v4_minus_v2_plus_v0 * double_form_char(nn, k - 2, k - 2);
        v -= double_form_char(nn, k - 2, k - 4);
        v += double_form_char(nn, k - 3, k - 3);
        out.add_term(k, v);
    }
    return out;
}

ValuationTable valuation_table(int n) {
    const CharSeries cs = valuation_char_series(n);
    ValuationTable t;
    t.n = n;
    t.rows.reserve(static_cast<std::size_t>(4 * n + 1));
    for (int k = 0; k <= 4 * n; ++k) {
        ValuationTable::Row row;
        row.k = k;
        row.decomposition = decompose_character(cs.coeff_x(k));
        if (!row.decomposition.is_genuine())
            throw std::domain_error("character is not a genuine representation");
        row.dim_sp = dim_full(row.decomposition);
        row.dim_sp_u1 = dim_even_part(row.decomposition);
        row.dim_sp_sp1 = mult_v0(row.decomposition);
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace valdim
