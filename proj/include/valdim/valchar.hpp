#pragma once

#include <cstdint>
#include <vector>

#include "valdim/polyring.hpp"
#include "valdim/repring.hpp"
#include "valdim/schur.hpp"

namespace valdim {

/// Character of the degree-k invariant exterior forms in quaternionic
/// dimension n: the x^k coefficient of exterior_char_series(n). Zero for odd
/// k and outside 0 <= k <= 4n.
LaurentPoly exterior_char(int n, int k);

/// Character of the (k,l) invariant double forms over an n-dimensional space:
/// the x^k coefficient of double_form_char_series(n, (k+l)/2). Zero when k+l
/// is odd, when either index is negative, or when either index exceeds 4n.
/// Satisfies the index symmetries (k,l) = (l,k) = (k, 4n-l).
LaurentPoly double_form_char(int n, int k, int l);

/// Character series of the k-homogeneous invariant valuation spaces in
/// quaternionic dimension n, assembled from the exterior and double-form
/// series with the two fixed Laurent prefactors. x-degree <= 4n; every
/// coefficient is a genuine character.
CharSeries valuation_char_series(int n);

/// Same totals assembled degree by degree from the alternating sum of
/// exterior and double-form characters (independent index bookkeeping; the
/// two routes coincide exactly).
CharSeries valuation_char_series_degreewise(int n);

/// Decompositions and dimensions of the invariant valuation spaces for
/// k = 0..4n under all three groups.
struct ValuationTable {
    struct Row {
        int k = 0;
        RepElem decomposition;
        std::int64_t dim_sp = 0;      // full dimension
        std::int64_t dim_sp_u1 = 0;   // even-index multiplicity count
        std::int64_t dim_sp_sp1 = 0;  // multiplicity of V_0
    };
    int n = 0;
    std::vector<Row> rows;
};

/// Decompose every coefficient of valuation_char_series(n) and apply the
/// three dimension functionals. Throws std::domain_error("character is not a
/// genuine representation") if any multiplicity comes out negative.
ValuationTable valuation_table(int n);

} // namespace valdim
