#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "valdim/polyring.hpp"

namespace valdim {

/// The invariance groups whose valuation dimensions the engine tabulates,
/// plus the unitary series used as a sanity utility.
enum class GroupTag { sp, sp_u1, sp_sp1, u_infty };

std::string group_name(GroupTag g);

/// Rational generating function of the global valuation dimensions
/// (numerator and denominator entered in the printed factored form).
RationalGF global_dim_series(GroupTag g);

/// Rational generating function of the invariant exterior-form dimensions:
/// 1/(1-x^2)^3, 1/((1-x^2)(1-x^4)) and 1/(1-x^4) for the three groups.
RationalGF exterior_dim_series(GroupTag g);

/// Bivariate rational form, used for the splitting functions and the closed
/// forms of the bivariate dimension series.
struct BiRational {
    BiIntPoly num;
    BiIntPoly den;
};

/// The splitting function for the group: the bivariate rational form whose
/// (x, xy)/(y, xy) difference equals (x-y) times the bivariate dimension
/// series.
BiRational splitting_form(GroupTag g);

/// Power-series coefficients of the splitting form evaluated at (-x, x);
/// the subtraction term in the global-dimension assembly. Throws
/// std::domain_error("substitution degenerates") if the substituted
/// denominator vanishes identically.
std::vector<std::int64_t> splitting_eval(GroupTag g, int terms);

/// Closed-form dimension of the degree-k global valuation space, evaluated
/// in exact arithmetic (the trigonometric and (-1)^k terms reduce to a
/// period-12 table of rationals). Throws std::domain_error("formula
/// transcription error") if the rational evaluation is not an integer.
std::int64_t global_dim(GroupTag g, int k);

/// Dimension of the degree-k invariant valuation space in the unitary case,
/// min(floor(k/2), floor((2n-k)/2)) + 1; requires 0 <= k <= 2n.
std::int64_t unitary_dim(int n, int k);

/// Poincare series of the global unitary valuations: 1/((1-x)(1-x^2)).
RationalGF unitary_global_series();

} // namespace valdim
