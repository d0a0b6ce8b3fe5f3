#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "valdim/partitions.hpp"
#include "valdim/polyring.hpp"

namespace valdim {

/// Content vector for tableau counting; order significant, zero parts allowed.
using Composition = std::vector<int>;

/// Number of semistandard tableaux of the given shape and content (rows
/// weakly increasing, columns strictly increasing). Zero when the weights
/// differ or the shape does not dominate the sorted content; invariant under
/// permuting the content. Memoized; safe to call from multiple threads.
std::int64_t kostka_number(const YoungDiagram& shape, const Composition& content);

/// One argument of a Schur specialization: the monomial t^t_exp * x^x_exp.
struct SpecArg {
    int t_exp;
    int x_exp;
};

inline constexpr SpecArg kArgTX{1, 1};        // t*x
inline constexpr SpecArg kArgTInvX{-1, 1};    // x/t
inline constexpr SpecArg kArgT{1, 0};         // t
inline constexpr SpecArg kArgTInv{-1, 0};     // 1/t

/// Schur polynomial of the shape evaluated at the given monomials, via the
/// Kostka-sum definition: sum over compositions mu of |shape| with one part
/// per argument of K_{shape,mu} * prod args[i]^mu[i]. Zero when the shape is
/// deeper than the argument list.
CharSeries schur_specialized(const YoungDiagram& shape, std::span<const SpecArg> args);

/// Character series of the invariant exterior forms in quaternionic dimension
/// n: the sum of s_lambda(tx, x/t) over even diagrams with first part <= 2n.
/// Only diagrams of depth <= 2 contribute. x-degree <= 4n.
CharSeries exterior_char_series(int n);

/// Character series of the weight-2m invariant double forms over an
/// n-dimensional space: the sum of s_lambda(tx, x/t, t, 1/t) over even
/// diagrams with first part <= 2n and weight 2m. Only depth <= 4 contributes;
/// the sum may be empty (zero series). n = 0 gives 1 for m = 0, else 0.
CharSeries double_form_char_series(int n, int m);

} // namespace valdim
