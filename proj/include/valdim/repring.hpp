#pragma once

#include <cstdint>
#include <map>

#include "valdim/polyring.hpp"

namespace valdim {

/// Element of the representation ring R SU(2): an integer combination of the
/// irreducibles V_l (dim l+1). Multiplicities may be negative (virtual
/// representations); zero multiplicities are never stored.
class RepElem {
public:
    RepElem() = default;

    static RepElem irreducible(int l);        // V_l
    static RepElem trivial() { return irreducible(0); }

    bool is_zero() const { return mults_.empty(); }
    std::int64_t mult(int l) const;
    const std::map<int, std::int64_t>& mults() const { return mults_; }

    /// True iff every stored multiplicity is >= 0 (a genuine representation).
    bool is_genuine() const;

    RepElem& operator+=(const RepElem& o);
    RepElem& operator-=(const RepElem& o);
    friend RepElem operator+(RepElem a, const RepElem& b) { return a += b; }
    friend RepElem operator-(RepElem a, const RepElem& b) { return a -= b; }
    RepElem operator-() const;
    RepElem scaled(std::int64_t c) const;

    bool operator==(const RepElem&) const = default;

    std::string to_string() const;  // e.g. "V8+3*V4+5*V0"

    void add(int l, std::int64_t m);

private:
    std::map<int, std::int64_t> mults_;
};

/// Clebsch-Gordan product, extended bilinearly:
/// V_k (x) V_l = V_{k+l} + V_{k+l-2} + ... + V_{|k-l|}.
RepElem tensor_product(const RepElem& a, const RepElem& b);
inline RepElem operator*(const RepElem& a, const RepElem& b) { return tensor_product(a, b); }

/// Sym^k V_2 = V_{2k} + V_{2k-4} + ... (one summand per l = 0..floor(k/2)).
RepElem sym_power_v2(int k);

/// ch(V_l) = t^l + t^{l-2} + ... + t^{-l}, extended linearly. A ring
/// homomorphism onto palindromic Laurent polynomials.
LaurentPoly character(const RepElem& a);

/// Inverse of character on palindromic input, by stripping the top-degree
/// term repeatedly. Throws std::domain_error("not a virtual SU(2) character")
/// on non-palindromic input.
RepElem decompose_character(const LaurentPoly& p);

/// dim(sum m_l V_l) = sum m_l (l+1).
std::int64_t dim_full(const RepElem& a);
/// Number of summands with even l, counted with multiplicity (equivalently
/// the t^0 coefficient of the character).
std::int64_t dim_even_part(const RepElem& a);
/// Multiplicity of V_0.
std::int64_t mult_v0(const RepElem& a);

} // namespace valdim
