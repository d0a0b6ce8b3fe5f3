#include "valdim/repring.hpp"

#include <sstream>
#include <stdexcept>

namespace valdim {

RepElem RepElem::irreducible(int l) {
    if (l < 0) throw std::invalid_argument("irreducible index must be >= 0");
    RepElem r;
    r.mults_[l] = 1;
    return r;
}

std::int64_t RepElem::mult(int l) const {
    auto it = mults_.find(l);
    return it == mults_.end() ? 0 : it->second;
}

bool RepElem::is_genuine() const {
    for (const auto& [l, m] : mults_)
        if (m < 0) return false;
    return true;
}

void RepElem::add(int l, std::int64_t m) {
    if (l < 0) throw std::invalid_argument("irreducible index must be >= 0");
    auto it = mults_.find(l);
    const std::int64_t v = checked_add(it == mults_.end() ? 0 : it->second, m);
    if (v == 0) {
        if (it != mults_.end()) mults_.erase(it);
    } else {
        mults_[l] = v;
    }
}

RepElem& RepElem::operator+=(const RepElem& o) {
    for (const auto& [l, m] : o.mults_) add(l, m);
    return *this;
}

RepElem& RepElem::operator-=(const RepElem& o) {
    for (const auto& [l, m] : o.mults_) add(l, checked_sub(0, m));
    return *this;
}

RepElem RepElem::operator-() const { return scaled(-1); }

RepElem RepElem::scaled(std::int64_t c) const {
    RepElem r;
    if (c == 0) return r;
    for (const auto& [l, m] : mults_) r.mults_[l] = checked_mul(m, c);
    return r;
}

std::string RepElem::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = mults_.rbegin(); it != mults_.rend(); ++it) {
        auto [l, m] = *it;
        if (first) {
            if (m < 0) os << "-";
        } else {
            os << (m < 0 ? "-" : "+");
        }
        std::int64_t a = m < 0 ? -m : m;
        if (a != 1) os << a << "*";
        os << "V" << l;
        first = false;
    }
    return os.str();
}

RepElem tensor_product(const RepElem& a, const RepElem& b) {
    RepElem r;
    for (const auto& [k, mk] : a.mults())
        for (const auto& [l, ml] : b.mults()) {
            const std::int64_t m = checked_mul(mk, ml);
            for (int j = std::abs(k - l); j <= k + l; j += 2) r.add(j, m);
        }
    return r;
}

RepElem sym_power_v2(int k) {
    if (k < 0) throw std::invalid_argument("symmetric power must be >= 0");
    RepElem r;
    for (int l = 0; l <= k / 2; ++l) r.add(2 * k - 4 * l, 1);
    return r;
}

LaurentPoly character(const RepElem& a) {
    LaurentPoly p;
    for (const auto& [l, m] : a.mults()) {
        LaurentPoly ch;
        for (int j = 0; j <= l; ++j) ch += LaurentPoly::monomial(2 * j - l, 1);
        p += ch.scaled(m);
    }
    return p;
}

RepElem decompose_character(const LaurentPoly& p) {
    if (!p.is_palindromic()) throw std::domain_error("not a virtual SU(2) character");
    LaurentPoly rem = p;
    RepElem out;
    while (!rem.is_zero()) {
        const int d = rem.max_exp();
        if (d < 0) throw std::domain_error("not a virtual SU(2) character");
        const std::int64_t c = rem.coeff(d);
        out.add(d, c);
        rem -= character(RepElem::irreducible(d)).scaled(c);
    }
    return out;
}

std::int64_t dim_full(const RepElem& a) {
    std::int64_t s = 0;
    for (const auto& [l, m] : a.mults()) s = checked_add(s, checked_mul(m, l + 1));
    return s;
}

std::int64_t dim_even_part(const RepElem& a) {
    std::int64_t s = 0;
    for (const auto& [l, m] : a.mults())
        if (l % 2 == 0) s = checked_add(s, m);
    return s;
}

std::int64_t mult_v0(const RepElem& a) { return a.mult(0); }

} // namespace valdim
