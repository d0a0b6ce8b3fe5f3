#include "valdim/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace valdim {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::monomial(int exp, std::int64_t c) {
    LaurentPoly p;
    p.set(exp, c);
    return p;
}

void LaurentPoly::set(int exp, std::int64_t c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

std::int64_t LaurentPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? 0 : it->second;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

std::int64_t LaurentPoly::eval_at_one() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : coeffs_) s = checked_add(s, c);
    return s;
}

LaurentPoly LaurentPoly::substitute_t_inverse() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

bool LaurentPoly::is_palindromic() const {
    for (const auto& [e, c] : coeffs_)
        if (coeff(-e) != c) return false;
    return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) set(e, checked_add(coeff(e), c));
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) set(e, checked_sub(coeff(e), c));
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            r.set(ea + eb, checked_add(r.coeff(ea + eb), checked_mul(ca, cb)));
    return r;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::scaled(std::int64_t c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : coeffs_) r.coeffs_[e] = checked_mul(v, c);
    return r;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        auto [e, c] = *it;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            if (a != 1) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

// ----------------------------------------------------------------- CharSeries

CharSeries CharSeries::monomial_x(int xexp, LaurentPoly c) {
    CharSeries s;
    s.add_term(xexp, c);
    return s;
}

void CharSeries::add_term(int xexp, const LaurentPoly& c) {
    if (xexp < 0) throw std::invalid_argument("negative x exponent");
    if (c.is_zero()) return;
    auto it = coeffs_.find(xexp);
    if (it == coeffs_.end()) {
        coeffs_.emplace(xexp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentPoly CharSeries::coeff_x(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? LaurentPoly{} : it->second;
}

int CharSeries::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

CharSeries CharSeries::shift_x(int k) const {
    CharSeries r;
    for (const auto& [e, c] : coeffs_) r.add_term(e + k, c);
    return r;
}

CharSeries CharSeries::scaled_by(const LaurentPoly& c) const {
    CharSeries r;
    for (const auto& [e, v] : coeffs_) r.add_term(e, v * c);
    return r;
}

CharSeries& CharSeries::operator+=(const CharSeries& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

CharSeries& CharSeries::operator-=(const CharSeries& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

CharSeries operator*(const CharSeries& a, const CharSeries& b) {
    CharSeries r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
}

// -------------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::initializer_list<std::int64_t> ascending) : c_(ascending) { trim(); }
IntPoly::IntPoly(std::vector<std::int64_t> ascending) : c_(std::move(ascending)) { trim(); }

IntPoly IntPoly::monomial(int exp, std::int64_t c) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    std::vector<std::int64_t> v(static_cast<std::size_t>(exp) + 1, 0);
    v.back() = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] = checked_add(r[i + j], checked_mul(a.c_[i], b.c_[j]));
    return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    IntPoly r = IntPoly::one();
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::vector<std::int64_t> expand_rational(const RationalGF& gf, int terms) {
    if (terms < 0) throw std::invalid_argument("negative term count");
    const std::int64_t d0 = gf.den.coeff(0);
    if (d0 == 0) throw std::domain_error("not expandable at x=0");
    if (d0 != 1 && d0 != -1)
        throw std::domain_error("denominator constant term must be +1 or -1");
    std::vector<std::int64_t> out(static_cast<std::size_t>(terms), 0);
    for (int k = 0; k < terms; ++k) {
        std::int64_t s = gf.num.coeff(k);
        for (int j = 1; j <= std::min(k, gf.den.degree()); ++j)
            s = checked_sub(s, checked_mul(gf.den.coeff(j), out[static_cast<std::size_t>(k - j)]));
        out[static_cast<std::size_t>(k)] = d0 == 1 ? s : checked_sub(0, s);
    }
    return out;
}

// ------------------------------------------------------------------ BiIntPoly

BiIntPoly BiIntPoly::monomial(int i, int j, std::int64_t c) {
    BiIntPoly p;
    p.set(i, j, c);
    return p;
}

void BiIntPoly::set(int i, int j, std::int64_t c) {
    if (c == 0)
        coeffs_.erase({i, j});
    else
        coeffs_[{i, j}] = c;
}

std::int64_t BiIntPoly::coeff(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? 0 : it->second;
}

int BiIntPoly::degree_x() const {
    int d = -1;
    for (const auto& [m, c] : coeffs_) d = std::max(d, m.first);
    return d;
}

int BiIntPoly::degree_y() const {
    int d = -1;
    for (const auto& [m, c] : coeffs_) d = std::max(d, m.second);
    return d;
}

BiIntPoly& BiIntPoly::operator+=(const BiIntPoly& o) {
    for (const auto& [m, c] : o.coeffs_) set(m.first, m.second, checked_add(coeff(m.first, m.second), c));
    return *this;
}

BiIntPoly& BiIntPoly::operator-=(const BiIntPoly& o) {
    for (const auto& [m, c] : o.coeffs_) set(m.first, m.second, checked_sub(coeff(m.first, m.second), c));
    return *this;
}

BiIntPoly operator*(const BiIntPoly& a, const BiIntPoly& b) {
    BiIntPoly r;
    for (const auto& [ma, ca] : a.coeffs_)
        for (const auto& [mb, cb] : b.coeffs_) {
            const int i = ma.first + mb.first, j = ma.second + mb.second;
            r.set(i, j, checked_add(r.coeff(i, j), checked_mul(ca, cb)));
        }
    return r;
}

BiIntPoly BiIntPoly::operator-() const {
    BiIntPoly r;
    for (const auto& [m, c] : coeffs_) r.coeffs_[m] = checked_sub(0, c);
    return r;
}

BiIntPoly BiIntPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    BiIntPoly r = BiIntPoly::one();
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

BiIntPoly BiIntPoly::substitute_second_xy() const {
    BiIntPoly r;
    for (const auto& [m, c] : coeffs_)
        r.set(m.first + m.second, m.second, checked_add(r.coeff(m.first + m.second, m.second), c));
    return r;
}

BiIntPoly BiIntPoly::substitute_first_y_second_xy() const {
    BiIntPoly r;
    for (const auto& [m, c] : coeffs_)
        r.set(m.second, m.first + m.second, checked_add(r.coeff(m.second, m.first + m.second), c));
    return r;
}

BiIntPoly BiIntPoly::substitute_negate_both() const {
    BiIntPoly r;
    for (const auto& [m, c] : coeffs_)
        r.coeffs_[m] = ((m.first + m.second) % 2 != 0) ? checked_sub(0, c) : c;
    return r;
}

IntPoly BiIntPoly::eval_neg_x_x() const {
    std::vector<std::int64_t> v;
    for (const auto& [m, c] : coeffs_) {
        const std::size_t e = static_cast<std::size_t>(m.first + m.second);
        if (v.size() <= e) v.resize(e + 1, 0);
        const std::int64_t s = (m.first % 2 != 0) ? checked_sub(0, c) : c;
        v[e] = checked_add(v[e], s);
    }
    return IntPoly(std::move(v));
}

} // namespace valdim
