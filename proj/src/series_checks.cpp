#include "valdim/series_checks.hpp"

#include <sstream>
#include <stdexcept>

namespace valdim {

namespace {

using B = BiIntPoly;
B C(std::int64_t c) { return B::monomial(0, 0, c); }
B X(int i) { return B::monomial(i, 0, 1); }
B Y(int j) { return B::monomial(0, j, 1); }
B XY(int i, int j) { return B::monomial(i, j, 1); }

std::string cell_name(int i, int j) {
    std::ostringstream os;
    os << "(" << i << "," << j << ")";
    return os.str();
}

} // namespace

// ------------------------------------------------------------------ BiSeries

BiSeries::BiSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    cells_.resize(static_cast<std::size_t>(order + 1) * static_cast<std::size_t>(order + 1));
}

std::size_t BiSeries::idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_ + 1) +
           static_cast<std::size_t>(j);
}

const RepElem& BiSeries::at(int i, int j) const {
    if (i < 0 || j < 0 || i > order_ || j > order_)
        throw std::out_of_range("cell outside truncation order");
    return cells_[idx(i, j)];
}

void BiSeries::set(int i, int j, RepElem v) {
    if (i < 0 || j < 0 || i > order_ || j > order_)
        throw std::out_of_range("cell outside truncation order");
    cells_[idx(i, j)] = std::move(v);
}

void BiSeries::add(int i, int j, const RepElem& v) {
    if (i < 0 || j < 0 || i > order_ || j > order_)
        throw std::out_of_range("cell outside truncation order");
    cells_[idx(i, j)] += v;
}

BiSeries BiSeries::restricted(int order) const {
    if (order > order_) throw std::invalid_argument("cannot extend a truncated series");
    BiSeries r(order);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; j <= order; ++j) r.set(i, j, at(i, j));
    return r;
}

BiSeries tensor(const BiSeries& a, const BiSeries& b, RepProduct mul) {
    if (a.order() != b.order()) throw std::invalid_argument("order mismatch");
    const int n = a.order();
    BiSeries r(n);
    for (int i1 = 0; i1 <= n; ++i1)
        for (int j1 = 0; j1 <= n; ++j1) {
            const RepElem& va = a.at(i1, j1);
            if (va.is_zero()) continue;
            for (int i2 = 0; i1 + i2 <= n; ++i2)
                for (int j2 = 0; j1 + j2 <= n; ++j2) {
                    const RepElem& vb = b.at(i2, j2);
                    if (vb.is_zero()) continue;
                    r.add(i1 + i2, j1 + j2, mul(va, vb));
                }
        }
    return r;
}

BiSeries scale_by_poly(const BiSeries& s, const BiIntPoly& p) {
    const int n = s.order();
    BiSeries r(n);
    for (const auto& [m, c] : p.coeffs())
        for (int i = 0; i + m.first <= n; ++i)
            for (int j = 0; j + m.second <= n; ++j) {
                const RepElem& v = s.at(i, j);
                if (!v.is_zero()) r.add(i + m.first, j + m.second, v.scaled(c));
            }
    return r;
}

bool cleared_identity_holds(const BiSeries& lhs, const BiIntPoly& multiplier,
                            const BiSeries& rhs) {
    return scale_by_poly(lhs, multiplier) == rhs;
}

// ---------------------------------------------------------------- generators

FormGenerators generators(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    FormGenerators g{BiSeries(order), BiSeries(order), BiSeries(order),
                         BiSeries(order), BiSeries(order), BiSeries(order),
                         BiSeries(order), BiSeries(order), BiSeries(order)};
    const RepElem v0 = RepElem::trivial();
    const RepElem v2 = RepElem::irreducible(2);

    g.odd_x.set(0, 0, v0);
    if (order >= 1) g.odd_x.set(1, 0, v2);
    if (order >= 2) g.odd_x.set(2, 0, v2);
    if (order >= 3) g.odd_x.set(3, 0, v0);

    g.odd_y.set(0, 0, v0);
    if (order >= 1) g.odd_y.set(0, 1, v2);
    if (order >= 2) g.odd_y.set(0, 2, v2);
    if (order >= 3) g.odd_y.set(0, 3, v0);

    for (int k = 0; k <= order; ++k) g.scalar_diag.set(k, k, v0);
    for (int k = 0; 2 * k <= order; ++k) g.sym_y.set(0, 2 * k, sym_power_v2(k));
    for (int k = 0; k <= order; ++k) g.sym_diag.set(k, k, sym_power_v2(k));
    for (int k = 0; 2 * k <= order; ++k) g.sym_x.set(2 * k, 0, sym_power_v2(k));
    for (int k = 0; 2 * k <= order; ++k) g.tower_x.set(2 * k, 0, RepElem::irreducible(2 * k));
    for (int k = 0; 2 * k <= order; ++k) g.tower_y.set(0, 2 * k, RepElem::irreducible(2 * k));
    for (int k = 0; k <= order; ++k) g.tower_diag.set(k, k, RepElem::irreducible(2 * k));
    return g;
}

BiSeries product_series(int order) {
    const FormGenerators g = generators(order);
    BiSeries r = tensor(g.odd_x, g.odd_y);
    r = tensor(r, g.scalar_diag);
    r = tensor(r, g.sym_y);
    r = tensor(r, g.sym_diag);
    r = tensor(r, g.sym_x);
    return r;
}

// -------------------------------------------------------------- check report

bool CheckReport::all_passed() const {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

namespace {

CheckResult compare_series(std::string name, const BiSeries& got, const BiSeries& want) {
    CheckResult res{std::move(name), true, ""};
    const int n = got.order();
    for (int i = 0; i <= n && res.passed; ++i)
        for (int j = 0; j <= n; ++j)
            if (!(got.at(i, j) == want.at(i, j))) {
                res.passed = false;
                res.detail = "first mismatch at " + cell_name(i, j) + ": " +
                             got.at(i, j).to_string() + " vs " + want.at(i, j).to_string();
                break;
            }
    return res;
}

CheckResult compare_grids(std::string name, const BiIntSeries& got, const BiIntSeries& want,
                          const char* got_side, const char* want_side) {
    CheckResult res{std::move(name), true, ""};
    const int n = got.order();
    for (int i = 0; i <= n && res.passed; ++i)
        for (int j = 0; j <= n; ++j)
            if (got.at(i, j) != want.at(i, j)) {
                res.passed = false;
                std::ostringstream os;
                os << "first mismatch at " << cell_name(i, j) << ": " << got_side << "="
                   << got.at(i, j) << ", " << want_side << "=" << want.at(i, j);
                res.detail = os.str();
                break;
            }
    return res;
}

BiSeries unit_series(int order) {
    BiSeries s(order);
    s.set(0, 0, RepElem::trivial());
    return s;
}

} // namespace

CheckReport check_generator_identities(int order, RepProduct mul) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    const FormGenerators g = generators(order);
    CheckReport rep;

    auto cleared = [&](const char* name, const BiSeries& lhs, const BiIntPoly& mult,
                       const BiSeries& rhs) {
        rep.results.push_back(compare_series(name, scale_by_poly(lhs, mult), rhs));
    };

    cleared("generator-identities/sym_y-geometric: (1-y^4)*sym_y == tower_y",
            g.sym_y, C(1) - Y(4), g.tower_y);
    cleared("generator-identities/sym_diag-geometric: (1-x^2y^2)*sym_diag == tower_diag",
            g.sym_diag, C(1) - XY(2, 2), g.tower_diag);
    cleared("generator-identities/sym_x-geometric: (1-x^4)*sym_x == tower_x",
            g.sym_x, C(1) - X(4), g.tower_x);
    cleared("generator-identities/scalar-geometric: (1-xy)*scalar_diag == 1",
            g.scalar_diag, C(1) - XY(1, 1), unit_series(order));

    {
        const BiSeries lhs = tensor(g.tower_x, g.tower_y, mul);
        const BiSeries rhs = scale_by_poly(g.tower_x, X(2) * (C(1) + Y(2)));
        BiSeries rhs2 = scale_by_poly(g.tower_y, Y(2) * (C(1) + X(2)));
        BiSeries want(order);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; j <= order; ++j) want.set(i, j, rhs.at(i, j) - rhs2.at(i, j));
        rep.results.push_back(compare_series(
            "generator-identities/tower_x*tower_y: (1-x^2y^2)(x^2-y^2)*prod == "
            "x^2(1+y^2)*tower_x - y^2(1+x^2)*tower_y",
            scale_by_poly(lhs, (C(1) - XY(2, 2)) * (X(2) - Y(2))), want));
    }
    {
        const BiSeries lhs = tensor(g.tower_x, g.tower_diag, mul);
        const BiSeries a = scale_by_poly(g.tower_x, X(1) * (C(1) + XY(1, 1)));
        const BiSeries b = scale_by_poly(g.tower_diag, Y(1) * (C(1) + X(2)));
        BiSeries want(order);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; j <= order; ++j) want.set(i, j, a.at(i, j) - b.at(i, j));
        rep.results.push_back(compare_series(
            "generator-identities/tower_x*tower_diag: (1-x^3y)(x-y)*prod == "
            "x(1+xy)*tower_x - y(1+x^2)*tower_diag",
            scale_by_poly(lhs, (C(1) - XY(3, 1)) * (X(1) - Y(1))), want));
    }
    {
        const BiSeries lhs = tensor(g.tower_diag, g.tower_y, mul);
        const BiSeries a = scale_by_poly(g.tower_diag, X(1) * (C(1) + Y(2)));
        const BiSeries b = scale_by_poly(g.tower_y, Y(1) * (C(1) + XY(1, 1)));
        BiSeries want(order);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; j <= order; ++j) want.set(i, j, a.at(i, j) - b.at(i, j));
        rep.results.push_back(compare_series(
            "generator-identities/tower_diag*tower_y: (1-xy^3)(x-y)*prod == "
            "x(1+y^2)*tower_diag - y(1+xy)*tower_y",
            scale_by_poly(lhs, (C(1) - XY(1, 3)) * (X(1) - Y(1))), want));
    }
    {
        const BiSeries lhs = tensor(g.odd_x, g.tower_x, mul);
        const BiSeries a = scale_by_poly(g.tower_x, (C(1) + X(1)).pow(2) * (C(1) + X(3)));
        const BiSeries b = scale_by_poly(unit_series(order), (C(1) + X(1)) * (C(1) + X(2)));
        BiSeries want(order);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; j <= order; ++j) want.set(i, j, a.at(i, j) - b.at(i, j));
        rep.results.push_back(compare_series(
            "generator-identities/odd_x*tower_x: x*prod == "
            "(1+x)^2(1+x^3)*tower_x - (1+x)(1+x^2)",
            scale_by_poly(lhs, X(1)), want));
    }
    {
        const BiSeries lhs = tensor(g.odd_y, g.tower_y, mul);
        const BiSeries a = scale_by_poly(g.tower_y, (C(1) + Y(1)).pow(2) * (C(1) + Y(3)));
        const BiSeries b = scale_by_poly(unit_series(order), (C(1) + Y(1)) * (C(1) + Y(2)));
        BiSeries want(order);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; j <= order; ++j) want.set(i, j, a.at(i, j) - b.at(i, j));
        rep.results.push_back(compare_series(
            "generator-identities/odd_y*tower_y: y*prod == "
            "(1+y)^2(1+y^3)*tower_y - (1+y)(1+y^2)",
            scale_by_poly(lhs, Y(1)), want));
    }
    return rep;
}

// --------------------------------------------------------------- BiIntSeries

BiIntSeries::BiIntSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    cells_.resize(static_cast<std::size_t>(order + 1) * static_cast<std::size_t>(order + 1), 0);
}

std::int64_t BiIntSeries::at(int i, int j) const {
    if (i < 0 || j < 0 || i > order_ || j > order_)
        throw std::out_of_range("cell outside truncation order");
    return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(order_ + 1) +
                  static_cast<std::size_t>(j)];
}

void BiIntSeries::set(int i, int j, std::int64_t v) {
    if (i < 0 || j < 0 || i > order_ || j > order_)
        throw std::out_of_range("cell outside truncation order");
    cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(order_ + 1) +
           static_cast<std::size_t>(j)] = v;
}

BiIntSeries project(const BiSeries& s, std::int64_t (*functional)(const RepElem&)) {
    BiIntSeries r(s.order());
    for (int i = 0; i <= s.order(); ++i)
        for (int j = 0; j <= s.order(); ++j) r.set(i, j, functional(s.at(i, j)));
    return r;
}

BiIntSeries multiplicity_series(const BiSeries& s, int l) {
    BiIntSeries r(s.order());
    for (int i = 0; i <= s.order(); ++i)
        for (int j = 0; j <= s.order(); ++j) r.set(i, j, s.at(i, j).mult(l));
    return r;
}

BiIntSeries scale_by_poly(const BiIntSeries& s, const BiIntPoly& p) {
    const int n = s.order();
    BiIntSeries r(n);
    for (const auto& [m, c] : p.coeffs())
        for (int i = 0; i + m.first <= n; ++i)
            for (int j = 0; j + m.second <= n; ++j) {
                const std::int64_t v = s.at(i, j);
                if (v != 0)
                    r.set(i + m.first, j + m.second,
                          checked_add(r.at(i + m.first, j + m.second), checked_mul(c, v)));
            }
    return r;
}

BiIntSeries truncate_poly(const BiIntPoly& p, int order) {
    BiIntSeries r(order);
    for (const auto& [m, c] : p.coeffs())
        if (m.first <= order && m.second <= order) r.set(m.first, m.second, c);
    return r;
}

// ------------------------------------------------------------- closed h form

BiRational bivariate_dim_form(GroupTag g) {
    switch (g) {
        case GroupTag::sp:
            return {C(1), (C(1) - X(1)).pow(3) * (C(1) - XY(1, 1)).pow(4) * (C(1) - Y(1)).pow(3)};
        case GroupTag::sp_u1: {
            B num = C(-2) * Y(2) + Y(1) - C(1) -
                    X(1) * (C(3) * Y(1) - C(1)) * (Y(1) + C(1)) * (Y(2) - Y(1) + C(1)) +
                    X(2) * (Y(4) - C(5) * Y(3) - C(2)) -
                    X(3) * Y(1) * (C(2) * Y(4) + C(5) * Y(1) - C(1)) +
                    X(4) * Y(1) * (Y(1) - C(3)) * (C(1) + Y(1)) * (Y(2) - Y(1) + C(1)) -
                    X(5) * Y(3) * (Y(2) - Y(1) + C(2));
            B den = (C(-1) + Y(1)).pow(2) * (C(-1) + XY(1, 3)) * (C(-1) + X(1)).pow(2) *
                    (C(-1) + XY(1, 1)).pow(3) * (XY(1, 1) + C(1)) * (C(1) + Y(2)) *
                    (C(1) + X(2)) * (C(-1) + XY(3, 1));
            return {num, den};
        }
        case GroupTag::sp_sp1: {
            B num = C(-1) + XY(2, 2) - C(3) * XY(3, 3) - XY(4, 4) + XY(6, 6) - X(1) - X(2) -
                    XY(1, 1) - Y(1) - Y(2) + XY(6, 4) + X(3) + Y(3) + C(2) * XY(3, 1) -
                    XY(3, 5) + C(2) * XY(1, 3) - XY(1, 5) - C(2) * XY(2, 4) - XY(5, 3) +
                    XY(4, 6) - XY(3, 4) - XY(4, 3) - C(2) * XY(4, 2) - XY(5, 1) +
                    C(2) * XY(3, 2) + C(2) * XY(2, 1) + C(2) * XY(1, 2) + XY(4, 1) +
                    C(2) * XY(2, 3) + XY(1, 4);
            num = num.substitute_negate_both();
            B den = (C(-1) + XY(1, 3)) * (C(-1) + XY(3, 1)) * (C(-1) + XY(2, 2)) *
                    (Y(3) - Y(2) + Y(1) - C(1)) * (X(3) - X(2) + X(1) - C(1)) *
                    (C(-1) + XY(1, 1)).pow(2);
            return {num, den};
        }
        case GroupTag::u_infty:
            break;
    }
    throw std::invalid_argument("no bivariate closed form for the unitary tag");
}

// -------------------------------------------------- multiplicity-formula set

CheckReport check_multiplicity_formula(int order, int s_max) {
    if (order < 2) throw std::invalid_argument("order must be >= 2");
    const BiSeries prod = product_series(order);
    CheckReport rep;

    {
        CheckResult res{"multiplicity-formula/odd-index-vanishing", true, ""};
        for (int i = 0; i <= order && res.passed; ++i)
            for (int j = 0; j <= order; ++j)
                for (const auto& [l, m] : prod.at(i, j).mults())
                    if (l % 2 != 0) {
                        res.passed = false;
                        res.detail = "V_" + std::to_string(l) + " appears at " + cell_name(i, j);
                        break;
                    }
        rep.results.push_back(std::move(res));
    }

    // Closed form of the V_{2s}-multiplicity series: three terms over a
    // common denominator; cleared by the full factor product so each side is
    // a polynomial times the truncated multiplicity grid.
    const B n1 = (C(1) + X(1)).pow(2) * (C(1) + Y(1)) * (C(1) + X(3)) * (C(1) + Y(2)) *
                 (X(2) + Y(1)) * (XY(2, 1) + C(1));
    const B n2 = (C(1) + X(1)).pow(2) * (C(1) + Y(1)).pow(2) * (C(1) + Y(2)) * (C(1) + X(2)) *
                 (XY(2, 1) + C(1)) * (XY(1, 2) + C(1)) * (X(1) + Y(1));
    const B n3 = (C(1) + Y(1)).pow(2) * (C(1) + Y(3)) * (C(1) + X(2)) * (Y(2) + X(1)) *
                 (XY(1, 2) + C(1)) * (C(1) + X(1));
    const B d1 = (C(1) - XY(1, 1)) * (C(1) - XY(3, 1));
    const B d2 = (C(-1) + XY(1, 3)) * (C(-1) + XY(3, 1));
    const B d3 = (C(1) - XY(1, 1)) * (C(1) - XY(1, 3));
    const B d0 = (X(1) - Y(1)).pow(2) * (X(1) + Y(1)) * (C(1) - X(4)) * (C(1) - Y(4)) *
                 (C(1) - XY(2, 2)) * (C(1) - XY(1, 1));
    const B full_denominator = d0 * d1 * d2 * d3;

    for (int s = 0; s <= s_max; ++s) {
        const BiIntSeries lhs = scale_by_poly(multiplicity_series(prod, 2 * s), full_denominator);
        const B rhs_poly = n1 * XY(2 * s, 0) * d2 * d3 - n2 * XY(s, s) * d1 * d3 +
                           n3 * XY(0, 2 * s) * d1 * d2;
        rep.results.push_back(compare_grids(
            "multiplicity-formula/cleared-form s=" + std::to_string(s), lhs,
            truncate_poly(rhs_poly, order), "product side", "closed-form side"));
    }

    const struct {
        GroupTag tag;
        std::int64_t (*functional)(const RepElem&);
        const char* name;
    } projections[] = {
        {GroupTag::sp, &dim_full, "multiplicity-formula/projection sp"},
        {GroupTag::sp_u1, &dim_even_part, "multiplicity-formula/projection sp-u1"},
        {GroupTag::sp_sp1, &mult_v0, "multiplicity-formula/projection sp-sp1"},
    };
    for (const auto& p : projections) {
        const BiRational form = bivariate_dim_form(p.tag);
        rep.results.push_back(compare_grids(
            p.name, scale_by_poly(project(prod, p.functional), form.den),
            truncate_poly(form.num, order), "product side", "closed-form side"));
    }
    return rep;
}

// ------------------------------------------------------------ splitting set

bool splitting_identity_holds(const BiRational& h, const BiRational& ht) {
    const B nt_x = ht.num.substitute_second_xy();        // numerator at (x, xy)
    const B dt_x = ht.den.substitute_second_xy();
    const B nt_y = ht.num.substitute_first_y_second_xy();  // numerator at (y, xy)
    const B dt_y = ht.den.substitute_first_y_second_xy();
    const B lhs = (X(1) - Y(1)) * h.num * dt_x * dt_y;
    const B rhs = h.den * (nt_x * dt_y - nt_y * dt_x);
    return lhs == rhs;
}

CheckReport check_splitting_forms() {
    CheckReport rep;
    for (GroupTag g : {GroupTag::sp, GroupTag::sp_u1, GroupTag::sp_sp1}) {
        CheckResult res{"splitting/" + group_name(g), true, ""};
        if (!splitting_identity_holds(bivariate_dim_form(g), splitting_form(g))) {
            res.passed = false;
            res.detail = "cross-multiplied polynomial identity fails";
        }
        rep.results.push_back(std::move(res));
    }
    return rep;
}

} // namespace valdim
