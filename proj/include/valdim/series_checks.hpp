#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "valdim/genseries.hpp"
#include "valdim/polyring.hpp"
#include "valdim/repring.hpp"

namespace valdim {

/// Bivariate power series over R SU(2), truncated at a fixed order in each
/// variable. Multiplication agrees with the full product on every retained
/// cell.
class BiSeries {
public:
    explicit BiSeries(int order);

    int order() const { return order_; }
    const RepElem& at(int i, int j) const;
    void set(int i, int j, RepElem v);
    void add(int i, int j, const RepElem& v);

    /// The same series truncated at a smaller order.
    BiSeries restricted(int order) const;

    bool operator==(const BiSeries&) const = default;

private:
    std::size_t idx(int i, int j) const;
    int order_;
    std::vector<RepElem> cells_;
};

using RepProduct = RepElem (*)(const RepElem&, const RepElem&);

/// Truncated product, with the coefficient multiplication injectable so the
/// verify tool can demonstrate that a corrupted product rule is caught.
BiSeries tensor(const BiSeries& a, const BiSeries& b, RepProduct mul = &tensor_product);

/// Multiply by an integer bivariate polynomial (exact on retained cells).
BiSeries scale_by_poly(const BiSeries& s, const BiIntPoly& p);

/// True iff multiplier * lhs == rhs on every retained cell.
bool cleared_identity_holds(const BiSeries& lhs, const BiIntPoly& multiplier,
                            const BiSeries& rhs);

/// The nine generator series of the bivariate form algebra.
struct FormGenerators {
    BiSeries odd_x;        // exterior factor on the degree-(1,0) triplet
    BiSeries odd_y;        // exterior factor on the degree-(0,1) triplet
    BiSeries scalar_diag;  // geometric series of the invariant 2-form
    BiSeries sym_y;        // symmetric powers in degree (0,2)
    BiSeries sym_diag;     // symmetric powers in degree (1,1)
    BiSeries sym_x;        // symmetric powers in degree (2,0)
    BiSeries tower_x;      // V_{2k} x^{2k}
    BiSeries tower_y;      // V_{2k} y^{2k}
    BiSeries tower_diag;   // V_{2k} (xy)^k
};

FormGenerators generators(int order);

/// The six-fold product odd_x * odd_y * scalar_diag * sym_y * sym_diag *
/// sym_x: cell (k, l) is the full invariant-form representation in bidegree
/// (k, l).
BiSeries product_series(int order);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first mismatch, when failed
};

struct CheckReport {
    std::vector<CheckResult> results;
    bool all_passed() const;
};

/// The nine denominator-cleared generator identities. The coefficient
/// product is injectable so fault injection can demonstrate the checks have
/// teeth; the default is the Clebsch-Gordan product.
CheckReport check_generator_identities(int order, RepProduct mul = &tensor_product);

/// (a) no odd-index irreducible appears in the product series; (b) for each
/// s <= s_max the three-term closed form for the V_{2s}-multiplicity series
/// holds in denominator-cleared form; (c) the three dimension projections of
/// the product match their closed forms after clearing denominators.
CheckReport check_multiplicity_formula(int order, int s_max);

/// The three splitting-function identities, cross-multiplied to exact
/// bivariate polynomial equalities (no truncation involved).
CheckReport check_splitting_forms();

/// Closed form of the bivariate dimension series for the group: full
/// dimension for sp, even-part count for sp_u1, V_0 multiplicity for sp_sp1.
BiRational bivariate_dim_form(GroupTag g);

/// Exact cross-multiplied check of (x-y) * h == ht(x, xy) - ht(y, xy).
bool splitting_identity_holds(const BiRational& h, const BiRational& ht);

/// Truncated integer bivariate series (projection grids).
class BiIntSeries {
public:
    explicit BiIntSeries(int order);

    int order() const { return order_; }
    std::int64_t at(int i, int j) const;
    void set(int i, int j, std::int64_t v);

    bool operator==(const BiIntSeries&) const = default;

private:
    int order_;
    std::vector<std::int64_t> cells_;
};

BiIntSeries project(const BiSeries& s, std::int64_t (*functional)(const RepElem&));
BiIntSeries multiplicity_series(const BiSeries& s, int l);
BiIntSeries scale_by_poly(const BiIntSeries& s, const BiIntPoly& p);
BiIntSeries truncate_poly(const BiIntPoly& p, int order);

} // namespace valdim
