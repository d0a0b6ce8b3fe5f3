#include "valdim/schur.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace valdim {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::mutex g_kostka_mutex;
std::map<Key, std::int64_t> g_kostka_cache;

/// All sub-diagrams lam' of lam with |lam| - |lam'| = size such that lam/lam'
/// is a horizontal strip: lam_{i+1} <= lam'_i <= lam_i.
void for_each_horizontal_strip(const std::vector<int>& lam, int size,
                               const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> acc(lam.size());
    auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
        if (i == lam.size()) {
            if (rem == 0) {
                std::vector<int> trimmed;
                for (int v : acc)
                    if (v > 0) trimmed.push_back(v);
                fn(trimmed);
            }
            return;
        }
        const int lo = i + 1 < lam.size() ? lam[i + 1] : 0;
        for (int v = lam[i]; v >= lo; --v) {
            const int removed = lam[i] - v;
            if (removed > rem) break;
            acc[i] = v;
            self(self, i + 1, rem - removed);
        }
    };
    rec(rec, 0, size);
}

std::int64_t kostka_sorted(const std::vector<int>& lam, const std::vector<int>& mu) {
    // lam and mu both weakly decreasing with positive parts, equal weight.
    if (lam.empty()) return 1;
    if (mu.size() == 1) return lam.size() == 1 ? 1 : 0;
    {
        std::lock_guard<std::mutex> lock(g_kostka_mutex);
        auto it = g_kostka_cache.find({lam, mu});
        if (it != g_kostka_cache.end()) return it->second;
    }
    // Dominance cutoff: a semistandard filling forces lam to dominate mu.
    {
        int sa = 0, sb = 0;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            sa += i < lam.size() ? lam[i] : 0;
            sb += mu[i];
            if (sa < sb) {
                std::lock_guard<std::mutex> lock(g_kostka_mutex);
                g_kostka_cache[{lam, mu}] = 0;
                return 0;
            }
        }
    }
    // Cells holding the largest entry form a horizontal strip at the row ends;
    // peel it and recurse on the rest of the content.
    std::vector<int> rest(mu.begin(), mu.end() - 1);
    std::int64_t total = 0;
    for_each_horizontal_strip(lam, mu.back(), [&](const std::vector<int>& inner) {
        total = checked_add(total, kostka_sorted(inner, rest));
    });
    std::lock_guard<std::mutex> lock(g_kostka_mutex);
    g_kostka_cache[{lam, mu}] = total;
    return total;
}

} // namespace

std::int64_t kostka_number(const YoungDiagram& shape, const Composition& content) {
    std::vector<int> mu;
    int total = 0;
    for (int v : content) {
        if (v < 0) throw std::invalid_argument("content parts must be nonnegative");
        total += v;
        if (v > 0) mu.push_back(v);
    }
    if (total != shape.weight()) return 0;
    std::sort(mu.begin(), mu.end(), std::greater<int>());
    return kostka_sorted(shape.parts(), mu);
}

CharSeries schur_specialized(const YoungDiagram& shape, std::span<const SpecArg> args) {
    const int w = shape.weight();
    const int n = static_cast<int>(args.size());
    if (shape.depth() > n) return {};
    if (w == 0) return CharSeries::one();

    CharSeries out;
    Composition mu(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int rem, int texp, int xexp) -> void {
        if (i == n - 1) {
            mu[static_cast<std::size_t>(i)] = rem;
            const std::int64_t k = kostka_number(shape, mu);
            if (k != 0)
                out.add_term(xexp + args[static_cast<std::size_t>(i)].x_exp * rem,
                             LaurentPoly::monomial(texp + args[static_cast<std::size_t>(i)].t_exp * rem, k));
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            mu[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, rem - v, texp + args[static_cast<std::size_t>(i)].t_exp * v,
                 xexp + args[static_cast<std::size_t>(i)].x_exp * v);
        }
    };
    rec(rec, 0, w, 0, 0);
    return out;
}

CharSeries exterior_char_series(int n) {
    if (n < 1) throw std::invalid_argument("quaternionic dimension must be >= 1");
    static constexpr SpecArg args[] = {kArgTX, kArgTInvX};
    CharSeries out;
    for (const YoungDiagram& lam : enumerate_even(2 * n, 2)) out += schur_specialized(lam, args);
    return out;
}

CharSeries double_form_char_series(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("indices must be nonnegative");
    static constexpr SpecArg args[] = {kArgTX, kArgTInvX, kArgT, kArgTInv};
    CharSeries out;
    for (const YoungDiagram& lam : enumerate_even(2 * n, 4, 2 * m))
        out += schur_specialized(lam, args);
    return out;
}

} // namespace valdim
