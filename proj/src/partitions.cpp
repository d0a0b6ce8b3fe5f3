#include "valdim/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace valdim {

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("diagram parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("diagram parts must be weakly decreasing");
    }
}

int YoungDiagram::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

YoungDiagram YoungDiagram::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    return YoungDiagram(std::move(cols));
}

bool YoungDiagram::is_even() const {
    for (int p : parts_)
        if (p % 2 != 0) return false;
    return true;
}

bool dominates(const YoungDiagram& a, const YoungDiagram& b) {
    int sa = 0, sb = 0;
    const int m = std::max(a.depth(), b.depth());
    for (int i = 0; i < m; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

std::vector<YoungDiagram> enumerate_even(int max_part, int max_depth,
                                         std::optional<int> weight) {
    if (weight && *weight % 2 != 0) throw std::invalid_argument("even weight required");
    if (weight && *weight < 0) throw std::invalid_argument("weight must be nonnegative");

    std::vector<YoungDiagram> out;
    std::vector<int> prefix;
    // Larger continuations first, then the prefix itself: this yields
    // lexicographically decreasing order with shorter sequences after their
    // extensions.
    auto rec = [&](auto&& self, int prev, int remaining) -> void {
        if (static_cast<int>(prefix.size()) < max_depth) {
            int start = prev - (prev % 2);
            for (int p = start; p >= 2; p -= 2) {
                if (weight && p > remaining) continue;
                prefix.push_back(p);
                self(self, p, remaining - p);
                prefix.pop_back();
            }
        }
        if (!weight || remaining == 0) out.push_back(YoungDiagram(prefix));
    };
    rec(rec, max_part, weight ? *weight : 0);
    return out;
}

} // namespace valdim
