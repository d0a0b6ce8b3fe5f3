#pragma once

#include <compare>
#include <optional>
#include <vector>

namespace valdim {

/// An integer partition drawn as a Young diagram: weakly decreasing positive
/// row lengths. The empty diagram is allowed and has weight 0.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int depth() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    int part(int i) const { return i < depth() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }

    /// Reflection across the main diagonal (rows become columns).
    YoungDiagram conjugate() const;

    /// True iff every row length is even.
    bool is_even() const;

    bool operator==(const YoungDiagram&) const = default;
    auto operator<=>(const YoungDiagram&) const = default;

private:
    std::vector<int> parts_;
};

/// Dominance order: every prefix sum of a is >= the matching prefix sum of b.
bool dominates(const YoungDiagram& a, const YoungDiagram& b);

/// All even diagrams with first part <= max_part and at most max_depth rows,
/// restricted to the given weight when one is supplied. Output is ordered by
/// lexicographically decreasing part sequences and contains no duplicates.
std::vector<YoungDiagram> enumerate_even(int max_part, int max_depth,
                                         std::optional<int> weight = std::nullopt);

} // namespace valdim
