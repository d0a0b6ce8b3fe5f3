#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace valdim {

enum class OutputFormat { text, csv, json };

/// One emitted line of a table or series: degree, dimension, and the
/// optional extras the subcommands attach. Decompositions are ordered by
/// descending irreducible index; rendering is deterministic.
struct OutputRow {
    int k = 0;
    std::int64_t dim = 0;
    std::optional<std::vector<std::pair<int, std::int64_t>>> decomposition;
    std::optional<std::int64_t> closed_form;
    std::optional<std::string> character;
};

struct OutputDoc {
    std::string group;
    std::optional<int> n;  // empty means the stable range ("infinity")
    std::vector<OutputRow> rows;
};

std::string decomposition_string(const std::vector<std::pair<int, std::int64_t>>& d);

std::string render(std::span<const OutputDoc> docs, OutputFormat format);

OutputFormat parse_format(const std::string& name);  // throws std::invalid_argument

} // namespace valdim
