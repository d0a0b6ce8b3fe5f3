#include "valdim/output.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace valdim {

std::string decomposition_string(const std::vector<std::pair<int, std::int64_t>>& d) {
    if (d.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, m] : d) {
        if (!first) os << "+";
        if (m != 1) os << m << "*";
        os << "V" << l;
        first = false;
    }
    return os.str();
}

namespace {

std::string n_string(const std::optional<int>& n) {
    return n ? std::to_string(*n) : "infinity";
}

std::string render_text(std::span<const OutputDoc> docs) {
    std::ostringstream os;
    for (const auto& doc : docs) {
        os << "# group=" << doc.group << " n=" << n_string(doc.n) << "\n";
        {
            bool first = true;
            for (const auto& row : doc.rows) {
                if (!first) os << ",";
                os << row.dim;
                first = false;
            }
            os << "\n";
        }
        if (!doc.rows.empty() && doc.rows.front().closed_form) {
            os << "closed-form: ";
            bool first = true;
            for (const auto& row : doc.rows) {
                if (!first) os << ",";
                os << (row.closed_form ? *row.closed_form : 0);
                first = false;
            }
            os << "\n";
        }
        for (const auto& row : doc.rows) {
            if (row.decomposition)
                os << "k=" << row.k << ": " << decomposition_string(*row.decomposition) << "\n";
            if (row.character) os << "ch k=" << row.k << ": " << *row.character << "\n";
        }
    }
    return os.str();
}

std::string render_csv(std::span<const OutputDoc> docs) {
    const bool has_decomp = !docs.empty() && !docs.front().rows.empty() &&
                            docs.front().rows.front().decomposition.has_value();
    const bool has_closed = !docs.empty() && !docs.front().rows.empty() &&
                            docs.front().rows.front().closed_form.has_value();
    const bool has_char = !docs.empty() && !docs.front().rows.empty() &&
                          docs.front().rows.front().character.has_value();
    std::ostringstream os;
    os << "group,n,k,dim";
    if (has_decomp) os << ",decomposition";
    if (has_closed) os << ",closed_form";
    if (has_char) os << ",character";
    os << "\n";
    for (const auto& doc : docs)
        for (const auto& row : doc.rows) {
            os << doc.group << "," << n_string(doc.n) << "," << row.k << "," << row.dim;
            if (has_decomp) os << "," << decomposition_string(row.decomposition.value());
            if (has_closed) os << "," << row.closed_form.value();
            if (has_char) os << ",\"" << row.character.value() << "\"";
            os << "\n";
        }
    return os.str();
}

nlohmann::ordered_json doc_json(const OutputDoc& doc) {
    nlohmann::ordered_json j;
    j["group"] = doc.group;
    if (doc.n)
        j["n"] = *doc.n;
    else
        j["n"] = "infinity";
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : doc.rows) {
        nlohmann::ordered_json r;
        r["k"] = row.k;
        r["dim"] = row.dim;
        if (row.decomposition) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& [l, m] : *row.decomposition) arr.push_back({l, m});
            r["decomposition"] = std::move(arr);
        }
        if (row.closed_form) r["closed_form"] = *row.closed_form;
        if (row.character) r["character"] = *row.character;
        j["rows"].push_back(std::move(r));
    }
    return j;
}

std::string render_json(std::span<const OutputDoc> docs) {
    if (docs.size() == 1) return doc_json(docs.front()).dump(2) + "\n";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& doc : docs) arr.push_back(doc_json(doc));
    return arr.dump(2) + "\n";
}

} // namespace

std::string render(std::span<const OutputDoc> docs, OutputFormat format) {
    switch (format) {
        case OutputFormat::text: return render_text(docs);
        case OutputFormat::csv: return render_csv(docs);
        case OutputFormat::json: return render_json(docs);
    }
    throw std::logic_error("bad format");
}

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown format: " + name);
}

} // namespace valdim
