#include <doctest.h>

#include <json.hpp>

#include "valdim/output.hpp"

using namespace valdim;

namespace {

std::vector<OutputDoc> sample_docs() {
    OutputDoc doc;
    doc.group = "sp";
    doc.n = 2;
    for (int k = 0; k <= 2; ++k) {
        OutputRow r;
        r.k = k;
        r.dim = k == 2 ? 7 : 1;
        r.decomposition = std::vector<std::pair<int, std::int64_t>>{};
        if (k == 2)
            r.decomposition = std::vector<std::pair<int, std::int64_t>>{{4, 1}, {0, 2}};
        else
            r.decomposition = std::vector<std::pair<int, std::int64_t>>{{0, 1}};
        doc.rows.push_back(std::move(r));
    }
    return {doc};
}

} // namespace

TEST_CASE("decomposition rendering") {
    CHECK(decomposition_string({{8, 1}, {4, 3}, {0, 5}}) == "V8+3*V4+5*V0");
    CHECK(decomposition_string({{0, 1}}) == "V0");
    CHECK(decomposition_string({}) == "0");
}

TEST_CASE("text output carries the dimension row and decompositions") {
    const auto docs = sample_docs();
    const std::string text = render(docs, OutputFormat::text);
    CHECK(text.find("# group=sp n=2") != std::string::npos);
    CHECK(text.find("1,1,7") != std::string::npos);
    CHECK(text.find("k=2: V4+2*V0") != std::string::npos);
}

TEST_CASE("csv output carries one row per degree") {
    const auto docs = sample_docs();
    const std::string csv = render(docs, OutputFormat::csv);
    CHECK(csv.find("group,n,k,dim,decomposition") != std::string::npos);
    CHECK(csv.find("sp,2,2,7,V4+2*V0") != std::string::npos);
}

TEST_CASE("json output round-trips byte-identically") {
    const auto docs = sample_docs();
    const std::string emitted = render(docs, OutputFormat::json);
    const auto parsed = nlohmann::ordered_json::parse(emitted);
    CHECK(parsed.dump(2) + "\n" == emitted);
    CHECK(parsed["group"] == "sp");
    CHECK(parsed["n"] == 2);
    CHECK(parsed["rows"][2]["dim"] == 7);
    CHECK(parsed["rows"][2]["decomposition"][0][0] == 4);
}

TEST_CASE("formats encode identical numeric content") {
    const auto docs = sample_docs();
    const auto parsed = nlohmann::ordered_json::parse(render(docs, OutputFormat::json));
    const std::string csv = render(docs, OutputFormat::csv);
    const std::string text = render(docs, OutputFormat::text);
    for (const auto& row : parsed["rows"]) {
        const std::string cell = std::to_string(row["k"].get<int>()) + "," +
                                 std::to_string(row["dim"].get<std::int64_t>());
        CHECK(csv.find("sp,2," + cell) != std::string::npos);
    }
    CHECK(text.find("1,1,7\n") != std::string::npos);
}

TEST_CASE("infinity tag and format parsing") {
    OutputDoc doc;
    doc.group = "sp";
    doc.rows.push_back({0, 1, std::nullopt, std::nullopt, std::nullopt});
    const std::string json = render({&doc, 1}, OutputFormat::json);
    CHECK(nlohmann::ordered_json::parse(json)["n"] == "infinity");
    CHECK(parse_format("text") == OutputFormat::text);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}
