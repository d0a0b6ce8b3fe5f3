#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "valdim/series_checks.hpp"
#include "valdim/genseries.hpp"
#include "valdim/output.hpp"
#include "valdim/valchar.hpp"

namespace {

using namespace valdim;

constexpr int kDefaultMaxN = 8;
constexpr int kUsageError = 2;

int max_n_cap(int cli_value) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("VALDIM_MAX_N")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
            // fall through to the default on unparsable values
        }
    }
    return kDefaultMaxN;
}

std::vector<std::pair<int, std::int64_t>> decomposition_pairs(const RepElem& r) {
    std::vector<std::pair<int, std::int64_t>> out;
    for (auto it = r.mults().rbegin(); it != r.mults().rend(); ++it)
        out.emplace_back(it->first, it->second);
    return out;
}

int cmd_table(int n, const std::string& group, bool decompose, OutputFormat format) {
    const ValuationTable t = valuation_table(n);
    std::vector<OutputDoc> docs;
    auto push = [&](const std::string& name) {
        OutputDoc doc;
        doc.group = name;
        doc.n = n;
        for (const auto& row : t.rows) {
            OutputRow r;
            r.k = row.k;
            r.dim = name == "sp"      ? row.dim_sp
                    : name == "sp-u1" ? row.dim_sp_u1
                                      : row.dim_sp_sp1;
            if (decompose) r.decomposition = decomposition_pairs(row.decomposition);
            doc.rows.push_back(std::move(r));
        }
        docs.push_back(std::move(doc));
    };
    if (group == "all") {
        push("sp");
        push("sp-u1");
        push("sp-sp1");
    } else {
        push(group);
    }
    std::cout << render(docs, format);
    return 0;
}

int cmd_series(const std::string& group, int terms, bool closed_form, OutputFormat format) {
    const GroupTag tag = group == "sp"      ? GroupTag::sp
                         : group == "sp-u1" ? GroupTag::sp_u1
                         : group == "sp-sp1" ? GroupTag::sp_sp1
                                             : GroupTag::u_infty;
    const std::vector<std::int64_t> coeffs = expand_rational(global_dim_series(tag), terms);
    OutputDoc doc;
    doc.group = group;
    for (int k = 0; k < terms; ++k) {
        OutputRow r;
        r.k = k;
        r.dim = coeffs[static_cast<std::size_t>(k)];
        if (closed_form && tag != GroupTag::u_infty) r.closed_form = global_dim(tag, k);
        doc.rows.push_back(std::move(r));
    }
    std::cout << render({&doc, 1}, format);
    return 0;
}

int cmd_character(int n, std::optional<int> degree, OutputFormat format) {
    const ValuationTable t = valuation_table(n);
    OutputDoc doc;
    doc.group = "sp";
    doc.n = n;
    for (const auto& row : t.rows) {
        if (degree && row.k != *degree) continue;
        OutputRow r;
        r.k = row.k;
        r.dim = row.dim_sp;
        r.decomposition = decomposition_pairs(row.decomposition);
        r.character = character(row.decomposition).to_string();
        doc.rows.push_back(std::move(r));
    }
    std::cout << render({&doc, 1}, format);
    return 0;
}

// ------------------------------------------------------------------- verify

enum class Fault { none, cg_bound, denominator, atilde };

// Clebsch-Gordan with the lower bound shifted up by 2: drops the bottom
// summand of every product. Used only to prove the identity checks fail on a
// wrong product rule.
RepElem cg_shifted_lower_bound(const RepElem& a, const RepElem& b) {
    RepElem r;
    for (const auto& [k, mk] : a.mults())
        for (const auto& [l, ml] : b.mults()) {
            const std::int64_t m = checked_mul(mk, ml);
            for (int j = std::abs(k - l) + 2; j <= k + l; j += 2) r.add(j, m);
        }
    return r;
}

void replace_result(CheckReport& rep, const std::string& prefix, CheckResult result) {
    for (auto& r : rep.results)
        if (r.name.rfind(prefix, 0) == 0) {
            r = std::move(result);
            return;
        }
    rep.results.push_back(std::move(result));
}

int cmd_verify(int order, const std::string& fault_name) {
    Fault fault = Fault::none;
    if (fault_name == "cg-bound")
        fault = Fault::cg_bound;
    else if (fault_name == "denominator")
        fault = Fault::denominator;
    else if (fault_name == "atilde")
        fault = Fault::atilde;
    else if (!fault_name.empty()) {
        std::cerr << "unknown fault: " << fault_name << "\n";
        return kUsageError;
    }

    const auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;

    {
        CheckReport gen = check_generator_identities(
            order, fault == Fault::cg_bound ? &cg_shifted_lower_bound : &tensor_product);
        rep.results.insert(rep.results.end(), gen.results.begin(), gen.results.end());
    }
    if (fault == Fault::denominator) {
        // (1-y^4) entered as (1-y^2): the geometric identity for sym_y must fail.
        const FormGenerators g = generators(order);
        const BiIntPoly wrong = BiIntPoly::one() - BiIntPoly::monomial(0, 2, 1);
        CheckResult res{"generator-identities/sym_y-geometric: (1-y^4)*sym_y == tower_y",
                        cleared_identity_holds(g.sym_y, wrong, g.tower_y),
                        "denominator exponent fault injected"};
        replace_result(rep, "generator-identities/sym_y-geometric", std::move(res));
    }

    {
        CheckReport mf = check_multiplicity_formula(order, 3);
        rep.results.insert(rep.results.end(), mf.results.begin(), mf.results.end());
    }

    {
        CheckReport sp = check_splitting_forms();
        rep.results.insert(rep.results.end(), sp.results.begin(), sp.results.end());
    }
    if (fault == Fault::atilde) {
        BiRational ht = splitting_form(GroupTag::sp_u1);
        ht.num += BiIntPoly::monomial(2, 2, 1);  // perturb one coefficient
        CheckResult res{"splitting/sp-u1",
                        splitting_identity_holds(bivariate_dim_form(GroupTag::sp_u1), ht),
                        "splitting numerator coefficient fault injected"};
        replace_result(rep, "splitting/sp-u1", std::move(res));
    }

    for (int n = 1; n <= 5; ++n) {
        CheckResult res{"route-equality/n=" + std::to_string(n), true, ""};
        if (!(valuation_char_series(n) == valuation_char_series_degreewise(n))) {
            res.passed = false;
            res.detail = "series and degreewise assembly differ";
        }
        rep.results.push_back(std::move(res));
    }

    for (GroupTag g : {GroupTag::sp, GroupTag::sp_u1, GroupTag::sp_sp1}) {
        CheckResult res{"closed-form-dims/" + group_name(g), true, ""};
        const auto coeffs = expand_rational(global_dim_series(g), 51);
        for (int k = 0; k <= 50; ++k)
            if (global_dim(g, k) != coeffs[static_cast<std::size_t>(k)]) {
                res.passed = false;
                res.detail = "mismatch at k=" + std::to_string(k);
                break;
            }
        rep.results.push_back(std::move(res));
    }

    int failed = 0;
    for (const auto& r : rep.results) {
        if (r.passed) {
            std::cout << "PASS " << r.name << "\n";
        } else {
            ++failed;
            std::cout << "FAIL " << r.name;
            if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
            std::cout << "\n";
        }
    }
    std::cout << "verification: " << rep.results.size() << " checks, " << failed << " failed\n";
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    std::cerr << "elapsed: " << elapsed << " ms\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dimensions and SU(2)-characters of quaternionic invariant valuations"};
    app.require_subcommand(1);

    std::string format_name = "text";
    int max_n_flag = 0;

    auto* table = app.add_subcommand("table", "Dimension table for k = 0..4n");
    int table_n = 1;
    std::string table_group = "sp";
    bool table_decompose = false;
    table->add_option("--n", table_n, "Quaternionic dimension")->required();
    table->add_option("--group", table_group, "sp | sp-u1 | sp-sp1 | all")
        ->check(CLI::IsMember({"sp", "sp-u1", "sp-sp1", "all"}));
    table->add_flag("--decompose", table_decompose, "Also print irreducible decompositions");
    table->add_option("--format", format_name, "text | csv | json");
    table->add_option("--max-n", max_n_flag, "Override the dimension cap");

    auto* series = app.add_subcommand("series", "Stable-range dimension series coefficients");
    std::string series_group = "sp";
    int series_terms = 11;
    bool series_closed = false;
    series->add_option("--group", series_group, "sp | sp-u1 | sp-sp1 | u")
        ->check(CLI::IsMember({"sp", "sp-u1", "sp-sp1", "u"}));
    series->add_option("--terms", series_terms, "Number of coefficients")
        ->check(CLI::PositiveNumber);
    series->add_flag("--closed-form", series_closed,
                     "Also print the closed-form polynomial values");
    series->add_option("--format", format_name, "text | csv | json");

    auto* chr = app.add_subcommand("character", "SU(2) characters of the valuation spaces");
    int chr_n = 1;
    int chr_k = -1;
    chr->add_option("--n", chr_n, "Quaternionic dimension")->required();
    chr->add_option("--k", chr_k, "Restrict to one degree");
    chr->add_option("--format", format_name, "text | csv | json");
    chr->add_option("--max-n", max_n_flag, "Override the dimension cap");

    auto* verify = app.add_subcommand("verify", "Run the identity verification suite");
    int verify_order = 12;
    std::string fault;
    verify->add_option("--order", verify_order, "Truncation order (>= 4)");
    verify->add_option("--inject-fault", fault,
                       "Corrupt one input to prove the checks fail: "
                       "cg-bound | denominator | atilde");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        const OutputFormat format = parse_format(format_name);
        if (table->parsed()) {
            const int cap = max_n_cap(max_n_flag);
            if (table_n < 1 || table_n > cap) {
                std::cerr << "n must be between 1 and " << cap << "\n";
                return kUsageError;
            }
            return cmd_table(table_n, table_group, table_decompose, format);
        }
        if (series->parsed()) return cmd_series(series_group, series_terms, series_closed, format);
        if (chr->parsed()) {
            const int cap = max_n_cap(max_n_flag);
            if (chr_n < 1 || chr_n > cap) {
                std::cerr << "n must be between 1 and " << cap << "\n";
                return kUsageError;
            }
            if (chr_k >= 0 && chr_k > 4 * chr_n) {
                std::cerr << "k must be between 0 and " << 4 * chr_n << "\n";
                return kUsageError;
            }
            return cmd_character(chr_n, chr_k >= 0 ? std::optional<int>(chr_k) : std::nullopt,
                                 format);
        }
        if (verify->parsed()) {
            if (verify_order < 4) {
                std::cerr << "order must be >= 4\n";
                return kUsageError;
            }
            return cmd_verify(verify_order, fault);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsageError;
}
