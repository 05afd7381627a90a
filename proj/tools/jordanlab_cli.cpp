// jlab: inspect ring catalogs, verify the lemma/theorem suite, classify
// additive maps, and search for sharpness counterexamples.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "jordanlab/catalog.hpp"
#include "jordanlab/jordan.hpp"
#include "jordanlab/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitPremiseFailed = 3;
constexpr int kExitBudget = 4;
constexpr int kExitRefuted = 5;

struct CommonOpts {
    std::string catalog_path;
    std::string out_path;
    std::string format = "json";
    std::uint64_t seed = 0;
    long long tuple_budget = jordanlab::Budgets{}.tuple_budget;
    long long enum_budget = jordanlab::Budgets{}.enum_budget;
    int carrier_cap = jordanlab::kDefaultCarrierCap;
    std::string n_list = "2,3,4";
    int jobs = 0;  // 0 = available parallelism; rows currently run in order
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--catalog", o.catalog_path, "ring catalog JSON file")->required();
    cmd->add_option("--out", o.out_path, "report output path (default: stdout)");
    cmd->add_option("--format", o.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--seed", o.seed, "seed for sampled modes");
    cmd->add_option("--tuple-budget", o.tuple_budget, "max element-operations per sweep");
    cmd->add_option("--enum-budget", o.enum_budget, "max raw map assignments");
    cmd->add_option("--carrier-cap", o.carrier_cap, "max ring carrier size");
    cmd->add_option("--n", o.n_list, "comma-separated n values");
    cmd->add_option("--jobs", o.jobs, "worker cap");
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    if (out.empty()) throw jordanlab::Error("empty integer list");
    return out;
}

std::vector<int> parse_n_list(const std::string& s) {
    auto out = parse_int_list(s);
    for (int n : out) {
        if (n < 2 || n > jordanlab::kMaxN) {
            throw jordanlab::Error("n must lie in [2, 12], got " + std::to_string(n));
        }
    }
    return out;
}

std::vector<jordanlab::RingPair> parse_pairs(const std::vector<std::string>& raw,
                                             const jordanlab::Catalog& catalog) {
    std::vector<jordanlab::RingPair> pairs;
    if (raw.empty()) {
        for (const auto& a : catalog.labels()) {
            for (const auto& b : catalog.labels()) pairs.emplace_back(a, b);
        }
        return pairs;
    }
    for (const auto& spec : raw) {
        auto colon = spec.find(':');
        if (colon == std::string::npos) {
            throw jordanlab::Error("pair must be A:B, got " + spec);
        }
        pairs.emplace_back(spec.substr(0, colon), spec.substr(colon + 1));
    }
    return pairs;
}

void write_out(const CommonOpts& o, const std::string& content) {
    if (o.out_path.empty()) {
        std::cout << content;
    } else {
        jordanlab::emit_report(content, o.out_path);
    }
}

std::string render_json(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

int run_ring_show(const CommonOpts& o, const std::string& label) {
    auto catalog = jordanlab::Catalog::from_file(o.catalog_path, o.carrier_cap);
    const auto& ring = catalog.get(label);
    std::ostringstream out;
    out << label << ": size=" << ring->size()
        << (ring->unit() ? " unital(e=" + std::to_string(*ring->unit()) + ")" : " no-unit")
        << (ring->commutative() ? " commutative" : " noncommutative") << "\n";
    out << "  basis:";
    const auto& basis = ring->basis();
    for (std::size_t i = 0; i < basis.generators.size(); ++i) {
        out << " " << basis.generators[i] << ":" << basis.orders[i];
    }
    out << "\n  char>n:";
    for (int n = 2; n <= 7; ++n) {
        out << " n=" << n << (jordanlab::char_exceeds(*ring, n) ? "+" : "-");
    }
    out << "\n";
    write_out(o, out.str());
    return kExitOk;
}

int exit_code_for(const jordanlab::VerificationReport& report) {
    switch (report.outcome) {
        case jordanlab::Outcome::Verified: return kExitOk;
        case jordanlab::Outcome::PremiseFailed: return kExitPremiseFailed;
        case jordanlab::Outcome::Refuted: return kExitRefuted;
    }
    return kExitConfig;
}

int run_verify(const CommonOpts& o, const std::string& statement_id,
               const std::string& la, const std::string& lb, int n,
               const std::string& map_csv, const std::string& branch_id,
               const std::string& mode_id, long long samples) {
    using namespace jordanlab;
    auto statement = parse_statement(statement_id);
    if (!statement || *statement == Statement::Lemma21) {
        throw Error("unknown statement: " + statement_id);
    }
    if (n < 2 || n > kMaxN) {
        throw Error("n must lie in [2, 12], got " + std::to_string(n));
    }
    auto catalog = Catalog::from_file(o.catalog_path, o.carrier_cap);
    const auto& a = catalog.get(la);
    const auto& b = catalog.get(lb);
    Budgets budgets{o.tuple_budget, o.enum_budget};
    VerifyMode mode = mode_id == "sampled" ? VerifyMode::sample(samples, o.seed)
                                           : VerifyMode::exhaustive();

    std::optional<AdditiveMap> map;
    if (!map_csv.empty()) {
        map = map_from_generator_images(a, b, parse_int_list(map_csv));
    }

    VerificationReport report;
    switch (*statement) {
        case Statement::Lemma22:
            if (!map) throw Error("lemma22 requires --map");
            report = verify_lemma22(*map, n, mode, budgets);
            break;
        case Statement::Thm23:
            report = verify_theorem23(a, b, n, budgets);
            break;
        case Statement::Thm24:
            if (map) {
                report.statement = Statement::Thm24;
                report.ring_a = la;
                report.ring_b = lb;
                report.n = n;
                report.mode = "exhaustive";
                try {
                    Decomposition d = herstein_decompose(*map, n);
                    report.maps_checked = 1;
                    report.tuples_checked = a->size();
                    if (!d.all_ok()) {
                        report.outcome = Outcome::Refuted;
                        report.witness = MapWitness{map->generator_images(), std::nullopt};
                        report.detail = "implementation bug: decomposition check failed";
                    }
                } catch (const NoUnit& e) {
                    report.outcome = Outcome::PremiseFailed;
                    report.detail = e.what();
                } catch (const CharTooSmall& e) {
                    report.outcome = Outcome::PremiseFailed;
                    report.detail = e.what();
                } catch (const NotNJordan& e) {
                    report.outcome = Outcome::PremiseFailed;
                    report.detail = e.what();
                }
            } else {
                report = verify_theorem24(a, b, n, budgets);
            }
            break;
        case Statement::Cor25:
            report = verify_corollary25(a, b, n,
                                        branch_id == "anti" ? Branch::Anti : Branch::Hom,
                                        budgets);
            break;
        default:
            throw Error("unsupported statement");
    }

    std::string content = o.format == "text" ? report_to_text(report)
                                             : render_json(report_to_json(report));
    write_out(o, content);
    return exit_code_for(report);
}

int run_classify(const CommonOpts& o, const std::vector<std::string>& raw_pairs) {
    using namespace jordanlab;
    auto catalog = Catalog::from_file(o.catalog_path, o.carrier_cap);
    auto pairs = parse_pairs(raw_pairs, catalog);
    auto ns = parse_n_list(o.n_list);
    Budgets budgets{o.tuple_budget, o.enum_budget};

    std::vector<ClassificationRow> rows;
    for (int n : ns) {
        auto part = run_classification(catalog, pairs, n, n, budgets);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    bool partial = false;
    for (const auto& r : rows) partial = partial || r.budget_exceeded;
    RunInfo run{catalog.hash(), o.seed, partial};

    std::string content = o.format == "text"
                              ? classification_to_text(run, rows)
                              : render_json(classification_to_json(run, rows));
    write_out(o, content);
    return partial ? kExitBudget : kExitOk;
}

int run_search(const CommonOpts& o, const std::string& profile_id_str,
               const std::vector<std::string>& raw_pairs) {
    using namespace jordanlab;
    auto profile = parse_profile(profile_id_str);
    if (!profile) throw Error("unknown profile: " + profile_id_str);
    auto catalog = Catalog::from_file(o.catalog_path, o.carrier_cap);
    auto pairs = parse_pairs(raw_pairs, catalog);
    auto ns = parse_n_list(o.n_list);
    Budgets budgets{o.tuple_budget, o.enum_budget};

    std::vector<Finding> findings;
    bool partial = false;
    for (int n : ns) {
        auto part = find_counterexamples(catalog, *profile, pairs, n, n, budgets);
        findings.insert(findings.end(), part.findings.begin(), part.findings.end());
        partial = partial || part.partial;
    }
    RunInfo run{catalog.hash(), o.seed, partial};

    std::string content = o.format == "text"
                              ? findings_to_text(run, findings)
                              : render_json(findings_to_json(run, findings));
    write_out(o, content);
    return partial ? kExitBudget : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring laboratory for n-Jordan homomorphisms"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string label, statement, ring_a, ring_b, map_csv, profile;
    std::string branch = "hom", mode = "exhaustive";
    int n = 2;
    long long samples = 100'000;
    std::vector<std::string> raw_pairs;

    auto* show = app.add_subcommand("ring-show", "print a catalog ring's structure");
    add_common(show, opts);
    show->add_option("label", label)->required();

    auto* verify = app.add_subcommand("verify", "verify one statement on a ring pair");
    add_common(verify, opts);
    verify->add_option("statement", statement, "lemma22|thm23|thm24|cor25")->required();
    verify->add_option("A", ring_a)->required();
    verify->add_option("B", ring_b)->required();
    verify->add_option("N", n)->required();
    verify->add_option("--map", map_csv, "generator images, comma-separated");
    verify->add_option("--branch", branch)->check(CLI::IsMember({"hom", "anti"}));
    verify->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
    verify->add_option("--samples", samples, "tuples per sampled run");

    auto* classify = app.add_subcommand("classify", "map counts per (pair, n)");
    add_common(classify, opts);
    classify->add_option("--pairs", raw_pairs, "pairs as A:B (default: all)");

    auto* search = app.add_subcommand("search", "hunt for sharpness counterexamples");
    add_common(search, opts);
    search->add_option("--profile", profile, "char_violated|no_unit|noncommutative")
        ->required();
    search->add_option("--pairs", raw_pairs, "pairs as A:B (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (show->parsed()) return run_ring_show(opts, label);
        if (verify->parsed()) {
            return run_verify(opts, statement, ring_a, ring_b, n, map_csv, branch, mode,
                              samples);
        }
        if (classify->parsed()) return run_classify(opts, raw_pairs);
        if (search->parsed()) return run_search(opts, profile, raw_pairs);
    } catch (const jordanlab::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const jordanlab::TupleBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const jordanlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
