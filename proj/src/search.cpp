#include "jordanlab/search.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace jordanlab {

using ordered_json = nlohmann::ordered_json;

std::string profile_id(Profile p) {
    switch (p) {
        case Profile::CharViolated: return "char_violated";
        case Profile::NoUnit: return "no_unit";
        case Profile::Noncommutative: return "noncommutative";
    }
    return "?";
}

std::optional<Profile> parse_profile(const std::string& id) {
    if (id == "char_violated") return Profile::CharViolated;
    if (id == "no_unit") return Profile::NoUnit;
    if (id == "noncommutative") return Profile::Noncommutative;
    return std::nullopt;
}

namespace {

std::string kind_id(FindingKind k) {
    switch (k) {
        case FindingKind::Verification: return "verification";
        case FindingKind::Counterexample: return "counterexample";
        case FindingKind::PremiseFailure: return "premise_failure";
    }
    return "?";
}

std::string outcome_id(Outcome o) {
    switch (o) {
        case Outcome::Verified: return "verified";
        case Outcome::Refuted: return "refuted";
        case Outcome::PremiseFailed: return "premise_failed";
    }
    return "?";
}

std::string images_csv(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

// True when the (pair, n) row actually violates the profile's hypothesis.
bool profile_violated(Profile profile, const FiniteRing& a, const FiniteRing& b, int n) {
    switch (profile) {
        case Profile::CharViolated: return !char_exceeds(b, n);
        case Profile::NoUnit: return !a.unit().has_value();
        case Profile::Noncommutative: return !a.commutative() || !b.commutative();
    }
    return false;
}

}  // namespace

std::vector<ClassificationRow> run_classification(const Catalog& catalog,
                                                  const std::vector<RingPair>& pairs,
                                                  int n_min, int n_max,
                                                  const Budgets& budgets) {
    std::vector<ClassificationRow> rows;
    for (const auto& [la, lb] : pairs) {
        const RingPtr& a = catalog.get(la);
        const RingPtr& b = catalog.get(lb);
        for (int n = n_min; n <= n_max; ++n) {
            ClassificationRow row;
            row.ring_a = la;
            row.ring_b = lb;
            row.n = n;
            try {
                auto maps = enumerate_additive_maps(a, b, nullptr, budgets.enum_budget);
                row.additive = static_cast<long long>(maps.size());
                for (const auto& h : maps) {
                    if (is_n_jordan(h, 2)) ++row.jordan;
                    if (!is_n_jordan(h, n)) continue;
                    ++row.n_jordan;
                    // Only n-Jordan maps can be n-homs or anti-n-homs.
                    if (is_n_hom(h, n, budgets.tuple_budget)) ++row.n_hom;
                    if (is_anti_n_hom(h, n, budgets.tuple_budget)) ++row.anti_n_hom;
                }
            } catch (const BudgetExceeded&) {
                row.budget_exceeded = true;
            } catch (const TupleBudgetExceeded&) {
                row.budget_exceeded = true;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

SearchResult find_counterexamples(const Catalog& catalog, Profile profile,
                                  const std::vector<RingPair>& pairs, int n_min,
                                  int n_max, const Budgets& budgets) {
    SearchResult result;
    for (const auto& [la, lb] : pairs) {
        const RingPtr& a = catalog.get(la);
        const RingPtr& b = catalog.get(lb);
        for (int n = n_min; n <= n_max; ++n) {
            if (!profile_violated(profile, *a, *b, n)) {
                result.findings.push_back(
                    {FindingKind::Verification, "cor25", la, lb, n, std::nullopt,
                     "profile mismatch: hypothesis '" + profile_id(profile) +
                         "' is not violated on this pair"});
                continue;
            }
            try {
                NJordanFilter filter(n);
                auto maps = enumerate_additive_maps(a, b, &filter, budgets.enum_budget);
                long long hits = 0;
                for (const auto& h : maps) {
                    bool hom = is_n_hom(h, n, budgets.tuple_budget);
                    bool anti = is_anti_n_hom(h, n, budgets.tuple_budget);
                    if (hom && anti) continue;
                    MapWitness w{h.generator_images(), std::nullopt};
                    if (!hom && !anti) {
                        ++hits;
                        result.findings.push_back(
                            {FindingKind::Counterexample, "cor25", la, lb, n, w,
                             "n-Jordan map [" + images_csv(w.gen_images) +
                                 "] is neither an n-hom nor an anti-n-hom (n=" +
                                 std::to_string(n) + ")"});
                    } else {
                        result.findings.push_back(
                            {FindingKind::Verification, "cor25", la, lb, n, w,
                             std::string("near miss: fails ") +
                                 (hom ? "anti-n-hom" : "n-hom") + " only"});
                    }
                }
                if (hits == 0) {
                    result.findings.push_back(
                        {FindingKind::Verification, "cor25", la, lb, n, std::nullopt,
                         "no counterexample among " + std::to_string(maps.size()) +
                             " n-Jordan maps"});
                }
            } catch (const BudgetExceeded& e) {
                result.partial = true;
                result.findings.push_back(
                    {FindingKind::PremiseFailure, "cor25", la, lb, n, std::nullopt,
                     std::string("row skipped: ") + e.what()});
            } catch (const TupleBudgetExceeded& e) {
                result.partial = true;
                result.findings.push_back(
                    {FindingKind::PremiseFailure, "cor25", la, lb, n, std::nullopt,
                     std::string("row skipped: ") + e.what()});
            }
        }
    }
    return result;
}

bool replay_finding(const Catalog& catalog, const Finding& finding,
                    const Budgets& budgets) {
    if (finding.kind != FindingKind::Counterexample || !finding.witness) return true;
    const RingPtr& a = catalog.get(finding.ring_a);
    const RingPtr& b = catalog.get(finding.ring_b);
    AdditiveMap h = map_from_generator_images(a, b, finding.witness->gen_images);
    return is_n_jordan(h, finding.n) && !is_n_hom(h, finding.n, budgets.tuple_budget) &&
           !is_anti_n_hom(h, finding.n, budgets.tuple_budget);
}

namespace {

ordered_json run_json(const RunInfo& run) {
    return ordered_json{
        {"catalog_hash", run.catalog_hash}, {"seed", run.seed}, {"partial", run.partial}};
}

ordered_json witness_json(const MapWitness& w) {
    ordered_json j{{"gen_images", w.gen_images}};
    if (w.tuple) j["tuple"] = *w.tuple;
    return j;
}

}  // namespace

nlohmann::ordered_json map_to_json(const AdditiveMap& h) {
    return ordered_json{{"domain", h.domain().label()},
                        {"codomain", h.codomain().label()},
                        {"gen_images", h.generator_images()}};
}

AdditiveMap map_from_json(const Catalog& catalog, const nlohmann::json& j) {
    return map_from_generator_images(catalog.get(j.at("domain").get<std::string>()),
                                     catalog.get(j.at("codomain").get<std::string>()),
                                     j.at("gen_images").get<std::vector<int>>());
}

nlohmann::ordered_json findings_to_json(const RunInfo& run, const std::vector<Finding>& findings) {
    ordered_json items = ordered_json::array();
    for (const auto& f : findings) {
        ordered_json j{{"kind", kind_id(f.kind)},
                       {"statement", f.statement},
                       {"rings", {f.ring_a, f.ring_b}},
                       {"n", f.n}};
        if (f.witness) j["witness"] = witness_json(*f.witness);
        j["narrative"] = f.narrative;
        items.push_back(std::move(j));
    }
    return ordered_json{{"run", run_json(run)}, {"findings", std::move(items)}};
}

nlohmann::ordered_json classification_to_json(const RunInfo& run,
                                      const std::vector<ClassificationRow>& rows) {
    ordered_json items = ordered_json::array();
    for (const auto& r : rows) {
        items.push_back(ordered_json{{"rings", {r.ring_a, r.ring_b}},
                                     {"n", r.n},
                                     {"additive", r.additive},
                                     {"jordan", r.jordan},
                                     {"n_jordan", r.n_jordan},
                                     {"n_hom", r.n_hom},
                                     {"anti_n_hom", r.anti_n_hom},
                                     {"budget_exceeded", r.budget_exceeded}});
    }
    return ordered_json{{"run", run_json(run)}, {"rows", std::move(items)}};
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    ordered_json j{{"statement", statement_id(report.statement)},
                   {"rings", {report.ring_a, report.ring_b}},
                   {"n", report.n},
                   {"mode", report.mode},
                   {"outcome", outcome_id(report.outcome)}};
    if (!report.detail.empty()) j["detail"] = report.detail;
    if (report.witness) j["witness"] = witness_json(*report.witness);
    j["tuples_checked"] = report.tuples_checked;
    j["maps_checked"] = report.maps_checked;
    return j;
}

std::string findings_to_text(const RunInfo& run, const std::vector<Finding>& findings) {
    std::ostringstream out;
    out << "run catalog_hash=" << run.catalog_hash << " seed=" << run.seed
        << " partial=" << (run.partial ? "true" : "false") << "\n";
    out << std::left << std::setw(16) << "kind" << std::setw(8) << "stmt" << std::setw(12)
        << "A" << std::setw(12) << "B" << std::setw(4) << "n" << std::setw(20) << "witness"
        << "narrative" << "\n";
    for (const auto& f : findings) {
        out << std::left << std::setw(16) << kind_id(f.kind) << std::setw(8) << f.statement
            << std::setw(12) << f.ring_a << std::setw(12) << f.ring_b << std::setw(4) << f.n
            << std::setw(20) << (f.witness ? images_csv(f.witness->gen_images) : "-")
            << f.narrative << "\n";
    }
    return out.str();
}

std::string classification_to_text(const RunInfo& run,
                                   const std::vector<ClassificationRow>& rows) {
    std::ostringstream out;
    out << "run catalog_hash=" << run.catalog_hash << " seed=" << run.seed
        << " partial=" << (run.partial ? "true" : "false") << "\n";
    out << std::left << std::setw(12) << "A" << std::setw(12) << "B" << std::setw(4) << "n"
        << std::right << std::setw(10) << "additive" << std::setw(10) << "jordan"
        << std::setw(10) << "n-jordan" << std::setw(10) << "n-hom" << std::setw(12)
        << "anti-n-hom" << std::setw(8) << "budget" << "\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(12) << r.ring_a << std::setw(12) << r.ring_b
            << std::setw(4) << r.n << std::right << std::setw(10) << r.additive
            << std::setw(10) << r.jordan << std::setw(10) << r.n_jordan << std::setw(10)
            << r.n_hom << std::setw(12) << r.anti_n_hom << std::setw(8)
            << (r.budget_exceeded ? "over" : "ok") << "\n";
    }
    return out.str();
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    out << statement_id(report.statement) << " " << report.ring_a << " -> " << report.ring_b
        << " n=" << report.n << " mode=" << report.mode
        << " outcome=" << outcome_id(report.outcome);
    if (!report.detail.empty()) out << " detail=\"" << report.detail << "\"";
    if (report.witness) out << " witness=[" << images_csv(report.witness->gen_images) << "]";
    out << " tuples_checked=" << report.tuples_checked
        << " maps_checked=" << report.maps_checked << "\n";
    return out.str();
}

void emit_report(const std::string& content, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file " + path.string());
    out << content;
    if (!out) throw Error("write failure on " + path.string());
}

}  // namespace jordanlab
