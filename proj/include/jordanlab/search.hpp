#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jordanlab/catalog.hpp"
#include "jordanlab/jordan.hpp"

#include <nlohmann/json_fwd.hpp>

namespace jordanlab {

struct ClassificationRow {
    std::string ring_a;
    std::string ring_b;
    int n = 0;
    long long additive = 0;
    long long jordan = 0;
    long long n_jordan = 0;
    long long n_hom = 0;
    long long anti_n_hom = 0;
    bool budget_exceeded = false;
};

enum class Profile { CharViolated, NoUnit, Noncommutative };
std::string profile_id(Profile p);
std::optional<Profile> parse_profile(const std::string& id);

enum class FindingKind { Verification, Counterexample, PremiseFailure };

struct Finding {
    FindingKind kind = FindingKind::Verification;
    std::string statement;
    std::string ring_a;
    std::string ring_b;
    int n = 0;
    std::optional<MapWitness> witness;
    std::string narrative;
};

using RingPair = std::pair<std::string, std::string>;

/// Per-(pair, n) map counts; a row whose enumeration blows the budget is
/// recorded with budget_exceeded instead of aborting the sweep.
std::vector<ClassificationRow> run_classification(const Catalog& catalog,
                                                  const std::vector<RingPair>& pairs,
                                                  int n_min, int n_max,
                                                  const Budgets& budgets = {});

struct SearchResult {
    std::vector<Finding> findings;
    bool partial = false;  // some row hit its budget and was skipped
};

/// n-Jordan maps that are neither n-homs nor anti-n-homs, on pairs that
/// actually violate the profile's hypothesis. Near-misses failing only
/// one branch are reported as plain verification findings.
SearchResult find_counterexamples(const Catalog& catalog, Profile profile,
                                  const std::vector<RingPair>& pairs, int n_min,
                                  int n_max, const Budgets& budgets = {});

struct RunInfo {
    std::string catalog_hash;
    std::uint64_t seed = 0;
    bool partial = false;
};

nlohmann::ordered_json map_to_json(const AdditiveMap& h);
AdditiveMap map_from_json(const Catalog& catalog, const nlohmann::json& j);

nlohmann::ordered_json findings_to_json(const RunInfo& run, const std::vector<Finding>& findings);
nlohmann::ordered_json classification_to_json(const RunInfo& run,
                                      const std::vector<ClassificationRow>& rows);
nlohmann::ordered_json report_to_json(const VerificationReport& report);

std::string findings_to_text(const RunInfo& run, const std::vector<Finding>& findings);
std::string classification_to_text(const RunInfo& run,
                                   const std::vector<ClassificationRow>& rows);
std::string report_to_text(const VerificationReport& report);

/// Writes content to path; identical inputs produce byte-identical files.
void emit_report(const std::string& content, const std::filesystem::path& path);

/// Re-runs the classification predicates on a finding's witness map and
/// checks they reproduce the recorded claim. Used by replay tests and the
/// report consumers' trust chain.
bool replay_finding(const Catalog& catalog, const Finding& finding,
                    const Budgets& budgets = {});

}  // namespace jordanlab
