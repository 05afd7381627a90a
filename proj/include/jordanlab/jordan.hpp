#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jordanlab/additive_map.hpp"

namespace jordanlab {

struct Budgets {
    long long tuple_budget = 100'000'000;  // element-operations per sweep
    long long enum_budget = kDefaultEnumBudget;
};

/// Exhaustive, or sampled with a seeded reproducible generator.
struct VerifyMode {
    bool sampled = false;
    long long sample_count = 100'000;
    std::uint64_t seed = 0;

    static VerifyMode exhaustive() { return {}; }
    static VerifyMode sample(long long count, std::uint64_t seed) {
        return {true, count, seed};
    }
    std::string describe() const;
};

struct ClassificationRecord {
    std::vector<int> map_key;  // generator images
    int n = 0;
    bool is_jordan = false;  // the n = 2 case
    bool is_n_jordan = false;
    bool is_n_hom = false;
    bool is_anti_n_hom = false;
};

struct CheckStatus {
    bool ok = true;
    std::optional<int> witness;  // domain element exhibiting the failure
};

/// Output of herstein_decompose: h = c * tau with c = h(e) central in the
/// image and tau a Jordan homomorphism, plus per-equation diagnostics.
struct Decomposition {
    int c = 0;
    AdditiveMap tau;
    CheckStatus c_power;         // c = c^n
    CheckStatus eq1;             // n h(x) = sum_j c^{n-j} h(x) c^{j-1}
    CheckStatus eq4_centrality;  // h(x) c = c h(x)
    CheckStatus eq5;             // h(x) = c^{n-1} h(x)
    CheckStatus eq6;             // h(x^2) = c^{n-2} h(x)^2
    CheckStatus tau_jordan;      // tau(x^2) = tau(x)^2
    CheckStatus factorization;   // h(x) = c tau(x)

    bool all_ok() const {
        return c_power.ok && eq1.ok && eq4_centrality.ok && eq5.ok && eq6.ok &&
               tau_jordan.ok && factorization.ok;
    }
};

enum class Statement { Lemma21, Lemma22, Thm23, Thm24, Cor25 };
std::string statement_id(Statement s);
std::optional<Statement> parse_statement(const std::string& id);

enum class Outcome { Verified, Refuted, PremiseFailed };

struct MapWitness {
    std::vector<int> gen_images;
    std::optional<std::vector<int>> tuple;
};

struct VerificationReport {
    Statement statement;
    std::string ring_a;
    std::string ring_b;
    int n = 0;
    std::string mode;
    Outcome outcome = Outcome::Verified;
    std::optional<MapWitness> witness;
    std::string detail;  // premise failure explanation, empty otherwise
    long long tuples_checked = 0;
    long long maps_checked = 0;
};

// --- classification predicates -------------------------------------------

/// h(x^n) = h(x)^n for all x.
bool is_n_jordan(const AdditiveMap& h, int n);

/// h(x1...xn) = h(x1)...h(xn) for all n-tuples.
bool is_n_hom(const AdditiveMap& h, int n, long long tuple_budget = Budgets{}.tuple_budget);

/// h(x1...xn) = h(xn)...h(x1) for all n-tuples.
bool is_anti_n_hom(const AdditiveMap& h, int n,
                   long long tuple_budget = Budgets{}.tuple_budget);

ClassificationRecord classify(const AdditiveMap& h, int n,
                              long long tuple_budget = Budgets{}.tuple_budget);

// --- defect machinery ------------------------------------------------------

/// h(x1...xn) - h(x1)...h(xn) in the codomain.
int jordan_defect(const AdditiveMap& h, const std::vector<int>& tuple);

/// Sum of jordan_defect over all n! permutations of the tuple,
/// generated in lexicographic order of position permutations.
int symmetrized_defect(const AdditiveMap& h, const std::vector<int>& tuple);

/// Multi-additive map in one of the two composite forms the lemma is
/// exercised with: the Jordan defect of an additive h, or the product
/// commutator g(x1)...g(xn) - g(xn)...g(x1) of an additive g.
class MultiAdditiveMap {
public:
    static MultiAdditiveMap defect_form(AdditiveMap h, int n);
    static MultiAdditiveMap commutator_form(AdditiveMap g, int n);

    int arity() const { return n_; }
    const FiniteRing& domain() const { return base_.domain(); }
    const FiniteRing& codomain() const { return base_.codomain(); }
    int evaluate(const std::vector<int>& tuple) const;

private:
    enum class Form { Defect, Commutator };
    MultiAdditiveMap(Form form, AdditiveMap base, int n)
        : form_(form), base_(std::move(base)), n_(n) {}

    Form form_;
    AdditiveMap base_;
    int n_;
};

// --- statement verifiers ----------------------------------------------------

/// Checks the diagonal hypothesis f(x,...,x) = 0, then verifies the
/// symmetrized sum vanishes on all (or sampled) tuples. Throws
/// HypothesisFailed when the diagonal condition does not hold.
VerificationReport check_lemma21(const MultiAdditiveMap& f,
                                 VerifyMode mode = VerifyMode::exhaustive());

VerificationReport verify_lemma22(const AdditiveMap& h, int n,
                                  VerifyMode mode = VerifyMode::exhaustive(),
                                  const Budgets& budgets = {});

VerificationReport verify_theorem23(const RingPtr& a, const RingPtr& b, int n,
                                    const Budgets& budgets = {});

/// Theorem 2.4 construction: c = h(e), tau(x) = c^{n-2} h(x) (tau = h for
/// n = 2), with all seven checks evaluated. Preconditions throw NoUnit,
/// CharTooSmall, NotNJordan.
Decomposition herstein_decompose(const AdditiveMap& h, int n);

/// Runs herstein_decompose over every n-Jordan map A -> B; any failed
/// check is a Refuted outcome (implementation bug by Theorem 2.4).
VerificationReport verify_theorem24(const RingPtr& a, const RingPtr& b, int n,
                                    const Budgets& budgets = {});

enum class Branch { Hom, Anti };

VerificationReport verify_corollary25(const RingPtr& a, const RingPtr& b, int n,
                                      Branch branch, const Budgets& budgets = {});

}  // namespace jordanlab
