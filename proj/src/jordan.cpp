#include "jordanlab/jordan.hpp"

#include <algorithm>
#include <random>

namespace jordanlab {

namespace {

long long pow_saturating(long long base, int exp, long long cap) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

// Calls f on every tuple in {0..size-1}^n, odometer order.
template <typename F>
void for_each_tuple(int size, int n, F&& f) {
    std::vector<int> t(n, 0);
    while (true) {
        if (!f(t)) return;
        int i = n;
        while (i > 0) {
            --i;
            if (++t[i] < size) break;
            t[i] = 0;
            if (i == 0) return;
        }
    }
}

int product_of(const FiniteRing& r, const std::vector<int>& xs) {
    int acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = r.mul(acc, xs[i]);
    return acc;
}

}  // namespace

std::string VerifyMode::describe() const {
    if (!sampled) return "exhaustive";
    return "sampled(" + std::to_string(sample_count) + "," + std::to_string(seed) + ")";
}

std::string statement_id(Statement s) {
    switch (s) {
        case Statement::Lemma21: return "lemma21";
        case Statement::Lemma22: return "lemma22";
        case Statement::Thm23: return "thm23";
        case Statement::Thm24: return "thm24";
        case Statement::Cor25: return "cor25";
    }
    return "?";
}

std::optional<Statement> parse_statement(const std::string& id) {
    if (id == "lemma21") return Statement::Lemma21;
    if (id == "lemma22") return Statement::Lemma22;
    if (id == "thm23") return Statement::Thm23;
    if (id == "thm24") return Statement::Thm24;
    if (id == "cor25") return Statement::Cor25;
    return std::nullopt;
}

bool is_n_jordan(const AdditiveMap& h, int n) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    const FiniteRing& a = h.domain();
    const FiniteRing& b = h.codomain();
    for (int x = 0; x < a.size(); ++x) {
        if (h(a.power(x, n)) != b.power(h(x), n)) return false;
    }
    return true;
}

bool is_n_hom(const AdditiveMap& h, int n, long long tuple_budget) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    const FiniteRing& a = h.domain();
    const FiniteRing& b = h.codomain();
    long long tuples = pow_saturating(a.size(), n, tuple_budget);
    if (tuples > tuple_budget) throw TupleBudgetExceeded(tuples);
    bool ok = true;
    for_each_tuple(a.size(), n, [&](const std::vector<int>& t) {
        int lhs = h(product_of(a, t));
        int rhs = h(t[0]);
        for (int i = 1; i < n; ++i) rhs = b.mul(rhs, h(t[i]));
        if (lhs != rhs) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

bool is_anti_n_hom(const AdditiveMap& h, int n, long long tuple_budget) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    const FiniteRing& a = h.domain();
    const FiniteRing& b = h.codomain();
    long long tuples = pow_saturating(a.size(), n, tuple_budget);
    if (tuples > tuple_budget) throw TupleBudgetExceeded(tuples);
    bool ok = true;
    for_each_tuple(a.size(), n, [&](const std::vector<int>& t) {
        int lhs = h(product_of(a, t));
        int rhs = h(t[n - 1]);
        for (int i = n - 2; i >= 0; --i) rhs = b.mul(rhs, h(t[i]));
        if (lhs != rhs) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

ClassificationRecord classify(const AdditiveMap& h, int n, long long tuple_budget) {
    ClassificationRecord rec;
    rec.map_key = h.generator_images();
    rec.n = n;
    rec.is_jordan = is_n_jordan(h, 2);
    rec.is_n_jordan = is_n_jordan(h, n);
    rec.is_n_hom = is_n_hom(h, n, tuple_budget);
    rec.is_anti_n_hom = is_anti_n_hom(h, n, tuple_budget);
    return rec;
}

int jordan_defect(const AdditiveMap& h, const std::vector<int>& tuple) {
    const FiniteRing& a = h.domain();
    const FiniteRing& b = h.codomain();
    int lhs = h(product_of(a, tuple));
    int rhs = h(tuple[0]);
    for (std::size_t i = 1; i < tuple.size(); ++i) rhs = b.mul(rhs, h(tuple[i]));
    return b.sub(lhs, rhs);
}

int symmetrized_defect(const AdditiveMap& h, const std::vector<int>& tuple) {
    const int n = static_cast<int>(tuple.size());
    if (n < 2 || n > 8) throw std::invalid_argument("tuple length must be in [2, 8]");
    const FiniteRing& b = h.codomain();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<int> permuted(n);
    int acc = 0;
    do {
        for (int i = 0; i < n; ++i) permuted[i] = tuple[perm[i]];
        acc = b.add(acc, jordan_defect(h, permuted));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

MultiAdditiveMap MultiAdditiveMap::defect_form(AdditiveMap h, int n) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    return MultiAdditiveMap(Form::Defect, std::move(h), n);
}

MultiAdditiveMap MultiAdditiveMap::commutator_form(AdditiveMap g, int n) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    return MultiAdditiveMap(Form::Commutator, std::move(g), n);
}

int MultiAdditiveMap::evaluate(const std::vector<int>& tuple) const {
    const FiniteRing& b = base_.codomain();
    if (form_ == Form::Defect) return jordan_defect(base_, tuple);
    int fwd = base_(tuple[0]);
    int bwd = base_(tuple[n_ - 1]);
    for (int i = 1; i < n_; ++i) {
        fwd = b.mul(fwd, base_(tuple[i]));
        bwd = b.mul(bwd, base_(tuple[n_ - 1 - i]));
    }
    return b.sub(fwd, bwd);
}

namespace {

// Symmetrized sum of an arbitrary multi-additive form over one tuple.
int symmetrized_sum(const MultiAdditiveMap& f, const std::vector<int>& tuple) {
    const int n = f.arity();
    const FiniteRing& b = f.codomain();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<int> permuted(n);
    int acc = 0;
    do {
        for (int i = 0; i < n; ++i) permuted[i] = tuple[perm[i]];
        acc = b.add(acc, f.evaluate(permuted));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

std::vector<int> sampled_tuple(std::mt19937_64& rng, int size, int n) {
    std::uniform_int_distribution<int> pick(0, size - 1);
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = pick(rng);
    return t;
}

}  // namespace

VerificationReport check_lemma21(const MultiAdditiveMap& f, VerifyMode mode) {
    const FiniteRing& a = f.domain();
    const int n = f.arity();
    for (int x = 0; x < a.size(); ++x) {
        std::vector<int> diag(n, x);
        if (f.evaluate(diag) != 0) throw HypothesisFailed(x);
    }

    VerificationReport report;
    report.statement = Statement::Lemma21;
    report.ring_a = a.label();
    report.ring_b = f.codomain().label();
    report.n = n;
    report.mode = mode.describe();

    auto check = [&](const std::vector<int>& t) {
        ++report.tuples_checked;
        if (symmetrized_sum(f, t) != 0) {
            report.outcome = Outcome::Refuted;
            report.witness = MapWitness{{}, t};
            return false;
        }
        return true;
    };

    if (mode.sampled) {
        std::mt19937_64 rng(mode.seed);
        for (long long i = 0; i < mode.sample_count; ++i) {
            if (!check(sampled_tuple(rng, a.size(), n))) break;
        }
    } else {
        for_each_tuple(a.size(), n, check);
    }
    return report;
}

VerificationReport verify_lemma22(const AdditiveMap& h, int n, VerifyMode mode,
                                  const Budgets& budgets) {
    VerificationReport report;
    report.statement = Statement::Lemma22;
    report.ring_a = h.domain().label();
    report.ring_b = h.codomain().label();
    report.n = n;
    report.mode = mode.describe();

    if (!is_n_jordan(h, n)) {
        report.outcome = Outcome::PremiseFailed;
        report.detail = "map is not " + std::to_string(n) + "-Jordan";
        report.witness = MapWitness{h.generator_images(), std::nullopt};
        return report;
    }
    report.maps_checked = 1;

    const int size = h.domain().size();
    if (!mode.sampled) {
        long long ops = pow_saturating(size, n, budgets.tuple_budget);
        if (ops <= budgets.tuple_budget / exact_factorial(n)) {
            ops *= exact_factorial(n);
        } else {
            ops = budgets.tuple_budget + 1;
        }
        if (ops > budgets.tuple_budget) throw TupleBudgetExceeded(ops);
    }

    auto check = [&](const std::vector<int>& t) {
        ++report.tuples_checked;
        if (symmetrized_defect(h, t) != 0) {
            report.outcome = Outcome::Refuted;
            report.witness = MapWitness{h.generator_images(), t};
            report.detail = "implementation bug: symmetrized defect nonzero";
            return false;
        }
        return true;
    };

    if (mode.sampled) {
        std::mt19937_64 rng(mode.seed);
        for (long long i = 0; i < mode.sample_count; ++i) {
            if (!check(sampled_tuple(rng, size, n))) break;
        }
    } else {
        for_each_tuple(size, n, check);
    }
    return report;
}

VerificationReport verify_theorem23(const RingPtr& a, const RingPtr& b, int n,
                                    const Budgets& budgets) {
    VerificationReport report;
    report.statement = Statement::Thm23;
    report.ring_a = a->label();
    report.ring_b = b->label();
    report.n = n;
    report.mode = "exhaustive";

    if (!a->commutative()) {
        report.outcome = Outcome::PremiseFailed;
        report.detail = "A non-commutative";
        return report;
    }
    if (!b->commutative()) {
        report.outcome = Outcome::PremiseFailed;
        report.detail = "B non-commutative";
        return report;
    }
    if (!char_exceeds(*b, n)) {
        report.outcome = Outcome::PremiseFailed;
        report.detail = "char(B) not greater than " + std::to_string(n);
        return report;
    }

    NJordanFilter filter(n);
    auto maps = enumerate_additive_maps(a, b, &filter, budgets.enum_budget);
    for (const auto& h : maps) {
        ++report.maps_checked;
        report.tuples_checked += pow_saturating(a->size(), n, budgets.tuple_budget);
        if (!is_n_hom(h, n, budgets.tuple_budget)) {
            report.outcome = Outcome::Refuted;
            report.witness = MapWitness{h.generator_images(), std::nullopt};
            report.detail = "implementation bug: n-Jordan map is not an n-hom";
            return report;
        }
    }
    return report;
}

Decomposition herstein_decompose(const AdditiveMap& h, int n) {
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    const FiniteRing& a = h.domain();
    const FiniteRing& b = h.codomain();
    if (!a.unit()) throw NoUnit();
    if (!char_exceeds(b, n)) throw CharTooSmall(b.label(), n);
    if (!is_n_jordan(h, n)) throw NotNJordan(n);

    const int e = *a.unit();
    const int c = h(e);

    // Left/right multiplication by c, k times. k = 0 applies no factor,
    // sidestepping c^0 on a possibly non-unital codomain.
    auto lmul = [&](int k, int v) {
        for (int i = 0; i < k; ++i) v = b.mul(c, v);
        return v;
    };
    auto rmul = [&](int v, int k) {
        for (int i = 0; i < k; ++i) v = b.mul(v, c);
        return v;
    };

    std::vector<int> tau_values(a.size());
    for (int x = 0; x < a.size(); ++x) {
        tau_values[x] = (n == 2) ? h(x) : lmul(n - 2, h(x));
    }
    std::vector<int> tau_images;
    for (int g : a.basis().generators) tau_images.push_back(tau_values[g]);
    AdditiveMap tau =
        map_from_generator_images(h.domain_ptr(), h.codomain_ptr(), tau_images);
    if (tau.values() != tau_values) {
        throw std::logic_error("tau is not additive");
    }

    Decomposition d{c, std::move(tau), {}, {}, {}, {}, {}, {}, {}};

    auto fail_at = [](CheckStatus& s, int x) {
        if (s.ok) {
            s.ok = false;
            s.witness = x;
        }
    };

    if (c != b.power(c, n)) fail_at(d.c_power, e);
    for (int x = 0; x < a.size(); ++x) {
        int lhs1 = b.scalar(n, h(x));
        int rhs1 = 0;
        for (int j = 1; j <= n; ++j) {
            rhs1 = b.add(rhs1, rmul(lmul(n - j, h(x)), j - 1));
        }
        if (lhs1 != rhs1) fail_at(d.eq1, x);
        if (b.mul(h(x), c) != b.mul(c, h(x))) fail_at(d.eq4_centrality, x);
        if (h(x) != lmul(n - 1, h(x))) fail_at(d.eq5, x);
        int x2 = a.mul(x, x);
        if (h(x2) != lmul(n - 2, b.mul(h(x), h(x)))) fail_at(d.eq6, x);
        int tx = d.tau(x);
        if (d.tau(x2) != b.mul(tx, tx)) fail_at(d.tau_jordan, x);
        if (h(x) != b.mul(c, tx)) fail_at(d.factorization, x);
    }
    return d;
}

VerificationReport verify_theorem24(const RingPtr& a, const RingPtr& b, int n,
                                    const Budgets& budgets) {
    VerificationReport report;
    report.statement = Statement::Thm24;
    report.ring_a = a->label();
    report.ring_b = b->label();
    report.n = n;
    report.mode = "exhaustive";

    if (!a->unit()) {
        report.outcome = Outcome::PremiseFailed;
        report.detail = "A has no unit";
        return report;
    }
    if (!char_exceeds(*b, n)) {
        report.outcome = Outcome::PremiseFailed;
        report.detail = "char(B) not greater than " + std::to_string(n);
        return report;
    }

    NJordanFilter filter(n);
    auto maps = enumerate_additive_maps(a, b, &filter, budgets.enum_budget);
    for (const auto& h : maps) {
        ++report.maps_checked;
        Decomposition d = herstein_decompose(h, n);
        if (!d.all_ok()) {
            report.outcome = Outcome::Refuted;
            report.witness = MapWitness{h.generator_images(), std::nullopt};
            report.detail = "implementation bug: decomposition check failed";
            return report;
        }
    }
    return report;
}

VerificationReport verify_corollary25(const RingPtr& a, const RingPtr& b, int n,
                                      Branch branch, const Budgets& budgets) {
    VerificationReport report;
    report.statement = Statement::Cor25;
    report.ring_a = a->label();
    report.ring_b = b->label();
    report.n = n;
    report.mode = "exhaustive";

    if (!a->unit()) {
        report.outcome = Outcome::PremiseFailed;
        report.detail = "A has no unit";
        return report;
    }
    if (!char_exceeds(*b, n)) {
        report.outcome = Outcome::PremiseFailed;
        report.detail = "char(B) not greater than " + std::to_string(n);
        return report;
    }

    auto holds = [&](const AdditiveMap& h, int k) {
        return branch == Branch::Hom ? is_n_hom(h, k, budgets.tuple_budget)
                                     : is_anti_n_hom(h, k, budgets.tuple_budget);
    };

    // Phase 1: the corollary's hypothesis on Jordan homomorphisms.
    NJordanFilter jordan_filter(2);
    auto jordan_maps = enumerate_additive_maps(a, b, &jordan_filter, budgets.enum_budget);
    for (const auto& h : jordan_maps) {
        ++report.maps_checked;
        if (!holds(h, 2)) {
            report.outcome = Outcome::PremiseFailed;
            report.detail = branch == Branch::Hom
                                ? "a Jordan homomorphism is not a homomorphism"
                                : "a Jordan homomorphism is not an anti-homomorphism";
            report.witness = MapWitness{h.generator_images(), std::nullopt};
            return report;
        }
    }

    // Phase 2: the conclusion on n-Jordan homomorphisms.
    NJordanFilter filter(n);
    auto maps = enumerate_additive_maps(a, b, &filter, budgets.enum_budget);
    for (const auto& h : maps) {
        ++report.maps_checked;
        report.tuples_checked += pow_saturating(a->size(), n, budgets.tuple_budget);
        if (!holds(h, n)) {
            report.outcome = Outcome::Refuted;
            report.witness = MapWitness{h.generator_images(), std::nullopt};
            report.detail = "implementation bug: conclusion failed on an n-Jordan map";
            return report;
        }
    }
    return report;
}

}  // namespace jordanlab
