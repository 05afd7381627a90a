#include "doctest.h"

#include <cmath>
#include <random>

#include "jordanlab/jordan.hpp"

using namespace jordanlab;

namespace {

AdditiveMap identity_map(const RingPtr& r) {
    std::vector<int> images = r->basis().generators;
    return map_from_generator_images(r, r, images);
}

AdditiveMap scaling_map(const RingPtr& r, int a) {
    // x -> a*x on a cyclic ring.
    return map_from_generator_images(r, r, {r->scalar(a, 1)});
}

// h(a, b) = (a + b, 0) on Z2 x Z2: both generators map to (1, 0) = index 2.
AdditiveMap boolean_fold_map(const RingPtr& b4) {
    std::vector<int> images;
    for (int g : b4->basis().generators) {
        (void)g;
        images.push_back(2);
    }
    return map_from_generator_images(b4, b4, images);
}

// Transpose on M_k(Z_m); additive, so generator images determine it.
AdditiveMap transpose_map(const RingPtr& mk, int m, int k) {
    auto transpose_index = [&](int idx) {
        std::vector<int> d(k * k);
        for (int p = k * k - 1; p >= 0; --p) {
            d[p] = idx % m;
            idx /= m;
        }
        int out = 0;
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) out = out * m + d[j * k + i];
        }
        return out;
    };
    std::vector<int> images;
    for (int g : mk->basis().generators) images.push_back(transpose_index(g));
    auto h = map_from_generator_images(mk, mk, images);
    for (int x = 0; x < mk->size(); ++x) {
        REQUIRE(h(x) == transpose_index(x));
    }
    return h;
}

}  // namespace

TEST_CASE("is_n_jordan examples") {
    auto z6 = cyclic_ring(6);
    auto id6 = identity_map(z6);
    for (int n = 2; n <= 5; ++n) CHECK(is_n_jordan(id6, n));

    auto z7 = cyclic_ring(7);
    auto neg = scaling_map(z7, 6);
    CHECK(is_n_jordan(neg, 3));
    CHECK(!is_n_jordan(neg, 2));

    auto b4 = direct_product(cyclic_ring(2), cyclic_ring(2));
    CHECK(is_n_jordan(boolean_fold_map(b4), 2));
}

TEST_CASE("is_n_hom and is_anti_n_hom examples") {
    auto z7 = cyclic_ring(7);
    auto neg = scaling_map(z7, 6);
    CHECK(is_n_hom(neg, 3));

    auto b4 = direct_product(cyclic_ring(2), cyclic_ring(2));
    auto fold = boolean_fold_map(b4);
    CHECK(!is_n_hom(fold, 2));
    CHECK(!is_anti_n_hom(fold, 2));
    // The witness from the definition: x = (1,0), y = (0,1).
    CHECK(fold(b4->mul(2, 1)) == 0);
    CHECK(b4->mul(fold(2), fold(1)) == 2);

    auto zero = map_from_generator_images(b4, b4, {0, 0});
    CHECK(is_n_hom(zero, 2));
    CHECK(is_anti_n_hom(zero, 2));
}

TEST_CASE("transpose on M_2(Z3) is an anti-homomorphism but not a homomorphism") {
    auto m23 = matrix_ring(3, 2);
    auto t = transpose_map(m23, 3, 2);
    CHECK(is_anti_n_hom(t, 2));
    CHECK(!is_n_hom(t, 2));
    CHECK(is_n_jordan(t, 2));
}

TEST_CASE("tuple budget is enforced") {
    auto m23 = matrix_ring(3, 2);
    auto t = transpose_map(m23, 3, 2);
    CHECK_THROWS_AS(is_n_hom(t, 2, 100), TupleBudgetExceeded);
}

TEST_CASE("jordan_defect examples") {
    auto z7 = cyclic_ring(7);
    auto neg = scaling_map(z7, 6);
    for (int x = 0; x < 7; ++x) CHECK(jordan_defect(neg, {x, x, x}) == 0);

    auto b4 = direct_product(cyclic_ring(2), cyclic_ring(2));
    auto fold = boolean_fold_map(b4);
    CHECK(jordan_defect(fold, {2, 1}) == 2);  // ((1,0),(0,1)) -> (1,0)

    auto zero = map_from_generator_images(z7, z7, {0});
    CHECK(jordan_defect(zero, {3, 5, 2}) == 0);
}

TEST_CASE("symmetrized_defect examples and commutative specialization") {
    auto z7 = cyclic_ring(7);
    auto neg = scaling_map(z7, 6);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 6);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> t = {pick(rng), pick(rng), pick(rng)};
        CHECK(symmetrized_defect(neg, t) == 0);
    }

    auto dbl = scaling_map(z7, 2);
    CHECK(symmetrized_defect(dbl, {1, 1}) == 3);  // 2*(2 - 4) mod 7

    // On commutative rings the sum collapses to n! * defect.
    auto z6 = cyclic_ring(6);
    for (const auto& h : enumerate_additive_maps(z6, z6)) {
        for (int n = 2; n <= 3; ++n) {
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<int> t(n);
                for (auto& v : t) v = pick(rng) % 6;
                CHECK(symmetrized_defect(h, t) ==
                      z6->scalar(exact_factorial(n), jordan_defect(h, t)));
            }
        }
    }
}

TEST_CASE("check_lemma21 on both composite forms") {
    auto z7 = cyclic_ring(7);
    auto neg = scaling_map(z7, 6);
    auto defect = MultiAdditiveMap::defect_form(neg, 3);
    auto report = check_lemma21(defect);
    CHECK(report.outcome == Outcome::Verified);
    CHECK(report.tuples_checked == 343);

    auto dbl = scaling_map(z7, 2);
    CHECK_THROWS_AS(check_lemma21(MultiAdditiveMap::defect_form(dbl, 2)),
                    HypothesisFailed);

    auto m22 = matrix_ring(2, 2);
    auto some_additive = map_from_generator_images(
        m22, m22, {m22->basis().generators[1], m22->basis().generators[0],
                   m22->basis().generators[2], m22->basis().generators[3]});
    auto comm = MultiAdditiveMap::commutator_form(some_additive, 3);
    auto comm_report = check_lemma21(comm, VerifyMode::sample(2000, 42));
    CHECK(comm_report.outcome == Outcome::Verified);
    CHECK(comm_report.tuples_checked == 2000);
}

TEST_CASE("verify_lemma22") {
    auto z7 = cyclic_ring(7);
    auto neg = scaling_map(z7, 6);
    auto report = verify_lemma22(neg, 3);
    CHECK(report.outcome == Outcome::Verified);
    CHECK(report.tuples_checked == 343);

    auto m22 = matrix_ring(2, 2);
    auto id = identity_map(m22);
    auto report2 = verify_lemma22(id, 2);
    CHECK(report2.outcome == Outcome::Verified);
    CHECK(report2.tuples_checked == 256);

    auto dbl = scaling_map(z7, 2);
    auto report3 = verify_lemma22(dbl, 2);
    CHECK(report3.outcome == Outcome::PremiseFailed);

    Budgets tight;
    tight.tuple_budget = 10;
    CHECK_THROWS_AS(verify_lemma22(neg, 3, VerifyMode::exhaustive(), tight),
                    TupleBudgetExceeded);
    auto sampled = verify_lemma22(neg, 3, VerifyMode::sample(500, 9), tight);
    CHECK(sampled.outcome == Outcome::Verified);
    CHECK(sampled.tuples_checked == 500);
    CHECK(sampled.mode == "sampled(500,9)");
}

TEST_CASE("verify_theorem23") {
    auto z7 = cyclic_ring(7);
    auto report = verify_theorem23(z7, z7, 3);
    CHECK(report.outcome == Outcome::Verified);
    CHECK(report.maps_checked == 3);

    auto b4 = direct_product(cyclic_ring(2), cyclic_ring(2));
    auto report2 = verify_theorem23(b4, b4, 2);
    CHECK(report2.outcome == Outcome::PremiseFailed);
    CHECK(report2.detail == "char(B) not greater than 2");

    auto m23 = matrix_ring(3, 2);
    auto report3 = verify_theorem23(m23, z7, 3);
    CHECK(report3.outcome == Outcome::PremiseFailed);
    CHECK(report3.detail == "A non-commutative");
}

TEST_CASE("classify fills the flag lattice") {
    auto z6 = cyclic_ring(6);
    auto rec = classify(identity_map(z6), 4);
    CHECK(rec.is_jordan);
    CHECK(rec.is_n_jordan);
    CHECK(rec.is_n_hom);
    CHECK(rec.is_anti_n_hom);

    auto z7 = cyclic_ring(7);
    auto rec2 = classify(scaling_map(z7, 6), 3);
    CHECK(!rec2.is_jordan);
    CHECK(rec2.is_n_jordan);
    CHECK(rec2.is_n_hom);
    CHECK(rec2.is_anti_n_hom);

    auto b4 = direct_product(cyclic_ring(2), cyclic_ring(2));
    auto rec3 = classify(boolean_fold_map(b4), 2);
    CHECK(rec3.is_jordan);
    CHECK(rec3.is_n_jordan);
    CHECK(!rec3.is_n_hom);
    CHECK(!rec3.is_anti_n_hom);
}

TEST_CASE("implication lattice over enumerated maps") {
    std::vector<RingPtr> rings = {cyclic_ring(5), cyclic_ring(6),
                                  direct_product(cyclic_ring(2), cyclic_ring(2)),
                                  matrix_ring(2, 2)};
    for (const auto& a : rings) {
        for (const auto& b : rings) {
            auto maps = enumerate_additive_maps(a, b);
            for (int n = 2; n <= 4; ++n) {
                double tuple_cost = std::pow(a->size(), n) * double(maps.size());
                if (tuple_cost > 5e7) continue;  // keep the sweep desk-scale
                for (const auto& h : maps) {
                    auto rec = classify(h, n);
                    if (rec.is_n_hom) CHECK(rec.is_n_jordan);
                    if (rec.is_anti_n_hom) CHECK(rec.is_n_jordan);
                    if (a->commutative() && b->commutative()) {
                        CHECK(rec.is_n_hom == rec.is_anti_n_hom);
                    }
                }
            }
        }
    }
}

TEST_CASE("symmetrized defect on (x, e, ..., e) gives the uncancelled identity") {
    std::vector<RingPtr> rings = {cyclic_ring(5), cyclic_ring(7), matrix_ring(2, 2)};
    for (const auto& r : rings) {
        int e = *r->unit();
        for (int n = 2; n <= 3; ++n) {
            NJordanFilter filter(n);
            for (const auto& h : enumerate_additive_maps(r, r, &filter)) {
                int c = h(e);
                for (int x = 0; x < r->size(); ++x) {
                    // n! h(x) = (n-1)! (c^{n-1}h(x) + c^{n-2}h(x)c + ... + h(x)c^{n-1})
                    int sum = 0;
                    for (int j = 1; j <= n; ++j) {
                        int term = h(x);
                        for (int i = 0; i < n - j; ++i) term = r->mul(c, term);
                        for (int i = 0; i < j - 1; ++i) term = r->mul(term, c);
                        sum = r->add(sum, term);
                    }
                    CHECK(r->scalar(exact_factorial(n), h(x)) ==
                          r->scalar(exact_factorial(n - 1), sum));
                }
            }
        }
    }
}
