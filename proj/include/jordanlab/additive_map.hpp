#pragma once

#include <functional>
#include <span>
#include <vector>

#include "jordanlab/ring.hpp"

namespace jordanlab {

/// Additive-group homomorphism between two finite rings, stored as a full
/// value table. The images of the domain's basis generators are the
/// canonical identity of the map (equality, ordering, serialization).
class AdditiveMap {
public:
    const FiniteRing& domain() const { return *domain_; }
    const FiniteRing& codomain() const { return *codomain_; }
    const RingPtr& domain_ptr() const { return domain_; }
    const RingPtr& codomain_ptr() const { return codomain_; }

    int operator()(int x) const { return values_[x]; }
    const std::vector<int>& values() const { return values_; }
    const std::vector<int>& generator_images() const { return generator_images_; }

    bool operator==(const AdditiveMap& other) const {
        return generator_images_ == other.generator_images_;
    }
    bool operator<(const AdditiveMap& other) const {
        return generator_images_ < other.generator_images_;
    }

    friend AdditiveMap map_from_generator_images(const RingPtr& domain,
                                                 const RingPtr& codomain,
                                                 const std::vector<int>& images);

private:
    AdditiveMap(RingPtr domain, RingPtr codomain, std::vector<int> values,
                std::vector<int> generator_images)
        : domain_(std::move(domain)),
          codomain_(std::move(codomain)),
          values_(std::move(values)),
          generator_images_(std::move(generator_images)) {}

    RingPtr domain_;
    RingPtr codomain_;
    std::vector<int> values_;
    std::vector<int> generator_images_;
};

inline int evaluate(const AdditiveMap& h, int x) { return h(x); }

/// Extends generator images to the whole domain by coordinate expansion
/// and re-verifies full additivity table-wise. Throws OrderIncompatible(i)
/// when images[i] cannot be the image of generator i.
AdditiveMap map_from_generator_images(const RingPtr& domain, const RingPtr& codomain,
                                      const std::vector<int>& images);

/// Enumeration filter with optional pruning of partial generator
/// assignments. viable_prefix sees the images of the first k generators
/// and may only reject assignments no extension of which can be accepted.
class MapFilter {
public:
    virtual ~MapFilter() = default;
    virtual bool accept(const AdditiveMap& h) const = 0;
    virtual bool viable_prefix(const FiniteRing& domain, const FiniteRing& codomain,
                               std::span<const int> images) const {
        (void)domain;
        (void)codomain;
        (void)images;
        return true;
    }
};

/// Accepts maps with h(x^n) = h(x)^n for all x. Prunes a prefix by
/// checking that necessary condition on every element of the subgroup
/// spanned by the assigned generators whose n-th power stays inside it.
class NJordanFilter : public MapFilter {
public:
    explicit NJordanFilter(int n) : n_(n) {}
    bool accept(const AdditiveMap& h) const override;
    bool viable_prefix(const FiniteRing& domain, const FiniteRing& codomain,
                       std::span<const int> images) const override;

private:
    int n_;
};

inline constexpr long long kDefaultEnumBudget = 10'000'000;

/// All additive maps domain -> codomain in lexicographic order of
/// generator_images. Without a filter the raw assignment count must not
/// exceed budget (else BudgetExceeded before any enumeration); with a
/// filter, prefix pruning bounds the walk and budget caps visited
/// assignments instead.
std::vector<AdditiveMap> enumerate_additive_maps(
    const RingPtr& domain, const RingPtr& codomain, const MapFilter* filter = nullptr,
    long long budget = kDefaultEnumBudget);

/// Raw assignment count (product over generators of order-compatible
/// image counts) without enumerating.
long long count_raw_assignments(const FiniteRing& domain, const FiniteRing& codomain);

}  // namespace jordanlab
