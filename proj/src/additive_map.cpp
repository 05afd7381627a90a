#include "jordanlab/additive_map.hpp"

#include <algorithm>

namespace jordanlab {

namespace {

std::vector<int> expand_values(const FiniteRing& a, const FiniteRing& b,
                               const std::vector<int>& images) {
    std::vector<int> values(a.size(), 0);
    for (int x = 0; x < a.size(); ++x) {
        const auto& coords = a.coordinates(x);
        int acc = 0;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            acc = b.add(acc, b.scalar(coords[i], images[i]));
        }
        values[x] = acc;
    }
    return values;
}

bool fully_additive(const FiniteRing& a, const FiniteRing& b,
                    const std::vector<int>& values) {
    if (values[0] != 0) return false;
    for (int x = 0; x < a.size(); ++x) {
        for (int y = 0; y < a.size(); ++y) {
            if (values[a.add(x, y)] != b.add(values[x], values[y])) return false;
        }
    }
    return true;
}

}  // namespace

AdditiveMap map_from_generator_images(const RingPtr& domain, const RingPtr& codomain,
                                      const std::vector<int>& images) {
    const auto& basis = domain->basis();
    if (images.size() != basis.generators.size()) {
        throw std::invalid_argument("one image per basis generator expected");
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (basis.orders[i] % codomain->additive_order(images[i]) != 0) {
            throw OrderIncompatible(static_cast<int>(i));
        }
    }
    std::vector<int> values = expand_values(*domain, *codomain, images);
    if (!fully_additive(*domain, *codomain, values)) {
        throw std::logic_error("expanded map failed the additivity check");
    }
    return AdditiveMap(domain, codomain, std::move(values), images);
}

bool NJordanFilter::accept(const AdditiveMap& h) const {
    const FiniteRing& a = h.domain();
    const FiniteRing& b = h.codomain();
    for (int x = 0; x < a.size(); ++x) {
        if (h(a.power(x, n_)) != b.power(h(x), n_)) return false;
    }
    return true;
}

bool NJordanFilter::viable_prefix(const FiniteRing& domain, const FiniteRing& codomain,
                                  std::span<const int> images) const {
    const auto& basis = domain.basis();
    const std::size_t k = images.size();
    // Walk the subgroup spanned by the first k generators.
    std::vector<int> coords(k, 0);
    while (true) {
        int x = 0;
        int hx = 0;
        for (std::size_t i = 0; i < k; ++i) {
            x = domain.add(x, domain.scalar(coords[i], basis.generators[i]));
            hx = codomain.add(hx, codomain.scalar(coords[i], images[i]));
        }
        int xn = domain.power(x, n_);
        const auto& xn_coords = domain.coordinates(xn);
        bool inside = true;
        for (std::size_t i = k; i < xn_coords.size(); ++i) {
            if (xn_coords[i] != 0) {
                inside = false;
                break;
            }
        }
        if (inside) {
            int hxn = 0;
            for (std::size_t i = 0; i < k; ++i) {
                hxn = codomain.add(hxn, codomain.scalar(xn_coords[i], images[i]));
            }
            if (hxn != codomain.power(hx, n_)) return false;
        }
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++coords[i] < basis.orders[i]) break;
            coords[i] = 0;
            if (i == 0) return true;
        }
        if (k == 0) return true;
    }
}

long long count_raw_assignments(const FiniteRing& domain, const FiniteRing& codomain) {
    long long total = 1;
    for (int order : domain.basis().orders) {
        long long candidates = 0;
        for (int b = 0; b < codomain.size(); ++b) {
            if (order % codomain.additive_order(b) == 0) ++candidates;
        }
        total *= candidates;
        if (total > (1LL << 62) / codomain.size()) break;  // saturate, avoid overflow
    }
    return total;
}

std::vector<AdditiveMap> enumerate_additive_maps(const RingPtr& domain,
                                                 const RingPtr& codomain,
                                                 const MapFilter* filter,
                                                 long long budget) {
    const auto& basis = domain->basis();
    const std::size_t k = basis.generators.size();

    if (filter == nullptr) {
        long long raw = count_raw_assignments(*domain, *codomain);
        if (raw > budget) throw BudgetExceeded(raw);
    }

    std::vector<std::vector<int>> candidates(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (int b = 0; b < codomain->size(); ++b) {
            if (basis.orders[i] % codomain->additive_order(b) == 0) {
                candidates[i].push_back(b);
            }
        }
    }

    std::vector<AdditiveMap> out;
    std::vector<int> images;
    images.reserve(k);
    long long visited = 0;

    auto emit_leaf = [&]() {
        ++visited;
        if (visited > budget) throw BudgetExceeded(visited);
        AdditiveMap h = map_from_generator_images(domain, codomain, images);
        if (filter == nullptr || filter->accept(h)) out.push_back(std::move(h));
    };

    std::function<void(std::size_t)> walk = [&](std::size_t depth) {
        if (depth == k) {
            emit_leaf();
            return;
        }
        for (int b : candidates[depth]) {
            images.push_back(b);
            if (filter == nullptr ||
                filter->viable_prefix(*domain, *codomain, images)) {
                walk(depth + 1);
            } else {
                ++visited;
                if (visited > budget) throw BudgetExceeded(visited);
            }
            images.pop_back();
        }
    };
    walk(0);
    return out;
}

}  // namespace jordanlab
