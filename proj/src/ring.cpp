#include "jordanlab/ring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jordanlab {

long long exact_factorial(int n) {
    if (n < 0 || n > kMaxN) {
        throw std::invalid_argument("factorial argument outside [0, 12]");
    }
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

int FiniteRing::scalar(long long k, int x) const {
    int ord = order_[x];
    long long r = k % ord;
    if (r < 0) r += ord;
    int acc = 0;
    for (long long i = 0; i < r; ++i) acc = add(acc, x);
    return acc;
}

int FiniteRing::power(int x, int n) const {
    int acc = x;
    for (int i = 1; i < n; ++i) acc = mul(acc, x);
    return acc;
}

int FiniteRing::from_coordinates(const std::vector<int>& coords) const {
    int acc = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        acc = add(acc, scalar(coords[i], basis_.generators[i]));
    }
    return acc;
}

void FiniteRing::validate() const {
    const int n = size_;
    for (int x = 0; x < n; ++x) {
        if (add(0, x) != x || add(x, 0) != x) {
            throw AxiomViolation("additive-identity", {x});
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (add(x, y) != add(y, x)) {
                throw AxiomViolation("additive-commutativity", {x, y});
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        bool has_inverse = false;
        for (int y = 0; y < n; ++y) {
            if (add(x, y) == 0) {
                has_inverse = true;
                break;
            }
        }
        if (!has_inverse) throw AxiomViolation("additive-inverse", {x});
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                if (add(add(x, y), z) != add(x, add(y, z))) {
                    throw AxiomViolation("additive-associativity", {x, y, z});
                }
                if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
                    throw AxiomViolation("multiplicative-associativity", {x, y, z});
                }
                if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) {
                    throw AxiomViolation("left-distributivity", {x, y, z});
                }
                if (mul(add(x, y), z) != add(mul(x, z), mul(y, z))) {
                    throw AxiomViolation("right-distributivity", {x, y, z});
                }
            }
        }
    }
    if (unit_) {
        for (int x = 0; x < n; ++x) {
            if (mul(*unit_, x) != x || mul(x, *unit_) != x) {
                throw AxiomViolation("unit", {*unit_, x});
            }
        }
    }
}

namespace {

// Greedy basis: repeatedly take a maximal-order element whose cyclic
// subgroup meets the current span only in 0. Each pick extends the span
// by a direct factor, so coordinates stay unique.
AdditiveBasis compute_basis(const FiniteRing& r) {
    const int n = r.size();
    AdditiveBasis basis;
    std::vector<char> spanned(n, 0);
    spanned[0] = 1;
    int span_count = 1;
    while (span_count < n) {
        int best = -1;
        int best_order = 0;
        for (int g = 1; g < n; ++g) {
            if (spanned[g]) continue;
            bool clean = true;
            for (int m = g; m != 0; m = r.add(m, g)) {
                if (spanned[m]) {
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            int ord = r.additive_order(g);
            if (ord > best_order) {
                best_order = ord;
                best = g;
            }
        }
        if (best == -1) {
            throw std::logic_error("basis computation stalled on " + r.label());
        }
        basis.generators.push_back(best);
        basis.orders.push_back(best_order);
        std::vector<int> old_span;
        old_span.reserve(span_count);
        for (int x = 0; x < n; ++x) {
            if (spanned[x]) old_span.push_back(x);
        }
        for (int s : old_span) {
            int m = s;
            for (int c = 1; c < best_order; ++c) {
                m = r.add(m, best);
                spanned[m] = 1;
            }
        }
        span_count *= best_order;
    }
    return basis;
}

}  // namespace

void FiniteRing::derive() {
    const int n = size_;
    neg_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (add(x, y) == 0) {
                neg_[x] = y;
                break;
            }
        }
    }
    order_.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        int acc = x;
        int ord = 1;
        while (acc != 0) {
            acc = add(acc, x);
            ++ord;
        }
        order_[x] = (x == 0) ? 1 : ord;
    }
    commutative_ = true;
    for (int x = 0; x < n && commutative_; ++x) {
        for (int y = 0; y < n; ++y) {
            if (mul(x, y) != mul(y, x)) {
                commutative_ = false;
                break;
            }
        }
    }
    if (!unit_) {
        for (int e = 0; e < n; ++e) {
            bool ok = true;
            for (int x = 0; x < n; ++x) {
                if (mul(e, x) != x || mul(x, e) != x) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                unit_ = e;
                break;
            }
        }
    }
    basis_ = compute_basis(*this);
    // Coordinate table; the odometer walk doubles as a bijection check.
    const std::size_t k = basis_.generators.size();
    coords_.assign(n, {});
    std::vector<int> c(k, 0);
    std::vector<char> seen(n, 0);
    while (true) {
        int x = from_coordinates(c);
        if (seen[x]) {
            throw std::logic_error("basis coordinates not unique on " + label_);
        }
        seen[x] = 1;
        coords_[x] = c;
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++c[i] < basis_.orders[i]) break;
            c[i] = 0;
            if (i == 0) {
                for (int y = 0; y < n; ++y) {
                    if (!seen[y]) {
                        throw std::logic_error("basis does not span " + label_);
                    }
                }
                return;
            }
        }
        if (k == 0) {
            return;  // zero ring
        }
    }
}

RingPtr ring_from_tables(int size, const std::vector<std::vector<int>>& add_table,
                         const std::vector<std::vector<int>>& mul_table,
                         std::optional<int> unit_hint, const std::string& label) {
    if (size < 1) throw AxiomViolation("positive-size", {});
    auto check_shape = [&](const std::vector<std::vector<int>>& t, const char* name) {
        if (static_cast<int>(t.size()) != size) {
            throw AxiomViolation(std::string(name) + "-shape", {});
        }
        for (const auto& row : t) {
            if (static_cast<int>(row.size()) != size) {
                throw AxiomViolation(std::string(name) + "-shape", {});
            }
            for (int v : row) {
                if (v < 0 || v >= size) {
                    throw AxiomViolation(std::string(name) + "-range", {v});
                }
            }
        }
    };
    check_shape(add_table, "add");
    check_shape(mul_table, "mul");

    // Locate the additive identity and renumber it to index 0.
    int zero = -1;
    for (int z = 0; z < size && zero == -1; ++z) {
        bool ok = true;
        for (int x = 0; x < size; ++x) {
            if (add_table[z][x] != x) {
                ok = false;
                break;
            }
        }
        if (ok) zero = z;
    }
    if (zero == -1) throw AxiomViolation("additive-identity", {});

    std::vector<int> perm(size);  // old index -> new index
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[zero]);

    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
    ring->size_ = size;
    ring->label_ = label;
    ring->add_.assign(static_cast<std::size_t>(size) * size, 0);
    ring->mul_.assign(static_cast<std::size_t>(size) * size, 0);
    for (int x = 0; x < size; ++x) {
        for (int y = 0; y < size; ++y) {
            ring->add_[perm[x] * size + perm[y]] = perm[add_table[x][y]];
            ring->mul_[perm[x] * size + perm[y]] = perm[mul_table[x][y]];
        }
    }
    if (unit_hint) {
        if (*unit_hint < 0 || *unit_hint >= size) {
            throw AxiomViolation("unit-range", {*unit_hint});
        }
        ring->unit_ = perm[*unit_hint];
    }
    ring->validate();
    ring->derive();
    return ring;
}

RingPtr cyclic_ring(int m, const std::string& label) {
    if (m < 1) throw std::invalid_argument("cyclic_ring requires m >= 1");
    std::vector<std::vector<int>> add(m, std::vector<int>(m));
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
            add[x][y] = (x + y) % m;
            mul[x][y] = (x * y) % m;
        }
    }
    std::string name = label.empty() ? "Z" + std::to_string(m) : label;
    return ring_from_tables(m, add, mul, m == 1 ? 0 : 1 % m, name);
}

RingPtr direct_product(const RingPtr& a, const RingPtr& b, const std::string& label) {
    const int na = a->size();
    const int nb = b->size();
    const int n = na * nb;
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int xa = x / nb, xb = x % nb;
            int ya = y / nb, yb = y % nb;
            add[x][y] = a->add(xa, ya) * nb + b->add(xb, yb);
            mul[x][y] = a->mul(xa, ya) * nb + b->mul(xb, yb);
        }
    }
    std::optional<int> unit;
    if (a->unit() && b->unit()) unit = *a->unit() * nb + *b->unit();
    std::string name = label.empty() ? a->label() + "x" + b->label() : label;
    return ring_from_tables(n, add, mul, unit, name);
}

RingPtr matrix_ring(int m, int k, int carrier_cap, const std::string& label) {
    if (m < 2 || k < 1) throw std::invalid_argument("matrix_ring requires m >= 2, k >= 1");
    long long size = 1;
    for (int i = 0; i < k * k; ++i) {
        size *= m;
        if (size > carrier_cap) throw CarrierTooLarge(size, carrier_cap);
    }
    const int n = static_cast<int>(size);
    const int kk = k * k;
    auto decode = [&](int idx, std::vector<int>& entries) {
        for (int p = kk - 1; p >= 0; --p) {
            entries[p] = idx % m;
            idx /= m;
        }
    };
    auto encode = [&](const std::vector<int>& entries) {
        int idx = 0;
        for (int p = 0; p < kk; ++p) idx = idx * m + entries[p];
        return idx;
    };
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<int> ex(kk), ey(kk), ez(kk);
    for (int x = 0; x < n; ++x) {
        decode(x, ex);
        for (int y = 0; y < n; ++y) {
            decode(y, ey);
            for (int p = 0; p < kk; ++p) ez[p] = (ex[p] + ey[p]) % m;
            add[x][y] = encode(ez);
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < k; ++j) {
                    int s = 0;
                    for (int t = 0; t < k; ++t) {
                        s += ex[i * k + t] * ey[t * k + j];
                    }
                    ez[i * k + j] = s % m;
                }
            }
            mul[x][y] = encode(ez);
        }
    }
    std::vector<int> id(kk, 0);
    for (int i = 0; i < k; ++i) id[i * k + i] = 1;
    std::string name =
        label.empty() ? "M" + std::to_string(k) + "(Z" + std::to_string(m) + ")" : label;
    return ring_from_tables(n, add, mul, encode(id), name);
}

AdditiveBasis additive_group_basis(const FiniteRing& ring) { return ring.basis(); }

bool char_exceeds(const FiniteRing& ring, int n) {
    if (n < 2 || n > kMaxN) {
        throw std::invalid_argument("char_exceeds requires 2 <= n <= 12");
    }
    const long long nf = exact_factorial(n);
    bool brute = true;
    for (int x = 1; x < ring.size(); ++x) {
        if (ring.scalar(nf, x) == 0) {
            brute = false;
            break;
        }
    }
    bool fast = std::gcd(nf, static_cast<long long>(ring.size())) == 1;
    if (brute != fast) {
        throw std::logic_error("char_exceeds cross-check failed on " + ring.label());
    }
    return brute;
}

}  // namespace jordanlab
