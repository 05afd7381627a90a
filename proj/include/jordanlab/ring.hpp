#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jordanlab/errors.hpp"

namespace jordanlab {

/// Generating set of a finite abelian group with unique coordinate
/// representation: every element is sum(c_i * g_i) for exactly one
/// tuple with 0 <= c_i < orders[i].
struct AdditiveBasis {
    std::vector<int> generators;
    std::vector<int> orders;
};

inline constexpr int kDefaultCarrierCap = 256;
inline constexpr int kMaxN = 12;  // n! must stay exact in 64 bits

/// Exact finite ring given by Cayley tables. Element 0 is always the
/// additive identity; constructors renumber input tables to enforce this.
/// Immutable after construction and safe to share across threads.
class FiniteRing {
public:
    int size() const { return size_; }
    const std::string& label() const { return label_; }

    int add(int x, int y) const { return add_[x * size_ + y]; }
    int mul(int x, int y) const { return mul_[x * size_ + y]; }
    int neg(int x) const { return neg_[x]; }
    int sub(int x, int y) const { return add(x, neg_[y]); }

    std::optional<int> unit() const { return unit_; }
    bool commutative() const { return commutative_; }

    const AdditiveBasis& basis() const { return basis_; }

    /// Additive order of x (smallest k >= 1 with k*x = 0).
    int additive_order(int x) const { return order_[x]; }

    /// k-fold ring addition of x; k is reduced modulo additive_order(x).
    int scalar(long long k, int x) const;

    /// x^n by repeated table multiplication, left-associated. n >= 1.
    int power(int x, int n) const;

    /// Coordinates of x with respect to basis().
    const std::vector<int>& coordinates(int x) const { return coords_[x]; }

    /// Element with the given basis coordinates.
    int from_coordinates(const std::vector<int>& coords) const;

    friend std::shared_ptr<const FiniteRing> ring_from_tables(
        int size, const std::vector<std::vector<int>>& add_table,
        const std::vector<std::vector<int>>& mul_table,
        std::optional<int> unit_hint, const std::string& label);

private:
    FiniteRing() = default;

    void validate() const;
    void derive();

    int size_ = 0;
    std::vector<int> add_;
    std::vector<int> mul_;
    std::vector<int> neg_;
    std::vector<int> order_;
    std::optional<int> unit_;
    bool commutative_ = false;
    AdditiveBasis basis_;
    std::vector<std::vector<int>> coords_;
    std::string label_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Validates the tables as a ring and returns the constructed ring.
/// Renumbers elements when the additive identity is not index 0.
/// Throws AxiomViolation naming the failed axiom with witness elements.
RingPtr ring_from_tables(int size, const std::vector<std::vector<int>>& add_table,
                         const std::vector<std::vector<int>>& mul_table,
                         std::optional<int> unit_hint = std::nullopt,
                         const std::string& label = "ring");

/// Z_m with addition and multiplication mod m. m = 1 gives the zero ring.
RingPtr cyclic_ring(int m, const std::string& label = "");

/// Componentwise product ring; pair (a, b) is encoded as a*|B| + b.
RingPtr direct_product(const RingPtr& a, const RingPtr& b,
                       const std::string& label = "");

/// k x k matrices over Z_m; entries packed as base-m digits, row-major,
/// entry (0,0) most significant. Throws CarrierTooLarge above the cap.
RingPtr matrix_ring(int m, int k, int carrier_cap = kDefaultCarrierCap,
                    const std::string& label = "");

/// Greedy additive-group basis; also available as ring.basis().
AdditiveBasis additive_group_basis(const FiniteRing& ring);

/// True iff n! * x = 0 forces x = 0. Cross-checked internally against
/// gcd(n!, |R|) = 1; disagreement throws std::logic_error.
bool char_exceeds(const FiniteRing& ring, int n);

/// n! as an exact 64-bit integer; requires 0 <= n <= kMaxN.
long long exact_factorial(int n);

}  // namespace jordanlab
