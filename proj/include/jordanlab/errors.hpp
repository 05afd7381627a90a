#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace jordanlab {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A ring axiom failed during table validation.
class AxiomViolation : public Error {
public:
    AxiomViolation(std::string axiom, std::vector<int> witness)
        : Error("ring axiom violated: " + axiom),
          axiom_(std::move(axiom)),
          witness_(std::move(witness)) {}

    const std::string& axiom() const { return axiom_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    std::string axiom_;
    std::vector<int> witness_;
};

/// A constructor would exceed the configured carrier cap.
class CarrierTooLarge : public Error {
public:
    CarrierTooLarge(long long requested, long long cap)
        : Error("carrier size " + std::to_string(requested) +
                " exceeds cap " + std::to_string(cap)) {}
};

/// A generator image's additive order does not divide the generator's order.
class OrderIncompatible : public Error {
public:
    explicit OrderIncompatible(int generator_index)
        : Error("image order incompatible with generator " +
                std::to_string(generator_index)),
          index_(generator_index) {}

    int generator_index() const { return index_; }

private:
    int index_;
};

/// Raw enumeration size exceeds the configured budget.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(long long estimated_count)
        : Error("enumeration budget exceeded, estimated count " +
                std::to_string(estimated_count)),
          estimated_(estimated_count) {}

    long long estimated_count() const { return estimated_; }

private:
    long long estimated_;
};

/// A tuple-space sweep would exceed the configured tuple budget.
class TupleBudgetExceeded : public Error {
public:
    explicit TupleBudgetExceeded(long long estimated_ops)
        : Error("tuple budget exceeded, estimated operations " +
                std::to_string(estimated_ops)) {}
};

class NoUnit : public Error {
public:
    NoUnit() : Error("domain ring has no unit") {}
};

class CharTooSmall : public Error {
public:
    CharTooSmall(const std::string& ring_label, int n)
        : Error("characteristic of " + ring_label +
                " is not greater than " + std::to_string(n)) {}
};

class NotNJordan : public Error {
public:
    explicit NotNJordan(int n)
        : Error("map is not " + std::to_string(n) + "-Jordan") {}
};

/// Lemma 2.1's diagonal hypothesis f(x,...,x)=0 failed.
class HypothesisFailed : public Error {
public:
    explicit HypothesisFailed(int witness)
        : Error("diagonal hypothesis failed at element " +
                std::to_string(witness)),
          witness_(witness) {}

    int witness() const { return witness_; }

private:
    int witness_;
};

class UnknownLabel : public Error {
public:
    explicit UnknownLabel(const std::string& label)
        : Error("unknown ring label: " + label) {}
};

class CatalogError : public Error {
public:
    explicit CatalogError(const std::string& what)
        : Error("catalog error: " + what) {}
};

}  // namespace jordanlab
