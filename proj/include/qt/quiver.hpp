#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed or inconsistent input (length mismatch, index out of range, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (e.g. theta(d) != 0).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Non-negative integer vector indexed by the vertices of a quiver.
class DimensionVector {
public:
    DimensionVector() = default;
    explicit DimensionVector(std::vector<std::int64_t> entries);
    DimensionVector(std::initializer_list<std::int64_t> entries);

    static DimensionVector zero(std::size_t n);
    static DimensionVector unit(std::size_t n, std::size_t index);

    std::size_t size() const noexcept { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    /// |e|, the sum of all entries.
    std::int64_t total() const noexcept;
    bool is_zero() const noexcept;
    /// Componentwise e <= other.
    bool leq(const DimensionVector& other) const;

    DimensionVector operator+(const DimensionVector& other) const;
    /// Throws InputError if the result would have a negative entry.
    DimensionVector operator-(const DimensionVector& other) const;
    DimensionVector scaled(std::int64_t factor) const;

    std::string to_string() const;

    friend auto operator<=>(const DimensionVector&, const DimensionVector&) = default;
    friend bool operator==(const DimensionVector&, const DimensionVector&) = default;

private:
    std::vector<std::int64_t> entries_;
};

/// Integer linear functional on dimension vectors, identified with its coefficient vector.
class StabilityParameter {
public:
    StabilityParameter() = default;
    explicit StabilityParameter(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
    StabilityParameter(std::initializer_list<std::int64_t> entries) : entries_(entries) {}

    std::size_t size() const noexcept { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

    /// theta(e) = sum_i theta_i e_i.
    Integer operator()(const DimensionVector& e) const;
    StabilityParameter scaled(std::int64_t factor) const;

    std::string to_string() const;

    friend bool operator==(const StabilityParameter&, const StabilityParameter&) = default;

private:
    std::vector<std::int64_t> entries_;
};

/// Finite directed multigraph. Vertices are 1-based at the interface, 0-based internally.
class Quiver {
public:
    using Arrow = std::pair<std::size_t, std::size_t>;

    /// `arrows` holds 1-based (source, target) pairs; parallel arrows are repeated.
    Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

    /// Quiver with two vertices and `m` arrows 1 -> 2.
    static Quiver kronecker(std::size_t m);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }

    /// Number of arrows i -> j, 0-based indices.
    std::int64_t adjacency(std::size_t i, std::size_t j) const { return adjacency_[i * vertex_count_ + j]; }

    bool is_acyclic() const noexcept { return acyclic_; }

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.vertex_count_ == b.vertex_count_ && a.adjacency_ == b.adjacency_;
    }

private:
    std::size_t vertex_count_;
    std::vector<Arrow> arrows_;
    std::vector<std::int64_t> adjacency_;
    bool acyclic_;
};

/// <a,b> = sum_i a_i b_i - sum_{arrows i->j} a_i b_j.
Integer euler_pairing(const Quiver& q, const DimensionVector& a, const DimensionVector& b);

/// theta_can = <d,-> - <-,d>, divided by the gcd of its entries; always satisfies theta_can(d) = 0.
StabilityParameter canonical_stability(const Quiver& q, const DimensionVector& d);

/// mu(e) = theta(e) / |e| in lowest terms. Throws PreconditionError for e = 0.
Rational slope(const StabilityParameter& theta, const DimensionVector& e);

/// True iff theta(e) != 0 for every 0 < e < d. Requires theta(d) = 0.
bool is_theta_coprime(const StabilityParameter& theta, const DimensionVector& d);

/// All 0 <= e <= d in lexicographic order.
std::vector<DimensionVector> subdimension_vectors(const DimensionVector& d);

/// Number of subdimension vectors, prod_i (d_i + 1), without materializing them.
Integer subdimension_count(const DimensionVector& d);

void require_same_length(const Quiver& q, const DimensionVector& d, const char* what);
void require_same_length(const Quiver& q, const StabilityParameter& theta);

/// num / den in lowest terms with a positive denominator. Throws PreconditionError for den = 0.
Rational make_rational(Integer num, Integer den);

/// Formats a rational as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& r);

}  // namespace qt
