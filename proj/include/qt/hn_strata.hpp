#pragma once

#include "qt/quiver.hpp"
#include "qt/semistability.hpp"

#include <compare>
#include <string>
#include <vector>

namespace qt {

/// Harder-Narasimhan type (d^1, ..., d^l): dimension vectors of the subquotients
/// of an HN filtration, in order of strictly decreasing slope.
///
/// Construction checks only the shape (nonempty, nonzero pieces of equal
/// length); the slope and semistability conditions depend on (q, theta) and are
/// checked by is_hn_type.
class HNType {
public:
    explicit HNType(std::vector<DimensionVector> pieces);
    HNType(std::initializer_list<DimensionVector> pieces) : HNType(std::vector<DimensionVector>(pieces)) {}

    const std::vector<DimensionVector>& pieces() const noexcept { return pieces_; }
    std::size_t length() const noexcept { return pieces_.size(); }
    const DimensionVector& operator[](std::size_t m) const { return pieces_[m]; }
    const DimensionVector& front() const { return pieces_.front(); }
    const DimensionVector& back() const { return pieces_.back(); }

    /// Sum of all pieces.
    DimensionVector total() const;
    /// The type (d) of the dense semistable stratum.
    bool is_dense() const noexcept { return pieces_.size() == 1; }

    /// "((a,b),(c,d),...)"
    std::string to_string() const;

    friend auto operator<=>(const HNType&, const HNType&) = default;
    friend bool operator==(const HNType&, const HNType&) = default;

private:
    std::vector<DimensionVector> pieces_;
};

/// Checks every HN-type invariant: pieces sum to d, slopes strictly decrease,
/// and each piece admits a semistable representation.
bool is_hn_type(GenericSubdimCache& cache, const DimensionVector& d, const StabilityParameter& theta, const HNType& t);

/// Weights of the one-parameter subgroup attached to an HN type:
/// k_m = C * mu(d^m) with C the least positive integer making every k_m integral.
struct OneParamData {
    Integer C;
    std::vector<Integer> k;
};

/// All HN types of Rep(q, d) for theta, the dense type included when the
/// semistable locus is nonempty. Sorted lexicographically by piece list.
/// Requires d != 0 and theta(d) = 0.
std::vector<HNType> enumerate_hn_types(GenericSubdimCache& cache, const DimensionVector& d,
                                       const StabilityParameter& theta);
std::vector<HNType> enumerate_hn_types(const Quiver& q, const DimensionVector& d, const StabilityParameter& theta);

/// sum_{m<n} -<d^m, d^n>; zero exactly for the dense type.
Integer codimension(const Quiver& q, const HNType& t);

OneParamData one_param_data(const StabilityParameter& theta, const HNType& t);

/// (mu(d^1), ..., mu(d^l))
std::vector<Rational> slopes(const StabilityParameter& theta, const HNType& t);

}  // namespace qt
