#pragma once

// Brute-force engine over small prime fields. Used to cross-check the
// combinatorial semistability and HN enumeration at tiny scale. A point over
// F_p certifies nonemptiness of a stratum; absence of points certifies nothing.

#include "qt/hn_strata.hpp"
#include "qt/quiver.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace qt::oracle {

inline constexpr std::uint64_t default_budget = 10'000'000;

/// QT_BUDGET if set and positive, else default_budget.
std::uint64_t configured_budget();

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const Integer& count, std::uint64_t budget);
    const Integer& count() const noexcept { return count_; }

private:
    Integer count_;
};

/// Dense row-major matrix over F_p.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> entries;

    std::uint32_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// One (d_t x d_s) matrix per arrow, in arrow order.
struct FiniteFieldRep {
    std::uint32_t field = 2;
    std::vector<Matrix> matrices;
};

/// A subspace of F_p^n given by a basis in reduced row-echelon form.
struct Subspace {
    std::size_t ambient = 0;
    std::vector<std::vector<std::uint32_t>> basis;
    std::vector<std::size_t> pivots;

    std::size_t dimension() const noexcept { return basis.size(); }
    /// Reduces v against the basis in place and reports whether it became zero.
    bool contains(std::vector<std::uint32_t> v, std::uint32_t p) const;
    bool contains(const Subspace& other, std::uint32_t p) const;
};

/// Every subspace of F_p^n, each exactly once (one RREF basis per subspace), by increasing dimension.
std::vector<Subspace> all_subspaces(std::uint32_t p, std::size_t n);

struct SubrepWitness {
    std::vector<Subspace> subspaces;  // one per vertex
    DimensionVector dimension;
};

/// Number of points of Rep(q, d) over F_p, p^(sum_a d_s d_t).
Integer point_count(std::uint32_t p, const Quiver& q, const DimensionVector& d);

/// Every representation of dimension d over F_p, in a fixed order (index digits base p).
class RepresentationStream {
public:
    /// Throws BudgetExceeded when the point count is above `budget`.
    RepresentationStream(std::uint32_t p, Quiver q, DimensionVector d, std::uint64_t budget = configured_budget());

    std::uint64_t size() const noexcept { return count_; }
    /// The representation at position `index` in the stream.
    FiniteFieldRep at(std::uint64_t index) const;
    /// Fills `rep` with the next representation; false when exhausted.
    bool next(FiniteFieldRep& rep);

    const Quiver& quiver() const noexcept { return quiver_; }
    const DimensionVector& dimension() const noexcept { return dimension_; }

private:
    std::uint32_t p_;
    Quiver quiver_;
    DimensionVector dimension_;
    std::uint64_t count_;
    std::uint64_t cursor_ = 0;
};

/// Uniformly random representation (for instances too large to enumerate).
FiniteFieldRep random_rep(std::uint32_t p, const Quiver& q, const DimensionVector& d, std::mt19937_64& rng);

/// All subrepresentations, found by testing every tuple of subspaces for arrow invariance.
class SubrepEnumerator {
public:
    SubrepEnumerator(std::uint32_t p, Quiver q, DimensionVector d);

    std::vector<SubrepWitness> subrepresentations(const FiniteFieldRep& rep) const;
    /// Number of subspace tuples tested per representation.
    Integer tuple_count() const;

    const Quiver& quiver() const noexcept { return quiver_; }
    const DimensionVector& dimension() const noexcept { return dimension_; }

private:
    std::uint32_t p_;
    Quiver quiver_;
    DimensionVector dimension_;
    std::vector<std::vector<Subspace>> per_vertex_;
};

/// HN type of a concrete representation: repeatedly take, among subrepresentations
/// containing the current one, the quotient piece of maximal slope and then maximal dimension.
HNType hn_type_of(const SubrepEnumerator& subreps, const FiniteFieldRep& rep, const StabilityParameter& theta);
HNType hn_type_of(const Quiver& q, const DimensionVector& d, const FiniteFieldRep& rep, const StabilityParameter& theta);

/// Number of F_p-points in each HN stratum; the counts sum to point_count.
std::map<HNType, std::uint64_t> stratum_census(const Quiver& q, const DimensionVector& d,
                                               const StabilityParameter& theta, std::uint32_t p,
                                               std::uint64_t budget = configured_budget());

}  // namespace qt::oracle
