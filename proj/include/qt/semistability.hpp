#pragma once

#include "qt/quiver.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace qt {

/// Memo table of generic subdimension vectors for one quiver.
///
/// f <= e is a generic subdimension vector of e (a general representation of
/// dimension e has a subrepresentation of dimension f) iff <f', e - f> >= 0 for
/// every generic subdimension vector f' of f. 0 and e are always generic.
/// The recursion runs over the componentwise order, so every entry is computed
/// at most once. Lookups and inserts are serialized; inserts are idempotent.
class GenericSubdimCache {
public:
    explicit GenericSubdimCache(Quiver q) : quiver_(std::move(q)) {}

    GenericSubdimCache(const GenericSubdimCache&) = delete;
    GenericSubdimCache& operator=(const GenericSubdimCache&) = delete;

    const Quiver& quiver() const noexcept { return quiver_; }

    /// Sorted (lexicographic) list of generic subdimension vectors of e.
    const std::vector<DimensionVector>& generic_subdimension_vectors(const DimensionVector& e);

    /// Memoized has_semistable for this quiver.
    bool has_semistable(const DimensionVector& e, const StabilityParameter& theta);

    std::size_t size() const;

private:
    const std::vector<DimensionVector>* lookup(const DimensionVector& e) const;

    Quiver quiver_;
    mutable std::mutex mutex_;
    std::map<DimensionVector, std::vector<DimensionVector>> generic_;
    std::map<std::pair<DimensionVector, std::vector<std::int64_t>>, bool> semistable_;
};

std::vector<DimensionVector> generic_subdimension_vectors(const Quiver& q, const DimensionVector& e);

/// True iff the mu_theta-semistable locus in Rep(q, e) is nonempty, i.e. the
/// general representation of dimension e has no generic subdimension vector of
/// strictly larger slope. Throws InputError for e = 0.
bool has_semistable(GenericSubdimCache& cache, const DimensionVector& e, const StabilityParameter& theta);
bool has_semistable(const Quiver& q, const DimensionVector& e, const StabilityParameter& theta);

struct StrongAmpleResult {
    bool holds = true;
    /// Lexicographically smallest 0 < e < d with mu(e) > mu(d - e) and <e, d - e> >= -1.
    std::optional<DimensionVector> witness;
};

/// Every 0 < e < d with mu(e) > mu(d - e) must satisfy <e, d - e> <= -2.
StrongAmpleResult is_strongly_amply_stable(const Quiver& q, const DimensionVector& d, const StabilityParameter& theta);

/// All violating subdimension vectors, lexicographically sorted.
std::vector<DimensionVector> strong_ample_violations(const Quiver& q, const DimensionVector& d,
                                                     const StabilityParameter& theta);

struct StabilityReport {
    bool is_amply_stable = true;
    /// Minimum codimension over unstable HN strata; empty when every representation is semistable.
    std::optional<Integer> min_unstable_codim;
    bool is_strongly_amply_stable = true;
    std::optional<DimensionVector> strong_failure_witness;
};

/// Ample stability: the unstable locus has codimension >= 2.
/// Requires theta(d) = 0 and a nonempty semistable locus.
StabilityReport is_amply_stable(GenericSubdimCache& cache, const DimensionVector& d, const StabilityParameter& theta);
StabilityReport is_amply_stable(const Quiver& q, const DimensionVector& d, const StabilityParameter& theta);

}  // namespace qt
