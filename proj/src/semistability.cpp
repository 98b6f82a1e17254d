#include "qt/semistability.hpp"

#include "qt/hn_strata.hpp"

#include <algorithm>

namespace qt {

const std::vector<DimensionVector>* GenericSubdimCache::lookup(const DimensionVector& e) const {
    std::lock_guard lock(mutex_);
    const auto it = generic_.find(e);
    return it == generic_.end() ? nullptr : &it->second;
}

const std::vector<DimensionVector>& GenericSubdimCache::generic_subdimension_vectors(const DimensionVector& e) {
    require_same_length(quiver_, e, "dimension vector");
    if (const auto* hit = lookup(e)) return *hit;

    std::vector<DimensionVector> generic;
    for (const auto& f : subdimension_vectors(e)) {
        if (f.is_zero() || f == e) {
            generic.push_back(f);
            continue;
        }
        const DimensionVector quotient = e - f;
        const auto& smaller = generic_subdimension_vectors(f);
        const bool embeds = std::all_of(smaller.begin(), smaller.end(), [&](const DimensionVector& g) {
            return euler_pairing(quiver_, g, quotient) >= 0;
        });
        if (embeds) generic.push_back(f);
    }

    std::lock_guard lock(mutex_);
    // Another thread may have raced us here; both results are identical.
    return generic_.try_emplace(e, std::move(generic)).first->second;
}

bool GenericSubdimCache::has_semistable(const DimensionVector& e, const StabilityParameter& theta) {
    require_same_length(quiver_, e, "dimension vector");
    require_same_length(quiver_, theta);
    if (e.is_zero()) throw InputError("semistability is undefined for the zero dimension vector");
    auto key = std::make_pair(e, theta.entries());
    {
        std::lock_guard lock(mutex_);
        if (const auto it = semistable_.find(key); it != semistable_.end()) return it->second;
    }
    const Rational mu = slope(theta, e);
    const auto& generic = generic_subdimension_vectors(e);
    const bool result = std::none_of(generic.begin(), generic.end(), [&](const DimensionVector& f) {
        return !f.is_zero() && f != e && slope(theta, f) > mu;
    });
    std::lock_guard lock(mutex_);
    semistable_.try_emplace(std::move(key), result);
    return result;
}

std::size_t GenericSubdimCache::size() const {
    std::lock_guard lock(mutex_);
    return generic_.size();
}

std::vector<DimensionVector> generic_subdimension_vectors(const Quiver& q, const DimensionVector& e) {
    GenericSubdimCache cache(q);
    return cache.generic_subdimension_vectors(e);
}

bool has_semistable(GenericSubdimCache& cache, const DimensionVector& e, const StabilityParameter& theta) {
    return cache.has_semistable(e, theta);
}

bool has_semistable(const Quiver& q, const DimensionVector& e, const StabilityParameter& theta) {
    GenericSubdimCache cache(q);
    return cache.has_semistable(e, theta);
}

std::vector<DimensionVector> strong_ample_violations(const Quiver& q, const DimensionVector& d,
                                                     const StabilityParameter& theta) {
    require_same_length(q, d, "dimension vector");
    require_same_length(q, theta);
    if (d.is_zero()) throw InputError("strong ample stability is undefined for the zero dimension vector");
    if (theta(d) != 0) throw PreconditionError("strong ample stability requires theta(d) = 0");
    std::vector<DimensionVector> violations;
    for (const auto& e : subdimension_vectors(d)) {
        if (e.is_zero() || e == d) continue;
        const DimensionVector rest = d - e;
        if (slope(theta, e) <= slope(theta, rest)) continue;
        if (euler_pairing(q, e, rest) > -2) violations.push_back(e);
    }
    return violations;
}

StrongAmpleResult is_strongly_amply_stable(const Quiver& q, const DimensionVector& d, const StabilityParameter& theta) {
    auto violations = strong_ample_violations(q, d, theta);
    if (violations.empty()) return {};
    return {false, violations.front()};
}

StabilityReport is_amply_stable(GenericSubdimCache& cache, const DimensionVector& d, const StabilityParameter& theta) {
    const Quiver& q = cache.quiver();
    require_same_length(q, d, "dimension vector");
    require_same_length(q, theta);
    if (theta(d) != 0) throw PreconditionError("ample stability requires theta(d) = 0");
    if (!cache.has_semistable(d, theta))
        throw PreconditionError("the semistable locus of " + d.to_string() + " is empty");

    StabilityReport report;
    for (const auto& type : enumerate_hn_types(cache, d, theta)) {
        if (type.is_dense()) continue;
        const Integer c = codimension(q, type);
        if (!report.min_unstable_codim || c < *report.min_unstable_codim) report.min_unstable_codim = c;
    }
    report.is_amply_stable = !report.min_unstable_codim || *report.min_unstable_codim >= 2;

    const auto strong = is_strongly_amply_stable(q, d, theta);
    report.is_strongly_amply_stable = strong.holds;
    report.strong_failure_witness = strong.witness;
    return report;
}

StabilityReport is_amply_stable(const Quiver& q, const DimensionVector& d, const StabilityParameter& theta) {
    GenericSubdimCache cache(q);
    return is_amply_stable(cache, d, theta);
}

}  // namespace qt
