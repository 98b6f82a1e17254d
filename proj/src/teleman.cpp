#include "qt/teleman.hpp"

#include "qt/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace qt {

namespace {

template <class Term>
Integer sum_over_pairs(const HNType& t, Term term) {
    Integer sum = 0;
    for (std::size_t m = 0; m < t.length(); ++m)
        for (std::size_t n = m + 1; n < t.length(); ++n) sum += term(m, n);
    return sum;
}

void require_matching(const HNType& t, const OneParamData& k) {
    if (k.k.size() != t.length()) throw InputError("one-parameter data does not match the HN type length");
}

}  // namespace

Integer weight_omega_R(const Quiver& q, const HNType& t, const OneParamData& k) {
    require_matching(t, k);
    return sum_over_pairs(t, [&](std::size_t m, std::size_t n) {
        return (k.k[n] - k.k[m]) * (euler_pairing(q, t[m], t[n]) - euler_pairing(q, t[n], t[m]));
    });
}

Integer weight_omega_S(const Quiver& q, const HNType& t, const OneParamData& k) {
    require_matching(t, k);
    return sum_over_pairs(t, [&](std::size_t m, std::size_t n) {
        return Integer((k.k[m] - k.k[n]) * euler_pairing(q, t[n], t[m]));
    });
}

Integer eta(const Quiver& q, const HNType& t, const OneParamData& k) {
    require_matching(t, k);
    return sum_over_pairs(t, [&](std::size_t m, std::size_t n) {
        return Integer((k.k[n] - k.k[m]) * euler_pairing(q, t[m], t[n]));
    });
}

Integer BundleWeightMultiset::total_multiplicity() const {
    Integer total = 0;
    for (const auto& [weight, count] : weights) total += count;
    return total;
}

std::optional<Integer> BundleWeightMultiset::max() const {
    if (weights.empty()) return std::nullopt;
    return weights.rbegin()->first;
}

std::vector<Integer> BundleWeightMultiset::expanded() const {
    std::vector<Integer> out;
    for (const auto& [weight, count] : weights)
        for (Integer c = 0; c < count; ++c) out.push_back(weight);
    return out;
}

BundleWeightMultiset bundle_weights(const HNType& t, const OneParamData& k, std::size_t i, std::size_t j) {
    require_matching(t, k);
    const std::size_t n_vertices = t.front().size();
    if (i < 1 || i > n_vertices || j < 1 || j > n_vertices)
        throw InputError("vertex index out of range [1, " + std::to_string(n_vertices) + "]");
    BundleWeightMultiset out{i, j, {}};
    for (std::size_t m = 0; m < t.length(); ++m) {
        for (std::size_t n = 0; n < t.length(); ++n) {
            const std::int64_t multiplicity = t[m][i - 1] * t[n][j - 1];
            if (multiplicity != 0) out.weights[k.k[m] - k.k[n]] += multiplicity;
        }
    }
    return out;
}

StratumWeightData stratum_report(const Quiver& q, const StabilityParameter& theta, const HNType& t) {
    StratumWeightData data{t, one_param_data(theta, t), codimension(q, t), 0, 0, 0, 0, true};
    if (t.is_dense()) return data;
    data.weight_omega_R = weight_omega_R(q, t, data.one_ps);
    data.weight_omega_S = weight_omega_S(q, t, data.one_ps);
    data.eta = eta(q, t, data.one_ps);
    // k strictly decreases, so k_1 - k_l dominates every k_m - k_n.
    data.max_bundle_weight = data.one_ps.k.front() - data.one_ps.k.back();
    data.inequality_holds = data.max_bundle_weight < data.eta;
    return data;
}

unsigned thread_count() {
    if (const char* env = std::getenv("QT_THREADS")) {
        try {
            const long value = std::stol(env);
            if (value > 0) return static_cast<unsigned>(value);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<StratumWeightData> stratum_reports(const Quiver& q, const StabilityParameter& theta,
                                               const std::vector<HNType>& types) {
    std::vector<std::optional<StratumWeightData>> slots(types.size());
    parallel_for(types.size(), [&](std::size_t, std::size_t idx) { slots[idx] = stratum_report(q, theta, types[idx]); });
    std::vector<StratumWeightData> out;
    out.reserve(types.size());
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

Verdict verdict(GenericSubdimCache& cache, const DimensionVector& d, const StabilityParameter& theta) {
    const Quiver& q = cache.quiver();
    const StabilityReport stability = is_amply_stable(cache, d, theta);
    const auto types = enumerate_hn_types(cache, d, theta);

    Verdict v;
    v.coprime = is_theta_coprime(theta, d);
    v.acyclic = q.is_acyclic();
    v.amply_stable = stability.is_amply_stable;
    v.strongly_amply_stable = stability.is_strongly_amply_stable;
    v.min_unstable_codim = stability.min_unstable_codim;
    v.strong_failure_witness = stability.strong_failure_witness;
    v.strata_count = types.size();

    for (const auto& report : stratum_reports(q, theta, types))
        if (!report.hn_type.is_dense() && !report.inequality_holds) v.failing_strata.push_back(report.hn_type);
    v.all_strata_inequality = v.failing_strata.empty();
    v.vanishing_certified = v.coprime && v.all_strata_inequality;
    v.rigidity_certified = v.vanishing_certified && v.acyclic;

    if (v.strongly_amply_stable && !v.all_strata_inequality)
        throw InvariantViolation("strongly amply stable instance " + d.to_string() +
                                 " violates the inequality on " + v.failing_strata.front().to_string());
    if (v.strongly_amply_stable && !v.amply_stable)
        throw InvariantViolation("strongly amply stable instance " + d.to_string() + " is not amply stable");
    return v;
}

Verdict verdict(const Quiver& q, const DimensionVector& d, const StabilityParameter& theta) {
    GenericSubdimCache cache(q);
    return verdict(cache, d, theta);
}

Integer moduli_dimension(const Quiver& q, const DimensionVector& d) { return 1 - euler_pairing(q, d, d); }

}  // namespace qt
