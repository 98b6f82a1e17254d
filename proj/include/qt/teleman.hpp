#pragma once

#include "qt/hn_strata.hpp"
#include "qt/quiver.hpp"
#include "qt/semistability.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qt {

// Weights of lambda = lambda_{d*} on the pieces of the Teleman quantization
// argument. All three sums run over 1 <= m < n <= l and vanish for the dense type.

/// Weight of omega_R restricted to the limit set:
/// sum (k_n - k_m) (<d^m, d^n> - <d^n, d^m>).
Integer weight_omega_R(const Quiver& q, const HNType& t, const OneParamData& k);

/// Weight of omega_S restricted to the limit set: sum (k_m - k_n) <d^n, d^m>.
Integer weight_omega_S(const Quiver& q, const HNType& t, const OneParamData& k);

/// eta_lambda, the weight of det of the conormal bundle: sum (k_n - k_m) <d^m, d^n>.
Integer eta(const Quiver& q, const HNType& t, const OneParamData& k);

/// Weights of U_i^v (x) U_j on the limit set: k_m - k_n with multiplicity d_i^m d_j^n.
struct BundleWeightMultiset {
    std::size_t source_vertex = 0;  // 1-based
    std::size_t target_vertex = 0;  // 1-based
    std::map<Integer, Integer> weights;

    Integer total_multiplicity() const;
    /// Largest weight; empty when d_i d_j = 0.
    std::optional<Integer> max() const;
    /// Weights expanded with multiplicity, ascending.
    std::vector<Integer> expanded() const;
};

/// i and j are 1-based vertices.
BundleWeightMultiset bundle_weights(const HNType& t, const OneParamData& k, std::size_t i, std::size_t j);

struct StratumWeightData {
    HNType hn_type;
    OneParamData one_ps;
    Integer codim;
    Integer eta;
    Integer weight_omega_R;
    Integer weight_omega_S;
    /// k_1 - k_l, the largest weight of any U_i^v (x) U_j.
    Integer max_bundle_weight;
    /// max_bundle_weight < eta; true by convention for the dense type.
    bool inequality_holds = true;
};

StratumWeightData stratum_report(const Quiver& q, const StabilityParameter& theta, const HNType& t);

/// Reports for a list of types, computed in parallel; output order matches input.
std::vector<StratumWeightData> stratum_reports(const Quiver& q, const StabilityParameter& theta,
                                               const std::vector<HNType>& types);

struct Verdict {
    bool coprime = false;
    bool acyclic = false;
    bool strongly_amply_stable = false;
    bool amply_stable = false;
    bool all_strata_inequality = false;
    /// coprime and the Teleman inequality on every unstable stratum.
    bool vanishing_certified = false;
    /// vanishing_certified on an acyclic quiver.
    bool rigidity_certified = false;
    std::vector<HNType> failing_strata;

    std::size_t strata_count = 0;
    std::optional<Integer> min_unstable_codim;
    std::optional<DimensionVector> strong_failure_witness;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Thrown when a result contradicts a proven implication (e.g. strong ample
/// stability without the per-stratum inequality).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Requires theta(d) = 0 and a nonempty semistable locus.
Verdict verdict(GenericSubdimCache& cache, const DimensionVector& d, const StabilityParameter& theta);
Verdict verdict(const Quiver& q, const DimensionVector& d, const StabilityParameter& theta);

/// 1 - <d, d>
Integer moduli_dimension(const Quiver& q, const DimensionVector& d);

}  // namespace qt
