#include "qt/hn_strata.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace qt {

HNType::HNType(std::vector<DimensionVector> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw InputError("an HN type needs at least one piece");
    for (const auto& piece : pieces_) {
        if (piece.size() != pieces_.front().size()) throw InputError("HN type pieces differ in length");
        if (piece.is_zero()) throw InputError("HN type pieces must be nonzero");
    }
}

DimensionVector HNType::total() const {
    DimensionVector sum = DimensionVector::zero(pieces_.front().size());
    for (const auto& piece : pieces_) sum = sum + piece;
    return sum;
}

std::string HNType::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t m = 0; m < pieces_.size(); ++m) {
        if (m) out << ',';
        out << pieces_[m].to_string();
    }
    out << ')';
    return out.str();
}

bool is_hn_type(GenericSubdimCache& cache, const DimensionVector& d, const StabilityParameter& theta, const HNType& t) {
    if (t.total() != d) return false;
    for (std::size_t m = 0; m + 1 < t.length(); ++m)
        if (slope(theta, t[m]) <= slope(theta, t[m + 1])) return false;
    return std::all_of(t.pieces().begin(), t.pieces().end(),
                       [&](const DimensionVector& piece) { return cache.has_semistable(piece, theta); });
}

namespace {

using Tails = std::vector<std::vector<DimensionVector>>;

class HNEnumerator {
public:
    HNEnumerator(GenericSubdimCache& cache, const StabilityParameter& theta) : cache_(cache), theta_(theta) {}

    /// All sequences of semistable pieces summing to `remaining` with strictly
    /// decreasing slopes, each slope below `bound` when given.
    const Tails& tails(const DimensionVector& remaining, const std::optional<Rational>& bound) {
        auto key = std::make_pair(remaining, bound);
        if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

        Tails out;
        for (const auto& first : subdimension_vectors(remaining)) {
            if (first.is_zero()) continue;
            const Rational mu = slope(theta_, first);
            if (bound && mu >= *bound) continue;
            if (!cache_.has_semistable(first, theta_)) continue;
            if (first == remaining) {
                out.push_back({first});
                continue;
            }
            for (const auto& tail : tails(remaining - first, mu)) {
                std::vector<DimensionVector> pieces;
                pieces.reserve(tail.size() + 1);
                pieces.push_back(first);
                pieces.insert(pieces.end(), tail.begin(), tail.end());
                out.push_back(std::move(pieces));
            }
        }
        return memo_.try_emplace(std::move(key), std::move(out)).first->second;
    }

private:
    GenericSubdimCache& cache_;
    const StabilityParameter& theta_;
    std::map<std::pair<DimensionVector, std::optional<Rational>>, Tails> memo_;
};

}  // namespace

std::vector<HNType> enumerate_hn_types(GenericSubdimCache& cache, const DimensionVector& d,
                                       const StabilityParameter& theta) {
    require_same_length(cache.quiver(), d, "dimension vector");
    require_same_length(cache.quiver(), theta);
    if (d.is_zero()) throw InputError("HN types are undefined for the zero dimension vector");
    if (theta(d) != 0) throw PreconditionError("HN enumeration requires theta(d) = 0");

    HNEnumerator enumerator(cache, theta);
    std::vector<HNType> types;
    for (const auto& pieces : enumerator.tails(d, std::nullopt)) types.emplace_back(pieces);
    std::sort(types.begin(), types.end());
    return types;
}

std::vector<HNType> enumerate_hn_types(const Quiver& q, const DimensionVector& d, const StabilityParameter& theta) {
    GenericSubdimCache cache(q);
    return enumerate_hn_types(cache, d, theta);
}

Integer codimension(const Quiver& q, const HNType& t) {
    Integer codim = 0;
    for (std::size_t m = 0; m < t.length(); ++m)
        for (std::size_t n = m + 1; n < t.length(); ++n) codim -= euler_pairing(q, t[m], t[n]);
    return codim;
}

std::vector<Rational> slopes(const StabilityParameter& theta, const HNType& t) {
    std::vector<Rational> out;
    out.reserve(t.length());
    for (const auto& piece : t.pieces()) out.push_back(slope(theta, piece));
    return out;
}

OneParamData one_param_data(const StabilityParameter& theta, const HNType& t) {
    const auto mu = slopes(theta, t);
    Integer c = 1;
    for (const auto& s : mu) c = boost::multiprecision::lcm(c, boost::multiprecision::denominator(s));
    OneParamData data{c, {}};
    data.k.reserve(mu.size());
    for (const auto& s : mu) data.k.push_back(boost::multiprecision::numerator(s) * (c / boost::multiprecision::denominator(s)));
    return data;
}

}  // namespace qt
