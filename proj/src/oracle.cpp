#include "qt/oracle.hpp"

#include "qt/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

namespace qt::oracle {

namespace {

bool is_small_prime(std::uint32_t p) {
    if (p < 2 || p > 97) return false;
    for (std::uint32_t f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

void require_prime(std::uint32_t p) {
    if (!is_small_prime(p)) throw InputError("field size must be a prime below 100, got " + std::to_string(p));
}

std::size_t entry_count(const Quiver& q, const DimensionVector& d) {
    std::size_t total = 0;
    for (const auto& [s, t] : q.arrows()) total += static_cast<std::size_t>(d[s - 1] * d[t - 1]);
    return total;
}

std::vector<Matrix> empty_matrices(const Quiver& q, const DimensionVector& d) {
    std::vector<Matrix> out;
    out.reserve(q.arrow_count());
    for (const auto& [s, t] : q.arrows()) {
        const auto rows = static_cast<std::size_t>(d[t - 1]);
        const auto cols = static_cast<std::size_t>(d[s - 1]);
        out.push_back(Matrix{rows, cols, std::vector<std::uint32_t>(rows * cols, 0)});
    }
    return out;
}

std::vector<std::uint32_t> apply(const Matrix& m, const std::vector<std::uint32_t>& v, std::uint32_t p) {
    std::vector<std::uint32_t> out(m.rows, 0);
    for (std::size_t r = 0; r < m.rows; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < m.cols; ++c) acc += static_cast<std::uint64_t>(m.at(r, c)) * v[c];
        out[r] = static_cast<std::uint32_t>(acc % p);
    }
    return out;
}

// Enumerates RREF matrices with the given pivot columns by filling the free entries.
void enumerate_with_pivots(std::uint32_t p, std::size_t n, const std::vector<std::size_t>& pivots,
                           std::vector<Subspace>& out) {
    const std::size_t k = pivots.size();
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = pivots[r] + 1; c < n; ++c)
            if (!is_pivot[c]) free_slots.emplace_back(r, c);

    std::vector<std::uint32_t> values(free_slots.size(), 0);
    while (true) {
        Subspace s{n, std::vector<std::vector<std::uint32_t>>(k, std::vector<std::uint32_t>(n, 0)), pivots};
        for (std::size_t r = 0; r < k; ++r) s.basis[r][pivots[r]] = 1;
        for (std::size_t idx = 0; idx < free_slots.size(); ++idx)
            s.basis[free_slots[idx].first][free_slots[idx].second] = values[idx];
        out.push_back(std::move(s));

        std::size_t idx = 0;
        while (idx < values.size() && ++values[idx] == p) values[idx++] = 0;
        if (idx == values.size()) return;
    }
}

void enumerate_pivot_sets(std::uint32_t p, std::size_t n, std::size_t k, std::size_t start,
                          std::vector<std::size_t>& chosen, std::vector<Subspace>& out) {
    if (chosen.size() == k) {
        enumerate_with_pivots(p, n, chosen, out);
        return;
    }
    for (std::size_t c = start; c + (k - chosen.size()) <= n; ++c) {
        chosen.push_back(c);
        enumerate_pivot_sets(p, n, k, c + 1, chosen, out);
        chosen.pop_back();
    }
}

}  // namespace

std::uint64_t configured_budget() {
    if (const char* env = std::getenv("QT_BUDGET")) {
        try {
            const long long value = std::stoll(env);
            if (value > 0) return static_cast<std::uint64_t>(value);
        } catch (const std::exception&) {
        }
    }
    return default_budget;
}

BudgetExceeded::BudgetExceeded(const Integer& count, std::uint64_t budget)
    : std::runtime_error("instance has " + count.str() + " points, above the oracle budget of " +
                         std::to_string(budget)),
      count_(count) {}

bool Subspace::contains(std::vector<std::uint32_t> v, std::uint32_t p) const {
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const std::uint32_t coeff = v[pivots[r]];
        if (coeff == 0) continue;
        for (std::size_t c = 0; c < ambient; ++c)
            v[c] = static_cast<std::uint32_t>((v[c] + static_cast<std::uint64_t>(p - coeff) * basis[r][c]) % p);
    }
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other, std::uint32_t p) const {
    if (other.dimension() > dimension()) return false;
    return std::all_of(other.basis.begin(), other.basis.end(),
                       [&](const auto& row) { return contains(row, p); });
}

std::vector<Subspace> all_subspaces(std::uint32_t p, std::size_t n) {
    require_prime(p);
    std::vector<Subspace> out;
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k <= n; ++k) enumerate_pivot_sets(p, n, k, 0, chosen, out);
    return out;
}

Integer point_count(std::uint32_t p, const Quiver& q, const DimensionVector& d) {
    require_same_length(q, d, "dimension vector");
    return boost::multiprecision::pow(Integer(p), static_cast<unsigned>(entry_count(q, d)));
}

RepresentationStream::RepresentationStream(std::uint32_t p, Quiver q, DimensionVector d, std::uint64_t budget)
    : p_(p), quiver_(std::move(q)), dimension_(std::move(d)) {
    require_prime(p_);
    const Integer count = point_count(p_, quiver_, dimension_);
    if (count > budget) throw BudgetExceeded(count, budget);
    count_ = static_cast<std::uint64_t>(count);
}

FiniteFieldRep RepresentationStream::at(std::uint64_t index) const {
    FiniteFieldRep rep{p_, empty_matrices(quiver_, dimension_)};
    for (auto& m : rep.matrices) {
        for (auto& x : m.entries) {
            x = static_cast<std::uint32_t>(index % p_);
            index /= p_;
        }
    }
    return rep;
}

bool RepresentationStream::next(FiniteFieldRep& rep) {
    if (cursor_ >= count_) return false;
    rep = at(cursor_++);
    return true;
}

FiniteFieldRep random_rep(std::uint32_t p, const Quiver& q, const DimensionVector& d, std::mt19937_64& rng) {
    require_prime(p);
    require_same_length(q, d, "dimension vector");
    std::uniform_int_distribution<std::uint32_t> entry(0, p - 1);
    FiniteFieldRep rep{p, empty_matrices(q, d)};
    for (auto& m : rep.matrices)
        for (auto& x : m.entries) x = entry(rng);
    return rep;
}

SubrepEnumerator::SubrepEnumerator(std::uint32_t p, Quiver q, DimensionVector d)
    : p_(p), quiver_(std::move(q)), dimension_(std::move(d)) {
    require_prime(p_);
    require_same_length(quiver_, dimension_, "dimension vector");
    for (auto di : dimension_) per_vertex_.push_back(all_subspaces(p_, static_cast<std::size_t>(di)));
}

Integer SubrepEnumerator::tuple_count() const {
    Integer count = 1;
    for (const auto& options : per_vertex_) count *= options.size();
    return count;
}

std::vector<SubrepWitness> SubrepEnumerator::subrepresentations(const FiniteFieldRep& rep) const {
    const std::size_t n = quiver_.vertex_count();
    const auto& arrows = quiver_.arrows();
    // Arrows become checkable once both endpoints are assigned, i.e. at vertex max(s, t).
    std::vector<std::vector<std::size_t>> checks(n);
    for (std::size_t a = 0; a < arrows.size(); ++a)
        checks[std::max(arrows[a].first, arrows[a].second) - 1].push_back(a);

    std::vector<SubrepWitness> out;
    std::vector<const Subspace*> chosen(n, nullptr);
    std::function<void(std::size_t)> assign = [&](std::size_t v) {
        if (v == n) {
            SubrepWitness w;
            std::vector<std::int64_t> dims(n);
            for (std::size_t i = 0; i < n; ++i) {
                w.subspaces.push_back(*chosen[i]);
                dims[i] = static_cast<std::int64_t>(chosen[i]->dimension());
            }
            w.dimension = DimensionVector(std::move(dims));
            out.push_back(std::move(w));
            return;
        }
        for (const auto& candidate : per_vertex_[v]) {
            chosen[v] = &candidate;
            bool invariant = true;
            for (auto a : checks[v]) {
                const Subspace& src = *chosen[arrows[a].first - 1];
                const Subspace& dst = *chosen[arrows[a].second - 1];
                for (const auto& u : src.basis) {
                    if (!dst.contains(apply(rep.matrices[a], u, p_), p_)) {
                        invariant = false;
                        break;
                    }
                }
                if (!invariant) break;
            }
            if (invariant) assign(v + 1);
        }
    };
    assign(0);
    return out;
}

HNType hn_type_of(const SubrepEnumerator& subreps, const FiniteFieldRep& rep, const StabilityParameter& theta) {
    const auto all = subreps.subrepresentations(rep);
    const std::size_t n = subreps.quiver().vertex_count();
    auto contains = [&](const SubrepWitness& big, const SubrepWitness& small) {
        if (!small.dimension.leq(big.dimension)) return false;
        for (std::size_t i = 0; i < n; ++i)
            if (!big.subspaces[i].contains(small.subspaces[i], rep.field)) return false;
        return true;
    };

    const SubrepWitness* current = nullptr;
    for (const auto& w : all)
        if (w.dimension.is_zero()) current = &w;
    const DimensionVector& full = subreps.dimension();

    std::vector<DimensionVector> pieces;
    while (current->dimension != full) {
        const SubrepWitness* best = nullptr;
        std::optional<Rational> best_slope;
        std::int64_t best_size = 0;
        for (const auto& w : all) {
            if (w.dimension == current->dimension || !contains(w, *current)) continue;
            const DimensionVector piece = w.dimension - current->dimension;
            const Rational mu = slope(theta, piece);
            if (!best || mu > *best_slope || (mu == *best_slope && piece.total() > best_size)) {
                best = &w;
                best_slope = mu;
                best_size = piece.total();
            }
        }
        pieces.push_back(best->dimension - current->dimension);
        current = best;
    }
    return HNType(std::move(pieces));
}

HNType hn_type_of(const Quiver& q, const DimensionVector& d, const FiniteFieldRep& rep,
                  const StabilityParameter& theta) {
    return hn_type_of(SubrepEnumerator(rep.field, q, d), rep, theta);
}

std::map<HNType, std::uint64_t> stratum_census(const Quiver& q, const DimensionVector& d,
                                               const StabilityParameter& theta, std::uint32_t p,
                                               std::uint64_t budget) {
    require_same_length(q, theta);
    if (d.is_zero()) throw InputError("census of the zero dimension vector is undefined");
    if (theta(d) != 0) throw PreconditionError("census requires theta(d) = 0");
    const RepresentationStream stream(p, q, d, budget);
    const SubrepEnumerator subreps(p, q, d);

    constexpr std::uint64_t chunk = 4096;
    const std::uint64_t chunks = (stream.size() + chunk - 1) / chunk;
    std::vector<std::map<HNType, std::uint64_t>> partial(chunks);
    parallel_for(chunks, [&](std::size_t, std::size_t c) {
        const std::uint64_t end = std::min(stream.size(), (c + 1) * chunk);
        for (std::uint64_t idx = c * chunk; idx < end; ++idx) ++partial[c][hn_type_of(subreps, stream.at(idx), theta)];
    });
    std::map<HNType, std::uint64_t> census;
    for (const auto& part : partial)
        for (const auto& [type, count] : part) census[type] += count;
    return census;
}

}  // namespace qt::oracle
