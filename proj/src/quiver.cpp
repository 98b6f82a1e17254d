#include "qt/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qt {

namespace {

template <class Range>
std::string join_tuple(const Range& values) {
    std::ostringstream out;
    out << '(';
    bool first = true;
    for (const auto& v : values) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    out << ')';
    return out.str();
}

bool has_directed_cycle(std::size_t n, const std::vector<std::int64_t>& adjacency) {
    // Kahn's algorithm; a loop i->i leaves i with positive in-degree forever.
    std::vector<std::int64_t> indegree(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) indegree[j] += adjacency[i * n + j] > 0 ? 1 : 0;
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0) ready.push_back(i);
    std::size_t visited = 0;
    while (!ready.empty()) {
        const std::size_t v = ready.back();
        ready.pop_back();
        ++visited;
        for (std::size_t j = 0; j < n; ++j)
            if (adjacency[v * n + j] > 0 && --indegree[j] == 0) ready.push_back(j);
    }
    return visited != n;
}

}  // namespace

DimensionVector::DimensionVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    for (auto v : entries_)
        if (v < 0) throw InputError("dimension vector entries must be non-negative");
}

DimensionVector::DimensionVector(std::initializer_list<std::int64_t> entries)
    : DimensionVector(std::vector<std::int64_t>(entries)) {}

DimensionVector DimensionVector::zero(std::size_t n) { return DimensionVector(std::vector<std::int64_t>(n, 0)); }

DimensionVector DimensionVector::unit(std::size_t n, std::size_t index) {
    std::vector<std::int64_t> e(n, 0);
    e.at(index) = 1;
    return DimensionVector(std::move(e));
}

std::int64_t DimensionVector::total() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool DimensionVector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](auto v) { return v == 0; });
}

bool DimensionVector::leq(const DimensionVector& other) const {
    if (size() != other.size()) throw InputError("dimension vector length mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        if (entries_[i] > other.entries_[i]) return false;
    return true;
}

DimensionVector DimensionVector::operator+(const DimensionVector& other) const {
    if (size() != other.size()) throw InputError("dimension vector length mismatch");
    std::vector<std::int64_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] + other.entries_[i];
    return DimensionVector(std::move(out));
}

DimensionVector DimensionVector::operator-(const DimensionVector& other) const {
    if (size() != other.size()) throw InputError("dimension vector length mismatch");
    std::vector<std::int64_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] - other.entries_[i];
    return DimensionVector(std::move(out));
}

DimensionVector DimensionVector::scaled(std::int64_t factor) const {
    std::vector<std::int64_t> out(entries_);
    for (auto& v : out) v *= factor;
    return DimensionVector(std::move(out));
}

std::string DimensionVector::to_string() const { return join_tuple(entries_); }

Integer StabilityParameter::operator()(const DimensionVector& e) const {
    if (e.size() != size()) throw InputError("stability parameter and dimension vector differ in length");
    Integer sum = 0;
    for (std::size_t i = 0; i < size(); ++i) sum += Integer(entries_[i]) * e[i];
    return sum;
}

StabilityParameter StabilityParameter::scaled(std::int64_t factor) const {
    std::vector<std::int64_t> out(entries_);
    for (auto& v : out) v *= factor;
    return StabilityParameter(std::move(out));
}

std::string StabilityParameter::to_string() const { return join_tuple(entries_); }

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)), adjacency_(vertex_count * vertex_count, 0) {
    if (vertex_count_ == 0) throw InputError("a quiver needs at least one vertex");
    for (const auto& [s, t] : arrows_) {
        if (s < 1 || s > vertex_count_ || t < 1 || t > vertex_count_)
            throw InputError("arrow (" + std::to_string(s) + "," + std::to_string(t) + ") has an endpoint outside [1, " +
                             std::to_string(vertex_count_) + "]");
        ++adjacency_[(s - 1) * vertex_count_ + (t - 1)];
    }
    acyclic_ = !has_directed_cycle(vertex_count_, adjacency_);
}

Quiver Quiver::kronecker(std::size_t m) { return Quiver(2, std::vector<Arrow>(m, Arrow{1, 2})); }

void require_same_length(const Quiver& q, const DimensionVector& d, const char* what) {
    if (d.size() != q.vertex_count())
        throw InputError(std::string(what) + " has length " + std::to_string(d.size()) + " but the quiver has " +
                         std::to_string(q.vertex_count()) + " vertices");
}

void require_same_length(const Quiver& q, const StabilityParameter& theta) {
    if (theta.size() != q.vertex_count())
        throw InputError("stability parameter has length " + std::to_string(theta.size()) + " but the quiver has " +
                         std::to_string(q.vertex_count()) + " vertices");
}

Integer euler_pairing(const Quiver& q, const DimensionVector& a, const DimensionVector& b) {
    require_same_length(q, a, "first argument");
    require_same_length(q, b, "second argument");
    const std::size_t n = q.vertex_count();
    std::int64_t diagonal = 0;
    for (std::size_t i = 0; i < n; ++i) diagonal += a[i] * b[i];
    Integer result = diagonal;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const auto arrows = q.adjacency(i, j);
            if (arrows != 0 && b[j] != 0) result -= Integer(arrows) * a[i] * b[j];
        }
    }
    return result;
}

StabilityParameter canonical_stability(const Quiver& q, const DimensionVector& d) {
    require_same_length(q, d, "dimension vector");
    if (d.is_zero()) throw InputError("canonical stability is undefined for the zero dimension vector");
    const std::size_t n = q.vertex_count();
    // theta_i = <d, e_i> - <e_i, d> = sum_{i->j} d_j - sum_{j->i} d_j.
    std::vector<std::int64_t> theta(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) theta[i] += q.adjacency(i, j) * d[j] - q.adjacency(j, i) * d[j];
    // Reported as the primitive vector on that ray, e.g. (3,-2) rather than (9,-6) for d = (2,3) on K_3.
    std::int64_t g = 0;
    for (auto v : theta) g = std::gcd(g, v);
    if (g > 1)
        for (auto& v : theta) v /= g;
    return StabilityParameter(std::move(theta));
}

Rational slope(const StabilityParameter& theta, const DimensionVector& e) {
    if (e.is_zero()) throw PreconditionError("slope of the zero dimension vector is undefined");
    return make_rational(theta(e), Integer(e.total()));
}

bool is_theta_coprime(const StabilityParameter& theta, const DimensionVector& d) {
    if (theta(d) != 0) throw PreconditionError("theta-coprimality requires theta(d) = 0");
    for (const auto& e : subdimension_vectors(d)) {
        if (e.is_zero() || e == d) continue;
        if (theta(e) == 0) return false;
    }
    return true;
}

std::vector<DimensionVector> subdimension_vectors(const DimensionVector& d) {
    std::vector<DimensionVector> out;
    std::vector<std::int64_t> current(d.size(), 0);
    // Odometer with the last coordinate varying fastest gives lexicographic order.
    while (true) {
        out.emplace_back(current);
        std::size_t i = d.size();
        while (i > 0) {
            --i;
            if (current[i] < d[i]) {
                ++current[i];
                std::fill(current.begin() + static_cast<std::ptrdiff_t>(i) + 1, current.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
        if (d.size() == 0) return out;
    }
}

Integer subdimension_count(const DimensionVector& d) {
    Integer count = 1;
    for (auto v : d) count *= v + 1;
    return count;
}

Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace qt
