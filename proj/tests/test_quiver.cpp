#include "qt/quiver.hpp"

#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>

using namespace qt;

namespace {

// Reference evaluation straight from the arrow list, independent of the adjacency matrix.
Integer pairing_from_arrows(const Quiver& q, const DimensionVector& a, const DimensionVector& b) {
    Integer sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += Integer(a[i]) * b[i];
    for (const auto& [s, t] : q.arrows()) sum -= Integer(a[s - 1]) * b[t - 1];
    return sum;
}

Quiver random_quiver(std::mt19937_64& rng, std::size_t n, bool allow_loops) {
    std::uniform_int_distribution<int> count(0, 3);
    std::vector<Quiver::Arrow> arrows;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            if (i == j && !allow_loops) continue;
            for (int c = count(rng); c > 0; --c) arrows.emplace_back(i, j);
        }
    return Quiver(n, std::move(arrows));
}

DimensionVector random_vector(std::mt19937_64& rng, std::size_t n, int max_entry) {
    std::uniform_int_distribution<std::int64_t> entry(0, max_entry);
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = entry(rng);
    return DimensionVector(std::move(v));
}

const Quiver k3 = Quiver::kronecker(3);
const Quiver five_arrow{3, {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 3}, {2, 3}}};
const Quiver six_arrow{3, {{1, 2}, {1, 3}, {1, 3}, {1, 3}, {1, 3}, {1, 3}, {1, 3}, {2, 3}}};

}  // namespace

TEST_CASE("quiver construction and adjacency") {
    CHECK(k3.vertex_count() == 2);
    CHECK(k3.adjacency(0, 1) == 3);
    CHECK(k3.adjacency(1, 0) == 0);
    CHECK(k3.is_acyclic());

    std::int64_t total = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) total += five_arrow.adjacency(i, j);
    CHECK(total == static_cast<std::int64_t>(five_arrow.arrow_count()));

    CHECK_FALSE(Quiver(2, {{1, 2}, {2, 1}}).is_acyclic());
    CHECK_FALSE(Quiver(1, {{1, 1}}).is_acyclic());
    CHECK(Quiver(3, {}).is_acyclic());

    CHECK_THROWS_AS(Quiver(2, {{1, 3}}), InputError);
    CHECK_THROWS_AS(Quiver(2, {{0, 1}}), InputError);
    CHECK_THROWS_AS(Quiver(0, {}), InputError);
}

TEST_CASE("dimension vectors") {
    CHECK_THROWS_AS(DimensionVector({1, -1}), InputError);
    const DimensionVector d{2, 3};
    CHECK(d.total() == 5);
    CHECK(DimensionVector{1, 2}.leq(d));
    CHECK_FALSE(DimensionVector{3, 0}.leq(d));
    CHECK(d - DimensionVector{1, 2} == DimensionVector{1, 1});
    CHECK_THROWS_AS((d - DimensionVector{3, 0}), InputError);
    CHECK(d.to_string() == "(2,3)");
    CHECK(DimensionVector::zero(2).is_zero());
}

TEST_CASE("euler pairing") {
    CHECK(euler_pairing(k3, {1, 1}, {1, 2}) == -3);
    CHECK(euler_pairing(k3, {0, 0}, {1, 2}) == 0);
    CHECK(euler_pairing(k3, {2, 3}, {2, 3}) == -5);
    CHECK(1 - euler_pairing(k3, {2, 3}, {2, 3}) == 6);
    CHECK(euler_pairing(six_arrow, {0, 1, 0}, {1, 5, 6}) == -1);
    CHECK(euler_pairing(five_arrow, {3, 1, 2}, {1, 0, 2}) == -1);
    CHECK_THROWS_AS(euler_pairing(k3, {1, 1, 1}, {1, 1}), InputError);

    SUBCASE("agrees with the arrow-list evaluation and is bilinear") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 300; ++trial) {
            const std::size_t n = 1 + trial % 3;
            const Quiver q = random_quiver(rng, n, trial % 5 == 0);
            const auto a = random_vector(rng, n, 4);
            const auto b = random_vector(rng, n, 4);
            const auto c = random_vector(rng, n, 4);
            CHECK(euler_pairing(q, a, b) == pairing_from_arrows(q, a, b));
            CHECK(euler_pairing(q, a + b, c) == euler_pairing(q, a, c) + euler_pairing(q, b, c));
            CHECK(euler_pairing(q, c, a + b) == euler_pairing(q, c, a) + euler_pairing(q, c, b));
        }
    }
}

TEST_CASE("canonical stability") {
    CHECK(canonical_stability(k3, {2, 3}) == StabilityParameter{3, -2});
    CHECK(canonical_stability(six_arrow, {1, 6, 6}) == StabilityParameter{42, 5, -12});
    CHECK(canonical_stability(five_arrow, {4, 1, 4}) == StabilityParameter{9, -16, -5});
    CHECK_THROWS_AS(canonical_stability(k3, {0, 0}), InputError);

    SUBCASE("vanishes on d and is a positive multiple of <d,-> - <-,d>") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 300; ++trial) {
            const std::size_t n = 1 + trial % 3;
            const Quiver q = random_quiver(rng, n, trial % 4 == 0);
            auto d = random_vector(rng, n, 4);
            if (d.is_zero()) continue;
            const auto theta = canonical_stability(q, d);
            CHECK(theta(d) == 0);
            // Find the scale factor on a unit vector where the raw functional is nonzero.
            std::optional<Rational> ratio;
            for (const auto& e : subdimension_vectors(DimensionVector(std::vector<std::int64_t>(n, 2)))) {
                const Integer raw = euler_pairing(q, d, e) - euler_pairing(q, e, d);
                if (raw == 0) {
                    CHECK(theta(e) == 0);
                    continue;
                }
                const Rational r = make_rational(raw, theta(e));
                if (!ratio) ratio = r;
                CHECK(r == *ratio);
                CHECK(r > 0);
            }
        }
    }
}

TEST_CASE("slope") {
    CHECK(slope({3, -2}, {1, 2}) == Rational(-1, 3));
    CHECK(slope({9, -16, -5}, {3, 1, 2}) == Rational(1, 6));
    CHECK(slope({7, -4, 5}, DimensionVector::unit(3, 1)) == -4);
    CHECK_THROWS_AS(slope({1, 1}, {0, 0}), PreconditionError);
    CHECK(format_rational(slope({3, -2}, {1, 2})) == "-1/3");
    CHECK(format_rational(slope({3, -2}, {1, 0})) == "3");
    CHECK(make_rational(4, -6) == Rational(-2, 3));
    CHECK_THROWS_AS(make_rational(1, 0), PreconditionError);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const StabilityParameter theta{coeff(rng), coeff(rng), coeff(rng)};
        const auto e = random_vector(rng, 3, 4);
        if (e.is_zero()) continue;
        for (std::int64_t n : {2, 3, 5}) {
            CHECK(slope(theta, e.scaled(n)) == slope(theta, e));
            CHECK(slope(theta.scaled(n), e) == n * slope(theta, e));
        }
    }
}

TEST_CASE("slope comparison against the complement reduces to the sign of theta") {
    for (const auto& [q, d] : {std::pair{k3, DimensionVector{2, 3}}, std::pair{five_arrow, DimensionVector{4, 1, 4}},
                               std::pair{six_arrow, DimensionVector{1, 6, 6}}}) {
        const auto theta = canonical_stability(q, d);
        for (const auto& e : subdimension_vectors(d)) {
            if (e.is_zero() || e == d) continue;
            CHECK((slope(theta, e) > slope(theta, d - e)) == (theta(e) > 0));
        }
    }
}

TEST_CASE("theta coprimality") {
    CHECK(is_theta_coprime({3, -2}, {2, 3}));
    CHECK_FALSE(is_theta_coprime({1, -1}, {2, 2}));
    CHECK(is_theta_coprime({9, -16, -5}, {4, 1, 4}));
    CHECK(is_theta_coprime({42, 5, -12}, {1, 6, 6}));
    CHECK_THROWS_AS(is_theta_coprime({1, 1}, {1, 1}), PreconditionError);
}

TEST_CASE("subdimension vectors") {
    CHECK(subdimension_vectors({1, 1}) ==
          std::vector<DimensionVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(subdimension_vectors({2, 3}).size() == 12);
    CHECK(subdimension_vectors({4, 1, 4}).size() == 50);
    CHECK(subdimension_count({4, 1, 4}) == 50);
    CHECK(subdimension_vectors({0, 0}).size() == 1);

    for (const DimensionVector d : {DimensionVector{2, 3}, DimensionVector{4, 1, 4}, DimensionVector{1, 0, 2}}) {
        const auto subs = subdimension_vectors(d);
        CHECK(std::is_sorted(subs.begin(), subs.end()));
        CHECK(std::adjacent_find(subs.begin(), subs.end()) == subs.end());
        const std::set<DimensionVector> as_set(subs.begin(), subs.end());
        for (const auto& e : subs) {
            CHECK(e.leq(d));
            CHECK(as_set.count(d - e) == 1);
        }
    }
}
