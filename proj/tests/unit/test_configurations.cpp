#include <doctest.h>

#include "aperiodic/configuration.hpp"
#include "aperiodic/error.hpp"
#include "aperiodic/examples.hpp"
#include "aperiodic/patterns.hpp"
#include "aperiodic/poly_text.hpp"

#include <random>
#include <set>

using namespace aperiodic;

namespace {

// Independent floor-formula oracle for the torus configuration.
long torus_oracle(const Rational& z1, const Rational& z2, const Rational& a, long i, long j) {
    auto fl = [](const Rational& q) { return floor(q).get_si(); };
    return fl(z1 + z2 + Rational(i + j) * a) - fl(z1 + Rational(i) * a) - fl(z2 + Rational(j) * a);
}

Rational random_rational(std::mt19937& rng, int max_den) {
    std::uniform_int_distribution<int> den(1, max_den);
    const int q = den(rng);
    std::uniform_int_distribution<int> num(-3 * q, 3 * q);
    return make_rational(num(rng), q);
}

}  // namespace

TEST_SUITE("configurations") {

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet::make({}), ContractError);
    CHECK_THROWS_AS(Alphabet::make({1, 0, 1}), ContractError);
    const Alphabet a = Alphabet::make({-3, 1, 2});
    CHECK(a.max_abs() == 3);
    CHECK(a.contains(2));
    CHECK_FALSE(a.contains(0));
}

TEST_CASE("eval basics") {
    const auto b = ExponentBasis::standard(2);
    CHECK(constant_config(b, 0).eval(GroupPoint{7, -3}) == 0);
    const Configuration t = torus_config(0, 0, Rational(1, 2));
    CHECK(t.eval(GroupPoint{1, 1}) == 1);
    CHECK(t.eval(GroupPoint{1, 0}) == 0);
    CHECK(t.eval(GroupPoint{0, 0}) == 0);
    CHECK_THROWS_AS(t.eval(GroupPoint{1}), ContractError);
    CHECK_THROWS_AS(torus_config(0, 0, 0), ContractError);

    const Configuration shifted = translate(t, GroupPoint{1, 0});
    for (long i = -3; i <= 3; ++i) {
        for (long j = -3; j <= 3; ++j) CHECK(shifted.eval(GroupPoint{i, j}) == t.eval(GroupPoint{i - 1, j}));
    }
}

TEST_CASE("explicit window domain") {
    const auto b = ExponentBasis::standard(1);
    const Configuration c = explicit_config(b, {{GroupPoint{2}, 5}}, RationalBox{{0}, {4}});
    CHECK(c.eval(GroupPoint{2}) == 5);
    CHECK(c.eval(GroupPoint{3}) == 0);
    CHECK_THROWS_AS(c.eval(GroupPoint{5}), DomainError);
    CHECK_THROWS_AS(explicit_config(b, {{GroupPoint{9}, 1}}, RationalBox{{0}, {4}}), ContractError);
}

TEST_CASE("torus configuration is binary and degenerate for integer alpha") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const Rational z1 = random_rational(rng, 20);
        const Rational z2 = random_rational(rng, 20);
        Rational a = random_rational(rng, 20);
        if (a == 0) a = Rational(1, 7);
        const Configuration c = torus_config(z1, z2, a);
        for (long i = 0; i < 50; ++i) {
            for (long j = 0; j < 50; ++j) {
                const Rational v = c.eval(GroupPoint{i, j});
                CHECK((v == 0 || v == 1));
                CHECK(v == torus_oracle(z1, z2, a, i, j));
            }
        }
    }
    const Configuration one = torus_config(0, 0, 1);
    for (long i = -10; i <= 10; ++i) CHECK(one.eval(GroupPoint{i, 3 - i}) == 0);
}

TEST_CASE("property: torus configuration is q-periodic in both axes") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coord(-40, 40);
    for (int trial = 0; trial < 20; ++trial) {
        Rational a = random_rational(rng, 30);
        if (a == 0) a = Rational(2, 9);
        const Configuration c = torus_config(random_rational(rng, 30), random_rational(rng, 30), a);
        const long q = a.get_den().get_si();
        for (int k = 0; k < 50; ++k) {
            const GroupPoint u{coord(rng), coord(rng)};
            CHECK(c.eval(u) == c.eval(u + GroupPoint{q, 0}));
            CHECK(c.eval(u) == c.eval(u + GroupPoint{0, q}));
        }
    }
}

TEST_CASE("property: lazily applied polynomial equals the naive convolution") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> e(-3, 3);
    std::uniform_int_distribution<int> coord(-20, 20);
    const Configuration c = torus_config(Rational(1, 5), Rational(2, 7), Rational(3, 11));
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPoly f(c.basis());
        for (int k = 0; k < 4; ++k) f += LaurentPoly::monomial(c.basis(), GroupPoint{e(rng), e(rng)}, e(rng));
        const Configuration fc = apply_poly(f, c);
        const GroupPoint u{coord(rng), coord(rng)};
        Rational naive = 0;
        for (const auto& [v, coef] : f.terms()) {
            naive += coef * torus_oracle(Rational(1, 5), Rational(2, 7), Rational(3, 11), (u - v)[0].get_si(),
                                         (u - v)[1].get_si());
        }
        CHECK(fc.eval(u) == naive);
    }
}

TEST_CASE("property: translations compose") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coord(-10, 10);
    const Configuration c = torus_config(Rational(1, 3), 0, Rational(2, 5));
    for (int trial = 0; trial < 30; ++trial) {
        const GroupPoint s{coord(rng), coord(rng)};
        const GroupPoint t{coord(rng), coord(rng)};
        const GroupPoint u{coord(rng), coord(rng)};
        CHECK(translate(translate(c, s), t).eval(u) == translate(c, s + t).eval(u));
    }
}

TEST_CASE("periodic configurations reduce modulo the period lattice") {
    const auto b = ExponentBasis::standard(2);
    const Configuration c = periodic_config(b, {GroupPoint{2, 1}, GroupPoint{0, 3}}, {{GroupPoint{0, 0}, 1}});
    CHECK(c.eval(GroupPoint{2, 1}) == 1);
    CHECK(c.eval(GroupPoint{4, 5}) == 1);
    CHECK(c.eval(GroupPoint{1, 0}) == 0);
    CHECK(fundamental_domain({GroupPoint{2, 1}, GroupPoint{0, 3}}).size() == 6);
    CHECK_THROWS_AS(periodic_config(b, {GroupPoint{1, 1}, GroupPoint{2, 2}}, {}), ContractError);
    CHECK_THROWS_AS(periodic_config(b, {GroupPoint{2, 0}, GroupPoint{0, 2}},
                                    {{GroupPoint{0, 0}, 1}, {GroupPoint{2, 2}, 3}}),
                    ContractError);
}

TEST_CASE("patterns") {
    const auto b = ExponentBasis::standard(2);
    const Shape square = Shape::box({2, 2});
    CHECK(patterns(constant_config(b, 1), square, IntBox::cube(2, 3).points()).count() == 1);

    // Torus alpha = 1/2 on one 2x2 period cell, against a hand-rolled dedup.
    const Configuration t = torus_config(0, 0, Rational(1, 2));
    const PatternSet ps = patterns(t, square);
    CHECK(ps.exact);
    std::set<std::vector<long>> oracle;
    for (long i = 0; i < 2; ++i) {
        for (long j = 0; j < 2; ++j) {
            std::vector<long> p;
            for (long di = 0; di < 2; ++di) {
                for (long dj = 0; dj < 2; ++dj) p.push_back(torus_oracle(0, 0, Rational(1, 2), i + di, j + dj));
            }
            oracle.insert(p);
        }
    }
    CHECK(ps.count() == oracle.size());
    CHECK(ps.count() <= 4);

    CHECK_THROWS_AS(patterns(floor_config(ExponentBasis::standard(1), 0, {Rational(1, 3)}), Shape({GroupPoint{0}})),
                    ContractError);
}

TEST_CASE("Sturmian words have n + 1 factors of length n") {
    const auto b = ExponentBasis::standard(1);
    const Rational a = golden_ratio_surrogate(64) - 1;
    // c(n) = floor((n+1)a) - floor(n a)
    const Configuration c = sum_config({floor_config(b, a, {a}), floor_config(b, 0, {a})}, {1, -1});
    const auto probes = IntBox({Integer(0)}, {Integer(3000)}).points();
    for (long n = 1; n <= 12; ++n) CHECK(patterns(c, Shape::box({n}), probes).count() == static_cast<std::size_t>(n + 1));
}

TEST_CASE("property: pattern complexity is monotone in probes and shape") {
    std::mt19937 rng(37);
    const Configuration c = torus_config(Rational(1, 7), Rational(3, 7), Rational(5, 13));
    const auto small = IntBox::cube(2, 3).points();
    const auto large = IntBox::cube(2, 6).points();
    const Shape d1({GroupPoint{0, 0}, GroupPoint{1, 0}});
    const Shape d2({GroupPoint{0, 0}, GroupPoint{1, 0}, GroupPoint{0, 1}});
    CHECK(patterns(c, d1, small).count() <= patterns(c, d1, large).count());
    CHECK(patterns(c, d1, large).count() <= patterns(c, d2, large).count());
}

TEST_CASE("example sets") {
    const PointCloud s1 = s1_cloud(-5, 5);
    CHECK(s1.size() == 8);
    std::set<Rational> xs;
    for (const auto& e : s1.embedded()) xs.insert(e[0]);
    CHECK(xs.count(Rational(17, 4)));
    CHECK(xs.count(Rational(-2)));
    CHECK_FALSE(xs.count(Rational(26, 5)));

    const PointCloud s3 = s3_cloud(-5, 5);
    CHECK(s3.size() == 7);
    CHECK(s3.contains(GroupPoint{-5, 0}));
    CHECK(s3.contains(GroupPoint{0, 0}));
    CHECK(s3.contains(GroupPoint{0, 1}));
    CHECK_FALSE(s3.contains(GroupPoint{0, 2}));

    const PointCloud s2 = s2_cloud(-10, 10);
    CHECK(s2.contains(GroupPoint{0, 1}));
    CHECK_FALSE(s2.contains(GroupPoint{3, 0}));  // floor(pi)
    CHECK_FALSE(s2.contains(GroupPoint{4, 0}));  // ceil(pi)
    CHECK(s2.contains(GroupPoint{5, 0}));

    const PointCloud two_lattice = two_lattice_cloud(0, 4);
    CHECK(two_lattice.size() == 7);
    CHECK(two_lattice.contains(GroupPoint{0, 2}));
    CHECK_FALSE(two_lattice.contains(GroupPoint{0, 3}));
    const Configuration c56 = two_lattice_config();
    CHECK(c56.eval(GroupPoint{0, 0}) == 2);
    CHECK(c56.eval(GroupPoint{3, 0}) == 1);
    CHECK(c56.eval(GroupPoint{1, 1}) == 0);
    CHECK(c56.alphabet()->size() == 3);
    const LaurentPoly ann = difference_poly(c56.basis(), GroupPoint{1, 0}) * difference_poly(c56.basis(), GroupPoint{0, 1});
    for (long a = -4; a <= 4; ++a) {
        for (long k = -4; k <= 4; ++k) CHECK(apply_poly(ann, c56).eval(GroupPoint{a, k}) == 0);
    }

    const Configuration c73 = punctured_grid_config();
    CHECK(c73.eval(GroupPoint{0, 0, 0}) == 1);
    CHECK(c73.eval(GroupPoint{3, 0, 0}) == 0);
    CHECK(c73.eval(GroupPoint{0, 4, 0}) == 1);
    CHECK(c73.eval(GroupPoint{3, 0, -2}) == 1);
    CHECK(c73.eval(GroupPoint{0, 1, 1}) == 0);

    const PointCloud fib = fibonacci_cloud(0, 50);
    std::set<RationalVector> gaps;
    for (std::size_t i = 0; i + 1 < fib.size(); ++i) gaps.insert(sub(fib.embedded()[i + 1], fib.embedded()[i]));
    CHECK(gaps.size() == 2);
    CHECK(gaps.count(RationalVector{1}));
    CHECK(gaps.count(RationalVector{fib.basis().generator(1)[0]}));

    CHECK_THROWS_AS(example_cloud("S9", RationalBox{{0}, {1}}), ContractError);
    CHECK_THROWS_AS(s3_cloud(Rational(1, 10), Rational(2, 10)), ContractError);
}

}
