#include <doctest.h>

#include "aperiodic/annihilator.hpp"
#include "aperiodic/decomposition.hpp"
#include "aperiodic/error.hpp"
#include "aperiodic/examples.hpp"

#include <random>

using namespace aperiodic;

namespace {

const ExponentBasis z2 = ExponentBasis::standard(2);

Integer floor_of(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

WindowFunction constant_function(const IntBox& box, const Rational& v) {
    WindowFunction f(box);
    box.for_each([&](const GroupPoint& u) { f.set(u, v); });
    return f;
}

}  // namespace

TEST_SUITE("decomposition-engine") {

TEST_CASE("window functions") {
    const IntBox box = IntBox::parse("-2..2,0..3");
    WindowFunction f(box);
    CHECK_FALSE(f.defined(GroupPoint{0, 0}));
    CHECK_THROWS_AS(f.at(GroupPoint{0, 0}), DomainError);
    CHECK_THROWS_AS(f.set(GroupPoint{3, 0}, 1), DomainError);
    f.set(GroupPoint{-2, 3}, 7);
    CHECK(f.at(GroupPoint{-2, 3}) == 7);
    CHECK_FALSE(f.defined_core());

    const WindowFunction g = constant_function(IntBox::cube(2, 3), 1);
    REQUIRE(g.defined_core());
    CHECK(*g.defined_core() == IntBox::cube(2, 3));
    const WindowFunction d = g.difference(GroupPoint{1, 0});
    CHECK(*d.defined_core() == IntBox::cube(2, 3).shrunk({1, 1}));
    CHECK(d.at(GroupPoint{0, 0}) == 0);
}

TEST_CASE("integrate_step of zero is zero") {
    const IntegrationResult r = integrate_step(constant_function(IntBox::cube(2, 4), 0), GroupPoint{1, 0}, GroupPoint{0, 1});
    REQUIRE(r.inner);
    CHECK(r.verified);
    r.inner->for_each([&](const GroupPoint& u) { CHECK(r.c.at(u) == 0); });
}

TEST_CASE("integrate_step of a constant is a ramp") {
    const IntegrationResult r = integrate_step(constant_function(IntBox::cube(2, 5), 1), GroupPoint{1, 0}, GroupPoint{0, 1});
    REQUIRE(r.inner);
    CHECK(r.verified);
    CHECK(*r.inner == IntBox::cube(2, 5));
    r.inner->for_each([&](const GroupPoint& u) { CHECK(r.c.at(u) == -Rational(u[0])); });
}

TEST_CASE("integrate_step inverts a difference") {
    // g(i, j) = i^2 - 3i is (0,1)-periodic and vanishes on the seed line i = 0.
    const IntBox box = IntBox::cube(2, 6);
    WindowFunction g(box);
    box.for_each([&](const GroupPoint& u) { g.set(u, Rational(u[0] * u[0] - 3 * u[0])); });
    const WindowFunction c_prime = g.difference(GroupPoint{1, 0});
    const IntegrationResult r = integrate_step(c_prime, GroupPoint{1, 0}, GroupPoint{0, 1});
    REQUIRE(r.inner);
    CHECK(r.verified);
    r.inner->for_each([&](const GroupPoint& u) { CHECK(r.c.at(u) == g.at(u)); });
    // Independent re-check of the first identity.
    r.inner->for_each([&](const GroupPoint& u) {
        const GroupPoint a = u - GroupPoint{1, 0};
        if (r.inner->contains(a)) CHECK(r.c.at(a) - r.c.at(u) == c_prime.at(u));
    });
}

TEST_CASE("integrate_step seeds every coset") {
    // Z(2,0) + Z(0,1) has two cosets; both must be reachable.
    const IntegrationResult r = integrate_step(constant_function(IntBox::cube(2, 5), 1), GroupPoint{2, 0}, GroupPoint{0, 1});
    REQUIRE(r.inner);
    CHECK(r.verified);
    CHECK(r.inner->count() > 60);
    CHECK_THROWS_AS(integrate_step(constant_function(IntBox::cube(2, 2), 1), GroupPoint{1, 1}, GroupPoint{2, 2}),
                    ContractError);
}

TEST_CASE("integrate_step reports a non-periodic right-hand side") {
    const IntBox box = IntBox::cube(2, 4);
    WindowFunction f(box);
    box.for_each([&](const GroupPoint& u) { f.set(u, Rational(u[1])); });
    const IntegrationResult r = integrate_step(f, GroupPoint{1, 0}, GroupPoint{0, 1});
    CHECK_FALSE(r.verified);
    CHECK_FALSE(r.diagnostic.empty());
}

TEST_CASE("decompose base case is the identity") {
    const Configuration c = periodic_config(z2, {GroupPoint{1, 0}, GroupPoint{0, 3}}, {{GroupPoint{0, 1}, 2}});
    const DecompositionWitness w = decompose(c, {GroupPoint{1, 0}}, IntBox::cube(2, 5));
    REQUIRE(w.certified);
    REQUIRE(w.components.size() == 1);
    CHECK(*w.inner_window == IntBox::cube(2, 5));
    w.inner_window->for_each([&](const GroupPoint& u) { CHECK(w.components[0].values.at(u) == c.eval(u)); });
}

TEST_CASE("torus configuration decomposes along its three directions") {
    const std::vector<GroupPoint> dirs{GroupPoint{1, -1}, GroupPoint{0, 1}, GroupPoint{1, 0}};
    for (const Rational& alpha : {Rational(1, 3), Rational(2, 7)}) {
        const Configuration c = torus_config(Rational(1, 4), 0, alpha);
        const DecompositionWitness w = decompose(c, dirs, IntBox::cube(2, 12));
        REQUIRE(w.certified);
        CHECK(w.components.size() == 3);
        REQUIRE(w.inner_window);
        CHECK(w.inner_window->count() >= 100);
        CHECK(required_window(*w.inner_window, w.margin) == IntBox::cube(2, 12));
        CHECK(check_decomposition(w, c));
    }
}

TEST_CASE("torus closed forms satisfy the same certificate") {
    const Rational z1(1, 4);
    const Rational z2v(2, 5);
    const Rational alpha(3, 7);
    const Configuration c = torus_config(z1, z2v, alpha);
    const auto forms = torus_closed_forms(z1, z2v, alpha);
    const std::vector<GroupPoint> dirs{GroupPoint{1, -1}, GroupPoint{0, 1}, GroupPoint{1, 0}};
    DecompositionWitness w;
    w.inner_window = IntBox::cube(2, 8);
    for (std::size_t i = 0; i < 3; ++i) w.components.push_back({dirs[i], WindowFunction::sample(forms[i], *w.inner_window)});
    CHECK(check_decomposition(w, c));
    w.inner_window->for_each([&](const GroupPoint& u) {
        const Rational i(u[0]);
        const Rational j(u[1]);
        CHECK(w.components[0].values.at(u) == floor_of(z1 + z2v + (i + j) * alpha));
        CHECK(w.components[1].values.at(u) == -floor_of(z1 + i * alpha));
    });
}

TEST_CASE("planted periodic sum decomposes up to an exchange") {
    std::mt19937 rng(9);
    std::map<GroupPoint, Rational> a;
    std::map<GroupPoint, Rational> b;
    for (long j = 0; j < 4; ++j) a[GroupPoint{0, j}] = static_cast<long>(rng() % 5) - 2;
    for (long i = 0; i < 3; ++i) b[GroupPoint{i, 0}] = static_cast<long>(rng() % 5) - 2;
    const Configuration ca = periodic_config(z2, {GroupPoint{1, 0}, GroupPoint{0, 4}}, a);
    const Configuration cb = periodic_config(z2, {GroupPoint{3, 0}, GroupPoint{0, 1}}, b);
    const Configuration c = sum_config({ca, cb});
    const DecompositionWitness w = decompose(c, {GroupPoint{1, 0}, GroupPoint{0, 1}}, IntBox::cube(2, 8));
    REQUIRE(w.certified);
    // c_1 - a is both (1,0)- and (0,1)-periodic: a constant.
    std::optional<Rational> shift;
    w.inner_window->for_each([&](const GroupPoint& u) {
        const Rational d = w.components[0].values.at(u) - ca.eval(u);
        if (!shift) shift = d;
        CHECK(d == *shift);
        CHECK(w.components[0].values.at(u) + w.components[1].values.at(u) == c.eval(u));
    });
}

TEST_CASE("decompose rejects bad inputs and tiny windows") {
    const Configuration c = torus_config(0, 0, Rational(1, 3));
    CHECK_THROWS_AS(decompose(c, {}, IntBox::cube(2, 3)), ContractError);
    CHECK_THROWS_AS(decompose(c, {GroupPoint{1, 0}, GroupPoint{2, 0}}, IntBox::cube(2, 3)), ContractError);
    const DecompositionWitness tiny = decompose(c, {GroupPoint{1, -1}, GroupPoint{0, 1}, GroupPoint{1, 0}}, IntBox::cube(2, 1));
    CHECK_FALSE(tiny.certified);
    CHECK_FALSE(tiny.diagnostic.empty());
}

TEST_CASE("decompose fails honestly without an annihilator") {
    // Not annihilated by (X^(1,0) - 1)(X^(0,1) - 1).
    std::map<GroupPoint, Rational> v{{GroupPoint{0, 0}, 1}};
    const Configuration c = explicit_config(z2, v, RationalBox{{-6, -6}, {6, 6}});
    const DecompositionWitness w = decompose(c, {GroupPoint{1, 0}, GroupPoint{0, 1}}, IntBox::cube(2, 6));
    CHECK_FALSE(w.certified);
}

}
