#include <doctest.h>

#include "aperiodic/error.hpp"
#include "aperiodic/laurent_poly.hpp"
#include "aperiodic/poly_text.hpp"

#include <map>
#include <random>

using namespace aperiodic;

namespace {

// Naive term-map product, independent of LaurentPoly::operator*.
std::map<GroupPoint, Rational> naive_product(const LaurentPoly& f, const LaurentPoly& g) {
    std::map<GroupPoint, Rational> out;
    for (const auto& [u, a] : f.terms()) {
        for (const auto& [v, b] : g.terms()) out[u + v] += a * b;
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

LaurentPoly random_poly(std::mt19937& rng, const ExponentBasis& basis, int terms, int span) {
    std::uniform_int_distribution<int> e(-span, span);
    std::uniform_int_distribution<int> c(-3, 3);
    LaurentPoly f(basis);
    for (int i = 0; i < terms; ++i) {
        std::vector<Integer> coords;
        for (std::size_t k = 0; k < basis.rank(); ++k) coords.emplace_back(e(rng));
        f += LaurentPoly::monomial(basis, GroupPoint(std::move(coords)), c(rng));
    }
    return f;
}

}  // namespace

TEST_SUITE("core-algebra") {

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-0.25")) == "-1/4");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), ContractError);
    CHECK_THROWS_AS(parse_rational("abc"), ContractError);
    CHECK(floor(make_rational(-1, 2)) == -1);
    CHECK(ceil(make_rational(-1, 2)) == 0);
}

TEST_CASE("sqrt bracket is exact on squares and tight otherwise") {
    const Interval e = sqrt_bracket(make_rational(9, 4));
    CHECK(e.is_exact());
    CHECK(e.lower == make_rational(3, 2));
    const Interval b = sqrt_bracket(2);
    CHECK(b.lower * b.lower <= 2);
    CHECK(b.upper * b.upper >= 2);
    CHECK(b.upper - b.lower < Rational(1, 1000000));
}

TEST_CASE("surrogates bracket their constants") {
    const Rational pi = pi_surrogate(64);
    CHECK(pi > make_rational(314159, 100000));
    CHECK(pi < make_rational(314160, 100000));
    const Rational phi = golden_ratio_surrogate(64);
    CHECK(abs(phi * phi - phi - 1) < Rational(1, 1000000000));
}

TEST_CASE("group points") {
    GroupPoint p{2, -4};
    CHECK(p.content() == 2);
    CHECK(p.primitive() == GroupPoint{1, -2});
    CHECK(GroupPoint({-3, 6}).primitive() == GroupPoint{1, -2});
    Integer k;
    CHECK(p.is_multiple_of(GroupPoint{-1, 2}, k));
    CHECK(k == -2);
    CHECK_FALSE(GroupPoint({1, 1}).is_multiple_of(GroupPoint{1, 2}, k));
    CHECK(parallel(GroupPoint{2, 2}, GroupPoint{1, 1}));
    CHECK_THROWS_AS(GroupPoint({1}) + GroupPoint({1, 2}), ContractError);
    CHECK_THROWS_AS(GroupPoint::zero(2).primitive(), ContractError);
}

TEST_CASE("basis validation and embedding") {
    CHECK_THROWS_AS(ExponentBasis::make({{0, 0}}), ContractError);
    CHECK_THROWS_AS(ExponentBasis::make({{1, 0}, {1}}), ContractError);
    const ExponentBasis b = ExponentBasis::make({{1}, {make_rational(1, 3)}}, {0, 1});
    const RationalVector e = b.embed(GroupPoint{2, 3});
    CHECK(e[0] == 3);
    CHECK(b.classes_used(GroupPoint{0, 5}) == std::vector<int>{1});
    CHECK(ExponentBasis::standard(2).is_standard());
    CHECK(ExponentBasis::standard(2) == ExponentBasis::standard(2));
}

TEST_CASE("poly_add") {
    const auto b = ExponentBasis::standard(2);
    const LaurentPoly f = parse_poly("X^(1,-1) - 1");
    CHECK(f + LaurentPoly(b) == f);
    CHECK((difference_poly(b, GroupPoint{1, -1}) + parse_poly("1 - X^(1,-1)")).is_zero());
    const LaurentPoly s = parse_poly("(x-1)+(x+1)");
    CHECK(s.size() == 1);
    CHECK(s.coeff(GroupPoint{1}) == 2);
    CHECK_THROWS_AS(parse_poly("x") + parse_poly("X^(1,0)"), ContractError);
}

TEST_CASE("poly_mul") {
    const LaurentPoly f = parse_poly("x^3 + 2*x - 1");
    CHECK(f * LaurentPoly::constant(f.basis(), 1) == f);
    CHECK(parse_poly("(x-1)*(x+1)") == parse_poly("x^2 - 1"));

    const LaurentPoly torus = parse_poly("(X^(1,-1)-1)*(X^(0,1)-1)*(X^(1,0)-1)");
    const LaurentPoly expected = parse_poly("X^(2,0) - X^(2,-1) - X^(1,1) + X^(1,-1) + X^(0,1) - 1");
    CHECK(torus == expected);
    CHECK(torus.size() == 6);
    CHECK(torus.coeff(GroupPoint{1, 0}) == 0);

    // Brute-force oracle: expand all 8 monomial products by hand.
    std::map<GroupPoint, Rational> oracle;
    const std::vector<std::pair<GroupPoint, int>> a{{GroupPoint{1, -1}, 1}, {GroupPoint{0, 0}, -1}};
    const std::vector<std::pair<GroupPoint, int>> b{{GroupPoint{0, 1}, 1}, {GroupPoint{0, 0}, -1}};
    const std::vector<std::pair<GroupPoint, int>> c{{GroupPoint{1, 0}, 1}, {GroupPoint{0, 0}, -1}};
    for (const auto& [u1, s1] : a) {
        for (const auto& [u2, s2] : b) {
            for (const auto& [u3, s3] : c) oracle[u1 + u2 + u3] += s1 * s2 * s3;
        }
    }
    std::erase_if(oracle, [](const auto& kv) { return kv.second == 0; });
    CHECK(oracle == torus.terms());
}

TEST_CASE("difference_poly") {
    const auto b2 = ExponentBasis::standard(2);
    CHECK(difference_poly(b2, GroupPoint{1, 0}) == parse_poly("X^(1,0) - 1"));
    CHECK_THROWS_AS(difference_poly(b2, GroupPoint{0, 0}), ContractError);

    const Rational alpha = sqrt_surrogate(2);
    const auto zalpha = ExponentBasis::make({{1}, {alpha}}, {0, 1}, {"1", "alpha"});
    const LaurentPoly d = difference_poly(zalpha, GroupPoint{0, 1});
    CHECK(d.size() == 2);
    CHECK(d.coeff(GroupPoint{0, 1}) == 1);
    CHECK(d.coeff(GroupPoint{0, 0}) == -1);

    const GroupPoint v{2, -1};
    const LaurentPoly lhs = difference_poly(b2, v) * difference_poly(b2, -v);
    const LaurentPoly sq = difference_poly(b2, v) * difference_poly(b2, v);
    const LaurentPoly rhs = -(LaurentPoly::monomial(b2, -v) * sq);
    CHECK(lhs.terms() == naive_product(difference_poly(b2, v), difference_poly(b2, -v)));
    CHECK(lhs == rhs);
}

TEST_CASE("dilate") {
    const LaurentPoly f = parse_poly("x^3 + 2*x - 1");
    CHECK(dilate(f, 1) == f);
    CHECK(dilate(parse_poly("x - 1"), 3) == parse_poly("x^3 - 1"));
    CHECK(dilate(parse_poly("X^(1,-1) - 1"), 2) == parse_poly("X^(2,-2) - 1"));
    CHECK_THROWS_AS(dilate(f, 0), ContractError);
}

TEST_CASE("is_line_poly") {
    CHECK(is_line_poly(parse_poly("x^3 + 2*x - 1")) == GroupPoint{1});
    CHECK(is_line_poly(parse_poly("X^(2,2) - X^(1,1) + 1")) == GroupPoint{1, 1});
    CHECK_FALSE(is_line_poly(parse_poly("X^(1,0) + X^(0,1) - 1")).has_value());
    CHECK_FALSE(is_line_poly(parse_poly("X^(4,1)")).has_value());

    // Collinear only through the declared-independent alpha generator.
    const Rational alpha = sqrt_surrogate(2);
    const auto basis = ExponentBasis::make({{1, 0}, {alpha, 0}, {0, 1}}, {0, 1, 0});
    const LaurentPoly f = (difference_poly(basis, GroupPoint{1, 0, 0}) * difference_poly(basis, GroupPoint{0, 1, 0}));
    const LineInfo info = line_info(f);
    CHECK(info.status == LineStatus::undecidable_declared_independent);
    CHECK_FALSE(is_line_poly(f).has_value());
    CHECK(info.embedded_direction == std::vector<Integer>{1, 0});
}

TEST_CASE("has_vertex_in_direction") {
    const LaurentPoly f = parse_poly("x + y - 1");
    CHECK(has_vertex_in_direction(f, {2, 1}));
    CHECK_FALSE(has_vertex_in_direction(f, {1, 1}));
    CHECK(has_vertex_in_direction(parse_poly("3*X^(5,-2)"), {0, 1}));
    CHECK_THROWS_AS(has_vertex_in_direction(LaurentPoly(f.basis()), {1, 0}), ContractError);
    CHECK_THROWS_AS(has_vertex_in_direction(f, {0, 0}), ContractError);
}

TEST_CASE("text grammar") {
    const LaurentPoly f = parse_poly("(X^(1,-1)-1)*(X^(0,1)-1)*(X^(1,0)-1)");
    CHECK(parse_poly(print_poly(f), f.basis()) == f);
    CHECK(print_poly(parse_poly("x - 1")) == "X^(1) - 1");
    CHECK(print_poly(LaurentPoly(ExponentBasis::standard(1))) == "0");
    CHECK(parse_poly("x^-2") == parse_poly("X^(-2)"));
    CHECK(parse_poly("1/2*x + 0.5") == parse_poly("1/2*(x+1)"));
    CHECK(parse_poly("(x-1)^2") == parse_poly("x^2 - 2*x + 1"));
    CHECK(parse_poly("x*y").rank() == 2);

    try {
        parse_poly("x + * 2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse_poly("X^(1,2) + X^(1)"), ParseError);
    CHECK_THROWS_AS(parse_poly("(x+1)^-1"), ParseError);

    const auto pts = parse_point_list("(1,-1);(0,1); (1,0)");
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == GroupPoint{1, -1});
    CHECK_THROWS_AS(parse_point_list("(1,2);(3)"), ParseError);
}

TEST_CASE("property: product is commutative and associative") {
    std::mt19937 rng(17);
    const auto basis = ExponentBasis::standard(2);
    for (int trial = 0; trial < 50; ++trial) {
        const LaurentPoly f = random_poly(rng, basis, 4, 3);
        const LaurentPoly g = random_poly(rng, basis, 3, 3);
        const LaurentPoly h = random_poly(rng, basis, 3, 2);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK((f * g).terms() == naive_product(f, g));
    }
}

TEST_CASE("property: dilation is multiplicative") {
    std::mt19937 rng(5);
    const auto basis = ExponentBasis::standard(2);
    std::uniform_int_distribution<int> kd(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const LaurentPoly f = random_poly(rng, basis, 3, 3);
        const LaurentPoly g = random_poly(rng, basis, 3, 3);
        int k = kd(rng);
        if (k == 0) k = 2;
        CHECK(dilate(f * g, k) == dilate(f, k) * dilate(g, k));
    }
}

TEST_CASE("property: difference polynomials are line polynomials along v") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> e(-6, 6);
    const auto basis = ExponentBasis::standard(3);
    for (int trial = 0; trial < 100; ++trial) {
        const GroupPoint v{e(rng), e(rng), e(rng)};
        if (v.is_zero()) continue;
        const auto dir = is_line_poly(difference_poly(basis, v));
        REQUIRE(dir.has_value());
        CHECK(parallel(*dir, v));
    }
}

TEST_CASE("property: vertex test is shift invariant") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> e(-5, 5);
    const auto basis = ExponentBasis::standard(2);
    for (int trial = 0; trial < 100; ++trial) {
        const LaurentPoly f = random_poly(rng, basis, 5, 2);
        if (f.is_zero()) continue;
        RationalVector w{e(rng), e(rng)};
        if (is_zero(w)) w = {1, 0};
        const GroupPoint t{e(rng), e(rng)};
        CHECK(has_vertex_in_direction(f, w) == has_vertex_in_direction(f.shifted(t), w));
    }
}

}
