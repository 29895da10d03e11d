#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symcox/poly.hpp"

using namespace symcox;

namespace {

RatPoly from_coeffs(std::vector<long> cs) {
    std::vector<Rat> rs;
    for (long c : cs)
        rs.emplace_back(c);
    return RatPoly(std::move(rs));
}

RatPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rat> cs(static_cast<size_t>(deg(rng)) + 1);
    for (auto& c : cs)
        c = Rat(num(rng), den(rng));
    return RatPoly(std::move(cs));
}

}  // namespace

TEST_CASE("canonical representation trims trailing zeros") {
    RatPoly p(std::vector<Rat>{Rat(1), Rat(2), Rat(0), Rat(0)});
    CHECK(p.degree() == 1);
    CHECK(from_coeffs({0, 0}).is_zero());
    CHECK(RatPoly(0L).is_zero());
}

TEST_CASE("normalization cancels exactly") {
    // (q^2 - 1) / (q + 1) = q - 1
    RatFunc f(from_coeffs({-1, 0, 1}), from_coeffs({1, 1}));
    CHECK(f.to_poly() == from_coeffs({-1, 1}));

    // (q^3 - 1) / (q - 1) = q^2 + q + 1
    RatFunc g(from_coeffs({-1, 0, 0, 1}), from_coeffs({-1, 1}));
    CHECK(g.to_poly() == from_coeffs({1, 1, 1}));

    // (q^2 - 1)(q^3 - 1) / (2 (q + 1)) = (q^4 - q^3 - q + 1) / 2
    RatFunc h(from_coeffs({-1, 0, 1}) * from_coeffs({-1, 0, 0, 1}),
              from_coeffs({2, 2}));
    RatPoly expected(std::vector<Rat>{Rat(1, 2), Rat(-1, 2), Rat(0), Rat(-1, 2), Rat(1, 2)});
    CHECK(h.to_poly() == expected);
}

TEST_CASE("equal fractions normalize identically") {
    RatFunc a(from_coeffs({-1, 0, 1}), from_coeffs({2, 2}));         // (q^2-1)/(2q+2)
    RatFunc b(from_coeffs({-3, 0, 3}), from_coeffs({6, 6}));         // scaled by 3
    CHECK(a == b);
    CHECK(a.num() == b.num());
    CHECK(a.den() == b.den());
}

TEST_CASE("to_poly failure carries the remainder") {
    RatFunc f(from_coeffs({0, 1}), from_coeffs({1, 1}));  // q / (q+1)
    CHECK_THROWS_AS((void)f.to_poly(), NotPolynomialError);
    try {
        (void)f.to_poly();
    } catch (const NotPolynomialError& e) {
        CHECK(!e.remainder().empty());
    }
}

TEST_CASE("q(q-1)^2(q+1) / (2(q+1)) = q(q-1)^2 / 2") {
    RatPoly num = from_coeffs({0, 1}) * from_coeffs({-1, 1}) * from_coeffs({-1, 1}) *
                  from_coeffs({1, 1});
    RatFunc f(num, from_coeffs({2, 2}));
    RatPoly expected(std::vector<Rat>{Rat(0), Rat(1, 2), Rat(-1), Rat(1, 2)});
    CHECK(f.to_poly() == expected);
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_WITH_AS(RatFunc(from_coeffs({1}), RatPoly()), "division by zero polynomial",
                         std::domain_error);
}

TEST_CASE("evaluation is exact") {
    CHECK(from_coeffs({-1, 0, 1}).eval_int(Int(3)) == 8);  // q^2 - 1 at 3
    RatPoly half(std::vector<Rat>{Rat(0), Rat(1, 2), Rat(-1), Rat(1, 2)});  // q(q-1)^2/2
    CHECK(half.eval_int(Int(3)) == 6);
    CHECK(RatPoly::q_power(9).eval_int(Int(2)) == 512);  // theta = 3 Steinberg exponent
    CHECK(half.eval(Int(2)) == Rat(1));
}

TEST_CASE("ring axioms hold exactly on random triples") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        RatPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == RatPoly());
    }
}

TEST_CASE("normalization is idempotent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        RatPoly num = random_poly(rng);
        RatPoly den = random_poly(rng);
        if (den.is_zero())
            continue;
        RatFunc once(num, den);
        RatFunc twice(once.num(), once.den());
        CHECK(once == twice);
    }
}

TEST_CASE("cyclotomic-style quotients are polynomial with integer values") {
    for (int d = 1; d <= 4; ++d)
        for (int m = d; m <= 12; m += d) {
            RatFunc f(RatPoly::q_pow_minus_one(m), RatPoly::q_pow_minus_one(d));
            RatPoly p = f.to_poly();
            for (long q0 : {2L, 3L, 5L}) {
                Int v = p.eval_int(Int(q0));
                CHECK(v > 0);
            }
        }
}

TEST_CASE("rational string round trip") {
    for (const char* s : {"0", "1", "-1", "3/2", "-7/3", "12"}) {
        Rat r = rat_from_string(s);
        CHECK(rat_to_string(r) == s);
    }
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("zebra"), std::invalid_argument);
}

TEST_CASE("odd prime power detection") {
    CHECK(is_odd_prime_power(Int(3)));
    CHECK(is_odd_prime_power(Int(9)));
    CHECK(is_odd_prime_power(Int(125)));
    CHECK(is_odd_prime_power(Int(7)));
    CHECK(!is_odd_prime_power(Int(2)));
    CHECK(!is_odd_prime_power(Int(4)));
    CHECK(!is_odd_prime_power(Int(15)));
    CHECK(!is_odd_prime_power(Int(1)));
}
