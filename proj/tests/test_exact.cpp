#include "orthofield/errors.hpp"
#include "orthofield/exact.hpp"
#include "orthofield/scalar.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace orthofield;

TEST_CASE("rational text round-trips") {
    CHECK(parse_rational("3/6").value() == Rational(1, 2));
    CHECK(parse_rational("-4").value() == Rational(-4));
    CHECK_FALSE(parse_rational("0.5").has_value());
    CHECK_FALSE(parse_rational("1/0").has_value());
    CHECK(format_rational(Rational(6, 4)) == "3/2");
    CHECK(format_rational(Rational(-6, 3)) == "-2");
    CHECK(format_rational(Rational(5)) == "5");
}

TEST_CASE("split_square separates the square part") {
    auto [root, free] = split_square(Integer(72));
    CHECK(root == 6);
    CHECK(free == 2);
    std::tie(root, free) = split_square(Integer(1));
    CHECK(root == 1);
    CHECK(free == 1);
    // 1000003 is prime; its square times 5 needs the cofactor argument.
    std::tie(root, free) = split_square(Integer("5000030000045"));
    CHECK(root == 1000003);
    CHECK(free == 5);
    // Cofactors beyond the trial bound cubed go through Pollard rho:
    // (1000003 * 1000033)^2 * 1000037 * 2.
    const Integer big = Integer(1000003) * 1000003 * 1000033 * 1000033 * 1000037 * 2;
    std::tie(root, free) = split_square(big);
    CHECK(root == Integer(1000003) * 1000033);
    CHECK(free == 2000074);
    const Integer semiprimes = Integer(1000003) * 1000033 * 1000037 * 1000039;
    std::tie(root, free) = split_square(semiprimes);
    CHECK(root == 1);
    CHECK(free == semiprimes);
}

TEST_CASE("radicands that resist factoring stay canonical") {
    // A 17-digit and a 22-digit prime: far beyond the Pollard rho budget.
    const Integer p("10912450930507733");
    const Integer q("2284921203491770196659");
    auto [root, free] = split_square(9 * p * q);
    CHECK(root == 3);
    CHECK(free == p * q);
    const Surd joint = Surd::sqrt_of(Rational(p * q));
    // Meeting p alone splits the stored cofactor by a gcd.
    const Surd left = Surd::sqrt_of(Rational(p));
    const Surd right = Surd::sqrt_of(Rational(q));
    CHECK((joint * left).str() == p.get_str() + "*sqrt(" + q.get_str() + ")");
    CHECK(joint == left * right);
    CHECK((joint - left * right).is_zero());
    CHECK((joint + left).sign() > 0);
    CHECK((left - right).sign() < 0);
    const Surd x = joint + left + Surd(1);
    CHECK(x * x.inverse() == Surd(1));
    CHECK_FALSE(representation_ambiguous());
}

TEST_CASE("surd canonical form") {
    CHECK(Surd::sqrt_of(Rational(1, 2)).str() == "1/2*sqrt(2)");
    CHECK(Surd::sqrt_of(Rational(12)).str() == "2*sqrt(3)");
    CHECK(Surd::sqrt_of(Rational(9, 4)).str() == "3/2");
    CHECK((Surd(Rational(1, 2)) + Surd::term(3, 2)).str() == "1/2 + 3*sqrt(2)");
    CHECK(Surd().str() == "0");
    CHECK(Surd::parse("2/3*sqrt(8)")->str() == "4/3*sqrt(2)");
    CHECK(Surd::parse("sqrt(1/2)").value() == Surd::sqrt_of(Rational(1, 2)));
    CHECK_FALSE(Surd::parse("0.25").has_value());
    CHECK_FALSE(Surd::parse("sqrt(-1)").has_value());
}

TEST_CASE("surd field operations") {
    const Surd a = Surd(1) + Surd::sqrt_of(2);
    const Surd b = Surd::sqrt_of(3) - Surd::sqrt_of(6);
    CHECK((a * a).str() == "3 + 2*sqrt(2)");
    CHECK((a * a.inverse()) == Surd(1));
    CHECK((b * b.inverse()) == Surd(1));
    CHECK(((a + b) * (a + b).inverse()) == Surd(1));
    CHECK((a / a) == Surd(1));
    CHECK_THROWS_AS(Surd(1) / Surd(0), std::domain_error);
    CHECK((Surd::sqrt_of(2) * Surd::sqrt_of(6)).str() == "2*sqrt(3)");
    CHECK_FALSE((a - a).str() != "0");
}

TEST_CASE("surd exact sign agrees with high-precision evaluation") {
    // sqrt(2) + sqrt(3) - sqrt(49/5) is about 0.0158; 7 - 5 sqrt(2) about -0.071.
    CHECK((Surd::sqrt_of(2) + Surd::sqrt_of(3) - Surd::sqrt_of(Rational(49, 5))).sign() == 1);
    CHECK((Surd::sqrt_of(2) + Surd::sqrt_of(3) - Surd::sqrt_of(10)).sign() == -1);
    CHECK((Surd(7) - Surd::term(5, 2)).sign() == -1);
    CHECK((Surd::sqrt_of(8) - Surd::term(2, 2)).sign() == 0);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-20, 20);
    const int radicands[] = {1, 2, 3, 5, 6, 7};
    for (int trial = 0; trial < 200; ++trial) {
        Surd x;
        for (int r : radicands) x += Surd::term(Rational(coef(rng), 7), r);
        const Real value = to_real(x);
        if (abs(value) < 1e-20) continue;
        CHECK(x.sign() == (value > 0 ? 1 : -1));
        if (!x.is_zero()) CHECK(to_double(x * x.inverse()) == doctest::Approx(1.0));
    }
}

TEST_CASE("square roots outside the rationals are refused") {
    CHECK(sqrt(Surd(Rational(4, 9))) == Surd(Rational(2, 3)));
    CHECK_THROWS_AS(sqrt(Surd(1) + Surd::sqrt_of(2)), InexactOperation);
    CHECK_THROWS_AS((Surd::sqrt_of(2)).to_rational(), InexactOperation);
}

TEST_CASE("binary128 conversion keeps full precision") {
    const Real third = to_real(Rational(1, 3));
    CHECK(abs(third * 3 - 1) < 1e-32);
    const Real root = to_real(Surd::sqrt_of(2));
    CHECK(abs(root * root - 2) < 1e-32);
}
