#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <stdexcept>

#include "orw/halfint.hpp"
#include "orw/poly.hpp"
#include "orw/rational.hpp"

using namespace orw;

TEST_CASE("rational construction canonicalizes") {
    CHECK(to_string(make_rational(2, 4)) == "1/2");
    CHECK(to_string(make_rational(-2, 4)) == "-1/2");
    CHECK(to_string(make_rational(3, -6)) == "-1/2");
    CHECK(to_string(make_rational(7)) == "7");
    CHECK(to_string(make_rational(0, 5)) == "0");
    CHECK(make_rational(Integer(10), Integer(15)) == make_rational(2, 3));
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parsing round trips") {
    CHECK(rational_from_string("42").value() == 42);
    CHECK(rational_from_string("-7/3").value() == make_rational(-7, 3));
    CHECK(rational_from_string("007/21").value() == make_rational(1, 3));
    CHECK(!rational_from_string("").has_value());
    CHECK(!rational_from_string("1/").has_value());
    CHECK(!rational_from_string("/2").has_value());
    CHECK(!rational_from_string("1/0").has_value());
    CHECK(!rational_from_string("1.5").has_value());
    CHECK(!rational_from_string("x").has_value());
    for (const char* s : {"0", "-3", "5/7", "-12/5"})
        CHECK(to_string(rational_from_string(s).value()) == s);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(4, 4) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    // Pascal identity on a block
    for (long n = 1; n <= 12; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("half-integers") {
    CHECK(HalfInt::whole(3).doubled() == 6);
    CHECK(HalfInt::whole(3).is_integral());
    CHECK(HalfInt::whole(3).as_integer() == 3);
    CHECK(!HalfInt::from_doubled(3).is_integral());
    CHECK(to_string(HalfInt::from_doubled(3)) == "3/2");
    CHECK(to_string(HalfInt::from_doubled(-1)) == "-1/2");
    CHECK(to_string(HalfInt::whole(-4)) == "-4");
    CHECK(2_h + HalfInt::from_doubled(1) == HalfInt::from_doubled(5));
    CHECK(-HalfInt::from_doubled(3) == HalfInt::from_doubled(-3));
    CHECK(HalfInt::from_doubled(1) < 1_h);

    CHECK(halfint_from_string("5").value() == 5_h);
    CHECK(halfint_from_string("-5").value() == -(5_h));
    CHECK(halfint_from_string("7/2").value() == HalfInt::from_doubled(7));
    CHECK(halfint_from_string("-7/2").value() == HalfInt::from_doubled(-7));
    CHECK(!halfint_from_string("7/3").has_value());
    CHECK(!halfint_from_string("--2").has_value());
    CHECK(!halfint_from_string("").has_value());
    for (int d = -9; d <= 9; ++d)
        CHECK(halfint_from_string(to_string(HalfInt::from_doubled(d))).value() == HalfInt::from_doubled(d));
}

TEST_CASE("polynomial arithmetic") {
    PolyScalar a = poly_var("a"), b = poly_var("b");
    PolyScalar lhs = (a + make_rational(2) * b) * (a + PolyScalar(1));
    PolyScalar rhs = a * a + a + make_rational(2) * a * b + make_rational(2) * b;
    CHECK(lhs == rhs);
    CHECK(lhs.str() == "a^2 + 2*a*b + a + 2*b");

    PolyScalar sq = (a + b) * (a + b);
    CHECK(sq.str() == "a^2 + 2*a*b + b^2");
    CHECK(sq.degree() == 2);
    CHECK(sq.degree_in("a") == 2);
    CHECK(sq.degree_in("c") == 0);

    CHECK((lhs - lhs).is_zero());
    CHECK((lhs - lhs).str() == "0");
    CHECK((-sq + sq).is_zero());
    CHECK(PolyScalar(make_rational(-1, 2)).str() == "-1/2");
    CHECK((a * make_rational(0)).is_zero());
}

TEST_CASE("polynomial substitution") {
    PolyScalar a = poly_var("a"), b = poly_var("b");
    PolyScalar p = a * a + b;
    PolyScalar bound = p.substitute({{"a", PolyScalar(2)}});
    CHECK(bound == b + PolyScalar(4));
    CHECK_THROWS_AS(p.substitute({{"z", PolyScalar(1)}}), std::invalid_argument);
    CHECK(p.substitute_partial({{"z", PolyScalar(1)}}) == p);
    // simultaneous, not sequential: a->b, b->a swaps
    PolyScalar swapped = (a - b).substitute({{"a", b}, {"b", a}});
    CHECK(swapped == b - a);
    CHECK(p.substitute({{"a", PolyScalar(1)}, {"b", PolyScalar(make_rational(1, 2))}}).constant_value() ==
          make_rational(3, 2));
}

TEST_CASE("finite difference lowers degree") {
    PolyScalar j = poly_var("j");
    CHECK(finite_difference(j * j, "j", 2) == PolyScalar(2));
    CHECK(finite_difference(j * j, "j", 3).is_zero());
    CHECK(finite_difference(j, "j", 1) == PolyScalar(-1));
    CHECK(finite_difference(j * j * j * make_rational(5), "j", 3) == PolyScalar(-30));
    PolyScalar a = poly_var("a");
    CHECK(finite_difference(a * a, "j", 1).is_zero());
    CHECK(finite_difference(a * a + j, "j", 0) == a * a + j);

    // order-m difference of j^d vanishes iff m > d, and equals (-1)^d d! at m == d
    for (int d = 0; d <= 5; ++d) {
        PolyScalar p(1);
        for (int i = 0; i < d; ++i)
            p *= j;
        for (long m = 0; m <= 6; ++m) {
            PolyScalar fd = finite_difference(p, "j", m);
            if (m > d) {
                CHECK(fd.is_zero());
            } else {
                CHECK(!fd.is_zero());
                CHECK(fd.degree_in("j") == d - static_cast<int>(m));
            }
        }
        Rational lead = make_rational(d % 2 == 0 ? 1 : -1);
        for (int i = 2; i <= d; ++i)
            lead *= i;
        CHECK(finite_difference(p, "j", d) == PolyScalar(lead));
    }

    // multivariate: only the named variable is shifted
    PolyScalar b = poly_var("b");
    PolyScalar p = (a + j) * (b + j);
    CHECK(finite_difference(p, "j", 2) == PolyScalar(2));
    CHECK(finite_difference(p, "j", 3).is_zero());
    PolyScalar once = finite_difference(p, "j", 1);
    CHECK(once.degree_in("j") == 1);
    CHECK(once.degree_in("a") == 1);
}

TEST_CASE("monomial order is degree-major and deterministic") {
    PolyScalar a = poly_var("a"), b = poly_var("b");
    PolyScalar p = b + a * a * b + a + PolyScalar(3) + a * b;
    CHECK(p.str() == "a^2*b + a*b + a + b + 3");
}
