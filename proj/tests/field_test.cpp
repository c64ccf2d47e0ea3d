#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fps/error.hpp"
#include "fps/field.hpp"

#include "testutil.hpp"

#include <complex>
#include <numeric>

using namespace fps;
using fps::test::Rng;

namespace {

std::vector<Integer> ipoly(std::initializer_list<long> cs) {
    std::vector<Integer> p;
    for (long c : cs) p.emplace_back(c);
    return p;
}

int totient(int n) {
    int t = 0;
    for (int i = 1; i <= n; ++i)
        if (std::gcd(i, n) == 1) ++t;
    return t;
}

// Product of Phi_d over all divisors d of n, as integer polynomial.
std::vector<Integer> divisor_product(int n) {
    std::vector<Integer> acc{1};
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const std::vector<Integer> phi = cyclotomic_polynomial(d);
        std::vector<Integer> next(acc.size() + phi.size() - 1);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += acc[i] * phi[j];
        acc = std::move(next);
    }
    return acc;
}

} // namespace

TEST_CASE("cyclotomic polynomial base cases") {
    CHECK(cyclotomic_polynomial(1) == ipoly({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == ipoly({1, 1}));
    CHECK(cyclotomic_polynomial(4) == ipoly({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == ipoly({1, -1, 1}));
    CHECK_THROWS_AS(cyclotomic_polynomial(0), domain_error);
}

TEST_CASE("zeta_6 satisfies Phi_6 numerically") {
    const std::vector<Integer> phi = cyclotomic_polynomial(6);
    const std::complex<double> z = std::polar(1.0, 2.0 * 3.14159265358979323846 / 6.0);
    std::complex<double> value{0.0, 0.0};
    std::complex<double> zp{1.0, 0.0};
    for (const Integer& c : phi) {
        value += c.get_d() * zp;
        zp *= z;
    }
    CHECK(std::abs(value) < 1e-12);
}

TEST_CASE("product of Phi_d over divisors is x^n - 1, degree is phi(n)") {
    for (int n = 1; n <= 105; ++n) {
        std::vector<Integer> expected(n + 1);
        expected[0] = -1;
        expected[n] = 1;
        CHECK(divisor_product(n) == expected);
        CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) - 1 == totient(n));
    }
}

TEST_CASE("first coefficient outside {-1,0,1} appears at n = 105") {
    for (int n = 1; n < 105; ++n)
        for (const Integer& c : cyclotomic_polynomial(n)) CHECK(abs(c) <= 1);
    Integer biggest = 0;
    for (const Integer& c : cyclotomic_polynomial(105)) {
        const Integer a = abs(c);
        if (a > biggest) biggest = a;
    }
    CHECK(biggest == 2);
}

TEST_CASE("make_field") {
    CHECK(make_field(FieldKind::rational)->degree() == 1);
    const FieldContextPtr q2 = make_field(FieldKind::cyclotomic, 2);
    CHECK(q2->degree() == 1);
    CHECK(q2->zeta() == q2->from_integer(-1));

    const FieldContextPtr q12 = make_field(FieldKind::cyclotomic, 12);
    CHECK(q12->degree() == 4);
    CHECK(pow(q12->zeta(), 12).is_one());
    for (int k = 1; k < 12; ++k) CHECK_FALSE(pow(q12->zeta(), k).is_one());

    CHECK_THROWS_AS(make_field(FieldKind::rational, 5), domain_error);
    CHECK_THROWS_AS(make_field(FieldKind::cyclotomic, 0), domain_error);
}

TEST_CASE("zeta has multiplicative order exactly n for n = 1..16") {
    for (int n = 1; n <= 16; ++n) {
        const FieldContextPtr ctx = make_field(FieldKind::cyclotomic, n);
        CHECK(multiplicative_order(ctx->zeta()) == n);
        CHECK(is_primitive_root(ctx->zeta(), n));
    }
}

TEST_CASE("arithmetic examples") {
    const FieldContextPtr q = make_field(FieldKind::rational);
    Rng rng(7001);
    const FieldElement a = test::random_element(q, rng);
    CHECK(a + q->zero() == a);

    const FieldContextPtr q4 = make_field(FieldKind::cyclotomic, 4);
    CHECK(q4->zeta() * q4->zeta() == q4->from_integer(-1));

    const FieldContextPtr q6 = make_field(FieldKind::cyclotomic, 6);
    CHECK(q6->zeta() * q6->zeta() == q6->zeta() - q6->one());

    CHECK_THROWS_AS(q4->zeta() + q6->zeta(), domain_error);
    CHECK_THROWS_AS(q->one() + q4->one(), domain_error);
}

TEST_CASE("inverses") {
    const FieldContextPtr q = make_field(FieldKind::rational);
    CHECK(inv(q->one()) == q->one());
    CHECK(inv(q->from_rational(Rational(2, 3))) == q->from_rational(Rational(3, 2)));

    const FieldContextPtr q4 = make_field(FieldKind::cyclotomic, 4);
    CHECK(inv(q4->zeta()) == -q4->zeta());

    CHECK_THROWS_AS(inv(q->zero()), domain_error);
    CHECK_THROWS_AS(inv(q4->zero()), domain_error);

    Rng rng(7002);
    for (const FieldContextPtr& ctx :
         {q, q4, make_field(FieldKind::cyclotomic, 7), make_field(FieldKind::cyclotomic, 12)}) {
        for (int i = 0; i < 25; ++i) {
            const FieldElement a = test::random_nonzero_element(ctx, rng);
            CHECK(a * inv(a) == ctx->one());
        }
    }
}

TEST_CASE("multiplicative order") {
    const FieldContextPtr q = make_field(FieldKind::rational);
    CHECK(multiplicative_order(q->one()) == 1);
    CHECK(multiplicative_order(q->from_integer(-1)) == 2);
    CHECK(multiplicative_order(q->from_integer(2)) == std::nullopt);
    CHECK(multiplicative_order(q->from_rational(Rational(1, 2))) == std::nullopt);
    CHECK_THROWS_AS(multiplicative_order(q->zero()), domain_error);

    const FieldContextPtr q6 = make_field(FieldKind::cyclotomic, 6);
    CHECK(multiplicative_order(q6->zeta() * q6->zeta()) == 3);
    CHECK(multiplicative_order(-q6->zeta()) == 3); // -zeta_6 = zeta_6^4

    // order of zeta_n^k is n / gcd(n, k)
    for (int n : {5, 8, 12}) {
        const FieldContextPtr ctx = make_field(FieldKind::cyclotomic, n);
        for (int k = 1; k < n; ++k)
            CHECK(multiplicative_order(pow(ctx->zeta(), k)) == n / std::gcd(n, k));
    }
}

TEST_CASE("is_primitive_root") {
    const FieldContextPtr q = make_field(FieldKind::rational);
    CHECK(is_primitive_root(q->one(), 1));
    CHECK(is_primitive_root(q->from_integer(-1), 2));
    CHECK_FALSE(is_primitive_root(q->zero(), 2));

    const FieldContextPtr q6 = make_field(FieldKind::cyclotomic, 6);
    CHECK_FALSE(is_primitive_root(q6->zeta() * q6->zeta(), 6));
    CHECK(is_primitive_root(q6->zeta() * q6->zeta(), 3));
}

TEST_CASE("field axioms on random samples") {
    Rng rng(7003);
    for (const FieldContextPtr& ctx :
         {make_field(FieldKind::rational), make_field(FieldKind::cyclotomic, 12)}) {
        for (int i = 0; i < 50; ++i) {
            const FieldElement a = test::random_element(ctx, rng);
            const FieldElement b = test::random_element(ctx, rng);
            const FieldElement c = test::random_element(ctx, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * ctx->one() == a);
            CHECK(a + (-a) == ctx->zero());
        }
    }
}

TEST_CASE("pow") {
    const FieldContextPtr q4 = make_field(FieldKind::cyclotomic, 4);
    CHECK(pow(q4->zeta(), 0).is_one());
    CHECK(pow(q4->zeta(), 2) == q4->from_integer(-1));
    CHECK(pow(q4->zeta(), -1) == inv(q4->zeta()));
    const FieldContextPtr q = make_field(FieldKind::rational);
    CHECK(pow(q->from_integer(3), -2) == q->from_rational(Rational(1, 9)));
}

TEST_CASE("rational canonicalization and text form") {
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(parse_rational("2/4").get_num() == 1);
    CHECK(parse_rational("2/4").get_den() == 2);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("-6/4").get_den() == 2);
    CHECK(parse_rational("0/7").get_den() == 1);
    CHECK(to_string(parse_rational("5/1")) == "5");
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(is_integer(parse_rational("8/2")));

    CHECK_THROWS_AS(parse_rational(""), parse_error);
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("x"), parse_error);
    CHECK_THROWS_AS(parse_rational("1/-2"), parse_error);
    CHECK_THROWS_AS(parse_rational("+1"), parse_error);
    CHECK_THROWS_AS(parse_rational("1.5"), parse_error);
}

TEST_CASE("root magnitude") {
    CHECK(root_magnitude(Rational(0), 3) == 0.0);
    CHECK(root_magnitude(Rational(-8), 3) == doctest::Approx(2.0));
    CHECK(root_magnitude(Rational(1, 1024), 10) == doctest::Approx(0.5));
    // far beyond double range: (2^2000)^(1/100) = 2^20
    Integer big = 1;
    big <<= 2000;
    CHECK(root_magnitude(Rational(big), 100) == doctest::Approx(1048576.0));
}
