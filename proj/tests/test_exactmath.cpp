#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <modforms/arith.hpp>
#include <modforms/errors.hpp>
#include <modforms/matrix.hpp>
#include <modforms/qexpansion.hpp>

#include <random>

using namespace modforms;

namespace {

QExpansion make(std::vector<long> v, std::optional<int> w = std::nullopt) {
    std::vector<Rational> c(v.size());
    for (size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
    return QExpansion(std::move(c), w);
}

QExpansion random_qexp(std::mt19937& rng, int prec) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rational> c(prec);
    for (auto& x : c) x = make_rational(num(rng), den(rng));
    return QExpansion(std::move(c));
}

// oracle: plain rational Gaussian elimination with pivoting and division,
// a different route than the Bareiss path under test
int rank_gauss_oracle(RatMatrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (m.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        const Rational inv = Rational(1) / m.at(rank, col);
        for (int j = 0; j < m.cols(); ++j) m.at(rank, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            const Rational f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("rational invariants: reduced, positive denominator, canonical zero") {
    Rational a(6, -4);
    a.canonicalize();
    CHECK(a == Rational(-3, 2));
    CHECK(a.get_den() == 2);
    Rational z(0, 7);
    z.canonicalize();
    CHECK(z.get_den() == 1);
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5"); // "/1" suppressed
    // arithmetic keeps results reduced
    const Rational sum = Rational(1, 6) + Rational(1, 3);
    CHECK(sum.get_den() == 2);
}

TEST_CASE("binomial edge cases") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(-1, 0) == 1); // bracket's n = 0 edge at weight 0
}

TEST_CASE("qexp_add: examples") {
    auto e4ish = make({1, 240}, 4);
    auto e6ish = make({1, -504}, 4); // same tag so the sum is allowed
    CHECK(qexp_add(e4ish, e6ish) == make({2, -264}));

    auto f = make({3, 1, 4}, 8);
    CHECK(qexp_add(f, QExpansion::zero(3)) == f);
    CHECK(qexp_add(f, f) == qexp_scale(Rational(2), f));
    CHECK(*qexp_add(f, f).weight() == 8);

    CHECK_THROWS_AS(qexp_add(make({1}, 4), make({1}, 6)), WeightMismatch);
}

TEST_CASE("qexp_mul: examples and truncation") {
    auto a = make({1, 1, 0});
    auto b = make({1, -1, 0});
    CHECK(qexp_mul(a, b) == make({1, 0, -1}));
    auto f = make({2, 3, 5, 7});
    CHECK(qexp_mul(f, QExpansion::one(4)) == f);
    // precision propagates as the minimum
    CHECK(qexp_mul(make({1, 2, 3, 4}), make({1, 1})).prec() == 2);
    // weights add
    CHECK(*qexp_mul(make({1}, 4), make({1}, 6)).weight() == 10);
}

TEST_CASE("qexp_mul is commutative, associative, distributive (randomized)") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_qexp(rng, 8), b = random_qexp(rng, 8), c = random_qexp(rng, 8);
        CHECK(qexp_mul(a, b) == qexp_mul(b, a));
        CHECK(qexp_mul(qexp_mul(a, b), c) == qexp_mul(a, qexp_mul(b, c)));
        CHECK(qexp_mul(a, qexp_add(b, c)) == qexp_add(qexp_mul(a, b), qexp_mul(a, c)));
    }
}

TEST_CASE("theta_derivative: m^order rule and q^1 fixed point") {
    auto f = make({0, 1, 4});
    CHECK(theta_derivative(f, 0) == f);
    CHECK(theta_derivative(f, 1) == make({0, 1, 8}));
    CHECK(theta_derivative(f, 3) == make({0, 1, 32}));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = random_qexp(rng, 6);
        for (unsigned a = 0; a < 4; ++a)
            CHECK(theta_derivative(g, a).coeff(1) == g.coeff(1));
    }
    // weight tag is cleared: a derivative is no longer modular
    CHECK(!theta_derivative(make({0, 1}, 12), 1).weight());
}

TEST_CASE("theta_derivative satisfies the Leibniz rule on products") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_qexp(rng, 9), g = random_qexp(rng, 9);
        auto lhs = theta_derivative(qexp_mul(f, g), 1);
        auto rhs = qexp_add(qexp_mul(theta_derivative(f, 1), g),
                            qexp_mul(f, theta_derivative(g, 1)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("bernoulli: frozen recurrence values and conventions") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(12) == Rational(-691, 2730)); // the 691 behind E12
    CHECK_THROWS_AS(bernoulli(3), OddIndex);
    CHECK_THROWS_AS(bernoulli(7), OddIndex);
}

TEST_CASE("bernoulli: nonzero with alternating sign at even indices") {
    int expected_sign = 1; // B_2 > 0
    for (int k = 2; k <= 60; k += 2) {
        const Rational b = bernoulli(k);
        CHECK(b != 0);
        CHECK((b > 0 ? 1 : -1) == expected_sign);
        expected_sign = -expected_sign;
    }
}

TEST_CASE("sigma: examples and divisor-enumeration oracle") {
    CHECK(sigma(3, 1) == 1);
    CHECK(sigma(3, 2) == 9);
    // sigma(11, 6) over divisors {1,2,3,6}
    Integer expect = pow(Integer(1), 11) + pow(Integer(2), 11) + pow(Integer(3), 11) +
                     pow(Integer(6), 11);
    CHECK(sigma(11, 6) == expect);
    for (long n = 1; n <= 60; ++n) {
        for (unsigned p : {0u, 1u, 3u, 5u}) {
            Integer direct(0);
            for (long d = 1; d <= n; ++d)
                if (n % d == 0) direct += pow(Integer(d), p);
            CHECK(sigma(p, n) == direct);
        }
    }
}

TEST_CASE("poly_charpoly: examples") {
    RatMatrix one(1, 1);
    one.at(0, 0) = Rational(-24);
    CHECK(poly_charpoly(one) == IntPolynomial({Integer(24), Integer(1)})); // x + 24

    CHECK(poly_charpoly(RatMatrix::identity(2)) ==
          IntPolynomial({Integer(1), Integer(-2), Integer(1)})); // (x-1)^2
}

TEST_CASE("poly_charpoly of a diagonal matrix is the product of (x - d_i)") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 6;
        RatMatrix m(n, n);
        IntPolynomial expect({Integer(1)});
        for (int i = 0; i < n; ++i) {
            const long di = d(rng);
            m.at(i, i) = Rational(di);
            expect = expect * IntPolynomial({Integer(-di), Integer(1)});
        }
        CHECK(poly_charpoly(m) == expect);
    }
}

TEST_CASE("poly_charpoly matches the symbolic 2x2 determinant") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<long> d(-30, 30);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix m(2, 2);
        long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        m.at(0, 0) = a; m.at(0, 1) = b; m.at(1, 0) = c; m.at(1, 1) = e;
        // det(xI - M) = x^2 - (a+e)x + (ae - bc)
        IntPolynomial expect({Integer(a) * e - Integer(b) * c, Integer(-(a + e)), Integer(1)});
        CHECK(poly_charpoly(m) == expect);
    }
}

TEST_CASE("poly_charpoly rejects fractional coefficients") {
    RatMatrix m(1, 1);
    m.at(0, 0) = Rational(1, 2);
    CHECK_THROWS_AS(poly_charpoly(m), NonIntegral);
}

TEST_CASE("rank_exact: trivial cases") {
    CHECK(rank_exact(RatMatrix(3, 4)) == 0);
    CHECK(rank_exact(RatMatrix::identity(5)) == 5);
    RatMatrix m(2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 2;
    m.at(1, 0) = 2; m.at(1, 1) = 4;
    CHECK(rank_exact(m) == 1);
    CHECK(rank_exact(RatMatrix(0, 0)) == 0);
}

TEST_CASE("rank_exact agrees with rational Gaussian elimination up to 8x8") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<int> size(1, 8);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = size(rng), c = size(rng);
        RatMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                m.at(i, j) = make_rational(num(rng), den(rng));
        // plant some dependent rows to exercise rank deficiency
        if (r >= 2 && trial % 3 == 0)
            for (int j = 0; j < c; ++j) m.at(r - 1, j) = Rational(2) * m.at(0, j);
        CHECK(rank_exact(m) == rank_gauss_oracle(m));
    }
}

TEST_CASE("IntPolynomial basics") {
    IntPolynomial f({Integer(-1), Integer(0), Integer(1)}); // x^2 - 1
    CHECK(f.degree() == 2);
    CHECK(f.str() == "x^2 - 1");
    CHECK((f * IntPolynomial({Integer(2)})).coeff(2) == 2);
    CHECK(derivative(f) == IntPolynomial({Integer(0), Integer(2)}));
    CHECK(evaluate(f, Integer(3)) == 8);
    IntPolynomial q;
    CHECK(try_exact_divide(f, IntPolynomial({Integer(-1), Integer(1)}), q));
    CHECK(q == IntPolynomial({Integer(1), Integer(1)}));
    CHECK(!try_exact_divide(f, IntPolynomial({Integer(5), Integer(1)}), q));
    CHECK(poly_gcd(f, derivative(f)).degree() == 0);
    IntPolynomial sq = f * f;
    const IntPolynomial g = poly_gcd(sq, derivative(sq));
    const bool matches = (g == f) || (g == Integer(-1) * f);
    CHECK(matches);
}
