#include "doctest.h"

#include "canonical24/bipoly.hpp"

using namespace canonical24;

namespace {

Rational random_rational(Rng& rng)
{
    Rational q(uniform_int(rng, -9, 9), uniform_int(rng, 1, 7));
    q.canonicalize();
    return q;
}

BiDegree random_bidegree(Rng& rng)
{
    return {static_cast<int>(uniform_int(rng, 0, 4)), static_cast<int>(uniform_int(rng, 0, 4))};
}

QPoint random_point(Rng& rng)
{
    return QPoint::make(random_rational(rng), 1, random_rational(rng), 1);
}

// Raises to a small nonnegative power.
Rational power(const Rational& x, int e)
{
    Rational r = 1;
    for (int k = 0; k < e; ++k)
        r *= x;
    return r;
}

}  // namespace

TEST_CASE("dim_v")
{
    CHECK(dim_v({4, 3}) == 20);
    CHECK(dim_v({0, 0}) == 1);
    CHECK(dim_v(kCanonicalQ) == 0);
    CHECK(dim_v({-1, 5}) == 0);
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b)
            CHECK(monomial_basis({a, b}).size() == dim_v({a, b}));
}

TEST_CASE("monomial basis is graded-lex and indexable")
{
    const auto basis = monomial_basis({2, 1});
    REQUIRE(basis.size() == 6);
    CHECK(basis.front() == std::pair{0, 0});
    for (std::size_t k = 1; k < basis.size(); ++k) {
        const auto [i0, j0] = basis[k - 1];
        const auto [i1, j1] = basis[k];
        CHECK((i0 + j0 < i1 + j1 || (i0 + j0 == i1 + j1 && i0 > i1)));
    }
    for (std::size_t k = 0; k < basis.size(); ++k)
        CHECK(monomial_index({2, 1}, basis[k].first, basis[k].second) == k);
}

TEST_CASE("multiplication examples")
{
    const BiPoly p = BiPoly::u0() * BiPoly::v0();
    CHECK(p.bidegree() == BiDegree{1, 1});
    CHECK(p == BiPoly::monomial({1, 1}, 0, 0));

    const BiPoly q = BiPoly::u0() + BiPoly::u1();
    CHECK((q * BiPoly(BiDegree{2, 3})).is_zero());
    CHECK((q * BiPoly(BiDegree{2, 3})).bidegree() == BiDegree{3, 3});

    const BiPoly diff = (BiPoly::u0() + BiPoly::u1()) * (BiPoly::u0() - BiPoly::u1());
    CHECK(diff == BiPoly::monomial({2, 0}, 0, 0) - BiPoly::monomial({2, 0}, 2, 0));
}

TEST_CASE("evaluation examples")
{
    const BiPoly u0v1 = BiPoly::u0() * BiPoly::v1();
    CHECK(u0v1.eval(QPoint::make(1, 1, 0, 1)) == 1);
    CHECK(BiPoly(BiDegree{3, 2}).eval(QPoint::make(5, 1, 1, 0)) == 0);
    const BiPoly big = BiPoly::monomial({2, 3}, 0, 0);
    CHECK(big.eval(QPoint::make(2, 1, 3, 1)) == 108);
}

TEST_CASE("QPoint normalization")
{
    const QPoint p = QPoint::make(4, 2, 6, 0);
    CHECK(p.u0 == 2);
    CHECK(p.u1 == 1);
    CHECK(p.v0 == 1);
    CHECK(p.v1 == 0);
    CHECK_THROWS_AS(QPoint::make(0, 0, 1, 1), DomainError);
}

TEST_CASE("partial derivative examples")
{
    const BiPoly p = BiPoly::monomial({2, 1}, 0, 1);  // u0^2 v1
    CHECK(p.partial(Var::U0) == BiPoly::monomial({1, 1}, 0, 1, 2));
    CHECK(p.partial(Var::V0).is_zero());
    CHECK(p.partial(Var::V0).bidegree() == BiDegree{2, 0});

    const BiPoly e = BiPoly::monomial({2, 1}, 1, 0);  // u0 u1 v0
    const BiPoly euler = BiPoly::u0() * e.partial(Var::U0) + BiPoly::u1() * e.partial(Var::U1);
    CHECK(euler == 2 * e);
}

TEST_CASE("random_bipoly contract")
{
    Rng a = derive_rng(42, 1), b = derive_rng(42, 1);
    const BiPoly p = random_bipoly({2, 3}, 10, a);
    CHECK(p == random_bipoly({2, 3}, 10, b));
    CHECK(p.bidegree() == BiDegree{2, 3});
    CHECK(p.to_vector().size() == 12);

    Rng c = derive_rng(7, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const BiPoly r = random_bipoly({4, 1}, 1, c);
        for (const auto& x : r.to_vector()) {
            CHECK(x.get_den() == 1);
            CHECK(abs(x) <= 1);
        }
    }
}

TEST_CASE("ring axioms on random samples")
{
    Rng rng = derive_rng(2024, 11);
    for (int trial = 0; trial < 40; ++trial) {
        const BiPoly p = random_bipoly(random_bidegree(rng), 5, rng);
        const BiPoly q = random_bipoly(random_bidegree(rng), 5, rng);
        const BiPoly r = random_bipoly(random_bidegree(rng), 5, rng);
        const BiPoly q2 = random_bipoly(q.bidegree(), 5, rng);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + q2) == p * q + p * q2);
        CHECK((p * q).bidegree() == p.bidegree() + q.bidegree());

        // Products evaluate to products of values.
        const QPoint x = random_point(rng);
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
    }
}

TEST_CASE("bihomogeneity")
{
    Rng rng = derive_rng(99, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const BiDegree d = random_bidegree(rng);
        const BiPoly p = random_bipoly(d, 9, rng);
        Rational lambda = 0;
        while (lambda == 0)
            lambda = random_rational(rng);
        const Rational s = random_rational(rng), t = random_rational(rng);
        // eval normalizes its argument, so compare raw coordinate sums by hand.
        auto raw = [&](const Rational& u0, const Rational& u1, const Rational& v0, const Rational& v1) {
            Rational sum = 0;
            for (int i = 0; i <= d.a; ++i)
                for (int j = 0; j <= d.b; ++j)
                    sum += p.coeff(i, j) * power(u0, d.a - i) * power(u1, i) * power(v0, d.b - j) * power(v1, j);
            return sum;
        };
        CHECK(raw(lambda * s, lambda, t, 1) == power(lambda, d.a) * raw(s, 1, t, 1));
        CHECK(raw(s, 1, lambda * t, lambda) == power(lambda, d.b) * raw(s, 1, t, 1));
        CHECK(raw(s, 1, t, 1) == p.eval(QPoint::make(s, 1, t, 1)));
    }
}

TEST_CASE("Euler identities")
{
    Rng rng = derive_rng(5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        const BiDegree d = random_bidegree(rng);
        const BiPoly p = random_bipoly(d, 9, rng);
        const BiPoly eu = BiPoly::u0() * p.partial(Var::U0) + BiPoly::u1() * p.partial(Var::U1);
        const BiPoly ev = BiPoly::v0() * p.partial(Var::V0) + BiPoly::v1() * p.partial(Var::V1);
        if (d.a > 0)
            CHECK(eu == d.a * p);
        if (d.b > 0)
            CHECK(ev == d.b * p);
    }
}

TEST_CASE("vector round trip and transpose")
{
    Rng rng = derive_rng(8, 8);
    const BiPoly p = random_bipoly({2, 3}, 10, rng);
    CHECK(BiPoly::from_vector(p.bidegree(), p.to_vector()) == p);
    CHECK(p.transposed().bidegree() == BiDegree{3, 2});
    CHECK(p.transposed().transposed() == p);
    CHECK(p.transposed().coeff(2, 1) == p.coeff(1, 2));
}

TEST_CASE("shape and bidegree errors")
{
    CHECK_THROWS_AS(BiPoly({1, 1}, {{1, 2}}), DomainError);
    CHECK_THROWS_AS(BiPoly::u0() + BiPoly::v0(), DomainError);
    const BiPoly neg(BiDegree{-2, -2});
    CHECK(neg.is_zero());
    CHECK(neg.empty_space());
}
