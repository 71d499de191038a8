#include "fixtures.hpp"

namespace canonical24::fixtures {

namespace {

constexpr std::uint64_t kFixtureStream = 7;

BranchConfig base(std::uint64_t seed)
{
    BranchConfig c = draw_config(seed, 10, 0);
    Rng rng = derive_rng(seed, kFixtureStream);
    c.delta1 = random_bipoly(kD12, 10, rng);
    c.delta2 = random_bipoly(kD12, 10, rng);
    c.delta3 = random_bipoly(kD3, 10, rng);
    return c;
}

}  // namespace

BranchConfig planted_common_point(std::uint64_t seed, const Rational& s, const Rational& t)
{
    BranchConfig c = base(seed);
    const QPoint p = QPoint::make(s, 1, t, 1);
    // u1^a v1^b takes the value 1 at p.
    for (BiPoly* d : {&c.delta1, &c.delta2, &c.delta3}) {
        const BiDegree deg = d->bidegree();
        d->coeff(deg.a, deg.b) -= d->eval(p);
    }
    return c;
}

BranchConfig planted_equal_v(std::uint64_t seed, const Rational& s_a, const Rational& s_b, const Rational& t)
{
    if (s_a == s_b)
        throw DomainError("planted_equal_v: the two u-coordinates must differ");
    BranchConfig c = base(seed);
    const QPoint pa = QPoint::make(s_a, 1, t, 1);
    const QPoint pb = QPoint::make(s_b, 1, t, 1);
    // Adjust the coefficients of u1^2 v1^3 (value 1) and u0 u1 v1^3 (value s) so
    // that the form vanishes at both points.
    for (BiPoly* d : {&c.delta1, &c.delta2}) {
        const Rational ra = -d->eval(pa), rb = -d->eval(pb);
        const Rational c2 = (ra - rb) / (s_a - s_b);
        const Rational c1 = ra - c2 * s_a;
        d->coeff(2, 3) += c1;
        d->coeff(1, 3) += c2;
    }
    return c;
}

BranchConfig planted_d3_non_graph(std::uint64_t seed, const Rational& c_root)
{
    BranchConfig c = base(seed);
    Rng rng = derive_rng(seed, kFixtureStream, 1);
    const BiPoly rest = random_bipoly({3, 1}, 10, rng);
    c.delta3 = (BiPoly::u0() - c_root * BiPoly::u1()) * rest;
    return c;
}

BranchConfig certified(std::uint64_t seed)
{
    return sample_config(seed, 10, 100).config;
}

}  // namespace canonical24::fixtures
