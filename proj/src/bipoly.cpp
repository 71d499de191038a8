#include "canonical24/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace canonical24 {

std::size_t dim_v(BiDegree d)
{
    if (!d.has_sections())
        return 0;
    return static_cast<std::size_t>(d.a + 1) * static_cast<std::size_t>(d.b + 1);
}

std::vector<std::pair<int, int>> monomial_basis(BiDegree d)
{
    std::vector<std::pair<int, int>> out;
    if (!d.has_sections())
        return out;
    out.reserve(dim_v(d));
    for (int total = 0; total <= d.a + d.b; ++total)
        for (int i = std::min(total, d.a); i >= 0 && total - i <= d.b; --i)
            out.emplace_back(i, total - i);
    return out;
}

std::size_t monomial_index(BiDegree d, int i, int j)
{
    // Count monomials of smaller total degree, then those with larger i at the same total.
    const int total = i + j;
    std::size_t idx = 0;
    for (int t = 0; t < total; ++t) {
        const int lo = std::max(0, t - d.b), hi = std::min(t, d.a);
        idx += static_cast<std::size_t>(hi - lo + 1);
    }
    idx += static_cast<std::size_t>(std::min(total, d.a) - i);
    return idx;
}

QPoint QPoint::make(Rational u0, Rational u1, Rational v0, Rational v1)
{
    auto norm = [](Rational& x0, Rational& x1) {
        if (x1 != 0) {
            x0 /= x1;
            x1 = 1;
        } else if (x0 != 0) {
            x0 = 1;
        } else {
            throw DomainError("QPoint: (0,0) is not a point of P^1");
        }
    };
    norm(u0, u1);
    norm(v0, v1);
    return {u0, u1, v0, v1};
}

BiPoly::BiPoly(BiDegree d) : deg_(d), c_(dim_v(d)) {}

BiPoly::BiPoly(BiDegree d, std::vector<std::vector<Rational>> rows) : BiPoly(d)
{
    if (!d.has_sections()) {
        if (!rows.empty())
            throw DomainError("BiPoly: coefficients given for a negative bidegree");
        return;
    }
    if (rows.size() != static_cast<std::size_t>(d.a + 1))
        throw DomainError("BiPoly: expected " + std::to_string(d.a + 1) + " coefficient rows");
    for (int i = 0; i <= d.a; ++i) {
        if (rows[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(d.b + 1))
            throw DomainError("BiPoly: row " + std::to_string(i) + " must have " + std::to_string(d.b + 1) + " entries");
        for (int j = 0; j <= d.b; ++j)
            c_[at(i, j)] = std::move(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
}

BiPoly BiPoly::constant(const Rational& c)
{
    BiPoly p(BiDegree{0, 0});
    p.c_[0] = c;
    return p;
}

BiPoly BiPoly::monomial(BiDegree d, int i, int j, const Rational& c)
{
    BiPoly p(d);
    p.coeff(i, j) = c;
    return p;
}

bool BiPoly::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

const Rational& BiPoly::coeff(int i, int j) const
{
    if (i < 0 || j < 0 || i > deg_.a || j > deg_.b)
        throw DomainError("BiPoly::coeff: index out of range");
    return c_[at(i, j)];
}

Rational& BiPoly::coeff(int i, int j)
{
    if (i < 0 || j < 0 || i > deg_.a || j > deg_.b)
        throw DomainError("BiPoly::coeff: index out of range");
    return c_[at(i, j)];
}

std::vector<Rational> BiPoly::to_vector() const
{
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (auto [i, j] : monomial_basis(deg_))
        v.push_back(c_[at(i, j)]);
    return v;
}

BiPoly BiPoly::from_vector(BiDegree d, const std::vector<Rational>& v)
{
    if (v.size() != dim_v(d))
        throw DomainError("BiPoly::from_vector: length does not match bidegree");
    BiPoly p(d);
    std::size_t k = 0;
    for (auto [i, j] : monomial_basis(d))
        p.c_[p.at(i, j)] = v[k++];
    return p;
}

Rational BiPoly::eval(const QPoint& x) const
{
    if (empty_space())
        return 0;
    std::vector<Rational> pu0(static_cast<std::size_t>(deg_.a) + 1, 1), pu1 = pu0;
    std::vector<Rational> pv0(static_cast<std::size_t>(deg_.b) + 1, 1), pv1 = pv0;
    for (std::size_t k = 1; k < pu0.size(); ++k) {
        pu0[k] = pu0[k - 1] * x.u0;
        pu1[k] = pu1[k - 1] * x.u1;
    }
    for (std::size_t k = 1; k < pv0.size(); ++k) {
        pv0[k] = pv0[k - 1] * x.v0;
        pv1[k] = pv1[k - 1] * x.v1;
    }
    Rational acc = 0;
    for (int i = 0; i <= deg_.a; ++i)
        for (int j = 0; j <= deg_.b; ++j) {
            const Rational& c = c_[at(i, j)];
            if (c != 0)
                acc += c * pu0[static_cast<std::size_t>(deg_.a - i)] * pu1[static_cast<std::size_t>(i)] *
                       pv0[static_cast<std::size_t>(deg_.b - j)] * pv1[static_cast<std::size_t>(j)];
        }
    return acc;
}

BiPoly BiPoly::partial(Var var) const
{
    const bool in_u = var == Var::U0 || var == Var::U1;
    BiDegree d = in_u ? BiDegree{deg_.a - 1, deg_.b} : BiDegree{deg_.a, deg_.b - 1};
    BiPoly r(d);
    if (r.empty_space())
        return r;
    for (int i = 0; i <= d.a; ++i)
        for (int j = 0; j <= d.b; ++j) {
            switch (var) {
            case Var::U0:  // u0^(a-i) comes from exponent a-i+1 in the source
                r.coeff(i, j) = c_[at(i, j)] * (deg_.a - i);
                break;
            case Var::U1:
                r.coeff(i, j) = c_[at(i + 1, j)] * (i + 1);
                break;
            case Var::V0:
                r.coeff(i, j) = c_[at(i, j)] * (deg_.b - j);
                break;
            case Var::V1:
                r.coeff(i, j) = c_[at(i, j + 1)] * (j + 1);
                break;
            }
        }
    return r;
}

BiPoly BiPoly::transposed() const
{
    BiPoly r(BiDegree{deg_.b, deg_.a});
    for (int i = 0; i <= deg_.a; ++i)
        for (int j = 0; j <= deg_.b; ++j)
            r.coeff(j, i) = c_[at(i, j)];
    return r;
}

void BiPoly::require_same_bidegree(const BiPoly& o, const char* op) const
{
    if (deg_ != o.deg_)
        throw DomainError(std::string("BiPoly ") + op + ": bidegree mismatch");
}

BiPoly BiPoly::operator-() const
{
    BiPoly r = *this;
    for (auto& q : r.c_)
        q = -q;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    require_same_bidegree(o, "+");
    for (std::size_t k = 0; k < c_.size(); ++k)
        c_[k] += o.c_[k];
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    require_same_bidegree(o, "-");
    for (std::size_t k = 0; k < c_.size(); ++k)
        c_[k] -= o.c_[k];
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s)
{
    for (auto& q : c_)
        q *= s;
    return *this;
}

BiPoly operator*(const BiPoly& x, const BiPoly& y)
{
    BiPoly r(x.deg_ + y.deg_);
    if (x.empty_space() || y.empty_space() || r.empty_space())
        return BiPoly(x.deg_ + y.deg_);
    for (int i = 0; i <= x.deg_.a; ++i)
        for (int j = 0; j <= x.deg_.b; ++j) {
            const Rational& c = x.c_[x.at(i, j)];
            if (c == 0)
                continue;
            for (int k = 0; k <= y.deg_.a; ++k)
                for (int l = 0; l <= y.deg_.b; ++l) {
                    const Rational& d = y.c_[y.at(k, l)];
                    if (d != 0)
                        r.c_[r.at(i + k, j + l)] += c * d;
                }
        }
    return r;
}

bool operator==(const BiPoly& x, const BiPoly& y)
{
    return x.deg_ == y.deg_ && x.c_ == y.c_;
}

std::string BiPoly::str() const
{
    std::ostringstream os;
    bool first = true;
    auto var = [&](const char* name, int e) {
        if (e == 0)
            return;
        os << "*" << name;
        if (e > 1)
            os << "^" << e;
    };
    for (int i = 0; i <= deg_.a; ++i)
        for (int j = 0; j <= deg_.b; ++j) {
            const Rational& c = c_[at(i, j)];
            if (c == 0)
                continue;
            if (!first)
                os << " + ";
            os << "(" << c.get_str() << ")";
            var("u0", deg_.a - i);
            var("u1", i);
            var("v0", deg_.b - j);
            var("v1", j);
            first = false;
        }
    return first ? "0" : os.str();
}

BiPoly random_bipoly(BiDegree d, int bound, Rng& rng)
{
    if (bound < 1)
        throw DomainError("random_bipoly: bound must be >= 1");
    BiPoly p(d);
    for (int i = 0; i <= d.a; ++i)
        for (int j = 0; j <= d.b; ++j)
            p.coeff(i, j) = static_cast<long>(uniform_int(rng, -bound, bound));
    return p;
}

}  // namespace canonical24
