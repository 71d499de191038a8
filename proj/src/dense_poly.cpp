#include "canonical24/dense_poly.hpp"

#include <sstream>

namespace canonical24 {

DensePoly::DensePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

DensePoly::DensePoly(const Rational& c)
{
    if (c != 0)
        c_.push_back(c);
}

DensePoly DensePoly::monomial(int degree, const Rational& c)
{
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return DensePoly(std::move(v));
}

void DensePoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational DensePoly::coeff(int k) const
{
    if (k < 0 || k > degree())
        return 0;
    return c_[static_cast<std::size_t>(k)];
}

const Rational& DensePoly::lead() const
{
    if (c_.empty())
        throw DomainError("lead of zero polynomial");
    return c_.back();
}

Rational DensePoly::eval(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

DensePoly DensePoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = c_[k] * static_cast<long>(k);
    return DensePoly(std::move(d));
}

DensePoly DensePoly::monic() const
{
    if (c_.empty())
        return {};
    DensePoly r = *this;
    const Rational inv = 1 / lead();
    r *= inv;
    return r;
}

DensePoly DensePoly::primitive() const
{
    if (c_.empty())
        return {};
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& q : c_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (lead() < 0)
        scale = -scale;
    return *this * scale;
}

DensePoly DensePoly::operator-() const
{
    DensePoly r = *this;
    for (auto& q : r.c_)
        q = -q;
    return r;
}

DensePoly& DensePoly::operator+=(const DensePoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    trim();
    return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] -= o.c_[k];
    trim();
    return *this;
}

DensePoly& DensePoly::operator*=(const Rational& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& q : c_)
        q *= s;
    return *this;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return DensePoly(std::move(r));
}

std::string DensePoly::str(const std::string& var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& q = c_[static_cast<std::size_t>(k)];
        if (q == 0)
            continue;
        if (!first)
            os << (q > 0 ? " + " : " - ");
        else if (q < 0)
            os << "-";
        const Rational aq = abs(q);
        if (k == 0 || aq != 1) {
            os << aq.get_str();
            if (k > 0)
                os << "*";
        }
        if (k > 0) {
            os << var;
            if (k > 1)
                os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree())
        return {DensePoly{}, a};
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    const Rational inv_lead = 1 / b.lead();
    for (int k = a.degree(); k >= db; --k) {
        const Rational q = rem[static_cast<std::size_t>(k)] * inv_lead;
        quot[static_cast<std::size_t>(k - db)] = q;
        if (q == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {DensePoly(std::move(quot)), DensePoly(std::move(rem))};
}

DensePoly operator%(const DensePoly& a, const DensePoly& b)
{
    return divmod(a, b).second;
}

DensePoly exact_div(const DensePoly& a, const DensePoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw InternalError("exact_div: nonzero remainder");
    return q;
}

DensePoly gcd(const DensePoly& a, const DensePoly& b)
{
    DensePoly x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        DensePoly r = (x % y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

DensePoly inverse_mod(const DensePoly& a, const DensePoly& m)
{
    // Extended Euclid tracking only the cofactor of a.
    DensePoly r0 = m, r1 = a % m;
    DensePoly s0, s1 = Rational(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        DensePoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0)
        return {};
    return (s0 * (1 / r0.lead())) % m;
}

DensePoly squarefree_part(const DensePoly& f)
{
    if (f.degree() <= 0)
        return f.monic();
    return exact_div(f, gcd(f, f.derivative())).monic();
}

}  // namespace canonical24
