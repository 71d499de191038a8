#include "canonical24/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace canonical24 {

UniPoly::UniPoly(int degree) : degree_(degree)
{
    if (degree < 0)
        throw DomainError("UniPoly: negative degree");
    c_.resize(static_cast<std::size_t>(degree) + 1);
}

UniPoly::UniPoly(int degree, std::vector<Rational> coeffs) : degree_(degree), c_(std::move(coeffs))
{
    if (degree < 0)
        throw DomainError("UniPoly: negative degree");
    if (c_.size() != static_cast<std::size_t>(degree) + 1)
        throw DomainError("UniPoly: coefficient count must be degree + 1");
}

UniPoly UniPoly::from_affine(const DensePoly& p, int degree)
{
    if (p.degree() > degree)
        throw DomainError("UniPoly::from_affine: polynomial exceeds declared degree");
    UniPoly r(degree);
    for (int k = 0; k <= p.degree(); ++k)
        r.c_[static_cast<std::size_t>(k)] = p.coeffs()[static_cast<std::size_t>(k)];
    return r;
}

bool UniPoly::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

int UniPoly::infinity_multiplicity() const
{
    const int affine_degree = affine().degree();
    return affine_degree < 0 ? 0 : degree_ - affine_degree;
}

Rational UniPoly::eval(const Rational& x0, const Rational& x1) const
{
    Rational acc = 0;
    for (int k = 0; k <= degree_; ++k) {
        Rational term = c_[static_cast<std::size_t>(k)];
        if (term == 0)
            continue;
        for (int e = 0; e < degree_ - k; ++e)
            term *= x0;
        for (int e = 0; e < k; ++e)
            term *= x1;
        acc += term;
    }
    return acc;
}

UniPoly operator*(const UniPoly& p, const UniPoly& q)
{
    return UniPoly::from_affine(p.affine() * q.affine(), p.degree_ + q.degree_);
}

UniPoly operator+(const UniPoly& p, const UniPoly& q)
{
    if (p.degree_ != q.degree_)
        throw DomainError("UniPoly +: degree mismatch");
    UniPoly r = p;
    for (std::size_t k = 0; k < r.c_.size(); ++k)
        r.c_[k] += q.c_[k];
    return r;
}

UniPoly operator-(const UniPoly& p, const UniPoly& q)
{
    if (p.degree_ != q.degree_)
        throw DomainError("UniPoly -: degree mismatch");
    UniPoly r = p;
    for (std::size_t k = 0; k < r.c_.size(); ++k)
        r.c_[k] -= q.c_[k];
    return r;
}

UniPoly operator*(const Rational& s, const UniPoly& p)
{
    UniPoly r = p;
    for (auto& c : r.c_)
        c *= s;
    return r;
}

std::string UniPoly::str(const char* x0, const char* x1) const
{
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree_; ++k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        if (!first)
            os << " + ";
        os << "(" << c.get_str() << ")";
        if (degree_ - k > 0)
            os << "*" << x0 << (degree_ - k > 1 ? "^" + std::to_string(degree_ - k) : "");
        if (k > 0)
            os << "*" << x1 << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    return first ? "0" : os.str();
}

UniPoly uni_gcd(const UniPoly& f, const UniPoly& g)
{
    const bool fz = f.is_zero(), gz = g.is_zero();
    if (fz && gz)
        throw DomainError("uni_gcd: both inputs are zero");
    if (gz || fz) {
        const UniPoly& h = fz ? g : f;
        DensePoly a = h.affine().monic();
        return UniPoly::from_affine(a, a.degree() + h.infinity_multiplicity());
    }
    const DensePoly a = gcd(f.affine(), g.affine());
    const int e = std::min(f.infinity_multiplicity(), g.infinity_multiplicity());
    return UniPoly::from_affine(a, a.degree() + e);
}

bool is_squarefree(const UniPoly& f)
{
    if (f.is_zero())
        throw DomainError("is_squarefree: zero polynomial");
    return distinct_root_count(f) == f.degree();
}

int distinct_root_count(const UniPoly& f)
{
    if (f.is_zero())
        throw DomainError("distinct_root_count: zero polynomial");
    const DensePoly a = f.affine();
    const int finite = squarefree_part(a).degree();
    return finite + (f.infinity_multiplicity() > 0 ? 1 : 0);
}

}  // namespace canonical24
