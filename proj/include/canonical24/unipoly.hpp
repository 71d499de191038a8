#pragma once

#include "canonical24/dense_poly.hpp"
#include "canonical24/rational.hpp"

#include <string>
#include <vector>

namespace canonical24 {

/// Binary form of a declared degree d in (x0:x1): coefficient k multiplies
/// x0^(d-k) x1^k. Used both for forms in v (the usual case) and in u.
/// The declared degree is kept even when top coefficients vanish, so roots at
/// x0 = 0 are tracked projectively.
class UniPoly {
public:
    UniPoly() : UniPoly(0) {}
    explicit UniPoly(int degree);
    UniPoly(int degree, std::vector<Rational> coeffs);
    /// Homogenizes an affine polynomial in t = x1/x0 to the given degree.
    static UniPoly from_affine(const DensePoly& p, int degree);

    int degree() const { return degree_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
    bool is_zero() const;

    /// Dehomogenization at x0 = 1, a polynomial in t = x1/x0.
    DensePoly affine() const { return DensePoly(c_); }
    /// Multiplicity of the root (0:1), i.e. x0 = 0. Zero for the zero form.
    int infinity_multiplicity() const;

    Rational eval(const Rational& x0, const Rational& x1) const;

    friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator+(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator-(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator*(const Rational& s, const UniPoly& p);
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    std::string str(const char* x0 = "v0", const char* x1 = "v1") const;

private:
    int degree_;
    std::vector<Rational> c_;
};

/// Projective gcd: monic affine gcd times x0^e, where e is the smaller
/// multiplicity at x0 = 0. gcd(f, 0) is f normalized. Throws on two zeros.
UniPoly uni_gcd(const UniPoly& f, const UniPoly& g);

/// True iff f has deg(f) distinct projective roots. Throws on zero.
bool is_squarefree(const UniPoly& f);

/// Number of distinct projective roots of a nonzero form.
int distinct_root_count(const UniPoly& f);

}  // namespace canonical24
