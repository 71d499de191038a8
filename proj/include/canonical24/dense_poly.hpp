#pragma once

#include "canonical24/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace canonical24 {

/// Dense univariate polynomial over Q, coefficients in ascending order.
/// Always trimmed: no trailing zeros, the zero polynomial is empty.
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<Rational> coeffs);
    DensePoly(const Rational& c);  // NOLINT: constants convert implicitly

    static DensePoly monomial(int degree, const Rational& c = 1);
    static DensePoly x() { return monomial(1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    const Rational& lead() const;

    Rational eval(const Rational& x) const;
    DensePoly derivative() const;
    DensePoly monic() const;
    /// Divides out the rational content so that coefficients are coprime integers, lead > 0.
    DensePoly primitive() const;

    DensePoly operator-() const;
    DensePoly& operator+=(const DensePoly& o);
    DensePoly& operator-=(const DensePoly& o);
    DensePoly& operator*=(const Rational& s);

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator*(DensePoly a, const Rational& s) { return a *= s; }
    friend DensePoly operator*(const Rational& s, DensePoly a) { return a *= s; }
    friend bool operator==(const DensePoly&, const DensePoly&) = default;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; throws DomainError on division by zero.
std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b);
DensePoly operator%(const DensePoly& a, const DensePoly& b);
/// Exact quotient; throws InternalError when b does not divide a.
DensePoly exact_div(const DensePoly& a, const DensePoly& b);
/// Monic gcd; gcd(0, 0) = 0.
DensePoly gcd(const DensePoly& a, const DensePoly& b);
/// Inverse of a modulo m; the zero polynomial when a is not a unit mod m.
DensePoly inverse_mod(const DensePoly& a, const DensePoly& m);
/// f / gcd(f, f'), monic.
DensePoly squarefree_part(const DensePoly& f);

}  // namespace canonical24
