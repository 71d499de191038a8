#pragma once

#include "canonical24/rational.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace canonical24 {

/// Bidegree (a, b) on Q = P^1 x P^1: degree a in (u0:u1), degree b in (v0:v1).
/// Negative entries are allowed as divisor classes; they index the zero space.
struct BiDegree {
    int a = 0;
    int b = 0;

    bool has_sections() const { return a >= 0 && b >= 0; }
    friend constexpr BiDegree operator+(BiDegree x, BiDegree y) { return {x.a + y.a, x.b + y.b}; }
    friend constexpr BiDegree operator-(BiDegree x, BiDegree y) { return {x.a - y.a, x.b - y.b}; }
    friend constexpr BiDegree operator*(int k, BiDegree x) { return {k * x.a, k * x.b}; }
    friend constexpr auto operator<=>(const BiDegree&, const BiDegree&) = default;
};

inline constexpr BiDegree kCanonicalQ{-2, -2};
inline constexpr BiDegree kL1{3, 2};
inline constexpr BiDegree kL2{3, 2};
inline constexpr BiDegree kL3{2, 3};
inline constexpr BiDegree kN{4, 3};
inline constexpr BiDegree kD12{2, 3};
inline constexpr BiDegree kD3{4, 1};

/// dim V(a,b) = (a+1)(b+1), zero when either entry is negative.
std::size_t dim_v(BiDegree d);

/// Monomial exponents (i, j) = (u1-exponent, v1-exponent) of V(a,b) in graded-lex
/// order: ascending i + j, ties broken by descending i. Empty for negative bidegrees.
std::vector<std::pair<int, int>> monomial_basis(BiDegree d);

/// Position of (i, j) in monomial_basis(d).
std::size_t monomial_index(BiDegree d, int i, int j);

enum class Var { U0, U1, V0, V1 };

/// A point of Q with rational coordinates, normalized so that the last nonzero
/// coordinate of each factor equals 1.
struct QPoint {
    Rational u0, u1, v0, v1;

    static QPoint make(Rational u0, Rational u1, Rational v0, Rational v1);
    friend bool operator==(const QPoint&, const QPoint&) = default;
};

/// Bihomogeneous form on Q with exact rational coefficients. Entry (i, j) is the
/// coefficient of u0^(a-i) u1^i v0^(b-j) v1^j. A form of negative bidegree is the
/// zero element of the zero space and stores no coefficients.
class BiPoly {
public:
    BiPoly() : BiPoly(BiDegree{0, 0}) {}
    explicit BiPoly(BiDegree d);
    /// Takes an (a+1) x (b+1) table; throws DomainError on shape mismatch.
    BiPoly(BiDegree d, std::vector<std::vector<Rational>> rows);

    static BiPoly constant(const Rational& c);
    static BiPoly monomial(BiDegree d, int i, int j, const Rational& c = 1);
    static BiPoly u0() { return monomial({1, 0}, 0, 0); }
    static BiPoly u1() { return monomial({1, 0}, 1, 0); }
    static BiPoly v0() { return monomial({0, 1}, 0, 0); }
    static BiPoly v1() { return monomial({0, 1}, 0, 1); }

    BiDegree bidegree() const { return deg_; }
    bool empty_space() const { return !deg_.has_sections(); }
    bool is_zero() const;

    const Rational& coeff(int i, int j) const;
    Rational& coeff(int i, int j);

    /// Coefficients in monomial_basis order.
    std::vector<Rational> to_vector() const;
    static BiPoly from_vector(BiDegree d, const std::vector<Rational>& v);

    Rational eval(const QPoint& x) const;
    BiPoly partial(Var var) const;
    /// Exchanges the roles of the two P^1 factors.
    BiPoly transposed() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Rational& s);
    friend BiPoly operator+(BiPoly x, const BiPoly& y) { return x += y; }
    friend BiPoly operator-(BiPoly x, const BiPoly& y) { return x -= y; }
    friend BiPoly operator*(BiPoly x, const Rational& s) { return x *= s; }
    friend BiPoly operator*(const Rational& s, BiPoly x) { return x *= s; }
    friend BiPoly operator*(const BiPoly& x, const BiPoly& y);
    friend bool operator==(const BiPoly& x, const BiPoly& y);

    std::string str() const;

private:
    std::size_t at(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(deg_.b + 1) + static_cast<std::size_t>(j); }
    void require_same_bidegree(const BiPoly& o, const char* op) const;

    BiDegree deg_;
    std::vector<Rational> c_;
};

/// Integer coefficients drawn uniformly from [-bound, bound], row-major order.
BiPoly random_bipoly(BiDegree d, int bound, Rng& rng);

}  // namespace canonical24
