#pragma once

#include "canonical24/bipoly.hpp"
#include "canonical24/dense_poly.hpp"
#include "canonical24/unipoly.hpp"

#include <vector>

namespace canonical24 {

/// u0^2 A(v) + u0 u1 B(v) + u1^2 C(v), with A, B, C of one common v-degree.
struct QuadraticInU {
    UniPoly A, B, C;
};

/// Splits a form of u-degree 2 into its three coefficient rows. Throws unless a = 2.
QuadraticInU decompose_quadratic(const BiPoly& p);
BiPoly recompose(const QuadraticInU& q);

/// Resultant in u of two binary quadratics with coefficients in any commutative
/// ring R, written out as (A1 C2 - A2 C1)^2 + (B2 C1 - C2 B1)(A1 B2 - A2 B1).
template <class R>
R quadratic_resultant(const R& a1, const R& b1, const R& c1, const R& a2, const R& b2, const R& c2)
{
    const R ac = a1 * c2 - a2 * c1;
    return ac * ac + (b2 * c1 - c2 * b1) * (a1 * b2 - a2 * b1);
}

/// The degree-4d form obtained by substituting the coefficient forms into the
/// resultant of two binary quadratics. Throws on mismatched v-degrees.
UniPoly closed_form_delta(const QuadraticInU& q1, const QuadraticInU& q2);

/// Determinant by fraction-free (Bareiss) elimination over Q[t].
DensePoly bareiss_determinant(std::vector<std::vector<DensePoly>> m);

/// Sylvester resultant of two binary forms whose coefficients (index k multiplies
/// x0^(deg-k) x1^k) are polynomials in an outside variable. Degree-0 forms are
/// allowed: Res(c, g) = c^deg(g); two constants give 1.
DensePoly sylvester_resultant(const std::vector<DensePoly>& f, const std::vector<DensePoly>& g);

/// Res_u(p, q) as a form in v of degree a_p b_q + a_q b_p.
/// Throws DomainError when either input has u-degree 0.
UniPoly sylvester_resultant_u(const BiPoly& p, const BiPoly& q);

/// Res_v(p, q) as a form in u of degree b_p a_q + b_q a_p.
UniPoly sylvester_resultant_v(const BiPoly& p, const BiPoly& q);

/// The u-coefficients of p (index = u1 exponent), each dehomogenized in v at v0 = 1.
std::vector<DensePoly> u_coefficients(const BiPoly& p);

}  // namespace canonical24
