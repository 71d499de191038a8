#pragma once

// Exact detection of common zeros of bihomogeneous forms on P^1 x P^1.
//
// A common zero is first projected to v by resultants in u, then confirmed by a
// gcd in u computed over Q[t]/(g), where g collects the candidate v-coordinates.
// When a leading coefficient is a zero divisor mod g the modulus is split and
// both halves are followed, so every reported zero is genuine.

#include "canonical24/bipoly.hpp"
#include "canonical24/dense_poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace canonical24 {

/// Affine bivariate polynomial: coefficient k of s^k is a polynomial in t.
class Poly2 {
public:
    Poly2() = default;
    explicit Poly2(std::vector<DensePoly> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<DensePoly>& coeffs() const { return c_; }
    const DensePoly& lead() const { return c_.back(); }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_[0].is_constant()); }

    std::string str() const;

    friend Poly2 operator+(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const DensePoly& c, const Poly2& a);
    friend bool operator==(const Poly2&, const Poly2&) = default;

private:
    void trim();
    std::vector<DensePoly> c_;
};

/// Which coordinate is set to 1 in each factor.
struct AffineChart {
    bool u1_is_one = true;  // s = u0 when true, s = u1 otherwise
    bool v0_is_one = true;  // t = v1 when true, t = v0 otherwise
    std::string name() const;
};

Poly2 dehomogenize(const BiPoly& p, AffineChart chart);

/// gcd in Q[t][s] by primitive pseudo-remainder sequences; normalized so that the
/// result is primitive with a monic content factor.
Poly2 bivariate_gcd(const Poly2& a, const Poly2& b);

/// One branch of a gcd computed over Q[t]/(modulus).
struct ModBranch {
    DensePoly modulus;
    Poly2 gcd;  // monic in s over the branch, or zero
};

/// gcd of all polys over Q[t]/(g) for squarefree g, splitting g as needed.
std::vector<ModBranch> gcd_mod(const std::vector<Poly2>& polys, const DensePoly& g);

struct CommonZeroWitness {
    std::string kind;      // "point", "line" (a whole fiber) or "curve" (common factor)
    std::string location;  // chart or special point where it was found
    std::string t_factor;  // polynomial whose roots carry the v-coordinate(s)
    std::string s_factor;  // gcd in u over those roots
};

/// Exact: some common zero on Q of all given forms, or nullopt when there is none.
std::optional<CommonZeroWitness> find_common_zero(const std::vector<BiPoly>& forms);

/// Result of the mod-p exhaustive scan of the singular locus.
struct ModpScan {
    bool conclusive = true;  // false when a coefficient denominator vanishes mod p
    std::uint64_t prime = 0;
    int singular_fibers = 0;  // v in P^1(F_p) above which a singular point lies
};

/// Probabilistic validator: scans every v in P^1(F_p) for a common root in u of
/// the partial derivatives. Reduction mod p may create or destroy singularities.
ModpScan scan_singular_modp(const BiPoly& p, std::uint64_t prime = 10007);

}  // namespace canonical24
