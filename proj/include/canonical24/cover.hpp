#pragma once

// Floating-point model of the cover S -> Q: fibers, the canonical map to P^5
// and sampled checks of base-point freeness, local embedding and injectivity.

#include "canonical24/bipoly.hpp"
#include "canonical24/branch.hpp"

#include "json.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace canonical24 {

using Complex = std::complex<double>;

struct Tolerances {
    double fiber = 1e-10;    // |y_i^2 - delta_i| <= fiber (1 + |delta_i|)
    double zero = 1e-10;     // |delta_i| below this counts as vanishing
    double rank = 1e-6;      // second singular value relative to the first
    double sep = 1e-8;       // projective distance between distinct images
    double nonzero = 1e-8;   // max modulus of an image 6-tuple
    double fd_step = 1e-6;   // central difference step
};

/// Point of Q over C. Each factor is scaled so that its coordinate of largest
/// modulus equals 1; that coordinate also picks the affine chart.
struct BasePoint {
    Complex u0{1}, u1{0}, v0{1}, v1{0};

    static BasePoint make(Complex u0, Complex u1, Complex v0, Complex v1);
    static BasePoint from(const QPoint& q);
    bool u_chart_first() const { return u0 == Complex(1); }  // u = (1, s) when true
    bool v_chart_first() const { return v0 == Complex(1); }  // v = (1, t) when true
};

struct SurfacePoint {
    BasePoint base;
    std::array<Complex, 3> y{};
};

using P5Point = std::array<Complex, 6>;

/// Bihomogeneous form with complex coefficients; entry (i, j) as in BiPoly.
class NumBiPoly {
public:
    NumBiPoly() = default;
    explicit NumBiPoly(const BiPoly& p);

    BiDegree bidegree() const { return deg_; }
    Complex eval(Complex u0, Complex u1, Complex v0, Complex v1) const;
    Complex eval(const BasePoint& x) const { return eval(x.u0, x.u1, x.v0, x.v1); }
    /// Partial derivatives in the order u0, u1, v0, v1.
    std::array<Complex, 4> gradient(const BasePoint& x) const;
    /// Coefficients of the binary form in u obtained by fixing v (index = u1 exponent).
    std::vector<Complex> u_form(Complex v0, Complex v1) const;
    /// Sum of coefficient moduli.
    double norm1() const;

private:
    BiDegree deg_{0, 0};
    std::vector<std::vector<Complex>> c_;
};

/// Projective roots of a binary form c[0] x0^d + ... + c[d] x1^d, each scaled to
/// max-modulus 1; roots at x0 = 0 are included with multiplicity.
std::vector<std::array<Complex, 2>> binary_roots(const std::vector<Complex>& coeffs);

/// sqrt(sum |x_i y_j - x_j y_i|^2) / (|x| |y|): zero iff x and y are proportional.
double projective_distance(const P5Point& x, const P5Point& y);

class NumericCover {
public:
    explicit NumericCover(const BranchConfig& config, Tolerances tol = {});

    const Tolerances& tolerances() const { return tol_; }
    const BranchConfig& config() const { return config_; }
    const NumBiPoly& delta(int i) const { return delta_.at(static_cast<std::size_t>(i - 1)); }

    /// Sign classes of (y1, y2, y3) modulo the global sign: 4, 2 or 1 points.
    /// Throws DomainError when all three branch forms vanish at q.
    std::vector<SurfacePoint> fiber(const BasePoint& q) const;
    std::vector<SurfacePoint> fiber(const QPoint& q) const { return fiber(BasePoint::from(q)); }

    /// (y1 u0, y1 u1, y2 u0, y2 u1, y3 v0, y3 v1) in the point's chart, before scaling.
    P5Point raw_image(const SurfacePoint& s) const;
    /// raw_image divided by its coordinate of largest modulus. Throws when all vanish.
    P5Point canonical_image(const SurfacePoint& s) const;

    /// Points of D_h n D_k (h < k), refined by Newton's method and deduplicated.
    std::vector<BasePoint> intersection_points(int h, int k) const;

    /// Random points: generic, or on D_i (stratum "R1", "R2", "R3").
    BasePoint random_point(Rng& rng) const;
    BasePoint random_point_on(int i, Rng& rng) const;

    /// Whether D3 is the graph of a map from the u-line (gcd(alpha, beta) = 1).
    bool d3_is_graph() const { return d3_graph_; }

private:
    BranchConfig config_;
    Tolerances tol_;
    std::array<NumBiPoly, 3> delta_;
    bool d3_graph_ = true;
    NumBiPoly alpha_, beta_;  // delta3 = v0 alpha + v1 beta, as forms of bidegree (4,0)
};

/// Fixes the global sign: the first y of largest modulus gets nonnegative real part.
void normalize_sign(std::array<Complex, 3>& y);

struct ProbeOptions {
    std::size_t samples = 500;
    std::uint64_t seed = 0;
};

struct ProbeReport {
    std::string probe;
    std::size_t samples = 0;
    std::vector<nlohmann::ordered_json> failures;
    std::string min_key;
    double min_value = 0;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();

    bool pass() const { return failures.empty(); }
    nlohmann::ordered_json to_json() const;
};

/// Every image 6-tuple over the sampled strata has max modulus >= tol.nonzero.
ProbeReport basepoint_free_probe(const NumericCover& cover, const ProbeOptions& opt);

/// Second singular value of the Jacobian of the canonical map in stratum-adapted
/// local coordinates, relative to the first, is >= tol.rank for steps h and h/2.
ProbeReport jacobian_rank_probe(const NumericCover& cover, const ProbeOptions& opt);

/// Images of distinct points are at projective distance >= tol.sep. opt.samples
/// is the number of random pairs; fiber pairs and double-point pairs come on top.
ProbeReport injectivity_probe(const NumericCover& cover, const ProbeOptions& opt);

/// One Jacobian evaluation, exposed for tests: the singular value ratio at a
/// fiber point in the local coordinates of its stratum, or nullopt with a reason
/// when those coordinates degenerate.
struct JacobianSample {
    std::string stratum;
    std::optional<double> ratio;
    std::optional<double> ratio_half_step;
    std::string reason;
};
JacobianSample jacobian_at(const NumericCover& cover, const SurfacePoint& x, double step);

}  // namespace canonical24
