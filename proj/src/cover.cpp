#include "canonical24/cover.hpp"

#include "canonical24/elim.hpp"
#include "canonical24/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

namespace canonical24 {

namespace {

Complex to_complex(const Rational& q)
{
    return Complex(q.get_d(), 0.0);
}

Complex gaussian(Rng& rng)
{
    // Box-Muller on two uniforms in (0, 1].
    const double r = std::sqrt(-2.0 * std::log(1.0 - uniform_unit(rng)));
    const double theta = 2.0 * std::numbers::pi * uniform_unit(rng);
    return {r * std::cos(theta), r * std::sin(theta)};
}

std::pair<Complex, Complex> scale_pair(Complex a, Complex b)
{
    if (a == Complex(0) && b == Complex(0))
        throw DomainError("BasePoint: zero coordinate pair");
    if (std::abs(a) >= std::abs(b))
        return {Complex(1), b / a};
    return {a / b, Complex(1)};
}

std::string fmt(Complex z)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
    return buf;
}

std::string describe(const BasePoint& p)
{
    return "u=(" + fmt(p.u0) + ":" + fmt(p.u1) + ") v=(" + fmt(p.v0) + ":" + fmt(p.v1) + ")";
}

/// Affine chart around a base point: u = (1, s) or (s, 1), v = (1, t) or (t, 1).
struct Chart {
    bool u_first = true;
    bool v_first = true;

    static Chart of(const BasePoint& p) { return {p.u_chart_first(), p.v_chart_first()}; }
    std::pair<Complex, Complex> coords(const BasePoint& p) const
    {
        return {u_first ? p.u1 : p.u0, v_first ? p.v1 : p.v0};
    }
    BasePoint point(Complex s, Complex t) const
    {
        BasePoint p;
        p.u0 = u_first ? Complex(1) : s;
        p.u1 = u_first ? s : Complex(1);
        p.v0 = v_first ? Complex(1) : t;
        p.v1 = v_first ? t : Complex(1);
        return p;
    }
    /// d/ds and d/dt of f at p, from the homogeneous gradient.
    std::pair<Complex, Complex> derivatives(const NumBiPoly& f, const BasePoint& p) const
    {
        const auto g = f.gradient(p);
        return {u_first ? g[1] : g[0], v_first ? g[3] : g[2]};
    }
};

Complex closest_root(Complex square, Complex reference)
{
    const Complex r = std::sqrt(square);
    return std::abs(r - reference) <= std::abs(r + reference) ? r : -r;
}

}  // namespace

// ---------------------------------------------------------------------------

BasePoint BasePoint::make(Complex u0, Complex u1, Complex v0, Complex v1)
{
    BasePoint p;
    std::tie(p.u0, p.u1) = scale_pair(u0, u1);
    std::tie(p.v0, p.v1) = scale_pair(v0, v1);
    return p;
}

BasePoint BasePoint::from(const QPoint& q)
{
    return make(to_complex(q.u0), to_complex(q.u1), to_complex(q.v0), to_complex(q.v1));
}

NumBiPoly::NumBiPoly(const BiPoly& p) : deg_(p.bidegree())
{
    if (!deg_.has_sections())
        throw DomainError("NumBiPoly: empty space");
    c_.assign(static_cast<std::size_t>(deg_.a) + 1, std::vector<Complex>(static_cast<std::size_t>(deg_.b) + 1));
    for (int i = 0; i <= deg_.a; ++i)
        for (int j = 0; j <= deg_.b; ++j)
            c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = to_complex(p.coeff(i, j));
}

namespace {

std::vector<Complex> powers(Complex x, int n)
{
    std::vector<Complex> p(static_cast<std::size_t>(std::max(n, 0)) + 1, Complex(1));
    for (int k = 1; k <= n; ++k)
        p[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k - 1)] * x;
    return p;
}

}  // namespace

Complex NumBiPoly::eval(Complex u0, Complex u1, Complex v0, Complex v1) const
{
    const auto pu0 = powers(u0, deg_.a), pu1 = powers(u1, deg_.a);
    const auto pv0 = powers(v0, deg_.b), pv1 = powers(v1, deg_.b);
    Complex acc = 0;
    for (int i = 0; i <= deg_.a; ++i) {
        Complex row = 0;
        for (int j = 0; j <= deg_.b; ++j)
            row += c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   pv0[static_cast<std::size_t>(deg_.b - j)] * pv1[static_cast<std::size_t>(j)];
        acc += row * pu0[static_cast<std::size_t>(deg_.a - i)] * pu1[static_cast<std::size_t>(i)];
    }
    return acc;
}

std::array<Complex, 4> NumBiPoly::gradient(const BasePoint& x) const
{
    const int a = deg_.a, b = deg_.b;
    const auto pu0 = powers(x.u0, a), pu1 = powers(x.u1, a);
    const auto pv0 = powers(x.v0, b), pv1 = powers(x.v1, b);
    auto at = [](const std::vector<Complex>& p, int k) { return k < 0 ? Complex(0) : p[static_cast<std::size_t>(k)]; };
    std::array<Complex, 4> g{};
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
            const Complex c = c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c == Complex(0))
                continue;
            const Complex U = at(pu0, a - i) * at(pu1, i);
            const Complex V = at(pv0, b - j) * at(pv1, j);
            g[0] += c * static_cast<double>(a - i) * at(pu0, a - i - 1) * at(pu1, i) * V;
            g[1] += c * static_cast<double>(i) * at(pu0, a - i) * at(pu1, i - 1) * V;
            g[2] += c * static_cast<double>(b - j) * at(pv0, b - j - 1) * at(pv1, j) * U;
            g[3] += c * static_cast<double>(j) * at(pv0, b - j) * at(pv1, j - 1) * U;
        }
    return g;
}

std::vector<Complex> NumBiPoly::u_form(Complex v0, Complex v1) const
{
    const auto pv0 = powers(v0, deg_.b), pv1 = powers(v1, deg_.b);
    std::vector<Complex> out(static_cast<std::size_t>(deg_.a) + 1);
    for (int i = 0; i <= deg_.a; ++i)
        for (int j = 0; j <= deg_.b; ++j)
            out[static_cast<std::size_t>(i)] += c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                                                pv0[static_cast<std::size_t>(deg_.b - j)] *
                                                pv1[static_cast<std::size_t>(j)];
    return out;
}

double NumBiPoly::norm1() const
{
    double s = 0;
    for (const auto& row : c_)
        for (auto c : row)
            s += std::abs(c);
    return s;
}

// ---------------------------------------------------------------------------

std::vector<std::array<Complex, 2>> binary_roots(const std::vector<Complex>& coeffs)
{
    const int d = static_cast<int>(coeffs.size()) - 1;
    int top = d;
    while (top >= 0 && coeffs[static_cast<std::size_t>(top)] == Complex(0))
        --top;
    if (top < 0)
        throw DomainError("binary_roots: zero form");
    std::vector<std::array<Complex, 2>> roots;
    for (int k = top; k < d; ++k)
        roots.push_back({Complex(0), Complex(1)});
    if (top == 0)
        return roots;

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(top, top);
    const Complex lead = coeffs[static_cast<std::size_t>(top)];
    for (int r = 1; r < top; ++r)
        companion(r, r - 1) = 1;
    for (int r = 0; r < top; ++r)
        companion(r, top - 1) = -coeffs[static_cast<std::size_t>(r)] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    const auto eig = solver.eigenvalues();

    auto affine = [&](Complex t, Complex& df) {
        Complex f = 0;
        df = 0;
        for (int k = top; k >= 0; --k) {
            df = df * t + f;
            f = f * t + coeffs[static_cast<std::size_t>(k)];
        }
        return f;
    };
    auto reversed = [&](Complex w, Complex& df) {
        // sum c_k w^(d-k), the chart x1 = 1
        Complex f = 0;
        df = 0;
        for (int k = 0; k <= d; ++k) {
            df = df * w + f;
            f = f * w + coeffs[static_cast<std::size_t>(k)];
        }
        return f;
    };
    for (int k = 0; k < top; ++k) {
        Complex t = eig(k);
        const bool near = std::abs(t) <= 1.0;
        Complex x = near ? t : 1.0 / t;
        for (int it = 0; it < 4; ++it) {
            Complex df;
            const Complex f = near ? affine(x, df) : reversed(x, df);
            if (df == Complex(0))
                break;
            const Complex next = x - f / df;
            Complex dnext;
            const Complex fnext = near ? affine(next, dnext) : reversed(next, dnext);
            if (std::abs(fnext) >= std::abs(f))
                break;
            x = next;
        }
        roots.push_back(near ? std::array<Complex, 2>{Complex(1), x} : std::array<Complex, 2>{x, Complex(1)});
    }
    return roots;
}

double projective_distance(const P5Point& x, const P5Point& y)
{
    double nx = 0, ny = 0, cross = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        nx += std::norm(x[i]);
        ny += std::norm(y[i]);
        for (std::size_t j = i + 1; j < 6; ++j)
            cross += std::norm(x[i] * y[j] - x[j] * y[i]);
    }
    if (nx == 0 || ny == 0)
        throw DomainError("projective_distance: zero vector");
    return std::sqrt(cross / (nx * ny));
}

void normalize_sign(std::array<Complex, 3>& y)
{
    std::size_t k = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (std::abs(y[i]) > std::abs(y[k]))
            k = i;
    const Complex lead = y[k];
    if (lead.real() < 0 || (lead.real() == 0 && lead.imag() < 0))
        for (auto& c : y)
            c = -c;
}

// ---------------------------------------------------------------------------

NumericCover::NumericCover(const BranchConfig& config, Tolerances tol)
    : config_(config), tol_(tol),
      delta_{NumBiPoly(config.delta1), NumBiPoly(config.delta2), NumBiPoly(config.delta3)}
{
    config_.validate();
    BiPoly alpha(BiDegree{4, 0}), beta(BiDegree{4, 0});
    for (int i = 0; i <= 4; ++i) {
        alpha.coeff(i, 0) = config.delta3.coeff(i, 0);
        beta.coeff(i, 0) = config.delta3.coeff(i, 1);
    }
    alpha_ = NumBiPoly(alpha);
    beta_ = NumBiPoly(beta);
    d3_graph_ = check_d3_graph(config.delta3).pass;
}

std::vector<SurfacePoint> NumericCover::fiber(const BasePoint& q) const
{
    std::array<Complex, 3> root{};
    std::array<bool, 3> zero{};
    int zeros = 0;
    for (int i = 0; i < 3; ++i) {
        const Complex d = delta_[static_cast<std::size_t>(i)].eval(q);
        zero[static_cast<std::size_t>(i)] = std::abs(d) <= tol_.zero;
        root[static_cast<std::size_t>(i)] = zero[static_cast<std::size_t>(i)] ? Complex(0) : std::sqrt(d);
        zeros += zero[static_cast<std::size_t>(i)] ? 1 : 0;
    }
    if (zeros == 3)
        throw DomainError("fiber: all three branch curves pass through " + describe(q));
    std::vector<SurfacePoint> out;
    for (int e1 : {1, -1})
        for (int e2 : {1, -1})
            for (int e3 : {1, -1}) {
                SurfacePoint s;
                s.base = q;
                s.y = {static_cast<double>(e1) * root[0], static_cast<double>(e2) * root[1],
                       static_cast<double>(e3) * root[2]};
                normalize_sign(s.y);
                const bool seen = std::any_of(out.begin(), out.end(), [&](const SurfacePoint& o) { return o.y == s.y; });
                if (!seen)
                    out.push_back(s);
            }
    return out;
}

P5Point NumericCover::raw_image(const SurfacePoint& s) const
{
    const auto& b = s.base;
    return {s.y[0] * b.u0, s.y[0] * b.u1, s.y[1] * b.u0, s.y[1] * b.u1, s.y[2] * b.v0, s.y[2] * b.v1};
}

P5Point NumericCover::canonical_image(const SurfacePoint& s) const
{
    P5Point x = raw_image(s);
    std::size_t k = 0;
    for (std::size_t i = 1; i < 6; ++i)
        if (std::abs(x[i]) > std::abs(x[k]))
            k = i;
    if (x[k] == Complex(0))
        throw DomainError("canonical_image: all six coordinates vanish at " + describe(s.base));
    const Complex pivot = x[k];
    for (auto& c : x)
        c /= pivot;
    return x;
}

namespace {

/// Newton's method for f = g = 0 in the chart of the starting point.
std::optional<BasePoint> newton2(const NumBiPoly& f, const NumBiPoly& g, const BasePoint& start)
{
    const Chart chart = Chart::of(start);
    auto [s, t] = chart.coords(start);
    for (int it = 0; it < 50; ++it) {
        const BasePoint p = chart.point(s, t);
        const Complex fv = f.eval(p), gv = g.eval(p);
        const auto [fs, ft] = chart.derivatives(f, p);
        const auto [gs, gt] = chart.derivatives(g, p);
        const Complex det = fs * gt - ft * gs;
        if (det == Complex(0))
            return std::nullopt;
        const Complex ds = (fv * gt - ft * gv) / det;
        const Complex dt = (fs * gv - fv * gs) / det;
        s -= ds;
        t -= dt;
        if (std::abs(ds) + std::abs(dt) <= 1e-15 * (1 + std::abs(s) + std::abs(t)))
            break;
    }
    if (!std::isfinite(std::abs(s)) || !std::isfinite(std::abs(t)))
        return std::nullopt;
    const BasePoint p = chart.point(s, t);
    return BasePoint::make(p.u0, p.u1, p.v0, p.v1);
}

bool same_point(const BasePoint& a, const BasePoint& b, double tol)
{
    return std::abs(a.u0 * b.u1 - a.u1 * b.u0) <= tol && std::abs(a.v0 * b.v1 - a.v1 * b.v0) <= tol;
}

std::vector<Complex> complex_coeffs(const UniPoly& f)
{
    std::vector<Complex> c;
    for (const auto& q : f.coeffs())
        c.push_back(to_complex(q));
    return c;
}

}  // namespace

std::vector<BasePoint> NumericCover::intersection_points(int h, int k) const
{
    if (!(1 <= h && h < k && k <= 3))
        throw DomainError("intersection_points: need 1 <= h < k <= 3");
    const NumBiPoly& f = delta(h);
    const NumBiPoly& g = delta(k);
    const UniPoly res = sylvester_resultant_u(config_.delta(h), config_.delta(k));
    if (res.is_zero())
        throw DomainError("intersection_points: the curves share a component");
    std::vector<BasePoint> out;
    const double scale_f = f.norm1(), scale_g = g.norm1();
    for (const auto& v : binary_roots(complex_coeffs(res))) {
        const auto vv = scale_pair(v[0], v[1]);
        for (const auto& u : binary_roots(f.u_form(vv.first, vv.second))) {
            const BasePoint guess = BasePoint::make(u[0], u[1], vv.first, vv.second);
            if (std::abs(g.eval(guess)) > 1e-4 * scale_g)
                continue;
            const auto refined = newton2(f, g, guess);
            if (!refined)
                continue;
            if (std::abs(f.eval(*refined)) > 1e-11 * scale_f || std::abs(g.eval(*refined)) > 1e-11 * scale_g)
                continue;
            const bool dup = std::any_of(out.begin(), out.end(),
                                         [&](const BasePoint& p) { return same_point(p, *refined, 1e-7); });
            if (!dup)
                out.push_back(*refined);
        }
    }
    return out;
}

BasePoint NumericCover::random_point(Rng& rng) const
{
    const Complex a = gaussian(rng), b = gaussian(rng), c = gaussian(rng), d = gaussian(rng);
    return BasePoint::make(a, b, c, d);
}

BasePoint NumericCover::random_point_on(int i, Rng& rng) const
{
    if (i == 3 && d3_graph_) {
        const auto u = scale_pair(gaussian(rng), gaussian(rng));
        const Complex a = alpha_.eval(u.first, u.second, 1, 0);
        const Complex b = beta_.eval(u.first, u.second, 1, 0);
        return BasePoint::make(u.first, u.second, -b, a);
    }
    for (;;) {
        const auto v = scale_pair(gaussian(rng), gaussian(rng));
        const auto roots = binary_roots(delta(i).u_form(v.first, v.second));
        if (roots.empty())
            continue;
        const auto& u = roots[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(roots.size()) - 1))];
        return BasePoint::make(u[0], u[1], v.first, v.second);
    }
}

// ---------------------------------------------------------------------------

namespace {

std::string stratum_of(const SurfacePoint& x)
{
    std::string s;
    for (int i = 0; i < 3; ++i)
        if (x.y[static_cast<std::size_t>(i)] == Complex(0))
            s += "R" + std::to_string(i + 1);
    return s.empty() ? "generic" : s;
}

/// Surface point near x with base at chart coordinates (s, t); y's follow x by continuity.
SurfacePoint lift(const NumericCover& cover, const Chart& chart, Complex s, Complex t, const SurfacePoint& x)
{
    SurfacePoint p;
    p.base = chart.point(s, t);
    for (int i = 0; i < 3; ++i)
        p.y[static_cast<std::size_t>(i)] =
            closest_root(cover.delta(i + 1).eval(p.base), x.y[static_cast<std::size_t>(i)]);
    return p;
}

/// Solves f(s, t) = target for s (solve_s) or t, the other coordinate fixed.
std::optional<Complex> newton1(const NumBiPoly& f, const Chart& chart, Complex s, Complex t, Complex target,
                               bool solve_s)
{
    Complex x = solve_s ? s : t;
    for (int it = 0; it < 50; ++it) {
        const BasePoint p = solve_s ? chart.point(x, t) : chart.point(s, x);
        const auto [ds, dt] = chart.derivatives(f, p);
        const Complex d = solve_s ? ds : dt;
        if (d == Complex(0))
            return std::nullopt;
        const Complex step = (f.eval(p) - target) / d;
        x -= step;
        if (std::abs(step) <= 1e-16 * (1 + std::abs(x)))
            break;
    }
    if (!std::isfinite(std::abs(x)))
        return std::nullopt;
    return x;
}

std::optional<std::pair<Complex, Complex>> newton2_target(const NumBiPoly& f, const NumBiPoly& g, const Chart& chart,
                                                          Complex s, Complex t, Complex tf, Complex tg)
{
    for (int it = 0; it < 50; ++it) {
        const BasePoint p = chart.point(s, t);
        const Complex fv = f.eval(p) - tf, gv = g.eval(p) - tg;
        const auto [fs, ft] = chart.derivatives(f, p);
        const auto [gs, gt] = chart.derivatives(g, p);
        const Complex det = fs * gt - ft * gs;
        if (det == Complex(0))
            return std::nullopt;
        const Complex ds = (fv * gt - ft * gv) / det;
        const Complex dt = (fs * gv - fv * gs) / det;
        s -= ds;
        t -= dt;
        if (std::abs(ds) + std::abs(dt) <= 1e-16 * (1 + std::abs(s) + std::abs(t)))
            break;
    }
    if (!std::isfinite(std::abs(s)) || !std::isfinite(std::abs(t)))
        return std::nullopt;
    return std::make_pair(s, t);
}

using LocalMap = std::function<std::optional<SurfacePoint>(Complex, Complex)>;

std::optional<double> sv_ratio(const NumericCover& cover, const LocalMap& map, std::size_t pivot, double h)
{
    Eigen::Matrix<Complex, 6, 2> jac;
    for (int col = 0; col < 2; ++col) {
        const Complex dh(h, 0);
        const auto plus = col == 0 ? map(dh, 0) : map(0, dh);
        const auto minus = col == 0 ? map(-dh, 0) : map(0, -dh);
        if (!plus || !minus)
            return std::nullopt;
        const P5Point a = cover.raw_image(*plus), b = cover.raw_image(*minus);
        for (std::size_t r = 0; r < 6; ++r)
            jac(static_cast<Eigen::Index>(r), col) = (a[r] / a[pivot] - b[r] / b[pivot]) / (2.0 * h);
    }
    Eigen::JacobiSVD<Eigen::Matrix<Complex, 6, 2>> svd(jac);
    const auto sv = svd.singularValues();
    if (!(sv(0) > 0))
        return 0.0;
    return sv(1) / sv(0);
}

}  // namespace

JacobianSample jacobian_at(const NumericCover& cover, const SurfacePoint& x, double step)
{
    JacobianSample out;
    out.stratum = stratum_of(x);
    const Chart chart = Chart::of(x.base);
    const auto [s0, t0] = chart.coords(x.base);
    const double rank_tol = cover.tolerances().rank;

    std::vector<int> vanishing;
    for (int i = 0; i < 3; ++i)
        if (x.y[static_cast<std::size_t>(i)] == Complex(0))
            vanishing.push_back(i + 1);

    LocalMap map;
    if (vanishing.empty()) {
        map = [&, s0 = s0, t0 = t0](Complex a, Complex b) -> std::optional<SurfacePoint> {
            return lift(cover, chart, s0 + a, t0 + b, x);
        };
    } else if (vanishing.size() == 1) {
        const int i = vanishing[0];
        const NumBiPoly& f = cover.delta(i);
        const auto [ds, dt] = chart.derivatives(f, x.base);
        const double grad = std::abs(ds) + std::abs(dt);
        // On R1 and R2 either base coordinate may accompany y_i; on R3 it is u.
        const bool keep_t = i == 3 ? false : std::abs(ds) >= std::abs(dt);
        const Complex solved_derivative = keep_t ? ds : dt;
        if (!(std::abs(solved_derivative) > rank_tol * grad)) {
            out.reason = keep_t ? "v is not a local coordinate on the branch curve"
                                : "u is not a local coordinate on the branch curve";
            return out;
        }
        map = [&, i, keep_t, s0 = s0, t0 = t0](Complex eta, Complex tau) -> std::optional<SurfacePoint> {
            const Complex s_in = keep_t ? s0 : s0 + tau;
            const Complex t_in = keep_t ? t0 + tau : t0;
            const auto solved = newton1(cover.delta(i), chart, s_in, t_in, eta * eta, keep_t);
            if (!solved)
                return std::nullopt;
            SurfacePoint p = keep_t ? lift(cover, chart, *solved, t_in, x) : lift(cover, chart, s_in, *solved, x);
            p.y[static_cast<std::size_t>(i - 1)] = eta;
            return p;
        };
    } else if (vanishing.size() == 2) {
        const int h = vanishing[0], k = vanishing[1];
        map = [&, h, k, s0 = s0, t0 = t0](Complex eh, Complex ek) -> std::optional<SurfacePoint> {
            const auto solved = newton2_target(cover.delta(h), cover.delta(k), chart, s0, t0, eh * eh, ek * ek);
            if (!solved)
                return std::nullopt;
            SurfacePoint p = lift(cover, chart, solved->first, solved->second, x);
            p.y[static_cast<std::size_t>(h - 1)] = eh;
            p.y[static_cast<std::size_t>(k - 1)] = ek;
            return p;
        };
    } else {
        throw DomainError("jacobian_at: point over a triple intersection");
    }

    const P5Point center = cover.raw_image(x);
    std::size_t pivot = 0;
    for (std::size_t r = 1; r < 6; ++r)
        if (std::abs(center[r]) > std::abs(center[pivot]))
            pivot = r;
    out.ratio = sv_ratio(cover, map, pivot, step);
    out.ratio_half_step = sv_ratio(cover, map, pivot, step / 2);
    if (!out.ratio || !out.ratio_half_step)
        out.reason = "local coordinate solve failed";
    return out;
}

// ---------------------------------------------------------------------------

nlohmann::ordered_json ProbeReport::to_json() const
{
    nlohmann::ordered_json j;
    j["probe"] = probe;
    j["samples"] = samples;
    j["failures"] = failures;
    j[min_key] = samples ? nlohmann::ordered_json(min_value) : nlohmann::ordered_json(nullptr);
    for (const auto& [k, v] : details.items())
        j[k] = v;
    return j;
}

namespace {

struct StratumPoint {
    std::string stratum;
    BasePoint base;
};

/// Generic points, points on each D_i and every double point, in a fixed order.
std::vector<StratumPoint> sample_strata(const NumericCover& cover, std::size_t generic, std::size_t per_curve,
                                        std::uint64_t seed, std::uint64_t stream)
{
    std::vector<StratumPoint> pts(generic + 3 * per_curve);
    parallel_for(pts.size(), [&](std::size_t k) {
        Rng rng = derive_rng(seed, stream, k);
        if (k < generic) {
            pts[k] = {"generic", cover.random_point(rng)};
        } else {
            const int i = static_cast<int>((k - generic) / per_curve) + 1;
            pts[k] = {"R" + std::to_string(i), cover.random_point_on(i, rng)};
        }
    });
    for (auto [h, k] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}})
        for (const auto& p : cover.intersection_points(h, k))
            pts.push_back({"R" + std::to_string(h) + "R" + std::to_string(k), p});
    return pts;
}

nlohmann::ordered_json failure(const std::string& stratum, const BasePoint& p, double value, const std::string& reason)
{
    nlohmann::ordered_json j;
    j["stratum"] = stratum;
    j["point"] = describe(p);
    j["value"] = value;
    j["reason"] = reason;
    return j;
}

constexpr std::uint64_t kStreamBasepoint = 101;
constexpr std::uint64_t kStreamJacobian = 102;
constexpr std::uint64_t kStreamInjectivity = 103;

}  // namespace

ProbeReport basepoint_free_probe(const NumericCover& cover, const ProbeOptions& opt)
{
    const auto pts = sample_strata(cover, opt.samples, opt.samples, opt.seed, kStreamBasepoint);
    struct Slot {
        std::size_t checked = 0;
        double min = std::numeric_limits<double>::infinity();
        std::vector<nlohmann::ordered_json> failures;
    };
    std::vector<Slot> slots(pts.size());
    parallel_for(pts.size(), [&](std::size_t k) {
        for (const auto& x : cover.fiber(pts[k].base)) {
            const P5Point img = cover.raw_image(x);
            double m = 0;
            for (auto c : img)
                m = std::max(m, std::abs(c));
            ++slots[k].checked;
            slots[k].min = std::min(slots[k].min, m);
            if (m < cover.tolerances().nonzero)
                slots[k].failures.push_back(failure(pts[k].stratum, x.base, m, "image 6-tuple vanishes"));
        }
    });
    ProbeReport rep;
    rep.probe = "basepoint_free";
    rep.min_key = "min_max_modulus";
    rep.min_value = std::numeric_limits<double>::infinity();
    for (auto& s : slots) {
        rep.samples += s.checked;
        rep.min_value = std::min(rep.min_value, s.min);
        for (auto& f : s.failures)
            rep.failures.push_back(std::move(f));
    }
    return rep;
}

ProbeReport jacobian_rank_probe(const NumericCover& cover, const ProbeOptions& opt)
{
    const std::size_t per_curve = std::max<std::size_t>(1, opt.samples / 4);
    const auto pts = sample_strata(cover, opt.samples, per_curve, opt.seed, kStreamJacobian);
    const double tol = cover.tolerances().rank;
    const double h = cover.tolerances().fd_step;
    struct Slot {
        std::size_t checked = 0;
        double min = std::numeric_limits<double>::infinity();
        std::vector<nlohmann::ordered_json> failures;
    };
    std::vector<Slot> slots(pts.size());
    parallel_for(pts.size(), [&](std::size_t k) {
        for (const auto& x : cover.fiber(pts[k].base)) {
            ++slots[k].checked;
            const JacobianSample js = jacobian_at(cover, x, h);
            if (!js.ratio || !js.ratio_half_step) {
                slots[k].min = 0;
                slots[k].failures.push_back(failure(js.stratum, x.base, 0, js.reason));
                continue;
            }
            const double r = std::min(*js.ratio, *js.ratio_half_step);
            slots[k].min = std::min(slots[k].min, r);
            const bool ok_h = *js.ratio >= tol, ok_half = *js.ratio_half_step >= tol;
            if (ok_h != ok_half)
                slots[k].failures.push_back(failure(js.stratum, x.base, r, "verdict changes under step halving"));
            else if (!ok_h)
                slots[k].failures.push_back(failure(js.stratum, x.base, r, "Jacobian rank below 2"));
        }
    });
    ProbeReport rep;
    rep.probe = "jacobian_rank";
    rep.min_key = "min_sv_ratio";
    rep.min_value = std::numeric_limits<double>::infinity();
    for (auto& s : slots) {
        rep.samples += s.checked;
        rep.min_value = std::min(rep.min_value, s.min);
        for (auto& f : s.failures)
            rep.failures.push_back(std::move(f));
    }
    return rep;
}

ProbeReport injectivity_probe(const NumericCover& cover, const ProbeOptions& opt)
{
    const double tol = cover.tolerances().sep;
    struct Pair {
        std::string kind;
        SurfacePoint a, b;
    };
    std::vector<Pair> pairs(opt.samples);
    parallel_for(opt.samples, [&](std::size_t k) {
        Rng rng = derive_rng(opt.seed, kStreamInjectivity, k);
        auto pick = [&](const BasePoint& q) {
            const auto f = cover.fiber(q);
            return f[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(f.size()) - 1))];
        };
        const BasePoint qa = cover.random_point(rng);
        const BasePoint qb = cover.random_point(rng);
        pairs[k] = {"random", pick(qa), pick(qb)};
    });

    // Whole fibers over generic points and over each branch curve.
    const std::size_t fibers = std::max<std::size_t>(1, opt.samples / 10);
    const auto fiber_pts = sample_strata(cover, fibers, fibers, opt.seed, kStreamInjectivity + 1);
    std::vector<SurfacePoint> double_points;
    for (const auto& sp : fiber_pts) {
        const auto f = cover.fiber(sp.base);
        if (sp.stratum.size() == 4) {  // R1R2, R1R3, R2R3: one surface point each
            double_points.insert(double_points.end(), f.begin(), f.end());
            continue;
        }
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                pairs.push_back({"fiber_" + sp.stratum, f[i], f[j]});
    }
    for (std::size_t i = 0; i < double_points.size(); ++i)
        for (std::size_t j = i + 1; j < double_points.size(); ++j)
            pairs.push_back({"double_points", double_points[i], double_points[j]});

    std::vector<double> dist(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t k) {
        dist[k] = projective_distance(cover.canonical_image(pairs[k].a), cover.canonical_image(pairs[k].b));
    });
    ProbeReport rep;
    rep.probe = "injectivity";
    rep.min_key = "min_separation";
    rep.min_value = std::numeric_limits<double>::infinity();
    rep.samples = pairs.size();
    std::map<std::string, std::size_t> by_kind;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        ++by_kind[pairs[k].kind];
        rep.min_value = std::min(rep.min_value, dist[k]);
        if (dist[k] < tol) {
            auto f = failure(pairs[k].kind, pairs[k].a.base, dist[k], "images coincide");
            f["other_point"] = describe(pairs[k].b.base);
            rep.failures.push_back(std::move(f));
        }
    }
    rep.details["pairs_by_kind"] = by_kind;
    return rep;
}

}  // namespace canonical24
