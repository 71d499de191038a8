#include "canonical24/elim.hpp"

#include <utility>

namespace canonical24 {

namespace {

UniPoly row_form(const BiPoly& p, int i)
{
    const int b = p.bidegree().b;
    std::vector<Rational> c(static_cast<std::size_t>(b) + 1);
    for (int j = 0; j <= b; ++j)
        c[static_cast<std::size_t>(j)] = p.coeff(i, j);
    return UniPoly(b, std::move(c));
}

}  // namespace

QuadraticInU decompose_quadratic(const BiPoly& p)
{
    if (p.bidegree().a != 2)
        throw DomainError("decompose_quadratic: u-degree must be 2");
    return {row_form(p, 0), row_form(p, 1), row_form(p, 2)};
}

BiPoly recompose(const QuadraticInU& q)
{
    const int b = q.A.degree();
    if (q.B.degree() != b || q.C.degree() != b)
        throw DomainError("recompose: coefficient forms of different degree");
    BiPoly p(BiDegree{2, b});
    const UniPoly* rows[3] = {&q.A, &q.B, &q.C};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j <= b; ++j)
            p.coeff(i, j) = rows[i]->coeff(j);
    return p;
}

UniPoly closed_form_delta(const QuadraticInU& q1, const QuadraticInU& q2)
{
    const int d = q1.A.degree();
    for (const UniPoly* f : {&q1.B, &q1.C, &q2.A, &q2.B, &q2.C})
        if (f->degree() != d)
            throw DomainError("closed_form_delta: v-degrees must agree");
    return quadratic_resultant(q1.A, q1.B, q1.C, q2.A, q2.B, q2.C);
}

DensePoly bareiss_determinant(std::vector<std::vector<DensePoly>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return Rational(1);
    bool negate = false;
    DensePoly prev = Rational(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero())
            ++piv;
        if (piv == n)
            return {};
        if (piv != k) {
            std::swap(m[piv], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = DensePoly{};
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

DensePoly sylvester_resultant(const std::vector<DensePoly>& f, const std::vector<DensePoly>& g)
{
    if (f.empty() || g.empty())
        throw DomainError("sylvester_resultant: empty coefficient list");
    const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
    std::vector<std::vector<DensePoly>> s(size, std::vector<DensePoly>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k)
            s[r][r + k] = f[k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k)
            s[n + r][r + k] = g[k];
    return bareiss_determinant(std::move(s));
}

std::vector<DensePoly> u_coefficients(const BiPoly& p)
{
    std::vector<DensePoly> out;
    const BiDegree d = p.bidegree();
    for (int i = 0; i <= d.a; ++i)
        out.push_back(row_form(p, i).affine());
    return out;
}

UniPoly sylvester_resultant_u(const BiPoly& p, const BiPoly& q)
{
    const BiDegree dp = p.bidegree(), dq = q.bidegree();
    if (!dp.has_sections() || !dq.has_sections())
        throw DomainError("sylvester_resultant_u: negative bidegree");
    if (dp.a == 0 || dq.a == 0)
        throw DomainError("sylvester_resultant_u: both inputs need positive u-degree");
    const DensePoly r = sylvester_resultant(u_coefficients(p), u_coefficients(q));
    return UniPoly::from_affine(r, dp.a * dq.b + dq.a * dp.b);
}

UniPoly sylvester_resultant_v(const BiPoly& p, const BiPoly& q)
{
    return sylvester_resultant_u(p.transposed(), q.transposed());
}

}  // namespace canonical24
