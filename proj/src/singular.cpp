#include "canonical24/singular.hpp"

#include "canonical24/elim.hpp"
#include "canonical24/unipoly.hpp"

#include <sstream>
#include <utility>

namespace canonical24 {

Poly2::Poly2(std::vector<DensePoly> coeffs) : c_(std::move(coeffs))
{
    trim();
}

void Poly2::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

std::string Poly2::str() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const DensePoly& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero())
            continue;
        if (!first)
            os << " + ";
        os << "(" << c.str("t") << ")";
        if (k > 0)
            os << "*s" << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    return os.str();
}

Poly2 operator+(const Poly2& a, const Poly2& b)
{
    std::vector<DensePoly> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (k < a.c_.size())
            r[k] += a.c_[k];
        if (k < b.c_.size())
            r[k] += b.c_[k];
    }
    return Poly2(std::move(r));
}

Poly2 operator*(const DensePoly& c, const Poly2& a)
{
    std::vector<DensePoly> r;
    r.reserve(a.c_.size());
    for (const auto& x : a.c_)
        r.push_back(c * x);
    return Poly2(std::move(r));
}

std::string AffineChart::name() const
{
    return std::string(u1_is_one ? "u1=1" : "u0=1") + "," + (v0_is_one ? "v0=1" : "v1=1");
}

Poly2 dehomogenize(const BiPoly& p, AffineChart chart)
{
    const BiDegree d = p.bidegree();
    if (!d.has_sections())
        return {};
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(d.a) + 1,
                                            std::vector<Rational>(static_cast<std::size_t>(d.b) + 1));
    for (int i = 0; i <= d.a; ++i)
        for (int j = 0; j <= d.b; ++j) {
            const int se = chart.u1_is_one ? d.a - i : i;
            const int te = chart.v0_is_one ? j : d.b - j;
            rows[static_cast<std::size_t>(se)][static_cast<std::size_t>(te)] = p.coeff(i, j);
        }
    std::vector<DensePoly> coeffs;
    for (auto& r : rows)
        coeffs.emplace_back(std::move(r));
    return Poly2(std::move(coeffs));
}

namespace {

std::vector<DensePoly> shifted(const Poly2& p, int k)
{
    std::vector<DensePoly> r(static_cast<std::size_t>(k));
    r.insert(r.end(), p.coeffs().begin(), p.coeffs().end());
    return r;
}

DensePoly content(const Poly2& p)
{
    DensePoly c;
    for (const auto& x : p.coeffs())
        c = gcd(c, x);
    return c;
}

Poly2 primitive_part(const Poly2& p)
{
    if (p.is_zero())
        return p;
    const DensePoly c = content(p);
    std::vector<DensePoly> r;
    for (const auto& x : p.coeffs())
        r.push_back(exact_div(x, c));
    Poly2 q(std::move(r));
    return DensePoly(1 / q.lead().lead()) * q;
}

Poly2 pseudo_remainder(Poly2 a, const Poly2& b)
{
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const int k = a.degree() - b.degree();
        Poly2 sb(shifted(b, k));
        a = b.lead() * a + (-a.lead()) * sb;
    }
    return a;
}

Poly2 reduce(const Poly2& p, const DensePoly& g)
{
    std::vector<DensePoly> r;
    for (const auto& x : p.coeffs())
        r.push_back(x % g);
    return Poly2(std::move(r));
}

Poly2 scale_mod(const Poly2& p, const DensePoly& c, const DensePoly& g)
{
    std::vector<DensePoly> r;
    for (const auto& x : p.coeffs())
        r.push_back((c * x) % g);
    return Poly2(std::move(r));
}

Poly2 monic_mod(const Poly2& p, const DensePoly& g)
{
    if (p.is_zero())
        return p;
    const DensePoly inv = inverse_mod(p.lead(), g);
    if (inv.is_zero())
        throw InternalError("monic_mod: leading coefficient is not a unit");
    return scale_mod(p, inv, g);
}

using Split = std::vector<std::pair<DensePoly, Poly2>>;

// Splits g until the leading coefficient of p is a unit (or p vanishes) on each part.
void normalize(const Poly2& p, const DensePoly& g, Split& out)
{
    const Poly2 q = reduce(p, g);
    if (!q.is_zero()) {
        const DensePoly h = gcd(q.lead(), g);
        if (h.degree() > 0) {
            normalize(q, h, out);
            normalize(q, exact_div(g, h), out);
            return;
        }
    }
    out.emplace_back(g, q);
}

Poly2 rem_mod(Poly2 a, const Poly2& b, const DensePoly& g)
{
    const DensePoly inv = inverse_mod(b.lead(), g);
    if (inv.is_zero())
        throw InternalError("rem_mod: divisor leading coefficient is not a unit");
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const int k = a.degree() - b.degree();
        const DensePoly q = (a.lead() * inv) % g;
        std::vector<DensePoly> r = a.coeffs();
        for (int j = 0; j <= b.degree(); ++j)
            r[static_cast<std::size_t>(j + k)] =
                (r[static_cast<std::size_t>(j + k)] - q * b.coeffs()[static_cast<std::size_t>(j)]) % g;
        a = Poly2(std::move(r));
    }
    return a;
}

void gcd2(const Poly2& a, const Poly2& b, const DensePoly& g, Split& out)
{
    Split sa;
    normalize(a, g, sa);
    for (auto& [g1, a1] : sa) {
        Split sb;
        normalize(b, g1, sb);
        for (auto& [g2, b1] : sb) {
            const Poly2 a2 = reduce(a1, g2);
            if (b1.is_zero()) {
                out.emplace_back(g2, monic_mod(a2, g2));
            } else if (a2.is_zero()) {
                out.emplace_back(g2, monic_mod(b1, g2));
            } else if (a2.degree() >= b1.degree()) {
                gcd2(b1, rem_mod(a2, b1, g2), g2, out);
            } else {
                gcd2(b1, a2, g2, out);
            }
        }
    }
}

std::string describe_forms_at_infinity(const UniPoly& f)
{
    return f.str("u0", "u1");
}

}  // namespace

Poly2 bivariate_gcd(const Poly2& a, const Poly2& b)
{
    if (a.is_zero() || b.is_zero()) {
        const Poly2& x = a.is_zero() ? b : a;
        return content(x) * primitive_part(x);
    }
    const DensePoly c = gcd(content(a), content(b));
    Poly2 x = primitive_part(a), y = primitive_part(b);
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        Poly2 r = primitive_part(pseudo_remainder(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    if (x.degree() == 0)
        return Poly2({c});
    return c * x;
}

std::vector<ModBranch> gcd_mod(const std::vector<Poly2>& polys, const DensePoly& g)
{
    if (polys.empty())
        throw DomainError("gcd_mod: no polynomials");
    if (g.degree() < 1)
        throw DomainError("gcd_mod: modulus must have positive degree");
    Split acc;
    normalize(polys[0], g, acc);
    for (auto& [gk, p] : acc)
        p = monic_mod(p, gk);
    for (std::size_t i = 1; i < polys.size(); ++i) {
        Split next;
        for (auto& [gk, p] : acc)
            gcd2(p, polys[i], gk, next);
        acc = std::move(next);
    }
    std::vector<ModBranch> out;
    for (auto& [gk, p] : acc)
        out.push_back({gk.monic(), std::move(p)});
    return out;
}

namespace {

std::optional<CommonZeroWitness> confirm_in_charts(const std::vector<BiPoly>& forms, const DensePoly& t_candidates,
                                                   bool v0_is_one)
{
    const DensePoly g = squarefree_part(t_candidates);
    for (bool u1_is_one : {true, false}) {
        const AffineChart chart{u1_is_one, v0_is_one};
        std::vector<Poly2> polys;
        for (const auto& f : forms)
            polys.push_back(dehomogenize(f, chart));
        for (const auto& br : gcd_mod(polys, g)) {
            if (br.gcd.is_zero())
                return CommonZeroWitness{"line", chart.name(), br.modulus.str("t"), "0"};
            if (br.gcd.degree() >= 1)
                return CommonZeroWitness{"point", chart.name(), br.modulus.str("t"), br.gcd.str()};
        }
    }
    return std::nullopt;
}

// Used only when every pairwise resultant vanishes identically.
std::optional<CommonZeroWitness> affine_search(const std::vector<BiPoly>& forms)
{
    for (bool u1_is_one : {true, false})
        for (bool v0_is_one : {true, false}) {
            const AffineChart chart{u1_is_one, v0_is_one};
            std::vector<Poly2> polys;
            for (const auto& f : forms)
                polys.push_back(dehomogenize(f, chart));
            Poly2 common = polys[0];
            for (std::size_t i = 1; i < polys.size(); ++i)
                common = bivariate_gcd(common, polys[i]);
            if (!common.is_constant())
                return CommonZeroWitness{"curve", chart.name(), "", common.str()};

            std::size_t lead_idx = polys.size();
            for (std::size_t i = 0; i < polys.size(); ++i)
                if (polys[i].degree() >= 1) {
                    lead_idx = i;
                    break;
                }
            if (lead_idx == polys.size())
                continue;  // only polynomials in t with constant gcd
            std::vector<Poly2> rest;
            for (std::size_t i = 0; i < polys.size(); ++i)
                if (i != lead_idx)
                    rest.push_back(polys[i]);

            // Points (1, k, k^2, ...) leave any finite union of proper subspaces.
            DensePoly eliminant;
            for (int k = 1; k <= 64 && eliminant.is_zero(); ++k) {
                Poly2 combo;
                Rational w = 1;
                for (const auto& r : rest) {
                    combo = combo + DensePoly(w) * r;
                    w *= k;
                }
                eliminant = sylvester_resultant(polys[lead_idx].coeffs(), combo.is_zero() ? std::vector<DensePoly>{DensePoly{}} : combo.coeffs());
            }
            if (eliminant.is_zero())
                throw InternalError("affine_search: no nonvanishing eliminant found");
            if (eliminant.degree() == 0)
                continue;
            const DensePoly g = squarefree_part(eliminant);
            for (const auto& br : gcd_mod(polys, g)) {
                if (br.gcd.is_zero())
                    return CommonZeroWitness{"line", chart.name(), br.modulus.str("t"), "0"};
                if (br.gcd.degree() >= 1)
                    return CommonZeroWitness{"point", chart.name(), br.modulus.str("t"), br.gcd.str()};
            }
        }
    return std::nullopt;
}

}  // namespace

std::optional<CommonZeroWitness> find_common_zero(const std::vector<BiPoly>& forms)
{
    std::vector<BiPoly> nz;
    for (const auto& f : forms)
        if (!f.empty_space() && !f.is_zero())
            nz.push_back(f);
    if (nz.empty())
        return CommonZeroWitness{"curve", "everywhere", "", "0"};

    // The fiber over v = (0:1), which the chart v0 = 1 misses.
    {
        std::optional<UniPoly> common;
        for (const auto& f : nz) {
            const BiDegree d = f.bidegree();
            std::vector<Rational> c(static_cast<std::size_t>(d.a) + 1);
            for (int i = 0; i <= d.a; ++i)
                c[static_cast<std::size_t>(i)] = f.coeff(i, d.b);
            UniPoly form(d.a, std::move(c));
            if (form.is_zero())
                continue;
            common = common ? uni_gcd(*common, form) : uni_gcd(form, UniPoly(form.degree()));
        }
        if (!common)
            return CommonZeroWitness{"line", "v=(0:1)", "", "0"};
        if (common->degree() >= 1)
            return CommonZeroWitness{"point", "v=(0:1)", "", describe_forms_at_infinity(*common)};
    }

    std::vector<std::vector<DensePoly>> coeffs;
    for (const auto& f : nz)
        coeffs.push_back(u_coefficients(f));
    std::vector<DensePoly> eliminants;
    std::size_t positive = 0;
    for (std::size_t i = 0; i < nz.size(); ++i) {
        if (nz[i].bidegree().a == 0) {
            eliminants.push_back(coeffs[i][0]);
            continue;
        }
        ++positive;
        for (std::size_t j = i + 1; j < nz.size(); ++j) {
            if (nz[j].bidegree().a == 0)
                continue;
            DensePoly r = sylvester_resultant(coeffs[i], coeffs[j]);
            if (!r.is_zero())
                eliminants.push_back(std::move(r));
        }
    }
    if (eliminants.empty()) {
        if (positive == 1)
            return CommonZeroWitness{"curve", "v0=1", "", nz[0].str()};
        return affine_search(nz);
    }
    DensePoly g;
    for (const auto& e : eliminants)
        g = gcd(g, e);
    if (g.degree() < 1)
        return std::nullopt;
    return confirm_in_charts(nz, g, true);
}

// ---------------------------------------------------------------------------
// Mod-p scan

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p)
{
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 powmod(u64 a, u64 e, u64 p)
{
    u64 r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p)
{
    return powmod(a, p - 2, p);
}

std::optional<u64> reduce_mod(const Rational& q, u64 p)
{
    const Integer pp(std::to_string(p));
    Integer n = q.get_num() % pp, d = q.get_den() % pp;
    if (n < 0)
        n += pp;
    if (d == 0)
        return std::nullopt;
    return mulmod(n.get_ui(), invmod(d.get_ui(), p), p);
}

using ModPoly = std::vector<u64>;  // ascending, trimmed

void trim(ModPoly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, u64 p)
{
    const u64 inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        const u64 q = mulmod(a.back(), inv, p);
        const std::size_t k = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[j + k] = (a[j + k] + p - mulmod(q, b[j], p)) % p;
        trim(a);
    }
    return a;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, u64 p)
{
    while (!b.empty()) {
        ModPoly r = mod_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

ModpScan scan_singular_modp(const BiPoly& poly, std::uint64_t prime)
{
    ModpScan scan;
    scan.prime = prime;
    std::vector<BiPoly> forms;
    for (Var v : {Var::U0, Var::U1, Var::V0, Var::V1}) {
        BiPoly d = poly.partial(v);
        if (!d.empty_space())
            forms.push_back(std::move(d));
    }
    // table[f][i][j] = coefficient mod p
    std::vector<std::vector<std::vector<u64>>> table;
    for (const auto& f : forms) {
        const BiDegree d = f.bidegree();
        std::vector<std::vector<u64>> t(static_cast<std::size_t>(d.a) + 1, std::vector<u64>(static_cast<std::size_t>(d.b) + 1));
        for (int i = 0; i <= d.a; ++i)
            for (int j = 0; j <= d.b; ++j) {
                auto r = reduce_mod(f.coeff(i, j), prime);
                if (!r) {
                    scan.conclusive = false;
                    return scan;
                }
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *r;
            }
        table.push_back(std::move(t));
    }
    // v = (1:x) for x in F_p, then v = (0:1).
    for (u64 x = 0; x <= prime; ++x) {
        const bool at_inf = x == prime;
        bool any = false, top_all_zero = true;
        ModPoly g;
        for (std::size_t f = 0; f < forms.size(); ++f) {
            const BiDegree d = forms[f].bidegree();
            // Binary form in u: index i multiplies u0^(a-i) u1^i; dehomogenize at u1 = 1.
            ModPoly aff(static_cast<std::size_t>(d.a) + 1);
            for (int i = 0; i <= d.a; ++i) {
                u64 val = 0;
                if (at_inf) {
                    val = table[f][static_cast<std::size_t>(i)][static_cast<std::size_t>(d.b)];
                } else {
                    u64 pw = 1;
                    for (int j = 0; j <= d.b; ++j) {
                        val = (val + mulmod(table[f][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], pw, prime)) % prime;
                        pw = mulmod(pw, x, prime);
                    }
                }
                aff[static_cast<std::size_t>(d.a - i)] = val;
            }
            trim(aff);
            if (aff.empty())
                continue;
            any = true;
            // root u = (1:0) needs the u0^a coefficient to vanish
            if (static_cast<int>(aff.size()) - 1 == d.a)
                top_all_zero = false;
            g = g.empty() ? aff : mod_gcd(g, aff, prime);
        }
        if (!any || g.size() >= 2 || top_all_zero)
            ++scan.singular_fibers;
    }
    return scan;
}

}  // namespace canonical24
