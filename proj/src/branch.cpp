#include "canonical24/branch.hpp"

#include "canonical24/elim.hpp"
#include "canonical24/json_io.hpp"
#include "canonical24/parallel.hpp"
#include "canonical24/singular.hpp"

#include <algorithm>
#include <optional>

namespace canonical24 {

const BiPoly& BranchConfig::delta(int i) const
{
    switch (i) {
    case 1: return delta1;
    case 2: return delta2;
    case 3: return delta3;
    default: throw DomainError("BranchConfig::delta: index must be 1, 2 or 3");
    }
}

void BranchConfig::validate() const
{
    if (delta1.bidegree() != kD12 || delta2.bidegree() != kD12)
        throw DomainError("BranchConfig: delta1 and delta2 must have bidegree (2,3)");
    if (delta3.bidegree() != kD3)
        throw DomainError("BranchConfig: delta3 must have bidegree (4,1)");
    for (int i = 1; i <= 3; ++i)
        if (delta(i).is_zero())
            throw DomainError("BranchConfig: delta" + std::to_string(i) + " is zero");
}

const CheckResult* Certificate::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

std::vector<std::string> Certificate::failed_checks() const
{
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.pass)
            out.push_back(c.name);
    return out;
}

namespace {

Json describe(const UniPoly& f)
{
    Json j;
    j["degree"] = f.degree();
    if (f.is_zero()) {
        j["zero"] = true;
        return j;
    }
    j["distinct_roots"] = distinct_root_count(f);
    j["root_at_infinity_multiplicity"] = f.infinity_multiplicity();
    j["squarefree"] = is_squarefree(f);
    return j;
}

UniPoly nonzero_resultant_u(const BiPoly& p, const BiPoly& q, const char* what)
{
    UniPoly r = sylvester_resultant_u(p, q);
    if (r.is_zero())
        throw DomainError(std::string(what) + ": resultant in u vanishes identically (common component)");
    return r;
}

UniPoly nonzero_resultant_v(const BiPoly& p, const BiPoly& q, const char* what)
{
    UniPoly r = sylvester_resultant_v(p, q);
    if (r.is_zero())
        throw DomainError(std::string(what) + ": resultant in v vanishes identically (common component)");
    return r;
}

}  // namespace

CheckResult check_smooth_curve(const BiPoly& p, bool with_modp_scan)
{
    if (p.is_zero())
        throw DomainError("check_smooth_curve: zero polynomial");
    const std::vector<BiPoly> system{p, p.partial(Var::U0), p.partial(Var::U1), p.partial(Var::V0),
                                     p.partial(Var::V1)};
    const auto zero = find_common_zero(system);
    CheckResult r{"smooth", !zero.has_value(), Json::object()};
    r.witness["method"] = "exact elimination with gcd confirmation";
    if (zero) {
        Json s;
        s["kind"] = zero->kind;
        s["location"] = zero->location;
        s["t_factor"] = zero->t_factor;
        s["s_factor"] = zero->s_factor;
        r.witness["singular_point"] = std::move(s);
    } else {
        r.witness["singular_point"] = nullptr;
    }
    if (with_modp_scan) {
        const ModpScan scan = scan_singular_modp(p);
        Json m;
        m["probabilistic"] = true;
        m["prime"] = scan.prime;
        m["conclusive"] = scan.conclusive;
        m["singular_fibers"] = scan.singular_fibers;
        r.witness["modp_scan"] = std::move(m);
    }
    return r;
}

CheckResult check_d3_graph(const BiPoly& delta3)
{
    if (delta3.bidegree() != kD3)
        throw DomainError("check_d3_graph: expected bidegree (4,1)");
    if (delta3.is_zero())
        throw DomainError("check_d3_graph: zero polynomial");
    std::vector<Rational> alpha(5), beta(5);
    for (int i = 0; i <= 4; ++i) {
        alpha[static_cast<std::size_t>(i)] = delta3.coeff(i, 0);
        beta[static_cast<std::size_t>(i)] = delta3.coeff(i, 1);
    }
    const UniPoly g = uni_gcd(UniPoly(4, alpha), UniPoly(4, beta));
    CheckResult r{"d3_graph", g.degree() == 0, Json::object()};
    r.witness["gcd"] = g.str("u0", "u1");
    r.witness["gcd_degree"] = g.degree();
    return r;
}

CheckResult check_pair_transversal(const BiPoly& p, const BiPoly& q)
{
    if (p == q)
        throw DomainError("check_pair_transversal: the two curves coincide");
    if (p.is_zero() || q.is_zero())
        throw DomainError("check_pair_transversal: zero polynomial");
    const UniPoly ru = nonzero_resultant_u(p, q, "check_pair_transversal");
    const UniPoly rv = nonzero_resultant_v(p, q, "check_pair_transversal");
    const bool su = is_squarefree(ru);
    const bool sv = is_squarefree(rv);
    CheckResult r{"transversal", su || sv, Json::object()};
    r.witness["res_u"] = describe(ru);
    r.witness["res_v"] = describe(rv);
    r.witness["criterion"] = su ? "res_u squarefree" : (sv ? "res_v squarefree" : "none");
    return r;
}

CheckResult check_triple_empty(const BranchConfig& c)
{
    const UniPoly g_u = uni_gcd(nonzero_resultant_u(c.delta1, c.delta2, "check_triple_empty"),
                                nonzero_resultant_u(c.delta1, c.delta3, "check_triple_empty"));
    CheckResult r{"triple_empty", g_u.degree() == 0, Json::object()};
    r.witness["gcd_res_u_degree"] = g_u.degree();
    if (!r.pass) {
        const UniPoly g_v = uni_gcd(nonzero_resultant_v(c.delta1, c.delta2, "check_triple_empty"),
                                    nonzero_resultant_v(c.delta1, c.delta3, "check_triple_empty"));
        r.pass = g_v.degree() == 0;
        r.witness["gcd_res_v_degree"] = g_v.degree();
        if (!r.pass) {
            r.witness["gcd_res_u"] = g_u.str();
            r.witness["gcd_res_v"] = g_v.str("u0", "u1");
        }
    }
    return r;
}

CheckResult check_distinct_v(const BranchConfig& c)
{
    const UniPoly f = nonzero_resultant_u(c.delta1, c.delta2, "check_distinct_v");
    CheckResult r{"distinct_v_on_D1capD2", f.degree() == 12 && is_squarefree(f), Json::object()};
    r.witness["res12"] = describe(f);
    return r;
}

UniPoly compose_delta_psi(const BranchConfig& c)
{
    if (c.delta1.bidegree() != kD12 || c.delta2.bidegree() != kD12)
        throw DomainError("compose_delta_psi: delta1 and delta2 must have bidegree (2,3)");
    return closed_form_delta(decompose_quadratic(c.delta1), decompose_quadratic(c.delta2));
}

Certificate certify(const BranchConfig& c, bool with_modp_scan)
{
    c.validate();
    Certificate cert;
    auto run = [&](const std::string& name, auto&& fn) {
        CheckResult r;
        try {
            r = fn();
        } catch (const DomainError& e) {
            r.pass = false;
            r.witness = Json::object();
            r.witness["error"] = e.what();
        }
        r.name = name;
        cert.checks.push_back(std::move(r));
    };
    for (int i = 1; i <= 3; ++i)
        run("smooth_D" + std::to_string(i), [&] { return check_smooth_curve(c.delta(i), with_modp_scan); });
    run("d3_graph", [&] { return check_d3_graph(c.delta3); });
    const std::pair<int, int> pairs[] = {{1, 2}, {1, 3}, {2, 3}};
    for (auto [i, j] : pairs)
        run("transversal_" + std::to_string(i) + std::to_string(j),
            [&] { return check_pair_transversal(c.delta(i), c.delta(j)); });
    run("triple_empty", [&] { return check_triple_empty(c); });
    run("distinct_v_on_D1capD2", [&] { return check_distinct_v(c); });

    cert.res12 = sylvester_resultant_u(c.delta1, c.delta2);
    cert.res13 = sylvester_resultant_u(c.delta1, c.delta3);
    cert.res23 = sylvester_resultant_u(c.delta2, c.delta3);
    run("res12_equals_delta_psi", [&] {
        CheckResult r{"", compose_delta_psi(c) == cert.res12, Json::object()};
        r.witness["degree"] = cert.res12.degree();
        return r;
    });
    cert.pass = std::all_of(cert.checks.begin(), cert.checks.end(), [](const CheckResult& r) { return r.pass; });
    return cert;
}

BranchConfig draw_config(std::uint64_t seed, int coeff_bound, std::uint64_t attempt)
{
    if (coeff_bound < 1)
        throw DomainError("draw_config: coeff_bound must be at least 1");
    Rng rng = derive_rng(seed, 0, attempt);
    BranchConfig c;
    c.seed = seed;
    c.coeff_bound = coeff_bound;
    c.delta1 = random_bipoly(kD12, coeff_bound, rng);
    c.delta2 = random_bipoly(kD12, coeff_bound, rng);
    c.delta3 = random_bipoly(kD3, coeff_bound, rng);
    return c;
}

SamplingExhausted::SamplingExhausted(int tries, std::map<std::string, int> histogram)
    : Error("sampling exhausted after " + std::to_string(tries) + " tries"), tries_(tries),
      histogram_(std::move(histogram))
{
}

SampleResult sample_config(std::uint64_t seed, int coeff_bound, int max_tries)
{
    if (max_tries < 1)
        throw DomainError("sample_config: max_tries must be at least 1");
    if (coeff_bound < 1)
        throw DomainError("sample_config: coeff_bound must be at least 1");
    std::map<std::string, int> histogram;
    const int batch = static_cast<int>(worker_count());
    for (int start = 0; start < max_tries; start += batch) {
        const int n = std::min(batch, max_tries - start);
        std::vector<std::optional<Certificate>> certs(static_cast<std::size_t>(n));
        std::vector<BranchConfig> configs(static_cast<std::size_t>(n));
        parallel_for(static_cast<std::size_t>(n), [&](std::size_t k) {
            configs[k] = draw_config(seed, coeff_bound, static_cast<std::uint64_t>(start) + k);
            try {
                certs[k] = certify(configs[k], false);
            } catch (const DomainError&) {
                certs[k] = std::nullopt;  // a zero branch polynomial
            }
        });
        for (int k = 0; k < n; ++k) {
            const auto& cert = certs[static_cast<std::size_t>(k)];
            if (cert && cert->pass) {
                SampleResult out;
                out.config = configs[static_cast<std::size_t>(k)];
                out.attempts = start + k + 1;
                out.certificate = certify(out.config, true);
                out.certificate.attempts = out.attempts;
                if (!out.certificate.pass)
                    throw InternalError("sample_config: certificate changed between runs");
                return out;
            }
            if (!cert)
                ++histogram["invalid"];
            else
                for (const auto& name : cert->failed_checks())
                    ++histogram[name];
        }
    }
    throw SamplingExhausted(max_tries, std::move(histogram));
}

}  // namespace canonical24
