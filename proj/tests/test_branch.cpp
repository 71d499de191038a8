#include "doctest.h"

#include "canonical24/branch.hpp"
#include "canonical24/elim.hpp"
#include "canonical24/json_io.hpp"
#include "canonical24/singular.hpp"
#include "fixtures.hpp"

#include <cstdint>

using namespace canonical24;

namespace {

// Brute-force oracle over F_p: number of v in P^1(F_p) above which p and all
// four partials share a zero in P^1(F_p) x P^1(F_p).
std::int64_t mod(const Rational& q, std::int64_t prime)
{
    const std::int64_t num = Integer(q.get_num() % prime).get_si();
    const std::int64_t den = Integer(q.get_den() % prime).get_si();
    // den is invertible for the small integer inputs used here.
    std::int64_t inv = 1, base = (den % prime + prime) % prime;
    for (std::int64_t e = prime - 2; e > 0; e >>= 1) {
        if (e & 1)
            inv = inv * base % prime;
        base = base * base % prime;
    }
    return ((num % prime + prime) % prime) * inv % prime;
}

std::int64_t eval_mod(const BiPoly& p, std::int64_t u0, std::int64_t u1, std::int64_t v0, std::int64_t v1,
                      std::int64_t prime)
{
    const BiDegree d = p.bidegree();
    if (!d.has_sections())
        return 0;
    std::int64_t sum = 0;
    for (int i = 0; i <= d.a; ++i)
        for (int j = 0; j <= d.b; ++j) {
            std::int64_t term = mod(p.coeff(i, j), prime);
            for (int k = 0; k < d.a - i; ++k)
                term = term * u0 % prime;
            for (int k = 0; k < i; ++k)
                term = term * u1 % prime;
            for (int k = 0; k < d.b - j; ++k)
                term = term * v0 % prime;
            for (int k = 0; k < j; ++k)
                term = term * v1 % prime;
            sum = (sum + term) % prime;
        }
    return sum;
}

int brute_force_singular_fibers(const BiPoly& p, std::int64_t prime)
{
    const std::vector<BiPoly> forms{p.partial(Var::U0), p.partial(Var::U1), p.partial(Var::V0), p.partial(Var::V1)};
    std::vector<std::pair<std::int64_t, std::int64_t>> line;
    for (std::int64_t x = 0; x < prime; ++x)
        line.emplace_back(x, 1);
    line.emplace_back(1, 0);
    int fibers = 0;
    for (const auto& [v0, v1] : line) {
        bool hit = false;
        for (const auto& [u0, u1] : line) {
            bool all = true;
            for (const auto& f : forms)
                if (eval_mod(f, u0, u1, v0, v1, prime) != 0) {
                    all = false;
                    break;
                }
            if (all) {
                hit = true;
                break;
            }
        }
        fibers += hit;
    }
    return fibers;
}

// A (2,3) form with a node at u = (s : 1), v = (t : 1).
BiPoly planted_node(std::uint64_t seed, const Rational& s, const Rational& t)
{
    Rng rng = derive_rng(seed, 40);
    const BiPoly lu = BiPoly::u0() - s * BiPoly::u1();
    const BiPoly lv = BiPoly::v0() - t * BiPoly::v1();
    return lu * lu * random_bipoly({0, 3}, 6, rng) + lv * lv * random_bipoly({2, 1}, 6, rng) +
           lu * lv * random_bipoly({1, 2}, 6, rng);
}

}  // namespace

TEST_CASE("smoothness examples")
{
    const CheckResult r = check_smooth_curve(BiPoly::monomial(kD12, 0, 0));
    CHECK_FALSE(r.pass);
    CHECK(r.witness.contains("singular_point"));
    CHECK(r.witness["modp_scan"]["probabilistic"] == true);

    // u0^2 v0^3 + u1^2 v1^3 + u0 u1 (v0^3 + v1^3).
    BiPoly p(kD12);
    p.coeff(0, 0) = 1;
    p.coeff(2, 3) = 1;
    p.coeff(1, 0) = 1;
    p.coeff(1, 3) = 1;
    const CheckResult q = check_smooth_curve(p);
    CHECK(q.pass == (brute_force_singular_fibers(p, 101) == 0));

    const BranchConfig bad = fixtures::planted_d3_non_graph(5);
    CHECK_FALSE(check_smooth_curve(bad.delta3).pass);
    CHECK_THROWS_AS(check_smooth_curve(BiPoly(kD12)), DomainError);
}

TEST_CASE("planted nodes are found exactly")
{
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const BiPoly p = planted_node(seed, Rational(static_cast<long>(seed) - 3, 2), 5);
        CHECK_FALSE(check_smooth_curve(p, false).pass);
    }
}

TEST_CASE("exact verdict agrees with a brute-force mod-p oracle")
{
    const std::int64_t prime = 101;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const BranchConfig c = fixtures::certified(seed);
        for (int i = 1; i <= 3; ++i) {
            const int fibers = brute_force_singular_fibers(c.delta(i), prime);
            const ModpScan scan = scan_singular_modp(c.delta(i), prime);
            CHECK(scan.singular_fibers == fibers);
            CHECK(check_smooth_curve(c.delta(i), false).pass);
            // A singular reduction of a smooth curve is possible but rare.
            CHECK(fibers <= 1);
        }
        const BiPoly node = planted_node(seed, 1, -1);
        CHECK(brute_force_singular_fibers(node, prime) >= 1);
        CHECK(scan_singular_modp(node, prime).singular_fibers == brute_force_singular_fibers(node, prime));
    }
}

TEST_CASE("d3 graph examples")
{
    BiPoly g(kD3);
    g.coeff(0, 0) = 1;  // v0 u0^4
    g.coeff(4, 1) = 1;  // v1 u1^4
    CHECK(check_d3_graph(g).pass);

    const BiPoly h = BiPoly::monomial({4, 0}, 0, 0) * (BiPoly::v0() + BiPoly::v1());
    const CheckResult r = check_d3_graph(h);
    CHECK_FALSE(r.pass);
    CHECK(r.witness["gcd_degree"] == 4);

    Rng rng = derive_rng(12, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const BiPoly d3 = random_bipoly(kD3, 10, rng);
        // Oracle: Res(alpha, beta) != 0, alpha = column 0, beta = column 1.
        std::vector<DensePoly> alpha, beta;
        for (int i = 0; i <= 4; ++i) {
            alpha.emplace_back(d3.coeff(i, 0));
            beta.emplace_back(d3.coeff(i, 1));
        }
        CHECK(check_d3_graph(d3).pass == !sylvester_resultant(alpha, beta).is_zero());
    }
    CHECK_THROWS_AS(check_d3_graph(BiPoly(kD12)), DomainError);
}

TEST_CASE("pair transversality examples")
{
    const BranchConfig c = fixtures::certified(3);
    CHECK(check_pair_transversal(c.delta1, c.delta2).pass);
    CHECK(sylvester_resultant_u(c.delta1, c.delta2).degree() == 2 * 3 + 3 * 2);
    CHECK(sylvester_resultant_u(c.delta1, c.delta3).degree() == 2 * 1 + 3 * 4);
    CHECK_THROWS_AS(check_pair_transversal(c.delta1, c.delta1), DomainError);
    // Common component: the resultant vanishes identically.
    const BiPoly lu = BiPoly::u0() - BiPoly::u1();
    Rng rng = derive_rng(3, 3);
    CHECK_THROWS_AS(check_pair_transversal(lu * random_bipoly({1, 3}, 5, rng), lu * random_bipoly({1, 3}, 5, rng)),
                    DomainError);
}

TEST_CASE("triple intersection")
{
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const BranchConfig bad = fixtures::planted_common_point(seed);
        for (int i = 1; i <= 3; ++i)
            REQUIRE(bad.delta(i).eval(QPoint::make(2, 1, 3, 1)) == 0);
        CHECK_FALSE(check_triple_empty(bad).pass);
        CHECK_FALSE(certify(bad, false).pass);
    }
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const BranchConfig c = fixtures::certified(seed);
        CHECK(check_triple_empty(c).pass);
        // Oracle: the two eliminants share no root.
        const UniPoly g = uni_gcd(sylvester_resultant_u(c.delta1, c.delta2), sylvester_resultant_u(c.delta1, c.delta3));
        const UniPoly h = uni_gcd(sylvester_resultant_v(c.delta1, c.delta2), sylvester_resultant_v(c.delta1, c.delta3));
        CHECK((g.degree() == 0 || h.degree() == 0));
    }
}

TEST_CASE("distinct v-coordinates")
{
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const BranchConfig bad = fixtures::planted_equal_v(seed);
        const UniPoly f = sylvester_resultant_u(bad.delta1, bad.delta2);
        CHECK(f.eval(3, 1) == 0);
        CHECK_FALSE(is_squarefree(f));
        CHECK_FALSE(check_distinct_v(bad).pass);
        const Certificate cert = certify(bad, false);
        CHECK_FALSE(cert.pass);
        CHECK(cert.find("distinct_v_on_D1capD2") != nullptr);
        CHECK_FALSE(cert.find("distinct_v_on_D1capD2")->pass);
    }
}

TEST_CASE("compose_delta_psi equals the Sylvester resultant")
{
    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        const BranchConfig c = draw_config(17, 10, attempt);
        CHECK(compose_delta_psi(c) == sylvester_resultant_u(c.delta1, c.delta2));
    }
    BranchConfig same = draw_config(1, 10, 0);
    same.delta2 = same.delta1;
    CHECK(compose_delta_psi(same).is_zero());

    const BranchConfig planted = fixtures::planted_common_point(4);
    CHECK(compose_delta_psi(planted).eval(3, 1) == 0);
}

TEST_CASE("certificate structure and invariants on sampled configurations")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const SampleResult r = sample_config(seed, 10, 100);
        const Certificate& cert = r.certificate;
        CHECK(cert.pass);
        CHECK(cert.attempts == r.attempts);
        bool all = true;
        for (const auto& check : cert.checks)
            all = all && check.pass;
        CHECK(all == cert.pass);
        for (const char* name : {"smooth_D1", "smooth_D2", "smooth_D3", "transversal_12", "transversal_13",
                                 "transversal_23", "triple_empty", "distinct_v_on_D1capD2", "d3_graph"})
            CHECK(cert.find(name) != nullptr);
        CHECK(cert.res12.degree() == 12);
        CHECK(cert.res13.degree() == 14);
        CHECK(cert.res23.degree() == 14);
        CHECK(is_squarefree(cert.res12));
        CHECK(cert.res12 == compose_delta_psi(r.config));
        CHECK(cert.find("smooth_D1")->witness["modp_scan"]["probabilistic"] == true);
    }
}

TEST_CASE("distinct_v implies transversal_12 on sampled configurations")
{
    int distinct = 0;
    for (std::uint64_t attempt = 0; attempt < 60; ++attempt) {
        const BranchConfig c = draw_config(23, 10, attempt);
        if (check_distinct_v(c).pass) {
            ++distinct;
            CHECK(check_pair_transversal(c.delta1, c.delta2).pass);
        }
    }
    CHECK(distinct > 0);
}

TEST_CASE("sampling determinism and exhaustion")
{
    const SampleResult a = sample_config(1, 5, 100);
    const SampleResult b = sample_config(1, 5, 100);
    CHECK(a.config == b.config);
    CHECK(a.attempts == b.attempts);
    CHECK(a.attempts <= 30);
    CHECK(dump(to_json(a.certificate)) == dump(to_json(b.certificate)));

    // Bound 1 makes degenerate draws common; search for a seed whose first draw fails.
    std::uint64_t seed = 1;
    while (certify(draw_config(seed, 1, 0), false).pass)
        ++seed;
    try {
        sample_config(seed, 1, 1);
        FAIL("expected exhaustion");
    } catch (const SamplingExhausted& e) {
        CHECK(e.tries() == 1);
        int total = 0;
        for (const auto& [name, count] : e.histogram())
            total += count;
        CHECK(total >= 1);
    }
}

TEST_CASE("acceptance rate over 200 seeds exceeds one half")
{
    int pass = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed)
        pass += certify(draw_config(seed, 10, 0), false).pass;
    MESSAGE("accepted " << pass << " of 200");
    CHECK(pass > 100);
}

TEST_CASE("json round trip and field errors")
{
    const BranchConfig c = fixtures::certified(2);
    const Json j = to_json(c);
    CHECK(config_from_json(j) == c);
    CHECK(config_from_json(parse_json_text(dump(j))) == c);

    Json broken = j;
    broken["delta2"]["coeffs"][1][0] = "x/0";
    try {
        config_from_json(broken);
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("delta2.coeffs[1][0]") != std::string::npos);
    }
    Json wrong = j;
    wrong["delta3"]["bidegree"] = Json::array({2, 3});
    CHECK_THROWS_AS(config_from_json(wrong), FormatError);
    CHECK_THROWS_AS(parse_json_text("{ not json"), FormatError);
}
