#pragma once

#include "canonical24/bipoly.hpp"
#include "canonical24/unipoly.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace canonical24 {

/// Branch data of the bidouble cover: delta1, delta2 of bidegree (2,3) and
/// delta3 of bidegree (4,1), plus the sampling metadata that produced them.
struct BranchConfig {
    BiPoly delta1{kD12};
    BiPoly delta2{kD12};
    BiPoly delta3{kD3};
    std::uint64_t seed = 0;
    int coeff_bound = 0;

    /// i in {1, 2, 3}.
    const BiPoly& delta(int i) const;
    /// Throws DomainError on wrong bidegrees or a zero polynomial.
    void validate() const;
    friend bool operator==(const BranchConfig&, const BranchConfig&) = default;
};

/// Pass/fail with a JSON witness explaining the verdict.
struct CheckResult {
    std::string name;
    bool pass = false;
    nlohmann::ordered_json witness;
};

struct Certificate {
    std::vector<CheckResult> checks;
    bool pass = false;
    int attempts = 1;
    UniPoly res12{12}, res13{14}, res23{14};

    const CheckResult* find(const std::string& name) const;
    std::vector<std::string> failed_checks() const;
};

/// Exact smoothness test: no common zero of the four first partials on Q.
/// The witness also carries the mod-p scan, labeled probabilistic.
CheckResult check_smooth_curve(const BiPoly& p, bool with_modp_scan = true);

/// delta3 = v0 alpha(u) + v1 beta(u); passes iff gcd(alpha, beta) = 1, i.e.
/// projection of D3 to the u-line is an isomorphism. Witness holds the gcd.
CheckResult check_d3_graph(const BiPoly& delta3);

/// Sufficient criterion: passes when Res_u or Res_v is squarefree of full degree.
/// Throws DomainError for p == q or when the curves share a component.
CheckResult check_pair_transversal(const BiPoly& p, const BiPoly& q);

/// Sufficient criterion for D1 n D2 n D3 = empty via gcds of eliminants.
CheckResult check_triple_empty(const BranchConfig& c);

/// Res_u(delta1, delta2) has 12 distinct projective roots.
CheckResult check_distinct_v(const BranchConfig& c);

/// Delta(A1(v) : ... : C2(v)) for the decompositions of delta1, delta2.
UniPoly compose_delta_psi(const BranchConfig& c);

/// Runs every check. Overall pass iff each check passes.
Certificate certify(const BranchConfig& c, bool with_modp_scan = true);

/// The configuration drawn at a given attempt index; deterministic per (seed, attempt).
BranchConfig draw_config(std::uint64_t seed, int coeff_bound, std::uint64_t attempt);

struct SampleResult {
    BranchConfig config;
    Certificate certificate;
    int attempts = 0;
};

class SamplingExhausted : public Error {
public:
    SamplingExhausted(int tries, std::map<std::string, int> histogram);
    const std::map<std::string, int>& histogram() const { return histogram_; }
    int tries() const { return tries_; }

private:
    int tries_;
    std::map<std::string, int> histogram_;
};

/// Rejection sampling; returns the passing config with the lowest attempt index.
SampleResult sample_config(std::uint64_t seed, int coeff_bound, int max_tries);

}  // namespace canonical24
