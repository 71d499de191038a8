#include "canonical24/cli.hpp"

#include "canonical24/canring.hpp"
#include "canonical24/cover.hpp"
#include "canonical24/json_io.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace canonical24 {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Writes next to the target and renames, so readers never see a partial file.
void write_atomic(const std::string& path, const std::string& text)
{
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + path);
        out << text;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("cannot write " + path);
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("cannot write " + path);
    }
}

/// Output goes to the file when a path is given, else to stdout.
void emit(const Json& doc, const std::string& path, std::ostream& out)
{
    if (path.empty())
        out << dump(doc);
    else
        write_atomic(path, dump(doc));
}

Json tolerances_json(const Tolerances& t)
{
    Json j;
    j["tol_fiber"] = t.fiber;
    j["tol_zero"] = t.zero;
    j["tol_rank"] = t.rank;
    j["tol_sep"] = t.sep;
    j["tol_nonzero"] = t.nonzero;
    j["fd_step"] = t.fd_step;
    return j;
}

struct Manifest {
    std::string command;
    std::uint64_t seed = 0;
    int coeff_bound = 0;
    std::string input;
    std::string output;
    Json tolerances = tolerances_json(Tolerances{});
    Json parameters = Json::object();
    bool timing = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Json to_json() const
    {
        Json j;
        j["command"] = command;
        j["seed"] = seed;
        j["coeff_bound"] = coeff_bound;
        j["parameters"] = parameters;
        j["tolerances"] = tolerances;
        j["input"] = input;
        j["output"] = output;
        j["library_version"] = kLibraryVersion;
        if (timing)
            j["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return j;
    }
};

Json document(const Manifest& m)
{
    Json j;
    j["format"] = kFormatTag;
    j["manifest"] = m.to_json();
    return j;
}

BranchConfig load_config(const std::string& path)
{
    return config_from_json(parse_json_text(read_file(path)));
}

Json ring_element_json(const RingElement& e)
{
    Json comps = Json::object();
    for (const auto& [mask, p] : e.components)
        comps[slot_name(mask)] = to_json(p);
    Json j;
    j["degree"] = e.degree;
    j["components"] = std::move(comps);
    return j;
}

std::string quadric_text(const std::vector<Rational>& kernel, const std::vector<std::vector<int>>& monos)
{
    // Scaled so that the first nonzero coefficient is 1.
    Rational lead = 0;
    for (const auto& c : kernel)
        if (c != 0) {
            lead = c;
            break;
        }
    std::string s;
    for (std::size_t k = 0; k < kernel.size(); ++k) {
        if (kernel[k] == 0)
            continue;
        const Rational c = kernel[k] / lead;
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (a != 1)
            s += to_string(a) + "*";
        s += "x" + std::to_string(monos[k][0] + 1) + "*x" + std::to_string(monos[k][1] + 1);
    }
    return s.empty() ? "0" : s;
}

struct Golden {
    Json mismatches = Json::array();

    void expect(const std::string& name, const Json& expected, const Json& computed)
    {
        if (expected != computed) {
            Json m;
            m["name"] = name;
            m["expected"] = expected;
            m["computed"] = computed;
            mismatches.push_back(std::move(m));
        }
    }
};

// Reference values of the family, checked by `ring`.
constexpr long kGoldenHR[] = {11, 29, 46, 51, 31};  // m = 2..6

Json numerology_json(const Numerology& n)
{
    Json j;
    j["pg"] = n.pg;
    j["q"] = n.q;
    j["chi"] = n.chi;
    j["K2"] = n.K2;
    j["castelnuovo_lower"] = n.castelnuovo_lower;
    j["bmy_upper"] = n.bmy_upper;
    j["expected_moduli_dim"] = n.expected_moduli_dim;
    j["family_parts"] = n.family_parts;
    j["family_dim"] = n.family_dim;
    j["aut_Q_dim"] = n.aut_Q_dim;
    j["moduli_dim"] = n.moduli_dim;
    return j;
}

Json severi_json(const std::vector<SeveriSolution>& sols)
{
    Json arr = Json::array();
    for (const auto& s : sols) {
        Json j;
        j["d"] = s.d;
        j["chi"] = s.chi;
        j["excluded"] = s.excluded;
        arr.push_back(std::move(j));
    }
    return arr;
}

// ---------------------------------------------------------------------------

int cmd_sample(std::uint64_t seed, int bound, int max_tries, const std::string& output, bool timing,
               std::ostream& out, std::ostream& err)
{
    if (bound < 1 || max_tries < 1) {
        err << "sample: --coeff-bound and --max-tries must be at least 1\n";
        return kExitUsage;
    }
    Manifest m;
    m.command = "sample";
    m.seed = seed;
    m.coeff_bound = bound;
    m.output = output;
    m.parameters["max_tries"] = max_tries;
    m.timing = timing;
    try {
        const SampleResult r = sample_config(seed, bound, max_tries);
        Json doc = document(m);
        doc["config"] = to_json(r.config);
        doc["certificate"] = to_json(r.certificate);
        if (timing)
            doc["manifest"] = m.to_json();
        emit(doc, output, out);
        if (!output.empty())
            out << "sample: certified configuration after " << r.attempts << " attempt(s) -> " << output << "\n";
        return kExitOk;
    } catch (const SamplingExhausted& e) {
        Json h = Json::object();
        for (const auto& [name, count] : e.histogram())
            h[name] = count;
        err << "sample: " << e.what() << "; failures per check: " << h.dump() << "\n";
        return kExitExhausted;
    }
}

int cmd_verify(const std::string& input, const std::string& report, bool timing, std::ostream& out,
               std::ostream& err)
{
    const BranchConfig cfg = load_config(input);
    Manifest m;
    m.command = "verify";
    m.seed = cfg.seed;
    m.coeff_bound = cfg.coeff_bound;
    m.input = input;
    m.output = report;
    m.timing = timing;
    const Certificate cert = certify(cfg);
    Json doc = document(m);
    doc["config"] = to_json(cfg);
    doc["certificate"] = to_json(cert);
    emit(doc, report, out);
    if (!cert.pass) {
        err << "verify: failing checks:";
        for (const auto& name : cert.failed_checks())
            err << " " << name;
        err << "\n";
        return kExitCheckFailed;
    }
    if (!report.empty())
        out << "verify: all checks pass\n";
    return kExitOk;
}

int cmd_ring(const std::string& input, int max_degree, const std::string& report, bool timing, std::ostream& out,
             std::ostream& err)
{
    if (max_degree < 3) {
        err << "ring: --max-degree must be at least 3\n";
        return kExitUsage;
    }
    const BranchConfig cfg = load_config(input);
    const Certificate cert = certify(cfg, false);
    if (!cert.pass) {
        err << "ring: configuration is not certified; failing checks:";
        for (const auto& name : cert.failed_checks())
            err << " " << name;
        err << "\n";
        return kExitUncertified;
    }
    Manifest m;
    m.command = "ring";
    m.seed = cfg.seed;
    m.coeff_bound = cfg.coeff_bound;
    m.input = input;
    m.output = report;
    m.parameters["max_degree"] = max_degree;
    m.timing = timing;

    const RingContext ctx(cfg);
    Golden golden;
    Json doc = document(m);

    Json dims = Json::object();
    Json slot_dims = Json::object();
    for (int d = 0; d <= max_degree; ++d) {
        dims[std::to_string(d)] = dim_R(d);
        Json slots = Json::object();
        for (const auto& r : slot_ranges(d))
            slots[slot_name(r.mask)] = r.length;
        slot_dims[std::to_string(d)] = slots;
        if (d >= 1)
            golden.expect("slot_dim_sum[" + std::to_string(d) + "]", dim_R(d), slot_dim_sum(d));
    }
    golden.expect("dims[1]", 6, dims["1"]);
    golden.expect("dims[2]", 31, dims["2"]);
    golden.expect("dims[3]", 79, dims["3"]);
    doc["dims"] = dims;
    doc["slot_dims"] = slot_dims;

    const M2Report m2 = analyze_m2(ctx);
    Json jm2;
    jm2["rows"] = m2.map.target_dim;
    jm2["cols"] = m2.map.source_dim;
    jm2["rank"] = m2.rank;
    jm2["kernel_dim"] = m2.kernel_dim;
    jm2["quadric"] = m2.kernel_dim == 1 ? quadric_text(m2.kernel_vector, ctx.sym_monomials(2)) : "";
    jm2["kernel_is_quadric"] = m2.kernel_is_quadric;
    std::size_t cokernel = 0;
    Json by_slot = Json::object();
    for (const auto& [name, c] : m2.cokernel_by_slot) {
        by_slot[name] = c;
        cokernel += c;
    }
    jm2["cokernel_dim"] = cokernel;
    jm2["cokernel_by_slot"] = by_slot;
    golden.expect("m2.rank", 20, m2.rank);
    golden.expect("m2.kernel_dim", 1, m2.kernel_dim);
    golden.expect("m2.kernel_is_quadric", true, m2.kernel_is_quadric);
    golden.expect("m2.cokernel_dim", 11, cokernel);
    golden.expect("m2.cokernel_trivial_slot", 11, m2.cokernel_by_slot.at("1"));
    doc["m2"] = jm2;

    const WLemmaReport w = check_W_lemma(ctx);
    Json jw;
    jw["rows"] = w.rows;
    jw["cols"] = w.cols;
    jw["rank"] = w.rank;
    jw["rank_transposed"] = w.rank_transposed;
    golden.expect("w_lemma.rank", 9, w.rank);
    golden.expect("w_lemma.rank_transposed", 9, w.rank_transposed);
    doc["w_lemma"] = jw;

    const auto gens = choose_generators(ctx);
    Json jg = Json::array();
    for (const auto& g : gens)
        jg.push_back(ring_element_json(g));
    golden.expect("generators", 11, gens.size());
    doc["generators"] = jg;

    const RelationReport rel = relation_count_deg3(ctx, gens);
    doc["relations_deg3"] = rel.kernel_dim;
    Json jr;
    jr["dim_A3"] = rel.dim_A3;
    jr["source_dim"] = rel.source_dim;
    jr["target_dim"] = rel.target_dim;
    jr["rank"] = rel.rank;
    doc["relations"] = jr;
    golden.expect("relations_deg3", 43, rel.kernel_dim);
    golden.expect("dim_A3", 56, rel.dim_A3);
    golden.expect("relations.rank", 79, rel.rank);

    Json gen = Json::object();
    for (const auto& e : generation_check(ctx, gens, max_degree)) {
        gen[std::to_string(e.m)] = e.pass;
        golden.expect("generation[" + std::to_string(e.m) + "]", true, e.pass);
    }
    doc["generation"] = gen;

    Json hr = Json::array();
    for (const auto& b : hartshorne_rao_bounds(max_degree, &ctx)) {
        Json j;
        j["m"] = b.m;
        j["dimA"] = b.dim_A;
        j["image_bound"] = b.image_bound;
        j["dimR"] = b.dim_R;
        j["h1_lower"] = b.h1_lower;
        j["forced"] = b.forced;
        j["image_rank"] = b.image_rank;
        j["h1"] = b.h1_exact;
        hr.push_back(std::move(j));
        golden.expect("hr_bounds[" + std::to_string(b.m) + "].forced", b.m >= 2 && b.m <= 6, b.forced);
        if (b.m >= 2 && b.m <= 6)
            golden.expect("hr_bounds[" + std::to_string(b.m) + "].h1_lower", kGoldenHR[b.m - 2], b.h1_lower);
    }
    doc["hr_bounds"] = hr;

    const Numerology n = numerology();
    doc["numerology"] = numerology_json(n);
    golden.expect("numerology.K2", 24, n.K2);
    golden.expect("numerology.chi", 7, n.chi);
    golden.expect("numerology.family_dim", 31, n.family_dim);
    golden.expect("numerology.moduli_dim", 25, n.moduli_dim);
    golden.expect("numerology.expected_moduli_dim", 22, n.expected_moduli_dim);
    doc["severi"] = severi_json(severi_solutions());

    Json jgold;
    jgold["pass"] = golden.mismatches.empty();
    jgold["mismatches"] = golden.mismatches;
    doc["golden"] = jgold;
    if (timing)
        doc["manifest"] = m.to_json();
    emit(doc, report, out);
    if (!golden.mismatches.empty()) {
        err << "ring: golden value mismatch\n";
        for (const auto& mm : golden.mismatches)
            err << "  " << mm["name"].get<std::string>() << ": expected " << mm["expected"].dump() << ", computed "
                << mm["computed"].dump() << "\n";
        return kExitCheckFailed;
    }
    if (!report.empty())
        out << "ring: all golden values match (relations_deg3 = " << rel.kernel_dim << ")\n";
    return kExitOk;
}

int cmd_probe(const std::string& input, long samples, long pairs, std::uint64_t seed, const std::string& report,
              bool timing, std::ostream& out, std::ostream& err)
{
    if (samples <= 0 || pairs <= 0) {
        err << "probe: --samples and --pairs must be positive\n";
        return kExitUsage;
    }
    const BranchConfig cfg = load_config(input);
    const NumericCover cover(cfg);
    Manifest m;
    m.command = "probe";
    m.seed = seed;
    m.coeff_bound = cfg.coeff_bound;
    m.input = input;
    m.output = report;
    m.tolerances = tolerances_json(cover.tolerances());
    m.parameters["samples"] = samples;
    m.parameters["pairs"] = pairs;
    m.timing = timing;

    Json probes = Json::array();
    std::size_t failures = 0;
    auto run = [&](const char* name, auto&& fn) {
        try {
            const ProbeReport r = fn();
            failures += r.failures.size();
            probes.push_back(r.to_json());
        } catch (const DomainError& e) {
            Json j;
            j["probe"] = name;
            j["samples"] = 0;
            Json f;
            f["reason"] = e.what();
            j["failures"] = Json::array({f});
            ++failures;
            probes.push_back(std::move(j));
        }
    };
    const ProbeOptions by_samples{static_cast<std::size_t>(samples), seed};
    const ProbeOptions by_pairs{static_cast<std::size_t>(pairs), seed};
    run("basepoint_free", [&] { return basepoint_free_probe(cover, by_samples); });
    run("jacobian_rank", [&] { return jacobian_rank_probe(cover, by_samples); });
    run("injectivity", [&] { return injectivity_probe(cover, by_pairs); });

    Json doc = document(m);
    doc["probes"] = probes;
    doc["pass"] = failures == 0;
    if (timing)
        doc["manifest"] = m.to_json();
    emit(doc, report, out);
    if (failures) {
        err << "probe: " << failures << " failure(s)\n";
        for (const auto& p : probes)
            for (const auto& f : p["failures"])
                err << "  " << p["probe"].get<std::string>() << ": " << f.dump() << "\n";
        return kExitCheckFailed;
    }
    if (!report.empty())
        out << "probe: no failures\n";
    return kExitOk;
}

int cmd_numerology(bool as_json, std::ostream& out)
{
    const Numerology n = numerology();
    const auto sev = severi_solutions();
    if (as_json) {
        Json doc;
        doc["format"] = kFormatTag;
        doc["numerology"] = numerology_json(n);
        doc["severi"] = severi_json(sev);
        out << dump(doc);
        return kExitOk;
    }
    out << "K2=" << n.K2 << "\n"
        << "pg=" << n.pg << "\n"
        << "q=" << n.q << "\n"
        << "chi=" << n.chi << "\n"
        << "castelnuovo_lower=" << n.castelnuovo_lower << "\n"
        << "bmy_upper=" << n.bmy_upper << "\n"
        << "expected_moduli_dim=" << n.expected_moduli_dim << "\n"
        << "family_dim=" << n.family_dim << " (" << n.family_parts[0] << "+" << n.family_parts[1] << "+"
        << n.family_parts[2] << ")\n"
        << "moduli_dim=" << n.moduli_dim << "\n";
    out << "severi:";
    for (const auto& s : sev)
        out << " (" << s.d << "," << s.chi << (s.excluded ? " excluded" : "") << ")";
    out << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bidouble covers of P1 x P1 with K^2 = 24: sampling, certification, ring and probes"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "Record wall time in the manifest (output is then not reproducible)");

    std::uint64_t seed = 1;
    int bound = 10, max_tries = 100, max_degree = 6;
    long samples = 500, pairs = 1000;
    std::string output, input, report;
    bool as_json = false;

    auto* sample = app.add_subcommand("sample", "Draw and certify a branch configuration");
    sample->add_option("--seed", seed, "Random seed")->capture_default_str();
    sample->add_option("--coeff-bound", bound, "Coefficients lie in [-bound, bound]")->capture_default_str();
    sample->add_option("--max-tries", max_tries, "Attempts before giving up")->capture_default_str();
    sample->add_option("-o,--output", output, "Output file (stdout when omitted)");

    auto* verify = app.add_subcommand("verify", "Re-run every certificate check on a configuration");
    verify->add_option("config", input, "Configuration JSON")->required();
    verify->add_option("--report", report, "Report file (stdout when omitted)");

    auto* ring = app.add_subcommand("ring", "Canonical ring analysis with golden-value comparison");
    ring->add_option("config", input, "Configuration JSON")->required();
    ring->add_option("--max-degree", max_degree, "Largest degree for the generation check")->capture_default_str();
    ring->add_option("--report", report, "Report file (stdout when omitted)");

    auto* probe = app.add_subcommand("probe", "Numeric checks of the canonical map");
    probe->add_option("config", input, "Configuration JSON")->required();
    probe->add_option("--samples", samples, "Samples per stratum")->capture_default_str();
    probe->add_option("--pairs", pairs, "Random pairs for the injectivity probe")->capture_default_str();
    probe->add_option("--seed", seed, "Probe seed")->capture_default_str();
    probe->add_option("--report", report, "Report file (stdout when omitted)");

    auto* numer = app.add_subcommand("numerology", "Invariants of the family and Severi solutions");
    numer->add_flag("--json", as_json, "Print JSON instead of key=value lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*sample)
            return cmd_sample(seed, bound, max_tries, output, timing, out, err);
        if (*verify)
            return cmd_verify(input, report, timing, out, err);
        if (*ring)
            return cmd_ring(input, max_degree, report, timing, out, err);
        if (*probe)
            return cmd_probe(input, samples, pairs, seed, report, timing, out, err);
        return cmd_numerology(as_json, out);
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace canonical24
