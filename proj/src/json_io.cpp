#include "canonical24/json_io.hpp"

namespace canonical24 {

namespace {

const Json& require(const Json& j, const char* key, const std::string& field)
{
    if (!j.is_object())
        throw FormatError(field + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw FormatError(field + "." + key + ": missing");
    return *it;
}

Rational rational_field(const Json& j, const std::string& field)
{
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const FormatError& e) {
            throw FormatError(field + ": " + e.what());
        }
    }
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw FormatError(field + ": expected a rational string");
}

int int_field(const Json& j, const std::string& field)
{
    if (!j.is_number_integer())
        throw FormatError(field + ": expected an integer");
    return j.get<int>();
}

}  // namespace

Json to_json(const BiPoly& p)
{
    const BiDegree d = p.bidegree();
    Json rows = Json::array();
    for (int i = 0; i <= d.a; ++i) {
        Json row = Json::array();
        for (int j = 0; j <= d.b; ++j)
            row.push_back(to_string(p.coeff(i, j)));
        rows.push_back(std::move(row));
    }
    Json out;
    out["bidegree"] = {d.a, d.b};
    out["coeffs"] = std::move(rows);
    return out;
}

Json to_json(const UniPoly& f)
{
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs())
        coeffs.push_back(to_string(c));
    Json out;
    out["degree"] = f.degree();
    out["coeffs"] = std::move(coeffs);
    return out;
}

Json to_json(const BranchConfig& c)
{
    Json out;
    out["seed"] = c.seed;
    out["coeff_bound"] = c.coeff_bound;
    out["delta1"] = to_json(c.delta1);
    out["delta2"] = to_json(c.delta2);
    out["delta3"] = to_json(c.delta3);
    return out;
}

Json to_json(const Certificate& cert)
{
    Json checks = Json::array();
    for (const auto& c : cert.checks) {
        Json entry;
        entry["name"] = c.name;
        entry["pass"] = c.pass;
        entry["witness"] = c.witness;
        checks.push_back(std::move(entry));
    }
    Json out;
    out["pass"] = cert.pass;
    out["checks"] = std::move(checks);
    out["attempts"] = cert.attempts;
    out["res12_degree"] = cert.res12.degree();
    out["res13_degree"] = cert.res13.degree();
    out["res23_degree"] = cert.res23.degree();
    out["res12"] = to_json(cert.res12);
    out["res13"] = to_json(cert.res13);
    out["res23"] = to_json(cert.res23);
    return out;
}

BiPoly bipoly_from_json(const Json& j, const std::string& field)
{
    const Json& deg = require(j, "bidegree", field);
    if (!deg.is_array() || deg.size() != 2)
        throw FormatError(field + ".bidegree: expected [a, b]");
    const BiDegree d{int_field(deg[0], field + ".bidegree[0]"), int_field(deg[1], field + ".bidegree[1]")};
    if (!d.has_sections())
        throw FormatError(field + ".bidegree: negative entry");
    const Json& rows = require(j, "coeffs", field);
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(d.a) + 1)
        throw FormatError(field + ".coeffs: expected " + std::to_string(d.a + 1) + " rows");
    BiPoly p(d);
    for (int i = 0; i <= d.a; ++i) {
        const std::string row_field = field + ".coeffs[" + std::to_string(i) + "]";
        const Json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(d.b) + 1)
            throw FormatError(row_field + ": expected " + std::to_string(d.b + 1) + " entries");
        for (int k = 0; k <= d.b; ++k)
            p.coeff(i, k) = rational_field(row[static_cast<std::size_t>(k)], row_field + "[" + std::to_string(k) + "]");
    }
    return p;
}

UniPoly unipoly_from_json(const Json& j, const std::string& field)
{
    const int degree = int_field(require(j, "degree", field), field + ".degree");
    if (degree < 0)
        throw FormatError(field + ".degree: negative");
    const Json& coeffs = require(j, "coeffs", field);
    if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(degree) + 1)
        throw FormatError(field + ".coeffs: expected degree + 1 entries");
    std::vector<Rational> c;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        c.push_back(rational_field(coeffs[k], field + ".coeffs[" + std::to_string(k) + "]"));
    return UniPoly(degree, std::move(c));
}

BranchConfig config_from_json(const Json& j)
{
    const Json& src = j.contains("config") ? j["config"] : j;
    const std::string base = j.contains("config") ? "config" : "";
    auto name = [&](const char* key) { return base.empty() ? std::string(key) : base + "." + key; };
    BranchConfig c;
    const Json& seed = require(src, "seed", base.empty() ? "config" : base);
    if (!seed.is_number_unsigned())
        throw FormatError(name("seed") + ": expected a nonnegative integer");
    c.seed = seed.get<std::uint64_t>();
    c.coeff_bound = int_field(require(src, "coeff_bound", base.empty() ? "config" : base), name("coeff_bound"));
    c.delta1 = bipoly_from_json(require(src, "delta1", "config"), name("delta1"));
    c.delta2 = bipoly_from_json(require(src, "delta2", "config"), name("delta2"));
    c.delta3 = bipoly_from_json(require(src, "delta3", "config"), name("delta3"));
    if (c.delta1.bidegree() != kD12)
        throw FormatError(name("delta1") + ".bidegree: expected [2, 3]");
    if (c.delta2.bidegree() != kD12)
        throw FormatError(name("delta2") + ".bidegree: expected [2, 3]");
    if (c.delta3.bidegree() != kD3)
        throw FormatError(name("delta3") + ".bidegree: expected [4, 1]");
    for (int i = 1; i <= 3; ++i)
        if (c.delta(i).is_zero())
            throw FormatError(name(("delta" + std::to_string(i)).c_str()) + ": identically zero");
    return c;
}

Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace canonical24
