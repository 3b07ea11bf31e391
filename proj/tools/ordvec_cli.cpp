// Command-line front end. Every machine-readable line on stdout starts with
// "RESULT "; diagnostics go to stderr. Exit codes: 0 true/success, 1 false or
// failing suite, 2 any error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ordvec/harness.hpp"
#include "ordvec/icecream.hpp"
#include "ordvec/lexseq.hpp"
#include "ordvec/polyhedral.hpp"

namespace {

using namespace ordvec;
using json = nlohmann::ordered_json;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

struct LexSpace { Index dim; };
struct EvSeqSpace {};
using Space = std::variant<HCone, VCone, IceCreamCone<double>, LexSpace, EvSeqSpace>;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

const json& field(const json& doc, const char* key)
{
    if (!doc.contains(key)) throw ParseError(std::string("space file: missing key '") + key + "'");
    return doc.at(key);
}

Index positive_dim(const json& value)
{
    if (!value.is_number_unsigned() || value.get<std::uint64_t>() == 0) throw ParseError("space file: dim must be a positive integer");
    return static_cast<Index>(value.get<std::uint64_t>());
}

Rational rational_field(const json& value)
{
    if (!value.is_string()) throw ParseError("space file: rationals are written as strings such as \"1/2\"");
    return parse_rational(value.get<std::string>());
}

double decimal_field(const json& value)
{
    if (!value.is_string()) throw ParseError("space file: decimals are written as strings such as \"0.5\"");
    const std::string text = value.get<std::string>();
    double x = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    if (ec == std::errc() && end == text.data() + text.size()) return x;
    return parse_rational(text).convert_to<double>();
}

Mat matrix_field(const json& rows, Index dim)
{
    if (!rows.is_array()) throw ParseError("space file: expected an array of rows");
    Mat m(static_cast<Index>(rows.size()), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        if (!rows[i].is_array() || static_cast<Index>(rows[i].size()) != dim)
            throw ParseError("space file: row " + std::to_string(i) + " does not have " + std::to_string(dim) + " entries");
        for (Index j = 0; j < dim; ++j) m(static_cast<Index>(i), j) = rational_field(rows[i][static_cast<std::size_t>(j)]);
    }
    return m;
}

Index row_dim(const json& doc, const char* key)
{
    if (doc.contains("dim")) return positive_dim(doc.at("dim"));
    const json& rows = field(doc, key);
    if (!rows.is_array() || rows.empty() || !rows[0].is_array()) throw ParseError(std::string("space file: '") + key + "' is empty, so 'dim' is required");
    return static_cast<Index>(rows[0].size());
}

Space parse_space(const std::string& text)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::exception& e)
    {
        throw ParseError(std::string("space file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("space file must be a JSON object");
    const json& kind = field(doc, "kind");
    if (!kind.is_string()) throw ParseError("space file: kind must be a string");
    const std::string k = kind.get<std::string>();

    if (k == "hcone") return HCone(matrix_field(field(doc, "normals"), row_dim(doc, "normals")));
    if (k == "vcone")
    {
        const Index d = row_dim(doc, "generators");
        return VCone(matrix_field(field(doc, "generators"), d), d);
    }
    if (k == "icecream")
    {
        const json& axis = field(doc, "axis");
        if (!axis.is_array() || axis.empty()) throw ParseError("space file: axis must be a nonempty array");
        Eigen::VectorXd f(static_cast<Index>(axis.size()));
        for (std::size_t i = 0; i < axis.size(); ++i) f(static_cast<Index>(i)) = decimal_field(axis[i]);
        const double tol = doc.contains("tol") ? decimal_field(doc.at("tol")) : 1e-9;
        return IceCreamCone<double>(f, decimal_field(field(doc, "eps")), tol);
    }
    if (k == "lex")
    {
        const Index d = positive_dim(field(doc, "dim"));
        (void)LexCone(d);   // rejects dim < 2
        return LexSpace{d};
    }
    if (k == "evseq") return EvSeqSpace{};
    throw ParseError("space file: unknown kind '" + k + "'");
}

json rows_json(const Mat& m)
{
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i)
    {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/** Canonical serialization: fixed key order, rationals as p/q, doubles as shortest decimals. */
json canonical(const Space& space)
{
    json doc;
    std::visit(
        [&](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, HCone>)
            {
                doc["kind"] = "hcone";
                doc["dim"] = s.dim();
                doc["normals"] = rows_json(s.normals());
            }
            else if constexpr (std::is_same_v<S, VCone>)
            {
                doc["kind"] = "vcone";
                doc["dim"] = s.dim();
                doc["generators"] = rows_json(s.generators());
            }
            else if constexpr (std::is_same_v<S, IceCreamCone<double>>)
            {
                doc["kind"] = "icecream";
                doc["axis"] = json::array();
                for (Index i = 0; i < s.dim(); ++i) doc["axis"].push_back(to_string(s.axis()(i)));
                doc["eps"] = to_string(s.eps());
                doc["tol"] = to_string(s.tol());
            }
            else if constexpr (std::is_same_v<S, LexSpace>)
            {
                doc["kind"] = "lex";
                doc["dim"] = s.dim;
            }
            else
                doc["kind"] = "evseq";
        },
        space);
    return doc;
}

Eigen::VectorXd float_vector(std::string_view text)
{
    const Vec v = parse_vector(text);
    Eigen::VectorXd out(v.size());
    for (Index i = 0; i < v.size(); ++i) out(i) = v(i).convert_to<double>();
    return out;
}

void result(const std::string& line) { std::cout << "RESULT " << line << '\n'; }

int verdict(bool value)
{
    result(value ? "true" : "false");
    return value ? kTrue : kFalse;
}

std::string join(const std::vector<Integer>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].str();
    return out;
}

// --- check ------------------------------------------------------------------

int check_hcone(const HCone& cone, const Vec& x, const std::string& predicate)
{
    if (predicate == "member") return verdict(member(cone, x));
    if (predicate == "interior") return verdict(interior_member(cone, x));
    if (predicate == "order-unit")
    {
        const bool unit = is_order_unit(cone, x);
        const int code = verdict(unit);
        if (unit) result("witness multipliers=" + join(*order_unit_multipliers(cone, x)));
        return code;
    }
    if (predicate == "net-catching")
    {
        const bool catching = is_net_catching_fd(cone, x);
        const int code = verdict(catching);
        if (!catching)
            if (const auto g = uncaught_chain_generator(cone, x))
                result("witness uncaught-chain=(1/n)(" + to_string(*g) + ")");
        return code;
    }
    throw InvalidArgument("unknown predicate '" + predicate + "'");
}

int check_icecream(const IceCreamCone<double>& cone, const Eigen::VectorXd& x, const std::string& predicate)
{
    const IceMembership m = member(cone, x);
    result("excess=" + to_string(cone.excess(x)));
    if (predicate == "member") return verdict(m != IceMembership::Outside);
    // Closed generating cone in finite dimension: interior = order units = net-catching elements.
    if (predicate == "interior" || predicate == "order-unit" || predicate == "net-catching") return verdict(m == IceMembership::Interior);
    throw InvalidArgument("unknown predicate '" + predicate + "'");
}

int check_lex(const LexSpace& space, const Vec& x, const std::string& predicate)
{
    const LexCone cone(space.dim);
    if (!cone.compatible(x)) throw DimensionMismatch("element has " + std::to_string(x.size()) + " coordinates, space has " + std::to_string(space.dim));
    if (predicate == "member") return verdict(cone.contains(x));
    if (predicate == "interior" || predicate == "order-unit") return verdict(lex_is_order_unit(x));
    if (predicate == "net-catching")
    {
        const bool catching = lex_is_net_catching(x);
        const int code = verdict(catching);
        if (catching)
        {
            // (1/n) e_d decreases to 0 lexicographically; (1/n) e_1 does not.
            const Vec last = unit_vector(space.dim, space.dim - 1);
            const auto caught = lex_catch_index(x, canonical_chain(last, cone), 1u << 20);
            if (caught.caught()) result("witness chain (1/n)e_" + std::to_string(space.dim) + " caught at n=" + std::to_string(*caught.index));
        }
        return code;
    }
    throw InvalidArgument("unknown predicate '" + predicate + "'");
}

int check_evseq(const EvSeq& x, const std::string& predicate)
{
    const EvSeqCone cone;
    if (predicate == "member") return verdict(cone.contains(x));
    if (predicate == "interior" || predicate == "order-unit") return verdict(ev_is_order_unit(x));
    if (predicate == "net-catching")
    {
        const bool catching = ev_is_net_catching(x);
        const int code = verdict(catching);
        if (cone.contains(x) && !(x == EvSeq::constant(0)))
        {
            const auto w = non_netcatching_witness(x, 8);
            result("witness chain x^(n) = n-1 zeros then constant " + to_string(w.c) + "; decreasing, infimum 0, x^(n) not <= u");
            for (std::uint64_t n = 1; n <= 3; ++n)
                result("witness x^(" + std::to_string(n) + ")=" + w.chain.raw(n).to_string() + " escapes at k=" + std::to_string(w.escape_index[n - 1]));
        }
        return code;
    }
    throw InvalidArgument("unknown predicate '" + predicate + "'");
}

int cmd_check(const Space& space, const std::string& element, const std::string& predicate)
{
    return std::visit(
        [&](const auto& s) -> int {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, HCone>) return check_hcone(s, parse_vector(element), predicate);
            else if constexpr (std::is_same_v<S, VCone>) return check_hcone(v_to_h(s), parse_vector(element), predicate);
            else if constexpr (std::is_same_v<S, IceCreamCone<double>>) return check_icecream(s, float_vector(element), predicate);
            else if constexpr (std::is_same_v<S, LexSpace>) return check_lex(s, parse_vector(element), predicate);
            else return check_evseq(EvSeq::parse(element), predicate);
        },
        space);
}

// --- unorm / certify ----------------------------------------------------------

int cmd_unorm(const Space& space, const std::string& unit, const std::string& element)
{
    if (const auto* h = std::get_if<HCone>(&space)) result(to_string(unorm(*h, parse_vector(unit), parse_vector(element))));
    else if (const auto* v = std::get_if<VCone>(&space)) result(to_string(unorm(v_to_h(*v), parse_vector(unit), parse_vector(element))));
    else if (const auto* ice = std::get_if<IceCreamCone<double>>(&space)) result(to_string(unorm_ice(*ice, float_vector(unit), float_vector(element))));
    else throw InvalidArgument("unorm is available for hcone, vcone and icecream spaces");
    return kTrue;
}

int cmd_certify(const Space& space, const std::string& element, bool base)
{
    const auto* ice = std::get_if<IceCreamCone<double>>(&space);
    if (!ice) throw InvalidArgument("certify is available for icecream spaces");
    const Eigen::VectorXd x = float_vector(element);
    if (base)
        result("lambda=" + to_string(base_majorant(*ice, x)));
    else
    {
        const auto cert = equivalence_certificate(*ice, x);
        result("kappa=" + to_string(cert.kappa) + ", lambda=" + to_string(cert.lambda));
    }
    return kTrue;
}

// --- suite ---------------------------------------------------------------------

int cmd_suite(const std::string& config_path, const std::vector<std::string>& only, std::optional<std::uint64_t> seed,
              const std::string& out, const std::string& format)
{
    SuiteConfig config = config_path.empty() ? SuiteConfig{} : parse_config(read_file(config_path));
    if (seed) config.seed = *seed;

    std::vector<PropertyReport> reports;
    if (only.empty())
        reports = run_all(config);
    else
        for (const auto& id : only) reports.push_back(run_one(id, config));

    for (const auto& r : reports)
    {
        std::string line = r.property_id + " " + std::string(to_string(r.status)) + " trials=" + std::to_string(r.trials);
        if (!r.scope.empty()) line += " scope=\"" + r.scope + "\"";
        result(line);
        if (r.counterexample) std::cerr << r.property_id << ": " << *r.counterexample << '\n';
    }
    const bool ok = all_passed(reports);
    result(std::string("suite ") + (ok ? "pass" : "fail"));

    if (!out.empty())
    {
        const bool as_json = format == "json" || (format.empty() && out.size() >= 5 && out.ends_with(".json"));
        std::ofstream file(out, std::ios::binary);
        if (!file) throw InvalidArgument("cannot write '" + out + "'");
        file << (as_json ? to_json(reports, config) : to_csv(reports));
    }
    return ok ? kTrue : kFalse;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Decision procedures and certificates for ordered vector spaces"};
    app.require_subcommand(1);

    std::string space_path, element, predicate, unit, config_path, out, format;
    std::vector<std::string> only;
    std::optional<std::uint64_t> seed;
    bool base = false;

    auto* check = app.add_subcommand("check", "decide a predicate for one element");
    check->add_option("--space", space_path, "space file (JSON)")->required();
    check->add_option("--element", element, "element, e.g. 1/2,3 or 0,1|2 for sequences")->required();
    check->add_option("--predicate", predicate)->required()->check(CLI::IsMember({"member", "interior", "order-unit", "net-catching"}));

    auto* norm = app.add_subcommand("unorm", "u-norm of an element");
    norm->add_option("--space", space_path)->required();
    norm->add_option("--unit", unit, "interior point u")->required();
    norm->add_option("--element", element)->required();

    auto* certify = app.add_subcommand("certify", "ball sandwich radii or base majorant for an ice cream cone");
    certify->add_option("--space", space_path)->required();
    certify->add_option("--element", element)->required();
    certify->add_flag("--base-majorant", base, "print lambda = 1/(eps kappa) instead");

    auto* suite = app.add_subcommand("suite", "run the property suite");
    suite->add_option("--config", config_path, "suite config (JSON)");
    suite->add_option("--only", only, "property id (repeatable)");
    suite->add_option("--seed", seed);
    suite->add_option("--out", out, "report file; .json selects JSON");
    suite->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* show = app.add_subcommand("show", "print a space file in canonical form");
    show->add_option("--space", space_path)->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kError;
    }

    try
    {
        if (*suite) return cmd_suite(config_path, only, seed, out, format);
        const Space space = parse_space(read_file(space_path));
        if (*check) return cmd_check(space, element, predicate);
        if (*norm) return cmd_unorm(space, unit, element);
        if (*certify) return cmd_certify(space, element, base);
        result(canonical(space).dump());
        return kTrue;
    }
    catch (const Error& e)
    {
        std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kError;
}
