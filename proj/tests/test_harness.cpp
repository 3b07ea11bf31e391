#include <cstdlib>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "ordvec/errors.hpp"
#include "ordvec/harness.hpp"

using namespace ordvec;

namespace {

SuiteConfig small_config()
{
    SuiteConfig c;
    c.trials_per_property = 5;
    c.dims = {2, 3};
    return c;
}

const PropertyReport& find(const std::vector<PropertyReport>& reports, std::string_view id)
{
    for (const auto& r : reports)
        if (r.property_id == id) return r;
    throw std::runtime_error("missing report " + std::string(id));
}

}   // namespace

TEST(Harness, TraceabilityMatrixMatchesRegistry)
{
    EXPECT_NO_THROW(check_traceability());
    const auto ids = registered_properties();
    ASSERT_EQ(ids.size(), traceability_matrix().size());
    ASSERT_GE(ids.size(), 15u);
    std::set<std::string> unique(ids.begin(), ids.end());
    EXPECT_EQ(unique.size(), ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) EXPECT_EQ(ids[k], traceability_matrix()[k].property_id);
}

TEST(Harness, TraceabilityDocumentListsEveryProperty)
{
    const char* root = std::getenv("ORDVEC_SOURCE_DIR");
    ASSERT_NE(root, nullptr);
    std::ifstream in(std::string(root) + "/docs/traceability.md");
    ASSERT_TRUE(in.good());
    const std::regex row(R"(^\|\s*`?([A-Za-z0-9.]+)`?\s*\|\s*([a-z, ]+?)\s*\|)");
    std::vector<std::pair<std::string, std::string>> documented;
    for (std::string line; std::getline(in, line);)
    {
        std::smatch m;
        if (std::regex_search(line, m, row) && m[1] != "property_id") documented.emplace_back(m[1], m[2]);
    }
    ASSERT_EQ(documented.size(), traceability_matrix().size());
    for (std::size_t k = 0; k < documented.size(); ++k)
    {
        EXPECT_EQ(documented[k].first, traceability_matrix()[k].property_id);
        EXPECT_EQ(documented[k].second, traceability_matrix()[k].module);
    }
}

TEST(Harness, ReportsAreDeterministic)
{
    const auto config = small_config();
    const auto a = run_all(config);
    const auto b = run_all(config);
    EXPECT_EQ(to_csv(a), to_csv(b));
    EXPECT_EQ(to_json(a, config), to_json(b, config));
    EXPECT_TRUE(all_passed(a)) << to_csv(a);
}

TEST(Harness, MutationIsCaught)
{
    auto config = small_config();
    config.mutation = Mutation::BrokenCertificateLambda;
    const auto reports = run_all(config);
    const auto& sec9 = find(reports, "Sec9");
    EXPECT_EQ(sec9.status, PropertyStatus::Fail);
    ASSERT_TRUE(sec9.counterexample.has_value());
    EXPECT_FALSE(sec9.counterexample->empty());
    EXPECT_FALSE(all_passed(reports));
    for (const auto& r : reports)
        if (r.property_id != "Sec9") { EXPECT_EQ(r.status, PropertyStatus::Pass) << r.property_id; }
}

TEST(Harness, ZeroTrialsSkipsEverything)
{
    auto config = small_config();
    config.trials_per_property = 0;
    for (const auto& r : run_all(config))
    {
        EXPECT_EQ(r.status, PropertyStatus::Skipped) << r.property_id;
        EXPECT_FALSE(r.counterexample.has_value());
    }
}

TEST(Harness, ScopesMarkCanonicalFamilyChecks)
{
    const auto reports = run_all(small_config());
    EXPECT_EQ(find(reports, "Prop2.1").scope, "canonical-family only");
    EXPECT_EQ(find(reports, "Lem7.10").scope, "canonical-family only");
    EXPECT_TRUE(find(reports, "Thm2.6").scope.empty());
}

TEST(Harness, UnknownProperty)
{
    EXPECT_THROW(run_one("NoSuchId", small_config()), UnknownProperty);
}

TEST(Harness, LongRunOfTheLexicographicCheck)
{
    auto config = small_config();
    config.trials_per_property = 1000;
    const auto r = run_one("Thm6.5", config);
    EXPECT_EQ(r.status, PropertyStatus::Pass) << r.counterexample.value_or("");
    EXPECT_EQ(r.trials, 1000u);
}

TEST(Harness, CsvQuotesFields)
{
    std::vector<PropertyReport> reports(2);
    reports[0] = {"A", PropertyStatus::Pass, std::nullopt, 3, ""};
    reports[1] = {"B", PropertyStatus::Fail, std::string("x=(1, 2), \"bad\"\nline"), 1, ""};
    const std::string csv = to_csv(reports);
    EXPECT_EQ(csv, "property_id,status,trials,counterexample\n"
                   "A,pass,3,\n"
                   "B,fail,1,\"x=(1, 2), \"\"bad\"\"\nline\"\n");
}

TEST(Harness, CsvHasOneRowPerProperty)
{
    const auto reports = run_all(small_config());
    const std::string csv = to_csv(reports);
    std::istringstream in(csv);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    EXPECT_EQ(lines, reports.size() + 1);
    EXPECT_GE(reports.size(), 15u);
}

TEST(Harness, JsonCarriesConfigAndReports)
{
    const auto config = small_config();
    const auto reports = run_all(config);
    const auto doc = nlohmann::json::parse(to_json(reports, config));
    EXPECT_EQ(doc.at("seed").get<std::uint64_t>(), config.seed);
    ASSERT_EQ(doc.at("reports").size(), reports.size());
    EXPECT_EQ(doc.at("reports")[0].at("property_id").get<std::string>(), reports[0].property_id);
    EXPECT_EQ(doc.at("reports")[0].at("status").get<std::string>(), "pass");
}

TEST(Harness, ParseConfig)
{
    const auto c = parse_config(R"({"seed": 7, "trials_per_property": 3, "dims": [2, 4], "float_tol": 1e-6})");
    EXPECT_EQ(c.seed, 7u);
    EXPECT_EQ(c.trials_per_property, 3u);
    EXPECT_EQ(c.dims, (std::vector<Index>{2, 4}));
    EXPECT_DOUBLE_EQ(c.float_tol, 1e-6);
    EXPECT_EQ(parse_config("{}").seed, SuiteConfig{}.seed);
    EXPECT_EQ(parse_config(R"({"mutation": "broken-certificate-lambda"})").mutation, Mutation::BrokenCertificateLambda);

    EXPECT_THROW(parse_config(R"({"seed": "twelve"})"), ParseError);
    EXPECT_THROW(parse_config(R"({"seed": -1})"), ParseError);
    EXPECT_THROW(parse_config(R"({"dims": [0]})"), ParseError);
    EXPECT_THROW(parse_config(R"({"dims": [7]})"), ParseError);
    EXPECT_THROW(parse_config(R"({"mutation": "other"})"), ParseError);
    EXPECT_THROW(parse_config(R"({"colour": 1})"), ParseError);
    EXPECT_THROW(parse_config("[1, 2]"), ParseError);
    EXPECT_THROW(parse_config("{"), ParseError);
}
