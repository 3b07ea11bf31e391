#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordvec/rational.hpp"

namespace ordvec {

/** Deliberate defects injected to show that the suite can fail. */
enum class Mutation { None, BrokenCertificateLambda };

struct SuiteConfig
{
    std::uint64_t seed = 20260101;
    std::vector<Index> dims{2, 3, 4, 5};
    std::uint64_t trials_per_property = 30;
    double float_tol = 1e-9;
    Mutation mutation = Mutation::None;
};

enum class PropertyStatus { Pass, Fail, Skipped };

struct PropertyReport
{
    std::string property_id;
    PropertyStatus status = PropertyStatus::Skipped;
    std::optional<std::string> counterexample;   // set iff status == Fail
    std::uint64_t trials = 0;
    std::string scope;                           // e.g. "canonical-family only"; empty if unrestricted
};

/** One row of the traceability matrix: a property id, the module it exercises, and what it checks. */
struct TraceRow
{
    std::string_view property_id;
    std::string_view module;
    std::string_view statement;
};

/** The traceability matrix, in report order. */
std::span<const TraceRow> traceability_matrix();

/** Registered property ids, in report order. */
std::vector<std::string> registered_properties();

/**
 * Throws std::logic_error if a matrix row has no registered check or a check has
 * no matrix row. Called by run_all and run_one before anything executes.
 */
void check_traceability();

/** Throws UnknownProperty for unregistered ids. */
PropertyReport run_one(std::string_view property_id, const SuiteConfig& config);

/** All registered properties, sequentially and in matrix order. */
std::vector<PropertyReport> run_all(const SuiteConfig& config);

bool all_passed(std::span<const PropertyReport> reports);

std::string_view to_string(PropertyStatus status);

/** Header `property_id,status,trials,counterexample`, then one row per report; fields are RFC 4180 quoted when needed. */
std::string to_csv(std::span<const PropertyReport> reports);

/** {"seed": .., "reports": [{"property_id", "status", "trials", "counterexample", "scope"}]} with two-space indent. */
std::string to_json(std::span<const PropertyReport> reports, const SuiteConfig& config);

/**
 * Reads a config object. Missing keys keep their defaults; wrongly typed or
 * out-of-range values throw ParseError.
 */
SuiteConfig parse_config(std::string_view json_text);

}   // namespace ordvec
