#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "sakaguchi/bounds.hpp"
#include "sakaguchi/extremal.hpp"

namespace sakaguchi {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr int report_schema_version = 1;

// A computed quantity that disagrees with a previously published constant for
// the same class. The rational strings are present when the exact fraction is
// known; `published_value` is always the published number as a double.
struct Discrepancy {
    std::string quantity;
    double published_value = 0.0;
    std::string published_rational;
    double computed_value = 0.0;
    std::string computed_rational;
    std::string note;
};

struct Report {
    std::string class_spec;
    ClassKind kind = ClassKind::starlike;
    PhiCoeffs phi;
    ConditionReport conditions;

    double a5_bound = 0.0;
    std::string a5_bound_rational; // exact form when B1 is dyadic
    double a5_search_max = 0.0;
    bool a5_attained = false; // search meets the bound and C1..C4 hold

    BoundResult t31_upper_result;
    BoundResult t31_lower_result;
    std::string t31_lower_rational; // endpoint cases with dyadic B1, B2 only
    double t31_search_min = 0.0;
    double t31_search_max = 0.0;

    std::vector<Discrepancy> discrepancies;
    std::vector<std::string> notes;

    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
};

// Runs the full pipeline for one class: conditions, bound evaluation, and
// the three searches. Propagates error(errc::bound_violation) from the
// search audits; that is the caller's signal to abort loudly.
Report build_report(const PhiSpec& spec, ClassKind kind,
                    const SearchConfig& cfg);

// Field names and nesting are frozen; see docs/report-schema.md.
nlohmann::ordered_json to_json(const Condition& c);
nlohmann::ordered_json to_json(const ConditionReport& report);
nlohmann::ordered_json to_json(const Report& report);

// One row per (class_spec, kind, quantity) with a dotted quantity path.
std::string to_csv(const std::vector<Report>& reports);

// Both kinds for every spec, star first, output in input order. Worker
// count is capped by the SAKAGUCHI_KIT_THREADS environment variable.
std::vector<Report> run_catalog(const std::vector<PhiSpec>& specs,
                                const SearchConfig& cfg);

// Newline-delimited spec strings; blank lines and `#` comments skipped.
std::vector<PhiSpec> read_catalog_file(const std::string& path);

} // namespace sakaguchi
