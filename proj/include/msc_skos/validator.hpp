#pragma once

#include "msc_skos/scheme.hpp"

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace msc {

// Check identifiers. These strings are part of the report format.
//   V1 codes are grammatical and spelled without stray whitespace
//   V2 third-level labels are unique
//   V3 cross-references and statement targets resolve
//   V4 hierarchy is a forest of depth <= 3 with one broader per non-top concept
//   V5 minted IRIs contain no whitespace
//   V6 every concept has an English label
//   V7 description groups that could not be parsed
enum class Severity { Error, Warning };

std::string_view to_string(Severity severity);

struct Finding {
    std::string check_id;
    Severity severity;
    std::string subject; // code or IRI
    std::string message;
    friend bool operator==(const Finding&, const Finding&) = default;
};

struct SchemeStats {
    std::map<Level, std::size_t> count_by_level;
    std::size_t concept_total = 0;
    std::size_t statement_total = 0;
    std::map<std::string, std::size_t> collection_sizes;

    std::size_t top_level() const;
    std::size_t second_level() const; // facet + subject
    std::size_t third_level() const;

    friend bool operator==(const SchemeStats&, const SchemeStats&) = default;
};

struct ValidationReport {
    std::vector<Finding> errors;
    std::vector<Finding> warnings;
    SchemeStats stats;

    bool ok() const { return errors.empty(); }
    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

// Runs V1-V7. Strict mode promotes the V3 and V7 warnings to errors.
// Findings are ordered by check id, then subject.
ValidationReport validate_scheme(const ConceptScheme& scheme, bool strict);

SchemeStats stats(const ConceptScheme& scheme);

// One line per finding, then a stats summary.
void write_report_text(std::ostream& out, const ValidationReport& report);

// JSON document: {"findings": [{checkId, severity, subject, message}...], "stats": {...}}
std::string report_to_json(const ValidationReport& report);

void write_stats_text(std::ostream& out, const SchemeStats& stats);

} // namespace msc
