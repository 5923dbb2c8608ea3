#pragma once

#include "msc_skos/code.hpp"
#include "msc_skos/rdf.hpp"
#include "msc_skos/scheme.hpp"

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace msc {

enum class ChangeCategory { Split, New, Moved, Merged, Deleted };

std::string_view to_string(ChangeCategory category);

struct ChangeRecord {
    ChangeCategory category;
    std::vector<MscCode> sources; // codes of the old release
    std::vector<MscCode> targets; // codes of the new release
    std::optional<std::string> note;
};

// One row of the changes table; code lists are `;`-separated, and an empty
// cell, "-" or an em dash (U+2014) means no codes.
struct ChangeRow {
    std::string category;
    std::string sources;
    std::string targets;
    std::string note;
};

// Throws UnknownCategory, ArityViolation, MalformedCode.
std::vector<ChangeRecord> parse_changes(const std::vector<ChangeRow>& rows);

struct MappingOptions {
    bool strict = true;
    // Use skos:exactMatch / narrowMatch / broadMatch instead of the generic
    // skos:mappingRelation where the category implies one.
    bool refine = false;
};

// mappingRelation triples old -> new, a change note per record, and one
// history note on the parent of every affected code. Throws DanglingTarget
// in strict mode.
std::vector<rdf::Triple> build_mappings(const std::vector<ChangeRecord>& changes,
                                        const ConceptScheme& new_scheme,
                                        const std::string& old_base_uri,
                                        const MappingOptions& options = {});

struct SchemeDiff {
    std::set<std::string> added;
    std::set<std::string> removed;
    std::set<std::tuple<std::string, std::string, std::string>> relabeled; // code, old, new
    std::set<std::string> common; // codes present in both releases
};

SchemeDiff diff_versions(const ConceptScheme& old_scheme, const ConceptScheme& new_scheme);

enum class DiscrepancyKind { UncoveredAddition, UncoveredRemoval, UnknownCode };

std::string_view to_string(DiscrepancyKind kind);

struct Discrepancy {
    DiscrepancyKind kind;
    std::string code;
    std::string message;
    friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

std::vector<Discrepancy> reconcile(const SchemeDiff& diff, const std::vector<ChangeRecord>& changes);

} // namespace msc
