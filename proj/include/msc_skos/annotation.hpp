#pragma once

#include "msc_skos/code.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace msc {

enum class DirectiveKind {
    SeeAlso,           // [See also C1, C2]
    SeeMainly,         // [See mainly C]
    SeeFor,            // bare "see C" without a qualifying phrase
    ConditionalClause, // "for <scope>, see C"
};

// The verb used inside a conditional clause.
enum class ReferenceVerb { See, SeeAlso, SeeMainly };

std::string_view to_string(DirectiveKind kind);
std::string_view to_string(ReferenceVerb verb);

struct Directive {
    DirectiveKind kind;
    std::vector<MscCode> targets;
    std::optional<std::string> scope;       // ConditionalClause only
    std::optional<ReferenceVerb> inner_verb; // ConditionalClause only

    friend bool operator==(const Directive&, const Directive&) = default;
};

struct ParsedDescription {
    std::string clean_label;
    std::vector<Directive> directives;
    // Bracketed groups that did not parse, verbatim, joined by a single space.
    std::optional<std::string> remainder;
    std::vector<std::string> warnings;
};

// Splits a description cell into its label and the `[...]` / `{...}`
// cross-reference groups. Never throws: a group that does not parse as a
// whole is moved to `remainder` and a warning is recorded.
ParsedDescription parse_description(std::string_view text);

enum class ScopeMarker { NotUse, MustUse, Use };

std::string_view to_string(ScopeMarker marker);

struct LabelScopeNote {
    ScopeMarker marker;
    std::string text; // contents of the parenthetical group that carried the marker
};

// Looks at the top-level parenthetical groups of a label. "do not use" wins
// over "must", which wins over "use"; keywords match as whole words, case-insensitively.
std::optional<LabelScopeNote> find_label_scope_note(std::string_view label);

std::optional<ScopeMarker> extract_label_scope_marker(std::string_view label);

} // namespace msc
