#pragma once

#include "msc_skos/annotation.hpp"
#include "msc_skos/code.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace msc {

// One row of the concepts table.
struct ConceptRow {
    std::string code;
    std::string text;
    std::string description;
};

// One row of the translations table.
struct TranslationRow {
    std::string code;
    std::string language;
    std::string label;
};

enum class ScopeNoteKind { NotUse, MustUse, Use, Plain };

std::string_view to_string(ScopeNoteKind kind);

struct ScopeNote {
    ScopeNoteKind kind;
    std::string text;
    friend bool operator==(const ScopeNote&, const ScopeNote&) = default;
};

struct Concept {
    MscCode code;
    std::string uri;
    std::map<std::string, std::string> pref_labels; // language tag -> label, always has "en"
    std::string description_raw;
    std::vector<ScopeNote> scope_notes;
    std::vector<Directive> cross_refs;
    std::optional<MscCode> broader;
    std::string scheme_id;
    std::optional<std::string> remainder; // unparsed directive groups, verbatim
    std::vector<std::string> parse_warnings;

    const std::string& label() const { return pref_labels.at("en"); }
};

// A conditional cross-reference made addressable so its scope can be stated.
struct SeeForStatement {
    std::string id; // local name, SeeForStatement-<src>-to-<dst>[-n]
    MscCode subject;
    MscCode object;
    std::string scope;
    ReferenceVerb verb = ReferenceVerb::See;
};

struct CollectionSpec {
    std::string name;
    std::string facet_suffix; // "-11"
};

std::vector<CollectionSpec> default_collection_specs();

struct SchemeMetadata {
    std::string title;
    std::string license;
    std::vector<std::string> creators;
    std::optional<std::string> issued; // xsd:date lexical form
};

struct BuildConfig {
    std::string base_uri;
    std::string version_id;
    SchemeMetadata metadata;
    std::vector<CollectionSpec> collections = default_collection_specs();
};

struct ConceptScheme {
    std::string version_id;
    std::string base_uri;
    std::map<std::string, Concept> concepts; // keyed by canonical code
    std::vector<SeeForStatement> see_for_statements;
    std::map<std::string, std::vector<std::string>> collections; // name -> sorted codes
    SchemeMetadata metadata;

    std::string scheme_iri() const;
    std::string concept_iri(const MscCode& code) const;
    std::string local_iri(const std::string& local_name) const;
    std::string collection_iri(const std::string& name) const;
    const Concept* find(const MscCode& code) const;
};

// Builds the scheme from the concept and translation tables, then runs
// reify_conditionals, build_collections and attach_scope_notes.
// Throws DuplicateCode, MalformedCode, InputError.
ConceptScheme build_scheme(const std::vector<ConceptRow>& rows,
                           const std::vector<TranslationRow>& translations,
                           const BuildConfig& config);

std::vector<SeeForStatement> reify_conditionals(const ConceptScheme& scheme);

ConceptScheme build_collections(ConceptScheme scheme, const std::vector<CollectionSpec>& specs);

ConceptScheme attach_scope_notes(ConceptScheme scheme);

// Local name of a collection individual, e.g. Collection-research-data.
std::string collection_local_name(const std::string& name);

// Local name of a typed scope-note individual, e.g. MustUseScopeNote-00-01.
std::string scope_note_local_name(ScopeNoteKind kind, const MscCode& code);

} // namespace msc
