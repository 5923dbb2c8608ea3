#include "msc_skos/scheme.hpp"

#include "msc_skos/errors.hpp"
#include "msc_skos/vocabulary.hpp"
#include "text_util.hpp"

#include <regex>
#include <set>

namespace msc {

std::string_view to_string(ScopeNoteKind kind) {
    switch (kind) {
    case ScopeNoteKind::NotUse:
        return "NotUse";
    case ScopeNoteKind::MustUse:
        return "MustUse";
    case ScopeNoteKind::Use:
        return "Use";
    case ScopeNoteKind::Plain:
        return "Plain";
    }
    return "?";
}

std::vector<CollectionSpec> default_collection_specs() {
    return {
        {"historical works", "-03"},
        {"proceedings", "-06"},
        {"computational methods", "-08"},
        {"research data", "-11"},
    };
}

std::string ConceptScheme::scheme_iri() const {
    std::string iri = base_uri;
    if (!iri.empty() && (iri.back() == '/' || iri.back() == '#'))
        iri.pop_back();
    return iri;
}

std::string ConceptScheme::concept_iri(const MscCode& code) const {
    return base_uri + canonical_string(code);
}

std::string ConceptScheme::local_iri(const std::string& local_name) const {
    return base_uri + local_name;
}

std::string ConceptScheme::collection_iri(const std::string& name) const {
    return base_uri + collection_local_name(name);
}

const Concept* ConceptScheme::find(const MscCode& code) const {
    auto it = concepts.find(canonical_string(code));
    return it == concepts.end() ? nullptr : &it->second;
}

std::string collection_local_name(const std::string& name) {
    std::string slug;
    for (char c : detail::lower(name)) {
        if (std::isalnum(static_cast<unsigned char>(c)))
            slug.push_back(c);
        else if (!slug.empty() && slug.back() != '-')
            slug.push_back('-');
    }
    while (!slug.empty() && slug.back() == '-')
        slug.pop_back();
    return "Collection-" + slug;
}

std::string scope_note_local_name(ScopeNoteKind kind, const MscCode& code) {
    return std::string(to_string(kind)) + "ScopeNote-" + canonical_string(code);
}

namespace {

std::string normalize_base(std::string base) {
    if (base.empty())
        return std::string(vocab::kDefaultBaseUri);
    if (base.back() != '/' && base.back() != '#')
        base.push_back('/');
    return base;
}

bool valid_language_tag(const std::string& tag) {
    static const std::regex pattern("[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*");
    return std::regex_match(tag, pattern);
}

} // namespace

ConceptScheme build_scheme(const std::vector<ConceptRow>& rows,
                           const std::vector<TranslationRow>& translations,
                           const BuildConfig& config) {
    if (rows.empty())
        throw InputError("concepts table has no rows");
    if (detail::trim(config.version_id).empty())
        throw InputError("a version identifier is required");
    if (detail::trim(config.metadata.license).empty())
        throw InputError("a license IRI is required");

    ConceptScheme scheme;
    scheme.version_id = config.version_id;
    scheme.base_uri = normalize_base(config.base_uri);
    scheme.metadata = config.metadata;
    if (scheme.metadata.title.empty())
        scheme.metadata.title = "Mathematics Subject Classification " + config.version_id;

    for (const auto& row : rows) {
        MscCode code = parse_code(row.code);
        const std::string key = canonical_string(code);
        if (scheme.concepts.count(key))
            throw DuplicateCode(key);

        const bool has_description = !detail::trim(row.description).empty();
        const std::string& source = has_description ? row.description : row.text;
        ParsedDescription parsed = parse_description(source);
        if (parsed.clean_label.empty() && has_description)
            parsed.clean_label = parse_description(row.text).clean_label;

        Concept entry{.code = code,
                        .uri = scheme.concept_iri(code),
                        .pref_labels = {{"en", parsed.clean_label}},
                        .description_raw = source,
                        .scope_notes = {},
                        .cross_refs = std::move(parsed.directives),
                        .broader = parent_code(code),
                        .scheme_id = config.version_id,
                        .remainder = std::move(parsed.remainder),
                        .parse_warnings = std::move(parsed.warnings)};
        scheme.concepts.emplace(key, std::move(entry));
    }

    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& t : translations) {
        const std::string key = canonical_string(parse_code(t.code));
        auto it = scheme.concepts.find(key);
        if (it == scheme.concepts.end())
            throw InputError("translation for unknown code " + key);
        if (!valid_language_tag(t.language))
            throw InputError("invalid language tag '" + t.language + "' for " + key);
        if (t.language == "en")
            throw InputError("English labels come from the concepts table (" + key + ")");
        if (!seen.emplace(key, t.language).second)
            throw InputError("duplicate " + t.language + " translation for " + key);
        it->second.pref_labels[t.language] = detail::normalize_space(t.label);
    }

    scheme.see_for_statements = reify_conditionals(scheme);
    scheme = build_collections(std::move(scheme), config.collections);
    return attach_scope_notes(std::move(scheme));
}

std::vector<SeeForStatement> reify_conditionals(const ConceptScheme& scheme) {
    std::vector<SeeForStatement> out;
    std::map<std::string, int> ordinal;
    for (const auto& [key, entry] : scheme.concepts) {
        for (const auto& d : entry.cross_refs) {
            if (d.kind != DirectiveKind::ConditionalClause)
                continue;
            for (const auto& target : d.targets) {
                std::string id = "SeeForStatement-" + key + "-to-" + canonical_string(target);
                const int n = ++ordinal[id];
                if (n > 1)
                    id += "-" + std::to_string(n);
                out.push_back({std::move(id), entry.code, target, *d.scope,
                               d.inner_verb.value_or(ReferenceVerb::See)});
            }
        }
    }
    return out;
}

ConceptScheme build_collections(ConceptScheme scheme, const std::vector<CollectionSpec>& specs) {
    std::set<std::string> names;
    for (const auto& spec : specs) {
        if (!names.insert(spec.name).second)
            throw InputError("duplicate collection name '" + spec.name + "'");
    }
    for (const auto& spec : specs) {
        auto& members = scheme.collections[spec.name];
        members.clear();
        for (const auto& [key, entry] : scheme.concepts) {
            if (facet_suffix(entry.code) == spec.facet_suffix)
                members.push_back(key);
        }
    }
    return scheme;
}

ConceptScheme attach_scope_notes(ConceptScheme scheme) {
    for (auto& [key, entry] : scheme.concepts) {
        entry.scope_notes.clear();
        if (auto note = find_label_scope_note(entry.label())) {
            ScopeNoteKind kind = ScopeNoteKind::Use;
            if (note->marker == ScopeMarker::NotUse)
                kind = ScopeNoteKind::NotUse;
            else if (note->marker == ScopeMarker::MustUse)
                kind = ScopeNoteKind::MustUse;
            entry.scope_notes.push_back({kind, note->text});
        }
        // Unparsed groups stay attached as an untyped note.
        if (entry.remainder)
            entry.scope_notes.push_back({ScopeNoteKind::Plain, *entry.remainder});
    }
    return scheme;
}

} // namespace msc
