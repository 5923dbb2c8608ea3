#include "msc_skos/changelog.hpp"

#include "msc_skos/errors.hpp"
#include "msc_skos/vocabulary.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <map>

namespace msc {

std::string_view to_string(ChangeCategory category) {
    switch (category) {
    case ChangeCategory::Split:
        return "split";
    case ChangeCategory::New:
        return "new";
    case ChangeCategory::Moved:
        return "moved";
    case ChangeCategory::Merged:
        return "merged";
    case ChangeCategory::Deleted:
        return "deleted";
    }
    return "?";
}

std::string_view to_string(DiscrepancyKind kind) {
    switch (kind) {
    case DiscrepancyKind::UncoveredAddition:
        return "uncovered-addition";
    case DiscrepancyKind::UncoveredRemoval:
        return "uncovered-removal";
    case DiscrepancyKind::UnknownCode:
        return "unknown-code";
    }
    return "?";
}

namespace {

ChangeCategory parse_category(std::string_view text) {
    const std::string name = detail::lower(detail::trim(text));
    for (auto c : {ChangeCategory::Split, ChangeCategory::New, ChangeCategory::Moved,
                   ChangeCategory::Merged, ChangeCategory::Deleted}) {
        if (name == to_string(c))
            return c;
    }
    throw UnknownCategory(std::string(text));
}

std::vector<MscCode> parse_code_list(std::string_view text) {
    const std::string_view cell = detail::trim(text);
    if (cell.empty() || cell == "-" || cell == "\xE2\x80\x94")
        return {};
    std::vector<MscCode> codes;
    for (std::string_view item : detail::split(cell, ';'))
        codes.push_back(parse_code(item));
    return codes;
}

void check_arity(const ChangeRecord& r) {
    const std::size_t s = r.sources.size();
    const std::size_t t = r.targets.size();
    bool ok = false;
    switch (r.category) {
    case ChangeCategory::Split:
        ok = s == 1 && t >= 1;
        break;
    case ChangeCategory::New:
        ok = s == 0 && t == 1;
        break;
    case ChangeCategory::Moved:
        ok = s == 1 && t == 1;
        break;
    case ChangeCategory::Merged:
        ok = s >= 2 && t == 1;
        break;
    case ChangeCategory::Deleted:
        ok = s == 1 && t == 0;
        break;
    }
    if (!ok)
        throw ArityViolation(std::string(to_string(r.category)) + " record with " +
                             std::to_string(s) + " source and " + std::to_string(t) +
                             " target codes");
}

std::string join_codes(const std::vector<MscCode>& codes) {
    std::string out;
    for (const auto& c : codes) {
        if (!out.empty())
            out += ", ";
        out += canonical_string(c);
    }
    return out;
}

std::string mapping_predicate(ChangeCategory category, bool refine) {
    if (refine) {
        switch (category) {
        case ChangeCategory::Moved:
            return vocab::skos::exact_match();
        case ChangeCategory::Split:
            return vocab::skos::narrow_match();
        case ChangeCategory::Merged:
            return vocab::skos::broad_match();
        case ChangeCategory::New:
        case ChangeCategory::Deleted:
            break;
        }
    }
    return vocab::skos::mapping_relation();
}

} // namespace

std::vector<ChangeRecord> parse_changes(const std::vector<ChangeRow>& rows) {
    std::vector<ChangeRecord> records;
    records.reserve(rows.size());
    for (const auto& row : rows) {
        ChangeRecord r{parse_category(row.category), parse_code_list(row.sources),
                       parse_code_list(row.targets), std::nullopt};
        if (auto note = detail::trim(row.note); !note.empty())
            r.note = std::string(note);
        check_arity(r);
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<rdf::Triple> build_mappings(const std::vector<ChangeRecord>& changes,
                                        const ConceptScheme& new_scheme,
                                        const std::string& old_base_uri,
                                        const MappingOptions& options) {
    std::vector<rdf::Triple> out;
    auto add = [&out](std::string s, std::string p, rdf::Node o) {
        out.push_back({rdf::Iri{std::move(s)}, rdf::Iri{std::move(p)}, std::move(o)});
    };
    auto old_iri = [&](const MscCode& c) { return old_base_uri + canonical_string(c); };

    // parent code -> "child (category)" entries
    std::map<std::string, std::vector<std::string>> affected_parents;
    auto touch_parent = [&](const MscCode& code, ChangeCategory category) {
        auto parent = parent_code(code);
        if (!parent || !new_scheme.find(*parent))
            return;
        affected_parents[canonical_string(*parent)].push_back(
            canonical_string(code) + " (" + std::string(to_string(category)) + ")");
    };

    for (const auto& r : changes) {
        for (const auto& t : r.targets) {
            if (options.strict && !new_scheme.find(t))
                throw DanglingTarget(canonical_string(t));
        }
        const std::string predicate = mapping_predicate(r.category, options.refine);
        for (const auto& s : r.sources) {
            for (const auto& t : r.targets)
                add(old_iri(s), predicate, rdf::iri(new_scheme.concept_iri(t)));
        }

        std::string note(to_string(r.category));
        if (!r.sources.empty() && r.category != ChangeCategory::Deleted)
            note += " from " + join_codes(r.sources);
        if (r.note)
            note += ": " + *r.note;
        if (r.category == ChangeCategory::Deleted) {
            add(old_iri(r.sources.front()), vocab::skos::change_note(), rdf::lang(note, "en"));
            touch_parent(r.sources.front(), r.category);
        }
        for (const auto& t : r.targets) {
            add(new_scheme.concept_iri(t), vocab::skos::change_note(), rdf::lang(note, "en"));
            touch_parent(t, r.category);
        }
    }

    for (auto& [parent, children] : affected_parents) {
        std::sort(children.begin(), children.end());
        children.erase(std::unique(children.begin(), children.end()), children.end());
        std::string text = "changed subordinate classes: ";
        for (std::size_t i = 0; i < children.size(); ++i)
            text += (i ? ", " : "") + children[i];
        add(new_scheme.base_uri + parent, vocab::skos::history_note(), rdf::lang(text, "en"));
    }
    return out;
}

SchemeDiff diff_versions(const ConceptScheme& old_scheme, const ConceptScheme& new_scheme) {
    SchemeDiff diff;
    for (const auto& [code, entry] : new_scheme.concepts) {
        auto it = old_scheme.concepts.find(code);
        if (it == old_scheme.concepts.end()) {
            diff.added.insert(code);
            continue;
        }
        diff.common.insert(code);
        if (it->second.label() != entry.label())
            diff.relabeled.emplace(code, it->second.label(), entry.label());
    }
    for (const auto& [code, entry] : old_scheme.concepts) {
        if (!new_scheme.concepts.count(code))
            diff.removed.insert(code);
    }
    return diff;
}

std::vector<Discrepancy> reconcile(const SchemeDiff& diff, const std::vector<ChangeRecord>& changes) {
    std::set<std::string> introduced; // targets of New/Split/Moved/Merged
    std::set<std::string> retired;    // sources of Deleted/Moved/Merged/Split
    std::set<std::string> cited;
    for (const auto& r : changes) {
        for (const auto& t : r.targets) {
            introduced.insert(canonical_string(t));
            cited.insert(canonical_string(t));
        }
        for (const auto& s : r.sources) {
            retired.insert(canonical_string(s));
            cited.insert(canonical_string(s));
        }
    }

    std::vector<Discrepancy> out;
    for (const auto& code : diff.added) {
        if (!introduced.count(code))
            out.push_back({DiscrepancyKind::UncoveredAddition, code,
                           "added in the new release but no change record introduces it"});
    }
    for (const auto& code : diff.removed) {
        if (!retired.count(code))
            out.push_back({DiscrepancyKind::UncoveredRemoval, code,
                           "missing from the new release but no change record retires it"});
    }
    for (const auto& code : cited) {
        if (!diff.added.count(code) && !diff.removed.count(code) && !diff.common.count(code))
            out.push_back({DiscrepancyKind::UnknownCode, code,
                           "cited by a change record but absent from both releases"});
    }
    return out;
}

} // namespace msc
