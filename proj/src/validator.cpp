#include "msc_skos/validator.hpp"

#include "text_util.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace msc {

std::string_view to_string(Severity severity) {
    return severity == Severity::Error ? "error" : "warning";
}

std::size_t SchemeStats::top_level() const {
    auto it = count_by_level.find(Level::TopLevel);
    return it == count_by_level.end() ? 0 : it->second;
}

std::size_t SchemeStats::second_level() const {
    std::size_t n = 0;
    for (auto level : {Level::SecondFacet, Level::SecondSubject}) {
        if (auto it = count_by_level.find(level); it != count_by_level.end())
            n += it->second;
    }
    return n;
}

std::size_t SchemeStats::third_level() const {
    auto it = count_by_level.find(Level::ThirdLevel);
    return it == count_by_level.end() ? 0 : it->second;
}

SchemeStats stats(const ConceptScheme& scheme) {
    SchemeStats s;
    for (auto level : {Level::TopLevel, Level::SecondFacet, Level::SecondSubject, Level::ThirdLevel})
        s.count_by_level[level] = 0;
    for (const auto& [key, entry] : scheme.concepts)
        ++s.count_by_level[entry.code.level()];
    s.concept_total = scheme.concepts.size();
    s.statement_total = scheme.see_for_statements.size();
    for (const auto& [name, members] : scheme.collections)
        s.collection_sizes[name] = members.size();
    return s;
}

namespace {

class Collector {
public:
    explicit Collector(bool strict) : strict_(strict) {}

    void error(std::string check, std::string subject, std::string message) {
        report_.errors.push_back({std::move(check), Severity::Error, std::move(subject), std::move(message)});
    }
    void warning(std::string check, std::string subject, std::string message) {
        report_.warnings.push_back({std::move(check), Severity::Warning, std::move(subject), std::move(message)});
    }
    // Warning in lenient mode, error in strict mode.
    void strict_error(std::string check, std::string subject, std::string message) {
        if (strict_)
            error(std::move(check), std::move(subject), std::move(message));
        else
            warning(std::move(check), std::move(subject), std::move(message));
    }

    ValidationReport finish(SchemeStats s) && {
        auto by_check_then_subject = [](const Finding& a, const Finding& b) {
            return std::tie(a.check_id, a.subject) < std::tie(b.check_id, b.subject);
        };
        std::stable_sort(report_.errors.begin(), report_.errors.end(), by_check_then_subject);
        std::stable_sort(report_.warnings.begin(), report_.warnings.end(), by_check_then_subject);
        report_.stats = std::move(s);
        return std::move(report_);
    }

private:
    bool strict_;
    ValidationReport report_;
};

void check_codes(const ConceptScheme& scheme, Collector& out) {
    for (const auto& [key, entry] : scheme.concepts) {
        const std::string& raw = entry.code.raw();
        if (!try_parse_code(raw) || canonical_string(entry.code) != key)
            out.error("V1", key, "code '" + raw + "' is not a valid MSC code");
        else if (detail::trim(raw) != raw)
            out.error("V1", key, "code '" + raw + "' carries surrounding whitespace");
    }
}

void check_unique_labels(const ConceptScheme& scheme, Collector& out) {
    std::map<std::string, std::vector<std::string>> by_label;
    for (const auto& [key, entry] : scheme.concepts) {
        if (entry.code.level() != Level::ThirdLevel)
            continue;
        auto it = entry.pref_labels.find("en");
        if (it != entry.pref_labels.end() && !it->second.empty())
            by_label[it->second].push_back(key);
    }
    for (const auto& [label, codes] : by_label) {
        if (codes.size() < 2)
            continue;
        std::string list;
        for (const auto& c : codes)
            list += (list.empty() ? "" : ", ") + c;
        out.error("V2", codes.front(), "label '" + label + "' is shared by " + list);
    }
}

void check_references(const ConceptScheme& scheme, Collector& out) {
    std::set<std::pair<std::string, std::string>> dangling;
    for (const auto& [key, entry] : scheme.concepts) {
        for (const auto& d : entry.cross_refs) {
            for (const auto& t : d.targets) {
                if (!scheme.find(t))
                    dangling.emplace(key, canonical_string(t));
            }
        }
    }
    for (const auto& st : scheme.see_for_statements) {
        if (!scheme.find(st.object))
            dangling.emplace(canonical_string(st.subject), canonical_string(st.object));
    }
    for (const auto& [source, target] : dangling)
        out.strict_error("V3", source, "reference target " + target + " is not in the scheme");
}

void check_hierarchy(const ConceptScheme& scheme, Collector& out) {
    for (const auto& [key, entry] : scheme.concepts) {
        const auto expected = parent_code(entry.code);
        if (!expected) {
            if (entry.broader)
                out.error("V4", key, "top-level class has a broader concept");
            continue;
        }
        if (!entry.broader) {
            out.error("V4", key, "missing broader concept");
            continue;
        }
        if (*entry.broader != *expected) {
            out.error("V4", key, "broader " + canonical_string(*entry.broader) +
                                     " differs from parent " + canonical_string(*expected));
            continue;
        }
        // Walk to the root; the grammar bounds this at two steps.
        int depth = 1;
        for (const Concept* c = &entry; c->broader; ++depth) {
            c = scheme.find(*c->broader);
            if (!c) {
                out.error("V4", key, "ancestor is not in the scheme");
                break;
            }
            if (depth > 3) {
                out.error("V4", key, "hierarchy deeper than three levels");
                break;
            }
        }
    }
}

void check_iris(const ConceptScheme& scheme, Collector& out) {
    auto check = [&out](const std::string& iri) {
        if (detail::contains_space(iri))
            out.error("V5", iri, "IRI contains whitespace");
    };
    check(scheme.scheme_iri());
    check(scheme.metadata.license);
    for (const auto& [key, entry] : scheme.concepts) {
        check(entry.uri);
        for (const auto& note : entry.scope_notes) {
            if (note.kind != ScopeNoteKind::Plain)
                check(scheme.local_iri(scope_note_local_name(note.kind, entry.code)));
        }
    }
    for (const auto& st : scheme.see_for_statements)
        check(scheme.local_iri(st.id));
    for (const auto& [name, members] : scheme.collections)
        check(scheme.collection_iri(name));
}

void check_labels(const ConceptScheme& scheme, Collector& out) {
    for (const auto& [key, entry] : scheme.concepts) {
        auto it = entry.pref_labels.find("en");
        if (it == entry.pref_labels.end() || detail::trim(it->second).empty())
            out.error("V6", key, "no English label");
    }
}

void check_remainders(const ConceptScheme& scheme, Collector& out) {
    for (const auto& [key, entry] : scheme.concepts) {
        if (entry.remainder)
            out.strict_error("V7", key, "unparsed description text: " + *entry.remainder);
    }
}

} // namespace

ValidationReport validate_scheme(const ConceptScheme& scheme, bool strict) {
    Collector out(strict);
    check_codes(scheme, out);
    check_unique_labels(scheme, out);
    check_references(scheme, out);
    check_hierarchy(scheme, out);
    check_iris(scheme, out);
    check_labels(scheme, out);
    check_remainders(scheme, out);
    return std::move(out).finish(stats(scheme));
}

void write_stats_text(std::ostream& out, const SchemeStats& s) {
    out << "concepts: " << s.concept_total << '\n'
        << "top-level: " << s.top_level() << '\n'
        << "second-level: " << s.second_level() << " (facet "
        << s.count_by_level.at(Level::SecondFacet) << ", subject "
        << s.count_by_level.at(Level::SecondSubject) << ")\n"
        << "third-level: " << s.third_level() << '\n'
        << "statements: " << s.statement_total << '\n';
    for (const auto& [name, size] : s.collection_sizes)
        out << "collection " << name << ": " << size << '\n';
}

void write_report_text(std::ostream& out, const ValidationReport& report) {
    for (const auto* list : {&report.errors, &report.warnings}) {
        for (const auto& f : *list)
            out << to_string(f.severity) << ' ' << f.check_id << ' ' << f.subject << ": " << f.message << '\n';
    }
    out << report.errors.size() << " error(s), " << report.warnings.size() << " warning(s)\n";
    write_stats_text(out, report.stats);
}

std::string report_to_json(const ValidationReport& report) {
    nlohmann::ordered_json findings = nlohmann::ordered_json::array();
    for (const auto* list : {&report.errors, &report.warnings}) {
        for (const auto& f : *list) {
            findings.push_back({{"checkId", f.check_id},
                                {"severity", to_string(f.severity)},
                                {"subject", f.subject},
                                {"message", f.message}});
        }
    }
    nlohmann::ordered_json levels;
    for (const auto& [level, n] : report.stats.count_by_level)
        levels[std::string(to_string(level))] = n;
    nlohmann::ordered_json doc = {
        {"findings", findings},
        {"stats",
         {{"countByLevel", levels},
          {"conceptTotal", report.stats.concept_total},
          {"statementTotal", report.stats.statement_total},
          {"collectionSizes", report.stats.collection_sizes}}},
    };
    return doc.dump(2) + "\n";
}

} // namespace msc
