#include "msc_skos/errors.hpp"
#include "msc_skos/turtle.hpp"
#include "msc_skos/vocabulary.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace msc {

using rdf::Iri;
using rdf::Literal;
using rdf::Node;
using rdf::Triple;

PrefixMap default_prefixes(const ConceptScheme& scheme) {
    return {
        {"dct", std::string(vocab::kDct)},
        {"msc", scheme.base_uri},
        {"mscvocab", std::string(vocab::kMscVocab)},
        {"owl", std::string(vocab::kOwl)},
        {"rdf", std::string(vocab::kRdf)},
        {"rdfs", std::string(vocab::kRdfs)},
        {"skos", std::string(vocab::kSkos)},
        {"xsd", std::string(vocab::kXsd)},
    };
}

namespace {

class TripleSink {
public:
    void add(Node subject, std::string predicate, Node object) {
        Triple t{std::move(subject), Iri{std::move(predicate)}, std::move(object)};
        if (seen_.insert(t).second)
            triples_.push_back(std::move(t));
    }
    std::vector<Triple> take() { return std::move(triples_); }

private:
    std::set<Triple> seen_;
    std::vector<Triple> triples_;
};

std::string_view cross_ref_predicate_local(DirectiveKind kind) {
    switch (kind) {
    case DirectiveKind::SeeAlso:
        return "seeAlso";
    case DirectiveKind::SeeMainly:
        return "seeMainly";
    case DirectiveKind::SeeFor:
        return "seeFor";
    case DirectiveKind::ConditionalClause:
        return "seeConditionally";
    }
    return {};
}

std::string scope_note_class(ScopeNoteKind kind) {
    switch (kind) {
    case ScopeNoteKind::NotUse:
        return vocab::mscvocab::not_use_scope_note();
    case ScopeNoteKind::MustUse:
        return vocab::mscvocab::must_use_scope_note();
    case ScopeNoteKind::Use:
    case ScopeNoteKind::Plain:
        break;
    }
    return vocab::mscvocab::use_scope_note();
}

} // namespace

std::vector<Triple> scheme_to_triples(const ConceptScheme& scheme) {
    namespace v = vocab;
    TripleSink out;
    const Node scheme_node = rdf::iri(scheme.scheme_iri());
    const std::string xsd_string = v::xsd::string();

    out.add(scheme_node, v::rdf::type(), rdf::iri(v::skos::concept_scheme()));
    out.add(scheme_node, v::dct::title(), rdf::lang(scheme.metadata.title, "en"));
    out.add(scheme_node, v::dct::license(), rdf::iri(scheme.metadata.license));
    for (const auto& creator : scheme.metadata.creators)
        out.add(scheme_node, v::dct::creator(), Literal{creator, std::nullopt, std::nullopt});
    if (scheme.metadata.issued)
        out.add(scheme_node, v::dct::issued(), rdf::typed(*scheme.metadata.issued, v::xsd::date()));
    out.add(scheme_node, v::owl::version_info(), Literal{scheme.version_id, std::nullopt, std::nullopt});

    for (const auto& [key, entry] : scheme.concepts) {
        const Node c = rdf::iri(entry.uri);
        out.add(c, v::rdf::type(), rdf::iri(v::skos::concept_class()));
        out.add(c, v::skos::in_scheme(), scheme_node);
        if (entry.code.level() == Level::TopLevel)
            out.add(c, v::skos::top_concept_of(), scheme_node);
        out.add(c, v::skos::notation(), rdf::typed(key, xsd_string));
        for (const auto& [language, label] : entry.pref_labels)
            out.add(c, v::skos::pref_label(), rdf::lang(label, language));
        if (entry.broader)
            out.add(c, v::skos::broader(), rdf::iri(scheme.concept_iri(*entry.broader)));
        for (const auto& d : entry.cross_refs) {
            if (d.kind == DirectiveKind::ConditionalClause)
                continue; // emitted with the reified statements
            const std::string predicate = v::term(v::kMscVocab, cross_ref_predicate_local(d.kind));
            for (const auto& target : d.targets)
                out.add(c, predicate, rdf::iri(scheme.concept_iri(target)));
        }
        for (const auto& note : entry.scope_notes) {
            if (note.kind == ScopeNoteKind::Plain) {
                out.add(c, v::skos::scope_note(), rdf::lang(note.text, "en"));
                continue;
            }
            const Node n = rdf::iri(scheme.local_iri(scope_note_local_name(note.kind, entry.code)));
            out.add(c, v::skos::scope_note(), n);
            out.add(n, v::rdf::type(), rdf::iri(scope_note_class(note.kind)));
            out.add(n, v::mscvocab::scope(), rdf::typed(note.text, xsd_string));
        }
    }

    for (const auto& st : scheme.see_for_statements) {
        const Node subject = rdf::iri(scheme.concept_iri(st.subject));
        const Node object = rdf::iri(scheme.concept_iri(st.object));
        out.add(subject, v::mscvocab::see_conditionally(), object);

        const Node s = rdf::iri(scheme.local_iri(st.id));
        out.add(s, v::rdf::type(), rdf::iri(v::owl::named_individual()));
        out.add(s, v::rdf::type(), rdf::iri(v::mscvocab::see_for_statement()));
        out.add(s, v::rdf::object(), object);
        out.add(s, v::rdf::predicate(), rdf::iri(v::mscvocab::see_conditionally()));
        out.add(s, v::rdf::subject(), subject);
        out.add(s, v::mscvocab::scope(), rdf::typed(st.scope, xsd_string));
        if (st.verb != ReferenceVerb::See)
            out.add(s, v::rdfs::comment(), Literal{std::string(to_string(st.verb)), std::nullopt, std::nullopt});
    }

    for (const auto& [name, members] : scheme.collections) {
        const Node k = rdf::iri(scheme.collection_iri(name));
        out.add(k, v::rdf::type(), rdf::iri(v::skos::collection()));
        out.add(k, v::skos::pref_label(), rdf::lang(name, "en"));
        for (const auto& code : members)
            out.add(k, v::skos::member(), rdf::iri(scheme.base_uri + code));
    }
    return out.take();
}

namespace {

bool is_absolute_iri(std::string_view iri) {
    if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0])))
        return false;
    for (char c : iri) {
        if (c == ':')
            return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    return false;
}

void check_iri(const std::string& iri) {
    for (char c : iri) {
        const auto u = static_cast<unsigned char>(c);
        if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
            c == '^' || c == '`' || c == '\\')
            throw InvalidIri("IRI contains a forbidden character: <" + iri + ">");
    }
    if (!is_absolute_iri(iri))
        throw UnprefixableIri(iri);
}

bool is_local_name(std::string_view local) {
    if (!local.empty() && local.front() == '-')
        return false;
    return std::all_of(local.begin(), local.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
    });
}

class Writer {
public:
    explicit Writer(const PrefixMap& prefixes) : prefixes_(prefixes) {}

    std::string render_iri(const std::string& iri) const {
        check_iri(iri);
        const std::pair<const std::string, std::string>* best = nullptr;
        for (const auto& entry : prefixes_) {
            const auto& ns = entry.second;
            if (iri.size() >= ns.size() && iri.compare(0, ns.size(), ns) == 0 &&
                is_local_name(std::string_view(iri).substr(ns.size())) &&
                (!best || ns.size() > best->second.size()))
                best = &entry;
        }
        if (best)
            return best->first + ":" + iri.substr(best->second.size());
        return "<" + iri + ">";
    }

    std::string render(const Node& node) const {
        if (const auto* i = std::get_if<Iri>(&node))
            return render_iri(i->value);
        if (const auto* b = std::get_if<rdf::Blank>(&node)) {
            if (b->label.empty() || !is_local_name(b->label))
                throw InvalidIri("invalid blank node label '" + b->label + "'");
            return "_:" + b->label;
        }
        const auto& lit = std::get<Literal>(node);
        std::string out = "\"";
        for (char c : lit.lexical) {
            switch (c) {
            case '\\':
                out += "\\\\";
                break;
            case '"':
                out += "\\\"";
                break;
            case '\n':
                out += "\\n";
                break;
            case '\r':
                out += "\\r";
                break;
            case '\t':
                out += "\\t";
                break;
            default:
                out.push_back(c);
            }
        }
        out += '"';
        if (lit.language && lit.datatype)
            throw Error("literal carries both a language tag and a datatype");
        if (lit.language)
            out += "@" + *lit.language;
        else if (lit.datatype)
            out += "^^" + render_iri(*lit.datatype);
        return out;
    }

private:
    const PrefixMap& prefixes_;
};

int predicate_rank(const std::string& predicate) {
    namespace v = vocab;
    static const std::array<std::string, 16> order = {
        v::rdf::type(),
        v::skos::in_scheme(),
        v::skos::top_concept_of(),
        v::skos::notation(),
        v::skos::pref_label(),
        v::skos::broader(),
        v::mscvocab::see_also(),
        v::mscvocab::see_mainly(),
        v::mscvocab::see_for(),
        v::mscvocab::see_conditionally(),
        v::skos::scope_note(),
        v::skos::member(),
        v::rdf::object(),
        v::rdf::predicate(),
        v::rdf::subject(),
        v::mscvocab::scope(),
    };
    auto it = std::find(order.begin(), order.end(), predicate);
    return it == order.end() ? static_cast<int>(order.size()) : static_cast<int>(it - order.begin());
}

struct PredicateOrder {
    bool operator()(const Iri& a, const Iri& b) const {
        const int ra = predicate_rank(a.value);
        const int rb = predicate_rank(b.value);
        if (ra != rb)
            return ra < rb;
        return a.value < b.value;
    }
};

} // namespace

std::string emit_turtle(const std::vector<Triple>& triples, const PrefixMap& prefixes) {
    for (const auto& [name, ns] : prefixes)
        check_iri(ns);

    std::map<Node, std::map<Iri, std::vector<Node>, PredicateOrder>> grouped;
    for (const auto& t : triples) {
        if (std::holds_alternative<Literal>(t.subject))
            throw Error("literal in subject position");
        grouped[t.subject][t.predicate].push_back(t.object);
    }

    const Writer w(prefixes);
    std::string out;
    for (const auto& [name, ns] : prefixes)
        out += "@prefix " + name + ": <" + ns + "> .\n";

    for (auto& [subject, predicates] : grouped) {
        out += '\n';
        out += w.render(subject);
        bool first_predicate = true;
        for (auto& [predicate, objects] : predicates) {
            std::sort(objects.begin(), objects.end());
            out += first_predicate ? " " : " ;\n    ";
            first_predicate = false;
            out += w.render_iri(predicate.value);
            for (std::size_t i = 0; i < objects.size(); ++i) {
                out += i == 0 ? " " : " ,\n        ";
                out += w.render(objects[i]);
            }
        }
        out += " .\n";
    }
    return out;
}

} // namespace msc
