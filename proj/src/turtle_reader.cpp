#include "msc_skos/errors.hpp"
#include "msc_skos/turtle.hpp"
#include "msc_skos/vocabulary.hpp"

#include <cstdint>

namespace msc {

using rdf::Iri;
using rdf::Literal;
using rdf::Node;
using rdf::Triple;

namespace {

bool is_pn_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
           static_cast<unsigned char>(c) >= 0x80;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<Triple> run() {
        skip_ws();
        while (!at_end()) {
            if (peek() == '@')
                prefix_directive(true);
            else if (keyword_ahead("PREFIX"))
                prefix_directive(false);
            else
                triples();
            skip_ws();
        }
        return std::move(out_);
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw TurtleSyntaxError(message, line_, column_);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char advance() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_ws() {
        while (!at_end()) {
            const char c = peek();
            if (c == '#') {
                while (!at_end() && peek() != '\n')
                    advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    bool keyword_ahead(std::string_view kw) const {
        if (text_.substr(pos_, kw.size()) != kw)
            return false;
        const char next = peek(kw.size());
        return next == ' ' || next == '\t' || next == '\n' || next == '\r';
    }

    void prefix_directive(bool at_form) {
        if (at_form) {
            if (text_.substr(pos_, 7) != "@prefix")
                fail("unsupported directive");
            for (int i = 0; i < 7; ++i)
                advance();
        } else {
            for (int i = 0; i < 6; ++i)
                advance();
        }
        skip_ws();
        std::string name;
        while (!at_end() && peek() != ':') {
            if (!is_pn_char(peek()))
                fail("invalid prefix name");
            name.push_back(advance());
        }
        if (at_end())
            fail("unterminated prefix name");
        advance();
        skip_ws();
        prefixes_[name] = iri_ref();
        if (at_form)
            expect('.');
    }

    std::string iri_ref() {
        if (peek() != '<')
            fail("expected IRI");
        advance();
        std::string iri;
        while (true) {
            if (at_end())
                fail("unterminated IRI");
            const char c = advance();
            if (c == '>')
                break;
            if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"')
                fail("invalid character in IRI");
            iri.push_back(c);
        }
        return iri;
    }

    std::string prefixed_name() {
        std::string name;
        while (!at_end() && peek() != ':') {
            if (!is_pn_char(peek()))
                fail("invalid prefixed name");
            name.push_back(advance());
        }
        if (at_end())
            fail("expected ':' in prefixed name");
        advance();
        std::string local;
        while (!at_end() && (is_pn_char(peek()) || peek() == ':'))
            local.push_back(advance());
        // A trailing '.' terminates the statement rather than the name.
        while (!local.empty() && local.back() == '.') {
            local.pop_back();
            --pos_;
            --column_;
        }
        auto it = prefixes_.find(name);
        if (it == prefixes_.end())
            fail("undeclared prefix '" + name + "'");
        return it->second + local;
    }

    std::string iri() {
        skip_ws();
        if (peek() == '<')
            return iri_ref();
        return prefixed_name();
    }

    Node blank() {
        advance();
        if (peek() != ':')
            fail("expected ':' after '_'");
        advance();
        std::string label;
        while (!at_end() && is_pn_char(peek()) && peek() != '.')
            label.push_back(advance());
        if (label.empty())
            fail("empty blank node label");
        return rdf::Blank{label};
    }

    std::uint32_t hex(int digits) {
        std::uint32_t value = 0;
        for (int i = 0; i < digits; ++i) {
            const char c = at_end() ? '\0' : advance();
            value <<= 4;
            if (c >= '0' && c <= '9')
                value |= static_cast<std::uint32_t>(c - '0');
            else if (c >= 'a' && c <= 'f')
                value |= static_cast<std::uint32_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F')
                value |= static_cast<std::uint32_t>(c - 'A' + 10);
            else
                fail("invalid unicode escape");
        }
        return value;
    }

    Node literal() {
        const std::size_t start_line = line_;
        const std::size_t start_column = column_;
        advance();
        std::string lexical;
        while (true) {
            if (at_end() || peek() == '\n')
                throw TurtleSyntaxError("unterminated string", start_line, start_column);
            const char c = advance();
            if (c == '"')
                break;
            if (c != '\\') {
                lexical.push_back(c);
                continue;
            }
            if (at_end())
                throw TurtleSyntaxError("unterminated string", start_line, start_column);
            switch (const char e = advance()) {
            case 't':
                lexical.push_back('\t');
                break;
            case 'n':
                lexical.push_back('\n');
                break;
            case 'r':
                lexical.push_back('\r');
                break;
            case 'b':
                lexical.push_back('\b');
                break;
            case 'f':
                lexical.push_back('\f');
                break;
            case '"':
            case '\'':
            case '\\':
                lexical.push_back(e);
                break;
            case 'u':
                append_utf8(lexical, hex(4));
                break;
            case 'U':
                append_utf8(lexical, hex(8));
                break;
            default:
                fail(std::string("invalid escape '\\") + e + "'");
            }
        }
        Literal lit{std::move(lexical), std::nullopt, std::nullopt};
        if (peek() == '@') {
            advance();
            std::string tag;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-'))
                tag.push_back(advance());
            if (tag.empty() || !std::isalpha(static_cast<unsigned char>(tag[0])))
                fail("invalid language tag");
            lit.language = std::move(tag);
        } else if (peek() == '^' && peek(1) == '^') {
            advance();
            advance();
            lit.datatype = iri();
        }
        return lit;
    }

    Node subject() {
        skip_ws();
        if (peek() == '_')
            return blank();
        if (peek() == '"')
            fail("literal in subject position");
        return Iri{iri()};
    }

    Iri verb() {
        skip_ws();
        if (peek() == 'a') {
            const char next = peek(1);
            if (next == ' ' || next == '\t' || next == '\n' || next == '\r' || next == '<') {
                advance();
                return Iri{vocab::rdf::type()};
            }
        }
        return Iri{iri()};
    }

    Node object() {
        skip_ws();
        if (at_end())
            fail("expected object");
        if (peek() == '"')
            return literal();
        if (peek() == '_')
            return blank();
        return Iri{iri()};
    }

    void triples() {
        const Node s = subject();
        while (true) {
            const Iri p = verb();
            while (true) {
                out_.push_back({s, p, object()});
                skip_ws();
                if (peek() != ',')
                    break;
                advance();
            }
            skip_ws();
            if (peek() == '.') {
                advance();
                return;
            }
            if (peek() != ';')
                fail("expected ';' or '.'");
            // Repeated and trailing ';' are allowed.
            while (peek() == ';') {
                advance();
                skip_ws();
            }
            if (peek() == '.') {
                advance();
                return;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    std::map<std::string, std::string> prefixes_;
    std::vector<Triple> out_;
};

} // namespace

std::vector<Triple> parse_turtle_subset(std::string_view text) {
    // UTF-8 byte order mark
    if (text.substr(0, 3) == "\xEF\xBB\xBF")
        text.remove_prefix(3);
    return Parser(text).run();
}

namespace {

MscCode code_from_iri(const std::string& iri, const std::string& base_uri) {
    if (iri.compare(0, base_uri.size(), base_uri) != 0)
        throw Error("IRI outside the scheme namespace: <" + iri + ">");
    return parse_code(std::string_view(iri).substr(base_uri.size()));
}

const std::string& literal_text(const Node& node) {
    const auto* lit = std::get_if<Literal>(&node);
    if (!lit)
        throw Error("expected a literal");
    return lit->lexical;
}

} // namespace

ConceptScheme read_scheme(const std::vector<Triple>& triples, const std::string& base_uri) {
    namespace v = vocab;
    using Properties = std::vector<std::pair<std::string, Node>>;
    std::map<std::string, Properties> by_subject;
    for (const auto& t : triples) {
        if (const auto* s = rdf::iri_value(t.subject))
            by_subject[*s].emplace_back(t.predicate.value, t.object);
    }
    auto has_type = [&](const Properties& props, const std::string& type) {
        for (const auto& [p, o] : props) {
            if (p == v::rdf::type() && rdf::iri_value(o) && *rdf::iri_value(o) == type)
                return true;
        }
        return false;
    };
    auto first = [](const Properties& props, const std::string& predicate) -> const Node* {
        for (const auto& [p, o] : props) {
            if (p == predicate)
                return &o;
        }
        return nullptr;
    };

    ConceptScheme scheme;
    scheme.base_uri = base_uri;

    for (const auto& [subject, props] : by_subject) {
        if (!has_type(props, v::skos::concept_scheme()))
            continue;
        for (const auto& [p, o] : props) {
            if (p == v::dct::title())
                scheme.metadata.title = literal_text(o);
            else if (p == v::dct::license() && rdf::iri_value(o))
                scheme.metadata.license = *rdf::iri_value(o);
            else if (p == v::dct::creator())
                scheme.metadata.creators.push_back(literal_text(o));
            else if (p == v::dct::issued())
                scheme.metadata.issued = literal_text(o);
            else if (p == v::owl::version_info())
                scheme.version_id = literal_text(o);
        }
    }

    for (const auto& [subject, props] : by_subject) {
        if (!has_type(props, v::skos::concept_class()))
            continue;
        const Node* notation = first(props, v::skos::notation());
        MscCode code = notation ? parse_code(literal_text(*notation)) : code_from_iri(subject, base_uri);
        Concept entry{.code = code,
                        .uri = subject,
                        .pref_labels = {},
                        .description_raw = {},
                        .scope_notes = {},
                        .cross_refs = {},
                        .broader = std::nullopt,
                        .scheme_id = scheme.version_id,
                        .remainder = std::nullopt,
                        .parse_warnings = {}};
        std::map<DirectiveKind, std::vector<MscCode>> refs;
        for (const auto& [p, o] : props) {
            if (p == v::skos::pref_label()) {
                const auto& lit = std::get<Literal>(o);
                entry.pref_labels[lit.language.value_or("")] = lit.lexical;
            } else if (p == v::skos::broader()) {
                entry.broader = code_from_iri(*rdf::iri_value(o), base_uri);
            } else if (p == v::mscvocab::see_also()) {
                refs[DirectiveKind::SeeAlso].push_back(code_from_iri(*rdf::iri_value(o), base_uri));
            } else if (p == v::mscvocab::see_mainly()) {
                refs[DirectiveKind::SeeMainly].push_back(code_from_iri(*rdf::iri_value(o), base_uri));
            } else if (p == v::mscvocab::see_for()) {
                refs[DirectiveKind::SeeFor].push_back(code_from_iri(*rdf::iri_value(o), base_uri));
            } else if (p == v::skos::scope_note()) {
                if (const auto* lit = std::get_if<Literal>(&o)) {
                    entry.scope_notes.push_back({ScopeNoteKind::Plain, lit->lexical});
                    entry.remainder = lit->lexical;
                    continue;
                }
                const auto it = by_subject.find(*rdf::iri_value(o));
                if (it == by_subject.end())
                    continue;
                ScopeNoteKind kind = ScopeNoteKind::Use;
                if (has_type(it->second, v::mscvocab::not_use_scope_note()))
                    kind = ScopeNoteKind::NotUse;
                else if (has_type(it->second, v::mscvocab::must_use_scope_note()))
                    kind = ScopeNoteKind::MustUse;
                const Node* text = first(it->second, v::mscvocab::scope());
                entry.scope_notes.insert(entry.scope_notes.begin(),
                                           {kind, text ? literal_text(*text) : std::string()});
            }
        }
        for (auto& [kind, targets] : refs)
            entry.cross_refs.push_back({kind, std::move(targets), std::nullopt, std::nullopt});
        if (auto en = entry.pref_labels.find("en"); en != entry.pref_labels.end())
            entry.description_raw = en->second;
        scheme.concepts.emplace(canonical_string(code), std::move(entry));
    }

    for (const auto& [subject, props] : by_subject) {
        if (!has_type(props, v::mscvocab::see_for_statement()))
            continue;
        const Node* s = first(props, v::rdf::subject());
        const Node* o = first(props, v::rdf::object());
        const Node* scope = first(props, v::mscvocab::scope());
        if (!s || !o || !scope)
            throw Error("incomplete statement <" + subject + ">");
        SeeForStatement st{subject.substr(base_uri.size()), code_from_iri(*rdf::iri_value(*s), base_uri),
                           code_from_iri(*rdf::iri_value(*o), base_uri), literal_text(*scope),
                           ReferenceVerb::See};
        if (const Node* comment = first(props, v::rdfs::comment())) {
            const auto& text = literal_text(*comment);
            if (text == to_string(ReferenceVerb::SeeAlso))
                st.verb = ReferenceVerb::SeeAlso;
            else if (text == to_string(ReferenceVerb::SeeMainly))
                st.verb = ReferenceVerb::SeeMainly;
        }
        auto it = scheme.concepts.find(canonical_string(st.subject));
        if (it != scheme.concepts.end())
            it->second.cross_refs.push_back(
                {DirectiveKind::ConditionalClause, {st.object}, st.scope, st.verb});
        scheme.see_for_statements.push_back(std::move(st));
    }

    for (const auto& [subject, props] : by_subject) {
        if (!has_type(props, v::skos::collection()))
            continue;
        const Node* label = first(props, v::skos::pref_label());
        auto& members = scheme.collections[label ? literal_text(*label) : subject];
        for (const auto& [p, o] : props) {
            if (p == v::skos::member())
                members.push_back(canonical_string(code_from_iri(*rdf::iri_value(o), base_uri)));
        }
        std::sort(members.begin(), members.end());
    }
    return scheme;
}

} // namespace msc
