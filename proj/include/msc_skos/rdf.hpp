#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>

namespace msc::rdf {

struct Iri {
    std::string value;
    friend auto operator<=>(const Iri&, const Iri&) = default;
};

struct Literal {
    std::string lexical;
    std::optional<std::string> language;  // mutually exclusive with datatype
    std::optional<std::string> datatype;  // full IRI
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct Blank {
    std::string label;
    friend auto operator<=>(const Blank&, const Blank&) = default;
};

using Node = std::variant<Iri, Literal, Blank>;

struct Triple {
    Node subject;   // Iri or Blank
    Iri predicate;
    Node object;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

inline Node iri(std::string value) { return Iri{std::move(value)}; }

inline Node typed(std::string lexical, std::string datatype) {
    return Literal{std::move(lexical), std::nullopt, std::move(datatype)};
}

inline Node lang(std::string lexical, std::string language) {
    return Literal{std::move(lexical), std::move(language), std::nullopt};
}

inline bool is_iri(const Node& n) { return std::holds_alternative<Iri>(n); }

inline const std::string* iri_value(const Node& n) {
    const auto* i = std::get_if<Iri>(&n);
    return i ? &i->value : nullptr;
}

} // namespace msc::rdf
