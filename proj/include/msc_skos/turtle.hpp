#pragma once

#include "msc_skos/rdf.hpp"
#include "msc_skos/scheme.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace msc {

// prefix name -> namespace IRI
using PrefixMap = std::map<std::string, std::string>;

// rdf, rdfs, owl, xsd, skos, dct, mscvocab and msc (the scheme base URI).
PrefixMap default_prefixes(const ConceptScheme& scheme);

// Flattens a scheme into triples: scheme metadata, concepts, reified
// conditional references, scope notes and collections. No skos:narrower.
std::vector<rdf::Triple> scheme_to_triples(const ConceptScheme& scheme);

// Deterministic Turtle. Prefixes sorted by name, subjects by IRI, predicates
// in a fixed review-friendly order. Throws InvalidIri, UnprefixableIri.
std::string emit_turtle(const std::vector<rdf::Triple>& triples, const PrefixMap& prefixes);

// Reader for the subset of Turtle produced by emit_turtle (plus `a`,
// comments, and trailing `;`). Throws TurtleSyntaxError.
std::vector<rdf::Triple> parse_turtle_subset(std::string_view text);

// Rebuilds a scheme from the triples of scheme_to_triples. The raw
// description text and raw code spellings are not part of the emitted data
// and are reconstructed from the canonical forms.
ConceptScheme read_scheme(const std::vector<rdf::Triple>& triples, const std::string& base_uri);

} // namespace msc
