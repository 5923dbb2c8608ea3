#pragma once

#include <string>
#include <string_view>

// Namespace and term IRIs used in emitted data.
namespace msc::vocab {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kDct = "http://purl.org/dc/terms/";
// The MSC extension vocabulary is imported from the 2010 release, not defined here.
inline constexpr std::string_view kMscVocab = "http://msc2010.org/resources/MSC/2010/info/vocab#";

inline constexpr std::string_view kDefaultBaseUri = "http://msc.org/resources/MSC/msc2020/";

inline std::string term(std::string_view ns, std::string_view local) {
    std::string out(ns);
    out += local;
    return out;
}

namespace rdf {
inline std::string type() { return term(kRdf, "type"); }
inline std::string subject() { return term(kRdf, "subject"); }
inline std::string predicate() { return term(kRdf, "predicate"); }
inline std::string object() { return term(kRdf, "object"); }
} // namespace rdf

namespace rdfs {
inline std::string comment() { return term(kRdfs, "comment"); }
} // namespace rdfs

namespace owl {
inline std::string named_individual() { return term(kOwl, "NamedIndividual"); }
inline std::string version_info() { return term(kOwl, "versionInfo"); }
} // namespace owl

namespace xsd {
inline std::string string() { return term(kXsd, "string"); }
inline std::string date() { return term(kXsd, "date"); }
} // namespace xsd

namespace skos {
inline std::string concept_scheme() { return term(kSkos, "ConceptScheme"); }
inline std::string concept_class() { return term(kSkos, "Concept"); }
inline std::string collection() { return term(kSkos, "Collection"); }
inline std::string member() { return term(kSkos, "member"); }
inline std::string in_scheme() { return term(kSkos, "inScheme"); }
inline std::string top_concept_of() { return term(kSkos, "topConceptOf"); }
inline std::string notation() { return term(kSkos, "notation"); }
inline std::string pref_label() { return term(kSkos, "prefLabel"); }
inline std::string broader() { return term(kSkos, "broader"); }
inline std::string narrower() { return term(kSkos, "narrower"); }
inline std::string scope_note() { return term(kSkos, "scopeNote"); }
inline std::string change_note() { return term(kSkos, "changeNote"); }
inline std::string history_note() { return term(kSkos, "historyNote"); }
inline std::string mapping_relation() { return term(kSkos, "mappingRelation"); }
inline std::string exact_match() { return term(kSkos, "exactMatch"); }
inline std::string broad_match() { return term(kSkos, "broadMatch"); }
inline std::string narrow_match() { return term(kSkos, "narrowMatch"); }
} // namespace skos

namespace dct {
inline std::string title() { return term(kDct, "title"); }
inline std::string license() { return term(kDct, "license"); }
inline std::string creator() { return term(kDct, "creator"); }
inline std::string issued() { return term(kDct, "issued"); }
} // namespace dct

namespace mscvocab {
inline std::string see_also() { return term(kMscVocab, "seeAlso"); }
inline std::string see_mainly() { return term(kMscVocab, "seeMainly"); }
inline std::string see_for() { return term(kMscVocab, "seeFor"); }
inline std::string see_conditionally() { return term(kMscVocab, "seeConditionally"); }
inline std::string see_for_statement() { return term(kMscVocab, "SeeForStatement"); }
inline std::string scope() { return term(kMscVocab, "scope"); }
inline std::string not_use_scope_note() { return term(kMscVocab, "NotUseScopeNote"); }
inline std::string must_use_scope_note() { return term(kMscVocab, "MustUseScopeNote"); }
inline std::string use_scope_note() { return term(kMscVocab, "UseScopeNote"); }
} // namespace mscvocab

} // namespace msc::vocab
