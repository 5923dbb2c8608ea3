#include "msc_skos/errors.hpp"
#include "msc_skos/turtle.hpp"
#include "msc_skos/validator.hpp"
#include "msc_skos/vocabulary.hpp"

#include "support/fixture.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace msc {
namespace {

using rdf::Iri;
using rdf::Literal;
using rdf::Triple;

const std::string kPrefixes =
    "@prefix msc: <http://msc.org/resources/MSC/msc2020/> .\n"
    "@prefix mscvocab: <http://msc2010.org/resources/MSC/2010/info/vocab#> .\n"
    "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
    "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
    "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n";

// Reference listing of the reified 03B45 -> 03B44 statement.
const std::string kStatementListing =
    "msc:SeeForStatement-03B45-to-03B44 rdf:type owl:NamedIndividual ,\n"
    "    mscvocab:SeeForStatement ;\n"
    "    rdf:object <http://msc.org/resources/MSC/msc2020/03B44> ;\n"
    "    rdf:predicate mscvocab:seeConditionally ;\n"
    "    rdf:subject <http://msc.org/resources/MSC/msc2020/03B45> ;\n"
    "    mscvocab:scope \"for temporal logic\"^^xsd:string .\n";

const std::string kTable1 =
    "Modal logic (including the logic of norms) {For knowledge and belief, see 03B42; for temporal "
    "logic, see 03B44; for provability logic, see also 03F45}";

ConceptScheme table1_scheme() {
    return build_scheme({{"03B45", "Modal logic (including the logic of norms)", kTable1},
                         {"03B42", "Logics of knowledge and belief (including belief change)", ""},
                         {"03B44", "Temporal logic", ""},
                         {"03F45", "Provability logics and related algebras (e.g. diagonalizable algebras)", ""}},
                        {}, test::fixture_build_config());
}

std::vector<Triple> with_subject(const std::vector<Triple>& triples, const std::string& iri) {
    std::vector<Triple> out;
    for (const auto& t : triples)
        if (rdf::is_iri(t.subject) && *rdf::iri_value(t.subject) == iri)
            out.push_back(t);
    return test::sorted(out);
}

TEST(ParseTurtleSubset, ReferenceStatementListing) {
    const auto triples = parse_turtle_subset(kPrefixes + kStatementListing);
    EXPECT_EQ(triples.size(), 6u);
}

TEST(SchemeToTriples, StatementBlockMatchesReferenceListing) {
    const auto scheme = table1_scheme();
    const std::string ttl = emit_turtle(scheme_to_triples(scheme), default_prefixes(scheme));
    const std::string id = "http://msc.org/resources/MSC/msc2020/SeeForStatement-03B45-to-03B44";
    EXPECT_EQ(with_subject(parse_turtle_subset(ttl), id),
              test::sorted(parse_turtle_subset(kPrefixes + kStatementListing)));
    EXPECT_NE(ttl.find("    mscvocab:scope \"for temporal logic\"^^xsd:string ."), std::string::npos) << ttl;
}

TEST(SchemeToTriples, PlainConditionalTripleAndNoNarrower) {
    const auto scheme = table1_scheme();
    const auto triples = scheme_to_triples(scheme);
    const Triple plain{Iri{scheme.base_uri + "03B45"}, Iri{vocab::mscvocab::see_conditionally()},
                       Iri{scheme.base_uri + "03B42"}};
    EXPECT_NE(std::find(triples.begin(), triples.end(), plain), triples.end());
    std::size_t broader = 0;
    for (const auto& t : triples) {
        EXPECT_NE(t.predicate.value, vocab::skos::narrower());
        broader += t.predicate.value == vocab::skos::broader();
    }
    EXPECT_EQ(broader, 4u); // every concept here is third level
}

TEST(SchemeToTriples, SeeAlsoClauseKeepsItsVerb) {
    const auto scheme = table1_scheme();
    const auto block = with_subject(scheme_to_triples(scheme),
                                    scheme.base_uri + "SeeForStatement-03B45-to-03F45");
    EXPECT_EQ(block.size(), 7u);
    const Triple comment{Iri{scheme.base_uri + "SeeForStatement-03B45-to-03F45"}, Iri{vocab::rdfs::comment()},
                         Literal{"see also", std::nullopt, std::nullopt}};
    EXPECT_NE(std::find(block.begin(), block.end(), comment), block.end());
}

TEST(EmitTurtle, LayoutAndOrdering) {
    const PrefixMap prefixes{{"ex", "http://example.org/"}, {"a", "http://a.org/"}};
    const std::vector<Triple> triples{
        {Iri{"http://example.org/s"}, Iri{"http://example.org/p"}, Literal{"b", "en", std::nullopt}},
        {Iri{"http://example.org/s"}, Iri{"http://example.org/p"}, Literal{"a", std::nullopt, std::nullopt}},
        {Iri{"http://example.org/s"}, Iri{vocab::rdf::type()}, Iri{"http://a.org/C"}},
        {Iri{"http://a.org/first"}, Iri{"http://example.org/q"}, Iri{"http://other.org/x y"}},
    };
    EXPECT_THROW(emit_turtle(triples, prefixes), InvalidIri);

    auto fine = triples;
    fine.pop_back();
    const std::string ttl = emit_turtle(fine, prefixes);
    EXPECT_EQ(ttl,
              "@prefix a: <http://a.org/> .\n"
              "@prefix ex: <http://example.org/> .\n"
              "\n"
              "ex:s <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> a:C ;\n"
              "    ex:p \"a\" ,\n"
              "        \"b\"@en .\n");
}

TEST(EmitTurtle, RejectsRelativeIri) {
    EXPECT_THROW(emit_turtle({{Iri{"relative/path"}, Iri{"http://e.org/p"}, Iri{"http://e.org/o"}}}, {}),
                 UnprefixableIri);
}

TEST(EmitTurtle, EscapesLiterals) {
    const std::vector<Triple> triples{{Iri{"http://e.org/s"}, Iri{"http://e.org/p"},
                                       Literal{"q\"b\\n\nt\tr\r", std::nullopt, std::nullopt}}};
    const std::string ttl = emit_turtle(triples, {});
    EXPECT_NE(ttl.find(R"("q\"b\\n\nt\tr\r")"), std::string::npos) << ttl;
    EXPECT_EQ(parse_turtle_subset(ttl), triples);
}

TEST(EmitTurtle, IsDeterministic) {
    const auto scheme = test::load_fixture_scheme();
    auto triples = scheme_to_triples(scheme);
    const std::string first = emit_turtle(triples, default_prefixes(scheme));
    std::reverse(triples.begin(), triples.end());
    EXPECT_EQ(emit_turtle(triples, default_prefixes(scheme)), first);
}

TEST(ParseTurtleSubset, SyntaxFeatures) {
    const std::string text = "\xEF\xBB\xBF# comment\n"
                             "PREFIX ex: <http://e.org/>\n"
                             "@prefix : <http://d.org/> .\n"
                             "ex:s a ex:C ; ; ex:p :x , _:b1 , \"plain\" , \"\\u00e9\\t\"@fr-CA ;\n"
                             "  ex:q \"1\"^^<http://www.w3.org/2001/XMLSchema#integer> ; .\n"
                             "_:b1 ex:r ex:end.\n";
    const auto triples = parse_turtle_subset(text);
    ASSERT_EQ(triples.size(), 7u);
    EXPECT_EQ(triples[0].predicate.value, vocab::rdf::type());
    EXPECT_EQ(triples[1].object, rdf::Node{Iri{"http://d.org/x"}});
    EXPECT_EQ(triples[4].object, (rdf::Node{Literal{"\xC3\xA9\t", "fr-CA", std::nullopt}}));
    EXPECT_EQ(triples[6].object, rdf::Node{Iri{"http://e.org/end"}});
}

TEST(ParseTurtleSubset, UnterminatedStringReportsPosition) {
    try {
        parse_turtle_subset("@prefix ex: <http://e.org/> .\nex:s ex:p \"open .\n");
        FAIL() << "expected TurtleSyntaxError";
    } catch (const TurtleSyntaxError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 11u);
    }
}

TEST(ParseTurtleSubset, OtherErrors) {
    EXPECT_THROW(parse_turtle_subset("ex:s ex:p ex:o ."), TurtleSyntaxError); // undeclared prefix
    EXPECT_THROW(parse_turtle_subset("<http://e.org/s> <http://e.org/p> ."), TurtleSyntaxError);
    EXPECT_THROW(parse_turtle_subset("<http://e.org/s> <http://e.org/p> <http://e.org/o>"), TurtleSyntaxError);
    EXPECT_TRUE(parse_turtle_subset("").empty());
}

TEST(TurtleProperty, RoundtripOfRandomTriples) {
    test::Rng rng(314);
    const PrefixMap prefixes{{"msc", "http://msc.org/resources/MSC/msc2020/"},
                             {"skos", "http://www.w3.org/2004/02/skos/core#"},
                             {"xsd", "http://www.w3.org/2001/XMLSchema#"}};
    for (int i = 0; i < 300; ++i) {
        const auto triples = test::random_triples(rng, 40);
        const std::string ttl = emit_turtle(triples, prefixes);
        const auto back = parse_turtle_subset(ttl);
        // Multiset equality.
        EXPECT_EQ(test::sorted(back), test::sorted(triples)) << ttl;
        EXPECT_EQ(emit_turtle(back, prefixes), ttl);
    }
}

TEST(TurtleProperty, EmittedIrisHaveNoSpaces) {
    test::Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        auto cfg = test::fixture_build_config();
        const auto scheme = build_scheme(test::random_rows(rng, 30), {}, cfg);
        for (const auto& t : parse_turtle_subset(emit_turtle(scheme_to_triples(scheme), default_prefixes(scheme)))) {
            for (const rdf::Node* n : {&t.subject, &t.object})
                if (rdf::is_iri(*n))
                    EXPECT_EQ(rdf::iri_value(*n)->find(' '), std::string::npos);
            EXPECT_EQ(t.predicate.value.find(' '), std::string::npos);
        }
    }
}

TEST(ReadScheme, FixtureRoundtripValidatesIdentically) {
    const auto scheme = test::load_fixture_scheme();
    const auto triples = scheme_to_triples(scheme);
    const auto back = read_scheme(parse_turtle_subset(emit_turtle(triples, default_prefixes(scheme))),
                                  scheme.base_uri);
    EXPECT_EQ(validate_scheme(back, false), validate_scheme(scheme, false));
    EXPECT_EQ(validate_scheme(back, true), validate_scheme(scheme, true));
    EXPECT_EQ(test::sorted(scheme_to_triples(back)), test::sorted(triples));
}

TEST(ReadScheme, RandomSchemesRoundtrip) {
    test::Rng rng(4242);
    for (int i = 0; i < 60; ++i) {
        const auto scheme = build_scheme(test::random_rows(rng, 25), {}, test::fixture_build_config());
        const auto triples = scheme_to_triples(scheme);
        const auto back = read_scheme(parse_turtle_subset(emit_turtle(triples, default_prefixes(scheme))),
                                      scheme.base_uri);
        EXPECT_EQ(validate_scheme(back, true), validate_scheme(scheme, true));
        EXPECT_EQ(test::sorted(scheme_to_triples(back)), test::sorted(triples));
    }
}

} // namespace
} // namespace msc
