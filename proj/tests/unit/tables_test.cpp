#include "msc_skos/errors.hpp"
#include "msc_skos/tables.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace msc {
namespace {

using Rows = std::vector<std::vector<std::string>>;

Rows csv(const std::string& text) {
    std::istringstream in(text);
    return read_csv(in);
}

TEST(ReadCsv, QuotingAndLineEndings) {
    EXPECT_EQ(csv("a,b\r\n\"x, y\",\"say \"\"hi\"\"\"\n"), (Rows{{"a", "b"}, {"x, y", "say \"hi\""}}));
    EXPECT_EQ(csv("a\n\"multi\nline\"\n"), (Rows{{"a"}, {"multi\nline"}}));
    EXPECT_EQ(csv("\xEF\xBB\xBFh1,h2\n1,\n"), (Rows{{"h1", "h2"}, {"1", ""}}));
    EXPECT_EQ(csv("a,b\n\n c , d\n"), (Rows{{"a", "b"}, {" c ", " d"}}));
    EXPECT_EQ(csv("a,b"), (Rows{{"a", "b"}}));
}

TEST(ReadCsv, Errors) {
    EXPECT_THROW(csv("\"open\n"), CsvError);
    EXPECT_THROW(csv("a\"b\n"), CsvError);
    EXPECT_THROW(csv("\"a\"b\n"), CsvError);
}

TEST(ConceptTable, ColumnsByHeader) {
    std::istringstream in("description,code,extra,text\n\"Long [See also 11A05]\",11A41,z,Primes\n");
    const auto rows = read_concept_table(in);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].code, "11A41");
    EXPECT_EQ(rows[0].text, "Primes");
    EXPECT_EQ(rows[0].description, "Long [See also 11A05]");
}

TEST(ConceptTable, DescriptionOptionalOtherColumnsRequired) {
    std::istringstream no_description("code,text\n68-XX,Computer science\n");
    EXPECT_EQ(read_concept_table(no_description).at(0).description, "");
    std::istringstream no_text("code,description\n68-XX,x\n");
    EXPECT_THROW(read_concept_table(no_text), InputError);
    std::istringstream empty("");
    EXPECT_THROW(read_concept_table(empty), InputError);
}

TEST(TranslationAndChangeTables, Read) {
    std::istringstream translations("code,lang,label\n68-XX,de,Informatik\n");
    const auto t = read_translation_table(translations);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t[0].language, "de");

    std::istringstream changes("category,sources,targets\nnew,,05-11\n");
    const auto c = read_change_table(changes);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].targets, "05-11");
    EXPECT_EQ(c[0].note, "");
}

TEST(LoadTables, MissingFile) {
    EXPECT_THROW(load_concept_table("/nonexistent/concepts.csv"), InputError);
}

} // namespace
} // namespace msc
