#include "msc_skos/cli.hpp"
#include "msc_skos/errors.hpp"
#include "msc_skos/turtle.hpp"

#include "support/fixture.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace msc {
namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(const RunConfig& config) {
    std::ostringstream out, err;
    const int status = run(config, out, err);
    return {status, out.str(), err.str()};
}

TEST(Run, BuildMatchesGolden) {
    const auto dir = test::scratch_dir("golden");
    auto config = test::fixture_run_config();
    config.out = dir / "fixture.ttl";
    const auto r = invoke(config);
    ASSERT_EQ(r.status, kExitOk) << r.err;
    EXPECT_TRUE(r.out.empty()) << "data leaked to the output stream";
    EXPECT_EQ(test::read_file(*config.out), test::read_file(test::kGoldenDir + "/fixture.ttl"));
    EXPECT_NE(r.err.find("0 error(s)"), std::string::npos) << r.err;
}

TEST(Run, BuildToStdoutKeepsStreamsApart) {
    const auto r = invoke(test::fixture_run_config());
    ASSERT_EQ(r.status, kExitOk);
    EXPECT_EQ(r.out, test::read_file(test::kGoldenDir + "/fixture.ttl"));
    EXPECT_EQ(r.err.find("@prefix"), std::string::npos);
    EXPECT_NO_THROW(parse_turtle_subset(r.out));
}

TEST(Run, BuildIsIdempotent) {
    const auto dir = test::scratch_dir("idempotent");
    auto config = test::fixture_run_config();
    config.out = dir / "a.ttl";
    config.report = dir / "a.json";
    ASSERT_EQ(invoke(config).status, kExitOk);
    const auto first = test::read_file(*config.out) + test::read_file(*config.report);
    ASSERT_EQ(invoke(config).status, kExitOk);
    EXPECT_EQ(test::read_file(*config.out) + test::read_file(*config.report), first);
}

TEST(Run, BuildWithChangesWritesMappingsFile) {
    const auto dir = test::scratch_dir("mappings");
    auto config = test::fixture_run_config();
    config.changes = test::kFixtureDir + "/changes.csv";
    config.old_base_uri = "http://msc2010.org/resources/MSC/2010/";
    config.out = dir / "fixture.ttl";
    const auto r = invoke(config);
    ASSERT_EQ(r.status, kExitOk) << r.err;
    const auto mappings = test::read_file(dir / "fixture.mappings.ttl");
    EXPECT_NE(mappings.find("@prefix mscprev: <http://msc2010.org/resources/MSC/2010/>"), std::string::npos);
    EXPECT_NE(mappings.find("mscprev:80M25"), std::string::npos) << mappings;
    EXPECT_NE(mappings.find("msc:05-XX skos:historyNote"), std::string::npos) << mappings;
    EXPECT_EQ(test::read_file(*config.out), test::read_file(test::kGoldenDir + "/fixture.ttl"));

    config.old_base_uri.clear();
    EXPECT_EQ(invoke(config).status, kExitInput);
}

TEST(Run, BuildRequiresVersionAndLicense) {
    auto config = test::fixture_run_config();
    config.license.clear();
    const auto r = invoke(config);
    EXPECT_EQ(r.status, kExitInput);
    EXPECT_NE(r.err.find("--license"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
    config = test::fixture_run_config();
    config.version_id.clear();
    EXPECT_EQ(invoke(config).status, kExitInput);
}

TEST(Run, StrictValidateOnDanglingReference) {
    RunConfig config;
    config.command = Command::Validate;
    config.concepts = test::kTestFixtureDir + "/dangling.csv";
    config.strict = true;
    const auto r = invoke(config);
    EXPECT_EQ(r.status, kExitValidation);
    EXPECT_NE(r.out.find("error V3 03B25"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("1 error(s), 0 warning(s)"), std::string::npos) << r.out;

    config.strict = false;
    EXPECT_EQ(invoke(config).status, kExitOk);
}

TEST(Run, StrictBuildWithErrorsWritesNothing) {
    const auto dir = test::scratch_dir("strict-build");
    auto config = test::fixture_run_config();
    config.concepts = test::kTestFixtureDir + "/dangling.csv";
    config.translations.reset();
    config.strict = true;
    config.out = dir / "out.ttl";
    EXPECT_EQ(invoke(config).status, kExitValidation);
    EXPECT_FALSE(std::filesystem::exists(*config.out));
}

TEST(Run, StatsOnEmptyTableIsInputError) {
    RunConfig config;
    config.command = Command::Stats;
    config.concepts = test::kTestFixtureDir + "/empty.csv";
    const auto r = invoke(config);
    EXPECT_EQ(r.status, kExitInput);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

TEST(Run, MissingConceptsFileIsInputError) {
    RunConfig config;
    config.command = Command::Stats;
    config.concepts = "/nonexistent.csv";
    EXPECT_EQ(invoke(config).status, kExitInput);
    config.concepts.reset();
    EXPECT_EQ(invoke(config).status, kExitInput);
}

TEST(Run, Stats) {
    RunConfig config;
    config.command = Command::Stats;
    config.concepts = test::kFixtureDir + "/concepts.csv";
    const auto r = invoke(config);
    ASSERT_EQ(r.status, kExitOk) << r.err;
    EXPECT_NE(r.out.find("concepts: 25\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("top-level: 6\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("second-level: 11 (facet 7, subject 4)\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("third-level: 8\n"), std::string::npos) << r.out;
    EXPECT_TRUE(r.err.empty());
}

TEST(Run, DiffWithChanges) {
    RunConfig config;
    config.command = Command::Diff;
    config.concepts = test::kFixtureDir + "/concepts.csv";
    config.old_concepts = test::kFixtureDir + "/concepts-previous.csv";
    config.changes = test::kFixtureDir + "/changes.csv";
    config.strict = true;
    const auto r = invoke(config);
    ASSERT_EQ(r.status, kExitOk) << r.err;
    EXPECT_EQ(r.out,
              "added 05-11\n"
              "added 11-11\n"
              "removed 80M25\n"
              "relabeled 01-01: \"Instructional exposition (textbooks; tutorial papers) pertaining to history and "
              "biography\" -> \"Introductory exposition (textbooks; tutorial papers) pertaining to history and "
              "biography\"\n");

    config.changes.reset();
    config.old_concepts.reset();
    EXPECT_EQ(invoke(config).status, kExitInput);
}

TEST(Run, Extract) {
    RunConfig config;
    config.command = Command::Extract;
    config.concepts = test::kFixtureDir + "/concepts.csv";
    const auto r = invoke(config);
    ASSERT_EQ(r.status, kExitOk) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "code\tlabel\tdirectives\tremainder");
    EXPECT_NE(r.out.find("03B25\tDecidability of theories and sets of sentences\tsee-also:11U05\t\n"),
              std::string::npos)
        << r.out;
    EXPECT_NE(r.out.find("conditional(for temporal logic; see):03B44"), std::string::npos);
}

TEST(CollectionSpec, Parse) {
    const auto spec = parse_collection_spec("research data=-11");
    EXPECT_EQ(spec.name, "research data");
    EXPECT_EQ(spec.facet_suffix, "-11");
    EXPECT_THROW(parse_collection_spec("no suffix"), InputError);
    EXPECT_THROW(parse_collection_spec("x=11"), InputError);
    EXPECT_THROW(parse_collection_spec("=-11"), InputError);
}

TEST(ParseCommand, Names) {
    EXPECT_EQ(parse_command("build"), Command::Build);
    EXPECT_EQ(parse_command("extract"), Command::Extract);
    EXPECT_FALSE(parse_command("serve"));
}

} // namespace
} // namespace msc
