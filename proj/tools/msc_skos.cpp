// msc-skos: compile MSC release tables into SKOS/Turtle.
//
//   msc-skos build --concepts msc2020.csv --version-id msc2020 --license <iri> --out msc2020.ttl
//   msc-skos validate --concepts msc2020.csv --strict
//   msc-skos diff --old-concepts msc2010.csv --concepts msc2020.csv --changes changes.csv
//   msc-skos stats --concepts msc2020.csv
//   msc-skos extract --concepts msc2020.csv
//
// Options may also come from a TOML/INI file given with --config; command
// line flags take precedence.

#include "msc_skos/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

std::optional<std::filesystem::path> path_or_none(const std::string& s) {
    if (s.empty())
        return std::nullopt;
    return std::filesystem::path(s);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compile Mathematics Subject Classification tables into SKOS/Turtle", "msc-skos"};
    app.set_config("--config", "", "TOML/INI file with option values");

    std::string command;
    std::string concepts, translations, changes, old_concepts, out, mappings_out, report, issued;
    std::vector<std::string> collections;
    msc::RunConfig config;

    app.add_option("command", command, "build | validate | diff | stats | extract")
        ->required()
        ->check(CLI::IsMember({"build", "validate", "diff", "stats", "extract"}));
    app.add_option("--concepts", concepts, "concepts table (code,text,description)");
    app.add_option("--translations", translations, "translations table (code,lang,label)");
    app.add_option("--changes", changes, "changes table (category,sources,targets,note)");
    app.add_option("--old-concepts", old_concepts, "concepts table of the previous release");
    app.add_option("--base-uri", config.base_uri, "namespace for concept IRIs")
        ->envname("MSC_SKOS_BASE_URI");
    app.add_option("--old-base-uri", config.old_base_uri, "namespace of the previous release");
    app.add_option("--version-id", config.version_id, "release identifier, e.g. msc2020");
    app.add_option("--old-version-id", config.old_version_id, "identifier of the previous release");
    app.add_option("--license", config.license, "license IRI of the published scheme");
    app.add_option("--title", config.title, "scheme title");
    app.add_option("--creator", config.creators, "scheme creator (repeatable)");
    app.add_option("--issued", issued, "issue date (YYYY-MM-DD)");
    app.add_option("--collection", collections, "collection spec 'name=-DD' (repeatable)");
    app.add_flag("--strict", config.strict, "treat unresolved references and unparsed text as errors");
    app.add_flag("--refine-mappings", config.refine_mappings,
                 "use exact/broad/narrow match instead of mappingRelation where implied");
    app.add_option("--out", out, "output file (default: standard output)");
    app.add_option("--mappings-out", mappings_out, "mapping triples output file");
    app.add_option("--report", report, "write validation findings as JSON");

    try {
        app.parse(argc, argv);
        config.command = *msc::parse_command(command);
        config.concepts = path_or_none(concepts);
        config.translations = path_or_none(translations);
        config.changes = path_or_none(changes);
        config.old_concepts = path_or_none(old_concepts);
        config.out = path_or_none(out);
        config.mappings_out = path_or_none(mappings_out);
        config.report = path_or_none(report);
        if (!issued.empty())
            config.issued = issued;
        for (const auto& spec : collections)
            config.collections.push_back(msc::parse_collection_spec(spec));
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : msc::kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return msc::kExitInput;
    }
    return msc::run(config, std::cout, std::cerr);
}
