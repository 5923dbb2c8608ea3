#include "msc_skos/cli.hpp"

#include "msc_skos/changelog.hpp"
#include "msc_skos/errors.hpp"
#include "msc_skos/tables.hpp"
#include "msc_skos/turtle.hpp"
#include "msc_skos/validator.hpp"
#include "text_util.hpp"

#include <fstream>
#include <sstream>

namespace msc {

std::optional<Command> parse_command(std::string_view name) {
    if (name == "build")
        return Command::Build;
    if (name == "validate")
        return Command::Validate;
    if (name == "diff")
        return Command::Diff;
    if (name == "stats")
        return Command::Stats;
    if (name == "extract")
        return Command::Extract;
    return std::nullopt;
}

CollectionSpec parse_collection_spec(std::string_view text) {
    const auto eq = text.rfind('=');
    if (eq == std::string_view::npos)
        throw InputError("collection spec must look like 'name=-DD': " + std::string(text));
    CollectionSpec spec{std::string(detail::trim(text.substr(0, eq))),
                        std::string(detail::trim(text.substr(eq + 1)))};
    const auto& s = spec.facet_suffix;
    if (spec.name.empty() || s.size() != 3 || s[0] != '-' || !std::isdigit(static_cast<unsigned char>(s[1])) ||
        !std::isdigit(static_cast<unsigned char>(s[2])))
        throw InputError("invalid collection spec '" + std::string(text) + "'");
    return spec;
}

namespace {

// Placeholder license for commands that build a scheme only to inspect it.
constexpr const char* kInspectionLicense = "urn:x-msc-skos:unspecified-license";

class Outputs {
public:
    Outputs(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

    void write(const std::optional<std::filesystem::path>& path, const std::string& data) {
        if (!path) {
            out_ << data;
            return;
        }
        std::ofstream file(*path, std::ios::binary | std::ios::trunc);
        if (!file || !(file << data))
            throw InputError("cannot write " + path->string());
    }
    void write(const std::string& data) { write(config_.out, data); }

private:
    const RunConfig& config_;
    std::ostream& out_;
};

const std::filesystem::path& require(const std::optional<std::filesystem::path>& path, const char* flag) {
    if (!path)
        throw InputError(std::string("missing required option ") + flag);
    return *path;
}

ConceptScheme load_scheme(const RunConfig& config, bool for_build) {
    const auto rows = load_concept_table(require(config.concepts, "--concepts"));
    std::vector<TranslationRow> translations;
    if (config.translations)
        translations = load_translation_table(*config.translations);

    BuildConfig build;
    build.base_uri = config.base_uri;
    build.version_id = config.version_id;
    build.metadata.title = config.title;
    build.metadata.license = config.license;
    build.metadata.creators = config.creators;
    build.metadata.issued = config.issued;
    if (!config.collections.empty())
        build.collections = config.collections;
    if (!for_build) {
        if (build.version_id.empty())
            build.version_id = "current";
        if (build.metadata.license.empty())
            build.metadata.license = kInspectionLicense;
    }
    return build_scheme(rows, translations, build);
}

ConceptScheme load_old_scheme(const RunConfig& config) {
    const auto rows = load_concept_table(require(config.old_concepts, "--old-concepts"));
    BuildConfig build;
    build.base_uri = config.old_base_uri;
    build.version_id = config.old_version_id.empty() ? "previous" : config.old_version_id;
    build.metadata.license = config.license.empty() ? kInspectionLicense : config.license;
    return build_scheme(rows, {}, build);
}

std::filesystem::path default_mappings_path(const std::filesystem::path& out) {
    auto p = out;
    p.replace_extension();
    p += ".mappings.ttl";
    return p;
}

int run_build(const RunConfig& config, Outputs& outputs, std::ostream& err) {
    if (config.version_id.empty())
        throw InputError("missing required option --version-id");
    if (config.license.empty())
        throw InputError("missing required option --license");
    const ConceptScheme scheme = load_scheme(config, true);

    const ValidationReport report = validate_scheme(scheme, config.strict);
    write_report_text(err, report);
    if (config.report)
        outputs.write(config.report, report_to_json(report));
    if (config.strict && !report.ok())
        return kExitValidation;

    // Resolve mapping inputs before writing anything.
    std::vector<rdf::Triple> mappings;
    std::optional<std::filesystem::path> mappings_path;
    if (config.changes) {
        if (config.old_base_uri.empty())
            throw InputError("--changes requires --old-base-uri");
        mappings_path = config.mappings_out;
        if (!mappings_path && config.out)
            mappings_path = default_mappings_path(*config.out);
        if (!mappings_path)
            throw InputError("--changes requires --out or --mappings-out");
        const auto changes = parse_changes(load_change_table(*config.changes));
        mappings = build_mappings(changes, scheme, config.old_base_uri,
                                  {.strict = config.strict, .refine = config.refine_mappings});
    }

    const PrefixMap prefixes = default_prefixes(scheme);
    outputs.write(emit_turtle(scheme_to_triples(scheme), prefixes));
    if (mappings_path) {
        PrefixMap mapping_prefixes = prefixes;
        mapping_prefixes["mscprev"] = config.old_base_uri;
        outputs.write(mappings_path, emit_turtle(mappings, mapping_prefixes));
    }
    return kExitOk;
}

int run_validate(const RunConfig& config, Outputs& outputs) {
    const ConceptScheme scheme = load_scheme(config, false);
    const ValidationReport report = validate_scheme(scheme, config.strict);
    std::ostringstream text;
    write_report_text(text, report);
    outputs.write(text.str());
    if (config.report)
        outputs.write(config.report, report_to_json(report));
    return config.strict && !report.ok() ? kExitValidation : kExitOk;
}

int run_diff(const RunConfig& config, Outputs& outputs) {
    const ConceptScheme old_scheme = load_old_scheme(config);
    const ConceptScheme new_scheme = load_scheme(config, false);
    const SchemeDiff diff = diff_versions(old_scheme, new_scheme);

    std::ostringstream text;
    for (const auto& code : diff.added)
        text << "added " << code << '\n';
    for (const auto& code : diff.removed)
        text << "removed " << code << '\n';
    for (const auto& [code, before, after] : diff.relabeled)
        text << "relabeled " << code << ": \"" << before << "\" -> \"" << after << "\"\n";

    std::vector<Discrepancy> discrepancies;
    if (config.changes) {
        discrepancies = reconcile(diff, parse_changes(load_change_table(*config.changes)));
        for (const auto& d : discrepancies)
            text << "discrepancy " << to_string(d.kind) << ' ' << d.code << ": " << d.message << '\n';
    }
    outputs.write(text.str());
    return config.strict && !discrepancies.empty() ? kExitValidation : kExitOk;
}

int run_stats(const RunConfig& config, Outputs& outputs) {
    std::ostringstream text;
    write_stats_text(text, stats(load_scheme(config, false)));
    outputs.write(text.str());
    return kExitOk;
}

std::string describe(const Directive& d) {
    std::string s(to_string(d.kind));
    if (d.kind == DirectiveKind::ConditionalClause)
        s += "(" + *d.scope + "; " + std::string(to_string(*d.inner_verb)) + ")";
    s += ':';
    for (std::size_t i = 0; i < d.targets.size(); ++i)
        s += (i ? "," : "") + canonical_string(d.targets[i]);
    return s;
}

int run_extract(const RunConfig& config, Outputs& outputs) {
    const ConceptScheme scheme = load_scheme(config, false);
    std::ostringstream text;
    text << "code\tlabel\tdirectives\tremainder\n";
    for (const auto& [key, entry] : scheme.concepts) {
        std::string directives;
        for (const auto& d : entry.cross_refs)
            directives += (directives.empty() ? "" : " | ") + describe(d);
        text << key << '\t' << entry.label() << '\t' << directives << '\t'
             << entry.remainder.value_or("") << '\n';
    }
    outputs.write(text.str());
    return kExitOk;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Outputs outputs(config, out);
    try {
        switch (config.command) {
        case Command::Build:
            return run_build(config, outputs, err);
        case Command::Validate:
            return run_validate(config, outputs);
        case Command::Diff:
            return run_diff(config, outputs);
        case Command::Stats:
            return run_stats(config, outputs);
        case Command::Extract:
            return run_extract(config, outputs);
        }
    } catch (const InvalidIri& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const DanglingTarget& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

} // namespace msc
