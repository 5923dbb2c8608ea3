#pragma once

#include "msc_skos/cli.hpp"
#include "msc_skos/scheme.hpp"
#include "msc_skos/tables.hpp"

#include "support/oracles.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace msc::test {

inline const std::string kLicense = "https://creativecommons.org/licenses/by-nc-sa/4.0/";

inline BuildConfig fixture_build_config() {
    BuildConfig config;
    config.version_id = "msc2020";
    config.metadata.license = kLicense;
    config.metadata.issued = "2021-05-07";
    return config;
}

inline ConceptScheme load_fixture_scheme() {
    return build_scheme(load_concept_table(kFixtureDir + "/concepts.csv"),
                        load_translation_table(kFixtureDir + "/translations.csv"), fixture_build_config());
}

// Same inputs as the golden file was produced from.
inline RunConfig fixture_run_config() {
    RunConfig config;
    config.command = Command::Build;
    config.concepts = kFixtureDir + "/concepts.csv";
    config.translations = kFixtureDir + "/translations.csv";
    config.version_id = "msc2020";
    config.license = kLicense;
    config.issued = "2021-05-07";
    return config;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << data;
}

// Fresh per-test scratch directory under the build tree's temp area.
inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("msc-skos-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace msc::test
