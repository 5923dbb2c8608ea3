#pragma once

#include "msc_skos/scheme.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace msc {

enum class Command { Build, Validate, Diff, Stats, Extract };

std::optional<Command> parse_command(std::string_view name);

struct RunConfig {
    Command command = Command::Build;
    std::optional<std::filesystem::path> concepts;
    std::optional<std::filesystem::path> translations;
    std::optional<std::filesystem::path> changes;
    std::optional<std::filesystem::path> old_concepts;
    std::string base_uri;
    std::string old_base_uri;
    std::string version_id;
    std::string old_version_id;
    std::string license;
    std::string title;
    std::vector<std::string> creators;
    std::optional<std::string> issued;
    std::vector<CollectionSpec> collections; // empty: defaults
    bool strict = false;
    bool refine_mappings = false;
    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> mappings_out;
    std::optional<std::filesystem::path> report; // JSON findings
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInput = 2;

// Executes one command. Data goes to `out` (or the configured files),
// diagnostics to `err`. Never throws; failures map to the exit codes above.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses "name=-DD" into a collection spec. Throws InputError.
CollectionSpec parse_collection_spec(std::string_view text);

} // namespace msc
