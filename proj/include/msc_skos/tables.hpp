#pragma once

#include "msc_skos/changelog.hpp"
#include "msc_skos/scheme.hpp"

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace msc {

// RFC 4180 CSV: quoted fields may hold commas, quotes ("") and newlines.
// A leading UTF-8 BOM is skipped; CRLF and LF line endings are accepted.
// Cells are returned verbatim (no trimming). Throws CsvError.
std::vector<std::vector<std::string>> read_csv(std::istream& in);

// Loaders for the three input tables. Each requires a header row naming the
// columns (any order, extra columns ignored):
//   concepts      code,text,description
//   translations  code,lang,label
//   changes       category,sources,targets,note
std::vector<ConceptRow> read_concept_table(std::istream& in);
std::vector<TranslationRow> read_translation_table(std::istream& in);
std::vector<ChangeRow> read_change_table(std::istream& in);

std::vector<ConceptRow> load_concept_table(const std::filesystem::path& path);
std::vector<TranslationRow> load_translation_table(const std::filesystem::path& path);
std::vector<ChangeRow> load_change_table(const std::filesystem::path& path);

} // namespace msc
