#include "msc_skos/tables.hpp"

#include "msc_skos/errors.hpp"

#include <fstream>
#include <iterator>
#include <map>

namespace msc {

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
    const std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::size_t i = data.compare(0, 3, "\xEF\xBB\xBF") == 0 ? 3 : 0;

    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    std::size_t line = 1;
    bool quoted = false;
    bool closed = false; // just left a quoted section
    bool field_started = false;

    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_started = false;
        closed = false;
    };
    auto end_record = [&] {
        end_field();
        // Blank lines are skipped.
        if (!(record.size() == 1 && record.front().empty()))
            records.push_back(std::move(record));
        record.clear();
    };

    for (; i < data.size(); ++i) {
        const char c = data[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < data.size() && data[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                    closed = true;
                }
            } else {
                if (c == '\n')
                    ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
        case '"':
            if (field_started)
                throw CsvError("line " + std::to_string(line) + ": quote inside unquoted field");
            quoted = true;
            field_started = true;
            break;
        case ',':
            end_field();
            break;
        case '\r':
            if (i + 1 < data.size() && data[i + 1] == '\n')
                break;
            [[fallthrough]];
        case '\n':
            end_record();
            ++line;
            break;
        default:
            if (closed)
                throw CsvError("line " + std::to_string(line) + ": text after closing quote");
            field.push_back(c);
            field_started = true;
        }
    }
    if (quoted)
        throw CsvError("unterminated quoted field at end of input");
    if (field_started || !field.empty() || !record.empty())
        end_record();
    return records;
}

namespace {

class Columns {
public:
    Columns(const std::vector<std::string>& header, std::initializer_list<const char*> required) {
        for (std::size_t i = 0; i < header.size(); ++i)
            index_[header[i]] = i;
        for (const char* name : required) {
            if (!index_.count(name))
                throw CsvError(std::string("missing column '") + name + "'");
        }
    }

    std::string get(const std::vector<std::string>& row, const char* name) const {
        auto it = index_.find(name);
        if (it == index_.end() || it->second >= row.size())
            return {};
        return row[it->second];
    }

private:
    std::map<std::string, std::size_t> index_;
};

std::vector<std::vector<std::string>> read_with_header(std::istream& in) {
    auto records = read_csv(in);
    if (records.empty())
        throw CsvError("table has no header row");
    return records;
}

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path.string());
    return in;
}

} // namespace

std::vector<ConceptRow> read_concept_table(std::istream& in) {
    auto records = read_with_header(in);
    const Columns cols(records.front(), {"code", "text"});
    std::vector<ConceptRow> rows;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& r = records[i];
        rows.push_back({cols.get(r, "code"), cols.get(r, "text"), cols.get(r, "description")});
    }
    return rows;
}

std::vector<TranslationRow> read_translation_table(std::istream& in) {
    auto records = read_with_header(in);
    const Columns cols(records.front(), {"code", "lang", "label"});
    std::vector<TranslationRow> rows;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& r = records[i];
        rows.push_back({cols.get(r, "code"), cols.get(r, "lang"), cols.get(r, "label")});
    }
    return rows;
}

std::vector<ChangeRow> read_change_table(std::istream& in) {
    auto records = read_with_header(in);
    const Columns cols(records.front(), {"category", "sources", "targets"});
    std::vector<ChangeRow> rows;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& r = records[i];
        rows.push_back({cols.get(r, "category"), cols.get(r, "sources"), cols.get(r, "targets"),
                        cols.get(r, "note")});
    }
    return rows;
}

std::vector<ConceptRow> load_concept_table(const std::filesystem::path& path) {
    auto in = open(path);
    return read_concept_table(in);
}

std::vector<TranslationRow> load_translation_table(const std::filesystem::path& path) {
    auto in = open(path);
    return read_translation_table(in);
}

std::vector<ChangeRow> load_change_table(const std::filesystem::path& path) {
    auto in = open(path);
    return read_change_table(in);
}

} // namespace msc
