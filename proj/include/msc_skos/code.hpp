#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace msc {

enum class Level {
    TopLevel,      // DD-XX
    SecondFacet,   // DD-DD
    SecondSubject, // DDUxx
    ThirdLevel,    // DDUDD
};

std::string_view to_string(Level level);

// A classified MSC code. Equality and ordering ignore the raw spelling and
// compare the canonical components only.
class MscCode {
public:
    MscCode(std::string raw, std::string major, Level level, std::optional<char> letter,
            std::optional<std::string> minor);

    const std::string& raw() const noexcept { return raw_; }
    const std::string& major() const noexcept { return major_; }
    Level level() const noexcept { return level_; }
    std::optional<char> letter() const noexcept { return letter_; }
    const std::optional<std::string>& minor() const noexcept { return minor_; }

    // Second-level classes of either kind.
    bool is_second_level() const noexcept {
        return level_ == Level::SecondFacet || level_ == Level::SecondSubject;
    }

    friend bool operator==(const MscCode& a, const MscCode& b) noexcept {
        return a.key() == b.key();
    }
    friend std::strong_ordering operator<=>(const MscCode& a, const MscCode& b) noexcept {
        return a.key() <=> b.key();
    }

private:
    const std::string& key() const noexcept { return canonical_; }

    std::string raw_;
    std::string major_;
    Level level_;
    std::optional<char> letter_;
    std::optional<std::string> minor_;
    std::string canonical_;
};

// Parses a code in one of the four five-character forms, or the bare two-digit
// short form of a top level class. Surrounding whitespace is ignored; the
// `xx`/`XX` tails are accepted in any case. Throws MalformedCode.
MscCode parse_code(std::string_view text);

// Non-throwing variant for scanners.
std::optional<MscCode> try_parse_code(std::string_view text);

std::optional<MscCode> parent_code(const MscCode& code);

std::string canonical_string(const MscCode& code);

// "-DD" for facet classes such as 11-11, absent for every other level.
std::optional<std::string> facet_suffix(const MscCode& code);

} // namespace msc
