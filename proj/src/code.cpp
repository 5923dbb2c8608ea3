#include "msc_skos/code.hpp"

#include "msc_skos/errors.hpp"
#include "text_util.hpp"

namespace msc {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_x(char c) { return c == 'x' || c == 'X'; }

std::string compose(const std::string& major, Level level, std::optional<char> letter,
                    const std::optional<std::string>& minor) {
    switch (level) {
    case Level::TopLevel:
        return major + "-XX";
    case Level::SecondFacet:
        return major + "-" + *minor;
    case Level::SecondSubject:
        return major + *letter + "xx";
    case Level::ThirdLevel:
        return major + *letter + *minor;
    }
    return {};
}

} // namespace

std::string_view to_string(Level level) {
    switch (level) {
    case Level::TopLevel:
        return "top";
    case Level::SecondFacet:
        return "second-facet";
    case Level::SecondSubject:
        return "second-subject";
    case Level::ThirdLevel:
        return "third";
    }
    return "?";
}

MscCode::MscCode(std::string raw, std::string major, Level level, std::optional<char> letter,
                 std::optional<std::string> minor)
    : raw_(std::move(raw)), major_(std::move(major)), level_(level), letter_(letter),
      minor_(std::move(minor)), canonical_(compose(major_, level_, letter_, minor_)) {}

std::optional<MscCode> try_parse_code(std::string_view text) {
    const std::string_view s = detail::trim(text);
    if (s.size() == 2 && is_digit(s[0]) && is_digit(s[1]))
        return MscCode(std::string(text), std::string(s), Level::TopLevel, std::nullopt,
                       std::nullopt);
    if (s.size() != 5 || !is_digit(s[0]) || !is_digit(s[1]))
        return std::nullopt;

    std::string major(s.substr(0, 2));
    const char sep = s[2];
    const std::string tail(s.substr(3, 2));
    const bool tail_x = is_x(tail[0]) && is_x(tail[1]);
    const bool tail_digits = is_digit(tail[0]) && is_digit(tail[1]);

    if (sep == '-') {
        if (tail_x)
            return MscCode(std::string(text), major, Level::TopLevel, std::nullopt, std::nullopt);
        if (tail_digits)
            return MscCode(std::string(text), major, Level::SecondFacet, std::nullopt, tail);
        return std::nullopt;
    }
    if (is_upper(sep)) {
        if (tail_x)
            return MscCode(std::string(text), major, Level::SecondSubject, sep, std::nullopt);
        if (tail_digits)
            return MscCode(std::string(text), major, Level::ThirdLevel, sep, tail);
    }
    return std::nullopt;
}

MscCode parse_code(std::string_view text) {
    if (auto code = try_parse_code(text))
        return *std::move(code);
    throw MalformedCode(std::string(text));
}

std::optional<MscCode> parent_code(const MscCode& code) {
    switch (code.level()) {
    case Level::TopLevel:
        return std::nullopt;
    case Level::SecondFacet:
    case Level::SecondSubject:
        return MscCode(code.major() + "-XX", code.major(), Level::TopLevel, std::nullopt,
                       std::nullopt);
    case Level::ThirdLevel: {
        std::string raw = code.major() + *code.letter() + "xx";
        return MscCode(std::move(raw), code.major(), Level::SecondSubject, code.letter(),
                       std::nullopt);
    }
    }
    return std::nullopt;
}

std::string canonical_string(const MscCode& code) {
    return compose(code.major(), code.level(), code.letter(), code.minor());
}

std::optional<std::string> facet_suffix(const MscCode& code) {
    if (code.level() != Level::SecondFacet)
        return std::nullopt;
    return "-" + *code.minor();
}

} // namespace msc
