#pragma once

// Small string helpers shared by the implementation files. Not installed.

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace msc::detail {

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

inline std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Collapses whitespace runs to one space and trims both ends.
inline std::string normalize_space(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending = false;
    for (char c : s) {
        if (is_space(c)) {
            pending = !out.empty();
            continue;
        }
        if (pending)
            out.push_back(' ');
        pending = false;
        out.push_back(c);
    }
    return out;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

inline bool contains_space(std::string_view s) {
    return std::any_of(s.begin(), s.end(), is_space);
}

inline bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           static_cast<unsigned char>(c) >= 0x80;
}

// Case-insensitive search for `word` delimited by non-word characters.
inline bool contains_word(std::string_view haystack, std::string_view word) {
    const std::string h = lower(haystack);
    const std::string w = lower(word);
    for (std::size_t pos = h.find(w); pos != std::string::npos; pos = h.find(w, pos + 1)) {
        const bool left = pos == 0 || !is_word_char(h[pos - 1]);
        const std::size_t end = pos + w.size();
        const bool right = end == h.size() || !is_word_char(h[end]);
        if (left && right)
            return true;
    }
    return false;
}

} // namespace msc::detail
