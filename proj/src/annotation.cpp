#include "msc_skos/annotation.hpp"

#include "text_util.hpp"

#include <utility>

namespace msc {

using detail::lower;
using detail::trim;

std::string_view to_string(DirectiveKind kind) {
    switch (kind) {
    case DirectiveKind::SeeAlso:
        return "see-also";
    case DirectiveKind::SeeMainly:
        return "see-mainly";
    case DirectiveKind::SeeFor:
        return "see";
    case DirectiveKind::ConditionalClause:
        return "conditional";
    }
    return "?";
}

std::string_view to_string(ReferenceVerb verb) {
    switch (verb) {
    case ReferenceVerb::See:
        return "see";
    case ReferenceVerb::SeeAlso:
        return "see also";
    case ReferenceVerb::SeeMainly:
        return "see mainly";
    }
    return "?";
}

std::string_view to_string(ScopeMarker marker) {
    switch (marker) {
    case ScopeMarker::NotUse:
        return "NotUse";
    case ScopeMarker::MustUse:
        return "MustUse";
    case ScopeMarker::Use:
        return "Use";
    }
    return "?";
}

namespace {

struct Reference {
    ReferenceVerb verb;
    std::vector<MscCode> targets;
};

// `lc` starts with `keyword` followed by a word boundary.
bool starts_with_word(std::string_view lc, std::string_view keyword) {
    if (lc.substr(0, keyword.size()) != keyword)
        return false;
    return lc.size() == keyword.size() || !detail::is_word_char(lc[keyword.size()]);
}

std::optional<std::vector<MscCode>> parse_code_list(std::string_view text) {
    std::vector<MscCode> codes;
    for (std::string_view item : detail::split(text, ',')) {
        // "11A05 and 11A41" is common in hand-written lists.
        std::string lc = lower(item);
        std::size_t start = 0;
        while (true) {
            const std::size_t pos = lc.find(" and ", start);
            const std::string_view piece =
                trim(item.substr(start, pos == std::string::npos ? std::string_view::npos
                                                                  : pos - start));
            auto code = try_parse_code(piece);
            if (piece.empty() || !code)
                return std::nullopt;
            codes.push_back(*std::move(code));
            if (pos == std::string::npos)
                break;
            start = pos + 5;
        }
    }
    if (codes.empty())
        return std::nullopt;
    return codes;
}

std::optional<Reference> parse_reference(std::string_view text) {
    const std::string lc = lower(text);
    ReferenceVerb verb;
    std::size_t skip;
    if (starts_with_word(lc, "see also")) {
        verb = ReferenceVerb::SeeAlso;
        skip = 8;
    } else if (starts_with_word(lc, "see mainly")) {
        verb = ReferenceVerb::SeeMainly;
        skip = 10;
    } else if (starts_with_word(lc, "see")) {
        verb = ReferenceVerb::See;
        skip = 3;
    } else {
        return std::nullopt;
    }
    auto codes = parse_code_list(text.substr(skip));
    if (!codes)
        return std::nullopt;
    return Reference{verb, *std::move(codes)};
}

std::optional<Directive> parse_clause(std::string_view clause) {
    const std::string lc = lower(clause);
    if (!starts_with_word(lc, "for")) {
        auto ref = parse_reference(clause);
        if (!ref)
            return std::nullopt;
        DirectiveKind kind = DirectiveKind::SeeFor;
        if (ref->verb == ReferenceVerb::SeeAlso)
            kind = DirectiveKind::SeeAlso;
        else if (ref->verb == ReferenceVerb::SeeMainly)
            kind = DirectiveKind::SeeMainly;
        return Directive{kind, std::move(ref->targets), std::nullopt, std::nullopt};
    }

    // "for <scope>, see ..." -- the scope runs up to the first comma that is
    // followed by a reference verb.
    for (std::size_t comma = lc.find(','); comma != std::string::npos;
         comma = lc.find(',', comma + 1)) {
        const std::string_view after = trim(std::string_view(lc).substr(comma + 1));
        if (!starts_with_word(after, "see"))
            continue;
        std::string scope(trim(clause.substr(0, comma)));
        if (scope.size() <= 3)
            return std::nullopt;
        scope.replace(0, 3, "for");
        scope = detail::normalize_space(scope);
        auto ref = parse_reference(trim(clause.substr(comma + 1)));
        if (!ref)
            return std::nullopt;
        return Directive{DirectiveKind::ConditionalClause, std::move(ref->targets),
                         std::move(scope), ref->verb};
    }
    return std::nullopt;
}

std::optional<std::vector<Directive>> parse_group(std::string_view content) {
    std::vector<Directive> out;
    for (std::string_view clause : detail::split(content, ';')) {
        clause = trim(clause);
        if (clause.empty())
            continue;
        auto directive = parse_clause(clause);
        if (!directive)
            return std::nullopt;
        out.push_back(*std::move(directive));
    }
    if (out.empty())
        return std::nullopt;
    return out;
}

void append_remainder(ParsedDescription& parsed, std::string_view group) {
    if (parsed.remainder)
        *parsed.remainder += ' ';
    else
        parsed.remainder.emplace();
    *parsed.remainder += group;
}

} // namespace

ParsedDescription parse_description(std::string_view text) {
    ParsedDescription parsed;
    std::string label;
    std::size_t i = 0;
    while (i < text.size()) {
        const char open = text[i];
        if (open != '[' && open != '{') {
            label.push_back(open);
            ++i;
            continue;
        }
        const char close = open == '[' ? ']' : '}';
        const std::size_t end = text.find(close, i + 1);
        if (end == std::string_view::npos) {
            const std::string_view rest = text.substr(i);
            append_remainder(parsed, rest);
            parsed.warnings.push_back("unterminated group '" + std::string(rest) + "'");
            break;
        }
        const std::string_view group = text.substr(i, end - i + 1);
        if (auto directives = parse_group(group.substr(1, group.size() - 2))) {
            for (auto& d : *directives)
                parsed.directives.push_back(std::move(d));
        } else {
            append_remainder(parsed, group);
            parsed.warnings.push_back("unparseable group '" + std::string(group) + "'");
        }
        i = end + 1;
    }
    parsed.clean_label = detail::normalize_space(label);
    return parsed;
}

std::optional<LabelScopeNote> find_label_scope_note(std::string_view label) {
    std::vector<std::string> groups;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (label[i] == '(') {
            if (depth++ == 0)
                start = i + 1;
        } else if (label[i] == ')' && depth > 0) {
            if (--depth == 0)
                groups.push_back(detail::normalize_space(label.substr(start, i - start)));
        }
    }

    static constexpr std::pair<std::string_view, ScopeMarker> rules[] = {
        {"do not use", ScopeMarker::NotUse},
        {"must", ScopeMarker::MustUse},
        {"use", ScopeMarker::Use},
    };
    for (const auto& [keyword, marker] : rules) {
        for (const auto& group : groups) {
            if (detail::contains_word(group, keyword))
                return LabelScopeNote{marker, group};
        }
    }
    return std::nullopt;
}

std::optional<ScopeMarker> extract_label_scope_marker(std::string_view label) {
    if (auto note = find_label_scope_note(label))
        return note->marker;
    return std::nullopt;
}

} // namespace msc
