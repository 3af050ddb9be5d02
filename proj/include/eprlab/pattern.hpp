#pragma once

// ASCII rendering of the overline pattern notation for epr-sequences:
// a parenthesized group followed by '*' may repeat zero or more times,
// e.g. "(NS)*NAA" matches NAA, NSNAA, NSNSNAA, ...

#include <string>
#include <string_view>
#include <vector>

#include "eprlab/common.hpp"
#include "eprlab/epr.hpp"

namespace eprlab {

struct EprPattern {
    struct Item {
        bool repeat = false; // false: literal single letter; true: (word)*
        std::string word;
    };
    std::vector<Item> items;

    /// Round-trips through parse_pattern.
    std::string str() const {
        std::string out;
        for (const Item& it : items) {
            if (it.repeat)
                out += "(" + it.word + ")*";
            else
                out += it.word;
        }
        return out;
    }
};

inline bool is_epr_letter(char c) { return c == 'A' || c == 'S' || c == 'N'; }

inline EprPattern parse_pattern(std::string_view text) {
    if (text.empty()) throw ParseError("empty pattern", 0);
    EprPattern pat;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (is_epr_letter(c)) {
            pat.items.push_back({false, std::string(1, c)});
            ++i;
            continue;
        }
        if (c == '(') {
            const std::size_t open = i;
            ++i;
            std::string word;
            while (i < text.size() && is_epr_letter(text[i])) word.push_back(text[i++]);
            if (word.empty())
                throw ParseError("empty repeat group", open);
            if (i >= text.size() || text[i] != ')')
                throw ParseError("unterminated repeat group", open);
            ++i;
            if (i >= text.size() || text[i] != '*')
                throw ParseError("repeat group must be followed by '*'", i);
            ++i;
            pat.items.push_back({true, word});
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "' in pattern", i);
    }
    return pat;
}

namespace detail {

inline bool match_items(std::string_view word, std::size_t pos,
                        const std::vector<EprPattern::Item>& items, std::size_t item) {
    if (item == items.size()) return pos == word.size();
    const EprPattern::Item& it = items[item];
    if (!it.repeat) {
        return pos < word.size() && word[pos] == it.word[0] &&
               match_items(word, pos + 1, items, item + 1);
    }
    // zero or more copies of it.word
    for (std::size_t p = pos;; p += it.word.size()) {
        if (match_items(word, p, items, item + 1)) return true;
        if (p + it.word.size() > word.size()) return false;
        if (word.compare(p, it.word.size(), it.word) != 0) return false;
    }
}

} // namespace detail

inline bool matches(std::string_view word, const EprPattern& pat) {
    return detail::match_items(word, 0, pat.items, 0);
}

inline bool matches(const EprSequence& seq, const EprPattern& pat) {
    return matches(seq.letters, pat);
}

inline bool matches(std::string_view word, std::string_view pattern_text) {
    return matches(word, parse_pattern(pattern_text));
}

} // namespace eprlab
