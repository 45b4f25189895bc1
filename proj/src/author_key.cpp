#include "bibrank/author_key.hpp"

#include <cctype>
#include <stdexcept>

namespace bibrank {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
char upper(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }

// Trim, collapse internal whitespace runs to single spaces, uppercase ASCII
// letters. Bytes outside ASCII (diacritics etc.) pass through untouched.
std::string normalize_surname(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (is_space(c)) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(upper(c));
    }
    return out;
}

}  // namespace

AuthorKey author_key(std::string_view surname, std::string_view given_names) {
    AuthorKey key;
    key.surname = normalize_surname(surname);
    if (key.surname.empty()) {
        throw std::invalid_argument("author_key: empty surname");
    }
    // Split given names on whitespace and hyphens; each part contributes its
    // first letter when that is an ASCII letter.
    bool at_token_start = true;
    for (char c : given_names) {
        if (is_space(c) || c == '-') {
            at_token_start = true;
            continue;
        }
        if (at_token_start && is_alpha(c)) {
            key.initials.push_back(upper(c));
        }
        at_token_start = false;
    }
    return key;
}

AuthorKey parse_author_key(std::string_view text) {
    auto comma = text.rfind(',');
    std::string_view surname_part = text;
    std::string_view initials_part;
    if (comma != std::string_view::npos) {
        surname_part = text.substr(0, comma);
        initials_part = text.substr(comma + 1);
    }
    AuthorKey key;
    key.surname = normalize_surname(surname_part);
    if (key.surname.empty()) {
        throw std::invalid_argument("parse_author_key: empty surname in \"" +
                                    std::string(text) + "\"");
    }
    for (char c : initials_part) {
        if (is_alpha(c)) key.initials.push_back(upper(c));
    }
    return key;
}

}  // namespace bibrank
