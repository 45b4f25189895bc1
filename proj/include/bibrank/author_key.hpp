#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace bibrank {

/// Canonical author identity: uppercased surname plus concatenated given-name
/// initials, rendered as "SURNAME, INITIALS". Two keys are equal iff their
/// renderings are equal. No disambiguation or merging is ever applied.
struct AuthorKey {
    std::string surname;   // uppercased, internal whitespace collapsed, non-empty
    std::string initials;  // uppercase letters only, may be empty

    std::string canonical() const { return surname + ", " + initials; }

    friend bool operator==(const AuthorKey&, const AuthorKey&) = default;
    friend auto operator<=>(const AuthorKey&, const AuthorKey&) = default;
};

/// Builds a key from a raw surname and given-names string. Given names are
/// split on whitespace and hyphens; each part contributes its first letter.
/// Throws std::invalid_argument if the surname is empty after trimming.
AuthorKey author_key(std::string_view surname, std::string_view given_names);

/// Parses a canonical rendering ("SURNAME, INITIALS") back into a key.
/// The part after the last comma is taken verbatim as initials (letters only,
/// uppercased); a line with no comma is a surname-only key.
AuthorKey parse_author_key(std::string_view text);

struct AuthorKeyHash {
    std::size_t operator()(const AuthorKey& k) const {
        std::size_t h = std::hash<std::string>{}(k.surname);
        return h ^ (std::hash<std::string>{}(k.initials) + 0x9e3779b9 + (h << 6) + (h >> 2));
    }
};

}  // namespace bibrank
