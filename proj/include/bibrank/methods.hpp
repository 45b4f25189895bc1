#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace bibrank {

/// The 12 author ranking methods. PR through PRDistCoauthors form the
/// PageRank family; the last seven are the bibliographic variants that
/// differ only in the edge coefficients (w, b, c).
enum class MethodId {
    Citations,
    InDegree,
    Hits,
    PR,
    PRWeighted,
    PRCollaboration,
    PRPublications,
    PRAllCoauthors,
    PRAllDistCoauthors,
    PRAllCollaborations,
    PRCoauthors,
    PRDistCoauthors,
};

inline constexpr std::size_t kMethodCount = 12;

constexpr std::array<MethodId, kMethodCount> all_methods() {
    return {MethodId::Citations,          MethodId::InDegree,
            MethodId::Hits,               MethodId::PR,
            MethodId::PRWeighted,         MethodId::PRCollaboration,
            MethodId::PRPublications,     MethodId::PRAllCoauthors,
            MethodId::PRAllDistCoauthors, MethodId::PRAllCollaborations,
            MethodId::PRCoauthors,        MethodId::PRDistCoauthors};
}

constexpr bool is_pagerank_family(MethodId m) {
    return m >= MethodId::PR && m <= MethodId::PRDistCoauthors;
}

/// Stable canonical name, used in file names, CSV headers and the CLI.
std::string_view method_name(MethodId m);

/// Case-insensitive lookup of a canonical method name.
std::optional<MethodId> method_from_name(std::string_view name);

}  // namespace bibrank
