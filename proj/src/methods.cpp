#include "bibrank/methods.hpp"

#include <cctype>
#include <string>

namespace bibrank {

std::string_view method_name(MethodId m) {
    switch (m) {
        case MethodId::Citations: return "Citations";
        case MethodId::InDegree: return "InDegree";
        case MethodId::Hits: return "HITS";
        case MethodId::PR: return "PR";
        case MethodId::PRWeighted: return "PRWeighted";
        case MethodId::PRCollaboration: return "PRCollaboration";
        case MethodId::PRPublications: return "PRPublications";
        case MethodId::PRAllCoauthors: return "PRAllCoauthors";
        case MethodId::PRAllDistCoauthors: return "PRAllDistCoauthors";
        case MethodId::PRAllCollaborations: return "PRAllCollaborations";
        case MethodId::PRCoauthors: return "PRCoauthors";
        case MethodId::PRDistCoauthors: return "PRDistCoauthors";
    }
    return "?";
}

std::optional<MethodId> method_from_name(std::string_view name) {
    auto lower = [](std::string_view s) {
        std::string out(s);
        for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return out;
    };
    const std::string wanted = lower(name);
    for (MethodId m : all_methods()) {
        if (lower(method_name(m)) == wanted) return m;
    }
    return std::nullopt;
}

}  // namespace bibrank
