#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bibrank/author_key.hpp"

namespace bibrank {

/// One publication record: its authors and outgoing references.
/// Author lists are deduplicated; refs may point at papers outside the set
/// (such citations are dropped when the author graph is built).
struct PaperRecord {
    std::string id;
    std::vector<AuthorKey> authors;
    std::optional<int> year;
    std::vector<std::string> refs;

    friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

/// Insertion-ordered collection of papers indexed by id.
class PaperSet {
public:
    /// Throws std::invalid_argument if the id is empty or already present.
    void add(PaperRecord rec);

    const PaperRecord* find(std::string_view id) const;
    bool contains(std::string_view id) const { return find(id) != nullptr; }

    std::size_t size() const { return papers_.size(); }
    bool empty() const { return papers_.empty(); }
    auto begin() const { return papers_.begin(); }
    auto end() const { return papers_.end(); }
    const std::vector<PaperRecord>& papers() const { return papers_; }

    friend bool operator==(const PaperSet& a, const PaperSet& b) {
        return a.papers_ == b.papers_;
    }

private:
    std::vector<PaperRecord> papers_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Parse failure; the message names the offending line or paper id.
class CorpusError : public std::runtime_error {
public:
    explicit CorpusError(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reads the line-delimited corpus format: one JSON object per line with
/// fields `id`, `authors` (objects with `surname`/`given`), optional `year`,
/// and `refs`. Lines starting with '#' and blank lines are skipped.
/// Throws CorpusError on malformed lines (message carries the line number)
/// and on duplicate ids (message carries the id).
PaperSet parse_corpus(std::istream& in);
PaperSet parse_corpus(std::string_view text);
PaperSet parse_corpus_file(const std::filesystem::path& path);

/// Serializes a PaperSet back to the line-delimited format. Initials are
/// written space-separated in the `given` field so output re-parses to the
/// identical PaperSet.
void write_corpus(const PaperSet& papers, std::ostream& out);
std::string corpus_to_string(const PaperSet& papers);
void write_corpus_file(const PaperSet& papers, const std::filesystem::path& path);

}  // namespace bibrank
