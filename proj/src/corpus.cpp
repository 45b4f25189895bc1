#include "bibrank/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace bibrank {

namespace {
using nlohmann::json;

std::vector<AuthorKey> dedup_authors(std::vector<AuthorKey> authors) {
    std::vector<AuthorKey> out;
    std::unordered_set<std::string> seen;
    out.reserve(authors.size());
    for (auto& a : authors) {
        if (seen.insert(a.canonical()).second) out.push_back(std::move(a));
    }
    return out;
}

PaperRecord record_from_json(const json& obj) {
    if (!obj.is_object()) throw std::invalid_argument("record is not an object");
    PaperRecord rec;
    if (!obj.contains("id") || !obj["id"].is_string() || obj["id"].get<std::string>().empty()) {
        throw std::invalid_argument("missing or empty \"id\" field");
    }
    rec.id = obj["id"].get<std::string>();
    if (obj.contains("authors")) {
        const json& authors = obj["authors"];
        if (!authors.is_array()) throw std::invalid_argument("\"authors\" is not a list");
        for (const json& a : authors) {
            if (!a.is_object() || !a.contains("surname") || !a["surname"].is_string()) {
                throw std::invalid_argument("author entry lacks a \"surname\" string");
            }
            std::string given = a.value("given", std::string{});
            rec.authors.push_back(author_key(a["surname"].get<std::string>(), given));
        }
        rec.authors = dedup_authors(std::move(rec.authors));
    }
    if (obj.contains("year") && !obj["year"].is_null()) {
        if (!obj["year"].is_number_integer()) throw std::invalid_argument("\"year\" is not an integer");
        rec.year = obj["year"].get<int>();
    }
    if (obj.contains("refs")) {
        const json& refs = obj["refs"];
        if (!refs.is_array()) throw std::invalid_argument("\"refs\" is not a list");
        for (const json& r : refs) {
            if (!r.is_string()) throw std::invalid_argument("ref entry is not a string");
            rec.refs.push_back(r.get<std::string>());
        }
    }
    return rec;
}

}  // namespace

void PaperSet::add(PaperRecord rec) {
    if (rec.id.empty()) throw std::invalid_argument("PaperSet: empty paper id");
    auto [it, inserted] = index_.emplace(rec.id, papers_.size());
    if (!inserted) throw std::invalid_argument("PaperSet: duplicate paper id \"" + rec.id + "\"");
    papers_.push_back(std::move(rec));
}

const PaperRecord* PaperSet::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    return it == index_.end() ? nullptr : &papers_[it->second];
}

PaperSet parse_corpus(std::istream& in) {
    PaperSet set;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& e) {
            throw CorpusError("line " + std::to_string(line_no) + ": invalid record: " + e.what(),
                              line_no);
        }
        PaperRecord rec;
        try {
            rec = record_from_json(obj);
        } catch (const std::invalid_argument& e) {
            throw CorpusError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
        } catch (const json::exception& e) {
            throw CorpusError("line " + std::to_string(line_no) + ": invalid record: " + e.what(),
                              line_no);
        }
        if (set.contains(rec.id)) {
            throw CorpusError("line " + std::to_string(line_no) + ": duplicate paper id \"" +
                                  rec.id + "\"",
                              line_no);
        }
        set.add(std::move(rec));
    }
    return set;
}

PaperSet parse_corpus(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_corpus(in);
}

PaperSet parse_corpus_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CorpusError("cannot open corpus file: " + path.string());
    return parse_corpus(in);
}

void write_corpus(const PaperSet& papers, std::ostream& out) {
    for (const PaperRecord& rec : papers) {
        json obj;
        obj["id"] = rec.id;
        json authors = json::array();
        for (const AuthorKey& a : rec.authors) {
            // Initials are spelled out space-separated so each re-parses to
            // exactly one initial ("Y S" -> "YS").
            std::string given;
            for (char c : a.initials) {
                if (!given.empty()) given.push_back(' ');
                given.push_back(c);
            }
            authors.push_back({{"surname", a.surname}, {"given", given}});
        }
        obj["authors"] = std::move(authors);
        if (rec.year) obj["year"] = *rec.year;
        obj["refs"] = rec.refs;
        out << obj.dump() << '\n';
    }
}

std::string corpus_to_string(const PaperSet& papers) {
    std::ostringstream out;
    write_corpus(papers, out);
    return out.str();
}

void write_corpus_file(const PaperSet& papers, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw CorpusError("cannot open output file: " + path.string());
    write_corpus(papers, out);
}

}  // namespace bibrank
