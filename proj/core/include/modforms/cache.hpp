#ifndef MODFORMS_CACHE_HPP
#define MODFORMS_CACHE_HPP

#include <modforms/hecke.hpp>

#include <string>
#include <vector>

namespace modforms {

// One persisted charpoly result. The text form is one line:
//   <weight> <m> <status-token> <c0> <c1> ... <cd>\n
// with canonical base-10 integers, single spaces, constant term first.
// Re-serialization of a parsed file is byte-identical.
struct CacheLine {
    int weight = 0;
    int index_m = 0;
    std::string status; // whitespace-free token
    std::vector<Integer> coefficients;

    friend bool operator==(const CacheLine&, const CacheLine&) = default;
};

// Status tokens: "unknown", "certified:<p>", "factored", "reducible".
// Factor lists are not persisted; a reducible record re-certifies from
// the stored polynomial when the factors are needed again.
std::string status_token(const HeckePolyRecord& rec);
CacheLine to_cache_line(const HeckePolyRecord& rec);

std::string serialize_cache(std::vector<CacheLine> lines); // sorts by (weight, m)
std::vector<CacheLine> parse_cache(const std::string& text); // throws CacheError

// Plain-text cache file keyed by (weight, m). Saving writes a temp file in
// the same directory and renames it into place, so a failed save never
// corrupts an existing cache. A missing file loads as an empty cache.
class CharpolyCache {
public:
    explicit CharpolyCache(std::string path) : path_(std::move(path)) {}

    void load();
    void save() const;

    const CacheLine* find(int weight, int m) const;
    void put(CacheLine line); // replaces any record with the same key
    const std::vector<CacheLine>& lines() const { return lines_; }

private:
    std::string path_;
    std::vector<CacheLine> lines_;
};

} // namespace modforms

#endif
