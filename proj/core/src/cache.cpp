#include <modforms/cache.hpp>
#include <modforms/errors.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace modforms {

std::string status_token(const HeckePolyRecord& rec) {
    switch (rec.status) {
        case IrreducibilityStatus::Unknown: return "unknown";
        case IrreducibilityStatus::IrreducibleCertified:
            return "certified:" + std::to_string(rec.witness_prime);
        case IrreducibilityStatus::IrreducibleByFactorization: return "factored";
        case IrreducibilityStatus::Reducible: return "reducible";
    }
    return "unknown";
}

CacheLine to_cache_line(const HeckePolyRecord& rec) {
    CacheLine line;
    line.weight = rec.weight;
    line.index_m = rec.index_m;
    line.status = status_token(rec);
    line.coefficients = rec.poly.coeffs();
    return line;
}

std::string serialize_cache(std::vector<CacheLine> lines) {
    std::sort(lines.begin(), lines.end(), [](const CacheLine& a, const CacheLine& b) {
        return std::tie(a.weight, a.index_m) < std::tie(b.weight, b.index_m);
    });
    std::ostringstream os;
    for (const auto& l : lines) {
        os << l.weight << ' ' << l.index_m << ' ' << l.status;
        for (const auto& c : l.coefficients) os << ' ' << c.get_str();
        os << '\n';
    }
    return os.str();
}

std::vector<CacheLine> parse_cache(const std::string& text) {
    std::vector<CacheLine> out;
    std::istringstream is(text);
    std::string lineText;
    int lineno = 0;
    while (std::getline(is, lineText)) {
        ++lineno;
        if (lineText.empty()) continue;
        std::istringstream fields(lineText);
        CacheLine line;
        if (!(fields >> line.weight >> line.index_m >> line.status))
            throw CacheError("cache line " + std::to_string(lineno) + ": malformed header");
        std::string tok;
        while (fields >> tok) {
            try {
                line.coefficients.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                throw CacheError("cache line " + std::to_string(lineno) +
                                 ": bad integer '" + tok + "'");
            }
        }
        if (line.coefficients.empty())
            throw CacheError("cache line " + std::to_string(lineno) + ": no coefficients");
        out.push_back(std::move(line));
    }
    return out;
}

void CharpolyCache::load() {
    std::ifstream in(path_, std::ios::binary);
    if (!in) {
        lines_.clear();
        return;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    lines_ = parse_cache(buf.str());
}

void CharpolyCache::save() const {
    const std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CacheError("cache: cannot write " + tmp);
        out << serialize_cache(lines_);
        if (!out) throw CacheError("cache: write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path_.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw CacheError("cache: atomic rename to " + path_ + " failed");
    }
}

const CacheLine* CharpolyCache::find(int weight, int m) const {
    for (const auto& l : lines_)
        if (l.weight == weight && l.index_m == m) return &l;
    return nullptr;
}

void CharpolyCache::put(CacheLine line) {
    for (auto& l : lines_) {
        if (l.weight == line.weight && l.index_m == line.index_m) {
            l = std::move(line);
            return;
        }
    }
    lines_.push_back(std::move(line));
}

} // namespace modforms
