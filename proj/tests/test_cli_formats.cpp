#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <modforms/cache.hpp>
#include <modforms/caselaw.hpp>
#include <modforms/errors.hpp>
#include <modforms/report.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace modforms;

namespace {

std::vector<CacheLine> random_lines(std::mt19937& rng, int count) {
    std::uniform_int_distribution<int> weight(12, 400);
    std::uniform_int_distribution<int> index(1, 13);
    std::uniform_int_distribution<long> coeff(-1000000, 1000000);
    std::uniform_int_distribution<int> deg(0, 9);
    std::uniform_int_distribution<int> kind(0, 3);
    std::vector<CacheLine> lines;
    std::set<std::pair<int, int>> used;
    while (static_cast<int>(lines.size()) < count) {
        CacheLine l;
        l.weight = weight(rng) * 2;
        l.index_m = index(rng);
        if (!used.insert({l.weight, l.index_m}).second) continue;
        switch (kind(rng)) {
            case 0: l.status = "unknown"; break;
            case 1: l.status = "certified:7"; break;
            case 2: l.status = "factored"; break;
            default: l.status = "reducible"; break;
        }
        const int d = deg(rng);
        for (int i = 0; i < d; ++i) l.coefficients.emplace_back(coeff(rng));
        l.coefficients.emplace_back(1);
        lines.push_back(std::move(l));
    }
    return lines;
}

} // namespace

TEST_CASE("cache round trip: parse(serialize(lines)) == sorted lines") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        auto lines = random_lines(rng, 1 + trial * 3);
        const std::string text = serialize_cache(lines);
        auto parsed = parse_cache(text);
        std::sort(lines.begin(), lines.end(), [](const CacheLine& a, const CacheLine& b) {
            return std::tie(a.weight, a.index_m) < std::tie(b.weight, b.index_m);
        });
        CHECK(parsed == lines);
        // byte identity of the canonical form
        CHECK(serialize_cache(parsed) == text);
    }
}

TEST_CASE("cache text format is exactly the canonical line shape") {
    CacheLine l;
    l.weight = 24;
    l.index_m = 2;
    l.status = "certified:13";
    l.coefficients = {Integer(-20468736), Integer(-1080), Integer(1)};
    CHECK(serialize_cache({l}) == "24 2 certified:13 -20468736 -1080 1\n");
    auto parsed = parse_cache("24 2 certified:13 -20468736 -1080 1\n");
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0] == l);
}

TEST_CASE("cache parse errors") {
    CHECK_THROWS_AS(parse_cache("24 2\n"), CacheError);
    CHECK_THROWS_AS(parse_cache("24 2 unknown 12x\n"), CacheError);
    CHECK(parse_cache("").empty());
}

TEST_CASE("CharpolyCache: load/save with atomic rename, missing file is empty") {
    const std::string path = "test_cache_tmp.txt";
    std::remove(path.c_str());
    {
        CharpolyCache cache(path);
        cache.load();
        CHECK(cache.lines().empty());
        CacheLine l;
        l.weight = 12;
        l.index_m = 2;
        l.status = "certified:2";
        l.coefficients = {Integer(24), Integer(1)};
        cache.put(l);
        cache.save();
    }
    {
        CharpolyCache cache(path);
        cache.load();
        REQUIRE(cache.lines().size() == 1);
        CHECK(cache.find(12, 2) != nullptr);
        CHECK(cache.find(12, 3) == nullptr);
        // replace keeps one record per key
        CacheLine l = cache.lines()[0];
        l.status = "factored";
        cache.put(l);
        CHECK(cache.lines().size() == 1);
        CHECK(cache.find(12, 2)->status == "factored");
    }
    std::remove(path.c_str());
}

TEST_CASE("to_cache_line carries the status token") {
    HeckePolyRecord rec;
    rec.weight = 12;
    rec.index_m = 2;
    rec.poly = IntPolynomial({Integer(24), Integer(1)});
    rec.status = IrreducibilityStatus::IrreducibleCertified;
    rec.witness_prime = 5;
    auto line = to_cache_line(rec);
    CHECK(line.status == "certified:5");
    CHECK(line.coefficients == rec.poly.coeffs());
    rec.status = IrreducibilityStatus::Reducible;
    CHECK(to_cache_line(rec).status == "reducible");
}

TEST_CASE("CSV output is deterministic, sorted, and headed") {
    auto records = enumerate_equality_classes(26, 12);
    // shuffle, then render twice
    std::mt19937 rng(53);
    auto shuffled = records;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const std::string a = records_csv(records);
    const std::string b = records_csv(shuffled);
    CHECK(a == b);
    std::istringstream is(a);
    std::string header;
    std::getline(is, header);
    CHECK(header == "wtf,wtg_residue,n,dim_relation,theorem_case");
    int rows = 0;
    std::string line, prev;
    while (std::getline(is, line)) {
        ++rows;
        prev = line;
    }
    CHECK(rows == 149);
    CHECK(prev == "24,0,1,equal,thm2-case3");
}

TEST_CASE("table output ends with the class count footer") {
    auto records = enumerate_equality_classes(26, 12);
    const std::string table = records_table(records);
    CHECK(table.find("149 classes\n") != std::string::npos);
}

TEST_CASE("SVG has exactly one circle per class") {
    auto records = enumerate_equality_classes(26, 12);
    const std::string svg = records_svg(records);
    size_t count = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++count;
        pos += 7;
    }
    CHECK(count == 149);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("width=\"800\" height=\"600\"") != std::string::npos);
    // two renders are byte-identical
    CHECK(records_svg(records) == svg);
}

TEST_CASE("residue representatives match the figure's y positions") {
    CHECK(residue_representative(0) == 12);
    CHECK(residue_representative(2) == 14);
    CHECK(residue_representative(4) == 4);
    CHECK(residue_representative(10) == 10);
}
