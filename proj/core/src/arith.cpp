#include <modforms/arith.hpp>
#include <modforms/errors.hpp>

#include <cassert>
#include <mutex>
#include <vector>

namespace modforms {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table; // index j holds B_j

void extend_bernoulli_table(int k) {
    if (bernoulli_table.empty()) {
        bernoulli_table.emplace_back(1);        // B_0
        bernoulli_table.emplace_back(-1, 2);    // B_1
    }
    while (static_cast<int>(bernoulli_table.size()) <= k) {
        const long n = static_cast<long>(bernoulli_table.size());
        Rational acc(0);
        for (long j = 0; j < n; ++j)
            acc += Rational(binomial(n + 1, j)) * bernoulli_table[j];
        acc /= n + 1;
        bernoulli_table.push_back(-acc);
    }
}

} // namespace

Rational bernoulli(int k) {
    if (k < 0) throw OddIndex("bernoulli: negative index " + std::to_string(k));
    if (k > 1 && k % 2 != 0)
        throw OddIndex("bernoulli: odd index " + std::to_string(k) +
                       " (only even indices are exposed)");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    extend_bernoulli_table(k);
    return bernoulli_table[k];
}

Integer sigma(unsigned power, long n) {
    assert(n >= 1);
    Integer total(0);
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        total += pow(Integer(d), power);
        const long e = n / d;
        if (e != d) total += pow(Integer(e), power);
    }
    return total;
}

} // namespace modforms
