#include <modforms/factor.hpp>
#include <modforms/errors.hpp>

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>

namespace modforms {

namespace {

// ---------------------------------------------------------------------
// Arithmetic in F_p[x]. Coefficients in [0, p); p < 2^20 so products fit
// in long. The zero polynomial is the empty vector.
// ---------------------------------------------------------------------

using FpPoly = std::vector<long>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

long fp_powi(long b, long e, long p) {
    long r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

long fp_inv(long a, long p) { return fp_powi(a, p - 2, p); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(c);
    return c;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] - b[i] % p + p) % p;
    fp_trim(a);
    return a;
}

void fp_divmod(const FpPoly& a, const FpPoly& b, long p, FpPoly& q, FpPoly& r) {
    assert(!b.empty());
    q.clear();
    r = a;
    fp_trim(r);
    const long lc_inv = fp_inv(b.back(), p);
    if (fp_deg(r) >= fp_deg(b)) q.assign(r.size() - b.size() + 1, 0);
    while (fp_deg(r) >= fp_deg(b)) {
        const int shift = fp_deg(r) - fp_deg(b);
        const long c = r.back() * lc_inv % p;
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j)
            r[shift + j] = (r[shift + j] - c * b[j] % p + p) % p;
        fp_trim(r);
    }
    fp_trim(q);
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly q, r;
    fp_divmod(a, b, p, q, r);
    return r;
}

void fp_make_monic(FpPoly& a, long p) {
    if (a.empty() || a.back() == 1) return;
    const long inv = fp_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    fp_make_monic(a, p);
    return a;
}

// s*a + t*b = gcd (monic); a, b not both zero
void fp_extgcd(const FpPoly& a, const FpPoly& b, long p,
               FpPoly& g, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    fp_trim(r0); fp_trim(r1);
    while (!r1.empty()) {
        FpPoly q, r;
        fp_divmod(r0, r1, p, q, r);
        r0 = std::move(r1); r1 = std::move(r);
        FpPoly qs = fp_mul(q, s1, p), qt = fp_mul(q, t1, p);
        FpPoly s2 = fp_sub(s0, qs, p), t2 = fp_sub(t0, qt, p);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    // normalize gcd to monic
    if (!r0.empty() && r0.back() != 1) {
        const long inv = fp_inv(r0.back(), p);
        for (auto& c : r0) c = c * inv % p;
        for (auto& c : s0) c = c * inv % p;
        for (auto& c : t0) c = c * inv % p;
    }
    g = std::move(r0); s = std::move(s0); t = std::move(t0);
}

FpPoly fp_derivative(const FpPoly& a, long p) {
    if (a.size() <= 1) return {};
    FpPoly d(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) d[i - 1] = (long)(i % p) * a[i] % p;
    fp_trim(d);
    return d;
}

// base^e mod f, e an arbitrary-precision exponent
FpPoly fp_powmod(const FpPoly& base, const Integer& e, const FpPoly& f, long p) {
    FpPoly result = {1};
    FpPoly sq = fp_mod(base, f, p);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = fp_mod(fp_mul(result, sq, p), f, p);
        if (i + 1 < bits) sq = fp_mod(fp_mul(sq, sq, p), f, p);
    }
    return result;
}

FpPoly reduce_mod_p(const IntPolynomial& f, long p) {
    FpPoly a(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        Integer r = f.coeff(i) % p;
        if (r < 0) r += p;
        a[i] = r.get_si();
    }
    fp_trim(a);
    return a;
}

// ---------------------------------------------------------------------
// Distinct-degree / equal-degree splitting over F_p (p odd).
// ---------------------------------------------------------------------

// input monic squarefree; returns (product of irreducibles of degree d, d)
std::vector<std::pair<FpPoly, int>> fp_ddf(const FpPoly& f, long p) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly rest = f;
    FpPoly h = {0, 1}; // x
    int d = 0;
    while (fp_deg(rest) >= 2 * (d + 1)) {
        ++d;
        h = fp_powmod(h, Integer(p), rest, p);
        FpPoly g = fp_gcd(fp_sub(h, FpPoly{0, 1}, p), rest, p);
        if (fp_deg(g) > 0) {
            out.emplace_back(g, d);
            FpPoly q, r;
            fp_divmod(rest, g, p, q, r);
            assert(r.empty());
            rest = std::move(q);
            h = fp_mod(h, rest, p);
        }
    }
    if (fp_deg(rest) > 0) out.emplace_back(rest, fp_deg(rest));
    return out;
}

// Cantor-Zassenhaus split of a product of degree-d irreducibles, p odd
void fp_edf(const FpPoly& f, int d, long p, std::mt19937_64& rng,
            std::vector<FpPoly>& out) {
    if (fp_deg(f) == d) {
        out.push_back(f);
        return;
    }
    const Integer exponent = (pow(Integer(p), d) - 1) / 2;
    for (;;) {
        FpPoly r(fp_deg(f) >= 1 ? fp_deg(f) : 1);
        for (auto& c : r) c = static_cast<long>(rng() % static_cast<unsigned long>(p));
        fp_trim(r);
        if (r.empty() || fp_deg(r) < 1) continue;
        FpPoly s = fp_powmod(r, exponent, f, p);
        s = fp_sub(s, FpPoly{1}, p);
        FpPoly g = fp_gcd(s, f, p);
        if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
            FpPoly q, rem;
            fp_divmod(f, g, p, q, rem);
            assert(rem.empty());
            fp_edf(g, d, p, rng, out);
            fp_edf(q, d, p, rng, out);
            return;
        }
    }
}

std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f, long p, std::mt19937_64& rng) {
    std::vector<FpPoly> out;
    for (auto& [g, d] : fp_ddf(f, p)) fp_edf(g, d, p, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------
// Hensel lifting. Polys over Z/m with coefficients in [0, m). All the
// factors handled here are monic, which keeps the division steps exact.
// ---------------------------------------------------------------------

using ZmPoly = std::vector<Integer>;

void zm_trim(ZmPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void zm_reduce(ZmPoly& a, const Integer& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    zm_trim(a);
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZmPoly c(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    zm_reduce(c, m);
    return c;
}

ZmPoly zm_add(ZmPoly a, const ZmPoly& b, const Integer& m) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    zm_reduce(a, m);
    return a;
}

ZmPoly zm_sub(ZmPoly a, const ZmPoly& b, const Integer& m) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    zm_reduce(a, m);
    return a;
}

// divisor b monic, so every leading term cancels exactly
void zm_divmod(const ZmPoly& a, const ZmPoly& b, const Integer& m,
               ZmPoly& q, ZmPoly& r) {
    assert(!b.empty() && b.back() == 1);
    q.clear();
    r = a;
    zm_trim(r);
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, Integer(0));
    while (r.size() >= b.size() && !r.empty()) {
        const size_t shift = r.size() - b.size();
        Integer c = r.back();
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        zm_reduce(r, m);
    }
    zm_reduce(q, m);
}

struct HenselNode {
    ZmPoly g, h; // g*h = target (mod m), both monic
    ZmPoly s, t; // s*g + t*h = 1 (mod m)
    int left = -1, right = -1;
};

int build_hensel_tree(std::vector<HenselNode>& nodes,
                      const std::vector<FpPoly>& factors, long p,
                      int begin, int end) {
    const int idx = static_cast<int>(nodes.size());
    nodes.emplace_back();
    const int mid = (begin + end) / 2;
    FpPoly g = {1}, h = {1};
    for (int i = begin; i < mid; ++i) g = fp_mul(g, factors[i], p);
    for (int i = mid; i < end; ++i) h = fp_mul(h, factors[i], p);
    FpPoly gg, s, t;
    fp_extgcd(g, h, p, gg, s, t);
    assert(fp_deg(gg) == 0); // factors of a squarefree poly are coprime
    auto to_zm = [](const FpPoly& a) {
        ZmPoly z(a.size());
        for (size_t i = 0; i < a.size(); ++i) z[i] = a[i];
        return z;
    };
    nodes[idx].g = to_zm(g);
    nodes[idx].h = to_zm(h);
    nodes[idx].s = to_zm(s);
    nodes[idx].t = to_zm(t);
    if (mid - begin >= 2) nodes[idx].left = build_hensel_tree(nodes, factors, p, begin, mid);
    if (end - mid >= 2) nodes[idx].right = build_hensel_tree(nodes, factors, p, mid, end);
    return idx;
}

// One quadratic step m -> m^2 for f = g*h; lifts the Bezout pair too.
void hensel_step(HenselNode& n, const ZmPoly& f, const Integer& m) {
    const Integer m2 = m * m;

    ZmPoly e = zm_sub(f, zm_mul(n.g, n.h, m2), m2);
    ZmPoly q, r;
    zm_divmod(zm_mul(n.s, e, m2), n.h, m2, q, r);
    ZmPoly g1 = zm_add(n.g, zm_add(zm_mul(n.t, e, m2), zm_mul(q, n.g, m2), m2), m2);
    ZmPoly h1 = zm_add(n.h, r, m2);

    ZmPoly b = zm_sub(zm_add(zm_mul(n.s, g1, m2), zm_mul(n.t, h1, m2), m2), ZmPoly{Integer(1)}, m2);
    ZmPoly c, d;
    zm_divmod(zm_mul(n.s, b, m2), h1, m2, c, d);
    ZmPoly s1 = zm_sub(n.s, d, m2);
    ZmPoly t1 = zm_sub(n.t, zm_add(zm_mul(n.t, b, m2), zm_mul(c, g1, m2), m2), m2);

    n.g = std::move(g1);
    n.h = std::move(h1);
    n.s = std::move(s1);
    n.t = std::move(t1);
}

void hensel_lift_tree(std::vector<HenselNode>& nodes, int idx,
                      const ZmPoly& target, const Integer& m) {
    hensel_step(nodes[idx], target, m);
    if (nodes[idx].left >= 0) hensel_lift_tree(nodes, nodes[idx].left, nodes[idx].g, m);
    if (nodes[idx].right >= 0) hensel_lift_tree(nodes, nodes[idx].right, nodes[idx].h, m);
}

void collect_leaves(const std::vector<HenselNode>& nodes, int idx, std::vector<ZmPoly>& out) {
    if (nodes[idx].left < 0) out.push_back(nodes[idx].g);
    else collect_leaves(nodes, nodes[idx].left, out);
    if (nodes[idx].right < 0) out.push_back(nodes[idx].h);
    else collect_leaves(nodes, nodes[idx].right, out);
}

// symmetric representative in (-m/2, m/2]
IntPolynomial zm_to_symmetric(const ZmPoly& a, const Integer& m) {
    const Integer half = m / 2;
    std::vector<Integer> c(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        c[i] = (a[i] > half) ? a[i] - m : a[i];
    return IntPolynomial(std::move(c));
}

// Coefficient bound for monic divisors: 2^n * ceil(||f||_2).
Integer divisor_bound(const IntPolynomial& f) {
    Integer norm_sq(0);
    for (const auto& c : f.coeffs()) norm_sq += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm_sq.get_mpz_t());
    if (root * root < norm_sq) root += 1;
    return (Integer(1) << f.degree()) * root;
}

// ---------------------------------------------------------------------
// Zassenhaus subset recombination.
// ---------------------------------------------------------------------

std::vector<IntPolynomial> recombine(const IntPolynomial& f,
                                     const std::vector<ZmPoly>& lifted,
                                     const Integer& m) {
    std::vector<int> avail(lifted.size());
    std::iota(avail.begin(), avail.end(), 0);
    IntPolynomial rest = f;
    std::vector<IntPolynomial> out;

    auto next_combination = [](std::vector<int>& idx, int n) {
        const int s = static_cast<int>(idx.size());
        int i = s - 1;
        while (i >= 0 && idx[i] == n - s + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        return true;
    };

    int s = 1;
    while (2 * s <= static_cast<int>(avail.size())) {
        bool found = false;
        std::vector<int> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        do {
            ZmPoly prod = {Integer(1)};
            for (int j : idx) prod = zm_mul(prod, lifted[avail[j]], m);
            IntPolynomial cand = zm_to_symmetric(prod, m);
            // quick reject on the constant term before the full division
            if (cand.coeff(0) != 0 && rest.coeff(0) != 0) {
                if (!mpz_divisible_p(rest.coeff(0).get_mpz_t(), cand.coeff(0).get_mpz_t()))
                    continue;
            }
            IntPolynomial quot;
            if (try_exact_divide(rest, cand, quot)) {
                out.push_back(cand);
                rest = quot;
                for (int j = s - 1; j >= 0; --j) avail.erase(avail.begin() + idx[j]);
                found = true;
                break;
            }
        } while (next_combination(idx, static_cast<int>(avail.size())));
        if (found) s = 1;
        else ++s;
    }
    if (rest.degree() > 0) out.push_back(rest);
    return out;
}

} // namespace

std::vector<long> small_primes(int count) {
    std::vector<long> out;
    long candidate = 2;
    while (static_cast<int>(out.size()) < count) {
        bool is_prime = candidate >= 2;
        for (long d = 2; d * d <= candidate; ++d)
            if (candidate % d == 0) { is_prime = false; break; }
        if (is_prime) out.push_back(candidate);
        ++candidate;
    }
    return out;
}

bool irreducible_mod_p(const IntPolynomial& f, long p) {
    assert(f.is_monic());
    const int n = f.degree();
    if (n <= 0) return false;
    FpPoly fbar = reduce_mod_p(f, p);
    if (fp_deg(fbar) != n) return false; // cannot happen for monic f
    if (n == 1) return true;
    if (fp_deg(fp_gcd(fbar, fp_derivative(fbar, p), p)) > 0) return false;

    // Frobenius powers x^{p^k} mod fbar for k = 1..n
    std::vector<FpPoly> frob(n + 1);
    frob[0] = {0, 1};
    for (int k = 1; k <= n; ++k)
        frob[k] = fp_powmod(frob[k - 1], Integer(p), fbar, p);

    if (fp_sub(frob[n], FpPoly{0, 1}, p) != FpPoly{}) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        bool q_prime = true;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) { q_prime = false; break; }
        if (!q_prime) continue;
        FpPoly diff = fp_sub(frob[n / q], FpPoly{0, 1}, p);
        if (fp_deg(fp_gcd(diff, fbar, p)) != 0) return false;
    }
    return true;
}

std::vector<IntPolynomial> factor_monic_squarefree(const IntPolynomial& f) {
    assert(f.is_monic());
    if (f.degree() <= 1) return {f};

    // choose the odd prime (squarefree reduction) with the fewest modular
    // factors among the first few usable ones
    std::mt19937_64 rng(0x5eed);
    std::vector<FpPoly> best_factors;
    long best_p = 0;
    int tried = 0;
    for (long p : small_primes(60)) {
        if (p == 2) continue;
        FpPoly fbar = reduce_mod_p(f, p);
        if (fp_deg(fp_gcd(fbar, fp_derivative(fbar, p), p)) > 0) continue;
        auto factors = fp_factor_squarefree(fbar, p, rng);
        if (factors.size() == 1) return {f}; // irreducible mod p
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(factors);
        }
        if (++tried >= 3) break;
    }
    if (best_p == 0)
        throw Error("factor: no usable prime found (input not squarefree?)");

    // lift to m > 2 * divisor bound so symmetric residues identify integer
    // coefficients of any true factor
    const Integer target = 2 * divisor_bound(f);
    std::vector<HenselNode> nodes;
    build_hensel_tree(nodes, best_factors, best_p, 0, static_cast<int>(best_factors.size()));
    ZmPoly fz(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) fz[i] = f.coeff(i);
    Integer m(best_p);
    while (m <= target) {
        const Integer m2 = m * m;
        ZmPoly ftarget = fz;
        zm_reduce(ftarget, m2);
        hensel_lift_tree(nodes, 0, ftarget, m);
        m = m2;
    }
    std::vector<ZmPoly> lifted;
    collect_leaves(nodes, 0, lifted);

    auto result = recombine(f, lifted, m);
    std::sort(result.begin(), result.end(), [](const IntPolynomial& a, const IntPolynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });

    IntPolynomial check = IntPolynomial::constant(Integer(1));
    for (const auto& g : result) check = check * g;
    if (!(check == f)) throw Error("factor: recombination check failed");
    return result;
}

} // namespace modforms
