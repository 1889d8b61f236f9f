#include <modforms/hecke.hpp>
#include <modforms/arith.hpp>
#include <modforms/errors.hpp>
#include <modforms/factor.hpp>
#include <modforms/spaces.hpp>

#include <algorithm>
#include <cassert>
#include <future>
#include <numeric>
#include <thread>

namespace modforms {

std::string status_name(IrreducibilityStatus s) {
    switch (s) {
        case IrreducibilityStatus::Unknown: return "unknown";
        case IrreducibilityStatus::IrreducibleCertified: return "irreducible-certified";
        case IrreducibilityStatus::IrreducibleByFactorization: return "irreducible-factored";
        case IrreducibilityStatus::Reducible: return "reducible";
    }
    return "?";
}

QExpansion hecke_apply(const QExpansion& f, int k, int m, int out_prec) {
    assert(m >= 1 && out_prec >= 1);
    if (f.weight() && *f.weight() != k)
        throw WeightMismatch("hecke_apply: form tagged " + std::to_string(*f.weight()) +
                             ", operator weight " + std::to_string(k));
    if (f.prec() < m * out_prec)
        throw InsufficientPrecision("hecke_apply: need prec >= " +
                                    std::to_string(m * out_prec) + ", have " +
                                    std::to_string(f.prec()));
    std::vector<Rational> c(out_prec);
    c[0] = Rational(sigma(k - 1, m)) * f.coeff(0);
    for (int n = 1; n < out_prec; ++n) {
        Rational acc(0);
        for (int d = 1; d <= std::min(m, n); ++d) {
            if (m % d != 0 || n % d != 0) continue;
            acc += Rational(pow(Integer(d), k - 1)) * f.coeff((m / d) * (n / d));
        }
        c[n] = acc;
    }
    return QExpansion(std::move(c), k);
}

RatMatrix hecke_matrix(int k, int m) {
    const int d = dim_cusp(k);
    if (d == 0) throw EmptySpace("hecke_matrix: S_" + std::to_string(k) + " is zero");

    const int coord_prec = d + 3; // surplus beyond the diagonal block
    auto coord_basis = miller_basis(k, SpaceKind::CuspSpace, coord_prec);
    auto wide_basis = miller_basis(k, SpaceKind::CuspSpace, m * coord_prec);

    RatMatrix mat(d, d);
    for (int j = 0; j < d; ++j) {
        QExpansion image = hecke_apply(wide_basis->element(j), k, m, coord_prec);
        auto coords = coordinates(image, *coord_basis);
        if (!coords)
            throw NotMember("hecke_matrix: T_" + std::to_string(m) +
                            " image of basis element left S_" + std::to_string(k));
        for (int i = 0; i < d; ++i) {
            if (!is_integral((*coords)[i]))
                throw NonIntegral("hecke_matrix: entry (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") = " + to_string((*coords)[i]));
            mat.at(i, j) = (*coords)[i];
        }
    }
    return mat;
}

HeckePolyRecord hecke_charpoly(int k, int m) {
    HeckePolyRecord rec;
    rec.weight = k;
    rec.index_m = m;
    rec.poly = poly_charpoly(hecke_matrix(k, m));
    return rec;
}

HeckePolyRecord certify_irreducible(HeckePolyRecord rec, int prime_budget) {
    assert(prime_budget >= 1);
    const IntPolynomial& f = rec.poly;
    assert(f.is_monic());

    if (f.degree() <= 0) {
        rec.status = IrreducibilityStatus::Reducible; // units have no irreducible content
        rec.factors = {f};
        return rec;
    }

    // squarefree test over Z: a repeated factor shows up in gcd(f, f')
    if (f.degree() >= 2) {
        IntPolynomial g = poly_gcd(f, derivative(f));
        if (g.degree() > 0) {
            IntPolynomial q;
            const bool ok = try_exact_divide(f, g, q);
            assert(ok);
            (void)ok;
            rec.status = IrreducibilityStatus::Reducible;
            rec.factors = {g, q};
            return rec;
        }
    }

    for (long p : small_primes(prime_budget)) {
        if (irreducible_mod_p(f, p)) {
            rec.status = IrreducibilityStatus::IrreducibleCertified;
            rec.witness_prime = p;
            return rec;
        }
    }

    auto factors = factor_monic_squarefree(f);
    if (factors.size() == 1) {
        rec.status = IrreducibilityStatus::IrreducibleByFactorization;
    } else {
        rec.status = IrreducibilityStatus::Reducible;
        rec.factors = std::move(factors);
    }
    return rec;
}

EigenReport is_eigenform(const QExpansion& f, int k, int index_bound) {
    assert(index_bound >= 1);
    if (f.is_zero()) throw ZeroForm("is_eigenform: zero series");
    if (f.prec() < index_bound * index_bound)
        throw InsufficientPrecision("is_eigenform: need prec >= " +
                                    std::to_string(index_bound * index_bound));
    EigenReport report;
    report.form = f;
    report.weight = k;
    report.is_eigen = true;

    const int pivot = f.valuation();
    for (int m = 2; m <= index_bound; ++m) {
        report.tested_indices.push_back(m);
        const int out_prec = f.prec() / m;
        QExpansion tf = hecke_apply(f, k, m, out_prec);
        if (pivot >= out_prec || f.coeff(pivot) == 0) {
            report.is_eigen = false;
            break;
        }
        const Rational lambda = tf.coeff(pivot) / f.coeff(pivot);
        bool ok = true;
        for (int j = 0; j < out_prec; ++j)
            if (tf.coeff(j) != lambda * f.coeff(j)) { ok = false; break; }
        if (!ok) {
            report.is_eigen = false;
            break;
        }
        report.eigenvalues.push_back(lambda);
    }
    if (!report.is_eigen) report.eigenvalues.clear();
    return report;
}

ScanResult maeda_scan(int k_min, int k_max, const std::vector<int>& m_list,
                      int prime_budget) {
    std::vector<int> weights;
    for (int k = k_min; k <= k_max; ++k)
        if (k % 2 == 0 && k >= 12 && dim_cusp(k) >= 1) weights.push_back(k);

    struct WeightOut {
        std::vector<HeckePolyRecord> records;
        std::vector<std::string> errors;
    };
    std::vector<WeightOut> per_weight(weights.size());

    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(weights.size())));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= weights.size()) return;
            const int k = weights[i];
            for (int m : m_list) {
                try {
                    per_weight[i].records.push_back(
                        certify_irreducible(hecke_charpoly(k, m), prime_budget));
                } catch (const std::exception& e) {
                    per_weight[i].errors.push_back("k=" + std::to_string(k) +
                                                   " m=" + std::to_string(m) + ": " + e.what());
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t + 1 < workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    ScanResult out;
    for (auto& w : per_weight) {
        for (auto& r : w.records) out.records.push_back(std::move(r));
        for (auto& e : w.errors) out.errors.push_back(std::move(e));
    }
    std::sort(out.records.begin(), out.records.end(),
              [](const HeckePolyRecord& a, const HeckePolyRecord& b) {
                  return std::tie(a.weight, a.index_m) < std::tie(b.weight, b.index_m);
              });
    return out;
}

} // namespace modforms
