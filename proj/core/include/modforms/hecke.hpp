#ifndef MODFORMS_HECKE_HPP
#define MODFORMS_HECKE_HPP

#include <modforms/intpoly.hpp>
#include <modforms/matrix.hpp>
#include <modforms/qexpansion.hpp>

#include <string>
#include <vector>

namespace modforms {

enum class IrreducibilityStatus {
    Unknown,
    IrreducibleCertified,       // witnessed by a prime modulo which f stays irreducible
    IrreducibleByFactorization, // full factorization over Z found one factor
    Reducible,                  // verified factorization with >= 2 factors
};

std::string status_name(IrreducibilityStatus s);

// A Hecke characteristic polynomial T_m(x) on S_weight together with what
// is known about its factorization over Q.
struct HeckePolyRecord {
    int weight = 0;
    int index_m = 0;
    IntPolynomial poly; // monic, degree dim S_weight
    IrreducibilityStatus status = IrreducibilityStatus::Unknown;
    long witness_prime = 0;            // set for IrreducibleCertified
    std::vector<IntPolynomial> factors; // set for Reducible; product equals poly

    bool certified_irreducible() const {
        return status == IrreducibilityStatus::IrreducibleCertified ||
               status == IrreducibilityStatus::IrreducibleByFactorization;
    }
};

struct EigenReport {
    QExpansion form;
    int weight = 0;
    std::vector<int> tested_indices;
    bool is_eigen = false;
    std::vector<Rational> eigenvalues; // aligned with tested_indices when is_eigen
};

// T_m on a weight-k form: the coefficient of q^n in T_m f is
//   sum over d | gcd(m, n) of d^{k-1} a_{m n / d^2},
// with the n = 0 convention (T_m f)_0 = sigma_{k-1}(m) a_0. Needs
// f.prec() >= m * out_prec. If f carries a weight tag it must equal k.
QExpansion hecke_apply(const QExpansion& f, int k, int m, int out_prec);

// Matrix of T_m on the Miller basis of S_k; entries are integral in this
// basis (asserted, NonIntegral otherwise). Throws EmptySpace when
// dim S_k = 0.
RatMatrix hecke_matrix(int k, int m);

// Monic characteristic polynomial of hecke_matrix(k, m); status Unknown.
HeckePolyRecord hecke_charpoly(int k, int m);

// Upgrades the status: squarefree test over Z first, then a mod-p
// irreducibility witness among the first prime_budget primes (skipping
// primes dividing the discriminant, i.e. where the reduction is not
// squarefree), falling back to a full factorization over Z. A nontrivial
// gcd with the derivative is reported as Reducible with that factor.
HeckePolyRecord certify_irreducible(HeckePolyRecord rec, int prime_budget);

// Tests T_m f = lambda_m f coefficientwise for every m in [2, index_bound],
// extracting lambda from the first nonzero coefficient of f. Needs
// f.prec() >= index_bound^2. Throws ZeroForm on the zero series.
EigenReport is_eigenform(const QExpansion& f, int k, int index_bound);

struct ScanResult {
    std::vector<HeckePolyRecord> records; // sorted by (weight, m)
    std::vector<std::string> errors;      // per-record failures, scan continues
};

// charpoly + certify_irreducible for every even weight in [k_min, k_max]
// with dim S_k >= 1 and every m in m_list. Weights run in parallel.
ScanResult maeda_scan(int k_min, int k_max, const std::vector<int>& m_list,
                      int prime_budget);

} // namespace modforms

#endif
