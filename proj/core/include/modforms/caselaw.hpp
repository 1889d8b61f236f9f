#ifndef MODFORMS_CASELAW_HPP
#define MODFORMS_CASELAW_HPP

#include <modforms/bracket.hpp>
#include <modforms/hecke.hpp>

#include <optional>
#include <string>
#include <vector>

namespace modforms {

// How dim S_{wtf+wtg+2n} compares with the domain dimension (dim S_wtg
// when g is cuspidal, dim M_wtg otherwise). EqualMinusOne refines Less:
// the dimension formulas never drop by more than one across a bracket.
enum class DimRelation { Greater, Equal, Less, EqualMinusOne };

enum class TheoremCase {
    Thm1Case1, // f = E_wtf, g cuspidal, target dim greater
    Thm1Case2, // f = E_wtf, g cuspidal, target dim equal: eigenform forced
    Thm2Case1, // f = E_wtf, g noncuspidal, greater
    Thm2Case2, // f = E_wtf, g noncuspidal, smaller: eigenform forced
    Thm2Case3, // f = E_wtf, g noncuspidal, equal: decided by injectivity
    Thm3Case1, // f cuspidal, greater
    Thm3Case2, // f cuspidal, equal or minus one: decided by injectivity
    TrivialBothCuspidal,
};

std::string dim_relation_name(DimRelation r);
std::string theorem_case_name(TheoremCase c);

// One case of the main theorems: a weight for f, a residue class for
// wt(g) mod 12, and a bracket order n, classified by the dimension
// comparison. f_cuspidal requires dim S_wtf >= 1.
struct CaseRecord {
    int wtf = 0;
    bool f_cuspidal = false;
    int wtg_residue = 0; // in {0, 2, 4, 6, 8, 10}
    int n = 0;
    DimRelation dim_relation = DimRelation::Greater;
    TheoremCase theorem_case = TheoremCase::Thm2Case1;

    friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

enum class CertOutcome {
    ForcedEigenform,          // surjective onto the target cusp space
    RuledOutByIrreducibility, // proper image + a certified irreducible T_m(x)
    RuledOutTrivially,        // both cuspidal (q^0 = q^1 = 0) or zero image
    WouldImplyReducibility,   // proper image and every examined T_m(x) reducible
    Inconclusive,             // degenerate dimensions or no decisive witness
};

std::string outcome_name(CertOutcome o);

// Outcome of the rational-subspace reasoning for one concrete wt(g).
struct Certificate {
    CaseRecord record;
    int concrete_wtg = 0;
    CertOutcome outcome = CertOutcome::Inconclusive;
    int operator_rank = 0;
    int target_dim = 0;
    bool injective = false;
    std::string reason;

    // ForcedEigenform with dim S_target = 1 carries the explicit witness:
    // Miller coordinates of g and the verified eigen report of [f,g]_n.
    std::optional<std::vector<Rational>> witness_g;
    std::optional<EigenReport> eigen;
    // RuledOutByIrreducibility carries the certified polynomial.
    std::optional<HeckePolyRecord> hecke_witness;
};

// Classifies (wtf, wtg, n) with the stated cuspidality flags into the
// theorem cases. wtf, wtg even and >= 4, n >= 1 (n = 0 is multiplication,
// handled by prior work and rejected here).
CaseRecord classify(int wtf, bool f_cuspidal, int wtg, bool g_cuspidal, int n);

// The difference dim S_{wtf + wtg + 2n} - dim M_{wtg} evaluated on the
// residue class wtg = r + 12t over the stability window t = 5..15; throws
// if the window is not constant.
int stable_dim_difference(int wtf, int wtg_residue, int n);

// All (wtf, residue, n) classes with dim S_target = dim M_wtg stably in
// the class, wtf in [4, wtf_max], n in [1, n_max]. Sorted by
// (wtf, residue, n). The full set saturates at wtf_max >= 24, n_max >= 11.
std::vector<CaseRecord> enumerate_equality_classes(int wtf_max, int n_max);

// The classes with dim S_target = dim M_wtg - 1 among cuspidal-capable
// wtf; expected to be exactly {(wtf=12, residue 0, n=1)}.
std::vector<CaseRecord> enumerate_minus_one_classes(int wtf_max, int n_max);

// Concrete wtg values in [4, wtg_max] of the record's residue class where
// the dimension difference deviates from the stable value. Empty for every
// class at level 1; kept separate so boundary weights are never silently
// merged into a class.
std::vector<int> boundary_exceptions(const CaseRecord& record, int wtg_max);

// Runs the rational-subspace argument for one concrete wt(g) in the
// record's class. f is E_wtf, or for cuspidal records the unique
// normalized cusp form (requires dim S_wtf = 1, else UnsupportedCuspidalF).
// When the operator is surjective onto a 1-dimensional target, solves for
// an explicit rational g with [f, g]_n equal to the normalized eigenform
// and verifies it; when surjective onto a larger target, reports an
// abstract witness. When the image is proper, scans m_list for a certified
// irreducible Hecke polynomial.
Certificate certify(const CaseRecord& record, int concrete_wtg, int prec,
                    const std::vector<int>& m_list, int prime_budget = 25);

} // namespace modforms

#endif
