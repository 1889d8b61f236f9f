#include <modforms/caselaw.hpp>
#include <modforms/errors.hpp>

#include <algorithm>
#include <cassert>

namespace modforms {

std::string dim_relation_name(DimRelation r) {
    switch (r) {
        case DimRelation::Greater: return "greater";
        case DimRelation::Equal: return "equal";
        case DimRelation::Less: return "less";
        case DimRelation::EqualMinusOne: return "equal-minus-one";
    }
    return "?";
}

std::string theorem_case_name(TheoremCase c) {
    switch (c) {
        case TheoremCase::Thm1Case1: return "thm1-case1";
        case TheoremCase::Thm1Case2: return "thm1-case2";
        case TheoremCase::Thm2Case1: return "thm2-case1";
        case TheoremCase::Thm2Case2: return "thm2-case2";
        case TheoremCase::Thm2Case3: return "thm2-case3";
        case TheoremCase::Thm3Case1: return "thm3-case1";
        case TheoremCase::Thm3Case2: return "thm3-case2";
        case TheoremCase::TrivialBothCuspidal: return "trivial-both-cuspidal";
    }
    return "?";
}

std::string outcome_name(CertOutcome o) {
    switch (o) {
        case CertOutcome::ForcedEigenform: return "forced-eigenform";
        case CertOutcome::RuledOutByIrreducibility: return "ruled-out-by-irreducibility";
        case CertOutcome::RuledOutTrivially: return "ruled-out-trivially";
        case CertOutcome::WouldImplyReducibility: return "would-imply-reducibility";
        case CertOutcome::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

DimRelation relation_from_difference(int diff) {
    if (diff > 0) return DimRelation::Greater;
    if (diff == 0) return DimRelation::Equal;
    if (diff == -1) return DimRelation::EqualMinusOne;
    return DimRelation::Less;
}

} // namespace

CaseRecord classify(int wtf, bool f_cuspidal, int wtg, bool g_cuspidal, int n) {
    if (wtf < 4 || wtf % 2 != 0)
        throw BadWeight("classify: wtf = " + std::to_string(wtf));
    if (wtg < 4 || wtg % 2 != 0)
        throw BadWeight("classify: wtg = " + std::to_string(wtg));
    if (n < 1)
        throw BadWeight("classify: n = " + std::to_string(n) +
                        " (n = 0 is plain multiplication, out of scope here)");
    if (f_cuspidal && dim_cusp(wtf) < 1)
        throw BadCuspidality("classify: no cusp forms of weight " + std::to_string(wtf));

    CaseRecord rec;
    rec.wtf = wtf;
    rec.f_cuspidal = f_cuspidal;
    rec.wtg_residue = wtg % 12;
    rec.n = n;

    const int target = wtf + wtg + 2 * n;
    const int ds_target = dim_cusp(target);

    if (f_cuspidal && g_cuspidal) {
        rec.dim_relation = relation_from_difference(ds_target - dim_cusp(wtg));
        rec.theorem_case = TheoremCase::TrivialBothCuspidal;
    } else if (!f_cuspidal && g_cuspidal) {
        const int diff = ds_target - dim_cusp(wtg);
        rec.dim_relation = relation_from_difference(diff);
        rec.theorem_case = diff > 0 ? TheoremCase::Thm1Case1 : TheoremCase::Thm1Case2;
    } else if (!f_cuspidal && !g_cuspidal) {
        const int diff = ds_target - dim_modular(wtg);
        rec.dim_relation = relation_from_difference(diff);
        rec.theorem_case = diff > 0   ? TheoremCase::Thm2Case1
                           : diff < 0 ? TheoremCase::Thm2Case2
                                      : TheoremCase::Thm2Case3;
    } else {
        const int diff = ds_target - dim_modular(wtg);
        rec.dim_relation = relation_from_difference(diff);
        rec.theorem_case = diff > 0 ? TheoremCase::Thm3Case1 : TheoremCase::Thm3Case2;
    }
    return rec;
}

int stable_dim_difference(int wtf, int wtg_residue, int n) {
    assert(wtg_residue >= 0 && wtg_residue < 12 && wtg_residue % 2 == 0);
    bool have = false;
    int value = 0;
    for (int t = 5; t <= 15; ++t) {
        const int wtg = 12 * t + wtg_residue;
        const int diff = dim_cusp(wtf + wtg + 2 * n) - dim_modular(wtg);
        if (!have) {
            value = diff;
            have = true;
        } else if (diff != value) {
            throw Error("stable_dim_difference: window t=5..15 not constant at (" +
                        std::to_string(wtf) + "," + std::to_string(wtg_residue) + "," +
                        std::to_string(n) + ")");
        }
    }
    return value;
}

namespace {

std::vector<CaseRecord> enumerate_with_difference(int wtf_max, int n_max, int wanted,
                                                  bool cuspidal_f_only) {
    std::vector<CaseRecord> out;
    for (int wtf = 4; wtf <= wtf_max; wtf += 2) {
        if (cuspidal_f_only && dim_cusp(wtf) < 1) continue;
        for (int n = 1; n <= n_max; ++n) {
            for (int r : {0, 2, 4, 6, 8, 10}) {
                if (stable_dim_difference(wtf, r, n) != wanted) continue;
                CaseRecord rec;
                rec.wtf = wtf;
                rec.f_cuspidal = cuspidal_f_only;
                rec.wtg_residue = r;
                rec.n = n;
                rec.dim_relation = wanted == 0 ? DimRelation::Equal : DimRelation::EqualMinusOne;
                rec.theorem_case = cuspidal_f_only ? TheoremCase::Thm3Case2 : TheoremCase::Thm2Case3;
                out.push_back(rec);
            }
        }
    }
    // already sorted: wtf ascending, then n, then residue; normalize to
    // (wtf, residue, n) for reporting
    std::sort(out.begin(), out.end(), [](const CaseRecord& a, const CaseRecord& b) {
        return std::tie(a.wtf, a.wtg_residue, a.n) < std::tie(b.wtf, b.wtg_residue, b.n);
    });
    return out;
}

} // namespace

std::vector<CaseRecord> enumerate_equality_classes(int wtf_max, int n_max) {
    if (wtf_max < 24 || n_max < 11)
        throw BadWeight("enumerate: bounds below saturation (need wtf_max >= 24, "
                        "n_max >= 11; classes reach wtf = 24 and n = 11)");
    return enumerate_with_difference(wtf_max, n_max, 0, false);
}

std::vector<CaseRecord> enumerate_minus_one_classes(int wtf_max, int n_max) {
    if (wtf_max < 24 || n_max < 11)
        throw BadWeight("enumerate: bounds below saturation (need wtf_max >= 24, "
                        "n_max >= 11)");
    return enumerate_with_difference(wtf_max, n_max, -1, true);
}

std::vector<int> boundary_exceptions(const CaseRecord& record, int wtg_max) {
    const int stable = stable_dim_difference(record.wtf, record.wtg_residue, record.n);
    std::vector<int> out;
    int wtg = record.wtg_residue;
    while (wtg < 4) wtg += 12;
    for (; wtg <= wtg_max; wtg += 12) {
        const int diff = dim_cusp(record.wtf + wtg + 2 * record.n) - dim_modular(wtg);
        if (diff != stable) out.push_back(wtg);
    }
    return out;
}

Certificate certify(const CaseRecord& record, int concrete_wtg, int prec,
                    const std::vector<int>& m_list, int prime_budget) {
    if (concrete_wtg < 4 || concrete_wtg % 2 != 0 ||
        concrete_wtg % 12 != record.wtg_residue)
        throw BadWeight("certify: wtg = " + std::to_string(concrete_wtg) +
                        " is not in residue class " + std::to_string(record.wtg_residue));

    Certificate cert;
    cert.record = record;
    cert.concrete_wtg = concrete_wtg;

    const int target = record.wtf + concrete_wtg + 2 * record.n;
    cert.target_dim = dim_cusp(target);

    if (record.theorem_case == TheoremCase::TrivialBothCuspidal) {
        cert.outcome = CertOutcome::RuledOutTrivially;
        cert.reason = "both inputs cuspidal: the bracket has q^0 = q^1 = 0, and a "
                      "nonzero eigenform cannot vanish at its first two coefficients";
        return cert;
    }

    // domain of [f, -]_n per the theorem being exercised
    SpaceKind domain_kind = SpaceKind::FullSpace;
    if (record.theorem_case == TheoremCase::Thm1Case1 ||
        record.theorem_case == TheoremCase::Thm1Case2)
        domain_kind = SpaceKind::CuspSpace;
    if (record.f_cuspidal && record.dim_relation == DimRelation::EqualMinusOne)
        domain_kind = SpaceKind::CuspSpace; // the exceptional wtf = 12 class

    const int dom_dim = space_dim(concrete_wtg, domain_kind);

    // f: the Eisenstein series, or the unique normalized cusp form
    QExpansion f = QExpansion::one(1);
    const int work_prec =
        std::max({prec, cert.target_dim + dom_dim + 3, 26}); // 26 covers eigen checks to bound 5
    if (!record.f_cuspidal) {
        f = eisenstein(record.wtf, work_prec);
    } else {
        if (dim_cusp(record.wtf) != 1)
            throw UnsupportedCuspidalF("certify: dim S_" + std::to_string(record.wtf) +
                                       " = " + std::to_string(dim_cusp(record.wtf)) +
                                       "; only one-dimensional cusp spaces give a "
                                       "canonical rational eigenform");
        f = miller_basis(record.wtf, SpaceKind::CuspSpace, work_prec)->element(0);
    }

    if (cert.target_dim == 0) {
        cert.outcome = CertOutcome::Inconclusive;
        cert.reason = "degenerate: S_" + std::to_string(target) +
                      " is zero, the bracket image vanishes";
        cert.injective = dom_dim == 0;
        return cert;
    }
    if (dom_dim == 0) {
        cert.outcome = CertOutcome::RuledOutTrivially;
        cert.injective = true;
        cert.reason = "the domain is zero-dimensional, so the image is {0} and "
                      "contains no eigenform";
        return cert;
    }

    OperatorMatrix op = operator_matrix(f, concrete_wtg, record.n, domain_kind);
    cert.operator_rank = op.rank;
    cert.injective = is_injective(op);

    if (op.rank == cert.target_dim) {
        cert.outcome = CertOutcome::ForcedEigenform;
        if (cert.target_dim == 1) {
            // solve [f, g]_n = normalized eigenform: one row, pick any
            // column with a nonzero entry
            int j = 0;
            while (j < dom_dim && op.entries.at(0, j) == 0) ++j;
            assert(j < dom_dim);
            std::vector<Rational> g_coords(dom_dim, Rational(0));
            g_coords[j] = Rational(1) / op.entries.at(0, j);

            auto domain = miller_basis(concrete_wtg, domain_kind, work_prec);
            QExpansion g = qexp_scale(g_coords[j], domain->element(j));
            QExpansion image = rc_bracket(f, g, record.n);
            cert.eigen = is_eigenform(image, target, 5);
            assert(cert.eigen->is_eigen);
            cert.witness_g = std::move(g_coords);
            cert.reason = "surjective onto the one-dimensional S_" + std::to_string(target) +
                          "; explicit rational g constructed and verified";
        } else {
            cert.reason = "surjective onto S_" + std::to_string(target) +
                          " (dim " + std::to_string(cert.target_dim) +
                          "); an eigenform exists in the image but its preimage "
                          "may have irrational coordinates";
        }
        return cert;
    }

    // proper rational subspace: a certified irreducible Hecke polynomial
    // rules out any eigenform in the image
    bool all_reducible = !m_list.empty();
    for (int m : m_list) {
        HeckePolyRecord rec = certify_irreducible(hecke_charpoly(target, m), prime_budget);
        if (rec.certified_irreducible()) {
            cert.outcome = CertOutcome::RuledOutByIrreducibility;
            cert.hecke_witness = std::move(rec);
            cert.reason = "image is a proper rational subspace of S_" + std::to_string(target) +
                          " and T_" + std::to_string(cert.hecke_witness->index_m) +
                          "(x) is certified irreducible";
            return cert;
        }
        if (rec.status != IrreducibilityStatus::Reducible) all_reducible = false;
    }
    if (all_reducible) {
        cert.outcome = CertOutcome::WouldImplyReducibility;
        cert.reason = "image is proper and every examined Hecke polynomial is "
                      "reducible; an eigenform in the image is not excluded";
    } else {
        cert.outcome = CertOutcome::Inconclusive;
        cert.reason = "image is proper but no decisive irreducibility witness was found";
    }
    return cert;
}

} // namespace modforms
