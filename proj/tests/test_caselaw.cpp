#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <modforms/caselaw.hpp>
#include <modforms/errors.hpp>

#include <random>
#include <set>

using namespace modforms;

TEST_CASE("classify: the three theorem entry points") {
    // E4 against cuspidal g of weight 12 at n = 1: dims 1 = 1, eigenform forced
    auto r1 = classify(4, false, 12, true, 1);
    CHECK(r1.theorem_case == TheoremCase::Thm1Case2);
    CHECK(r1.dim_relation == DimRelation::Equal);
    CHECK(dim_cusp(4 + 12 + 2) == dim_cusp(12));

    auto r2 = classify(12, true, 12, true, 1);
    CHECK(r2.theorem_case == TheoremCase::TrivialBothCuspidal);

    // E26 against noncuspidal g of weight 4 at n = 8: target far above M_4
    auto r3 = classify(26, false, 4, false, 8);
    CHECK(r3.theorem_case == TheoremCase::Thm2Case1);
    CHECK(r3.dim_relation == DimRelation::Greater);

    // cuspidal f of weight 12, noncuspidal g of weight 12, n = 1:
    // the exceptional minus-one relation
    auto r4 = classify(12, true, 12, false, 1);
    CHECK(r4.theorem_case == TheoremCase::Thm3Case2);
    CHECK(r4.dim_relation == DimRelation::EqualMinusOne);
}

TEST_CASE("classify: recomputed dim_relation always matches the stored enum") {
    for (int wtf = 4; wtf <= 30; wtf += 2) {
        for (int wtg = 4; wtg <= 40; wtg += 2) {
            for (int n = 1; n <= 6; ++n) {
                for (bool fc : {false, true}) {
                    if (fc && dim_cusp(wtf) < 1) continue;
                    for (bool gc : {false, true}) {
                        auto rec = classify(wtf, fc, wtg, gc, n);
                        const int ds = dim_cusp(wtf + wtg + 2 * n);
                        const int cmp = gc && !fc ? dim_cusp(wtg)
                                      : fc && gc  ? dim_cusp(wtg)
                                                  : dim_modular(wtg);
                        const int diff = ds - cmp;
                        DimRelation expect = diff > 0    ? DimRelation::Greater
                                             : diff == 0 ? DimRelation::Equal
                                             : diff == -1 ? DimRelation::EqualMinusOne
                                                          : DimRelation::Less;
                        CHECK(rec.dim_relation == expect);
                    }
                }
            }
        }
    }
}

TEST_CASE("classify: errors") {
    CHECK_THROWS_AS(classify(14, true, 12, false, 1), BadCuspidality); // S_14 = 0
    CHECK_THROWS_AS(classify(8, true, 12, false, 1), BadCuspidality);
    CHECK_THROWS_AS(classify(4, false, 12, false, 0), BadWeight); // n = 0 out of scope
    CHECK_THROWS_AS(classify(5, false, 12, false, 1), BadWeight);
    CHECK_THROWS_AS(classify(4, false, 2, false, 1), BadWeight);
}

TEST_CASE("enumerate_equality_classes: 149 classes, saturated") {
    auto all = enumerate_equality_classes(26, 12);
    CHECK(all.size() == 149);

    // identical under larger bounds
    auto wide = enumerate_equality_classes(40, 14);
    CHECK(all == wide);

    // the extreme members that pin the saturation bounds
    auto has = [&](int wtf, int r, int n) {
        CaseRecord probe;
        probe.wtf = wtf;
        probe.wtg_residue = r;
        probe.n = n;
        probe.dim_relation = DimRelation::Equal;
        probe.theorem_case = TheoremCase::Thm2Case3;
        return std::find(all.begin(), all.end(), probe) != all.end();
    };
    CHECK(has(24, 0, 1));  // largest wtf
    CHECK(has(4, 0, 11));  // largest n
    CHECK(!has(26, 0, 1));
}

TEST_CASE("enumeration bounds below saturation are rejected") {
    CHECK_THROWS_AS(enumerate_equality_classes(20, 12), BadWeight);
    CHECK_THROWS_AS(enumerate_equality_classes(26, 8), BadWeight);
}

TEST_CASE("cuspidal-side counts: 45 keeping wtf >= 12, of which 33 have dim S_wtf >= 1") {
    auto all = enumerate_equality_classes(26, 12);
    int keep_ge12 = 0, cusp_capable = 0;
    for (const auto& rec : all) {
        if (rec.wtf >= 12) ++keep_ge12;
        if (dim_cusp(rec.wtf) >= 1) ++cusp_capable;
    }
    CHECK(keep_ge12 == 45);   // the published count
    CHECK(cusp_capable == 33); // excludes wtf = 14 where S_wtf = 0
}

TEST_CASE("stacked classes at wtf = 14, residue 4") {
    auto all = enumerate_equality_classes(26, 12);
    std::set<int> ns;
    for (const auto& rec : all)
        if (rec.wtf == 14 && rec.wtg_residue == 4) ns.insert(rec.n);
    CHECK(ns.count(1) == 1);
    CHECK(ns.count(2) == 1);
    CHECK(ns == std::set<int>{1, 2, 4});
}

TEST_CASE("enumerate_minus_one_classes: exactly the wtf = 12, residue 0, n = 1 class") {
    auto minus1 = enumerate_minus_one_classes(26, 12);
    REQUIRE(minus1.size() == 1);
    CHECK(minus1[0].wtf == 12);
    CHECK(minus1[0].wtg_residue == 0);
    CHECK(minus1[0].n == 1);
    CHECK(minus1[0].dim_relation == DimRelation::EqualMinusOne);
    CHECK(minus1[0].f_cuspidal);
    // and the target dimension is dim M_wtg - 1 at a concrete weight
    CHECK(dim_cusp(12 + 24 + 2) == dim_modular(24) - 1);
}

TEST_CASE("boundary exceptions: no class deviates at small wtg") {
    for (const auto& rec : enumerate_equality_classes(26, 12))
        CHECK(boundary_exceptions(rec, 100).empty());
    for (const auto& rec : enumerate_minus_one_classes(26, 12))
        CHECK(boundary_exceptions(rec, 100).empty());
}

TEST_CASE("certify: forced eigenform with explicit witness on S_18") {
    auto rec = classify(4, false, 12, true, 1);
    auto cert = certify(rec, 12, 16, {2, 3, 5});
    CHECK(cert.outcome == CertOutcome::ForcedEigenform);
    REQUIRE(cert.witness_g.has_value());
    REQUIRE(cert.witness_g->size() == 1);
    REQUIRE(cert.eigen.has_value());
    CHECK(cert.eigen->is_eigen);
    CHECK(cert.target_dim == 1);
    CHECK(cert.injective);
    // [E4, Delta]_1 leads with C(4,1) * 1 = 4 at q^1, so g = Delta/4
    CHECK((*cert.witness_g)[0] == Rational(1, 4));
}

TEST_CASE("certify: degenerate target S_14") {
    auto rec = classify(4, false, 4, false, 1);
    auto cert = certify(rec, 4, 10, {2});
    CHECK(cert.outcome == CertOutcome::Inconclusive);
    CHECK(cert.target_dim == 0);
}

TEST_CASE("certify: equality class at (E4, wtg=20, n=3) decided by injectivity") {
    // dim S_30 = dim M_20 = 2: the equality case, settled by the rank
    auto rec = classify(4, false, 20, false, 3);
    CHECK(rec.theorem_case == TheoremCase::Thm2Case3);
    CHECK(rec.dim_relation == DimRelation::Equal);
    auto cert = certify(rec, 20, 12, {2, 3, 5});
    if (cert.injective) {
        CHECK(cert.outcome == CertOutcome::ForcedEigenform);
        CHECK(!cert.witness_g.has_value()); // dim 2 target: abstract witness only
    } else {
        CHECK(cert.outcome == CertOutcome::RuledOutByIrreducibility);
    }
}

TEST_CASE("certify: proper image ruled out by irreducibility on S_36") {
    auto rec = classify(4, false, 20, false, 6);
    CHECK(rec.dim_relation == DimRelation::Greater); // dim S_36 = 3 > dim M_20 = 2
    auto cert = certify(rec, 20, 12, {2, 3, 5});
    CHECK(cert.outcome == CertOutcome::RuledOutByIrreducibility);
    REQUIRE(cert.hecke_witness.has_value());
    CHECK(cert.hecke_witness->certified_irreducible());
    CHECK(cert.hecke_witness->weight == 4 + 20 + 12);
}

TEST_CASE("certify: both cuspidal is ruled out trivially") {
    auto rec = classify(12, true, 12, true, 1);
    auto cert = certify(rec, 12, 10, {2});
    CHECK(cert.outcome == CertOutcome::RuledOutTrivially);
}

TEST_CASE("certify: cuspidal f beyond dimension one is unsupported") {
    auto rec = classify(24, true, 12, false, 1);
    CHECK_THROWS_AS(certify(rec, 12, 10, {2}), UnsupportedCuspidalF);
}

TEST_CASE("certify: wtg outside the residue class is rejected") {
    auto rec = classify(4, false, 12, true, 1);
    CHECK_THROWS_AS(certify(rec, 16, 10, {2}), BadWeight);
}

TEST_CASE("trivial both-cuspidal exclusion on random cusp pairs") {
    std::mt19937 rng(43);
    std::vector<int> cusp_weights = {12, 16, 18, 20, 22, 24, 26, 28, 30, 32, 34, 36};
    std::uniform_int_distribution<size_t> pick(0, cusp_weights.size() - 1);
    for (int trial = 0; trial < 10; ++trial) {
        const int kf = cusp_weights[pick(rng)];
        const int kg = cusp_weights[pick(rng)];
        const int n = 1 + trial % 3;
        auto f = miller_basis(kf, SpaceKind::CuspSpace, 30)->element(0);
        auto g = miller_basis(kg, SpaceKind::CuspSpace, 30)->element(0);
        auto br = rc_bracket(f, g, n);
        CHECK(br.coeff(0) == 0);
        CHECK(br.coeff(1) == 0);
        if (!br.is_zero()) CHECK(!is_eigenform(br, kf + kg + 2 * n, 5).is_eigen);
    }
}
