#include <modforms/bracket.hpp>
#include <modforms/errors.hpp>

#include <cassert>

namespace modforms {

QExpansion rc_bracket(const QExpansion& f, const QExpansion& g, int n) {
    assert(n >= 0);
    if (!f.weight() || !g.weight())
        throw MissingWeight("rc_bracket: both inputs need weight tags");
    const int wtf = *f.weight();
    const int wtg = *g.weight();
    const int prec = std::min(f.prec(), g.prec());

    QExpansion acc = QExpansion::zero(prec);
    for (int r = 0; r <= n; ++r) {
        const int s = n - r;
        Integer c = binomial(n + wtf - 1, s) * binomial(n + wtg - 1, r);
        if (r % 2 != 0) c = -c;
        if (c == 0) continue;
        QExpansion term = theta_derivative(f, r) * theta_derivative(g, s);
        acc = acc + qexp_scale(Rational(c), term);
    }
    return acc.with_weight(wtf + wtg + 2 * n);
}

OperatorMatrix operator_matrix(const QExpansion& f, int wtg, int n, SpaceKind domain_kind) {
    if (!f.weight()) throw MissingWeight("operator_matrix: f needs a weight tag");
    const BracketSpec spec{n, *f.weight(), wtg};
    const int target = spec.target_weight();
    const int rows = dim_cusp(target);
    const int cols = space_dim(wtg, domain_kind);

    const int need = std::max(rows + cols + 2, rows + 3);
    if (f.prec() < need)
        throw InsufficientPrecision("operator_matrix: f.prec() = " +
                                    std::to_string(f.prec()) + ", need >= " +
                                    std::to_string(need));

    RatMatrix m(rows, cols);
    if (cols > 0 && rows > 0) {
        const int prec = f.prec();
        auto domain = miller_basis(wtg, domain_kind, prec);
        auto target_basis = miller_basis(target, SpaceKind::CuspSpace, prec);
        for (int j = 0; j < cols; ++j) {
            QExpansion image = rc_bracket(f, domain->element(j), n);
            auto coords = coordinates(image, *target_basis);
            if (!coords)
                throw NotMember("operator_matrix: image of basis element " +
                                std::to_string(j) + " failed membership in S_" +
                                std::to_string(target));
            for (int i = 0; i < rows; ++i) m.at(i, j) = (*coords)[i];
        }
    } else if (cols > 0) {
        // target cusp space is zero-dimensional: certify each image is 0
        const int prec = f.prec();
        auto domain = miller_basis(wtg, domain_kind, prec);
        for (int j = 0; j < cols; ++j) {
            QExpansion image = rc_bracket(f, domain->element(j), n);
            if (!image.is_zero())
                throw NotMember("operator_matrix: nonzero image in the zero space S_" +
                                std::to_string(target));
        }
    }
    return OperatorMatrix{spec, domain_kind, m, rank_exact(m)};
}

bool is_injective(const OperatorMatrix& m) {
    return m.rank == m.entries.cols();
}

} // namespace modforms
