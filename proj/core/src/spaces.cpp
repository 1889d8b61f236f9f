#include <modforms/spaces.hpp>
#include <modforms/arith.hpp>
#include <modforms/errors.hpp>

#include <cassert>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace modforms {

int dim_modular(int k) {
    if (k < 0 || k % 2 != 0) return 0;
    return k % 12 == 2 ? k / 12 : k / 12 + 1;
}

int dim_cusp(int k) {
    if (k < 4 || k % 2 != 0) return 0;
    return std::max(dim_modular(k) - 1, 0);
}

QExpansion eisenstein(int k, int prec) {
    if (k % 2 != 0 || k < 4)
        throw BadWeight("eisenstein: weight " + std::to_string(k) +
                        " (need even k >= 4; E_2 is not modular)");
    assert(prec >= 1);
    std::vector<Rational> c(prec);
    c[0] = 1;
    const Rational factor = Rational(-2 * k) / bernoulli(k);
    for (int n = 1; n < prec; ++n)
        c[n] = factor * Rational(sigma(k - 1, n));
    return QExpansion(std::move(c), k);
}

QExpansion delta(int prec) {
    if (prec < 2) throw InsufficientPrecision("delta: prec must be >= 2");
    const QExpansion e4 = eisenstein(4, prec);
    const QExpansion e6 = eisenstein(6, prec);
    QExpansion d = qexp_scale(Rational(1, 1728), qexp_pow(e4, 3) - qexp_pow(e6, 2));
    return d.with_weight(12);
}

SpaceBasis::SpaceBasis(int weight, SpaceKind kind, std::vector<QExpansion> basis)
    : weight_(weight), kind_(kind), basis_(std::move(basis)) {
    prec_ = basis_.empty() ? 0 : basis_.front().prec();
    for (const auto& f : basis_) assert(f.prec() == prec_);
}

SpaceBasis SpaceBasis::truncated(int prec) const {
    std::vector<QExpansion> b;
    b.reserve(basis_.size());
    for (const auto& f : basis_) b.push_back(f.truncated(prec));
    return SpaceBasis(weight_, kind_, std::move(b));
}

namespace {

std::shared_mutex basis_cache_mutex;
std::map<std::tuple<int, int, int>, std::shared_ptr<const SpaceBasis>> basis_cache;

// E4^a E6^b of weight m with b in {0,1}; m even, m != 2.
void exponents_for_weight(int m, int& a, int& b) {
    assert(m >= 0 && m % 2 == 0 && m != 2);
    if (m % 4 == 0) {
        a = m / 4;
        b = 0;
    } else {
        assert(m >= 6);
        a = (m - 6) / 4;
        b = 1;
    }
}

std::shared_ptr<const SpaceBasis> build_miller_basis(int k, SpaceKind kind, int prec) {
    const int d = space_dim(k, kind);
    if (prec < d + 1)
        throw InsufficientPrecision("miller_basis: prec " + std::to_string(prec) +
                                    " < dim + 1 = " + std::to_string(d + 1));
    if (d == 0)
        return std::make_shared<SpaceBasis>(k, kind, std::vector<QExpansion>{});

    const int offset = kind == SpaceKind::CuspSpace ? 1 : 0;
    const QExpansion e4 = eisenstein(4, prec);
    const QExpansion e6 = eisenstein(6, prec);
    const QExpansion dl = delta(prec);

    // generator i = Delta^{i+offset} E4^a E6^b has leading term q^{i+offset}
    std::vector<QExpansion> gens;
    gens.reserve(d);
    QExpansion delta_pow = offset == 1 ? dl : QExpansion::one(prec).with_weight(0);
    for (int i = 0; i < d; ++i) {
        const int m = k - 12 * (i + offset);
        int a, b;
        exponents_for_weight(m, a, b);
        QExpansion g = delta_pow * qexp_pow(e4, a);
        if (b) g = g * e6;
        gens.push_back(g.with_weight(k));
        if (i + 1 < d) delta_pow = delta_pow * dl;
    }

    // reduce to the diagonal form: generator i already leads at
    // q^{i+offset} with unit coefficient, so eliminate those exponents
    // from every other row
    for (int i = 0; i < d; ++i) {
        const int pivot = i + offset;
        assert(gens[i].coeff(pivot) == 1);
        for (int r = 0; r < d; ++r) {
            if (r == i) continue;
            const Rational c = gens[r].coeff(pivot);
            if (c != 0) gens[r] = gens[r] - qexp_scale(c, gens[i]);
        }
    }
    for (auto& g : gens) g = g.with_weight(k);
    return std::make_shared<SpaceBasis>(k, kind, std::move(gens));
}

} // namespace

std::shared_ptr<const SpaceBasis> miller_basis(int k, SpaceKind kind, int prec) {
    const auto key = std::make_tuple(k, static_cast<int>(kind), prec);
    {
        std::shared_lock lock(basis_cache_mutex);
        auto it = basis_cache.find(key);
        if (it != basis_cache.end()) return it->second;
    }
    auto built = build_miller_basis(k, kind, prec);
    std::unique_lock lock(basis_cache_mutex);
    auto [it, inserted] = basis_cache.emplace(key, std::move(built));
    return it->second;
}

std::optional<std::vector<Rational>> coordinates(const QExpansion& f,
                                                 const SpaceBasis& space) {
    if (f.prec() < space.prec())
        throw InsufficientPrecision("coordinates: f has " + std::to_string(f.prec()) +
                                    " coefficients, basis needs " +
                                    std::to_string(space.prec()));
    if (f.weight() && *f.weight() != space.weight()) return std::nullopt;

    // the basis is diagonal, so the candidate coordinates are just f's
    // coefficients at the block exponents; membership is then certified on
    // every remaining known coefficient
    const int d = space.dim();
    const int offset = space.offset();
    std::vector<Rational> coords(d);
    for (int i = 0; i < d; ++i) coords[i] = f.coeff(offset + i);

    QExpansion combo = QExpansion::zero(space.prec());
    for (int i = 0; i < d; ++i)
        if (coords[i] != 0)
            combo = combo + qexp_scale(coords[i], space.element(i).with_weight(std::nullopt));
    for (int m = 0; m < space.prec(); ++m)
        if (combo.coeff(m) != f.coeff(m)) return std::nullopt;
    return coords;
}

} // namespace modforms
