#include <modforms/qexpansion.hpp>
#include <modforms/errors.hpp>

#include <algorithm>
#include <cassert>
#include <sstream>

namespace modforms {

namespace {

std::optional<int> merge_weights(const QExpansion& a, const QExpansion& b) {
    if (a.weight() && b.weight()) {
        if (*a.weight() != *b.weight())
            throw WeightMismatch("weights " + std::to_string(*a.weight()) +
                                 " and " + std::to_string(*b.weight()) +
                                 " disagree");
        return a.weight();
    }
    return std::nullopt;
}

} // namespace

QExpansion::QExpansion(std::vector<Rational> coeffs, std::optional<int> weight)
    : coeffs_(std::move(coeffs)), weight_(weight) {
    assert(!coeffs_.empty());
}

QExpansion QExpansion::zero(int prec, std::optional<int> weight) {
    assert(prec >= 1);
    return QExpansion(std::vector<Rational>(prec, Rational(0)), weight);
}

QExpansion QExpansion::one(int prec) {
    auto z = zero(prec, 0);
    std::vector<Rational> c = z.coeffs();
    c[0] = 1;
    return QExpansion(std::move(c), 0);
}

const Rational& QExpansion::coeff(int m) const {
    assert(m >= 0 && m < prec());
    return coeffs_[m];
}

bool QExpansion::is_zero() const { return valuation() < 0; }

int QExpansion::valuation() const {
    for (int m = 0; m < prec(); ++m)
        if (coeffs_[m] != 0) return m;
    return -1;
}

QExpansion QExpansion::truncated(int prec) const {
    assert(prec >= 1 && prec <= this->prec());
    return QExpansion(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + prec), weight_);
}

QExpansion QExpansion::with_weight(std::optional<int> weight) const {
    return QExpansion(coeffs_, weight);
}

std::string QExpansion::str(int max_terms) const {
    std::ostringstream os;
    bool first = true;
    int shown = 0;
    for (int m = 0; m < prec() && shown < max_terms; ++m) {
        if (coeffs_[m] == 0) continue;
        if (!first) os << " + ";
        os << to_string(coeffs_[m]);
        if (m > 0) os << "*q^" << m;
        first = false;
        ++shown;
    }
    if (first) os << "0";
    os << " + O(q^" << prec() << ")";
    return os.str();
}

QExpansion qexp_add(const QExpansion& a, const QExpansion& b) {
    auto w = merge_weights(a, b);
    const int p = std::min(a.prec(), b.prec());
    std::vector<Rational> c(p);
    for (int m = 0; m < p; ++m) c[m] = a.coeff(m) + b.coeff(m);
    return QExpansion(std::move(c), w);
}

QExpansion qexp_sub(const QExpansion& a, const QExpansion& b) {
    auto w = merge_weights(a, b);
    const int p = std::min(a.prec(), b.prec());
    std::vector<Rational> c(p);
    for (int m = 0; m < p; ++m) c[m] = a.coeff(m) - b.coeff(m);
    return QExpansion(std::move(c), w);
}

QExpansion qexp_mul(const QExpansion& a, const QExpansion& b) {
    std::optional<int> w;
    if (a.weight() && b.weight()) w = *a.weight() + *b.weight();
    const int p = std::min(a.prec(), b.prec());
    std::vector<Rational> c(p, Rational(0));
    Rational t;
    for (int i = 0; i < p; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j < p; ++j) {
            if (b.coeff(j) == 0) continue;
            t = a.coeff(i) * b.coeff(j);
            c[i + j] += t;
        }
    }
    return QExpansion(std::move(c), w);
}

QExpansion qexp_scale(const Rational& s, const QExpansion& f) {
    std::vector<Rational> c(f.coeffs());
    for (auto& x : c) x *= s;
    return QExpansion(std::move(c), f.weight());
}

QExpansion theta_derivative(const QExpansion& f, unsigned order) {
    if (order == 0) return f.with_weight(std::nullopt);
    std::vector<Rational> c(f.prec());
    c[0] = 0;
    for (int m = 1; m < f.prec(); ++m)
        c[m] = Rational(pow(Integer(m), order)) * f.coeff(m);
    return QExpansion(std::move(c), std::nullopt);
}

QExpansion qexp_pow(const QExpansion& base, unsigned e) {
    QExpansion acc = QExpansion::one(base.prec());
    if (base.weight()) acc = acc.with_weight(0);
    QExpansion sq = base;
    while (e > 0) {
        if (e & 1u) acc = qexp_mul(acc, sq);
        e >>= 1u;
        if (e > 0) sq = qexp_mul(sq, sq);
    }
    return acc;
}

} // namespace modforms
