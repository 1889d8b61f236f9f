#ifndef MODFORMS_QEXPANSION_HPP
#define MODFORMS_QEXPANSION_HPP

#include <modforms/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace modforms {

// Truncated formal power series sum a_m q^m with exact rational
// coefficients, known through q^{prec-1}. The variable q is only ever an
// index; nothing is evaluated. An optional weight tag records that the
// series is (claimed to be) a modular form of that weight; the tag is
// advisory metadata here and is enforced by the spaces/bracket layers.
//
// Every binary operation truncates to the minimum operand precision and
// never extrapolates. Values are immutable after construction.
class QExpansion {
public:
    QExpansion() = default;
    explicit QExpansion(std::vector<Rational> coeffs,
                        std::optional<int> weight = std::nullopt);

    static QExpansion zero(int prec, std::optional<int> weight = std::nullopt);
    static QExpansion one(int prec);  // the constant 1, weight tag 0

    int prec() const { return static_cast<int>(coeffs_.size()); }
    const Rational& coeff(int m) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    std::optional<int> weight() const { return weight_; }

    bool is_zero() const;
    // index of the first nonzero coefficient, or -1 for the zero series
    int valuation() const;

    QExpansion truncated(int prec) const;
    QExpansion with_weight(std::optional<int> weight) const;

    // Coefficientwise comparison (weight tags are advisory and excluded).
    friend bool operator==(const QExpansion& a, const QExpansion& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str(int max_terms = 8) const;

private:
    std::vector<Rational> coeffs_;
    std::optional<int> weight_;
};

// Coefficientwise sum/difference to shared precision. Throws WeightMismatch
// when both weights are present and unequal; the tag survives only when both
// operands agree on it.
QExpansion qexp_add(const QExpansion& a, const QExpansion& b);
QExpansion qexp_sub(const QExpansion& a, const QExpansion& b);

// Truncated Cauchy product; weight tags add when both present.
QExpansion qexp_mul(const QExpansion& a, const QExpansion& b);

QExpansion qexp_scale(const Rational& c, const QExpansion& f);

// Normalized derivative applied `order` times: a_m -> m^order a_m. The
// q^1 coefficient is unchanged for every order. Clears the weight tag
// (derivatives of modular forms are not modular).
QExpansion theta_derivative(const QExpansion& f, unsigned order);

QExpansion qexp_pow(const QExpansion& base, unsigned e);

inline QExpansion operator+(const QExpansion& a, const QExpansion& b) { return qexp_add(a, b); }
inline QExpansion operator-(const QExpansion& a, const QExpansion& b) { return qexp_sub(a, b); }
inline QExpansion operator*(const QExpansion& a, const QExpansion& b) { return qexp_mul(a, b); }
inline QExpansion operator*(const Rational& c, const QExpansion& f) { return qexp_scale(c, f); }

} // namespace modforms

#endif
