#ifndef MODFORMS_SPACES_HPP
#define MODFORMS_SPACES_HPP

#include <modforms/qexpansion.hpp>

#include <memory>
#include <optional>
#include <vector>

namespace modforms {

enum class SpaceKind { FullSpace, CuspSpace };

// dim M_k at level 1: zero for negative or odd k; for even k >= 0 it is
// floor(k/12), plus one unless k = 2 (mod 12).
int dim_modular(int k);

// dim S_k = max(dim M_k - 1, 0) for even k >= 4, zero otherwise.
int dim_cusp(int k);

inline int space_dim(int k, SpaceKind kind) {
    return kind == SpaceKind::FullSpace ? dim_modular(k) : dim_cusp(k);
}

// E_k = 1 - (2k/B_k) sum_{n>=1} sigma_{k-1}(n) q^n, weight tag k.
// Rejects odd k, k < 4 and k = 2 (E_2 is not modular).
QExpansion eisenstein(int k, int prec);

// The unique normalized cusp form of weight 12, (E4^3 - E6^2)/1728.
QExpansion delta(int prec);

// The Miller (diagonal) basis of M_k or S_k: element i has leading term
// q^{i+offset} with unit coefficient (offset 0 for M_k, 1 for S_k) and
// zeros at every other diagonal exponent of the block. Immutable.
class SpaceBasis {
public:
    SpaceBasis(int weight, SpaceKind kind, std::vector<QExpansion> basis);

    int weight() const { return weight_; }
    SpaceKind kind() const { return kind_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int prec() const { return prec_; }
    int offset() const { return kind_ == SpaceKind::CuspSpace ? 1 : 0; }
    const QExpansion& element(int i) const { return basis_.at(i); }
    const std::vector<QExpansion>& elements() const { return basis_; }

    SpaceBasis truncated(int prec) const;

private:
    int weight_;
    SpaceKind kind_;
    int prec_;
    std::vector<QExpansion> basis_;
};

// Builds the Miller basis from products Delta^i E4^a E6^b of weight k
// (b in {0,1}), row-reduced to the diagonal form. Requires
// prec >= dim + 1. Results are memoized per (k, kind, prec); insertions
// are serialized, reads are concurrent.
std::shared_ptr<const SpaceBasis> miller_basis(int k, SpaceKind kind, int prec);

// Coordinates of f in the given basis, certified by agreement on every
// known coefficient up to the basis precision (membership is decided by
// the coefficients beyond the leading block). Requires
// f.prec() >= space.prec(). Returns nullopt when f is not a member to
// this precision.
std::optional<std::vector<Rational>> coordinates(const QExpansion& f,
                                                 const SpaceBasis& space);

} // namespace modforms

#endif
