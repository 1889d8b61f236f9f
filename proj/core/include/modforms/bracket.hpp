#ifndef MODFORMS_BRACKET_HPP
#define MODFORMS_BRACKET_HPP

#include <modforms/matrix.hpp>
#include <modforms/spaces.hpp>

namespace modforms {

// Parameters of one bracket [f, g]_n; the target weight is determined.
struct BracketSpec {
    int n;
    int wtf;
    int wtg;
    int target_weight() const { return wtf + wtg + 2 * n; }
};

// The n-th Rankin-Cohen bracket
//   [f,g]_n = sum_{r+s=n} (-1)^r C(n+wt(f)-1, s) C(n+wt(g)-1, r) f^(r) g^(s)
// on q-expansions, built from theta derivatives. Both inputs must carry
// weight tags; the result is tagged wt(f)+wt(g)+2n and truncated to the
// shared precision. n = 0 is plain multiplication.
QExpansion rc_bracket(const QExpansion& f, const QExpansion& g, int n);

// Matrix of the linear map [f, -]_n from M_wtg or S_wtg into the cusp
// space of the target weight, in Miller coordinates on both sides.
// Column j holds the target-space coordinates of the image of domain
// basis element j; building each column certifies that the image is a
// cuspidal modular form of the right weight.
struct OperatorMatrix {
    BracketSpec spec;
    SpaceKind domain_kind;
    RatMatrix entries; // rows = dim S_target, cols = dim of domain
    int rank;
};

// Requires f.prec() >= dim S_target + dim domain + 2 (and at least
// dim S_target + 3) so membership certification has surplus coefficients.
// A zero-dimensional domain yields a 0-column matrix.
OperatorMatrix operator_matrix(const QExpansion& f, int wtg, int n, SpaceKind domain_kind);

// rank equal to the column count (vacuously true for a 0-column matrix)
bool is_injective(const OperatorMatrix& m);

} // namespace modforms

#endif
