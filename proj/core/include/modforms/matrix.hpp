#ifndef MODFORMS_MATRIX_HPP
#define MODFORMS_MATRIX_HPP

#include <modforms/intpoly.hpp>
#include <modforms/rational.hpp>

#include <vector>

namespace modforms {

// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    static RatMatrix identity(int n);
    bool is_integral() const;

    friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& c, const RatMatrix& a);

// Exact rank by fraction-free (Bareiss) elimination: rows are scaled to
// integers first, then eliminated with exact divisions only, so
// intermediate entries stay integral and bounded by minors.
int rank_exact(const RatMatrix& m);

// Monic characteristic polynomial det(xI - M) by Faddeev-LeVerrier with
// exact arithmetic (the division by the step index is exact). Requires a
// square matrix; throws NonIntegral unless every coefficient is an integer
// (Hecke matrices in the Miller basis are integral, so a fractional
// coefficient signals an upstream bug).
IntPolynomial poly_charpoly(const RatMatrix& m);

} // namespace modforms

#endif
