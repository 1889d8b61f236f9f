#include <modforms/matrix.hpp>
#include <modforms/errors.hpp>

#include <cassert>

namespace modforms {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RatMatrix::is_integral() const {
    for (const auto& x : a_)
        if (!modforms::is_integral(x)) return false;
    return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    assert(a.cols() == b.rows());
    RatMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    RatMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
    RatMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            c.at(i, j) = s * a.at(i, j);
    return c;
}

int rank_exact(const RatMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Integer working copy: each row multiplied by the lcm of its
    // denominators (row scaling does not change the rank).
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (int i = 0; i < rows; ++i) {
        Integer den(1);
        for (int j = 0; j < cols; ++j) den = lcm(den, m.at(i, j).get_den());
        for (int j = 0; j < cols; ++j) {
            Rational scaled = m.at(i, j) * Rational(den);
            a[i][j] = scaled.get_num();
        }
    }

    int rank = 0;
    Integer prev_pivot(1);
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        // Bareiss step: a[i][j] <- (a[i][j]*p - a[i][col]*a[rank][j]) / prev_pivot
        const Integer p = a[rank][col];
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                Integer t = a[i][j] * p - a[i][col] * a[rank][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
                a[i][j] = t;
            }
            a[i][col] = 0;
        }
        prev_pivot = p;
        ++rank;
    }
    return rank;
}

IntPolynomial poly_charpoly(const RatMatrix& m) {
    assert(m.rows() == m.cols());
    const int n = m.rows();
    if (n == 0) return IntPolynomial({Integer(1)});

    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1);
    // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RatMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            RatMatrix shifted = mk;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
            mk = m * shifted;
        }
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += mk.at(i, i);
        c[n - k] = -tr / k;
    }

    std::vector<Integer> out(n + 1);
    for (int i = 0; i <= n; ++i) {
        if (!is_integral(c[i]))
            throw NonIntegral("charpoly coefficient of x^" + std::to_string(i) +
                              " is not an integer: " + to_string(c[i]));
        out[i] = c[i].get_num();
    }
    return IntPolynomial(std::move(out));
}

} // namespace modforms
