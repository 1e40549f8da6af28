#include "zetagraph/matrix.hpp"

#include <stdexcept>

namespace zg {

PolyMatrix to_poly_matrix(const IntMatrix& m) {
    PolyMatrix p(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) p.at(i, j) = IntPoly(m.at(i, j));
    return p;
}

IntPoly det_fraction_free(PolyMatrix m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return IntPoly(1);
    int sign = 1;
    IntPoly prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) { piv = i; break; }
            if (piv < 0) return IntPoly();  // singular
            for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                IntPoly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                PolyDivision d = poly_divide(num, prev);
                if (!d.exact)
                    throw std::logic_error("fraction-free elimination: inexact division");
                m.at(i, j) = std::move(d.quotient);
            }
            m.at(i, k) = IntPoly();
        }
        prev = m.at(k, k);
    }
    IntPoly det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

BigInt det_fraction_free(const IntMatrix& m) {
    IntPoly d = det_fraction_free(to_poly_matrix(m));
    if (d.degree() > 0) throw std::logic_error("integer determinant with positive degree");
    return d.coeff(0);
}

IntPoly det_cofactor(const PolyMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return IntPoly(1);
    if (n == 1) return m.at(0, 0);
    IntPoly acc;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        IntPoly term = m.at(0, j) * det_cofactor(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace zg
