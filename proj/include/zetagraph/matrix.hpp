#pragma once

#include <vector>

#include "zetagraph/poly.hpp"

namespace zg {

template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, T fill = T()) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, fill) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const T& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    friend bool operator==(const Mat& a, const Mat& b) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Mat<BigInt>;
using PolyMatrix = Mat<IntPoly>;

PolyMatrix to_poly_matrix(const IntMatrix& m);

// Bareiss fraction-free elimination over Z[t]; every internal division is
// exact by construction and asserted (std::logic_error on violation).
IntPoly det_fraction_free(PolyMatrix m);
BigInt det_fraction_free(const IntMatrix& m);

// Exact det(xI - A) via CRT over 62-bit primes with Hessenberg reduction
// mod p; the prime count comes from a rigorous coefficient bound.
IntPoly char_poly(const IntMatrix& a);

// Cofactor expansion, exponential; test oracle for small matrices.
IntPoly det_cofactor(const PolyMatrix& m);

}  // namespace zg
