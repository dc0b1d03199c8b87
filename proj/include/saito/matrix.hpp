#pragma once

#include <cstdint>
#include <vector>

#include "saito/half_integer.hpp"

namespace saito {

// Dense square integer matrix, row-major, indexed by vertex insertion order.
class IntMatrix {
public:
    IntMatrix() : n_(0) {}
    explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int size() const { return n_; }
    i64& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    i64 operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

    IntMatrix transposed() const {
        IntMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix c(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                i64 aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    std::vector<i64> apply(const std::vector<i64>& v) const {
        std::vector<i64> out(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

private:
    int n_;
    std::vector<i64> data_;
};

// Exact inverse of a unit upper triangular matrix by back substitution.
// The inverse of such a matrix is again integral with unit diagonal.
IntMatrix inverse_unit_upper(const IntMatrix& u);

}  // namespace saito
