#include "saito/matrix.hpp"

#include "saito/errors.hpp"

namespace saito {

IntMatrix inverse_unit_upper(const IntMatrix& u) {
    const int n = u.size();
    for (int i = 0; i < n; ++i) {
        if (u(i, i) != 1) throw InternalInconsistency("matrix is not unit upper triangular");
        for (int j = 0; j < i; ++j)
            if (u(i, j) != 0) throw InternalInconsistency("matrix is not upper triangular");
    }
    // Column by column back substitution: inv(i,j) = delta_ij - sum_{i<k<=j} u(i,k) inv(k,j).
    IntMatrix inv(n);
    for (int j = 0; j < n; ++j) {
        inv(j, j) = 1;
        for (int i = j - 1; i >= 0; --i) {
            i64 acc = 0;
            for (int k = i + 1; k <= j; ++k) acc += u(i, k) * inv(k, j);
            inv(i, j) = -acc;
        }
    }
    return inv;
}

}  // namespace saito
