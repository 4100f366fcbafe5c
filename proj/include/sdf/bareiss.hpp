#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace sdf::linalg {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination. Every
/// division in the update is exact, so no rationals are formed.
inline std::size_t bareiss_rank(IntegerMatrix m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m.front().size();
    mpz_class previous = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            m[i][c] = 0;
        }
        previous = m[rank][c];
        ++rank;
    }
    return rank;
}

} // namespace sdf::linalg
