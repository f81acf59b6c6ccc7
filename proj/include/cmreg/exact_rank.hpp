#ifndef CMREG_EXACT_RANK_HPP
#define CMREG_EXACT_RANK_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "scalar.hpp"

namespace cmreg {

using IntMatrix = std::vector<std::vector<long>>;

/// Rank over Q by fraction-free (Bareiss) elimination: every division below is exact.
inline std::size_t rank_over_rationals(const IntMatrix& m) {
    if (m.empty() || m.front().empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[r][j] = (a[rank][col] * a[r][j] - a[r][col] * a[rank][j]);
                mpz_divexact(a[r][j].get_mpz_t(), a[r][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

/// Rank over GF(p) by ordinary elimination.
inline std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
    if (m.empty() || m.front().empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            long v = m[i][j] % static_cast<long>(p);
            a[i][j] = static_cast<std::uint64_t>(v < 0 ? v + p : v);
        }
    auto inv = [p](std::uint64_t x) {
        std::uint64_t acc = 1;
        std::uint64_t e = p - 2;
        while (e > 0) {
            if (e & 1) acc = acc * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return acc;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        const std::uint64_t scale = inv(a[rank][col]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            const std::uint64_t f = a[r][col] * scale % p;
            for (std::size_t j = col; j < cols; ++j) a[r][j] = (a[r][j] + (p - f) * a[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

inline std::size_t exact_rank(const IntMatrix& m, const Field& k) {
    return k.is_rationals() ? rank_over_rationals(m) : rank_mod_p(m, k.characteristic());
}

}  // namespace cmreg

#endif
