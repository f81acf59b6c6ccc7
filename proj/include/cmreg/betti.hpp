#ifndef CMREG_BETTI_HPP
#define CMREG_BETTI_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exact_rank.hpp"
#include "extended_int.hpp"
#include "monomial_ideal.hpp"

namespace cmreg {

// Graded Betti numbers of S/J for a monomial ideal J, from the upper Koszul simplicial
// complexes K^b(J) = { squarefree s : x^(b - s) in J }:  beta_{i,b}(J) = dim H~_{i-1}(K^b(J)).
// Used as an independent check on the substitution method.

class OracleScopeError : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr std::size_t oracle_max_vars = 8;
inline constexpr std::size_t oracle_max_generators = 20;

inline void check_oracle_scope(const MonomialIdeal& J) {
    if (J.nvars() > oracle_max_vars) {
        throw OracleScopeError("Betti oracle supports at most " + std::to_string(oracle_max_vars) + " variables");
    }
    if (J.generators().size() > oracle_max_generators) {
        throw OracleScopeError("Betti oracle supports at most " + std::to_string(oracle_max_generators) +
                               " minimal generators, got " + std::to_string(J.generators().size()));
    }
}

/// lcms of all nonempty subsets of Min(J), deduplicated.
inline std::set<Monomial> lcm_multidegrees(const MonomialIdeal& J) {
    check_oracle_scope(J);
    if (J.is_zero() || J.is_unit()) throw std::invalid_argument("lcm lattice needs a proper nonzero ideal");
    std::set<Monomial> lattice;
    for (const auto& g : J.generators()) {
        std::set<Monomial> next = lattice;
        next.insert(g);
        for (const auto& l : lattice) next.insert(lcm(l, g));
        lattice = std::move(next);
    }
    return lattice;
}

/// Reduced homology ranks of K^b(J); entry i is dim H~_{i-1}, i.e. beta_{i,b}(J).
inline std::vector<std::size_t> upper_koszul_homology(const MonomialIdeal& J, const Monomial& b, const Field& k) {
    const std::size_t n = J.nvars();
    if (b.nvars() != n) throw std::invalid_argument("multidegree has the wrong number of variables");
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < n; ++v) {
        if (b[v] > 0) support.push_back(v);
    }
    const std::size_t s = support.size();
    std::vector<std::size_t> ranks(s + 1, 0);

    // faces_by_size[k]: bitmasks over `support` of the k-element faces
    std::vector<std::vector<std::uint32_t>> faces_by_size(s + 1);
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        Monomial m = b;
        for (std::size_t q = 0; q < s; ++q) {
            if (mask & (1u << q)) m.set(support[q], b[support[q]] - 1);
        }
        if (J.contains(m)) faces_by_size[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
    }

    // boundary from size-k faces to size-(k-1) faces
    auto boundary_rank = [&](std::size_t size) -> std::size_t {
        if (size == 0 || size > s) return 0;
        const auto& hi = faces_by_size[size];
        const auto& lo = faces_by_size[size - 1];
        if (hi.empty() || lo.empty()) return 0;
        std::map<std::uint32_t, std::size_t> row_of;
        for (std::size_t r = 0; r < lo.size(); ++r) row_of[lo[r]] = r;
        IntMatrix m(lo.size(), std::vector<long>(hi.size(), 0));
        for (std::size_t c = 0; c < hi.size(); ++c) {
            long sign = 1;
            for (std::size_t q = 0; q < s; ++q) {
                if (!(hi[c] & (1u << q))) continue;
                auto it = row_of.find(hi[c] & ~(1u << q));
                if (it != row_of.end()) m[it->second][c] = sign;
                sign = -sign;
            }
        }
        return exact_rank(m, k);
    };

    std::vector<std::size_t> brank(s + 2, 0);
    for (std::size_t size = 1; size <= s; ++size) brank[size] = boundary_rank(size);
    for (std::size_t size = 0; size <= s; ++size) {
        ranks[size] = faces_by_size[size].size() - brank[size] - brank[size + 1];
    }
    return ranks;
}

/// beta_{i,j}(S/J), only nonzero entries.
class BettiTable {
public:
    void add(std::size_t i, std::size_t j, std::size_t rank) {
        if (rank != 0) entries_[{i, j}] += rank;
    }
    std::size_t at(std::size_t i, std::size_t j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }
    const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// b_i = max{ j : beta_{i,j} != 0 }, -inf for an empty row.
    ExtendedInt top_degree(std::size_t i) const {
        ExtendedInt best = ExtendedInt::neg_inf();
        for (const auto& [key, r] : entries_) {
            if (key.first == i) best = max(best, ExtendedInt(static_cast<std::int64_t>(key.second)));
        }
        return best;
    }

    std::size_t length() const {
        std::size_t l = 0;
        for (const auto& [key, r] : entries_) l = std::max(l, key.first);
        return l;
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> entries_;
};

namespace detail {

inline BettiTable betti_table_impl(const MonomialIdeal& J, const Field& k, std::size_t first_homology_row) {
    check_oracle_scope(J);
    if (J.is_unit()) throw std::invalid_argument("Betti table of the zero module requested (unit ideal)");
    BettiTable table;
    table.add(0, 0, 1);
    if (J.is_zero()) return table;
    if (first_homology_row > 1) {
        for (const auto& g : J.generators()) table.add(1, g.degree(), 1);
    }
    for (const auto& b : lcm_multidegrees(J)) {
        const auto ranks = upper_koszul_homology(J, b, k);
        // beta_{i,b}(S/J) = beta_{i-1,b}(J) = ranks[i-1]
        for (std::size_t i = first_homology_row; i <= ranks.size(); ++i) table.add(i, b.degree(), ranks[i - 1]);
    }
    return table;
}

}  // namespace detail

/// Betti table of S/J. Rows 0 and 1 are read off Min(J); rows i >= 2 come from homology.
inline BettiTable betti_table(const MonomialIdeal& J, const Field& k) { return detail::betti_table_impl(J, k, 2); }

/// Same table with row 1 also computed by homology, for consistency checks.
inline BettiTable betti_table_all_homology(const MonomialIdeal& J, const Field& k) {
    return detail::betti_table_impl(J, k, 1);
}

/// Invariants of S/J read off the resolution.
struct BettiInvariants {
    ExtendedInt reg_t;
    ExtendedInt astar_t;
    ExtendedInt reg;
    ExtendedInt astar;
    /// Largest minimal generator degree of J.
    ExtendedInt generator_degree;
};

/// reg = max(b_i - i); a* = max(b_i) - n; reg_t, a*_t restrict to i >= n - t.
inline BettiInvariants invariants_from_betti(const BettiTable& table, std::size_t n, std::size_t t) {
    if (table.empty()) throw std::invalid_argument("empty Betti table");
    BettiInvariants out{ExtendedInt::neg_inf(), ExtendedInt::neg_inf(), ExtendedInt::neg_inf(),
                        ExtendedInt::neg_inf(), table.top_degree(1)};
    const auto nn = static_cast<std::int64_t>(n);
    const auto tt = static_cast<std::int64_t>(t);
    ExtendedInt top = ExtendedInt::neg_inf();
    ExtendedInt top_tail = ExtendedInt::neg_inf();
    for (std::size_t i = 0; i <= table.length(); ++i) {
        const ExtendedInt b = table.top_degree(i);
        const auto ii = static_cast<std::int64_t>(i);
        out.reg = max(out.reg, b - ii);
        top = max(top, b);
        if (ii >= nn - tt) {
            out.reg_t = max(out.reg_t, b - ii);
            top_tail = max(top_tail, b);
        }
    }
    out.astar = top - nn;
    out.astar_t = top_tail - nn;
    return out;
}

}  // namespace cmreg

#endif
