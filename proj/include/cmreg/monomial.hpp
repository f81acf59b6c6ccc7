#ifndef CMREG_MONOMIAL_HPP
#define CMREG_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmreg {

/// Dense exponent vector x^A = x_1^{a_1} ... x_n^{a_n}; the total degree is cached.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::size_t n) : exps_(n, 0) {}

    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
        for (auto e : exps_) deg_ += e;
    }

    Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(std::vector<std::uint32_t>(exps)) {}

    /// x_i (0-based index).
    static Monomial variable(std::size_t n, std::size_t i) {
        Monomial m(n);
        m.exps_.at(i) = 1;
        m.deg_ = 1;
        return m;
    }

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t degree() const { return deg_; }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    bool is_one() const { return deg_ == 0; }

    void set(std::size_t i, std::uint32_t e) {
        deg_ = deg_ - exps_.at(i) + e;
        exps_[i] = e;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    /// Plain lexicographic comparison of exponent vectors, for containers only.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        check_dims(a, b);
        Monomial r(a.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    static void check_dims(const Monomial& a, const Monomial& b) {
        if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial dimension mismatch");
    }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t deg_ = 0;
};

/// Does a divide b?
inline bool divides(const Monomial& a, const Monomial& b) {
    Monomial::check_dims(a, b);
    if (a.degree() > b.degree()) return false;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial::check_dims(a, b);
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial::check_dims(a, b);
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) e[i] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    Monomial::check_dims(a, b);
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] != 0 && b[i] != 0) return false;
    }
    return true;
}

/// b / a; throws unless a divides b.
inline Monomial quotient(const Monomial& b, const Monomial& a) {
    if (!divides(a, b)) throw std::domain_error("monomial quotient: divisor does not divide dividend");
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) e[i] = b[i] - a[i];
    return Monomial(std::move(e));
}

enum class MonomialOrder { degrevlex, deglex, lex };

inline std::string to_string(MonomialOrder ord) {
    switch (ord) {
        case MonomialOrder::degrevlex: return "degrevlex";
        case MonomialOrder::deglex: return "deglex";
        case MonomialOrder::lex: return "lex";
    }
    return "?";
}

/// Three-way comparison under a monomial order; `greater` means a is the larger monomial.
/// degrevlex: higher degree wins; on ties, a > b iff the last nonzero entry of a - b is negative.
inline std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    Monomial::check_dims(a, b);
    const std::size_t n = a.nvars();
    switch (ord) {
        case MonomialOrder::degrevlex:
            if (a.degree() != b.degree()) return a.degree() <=> b.degree();
            for (std::size_t i = n; i-- > 0;) {
                if (a[i] != b[i]) return b[i] <=> a[i];
            }
            return std::strong_ordering::equal;
        case MonomialOrder::deglex:
            if (a.degree() != b.degree()) return a.degree() <=> b.degree();
            [[fallthrough]];
        case MonomialOrder::lex:
            for (std::size_t i = 0; i < n; ++i) {
                if (a[i] != b[i]) return a[i] <=> b[i];
            }
            return std::strong_ordering::equal;
    }
    return std::strong_ordering::equal;
}

/// Strict "greater" predicate, for sorting in descending order.
struct DescendingIn {
    MonomialOrder ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b, ord) > 0; }
};

/// Largest 1-based index with a positive exponent; 0 for the monomial 1.
inline std::size_t m_index(const Monomial& m) {
    for (std::size_t i = m.nvars(); i-- > 0;) {
        if (m[i] != 0) return i + 1;
    }
    return 0;
}

inline std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
    if (m.is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += names.at(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = m.nvars();
        for (auto e : m.exponents()) h = h * 1000003u ^ std::hash<std::uint32_t>{}(e);
        return h;
    }
};

}  // namespace cmreg

#endif
