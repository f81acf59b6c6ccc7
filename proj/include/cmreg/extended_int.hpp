#ifndef CMREG_EXTENDED_INT_HPP
#define CMREG_EXTENDED_INT_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cmreg {

/// An integer or one of -inf / +inf. Top degree of the zero module is -inf.
class ExtendedInt {
public:
    enum class Kind { neg_inf, finite, pos_inf };

    constexpr ExtendedInt(std::int64_t v = 0) : kind_(Kind::finite), v_(v) {}  // NOLINT: implicit by intent

    static constexpr ExtendedInt neg_inf() { return ExtendedInt(Kind::neg_inf); }
    static constexpr ExtendedInt pos_inf() { return ExtendedInt(Kind::pos_inf); }

    constexpr Kind kind() const { return kind_; }
    constexpr bool is_finite() const { return kind_ == Kind::finite; }
    constexpr bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
    constexpr bool is_pos_inf() const { return kind_ == Kind::pos_inf; }

    std::int64_t value() const {
        if (!is_finite()) throw std::domain_error("value() of an infinite ExtendedInt");
        return v_;
    }

    friend constexpr bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.v_ == b.v_);
    }

    friend constexpr std::strong_ordering operator<=>(const ExtendedInt& a, const ExtendedInt& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        if (a.kind_ != Kind::finite) return std::strong_ordering::equal;
        return a.v_ <=> b.v_;
    }

    /// -inf + k = -inf, +inf + k = +inf.
    friend constexpr ExtendedInt operator+(ExtendedInt a, std::int64_t k) {
        if (a.is_finite()) a.v_ += k;
        return a;
    }
    friend constexpr ExtendedInt operator-(ExtendedInt a, std::int64_t k) { return a + (-k); }

    friend ExtendedInt operator+(const ExtendedInt& a, const ExtendedInt& b) {
        if (a.is_finite()) return b + a.v_;
        if (b.is_finite() || a.kind_ == b.kind_) return a;
        throw std::domain_error("-inf + +inf is undefined");
    }

    std::string to_string() const {
        switch (kind_) {
            case Kind::neg_inf: return "-inf";
            case Kind::pos_inf: return "+inf";
            case Kind::finite: break;
        }
        return std::to_string(v_);
    }

private:
    constexpr explicit ExtendedInt(Kind k) : kind_(k), v_(0) {}
    Kind kind_;
    std::int64_t v_;
};

inline ExtendedInt max(const ExtendedInt& a, const ExtendedInt& b) { return a < b ? b : a; }

}  // namespace cmreg

#endif
