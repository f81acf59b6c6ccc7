#ifndef CMREG_SCALAR_HPP
#define CMREG_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace cmreg {

/// Coefficient field: exact rationals or a prime field GF(p).
class Field {
public:
    static Field rationals() { return Field{0}; }

    static Field prime(std::uint32_t p) {
        if (!is_prime(p)) {
            throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
        }
        return Field{p};
    }

    std::uint32_t characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }

    std::string name() const { return is_rationals() ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

    friend bool operator==(const Field&, const Field&) = default;

    static bool is_prime(std::uint32_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d) {
            if (p % d == 0) return false;
        }
        return true;
    }

private:
    friend class Scalar;
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

/// Residue class in [0, p).
struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
};

/// An element of a Field. Rationals are kept in lowest terms (mpq canonical form).
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}

    static Scalar zero(const Field& k) { return from_int(k, 0); }
    static Scalar one(const Field& k) { return from_int(k, 1); }

    static Scalar from_int(const Field& k, long long n) {
        if (k.is_rationals()) return Scalar(mpq_class(static_cast<long>(n)));
        long long r = n % static_cast<long long>(k.characteristic());
        if (r < 0) r += k.characteristic();
        return Scalar(Residue{static_cast<std::uint32_t>(r), k.characteristic()});
    }

    static Scalar from_mpz(const Field& k, const mpz_class& n) {
        if (k.is_rationals()) return Scalar(mpq_class(n));
        mpz_class r = n % k.characteristic();
        if (r < 0) r += k.characteristic();
        return Scalar(Residue{static_cast<std::uint32_t>(r.get_ui()), k.characteristic()});
    }

    static Scalar from_fraction(const Field& k, const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("zero denominator");
        if (k.is_rationals()) {
            mpq_class q(num, den);
            q.canonicalize();
            return Scalar(std::move(q));
        }
        return from_mpz(k, num) / from_mpz(k, den);
    }

    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    explicit Scalar(Residue r) : v_(r) {}

    Field field() const {
        if (auto* r = std::get_if<Residue>(&v_)) return Field{r->modulus};
        return Field::rationals();
    }

    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    const Residue& residue() const { return std::get<Residue>(v_); }

    bool is_zero() const {
        if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
        return std::get<Residue>(v_).value == 0;
    }

    bool is_one() const {
        if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
        return std::get<Residue>(v_).value == 1;
    }

    Scalar operator-() const {
        if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
        const auto& r = std::get<Residue>(v_);
        return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
    }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1 / *q));
        const auto& r = std::get<Residue>(v_);
        return Scalar(Residue{pow_mod(r.value, r.modulus - 2, r.modulus), r.modulus});
    }

    Scalar& operator+=(const Scalar& o) {
        if (auto* q = std::get_if<mpq_class>(&v_)) {
            *q += o.as_rational();
        } else {
            auto& r = std::get<Residue>(v_);
            const auto s = o.as_residue(r.modulus);
            r.value = static_cast<std::uint32_t>((std::uint64_t{r.value} + s) % r.modulus);
        }
        return *this;
    }

    Scalar& operator-=(const Scalar& o) { return *this += -o; }

    Scalar& operator*=(const Scalar& o) {
        if (auto* q = std::get_if<mpq_class>(&v_)) {
            *q *= o.as_rational();
        } else {
            auto& r = std::get<Residue>(v_);
            r.value = static_cast<std::uint32_t>(std::uint64_t{r.value} * o.as_residue(r.modulus) % r.modulus);
        }
        return *this;
    }

    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

    std::string to_string() const {
        if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
        return std::to_string(std::get<Residue>(v_).value);
    }

private:
    const mpq_class& as_rational() const {
        if (auto* q = std::get_if<mpq_class>(&v_)) return *q;
        throw std::invalid_argument("mixing rational and modular scalars");
    }

    std::uint32_t as_residue(std::uint32_t p) const {
        auto* r = std::get_if<Residue>(&v_);
        if (r == nullptr || r->modulus != p) throw std::invalid_argument("mixing scalars of different fields");
        return r->value;
    }

    static std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
        std::uint64_t acc = 1;
        base %= p;
        while (e > 0) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(acc);
    }

    std::variant<mpq_class, Residue> v_;
};

}  // namespace cmreg

#endif
