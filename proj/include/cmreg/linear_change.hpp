#ifndef CMREG_LINEAR_CHANGE_HPP
#define CMREG_LINEAR_CHANGE_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace cmreg {

/// Dense square matrix over a Field.
class ScalarMatrix {
public:
    ScalarMatrix(std::size_t n, const Field& k) : n_(n), field_(k), a_(n * n, Scalar::zero(k)) {}

    static ScalarMatrix identity(std::size_t n, const Field& k) {
        ScalarMatrix m(n, k);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(k);
        return m;
    }

    static ScalarMatrix from_ints(const std::vector<std::vector<long long>>& rows, const Field& k) {
        ScalarMatrix m(rows.size(), k);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
            for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = Scalar::from_int(k, rows[i][j]);
        }
        return m;
    }

    std::size_t size() const { return n_; }
    const Field& field() const { return field_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
        ScalarMatrix c(a.n_, a.field_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t j = 0; j < a.n_; ++j)
                for (std::size_t k = 0; k < a.n_; ++k) c(i, j) += a(i, k) * b(k, j);
        return c;
    }

    Scalar determinant() const {
        std::vector<Scalar> w = a_;
        Scalar det = Scalar::one(field_);
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t piv = col;
            while (piv < n_ && w[piv * n_ + col].is_zero()) ++piv;
            if (piv == n_) return Scalar::zero(field_);
            if (piv != col) {
                for (std::size_t j = 0; j < n_; ++j) std::swap(w[piv * n_ + j], w[col * n_ + j]);
                det = -det;
            }
            const Scalar p = w[col * n_ + col];
            det *= p;
            const Scalar inv = p.inverse();
            for (std::size_t r = col + 1; r < n_; ++r) {
                if (w[r * n_ + col].is_zero()) continue;
                const Scalar f = w[r * n_ + col] * inv;
                for (std::size_t j = col; j < n_; ++j) w[r * n_ + j] -= f * w[col * n_ + j];
            }
        }
        return det;
    }

    bool invertible() const { return !determinant().is_zero(); }

    friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

private:
    std::size_t n_;
    Field field_;
    std::vector<Scalar> a_;
};

/// f(g * (x_1, ..., x_n)^T): x_j is replaced by sum_k g(j, k) x_k.
/// Composition: applying g and then h equals applying g * h.
inline Polynomial apply_linear_change(const Polynomial& f, const ScalarMatrix& g) {
    const RingPtr& ring = f.ring();
    const std::size_t n = ring->nvars();
    if (g.size() != n) throw std::invalid_argument("coordinate change has the wrong size");
    if (!(g.field() == ring->field())) throw std::invalid_argument("coordinate change over the wrong field");
    if (!g.invertible()) throw std::domain_error("coordinate change matrix is singular");

    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Term> lin;
        for (std::size_t k = 0; k < n; ++k) lin.push_back({g(j, k), Monomial::variable(n, k)});
        images.push_back(Polynomial::from_terms(ring, std::move(lin), f.order()));
    }

    // powers[j][e] = images[j]^e, grown on demand
    std::vector<std::vector<Polynomial>> powers(n);
    for (std::size_t j = 0; j < n; ++j) powers[j].push_back(Polynomial::constant(ring, Scalar::one(ring->field()), f.order()));
    auto power = [&](std::size_t j, std::uint32_t e) -> const Polynomial& {
        while (powers[j].size() <= e) powers[j].push_back(powers[j].back() * images[j]);
        return powers[j][e];
    };

    Polynomial out(ring, f.order());
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(ring, t.coeff, f.order());
        for (std::size_t j = 0; j < n; ++j) {
            if (t.mono[j] != 0) prod = prod * power(j, t.mono[j]);
        }
        out = out + prod;
    }
    return out;
}

}  // namespace cmreg

#endif
