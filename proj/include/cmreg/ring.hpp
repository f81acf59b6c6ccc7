#ifndef CMREG_RING_HPP
#define CMREG_RING_HPP

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace cmreg {

/// k[x_1, ..., x_n]: ordered variable names over a coefficient field.
class RingContext {
public:
    RingContext(std::vector<std::string> names, Field field) : names_(std::move(names)), field_(field) {
        if (names_.empty()) throw std::invalid_argument("a ring needs at least one variable");
        std::set<std::string> seen;
        for (const auto& v : names_) {
            if (v.empty()) throw std::invalid_argument("empty variable name");
            if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
        }
    }

    /// x1, ..., xn.
    static std::shared_ptr<const RingContext> standard(std::size_t n, Field field = Field::rationals()) {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        return std::make_shared<const RingContext>(std::move(names), field);
    }

    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const Field& field() const { return field_; }

    /// The ring on the first m variables, same field.
    std::shared_ptr<const RingContext> truncated(std::size_t m) const {
        if (m == 0 || m > nvars()) throw std::out_of_range("truncated ring size out of range");
        return std::make_shared<const RingContext>(std::vector<std::string>(names_.begin(), names_.begin() + m),
                                                   field_);
    }

    std::shared_ptr<const RingContext> with_field(Field field) const {
        return std::make_shared<const RingContext>(names_, field);
    }

    friend bool operator==(const RingContext&, const RingContext&) = default;

private:
    std::vector<std::string> names_;
    Field field_;
};

using RingPtr = std::shared_ptr<const RingContext>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw std::invalid_argument("ring context mismatch");
}

}  // namespace cmreg

#endif
