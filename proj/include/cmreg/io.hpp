#ifndef CMREG_IO_HPP
#define CMREG_IO_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "groebner.hpp"
#include "polynomial.hpp"
#include "ring.hpp"

namespace cmreg {

// Input format (whitespace-insensitive, '#' comments):
//
//   ring: x1 x2 x3 x4
//   field: QQ            # or GF(p)
//   ideal:
//   x1*x2 - x3*x4
//   3/2 x1^2 - x2 x3
//
// term = [coefficient ['*']] factor ('*'? factor)*, factor = variable ['^' natural],
// coefficient = integer | integer '/' integer (QQ only).

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct InputDocument {
    RingPtr ring;
    std::vector<Polynomial> generators;

    IdealPresentation ideal() const { return IdealPresentation{ring, generators}; }
};

namespace detail {

inline std::string_view strip_comment(std::string_view line) {
    if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
    return line;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class PolynomialParser {
public:
    PolynomialParser(const RingPtr& ring, std::string_view text, std::size_t line, std::size_t column_offset)
        : ring_(ring), text_(text), line_(line), offset_(column_offset) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        terms.push_back(parse_term(negative));
        for (;;) {
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
            negative = peek() == '-';
            ++pos_;
            terms.push_back(parse_term(negative));
        }
        return Polynomial::from_terms(ring_, std::move(terms));
    }

private:
    Term parse_term(bool negative) {
        skip_ws();
        const Field& k = ring_->field();
        Scalar coeff = Scalar::one(k);
        Monomial mono(ring_->nvars());
        bool have_anything = false;

        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num = parse_natural();
            skip_ws();
            if (peek() == '/') {
                if (!k.is_rationals()) fail("fractions are only allowed over QQ");
                ++pos_;
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
                const std::size_t den_pos = pos_;
                mpz_class den = parse_natural();
                if (den == 0) fail_at(den_pos, "zero denominator");
                coeff = Scalar::from_fraction(k, num, den);
            } else {
                coeff = Scalar::from_mpz(k, num);
            }
            have_anything = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (!is_ident_start(peek())) fail("expected a variable after '*'");
            }
        }

        for (;;) {
            skip_ws();
            if (!is_ident_start(peek())) break;
            const std::size_t var = parse_variable();
            std::uint32_t e = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent after '^'");
                mpz_class v = parse_natural();
                if (v > 1000000) fail("exponent too large");
                e = static_cast<std::uint32_t>(v.get_ui());
            }
            mono.set(var, mono[var] + e);
            have_anything = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (!is_ident_start(peek())) fail("expected a variable after '*'");
            }
        }
        if (!have_anything) fail(at_end() ? "unexpected end of polynomial" : "expected a term");
        if (negative) coeff = -coeff;
        return Term{std::move(coeff), std::move(mono)};
    }

    std::size_t parse_variable() {
        // longest declared name that prefixes the input
        std::size_t best = ring_->nvars();
        std::size_t best_len = 0;
        for (std::size_t v = 0; v < ring_->nvars(); ++v) {
            const std::string& name = ring_->name(v);
            if (name.size() > best_len && text_.substr(pos_, name.size()) == name) {
                best = v;
                best_len = name.size();
            }
        }
        if (best == ring_->nvars()) {
            std::size_t end = pos_;
            while (end < text_.size() && is_ident_char(text_[end])) ++end;
            fail("undeclared variable '" + std::string(text_.substr(pos_, end - pos_)) + "'");
        }
        pos_ += best_len;
        return best;
    }

    mpz_class parse_natural() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
        throw ParseError(line_, offset_ + pos + 1, msg);
    }

    const RingPtr& ring_;
    std::string_view text_;
    std::size_t line_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

inline std::optional<std::string_view> keyword_value(std::string_view line, std::string_view key) {
    line = trim(line);
    if (line.substr(0, key.size()) != key) return std::nullopt;
    std::string_view rest = trim(line.substr(key.size()));
    if (rest.empty() || rest.front() != ':') return std::nullopt;
    return trim(rest.substr(1));
}

inline Field parse_field(std::string_view spec, std::size_t line) {
    std::string s;
    for (char c : spec) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s == "QQ") return Field::rationals();
    std::string digits;
    if (s.rfind("GF(", 0) == 0 && s.size() > 4 && s.back() == ')') {
        digits = s.substr(3, s.size() - 4);
    } else if (s.rfind("GF", 0) == 0) {
        digits = s.substr(2);
    }
    if (digits.empty() || digits.size() > 9 ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(line, 1, "unknown field '" + std::string(spec) + "' (expected QQ or GF(p))");
    }
    const auto p = static_cast<std::uint32_t>(std::stoul(digits));
    if (!Field::is_prime(p)) throw ParseError(line, 1, "GF(" + digits + "): characteristic is not prime");
    return Field::prime(p);
}

}  // namespace detail

/// Parses one polynomial over `ring`; `line` is used for error positions.
inline Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line = 1,
                                   std::size_t column_offset = 0) {
    return detail::PolynomialParser(ring, text, line, column_offset).parse();
}

namespace detail {

inline void add_generator(InputDocument& doc, std::string_view line_text, std::string_view poly_text,
                          std::size_t lineno) {
    const auto offset = static_cast<std::size_t>(poly_text.data() - line_text.data());
    Polynomial f = parse_polynomial(doc.ring, poly_text, lineno, offset);
    for (const auto& t : f.terms()) {
        const auto d0 = f.terms().front().mono.degree();
        const auto d1 = t.mono.degree();
        if (d1 != d0) {
            throw ParseError(lineno, offset + 1,
                             "polynomial is not homogeneous (terms of degree " + std::to_string(std::min(d0, d1)) +
                                 " and " + std::to_string(std::max(d0, d1)) + ")");
        }
    }
    doc.generators.push_back(std::move(f));
}

}  // namespace detail

/// Parses an input document. All generators must be homogeneous.
inline InputDocument parse_input(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start <= text.size();) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view l = text.substr(start, end - start);
        if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
        lines.push_back(l);
        start = end + 1;
    }

    enum class Stage { ring, field, ideal_header, body } stage = Stage::ring;
    std::vector<std::string> names;
    std::optional<Field> field;
    InputDocument doc;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        const std::string_view raw = detail::strip_comment(lines[i]);
        if (detail::trim(raw).empty()) continue;
        switch (stage) {
            case Stage::ring: {
                auto v = detail::keyword_value(raw, "ring");
                if (!v) throw ParseError(lineno, 1, "expected 'ring:' declaration");
                std::string list(*v);
                for (char& c : list) c = c == ',' ? ' ' : c;
                std::istringstream in(list);
                for (std::string name; in >> name;) {
                    if (!detail::is_ident_start(name.front()) ||
                        !std::all_of(name.begin(), name.end(), detail::is_ident_char)) {
                        throw ParseError(lineno, 1, "invalid variable name '" + name + "'");
                    }
                    names.push_back(name);
                }
                if (names.empty()) throw ParseError(lineno, 1, "the ring needs at least one variable");
                stage = Stage::field;
                break;
            }
            case Stage::field: {
                auto v = detail::keyword_value(raw, "field");
                if (!v) throw ParseError(lineno, 1, "expected 'field:' declaration");
                field = detail::parse_field(*v, lineno);
                try {
                    doc.ring = std::make_shared<const RingContext>(names, *field);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(lineno - 1, 1, e.what());
                }
                stage = Stage::ideal_header;
                break;
            }
            case Stage::ideal_header: {
                auto v = detail::keyword_value(raw, "ideal");
                if (!v) throw ParseError(lineno, 1, "expected 'ideal:'");
                stage = Stage::body;
                if (!v->empty()) detail::add_generator(doc, raw, *v, lineno);
                break;
            }
            case Stage::body: detail::add_generator(doc, raw, raw, lineno); break;
        }
    }
    if (stage == Stage::ring) throw ParseError(lines.size(), 1, "missing 'ring:' declaration");
    if (stage == Stage::field) throw ParseError(lines.size(), 1, "missing 'field:' declaration");
    if (stage == Stage::ideal_header) throw ParseError(lines.size(), 1, "missing 'ideal:' section");
    return doc;
}

/// Canonical text form; parse_input(format_input(d)) reproduces d.
inline std::string format_input(const InputDocument& doc) {
    std::string out = "ring:";
    for (const auto& v : doc.ring->names()) out += " " + v;
    out += "\nfield: " + doc.ring->field().name() + "\nideal:\n";
    for (const auto& f : doc.generators) out += f.to_string() + "\n";
    return out;
}

}  // namespace cmreg

#endif
