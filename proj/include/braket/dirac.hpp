#pragma once

// Text format for quantum states in bra-ket notation.
//
//   expression := ['+' | '-'] term (('+' | '-') term)*
//   term       := [coeff ['*']] ket
//   coeff      := product of factors: numbers, 'i', 'sqrt(...)', '(...)',
//                 joined by '*', '/' or juxtaposition; '+' and '-' only
//                 inside parentheses
//   ket        := '|' label '>'
//   label      := binary string, or a decimal index when a qubit count is given
//
// Examples: "|0>", "i*(1/sqrt(2))|01> + (1/sqrt(2))|11>",
//           "(0+1i)*(0.7071067812)|1> + (0.7071067812)|3>" (2 qubits).
// Whitespace is insignificant. Coefficients are folded to doubles at parse time.

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braket/basis_state.hpp"
#include "braket/errors.hpp"
#include "braket/quantum_state.hpp"

namespace braket {

// Parsed text carries rounded decimals, so the norm check on text input is
// looser than kNormTolerance; the accepted state is then renormalized.
inline constexpr double kTextNormTolerance = 1e-8;
inline constexpr int kDefaultFormatPrecision = 10;

struct StateExpression {
    struct Term {
        Amplitude coefficient;
        std::string label;
        std::size_t position;        // start of the term
        std::size_t label_position;  // first character of the label
    };
    std::vector<Term> terms;
};

namespace detail {

class DiracParser {
public:
    explicit DiracParser(std::string_view text) : text_(text) {}

    StateExpression parse() {
        StateExpression expr;
        skip_ws();
        if (at_end()) fail(parse_error_kind::syntax, "empty expression");
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
            skip_ws();
        }
        for (;;) {
            expr.terms.push_back(parse_term(negate));
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') fail(parse_error_kind::syntax, "expected '+', '-' or end of input");
            negate = peek() == '-';
            ++pos_;
            skip_ws();
            if (at_end()) fail(parse_error_kind::syntax, "expected a term after the sign");
        }
        return expr;
    }

private:
    StateExpression::Term parse_term(bool negate) {
        const std::size_t start = pos_;
        Amplitude coeff = 1.0;
        if (peek() != '|') {
            coeff = parse_product(/*top_level=*/true);
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
            }
            if (at_end() || peek() != '|') fail(parse_error_kind::syntax, "expected a ket '|...>'");
        }
        ++pos_;  // '|'
        skip_ws();
        const std::size_t label_start = pos_;
        while (!at_end() && is_digit(peek())) ++pos_;
        if (pos_ == label_start) {
            if (at_end()) fail(parse_error_kind::syntax, "unclosed ket");
            fail(parse_error_kind::syntax, "expected a ket label of digits");
        }
        std::string label(text_.substr(label_start, pos_ - label_start));
        skip_ws();
        if (at_end() || peek() != '>') fail(parse_error_kind::syntax, "unclosed ket, expected '>'");
        ++pos_;
        return {negate ? -coeff : coeff, std::move(label), start, label_start};
    }

    // sum := product (('+' | '-') product)*, only inside parentheses.
    Amplitude parse_sum() {
        Amplitude value = parse_product(/*top_level=*/false);
        for (;;) {
            skip_ws();
            if (at_end() || (peek() != '+' && peek() != '-')) return value;
            const bool minus = peek() == '-';
            ++pos_;
            Amplitude rhs = parse_product(false);
            value = minus ? value - rhs : value + rhs;
        }
    }

    Amplitude parse_product(bool top_level) {
        Amplitude value = parse_unary();
        for (;;) {
            skip_ws();
            if (at_end()) return value;
            const char c = peek();
            if (c == '*') {
                const std::size_t star = pos_;
                ++pos_;
                skip_ws();
                if (top_level && !at_end() && peek() == '|') {
                    pos_ = star;  // separator before the ket, left for parse_term
                    return value;
                }
                value *= parse_unary();
            } else if (c == '/') {
                const std::size_t slash = pos_;
                ++pos_;
                Amplitude rhs = parse_unary();
                if (rhs == Amplitude{}) fail_at(parse_error_kind::syntax, slash, "division by zero");
                value /= rhs;
            } else if (starts_primary(c)) {
                value *= parse_primary();
            } else {
                return value;
            }
        }
    }

    Amplitude parse_unary() {
        skip_ws();
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            const bool minus = peek() == '-';
            ++pos_;
            Amplitude v = parse_unary();
            return minus ? -v : v;
        }
        return parse_primary();
    }

    Amplitude parse_primary() {
        skip_ws();
        if (at_end()) fail(parse_error_kind::syntax, "expected a coefficient");
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Amplitude v = parse_sum();
            skip_ws();
            if (at_end() || peek() != ')') fail(parse_error_kind::syntax, "expected ')'");
            ++pos_;
            return v;
        }
        if (is_digit(c) || c == '.') return parse_number();
        if (is_alpha(c)) {
            const std::size_t start = pos_;
            while (!at_end() && is_alpha(peek())) ++pos_;
            const std::string_view word = text_.substr(start, pos_ - start);
            if (word == "i") return {0.0, 1.0};
            if (word == "sqrt") {
                skip_ws();
                if (at_end() || peek() != '(') fail(parse_error_kind::syntax, "expected '(' after sqrt");
                ++pos_;
                Amplitude v = parse_sum();
                skip_ws();
                if (at_end() || peek() != ')') fail(parse_error_kind::syntax, "expected ')'");
                ++pos_;
                return std::sqrt(v);
            }
            fail_at(parse_error_kind::syntax, start, "unknown identifier '" + std::string(word) + "'");
        }
        if (c == '|') fail(parse_error_kind::syntax, "expected a coefficient before the ket");
        fail(parse_error_kind::syntax, std::string("unexpected character '") + c + "'");
    }

    Amplitude parse_number() {
        const std::size_t start = pos_;
        while (!at_end() && is_digit(peek())) ++pos_;
        if (!at_end() && peek() == '.') {
            ++pos_;
            while (!at_end() && is_digit(peek())) ++pos_;
        }
        if (!at_end() && (peek() == 'e' || peek() == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
            if (look < text_.size() && is_digit(text_[look])) {
                pos_ = look;
                while (!at_end() && is_digit(peek())) ++pos_;
            }
        }
        double value = 0.0;
        const char* first = text_.data() + start;
        const char* last = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) fail_at(parse_error_kind::syntax, start, "malformed number");
        return value;
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
    static bool starts_primary(char c) { return c == '(' || c == '.' || is_digit(c) || is_alpha(c); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r' || peek() == '\n')) ++pos_;
    }

    [[noreturn]] void fail(parse_error_kind kind, const std::string& message) const { fail_at(kind, pos_, message); }
    [[noreturn]] static void fail_at(parse_error_kind kind, std::size_t pos, const std::string& message) {
        throw parse_error(kind, pos, message);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline bool is_binary_label(const std::string& label) { return label.find_first_not_of("01") == std::string::npos; }

}  // namespace detail

// Syntax pass only: terms with folded coefficients and raw labels.
inline StateExpression parse_expression(std::string_view text) { return detail::DiracParser(text).parse(); }

// Resolves labels to basis indices and builds the state.
//
// Without a qubit count every label must be a binary string and all must have
// the same length. With a qubit count n, a binary label of length n is read as
// a bit-string and any other label as a decimal index below 2^n.
inline QuantumState resolve(const StateExpression& expr, std::optional<unsigned> qubits = std::nullopt) {
    if (expr.terms.empty()) throw parse_error(parse_error_kind::syntax, 0, "empty expression");
    if (qubits && (*qubits == 0 || *qubits > kMaxStateQubits)) {
        throw invalid_input("qubit count must be in [1, " + std::to_string(kMaxStateQubits) + "]");
    }
    unsigned n = 0;
    if (qubits) {
        n = *qubits;
    } else {
        const auto& first = expr.terms.front();
        for (const auto& t : expr.terms) {
            if (!detail::is_binary_label(t.label)) {
                throw parse_error(parse_error_kind::context_required, t.label_position,
                                  "label '" + t.label + "' is not binary; a qubit count is required for decimal labels");
            }
            if (t.label.size() != first.label.size()) {
                throw parse_error(parse_error_kind::dimension, t.label_position,
                                  "label '" + t.label + "' has " + std::to_string(t.label.size()) +
                                      " bits, expected " + std::to_string(first.label.size()));
            }
        }
        if (first.label.size() > kMaxStateQubits) {
            throw parse_error(parse_error_kind::label_range, first.label_position,
                              "label longer than " + std::to_string(kMaxStateQubits) + " qubits");
        }
        n = static_cast<unsigned>(first.label.size());
    }

    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (const auto& t : expr.terms) {
        std::uint64_t index = 0;
        if (t.label.size() == n && detail::is_binary_label(t.label)) {
            index = BasisState::from_bits(t.label).index();
        } else {
            auto [ptr, ec] = std::from_chars(t.label.data(), t.label.data() + t.label.size(), index);
            if (ec != std::errc{} || index >= amps.size()) {
                throw parse_error(parse_error_kind::label_range, t.label_position,
                                  "label '" + t.label + "' is out of range for " + std::to_string(n) + " qubits");
            }
        }
        if (!detail::is_finite(t.coefficient)) {
            throw parse_error(parse_error_kind::syntax, t.position, "coefficient is not finite");
        }
        amps[index] += t.coefficient;
    }

    const double norm = std::sqrt(detail::norm_squared(amps));
    if (norm < kZeroNorm) throw zero_state("expression sums to the zero vector");
    if (std::abs(norm * norm - 1.0) > kTextNormTolerance) {
        throw norm_violation("state norm is " + std::to_string(norm) + ", weights must have unit squared sum", norm);
    }
    return QuantumState::normalized(std::move(amps));
}

inline QuantumState parse_state(std::string_view text, std::optional<unsigned> qubits = std::nullopt) {
    return resolve(parse_expression(text), qubits);
}

enum class LabelMode { binary, decimal };

namespace detail {

inline std::string format_fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

inline std::string format_general(double v, int precision) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

}  // namespace detail

// Writes the nonzero terms in basis-index order. Each amplitude is split into
// magnitude and unit phase: a positive real amplitude prints as "(m)|x>", a
// negative one as "- (m)|x>", anything else as "(re+imi)*(m)|x>" with the
// phase's parts. An amplitude that prints as exactly 1 is written as a bare ket.
inline std::string format_state(const QuantumState& state, LabelMode mode = LabelMode::binary,
                                int precision = kDefaultFormatPrecision) {
    if (precision < 1 || precision > 17) throw invalid_input("format_state: precision must be in [1, 17]");
    const double snap = 1e-15;
    std::string out;
    for (std::uint64_t k = 0; k < state.dimension(); ++k) {
        const Amplitude a = state[k];
        const double mag = std::abs(a);
        const std::string mag_text = detail::format_fixed(mag, precision);
        if (mag_text.find_first_not_of("0.") == std::string::npos) continue;  // rounds to zero

        Amplitude phase = a / mag;
        if (std::abs(phase.real()) < snap) phase.real(0.0);
        if (std::abs(phase.imag()) < snap) phase.imag(0.0);

        bool negative = false;
        std::string coeff;
        if (phase.imag() == 0.0) {
            negative = phase.real() < 0.0;
            if (mag_text != detail::format_fixed(1.0, precision)) coeff = "(" + mag_text + ")";
        } else {
            char imag_buf[64];
            std::snprintf(imag_buf, sizeof imag_buf, "%+.*g", precision, phase.imag());
            coeff = "(" + detail::format_general(phase.real(), precision) + imag_buf + "i)*(" + mag_text + ")";
        }

        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += coeff;
        out += '|';
        out += mode == LabelMode::binary ? BasisState::to_bits(k, state.qubits()) : std::to_string(k);
        out += '>';
    }
    return out;
}

struct FixtureEntry {
    std::size_t line;
    std::string text;
    QuantumState state;
};

// Reads one expression per line; '#' starts a comment, blank lines are skipped.
// Parse errors are rethrown with the line number in the message; the position
// stays relative to the line.
inline std::vector<FixtureEntry> read_fixture(std::istream& in, std::optional<unsigned> qubits = std::nullopt) {
    std::vector<FixtureEntry> entries;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            entries.push_back({number, line, parse_state(line, qubits)});
        } catch (const parse_error& e) {
            throw parse_error(e.kind(), e.position(), "line " + std::to_string(number) + ": " + e.message());
        }
    }
    return entries;
}

}  // namespace braket
