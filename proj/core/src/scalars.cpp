#include "cotwist/scalars.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cotwist {

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    if (o.is_zero()) throw std::invalid_argument("GaussianRational: division by zero");
    Rational n = o.re * o.re + o.im * o.im;
    GaussianRational num = *this * o.conj();
    return {num.re / n, num.im / n};
}

std::string GaussianRational::str() const {
    auto rat = [](const Rational& r) {
        std::ostringstream os;
        os << numerator(r);
        if (denominator(r) != 1) os << '/' << denominator(r);
        return os.str();
    };
    if (im == 0) return rat(re);
    std::string imag = (im == 1) ? "i" : (im == -1) ? "-i" : rat(im) + "*i";
    if (re == 0) return imag;
    if (im > 0) return rat(re) + " + " + imag;
    return rat(re) + " - " + (im == -1 ? std::string("i") : rat(-im) + "*i");
}

PhaseScalar PhaseScalar::zeta_pow(std::int64_t k, GaussianRational c) {
    PhaseScalar p;
    if (!c.is_zero()) p.terms_[k] = std::move(c);
    return p;
}

bool PhaseScalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == GaussianRational(1);
}

std::int64_t PhaseScalar::monomial_exponent() const {
    if (!is_monomial()) throw std::logic_error("PhaseScalar: not a monomial");
    return terms_.begin()->first;
}

PhaseScalar PhaseScalar::operator-() const {
    PhaseScalar r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

PhaseScalar PhaseScalar::operator+(const PhaseScalar& o) const {
    PhaseScalar r = *this;
    for (const auto& [k, c] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

PhaseScalar PhaseScalar::operator-(const PhaseScalar& o) const { return *this + (-o); }

PhaseScalar PhaseScalar::operator*(const PhaseScalar& o) const {
    PhaseScalar r;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            GaussianRational prod = ca * cb;
            if (prod.is_zero()) continue;
            auto it = r.terms_.find(ka + kb);
            if (it == r.terms_.end()) {
                r.terms_[ka + kb] = prod;
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

bool PhaseScalar::operator<(const PhaseScalar& o) const {
    auto a = terms_.begin(), b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) {
            if (a->second.re != b->second.re) return a->second.re < b->second.re;
            return a->second.im < b->second.im;
        }
    }
    return a == terms_.end() && b != o.terms_.end();
}

PhaseScalar PhaseScalar::star() const {
    PhaseScalar r;
    for (const auto& [k, c] : terms_) r.terms_[-k] = c.conj();
    return r;
}

GaussianRational PhaseScalar::at_one() const {
    GaussianRational total;
    for (const auto& [k, c] : terms_) total += c;
    return total;
}

void PhaseScalar::shift_mul(std::int64_t k, const GaussianRational& c) {
    if (c.is_zero()) { terms_.clear(); return; }
    Terms shifted;
    for (auto& [e, coeff] : terms_) shifted[e + k] = coeff * c;
    terms_ = std::move(shifted);
}

std::string PhaseScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << "(" << c.str() << ")";
        } else {
            os << "(" << c.str() << ")*z^" << k;
        }
    }
    return os.str();
}

std::string render_scalar(const PhaseScalar& s, const DeformationParams& params) {
    if (s.is_zero()) return "0";
    const std::int64_t d = params.denominator;
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : s.terms()) {
        if (!first) os << " + ";
        first = false;
        std::string coeff = c.str();
        bool needs_parens = coeff.find(' ') != std::string::npos;
        if (k == 0) {
            os << (needs_parens ? "(" + coeff + ")" : coeff);
            continue;
        }
        std::string phase;
        if (k == d) phase = "mu";
        else if (k == -d) phase = "mu^-1";
        else if (k == 2 * d) phase = "lambda";
        else if (k == -2 * d) phase = "lambda^-1";
        else phase = "z^" + std::to_string(k);
        if (c == GaussianRational(1)) os << phase;
        else os << (needs_parens ? "(" + coeff + ")" : coeff) << "*" << phase;
    }
    return os.str();
}

namespace {

// Minimal recursive-descent scanner for scalar literals.
struct ScalarLexer {
    const std::string& text;
    std::size_t pos = 0;
    explicit ScalarLexer(const std::string& t) : text(t) {}

    void skip_ws() { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; }
    bool eof() { skip_ws(); return pos >= text.size(); }
    char peek() { skip_ws(); return pos < text.size() ? text[pos] : '\0'; }
    bool accept(char c) { if (peek() == c) { ++pos; return true; } return false; }
    void expect(char c) {
        if (!accept(c)) throw std::invalid_argument("scalar parse: expected '" + std::string(1, c) + "' in \"" + text + "\"");
    }

    BigInt integer() {
        skip_ws();
        bool neg = accept('-');
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("scalar parse: expected integer in \"" + text + "\"");
        BigInt v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }

    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        return text.substr(start, pos - start);
    }
};

// factor := INT [/ INT] | 'i' | 'z' '^' INT | 'mu' ['^' INT] | 'lambda' ['^' INT] | '(' sum ')'
PhaseScalar parse_sum(ScalarLexer& lex, const DeformationParams& params);

PhaseScalar parse_factor(ScalarLexer& lex, const DeformationParams& params) {
    if (lex.accept('-')) return -parse_factor(lex, params);
    if (lex.accept('(')) {
        PhaseScalar inner = parse_sum(lex, params);
        lex.expect(')');
        return inner;
    }
    char c = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        BigInt num = lex.integer();
        if (lex.accept('/')) {
            BigInt den = lex.integer();
            if (den == 0) throw std::invalid_argument("scalar parse: zero denominator");
            return PhaseScalar(GaussianRational(Rational(num, den)));
        }
        return PhaseScalar(GaussianRational(Rational(num)));
    }
    std::string w = lex.word();
    auto power = [&]() -> std::int64_t {
        if (lex.accept('^')) return static_cast<std::int64_t>(lex.integer());
        return 1;
    };
    if (w == "i") return PhaseScalar(GaussianRational::unit_i());
    if (w == "z") {
        lex.expect('^');
        return PhaseScalar::zeta_pow(static_cast<std::int64_t>(lex.integer()));
    }
    if (w == "mu") return PhaseScalar::zeta_pow(params.denominator * power());
    if (w == "lambda") return PhaseScalar::zeta_pow(2 * params.denominator * power());
    throw std::invalid_argument("scalar parse: unknown token \"" + w + "\" in \"" + lex.text + "\"");
}

PhaseScalar parse_product(ScalarLexer& lex, const DeformationParams& params) {
    PhaseScalar value = parse_factor(lex, params);
    while (lex.peek() == '*') {
        lex.accept('*');
        value *= parse_factor(lex, params);
    }
    return value;
}

PhaseScalar parse_sum(ScalarLexer& lex, const DeformationParams& params) {
    PhaseScalar total;
    bool negate = lex.accept('-');
    while (true) {
        PhaseScalar term = parse_product(lex, params);
        total += negate ? -term : term;
        if (lex.accept('+')) { negate = false; continue; }
        if (lex.accept('-')) { negate = true; continue; }
        break;
    }
    return total;
}

}  // namespace

PhaseScalar parse_scalar(const std::string& text, const DeformationParams& params) {
    ScalarLexer lex(text);
    PhaseScalar value = parse_sum(lex, params);
    if (!lex.eof())
        throw std::invalid_argument("scalar parse: trailing input in \"" + text + "\"");
    return value;
}

}  // namespace cotwist
