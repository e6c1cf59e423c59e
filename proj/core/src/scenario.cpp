#include "cotwist/scenario.hpp"

#include <cctype>
#include <sstream>

namespace cotwist {

namespace {

struct LineLexer {
    const std::string& text;
    std::size_t pos = 0;
    int line;
    LineLexer(const std::string& t, int l) : text(t), line(l) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw ScenarioError(line, std::string("expected '") + c + "'");
        ++pos;
    }
    bool accept(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != ',' && text[pos] != ']' && text[pos] != ')' && text[pos] != ';' &&
               text[pos] != '[' && text[pos] != '(' && text[pos] != '=')
            ++pos;
        if (start == pos) throw ScenarioError(line, "expected a token");
        return text.substr(start, pos - start);
    }
    std::int64_t integer() {
        skip_ws();
        bool neg = accept('-');
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ScenarioError(line, "expected an integer");
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return neg ? -v : v;
    }
    Rational rational() {
        std::int64_t num = integer();
        if (accept('/')) {
            std::int64_t den = integer();
            if (den == 0) throw ScenarioError(line, "zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }
    TorusDegree vec() {
        expect('(');
        TorusDegree d;
        if (!accept(')')) {
            d.exponents.push_back(integer());
            while (accept(',')) d.exponents.push_back(integer());
            expect(')');
        }
        return d;
    }
    std::string rest() {
        skip_ws();
        std::string r = text.substr(pos);
        while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.pop_back();
        pos = text.size();
        return r;
    }
};

}  // namespace

Scenario parse_scenario(const std::string& text) {
    Scenario s;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string stripped = raw;
        auto hash = stripped.find('#');
        if (hash != std::string::npos) stripped = stripped.substr(0, hash);
        bool blank = true;
        for (char c : stripped)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        LineLexer lex(stripped, lineno);
        std::string stmt = lex.word();
        if (stmt == "torus") {
            s.torus_rank = static_cast<std::size_t>(lex.integer());
            std::string kw = lex.word();
            if (kw != "theta") throw ScenarioError(lineno, "expected 'theta'");
            lex.expect('[');
            std::vector<std::vector<Rational>> theta;
            while (true) {
                lex.expect('[');
                std::vector<Rational> row;
                row.push_back(lex.rational());
                while (lex.accept(',')) row.push_back(lex.rational());
                lex.expect(']');
                theta.push_back(std::move(row));
                if (!lex.accept(',')) break;
            }
            lex.expect(']');
            if (theta.size() != s.torus_rank)
                throw ScenarioError(lineno, "theta row count does not match the rank");
            s.theta = std::move(theta);
        } else if (stmt == "gen") {
            GenDecl g;
            g.line = lineno;
            g.name = lex.word();
            std::string kw = lex.word();
            if (kw != "deg") throw ScenarioError(lineno, "expected 'deg'");
            g.degree = lex.vec();
            while (!lex.eof()) {
                std::string opt = lex.word();
                if (opt == "star") g.star = lex.word();
                else if (opt == "central") g.central = true;
                else throw ScenarioError(lineno, "unknown generator option '" + opt + "'");
            }
            s.gens.push_back(std::move(g));
        } else if (stmt == "rule") {
            RuleDecl r;
            r.line = lineno;
            // rule NAME+ -> EXPR
            std::string tok = lex.word();
            while (tok != "->") {
                r.lhs.push_back(tok);
                if (lex.eof()) throw ScenarioError(lineno, "expected '->' in rule");
                tok = lex.word();
            }
            r.rhs = lex.rest();
            if (r.lhs.empty() || r.rhs.empty())
                throw ScenarioError(lineno, "malformed rule");
            s.rules.push_back(std::move(r));
        } else if (stmt == "relation") {
            std::string expr = lex.rest();
            if (expr.empty()) throw ScenarioError(lineno, "empty relation");
            s.relations.push_back(std::move(expr));
        } else if (stmt == "elem") {
            ElemDecl e;
            e.line = lineno;
            e.name = lex.word();
            lex.expect('=');
            e.expr = lex.rest();
            if (e.expr.empty()) throw ScenarioError(lineno, "empty element expression");
            s.elems.push_back(std::move(e));
        } else if (stmt == "matrix") {
            MatrixDecl m;
            m.line = lineno;
            m.name = lex.word();
            m.rows = static_cast<std::size_t>(lex.integer());
            m.cols = static_cast<std::size_t>(lex.integer());
            lex.expect('=');
            lex.expect('[');
            // entries split on ',' and ';' at top level
            std::string body = lex.rest();
            if (body.empty() || body.back() != ']')
                throw ScenarioError(lineno, "matrix literal must end with ']'");
            body.pop_back();
            std::string cur;
            int depth = 0;
            for (char c : body) {
                if (c == '(') ++depth;
                if (c == ')') --depth;
                if (depth == 0 && (c == ',' || c == ';')) {
                    m.entries.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            m.entries.push_back(cur);
            if (m.entries.size() != m.rows * m.cols)
                throw ScenarioError(lineno, "matrix literal has " +
                                                std::to_string(m.entries.size()) +
                                                " entries, expected " +
                                                std::to_string(m.rows * m.cols));
            s.matrices.push_back(std::move(m));
        } else if (stmt == "coaction") {
            CoactionDecl c;
            c.line = lineno;
            c.name = lex.word();
            while (!lex.eof()) {
                std::string g = lex.word();
                TorusDegree w = lex.vec();
                c.weights.emplace_back(std::move(g), std::move(w));
            }
            s.coactions.push_back(std::move(c));
        } else if (stmt == "check" || stmt == "suite") {
            CheckDecl c;
            c.line = lineno;
            c.kind = lex.word();
            while (!lex.eof()) c.args.push_back(lex.word());
            (stmt == "check" ? s.checks : s.suites).push_back(std::move(c));
        } else {
            throw ScenarioError(lineno, "unknown directive '" + stmt + "'");
        }
    }
    return s;
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

}  // namespace

std::string render_scenario(const Scenario& s) {
    std::ostringstream os;
    if (s.theta) {
        os << "torus " << s.torus_rank << " theta [";
        for (std::size_t i = 0; i < s.theta->size(); ++i) {
            if (i) os << ",";
            os << "[";
            for (std::size_t j = 0; j < (*s.theta)[i].size(); ++j) {
                if (j) os << ",";
                os << rational_str((*s.theta)[i][j]);
            }
            os << "]";
        }
        os << "]\n";
    }
    for (const auto& g : s.gens) {
        os << "gen " << g.name << " deg " << g.degree.str();
        if (!g.star.empty()) os << " star " << g.star;
        if (g.central) os << " central";
        os << "\n";
    }
    for (const auto& r : s.rules) {
        os << "rule";
        for (const auto& l : r.lhs) os << ' ' << l;
        os << " -> " << r.rhs << "\n";
    }
    for (const auto& r : s.relations) os << "relation " << r << "\n";
    for (const auto& e : s.elems) os << "elem " << e.name << " = " << e.expr << "\n";
    for (const auto& m : s.matrices) {
        os << "matrix " << m.name << ' ' << m.rows << ' ' << m.cols << " = [";
        for (std::size_t i = 0; i < m.entries.size(); ++i) {
            if (i) os << ((i % m.cols == 0) ? "; " : ", ");
            os << m.entries[i];
        }
        os << "]\n";
    }
    for (const auto& c : s.coactions) {
        os << "coaction " << c.name;
        for (const auto& [g, w] : c.weights) os << ' ' << g << ' ' << w.str();
        os << "\n";
    }
    for (const auto& c : s.checks) {
        os << "check " << c.kind;
        for (const auto& a : c.args) os << ' ' << a;
        os << "\n";
    }
    for (const auto& c : s.suites) {
        os << "suite " << c.kind;
        for (const auto& a : c.args) os << ' ' << a;
        os << "\n";
    }
    return os.str();
}

bool operator==(const Scenario& a, const Scenario& b) {
    auto gen_eq = [](const GenDecl& x, const GenDecl& y) {
        return x.name == y.name && x.degree == y.degree && x.star == y.star &&
               x.central == y.central;
    };
    if (a.torus_rank != b.torus_rank || a.theta.has_value() != b.theta.has_value()) return false;
    if (a.theta && *a.theta != *b.theta) return false;
    if (a.gens.size() != b.gens.size() || a.rules.size() != b.rules.size() ||
        a.relations.size() != b.relations.size() || a.elems.size() != b.elems.size() ||
        a.matrices.size() != b.matrices.size() || a.coactions.size() != b.coactions.size() ||
        a.checks.size() != b.checks.size() || a.suites.size() != b.suites.size())
        return false;
    for (std::size_t i = 0; i < a.gens.size(); ++i)
        if (!gen_eq(a.gens[i], b.gens[i])) return false;
    for (std::size_t i = 0; i < a.rules.size(); ++i)
        if (a.rules[i].lhs != b.rules[i].lhs || a.rules[i].rhs != b.rules[i].rhs) return false;
    if (a.relations != b.relations) return false;
    for (std::size_t i = 0; i < a.elems.size(); ++i)
        if (a.elems[i].name != b.elems[i].name || a.elems[i].expr != b.elems[i].expr) return false;
    for (std::size_t i = 0; i < a.matrices.size(); ++i) {
        const auto& x = a.matrices[i];
        const auto& y = b.matrices[i];
        if (x.name != y.name || x.rows != y.rows || x.cols != y.cols) return false;
        if (x.entries.size() != y.entries.size()) return false;
        for (std::size_t j = 0; j < x.entries.size(); ++j) {
            // entry strings may differ by surrounding whitespace after render
            auto strip = [](std::string t) {
                while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
                    t.erase(t.begin());
                while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
                    t.pop_back();
                return t;
            };
            if (strip(x.entries[j]) != strip(y.entries[j])) return false;
        }
    }
    for (std::size_t i = 0; i < a.coactions.size(); ++i) {
        if (a.coactions[i].name != b.coactions[i].name ||
            a.coactions[i].weights != b.coactions[i].weights)
            return false;
    }
    for (std::size_t i = 0; i < a.checks.size(); ++i)
        if (a.checks[i].kind != b.checks[i].kind || a.checks[i].args != b.checks[i].args)
            return false;
    for (std::size_t i = 0; i < a.suites.size(); ++i)
        if (a.suites[i].kind != b.suites[i].kind || a.suites[i].args != b.suites[i].args)
            return false;
    return true;
}

}  // namespace cotwist
