#include "cotwist/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cotwist {

bool Word::operator<(const Word& o) const {
    if (size() != o.size()) return size() < o.size();
    if (letters != o.letters) return letters < o.letters;
    return centrals < o.centrals;
}

// --- NcElement ---------------------------------------------------------------

NcElement NcElement::operator+(const NcElement& o) const {
    NcElement r = *this;
    if (!r.pres_) r.pres_ = o.pres_;
    for (const auto& [w, c] : o.terms_) {
        auto it = r.terms_.find(w);
        if (it == r.terms_.end()) {
            r.terms_[w] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

NcElement NcElement::operator-() const {
    NcElement r(pres_);
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

NcElement NcElement::operator-(const NcElement& o) const { return *this + (-o); }

NcElement NcElement::operator*(const NcElement& o) const {
    const AlgebraPresentation* p = pres_ ? pres_ : o.pres_;
    if (!p) throw std::logic_error("NcElement: multiply without presentation");
    return p->multiply(*this, o);
}

NcElement NcElement::scaled(const PhaseScalar& c) const {
    NcElement r(pres_);
    if (c.is_zero()) return r;
    for (const auto& [w, coeff] : terms_) {
        PhaseScalar prod = coeff * c;
        if (!prod.is_zero()) r.terms_[w] = prod;
    }
    return r;
}

std::optional<TorusDegree> NcElement::homogeneous_degree() const {
    if (!pres_) return std::nullopt;
    std::optional<TorusDegree> deg;
    for (const auto& [w, c] : terms_) {
        TorusDegree d = pres_->word_degree(w);
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

int NcElement::max_form_degree() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, pres_->word_form_degree(w));
    return m;
}

std::size_t NcElement::factor_degree(int factor) const {
    std::size_t m = 0;
    for (const auto& [w, c] : terms_) {
        std::size_t n = 0;
        for (GenId g : w.letters)
            if (pres_->gen(g).factor == factor) ++n;
        m = std::max(m, n);
    }
    return m;
}

NcElement NcElement::at_zeta_one() const {
    NcElement r(pres_);
    for (const auto& [w, c] : terms_) {
        GaussianRational v = c.at_one();
        if (!v.is_zero()) r.terms_[w] = PhaseScalar(v);
    }
    return r;
}

std::string NcElement::str() const {
    return pres_ ? pres_->render(*this) : std::string(is_zero() ? "0" : "<detached>");
}

// --- presentation: construction helpers --------------------------------------

GenId AlgebraPresentation::id_of(const std::string& name) const {
    auto found = find(name);
    if (!found) throw std::invalid_argument("unknown generator: " + name);
    return *found;
}

std::optional<GenId> AlgebraPresentation::find(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<GenId>(i);
    return std::nullopt;
}

NcElement AlgebraPresentation::zero() const { return NcElement(this); }

NcElement AlgebraPresentation::scalar(PhaseScalar c) const {
    NcElement e(this);
    if (!c.is_zero()) e.terms_[Word{}] = std::move(c);
    return e;
}

NcElement AlgebraPresentation::letter(GenId g, PhaseScalar coeff) const {
    return word({g}, std::move(coeff));
}

NcElement AlgebraPresentation::letter(const std::string& name) const {
    return letter(id_of(name));
}

NcElement AlgebraPresentation::word(const std::vector<GenId>& letters, PhaseScalar coeff) const {
    Word w;
    for (GenId g : letters) {
        if (g >= gens_.size()) throw std::invalid_argument("word: bad generator id");
        (gens_[g].central ? w.centrals : w.letters).push_back(g);
    }
    return normalize_terms({{std::move(w), std::move(coeff)}});
}

TorusDegree AlgebraPresentation::word_degree(const Word& w) const {
    TorusDegree d(cocycle_.rank());
    for (GenId g : w.letters) d = d + gens_[g].degree;
    for (GenId g : w.centrals) d = d + gens_[g].degree;
    return d;
}

int AlgebraPresentation::word_form_degree(const Word& w) const {
    int d = 0;
    for (GenId g : w.letters) d += gens_[g].form_degree;
    return d;
}

std::pair<PhaseScalar, bool> AlgebraPresentation::swap_phase(GenId a, GenId b) const {
    SwapEntryRaw e = swap_entry(a, b);
    if (e.annihilates) return {PhaseScalar::zero(), false};
    PhaseScalar p = PhaseScalar::zeta_pow(e.zeta_exp);
    if (e.negate) p = -p;
    return {p, true};
}

// --- normalization ------------------------------------------------------------

bool AlgebraPresentation::match_and_rewrite(const Word& w, const PhaseScalar& coeff,
                                            std::vector<std::pair<Word, PhaseScalar>>& out) const {
    for (const auto& rule : rules_) {
        // Central multiset containment.
        if (!std::includes(w.centrals.begin(), w.centrals.end(), rule.lhs.centrals.begin(),
                           rule.lhs.centrals.end()))
            continue;
        // Greedy leftmost subsequence match on the non-central letters.
        std::vector<std::size_t> pos;
        pos.reserve(rule.lhs.letters.size());
        std::size_t li = 0;
        for (std::size_t wi = 0; wi < w.letters.size() && li < rule.lhs.letters.size(); ++wi) {
            if (w.letters[wi] == rule.lhs.letters[li]) {
                pos.push_back(wi);
                ++li;
            }
        }
        if (li < rule.lhs.letters.size()) continue;

        // Phase for pulling the matched letters together into one block: each
        // matched letter jumps left over the unmatched letters before it.
        std::int64_t zexp = 0;
        bool neg = false;
        bool dead = false;
        for (std::size_t k = 1; k < pos.size() && !dead; ++k) {
            for (std::size_t x = pos[k - 1] + 1; x < pos[k]; ++x) {
                SwapEntryRaw e = swap_entry(w.letters[x], w.letters[pos[k]]);
                if (e.annihilates) { dead = true; break; }
                zexp += e.zeta_exp;
                neg ^= e.negate;
            }
        }
        if (dead) return true;  // the term vanishes

        std::vector<GenId> prefix(w.letters.begin(),
                                  w.letters.begin() + static_cast<std::ptrdiff_t>(pos.empty() ? 0 : pos[0]));
        std::vector<GenId> middle;  // unmatched letters inside the match span
        if (!pos.empty()) {
            std::size_t pk = 0;
            for (std::size_t x = pos[0]; x <= pos.back(); ++x) {
                if (pk < pos.size() && x == pos[pk]) { ++pk; continue; }
                middle.push_back(w.letters[x]);
            }
        }
        std::vector<GenId> suffix(w.letters.begin() +
                                      static_cast<std::ptrdiff_t>(pos.empty() ? 0 : pos.back() + 1),
                                  w.letters.end());

        std::vector<GenId> rest_centrals;
        std::set_difference(w.centrals.begin(), w.centrals.end(), rule.lhs.centrals.begin(),
                            rule.lhs.centrals.end(), std::back_inserter(rest_centrals));

        PhaseScalar base = coeff * PhaseScalar::zeta_pow(zexp);
        if (neg) base = -base;
        for (const auto& [rw, rc] : rule.rhs.terms()) {
            Word nw;
            nw.letters = prefix;
            nw.letters.insert(nw.letters.end(), rw.letters.begin(), rw.letters.end());
            nw.letters.insert(nw.letters.end(), middle.begin(), middle.end());
            nw.letters.insert(nw.letters.end(), suffix.begin(), suffix.end());
            nw.centrals = rest_centrals;
            nw.centrals.insert(nw.centrals.end(), rw.centrals.begin(), rw.centrals.end());
            std::sort(nw.centrals.begin(), nw.centrals.end());
            out.emplace_back(std::move(nw), base * rc);
        }
        return true;
    }
    return false;
}

NcElement AlgebraPresentation::normalize_terms(
    std::vector<std::pair<Word, PhaseScalar>> raw) const {
    NcElement::Terms work;

    auto add_term = [&](Word w, PhaseScalar c) {
        if (c.is_zero()) return;
        // Insertion sort with phase accumulation.
        std::int64_t zexp = 0;
        bool neg = false;
        auto& ls = w.letters;
        // Pull any centrals that arrived in the letter sequence.
        for (std::size_t i = 0; i < ls.size();) {
            if (gens_[ls[i]].central) {
                w.centrals.push_back(ls[i]);
                ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                ++i;
            }
        }
        for (std::size_t i = 1; i < ls.size(); ++i) {
            std::size_t j = i;
            while (j > 0 && ls[j - 1] > ls[j]) {
                SwapEntryRaw e = swap_entry(ls[j - 1], ls[j]);
                zexp += e.zeta_exp;
                neg ^= e.negate;
                std::swap(ls[j - 1], ls[j]);
                --j;
            }
        }
        for (std::size_t i = 1; i < ls.size(); ++i)
            if (ls[i - 1] == ls[i] && swap_entry(ls[i - 1], ls[i]).annihilates) return;
        std::sort(w.centrals.begin(), w.centrals.end());
        c.shift_mul(zexp, GaussianRational(neg ? -1 : 1));
        auto it = work.find(w);
        if (it == work.end()) {
            work.emplace(std::move(w), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) work.erase(it);
        }
    };

    for (auto& [w, c] : raw) add_term(std::move(w), std::move(c));

    // Rewrite to fixpoint; irreducible words are remembered by value.
    std::set<Word> irreducible;
    std::size_t budget = rewrite_budget_;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = work.begin(); it != work.end();) {
            if (irreducible.count(it->first)) { ++it; continue; }
            std::vector<std::pair<Word, PhaseScalar>> replacement;
            if (match_and_rewrite(it->first, it->second, replacement)) {
                if (budget-- == 0)
                    throw std::runtime_error(
                        "normalize: rewrite budget exhausted (non-terminating rule set?)");
                it = work.erase(it);
                for (auto& [nw, nc] : replacement) add_term(std::move(nw), std::move(nc));
                changed = true;
                break;  // the map was invalidated by add_term
            }
            irreducible.insert(it->first);
            ++it;
        }
    }

    NcElement e(this);
    e.terms_ = std::move(work);
    return e;
}

NcElement AlgebraPresentation::multiply(const NcElement& a, const NcElement& b) const {
    if ((a.presentation() && a.presentation() != this) ||
        (b.presentation() && b.presentation() != this))
        throw std::invalid_argument("multiply: presentation mismatch");
    std::vector<std::pair<Word, PhaseScalar>> raw;
    raw.reserve(a.terms().size() * b.terms().size());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            PhaseScalar c = ca * cb;
            if (c.is_zero()) continue;
            Word w;
            w.letters = wa.letters;
            w.letters.insert(w.letters.end(), wb.letters.begin(), wb.letters.end());
            w.centrals = wa.centrals;
            w.centrals.insert(w.centrals.end(), wb.centrals.begin(), wb.centrals.end());
            raw.emplace_back(std::move(w), std::move(c));
        }
    }
    return normalize_terms(std::move(raw));
}

NcElement AlgebraPresentation::star(const NcElement& e) const {
    std::vector<std::pair<Word, PhaseScalar>> raw;
    raw.reserve(e.terms().size());
    for (const auto& [w, c] : e.terms()) {
        PhaseScalar coeff = c.star();
        Word sw;
        sw.letters.reserve(w.letters.size());
        bool ok = true;
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
            const auto& g = gens_[*it];
            if (!g.star) { ok = false; break; }
            sw.letters.push_back(g.star->target);
            coeff *= g.star->coeff;
        }
        if (!ok) throw std::invalid_argument("star: generator without star partner");
        for (GenId cg : w.centrals) {
            const auto& g = gens_[cg];
            if (!g.star) throw std::invalid_argument("star: central generator without star partner");
            sw.centrals.push_back(g.star->target);
            coeff *= g.star->coeff;
        }
        raw.emplace_back(std::move(sw), std::move(coeff));
    }
    return normalize_terms(std::move(raw));
}

NcElement AlgebraPresentation::commutator(const NcElement& a, const NcElement& b) const {
    return multiply(a, b) - multiply(b, a);
}

bool AlgebraPresentation::is_central_element(const NcElement& e) const {
    for (std::size_t g = 0; g < gens_.size(); ++g)
        if (!commutator(e, letter(static_cast<GenId>(g))).is_zero()) return false;
    return true;
}

// --- rendering / parsing ------------------------------------------------------

std::string AlgebraPresentation::render(const NcElement& e) const {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        if (!first) os << " + ";
        first = false;
        std::string coeff = render_scalar(c, params());
        bool parens = coeff.find(" + ") != std::string::npos || coeff.find(" - ") != std::string::npos;
        std::string cs = parens ? "(" + coeff + ")" : coeff;
        if (w.empty()) {
            os << cs;
            continue;
        }
        std::ostringstream ws;
        bool w_first = true;
        for (GenId g : w.letters) {
            if (!w_first) ws << ' ';
            w_first = false;
            ws << gens_[g].name;
        }
        for (GenId g : w.centrals) {
            if (!w_first) ws << ' ';
            w_first = false;
            ws << gens_[g].name;
        }
        if (c.is_one()) os << ws.str();
        else os << cs << " * " << ws.str();
    }
    return os.str();
}

namespace {

// Splits into parens-balanced whitespace tokens; top-level '+'/'-' become
// their own tokens.
std::vector<std::string> tokenize_element(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    int depth = 0;
    auto flush = [&]() {
        if (!cur.empty()) { tokens.push_back(cur); cur.clear(); }
    };
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && (ch == '+' || ch == '-')) {
            // A '-' directly after '^' or '*' is a sign, not a term separator.
            if (ch == '-' && !cur.empty() && (cur.back() == '^' || cur.back() == '*')) {
                cur += ch;
                continue;
            }
            flush();
            tokens.push_back(std::string(1, ch));
            continue;
        }
        if (depth == 0 && std::isspace(static_cast<unsigned char>(ch))) {
            flush();
            continue;
        }
        cur += ch;
    }
    flush();
    return tokens;
}

}  // namespace

NcElement AlgebraPresentation::parse(const std::string& text) const {
    std::vector<std::string> tokens = tokenize_element(text);
    NcElement total = zero();
    std::size_t i = 0;
    bool negate = false;
    bool any = false;
    PhaseScalar coeff = PhaseScalar::one();
    std::vector<GenId> letters;
    auto flush_term = [&]() {
        if (!any) return;
        NcElement term = word(letters, negate ? -coeff : coeff);
        total += term;
        coeff = PhaseScalar::one();
        letters.clear();
        any = false;
    };
    while (i < tokens.size()) {
        const std::string& tok = tokens[i];
        if (tok == "+" || tok == "-") {
            flush_term();
            negate = (tok == "-");
            ++i;
            continue;
        }
        if (tok == "*") { ++i; continue; }
        any = true;
        if (auto g = find(tok)) {
            letters.push_back(*g);
        } else {
            std::string body = tok;
            if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
                body = body.substr(1, body.size() - 2);
            coeff *= parse_scalar(body, params());
        }
        ++i;
    }
    flush_term();
    return total;
}

// --- builder -------------------------------------------------------------------

AlgebraPresentationBuilder::AlgebraPresentationBuilder(CocycleData cocycle)
    : pres_(std::shared_ptr<AlgebraPresentation>(new AlgebraPresentation())) {
    pres_->cocycle_ = std::move(cocycle);
}

int AlgebraPresentationBuilder::add_factor(const std::string& name, bool grouplike_abelian) {
    pres_->factors_.push_back({name, grouplike_abelian});
    std::size_t n = pres_->factors_.size();
    for (auto& row : pres_->pair_kind_) row.resize(n, PairKind::braided);
    pres_->pair_kind_.resize(n, std::vector<PairKind>(n, PairKind::braided));
    return static_cast<int>(n - 1);
}

void AlgebraPresentationBuilder::set_pair_kind(int a, int b, PairKind kind) {
    pres_->pair_kind_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b)) = kind;
    pres_->pair_kind_.at(static_cast<std::size_t>(b)).at(static_cast<std::size_t>(a)) = kind;
    pres_->swap_.clear();  // phases depend on the pair kinds
}

GenId AlgebraPresentationBuilder::add_generator(const std::string& name, TorusDegree degree,
                                                int factor, int form_degree, bool central) {
    if (pres_->find(name)) throw std::invalid_argument("duplicate generator: " + name);
    if (factor < 0 || factor >= static_cast<int>(pres_->factors_.size()))
        throw std::invalid_argument("bad factor for generator " + name);
    if (degree.rank() != pres_->cocycle_.rank())
        throw std::invalid_argument("generator degree rank mismatch: " + name);
    Generator g;
    g.name = name;
    g.degree = std::move(degree);
    g.factor = factor;
    g.form_degree = form_degree;
    g.central = central;
    pres_->gens_.push_back(std::move(g));
    pres_->swap_.clear();  // table now stale
    return static_cast<GenId>(pres_->gens_.size() - 1);
}

void AlgebraPresentationBuilder::set_star_pair(GenId g, GenId gstar) {
    set_star(g, gstar, PhaseScalar::one());
    set_star(gstar, g, PhaseScalar::one());
}

void AlgebraPresentationBuilder::set_self_adjoint(GenId g) {
    set_star(g, g, PhaseScalar::one());
}

void AlgebraPresentationBuilder::set_star(GenId g, GenId target, PhaseScalar coeff) {
    pres_->gens_.at(g).star = StarImage{target, std::move(coeff)};
}

void AlgebraPresentationBuilder::set_d_image(GenId g, GenId dg) {
    pres_->gens_.at(g).d_image = dg;
}

void AlgebraPresentationBuilder::set_d_closed(GenId g) { pres_->gens_.at(g).d_closed = true; }

// The swap table realizes the uniform rule: for letters a (degree x, form p)
// and b (degree y, form q),
//     a b = (-1)^{pq} * phase(a,b) * b a,
// where phase is F^2(x,y) for braided pairs, 1 across plainly-tensored factors,
// 1 inside a grouplike torus factor, and 1 whenever either letter is central.
void AlgebraPresentation::rebuild_swap_table() const {
    const std::size_t n = gens_.size();
    swap_.assign(n * n, {});
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            auto& e = swap_[a * n + b];
            const Generator& ga = gens_[a];
            const Generator& gb = gens_[b];
            bool koszul = (ga.form_degree % 2) && (gb.form_degree % 2);
            e.negate = koszul;
            if (a == b) e.annihilates = koszul;
            if (ga.central || gb.central) continue;
            bool braided;
            if (ga.factor == gb.factor) {
                braided = !factors_[static_cast<std::size_t>(ga.factor)].grouplike_abelian;
            } else {
                braided = pair_kind_[static_cast<std::size_t>(ga.factor)]
                                    [static_cast<std::size_t>(gb.factor)] == PairKind::braided;
            }
            if (braided) e.zeta_exp = 2 * cocycle_.exponent(ga.degree, gb.degree);
        }
    }
}

void AlgebraPresentationBuilder::add_rule(Word lhs, NcElement rhs, std::string name,
                                          bool require_degree_homogeneous) {
    if (lhs.empty()) throw std::invalid_argument("rewrite rule with empty lhs");
    std::sort(lhs.centrals.begin(), lhs.centrals.end());
    // lhs must already be normal-ordered with trivial phase.
    {
        std::vector<GenId> copy = lhs.letters;
        for (std::size_t i = 1; i < copy.size(); ++i)
            if (copy[i - 1] > copy[i])
                throw std::invalid_argument("rewrite rule lhs not normal-ordered");
    }
    NcElement nrhs = pres_->normalize_terms(
        std::vector<std::pair<Word, PhaseScalar>>(rhs.terms().begin(), rhs.terms().end()));
    TorusDegree lhs_deg = pres_->word_degree(lhs);
    int lhs_form = pres_->word_form_degree(lhs);
    for (const auto& [w, c] : nrhs.terms()) {
        if (!(w < lhs))
            throw std::invalid_argument("rewrite rule does not decrease the word order: " +
                                        (name.empty() ? pres_->render(nrhs) : name));
        if (require_degree_homogeneous && pres_->word_degree(w) != lhs_deg)
            throw std::invalid_argument("rewrite rule not degree-homogeneous: " + name);
        if (pres_->word_form_degree(w) != lhs_form)
            throw std::invalid_argument("rewrite rule not form-degree-homogeneous: " + name);
    }
    pres_->rules_.push_back(RewriteRule{std::move(lhs), std::move(nrhs), std::move(name)});
}

void AlgebraPresentationBuilder::add_relation(NcElement rel) {

    NcElement n = pres_->normalize_terms(
        std::vector<std::pair<Word, PhaseScalar>>(rel.terms().begin(), rel.terms().end()));
    if (!n.is_zero()) pres_->relations_.push_back(std::move(n));
}

PresentationPtr AlgebraPresentationBuilder::build() {
    if (built_) throw std::logic_error("builder already consumed");

    // Star involutivity.
    for (std::size_t i = 0; i < pres_->gens_.size(); ++i) {
        const auto& g = pres_->gens_[i];
        if (!g.star) continue;
        const auto& h = pres_->gens_.at(g.star->target);
        if (!h.star || h.star->target != i)
            throw std::invalid_argument("star pairing not involutive at " + g.name);
        if (!(g.star->coeff.star() * h.star->coeff).is_one())
            throw std::invalid_argument("star coefficients not involutive at " + g.name);
        if (!(h.degree == -g.degree))
            throw std::invalid_argument("star partner degree must negate: " + g.name);
    }
    built_ = true;
    return pres_;
}

// --- tensor combinators -----------------------------------------------------------

TensorAssembly tensor_assembly(const std::vector<const AlgebraPresentation*>& parts,
                               PairKind cross) {
    return tensor_assembly(parts, [cross](std::size_t, std::size_t) { return cross; });
}

TensorAssembly tensor_assembly(const std::vector<const AlgebraPresentation*>& parts,
                               const std::function<PairKind(std::size_t, std::size_t)>& cross) {
    if (parts.empty()) throw std::invalid_argument("tensor_assembly: no parts");
    for (const auto* p : parts)
        if (p->cocycle() != parts[0]->cocycle())
            throw std::invalid_argument("tensor_assembly: cocycle mismatch between factors");

    TensorAssembly out{AlgebraPresentationBuilder(parts[0]->cocycle()), {}};
    auto& b = out.builder;

    // Factors and generators first.
    std::vector<std::vector<int>> factor_maps;
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        const auto& src = *parts[pi];
        std::vector<int> fmap;
        for (const auto& f : src.factors())
            fmap.push_back(b.add_factor(f.name + (pi ? "'" : ""), f.grouplike_abelian));
        factor_maps.push_back(std::move(fmap));
    }
    // Pair kinds: within a part copy the source, across parts use `cross`.
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        const auto& src = *parts[pi];
        for (std::size_t fa = 0; fa < src.factors().size(); ++fa)
            for (std::size_t fb = 0; fb < src.factors().size(); ++fb)
                b.set_pair_kind(factor_maps[pi][fa], factor_maps[pi][fb],
                                src.pair_kind()[fa][fb]);
        for (std::size_t pj = 0; pj < parts.size(); ++pj) {
            if (pi == pj) continue;
            for (int fa : factor_maps[pi])
                for (int fb : factor_maps[pj]) b.set_pair_kind(fa, fb, cross(pi, pj));
        }
    }

    std::vector<std::vector<GenId>> gen_maps;
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        const auto& src = *parts[pi];
        std::vector<GenId> gmap;
        for (const auto& g : src.generators()) {
            std::string name = g.name;
            while (b.staging()->find(name)) name += "'";
            gmap.push_back(b.add_generator(name, g.degree, factor_maps[pi][static_cast<std::size_t>(g.factor)],
                                           g.form_degree, g.central));
        }
        gen_maps.push_back(std::move(gmap));
    }
    // Star and differential data.
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        const auto& src = *parts[pi];
        for (std::size_t gi = 0; gi < src.generators().size(); ++gi) {
            const auto& g = src.generators()[gi];
            if (g.star) b.set_star(gen_maps[pi][gi], gen_maps[pi][g.star->target], g.star->coeff);
            if (g.d_image) b.set_d_image(gen_maps[pi][gi], gen_maps[pi][*g.d_image]);
            if (g.d_closed) b.set_d_closed(gen_maps[pi][gi]);
        }
    }
    // Rules and relations, transported word-wise.
    auto lift_word = [&](const Word& w, std::size_t pi) {
        Word nw;
        for (GenId g : w.letters) nw.letters.push_back(gen_maps[pi][g]);
        for (GenId g : w.centrals) nw.centrals.push_back(gen_maps[pi][g]);
        std::sort(nw.centrals.begin(), nw.centrals.end());
        return nw;
    };
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        const auto& src = *parts[pi];
        for (const auto& rule : src.rules()) {
            std::vector<std::pair<Word, PhaseScalar>> raw;
            for (const auto& [w, c] : rule.rhs.terms()) raw.emplace_back(lift_word(w, pi), c);
            // Degree checks ran at the original registration.
            b.add_rule(lift_word(rule.lhs, pi), b.staging()->normalize_terms(std::move(raw)),
                       rule.name, /*require_degree_homogeneous=*/false);
        }
        for (const auto& rel : src.relations()) {
            std::vector<std::pair<Word, PhaseScalar>> raw;
            for (const auto& [w, c] : rel.terms()) raw.emplace_back(lift_word(w, pi), c);
            b.add_relation(b.staging()->normalize_terms(std::move(raw)));
        }
    }

    for (std::size_t pi = 0; pi < parts.size(); ++pi)
        out.parts.push_back(TensorPart{parts[pi], gen_maps[pi], factor_maps[pi]});
    return out;
}

NcElement lift_element(const NcElement& e, const AlgebraPresentation& target,
                       const std::vector<GenId>& gen_map) {
    std::vector<std::pair<Word, PhaseScalar>> raw;
    for (const auto& [w, c] : e.terms()) {
        Word nw;
        for (GenId g : w.letters) nw.letters.push_back(gen_map.at(g));
        for (GenId g : w.centrals) nw.centrals.push_back(gen_map.at(g));
        raw.emplace_back(std::move(nw), c);
    }
    return target.normalize_terms(std::move(raw));
}

// --- substitution ---------------------------------------------------------------

Substitution::Substitution(const AlgebraPresentation* source, const AlgebraPresentation* target,
                           FoldKind fold, bool conjugate_scalars)
    : source_(source), target_(target), fold_(fold), conjugate_scalars_(conjugate_scalars),
      images_(source->generators().size()) {}

void Substitution::set_image(GenId g, NcElement image) {
    images_.at(g) = std::move(image);
}

bool Substitution::has_image(GenId g) const { return images_.at(g).has_value(); }

void Substitution::check_covariance() const {
    for (std::size_t g = 0; g < images_.size(); ++g) {
        if (!images_[g]) continue;
        const Generator& src = source_->gen(static_cast<GenId>(g));
        const NcElement& img = *images_[g];
        if (img.is_zero()) continue;
        auto deg = img.homogeneous_degree();
        if (!deg || !(*deg == src.degree))
            throw std::invalid_argument("substitution not degree-preserving at " + src.name);
        for (const auto& [w, c] : img.terms())
            if (target_->word_form_degree(w) != src.form_degree)
                throw std::invalid_argument("substitution not form-degree-preserving at " + src.name);
    }
}

NcElement Substitution::apply(const NcElement& e) const {
    if (e.presentation() && e.presentation() != source_)
        throw std::invalid_argument("substitution: element not over the source presentation");
    NcElement total = target_->zero();
    for (const auto& [w, c] : e.terms()) {
        std::vector<GenId> seq = w.letters;
        seq.insert(seq.end(), w.centrals.begin(), w.centrals.end());
        PhaseScalar coeff = conjugate_scalars_ ? c.star() : c;
        if (fold_ == FoldKind::braided_anti) {
            // S(x1 ... xn) = prod_{i<j} F^-2(deg xj, deg xi) * S(xn) ... S(x1)
            std::int64_t zexp = 0;
            for (std::size_t i = 0; i < seq.size(); ++i)
                for (std::size_t j = i + 1; j < seq.size(); ++j)
                    zexp -= 2 * source_->cocycle().exponent(source_->gen(seq[j]).degree,
                                                            source_->gen(seq[i]).degree);
            coeff.shift_mul(zexp, GaussianRational(1));
        }
        if (fold_ != FoldKind::homomorphism) std::reverse(seq.begin(), seq.end());
        NcElement acc = target_->scalar(coeff);
        for (GenId g : seq) {
            if (!images_[g])
                throw std::invalid_argument("substitution: no image for generator " +
                                            source_->gen(g).name);
            acc = target_->multiply(acc, *images_[g]);
            if (acc.is_zero()) break;
        }
        total += acc;
    }
    return total;
}

}  // namespace cotwist
