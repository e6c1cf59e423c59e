#include "cotwist/ideal.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cotwist {

namespace {

// Dense ordinary-polynomial view of a Laurent polynomial: coefficients plus
// the exponent shift that was factored out.
struct PolyView {
    std::vector<GaussianRational> coeffs;  // coeffs[k] multiplies z^k
    std::int64_t shift = 0;

    bool is_zero() const { return coeffs.empty(); }
    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

PolyView to_poly(const PhaseScalar& p) {
    PolyView v;
    if (p.is_zero()) return v;
    std::int64_t lo = p.terms().begin()->first;
    std::int64_t hi = p.terms().rbegin()->first;
    v.shift = lo;
    v.coeffs.assign(static_cast<std::size_t>(hi - lo + 1), GaussianRational());
    for (const auto& [k, c] : p.terms()) v.coeffs[static_cast<std::size_t>(k - lo)] = c;
    return v;
}

PhaseScalar from_poly(const std::vector<GaussianRational>& coeffs, std::int64_t shift) {
    PhaseScalar p;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero())
            p += PhaseScalar::zeta_pow(shift + static_cast<std::int64_t>(k), coeffs[k]);
    return p;
}

void trim(std::vector<GaussianRational>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Remainder of a by b (ordinary polynomials over Q(i)).
std::vector<GaussianRational> poly_mod(std::vector<GaussianRational> a,
                                       const std::vector<GaussianRational>& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        GaussianRational q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        trim(a);
    }
    return a;
}

}  // namespace

PhaseScalar phase_gcd(const PhaseScalar& a, const PhaseScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<GaussianRational> x = to_poly(a).coeffs;
    std::vector<GaussianRational> y = to_poly(b).coeffs;
    while (!y.empty()) {
        auto r = poly_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    // monic normalization
    GaussianRational lead = x.back();
    for (auto& c : x) c = c / lead;
    // drop any power of zeta dividing the gcd
    std::size_t low = 0;
    while (low < x.size() && x[low].is_zero()) ++low;
    return from_poly(std::vector<GaussianRational>(x.begin() + static_cast<std::ptrdiff_t>(low), x.end()), 0);
}

PhaseScalar phase_div(const PhaseScalar& a, const PhaseScalar& b) {
    if (b.is_zero()) throw std::invalid_argument("phase_div: division by zero");
    if (a.is_zero()) return PhaseScalar::zero();
    PolyView pa = to_poly(a), pb = to_poly(b);
    std::vector<GaussianRational> rem = pa.coeffs;
    std::vector<GaussianRational> quo(rem.size(), GaussianRational());
    trim(rem);
    while (rem.size() >= pb.coeffs.size() && !rem.empty()) {
        GaussianRational q = rem.back() / pb.coeffs.back();
        std::size_t off = rem.size() - pb.coeffs.size();
        quo[off] = q;
        for (std::size_t i = 0; i < pb.coeffs.size(); ++i) rem[off + i] -= q * pb.coeffs[i];
        trim(rem);
    }
    if (!rem.empty()) throw std::invalid_argument("phase_div: not divisible");
    return from_poly(quo, pa.shift - pb.shift);
}

PhaseFraction::PhaseFraction(PhaseScalar num, PhaseScalar den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("PhaseFraction: zero denominator");
    reduce();
}

void PhaseFraction::reduce() {
    if (num_.is_zero()) {
        den_ = PhaseScalar::one();
        return;
    }
    PhaseScalar g = phase_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = phase_div(num_, g);
        den_ = phase_div(den_, g);
    }
    // normalize: den monic with zero minimal exponent
    PolyView d = to_poly(den_);
    GaussianRational lead = d.coeffs.back();
    PhaseScalar unit = PhaseScalar::zeta_pow(-d.shift, GaussianRational(1) / lead);
    den_ *= unit;
    num_ *= unit;
}

PhaseFraction PhaseFraction::operator+(const PhaseFraction& o) const {
    return PhaseFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

PhaseFraction PhaseFraction::operator-(const PhaseFraction& o) const {
    return PhaseFraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

PhaseFraction PhaseFraction::operator*(const PhaseFraction& o) const {
    return PhaseFraction(num_ * o.num_, den_ * o.den_);
}

PhaseFraction PhaseFraction::operator/(const PhaseFraction& o) const {
    if (o.is_zero()) throw std::invalid_argument("PhaseFraction: division by zero");
    return PhaseFraction(num_ * o.den_, den_ * o.num_);
}

PhaseFraction PhaseFraction::operator-() const {
    PhaseFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

bool PhaseFraction::operator==(const PhaseFraction& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

std::string PhaseFraction::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::optional<std::vector<PhaseFraction>> solve_linear(std::vector<std::vector<PhaseFraction>> a,
                                                       std::vector<PhaseFraction> v) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        std::swap(v[pivot], v[rank]);
        PhaseFraction inv = PhaseFraction::one() / a[rank][col];
        for (std::size_t c = col; c < cols; ++c) a[rank][c] = a[rank][c] * inv;
        v[rank] = v[rank] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            PhaseFraction factor = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] = a[r][c] - factor * a[rank][c];
            v[r] = v[r] - factor * v[rank];
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (!v[r].is_zero()) return std::nullopt;
    std::vector<PhaseFraction> x(cols, PhaseFraction::zero());
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col_of_row[r]] = v[r];
    return x;
}

IdealMembership ideal_member(const AlgebraPresentation& pres, const NcElement& e,
                             const std::vector<NcElement>& relations,
                             const std::set<int>& relation_factors, std::size_t max_degree) {
    IdealMembership result;
    result.residual = pres.zero();
    if (relations.empty()) {
        if (e.is_zero()) return result;
        result.status = CertStatus::not_certified;
        result.residual = e;
        result.message = "empty relation set";
        return result;
    }

    auto is_rel_letter = [&](GenId g) { return relation_factors.count(pres.gen(g).factor) > 0; };

    // Relation words must be pure relation-factor words.
    for (const auto& rel : relations)
        for (const auto& [w, c] : rel.terms()) {
            for (GenId g : w.letters)
                if (!is_rel_letter(g))
                    throw std::invalid_argument("ideal_member: relation leaves its factor");
            if (!w.centrals.empty())
                throw std::invalid_argument("ideal_member: relation contains central letters");
        }

    // Decompose e into components keyed by the non-relation context.
    std::map<Word, std::map<Word, PhaseScalar>> components;
    for (const auto& [w, c] : e.terms()) {
        std::size_t cut = 0;
        while (cut < w.letters.size() && is_rel_letter(w.letters[cut])) ++cut;
        for (std::size_t i = cut; i < w.letters.size(); ++i)
            if (is_rel_letter(w.letters[i]))
                throw std::logic_error(
                    "ideal_member: relation letters not sorted first; "
                    "order relation-bearing factors before all others");
        Word relw, ctx;
        relw.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(cut));
        ctx.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(cut), w.letters.end());
        ctx.centrals = w.centrals;
        components[ctx][relw] += c;
        if (components[ctx][relw].is_zero()) components[ctx].erase(relw);
    }

    for (auto& [ctx, comp] : components) {
        if (comp.empty()) continue;
        std::size_t deg = 0;
        for (const auto& [w, c] : comp) deg = std::max(deg, w.letters.size());
        if (deg > max_degree) {
            result.status = CertStatus::degree_too_high;
            result.message = "component of relation-degree " + std::to_string(deg) +
                             " exceeds the certifier bound " + std::to_string(max_degree);
            NcElement res(&pres);
            for (const auto& [w, c] : comp) {
                Word full = w;
                full.letters.insert(full.letters.end(), ctx.letters.begin(), ctx.letters.end());
                full.centrals = ctx.centrals;
                res += pres.normalize_terms({{full, c}});
            }
            result.residual = res;
            return result;
        }

        // Row space: all words of the relations and of the component.
        std::map<Word, std::size_t> row_of;
        auto row_index = [&](const Word& w) {
            auto it = row_of.find(w);
            if (it != row_of.end()) return it->second;
            std::size_t idx = row_of.size();
            row_of.emplace(w, idx);
            return idx;
        };
        for (const auto& rel : relations)
            for (const auto& [w, c] : rel.terms()) row_index(w);
        for (const auto& [w, c] : comp) row_index(w);

        std::vector<std::vector<PhaseFraction>> a(
            row_of.size(), std::vector<PhaseFraction>(relations.size(), PhaseFraction::zero()));
        std::vector<PhaseFraction> v(row_of.size(), PhaseFraction::zero());
        for (std::size_t k = 0; k < relations.size(); ++k)
            for (const auto& [w, c] : relations[k].terms()) a[row_of[w]][k] = PhaseFraction(c);
        for (const auto& [w, c] : comp) v[row_of[w]] = PhaseFraction(c);

        auto solution = solve_linear(a, v);
        bool ok = solution.has_value();
        if (ok) {
            // Re-verify the certificate by exact expansion.
            std::map<Word, PhaseFraction> expand;
            for (std::size_t k = 0; k < relations.size(); ++k) {
                if ((*solution)[k].is_zero()) continue;
                for (const auto& [w, c] : relations[k].terms()) {
                    expand[w] = expand[w] + (*solution)[k] * PhaseFraction(c);
                }
            }
            for (const auto& [w, c] : comp) expand[w] = expand[w] - PhaseFraction(c);
            for (const auto& [w, f] : expand)
                if (!f.is_zero()) { ok = false; break; }
        }
        if (!ok) {
            result.status = CertStatus::not_certified;
            result.message = "component not in the relation span";
            NcElement res(&pres);
            for (const auto& [w, c] : comp) {
                Word full = w;
                full.letters.insert(full.letters.end(), ctx.letters.begin(), ctx.letters.end());
                full.centrals = ctx.centrals;
                res += pres.normalize_terms({{full, c}});
            }
            result.residual = res;
            return result;
        }
        ComponentCertificate cert;
        cert.context = ctx;
        for (std::size_t k = 0; k < relations.size(); ++k)
            if (!(*solution)[k].is_zero()) cert.combo.emplace_back(k, (*solution)[k]);
        result.components.push_back(std::move(cert));
    }
    return result;
}

}  // namespace cotwist
