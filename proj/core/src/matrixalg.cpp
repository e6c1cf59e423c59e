#include "cotwist/matrixalg.hpp"

#include <sstream>
#include <stdexcept>

namespace cotwist {

NcMatrix::NcMatrix(const AlgebraPresentation* pres, std::size_t rows, std::size_t cols)
    : pres_(pres), rows_(rows), cols_(cols), entries_(rows * cols, pres->zero()) {}

NcMatrix NcMatrix::identity(const AlgebraPresentation* pres, std::size_t n) {
    NcMatrix m(pres, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, pres->one());
    return m;
}

const NcElement& NcMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("NcMatrix: index");
    return entries_[i * cols_ + j];
}

void NcMatrix::set(std::size_t i, std::size_t j, NcElement e) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("NcMatrix: index");
    entries_[i * cols_ + j] = std::move(e);
}

NcMatrix NcMatrix::operator*(const NcMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("NcMatrix: inner dimension mismatch");
    if (pres_ != o.pres_) throw std::invalid_argument("NcMatrix: presentation mismatch");
    NcMatrix r(pres_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            NcElement sum = pres_->zero();
            for (std::size_t k = 0; k < cols_; ++k)
                sum += pres_->multiply(at(i, k), o.at(k, j));
            r.set(i, j, std::move(sum));
        }
    return r;
}

NcMatrix NcMatrix::operator+(const NcMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || pres_ != o.pres_)
        throw std::invalid_argument("NcMatrix: shape mismatch");
    NcMatrix r(pres_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

NcMatrix NcMatrix::operator-(const NcMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || pres_ != o.pres_)
        throw std::invalid_argument("NcMatrix: shape mismatch");
    NcMatrix r(pres_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

NcMatrix NcMatrix::adjoint() const {
    NcMatrix r(pres_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, pres_->star(at(i, j)));
    return r;
}

NcMatrix NcMatrix::scaled(const PhaseScalar& c) const {
    NcMatrix r(pres_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].scaled(c);
    return r;
}

NcMatrix NcMatrix::scaled_left(const NcElement& e) const {
    NcMatrix r(pres_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = pres_->multiply(e, entries_[i]);
    return r;
}

bool NcMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

NcMatrix NcMatrix::map(const std::function<NcElement(const NcElement&)>& f,
                       const AlgebraPresentation* target) const {
    NcMatrix r = *this;
    if (target) r.pres_ = target;
    for (auto& e : r.entries_) e = f(e);
    return r;
}

std::string NcMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << " | ";
            os << at(i, j).str();
        }
        os << " ]\n";
    }
    return os.str();
}

bool entry_vanishes(const NcElement& e, const ModuloRelations* mod, std::string* why) {
    if (e.is_zero()) return true;
    if (!mod || !mod->relations) {
        if (why) *why = "nonzero residual";
        return false;
    }
    IdealMembership m = ideal_member(*e.presentation(), e, *mod->relations, mod->factors);
    if (m.certified()) return true;
    if (why) *why = m.message;
    return false;
}

PredicateResult matrix_vanishes(const NcMatrix& m, const ModuloRelations* mod,
                                const std::string& label) {
    PredicateResult r;
    r.residual = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string why;
            if (!entry_vanishes(m.at(i, j), mod, &why)) {
                r.ok = false;
                r.message = label + " fails at (" + std::to_string(i) + "," + std::to_string(j) +
                            "): " + why;
                return r;
            }
        }
    r.ok = true;
    r.residual = NcMatrix(m.presentation(), m.rows(), m.cols());
    return r;
}

PredicateResult is_projection(const NcMatrix& m, const ModuloRelations* mod) {
    if (m.rows() != m.cols()) return {false, m, "not square"};
    PredicateResult idem = matrix_vanishes(m * m - m, mod, "idempotency");
    if (!idem.ok) return idem;
    return matrix_vanishes(m.adjoint() - m, mod, "self-adjointness");
}

PredicateResult is_unitary(const NcMatrix& u, const ModuloRelations* mod) {
    if (u.rows() != u.cols()) return {false, u, "not square"};
    NcMatrix id = NcMatrix::identity(u.presentation(), u.rows());
    PredicateResult left = matrix_vanishes(u * u.adjoint() - id, mod, "U U* = 1");
    if (!left.ok) return left;
    return matrix_vanishes(u.adjoint() * u - id, mod, "U* U = 1");
}

PredicateResult check_mvn_equivalence(const NcMatrix& v, const NcMatrix& p, const NcMatrix& q,
                                      const ModuloRelations* mod) {
    PredicateResult a = matrix_vanishes(v.adjoint() * v - p, mod, "V* V = P");
    if (!a.ok) return a;
    return matrix_vanishes(v * v.adjoint() - q, mod, "V V* = Q");
}

NcMatrix conjugate_by_unitary(const NcMatrix& u, const NcMatrix& m, const ModuloRelations* mod) {
    PredicateResult unit = is_unitary(u, mod);
    if (!unit.ok) throw std::invalid_argument("conjugate_by_unitary: " + unit.message);
    return u * m * u.adjoint();
}

}  // namespace cotwist
