#pragma once

// Rectangular matrices over NcElement with adjoints, products and the
// projection / unitary / partial-isometry predicates.  Predicates return
// residual matrices so failures stay debuggable.

#include "cotwist/algebra.hpp"
#include "cotwist/ideal.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace cotwist {

class NcMatrix {
  public:
    NcMatrix() = default;
    NcMatrix(const AlgebraPresentation* pres, std::size_t rows, std::size_t cols);

    static NcMatrix identity(const AlgebraPresentation* pres, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const AlgebraPresentation* presentation() const { return pres_; }

    const NcElement& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, NcElement e);

    NcMatrix operator*(const NcMatrix& o) const;
    NcMatrix operator+(const NcMatrix& o) const;
    NcMatrix operator-(const NcMatrix& o) const;
    NcMatrix adjoint() const;
    NcMatrix scaled(const PhaseScalar& c) const;
    // Left/right multiplication by an element (typically central).
    NcMatrix scaled_left(const NcElement& e) const;

    bool is_zero() const;
    // Entrywise transform; pass the target presentation when f changes it.
    NcMatrix map(const std::function<NcElement(const NcElement&)>& f,
                 const AlgebraPresentation* target = nullptr) const;

    std::string str() const;

  private:
    const AlgebraPresentation* pres_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<NcElement> entries_;
};

// Optional certification context for predicates: residual entries are accepted
// when they certify against the relation span in the given factors.
struct ModuloRelations {
    const std::vector<NcElement>* relations = nullptr;
    std::set<int> factors;
};

struct PredicateResult {
    bool ok = false;
    NcMatrix residual;     // first failing residual, zero when ok
    std::string message;
};

// Accepts an entry as vanishing either on the nose or through certification.
bool entry_vanishes(const NcElement& e, const ModuloRelations* mod, std::string* why = nullptr);
PredicateResult matrix_vanishes(const NcMatrix& m, const ModuloRelations* mod,
                                const std::string& label);

// normalize(M^2 - M) = 0 and normalize(M* - M) = 0 (optionally modulo relations).
PredicateResult is_projection(const NcMatrix& m, const ModuloRelations* mod = nullptr);
// U U* = U* U = 1.
PredicateResult is_unitary(const NcMatrix& u, const ModuloRelations* mod = nullptr);
// V* V = P and V V* = Q.
PredicateResult check_mvn_equivalence(const NcMatrix& v, const NcMatrix& p, const NcMatrix& q,
                                      const ModuloRelations* mod = nullptr);
// U M U* after verifying unitarity; throws when U fails the unitary check.
NcMatrix conjugate_by_unitary(const NcMatrix& u, const NcMatrix& m,
                              const ModuloRelations* mod = nullptr);

}  // namespace cotwist
