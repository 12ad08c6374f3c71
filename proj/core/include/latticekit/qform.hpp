#pragma once

#include <map>
#include <optional>

#include "latticekit/sublattice.hpp"

namespace latk {

// An integral quadratic form, given by its symmetric Gram matrix.
class QForm {
  public:
    explicit QForm(Matrix gram);

    std::size_t rank() const { return gram_.rows(); }
    const Matrix& gram() const { return gram_; }

    Int norm(const std::vector<Int>& v) const;
    Int pairing(const std::vector<Int>& v, const std::vector<Int>& w) const;

    bool operator==(const QForm&) const = default;

  private:
    Matrix gram_;
};

// All leading principal minors positive (exact arithmetic).
bool is_positive_definite(const QForm& q);

// |det| = 1.
bool is_unimodular(const QForm& q);

// gamma . q = gamma * gram * gamma^t; gamma must be unimodular.
QForm gl_action(const Matrix& gamma, const QForm& q);

// Lattice-reduced presentation of a positive definite form:
// reduced = transform^t * gram * transform with transform unimodular.
struct ReducedForm {
    QForm reduced;
    Matrix transform;
};
ReducedForm lll_reduce(const QForm& q);

struct ShortVector {
    std::vector<Int> coords;
    Int norm;
    bool operator==(const ShortVector&) const = default;
};

// Complete list of nonzero v with v^t gram v <= bound, one representative
// per {v, -v} pair (first nonzero coordinate positive), sorted by norm and
// then lexicographically. Throws NotPositiveDefinite.
std::vector<ShortVector> short_vectors(const QForm& q, const Int& bound);

// Orthogonal splitting into indecomposable blocks:
// transform * gram * transform^t is block diagonal with the listed blocks
// (rows of transform are the new basis vectors). The block multiset is the
// unique one; block order and bases are canonical.
struct Decomposition {
    Matrix transform;
    std::vector<QForm> blocks;
};
Decomposition decompose(const QForm& q);

// A unimodular gamma with gamma * gram2 * gamma^t = gram1, or absent when
// the forms are not isometric. Both forms must be positive definite.
std::optional<Matrix> isometry(const QForm& q1, const QForm& q2);

// Exact order of { gamma : gamma * gram * gamma^t = gram }.
Int automorphism_order(const QForm& q);

// The fixed Gram matrix of the rank-8 even unimodular root lattice used by
// this library (simple-root basis). Validated by tests via its invariants.
QForm e8_gram();

// Ranks at which indecomposable positive definite unimodular forms exist,
// up to rank 16, with the number of isomorphism classes at each rank.
// Static classification data.
std::map<int, int> kneser_indecomposable_ranks();

// A rational gamma with gamma * gram * gamma^t = I and all entry
// denominators <= denominator_bound, or absent if the bounded search fails
// (absence is not a proof of nonexistence). Requires a positive definite
// unimodular form.
std::optional<RatMatrix> rational_splitting(const QForm& q, const Int& denominator_bound);

} // namespace latk
