#pragma once

#include "latticekit/qform.hpp"
#include "latticekit/symplectic.hpp"

namespace latk {

// Everything in this header is stated purely on integer matrices and
// lattices. The geometric objects these data classify (product abelian
// varieties and their polarizations) are never modeled; the dictionary is
// faithful exactly when the generic endomorphism ring is trivial, and all
// operations here live on the matrix side of it.

// Symmetric and positive definite.
bool is_polarization(const Matrix& alpha);

// |det| = 1; requires is_polarization (throws NotAPolarization).
bool is_principal(const Matrix& alpha);

// A unimodular gamma with gamma * a2 * gamma^t = a1, if the two forms are
// equivalent. Both arguments must be polarization matrices.
std::optional<Matrix> equivalent_polarizations(const Matrix& a1, const Matrix& a2);

// Orthogonal splitting into indecomposable blocks; each block is an
// indecomposable polarized factor.
Decomposition decompose_polarization(const Matrix& alpha);

// The rescaled symplectic form E_M(x, y) = E(beta^{-1} x, y) of a k-fold
// product space, restricted to a finite-index sublattice m, when it is
// integral and unimodular there.
struct PulledBackForm {
    ProductSpace space;
    QForm beta;
    Sublattice m;
    Matrix gram_on_m; // Gram of E_M on the basis of m
};

enum class PullbackFailure {
    none,
    wrong_rank,    // m does not have full rank
    not_integral,  // E_M has a non-integral value on m
    not_unimodular // E_M is integral but not unimodular on m
};

struct PullbackResult {
    std::optional<PulledBackForm> form;
    PullbackFailure failure = PullbackFailure::none;
    bool ok() const { return form.has_value(); }
};

// beta must be positive definite symmetric of size space.copies().
PullbackResult pullback_form(const ProductSpace& space, const QForm& beta, const Sublattice& m);

struct IndexFormulaReport {
    Int index;           // [H^{(k)} : M]
    Int det_beta_pow_g;  // det(beta)^g
    bool equal;
};
IndexFormulaReport index_formula_check(const PulledBackForm& pb);

// The rank-8 numeric comparison: the automorphism group order of the even
// unimodular rank-8 form against the genus-8 curve automorphism bound.
struct WeylHurwitzReport {
    Int aut_order;        // computed automorphism group order
    Int half_aut_order;   // order modulo the central -1
    Int hurwitz_bound;    // 84 * (genus - 1)
    long genus;
    bool contradiction;   // both orders exceed the bound
};
WeylHurwitzReport weyl_vs_hurwitz();

// Checks the duality hypothesis
//   psi(b1^{-1} a1 e_i, b2^{-1} a2 f_j) = delta_ij
// for the bilinear form psi on Z^r given by psi_gram, with e- and f-vectors
// supplied as the columns of e_vecs and f_vecs (a matrix gamma acts on them
// by e_i -> sum_j gamma_ji e_j). Throws HypothesisFailed when the identity
// does not hold; otherwise confirms det(a1)det(a2) | det(b1)det(b2).
bool determinant_division_check(const Matrix& a1, const Matrix& a2, const Matrix& b1,
                                const Matrix& b2, const Matrix& psi_gram, const Matrix& e_vecs,
                                const Matrix& f_vecs);

} // namespace latk
