#include "latticekit/polarization.hpp"

namespace latk {

bool is_polarization(const Matrix& alpha) {
    if (!alpha.is_square()) throw DimensionMismatch("is_polarization: matrix must be square");
    if (!alpha.is_symmetric()) return false;
    return is_positive_definite(QForm(alpha));
}

bool is_principal(const Matrix& alpha) {
    if (!is_polarization(alpha)) throw NotAPolarization("is_principal: not a polarization matrix");
    Int d = alpha.det();
    return d == 1 || d == -1;
}

std::optional<Matrix> equivalent_polarizations(const Matrix& a1, const Matrix& a2) {
    if (!is_polarization(a1) || !is_polarization(a2))
        throw NotAPolarization("equivalent_polarizations: inputs must be polarization matrices");
    return isometry(QForm(a1), QForm(a2));
}

Decomposition decompose_polarization(const Matrix& alpha) {
    if (!is_polarization(alpha))
        throw NotAPolarization("decompose_polarization: not a polarization matrix");
    return decompose(QForm(alpha));
}

PullbackResult pullback_form(const ProductSpace& space, const QForm& beta, const Sublattice& m) {
    if (beta.rank() != space.copies())
        throw DimensionMismatch("pullback_form: beta must be copies x copies");
    if (!is_positive_definite(beta))
        throw NotPositiveDefinite("pullback_form: beta must be positive definite");
    if (m.ambient_rank() != space.ambient_rank())
        throw DimensionMismatch("pullback_form: sublattice lives in the wrong space");

    PullbackResult res;
    if (m.rank() != space.ambient_rank()) {
        res.failure = PullbackFailure::wrong_rank;
        return res;
    }

    // Gram of E_M(x, y) = E(beta^{-1} x, y) on the basis of m.
    RatMatrix beta_inv_action = RatMatrix(space.action(beta.gram())).inverse();
    RatMatrix b(m.basis());
    RatMatrix gram_m = b.transpose() * beta_inv_action.transpose() *
                       RatMatrix(space.ambient().gram()) * b;
    if (!gram_m.is_integral()) {
        res.failure = PullbackFailure::not_integral;
        return res;
    }
    Matrix g = gram_m.to_integer();
    Int d = g.det();
    if (d != 1 && d != -1) {
        res.failure = PullbackFailure::not_unimodular;
        return res;
    }
    res.form = PulledBackForm{space, beta, m, g};
    return res;
}

IndexFormulaReport index_formula_check(const PulledBackForm& pb) {
    LatticeIndex idx = index(Sublattice::full(pb.space.ambient_rank()), pb.m);
    Int lhs = idx.value();
    Int det_beta = pb.beta.gram().det();
    Int rhs;
    mpz_pow_ui(rhs.get_mpz_t(), det_beta.get_mpz_t(),
               static_cast<unsigned long>(pb.space.base().genus()));
    return {lhs, rhs, lhs == rhs};
}

WeylHurwitzReport weyl_vs_hurwitz() {
    WeylHurwitzReport r;
    r.aut_order = automorphism_order(e8_gram());
    r.half_aut_order = r.aut_order / 2;
    r.genus = 8;
    r.hurwitz_bound = 84 * (r.genus - 1);
    r.contradiction = r.aut_order > r.hurwitz_bound && r.half_aut_order > r.hurwitz_bound;
    return r;
}

bool determinant_division_check(const Matrix& a1, const Matrix& a2, const Matrix& b1,
                                const Matrix& b2, const Matrix& psi_gram, const Matrix& e_vecs,
                                const Matrix& f_vecs) {
    std::size_t k = a1.rows();
    if (!a1.is_square() || !a2.is_square() || !b1.is_square() || !b2.is_square() ||
        a2.rows() != k || b1.rows() != k || b2.rows() != k)
        throw DimensionMismatch("determinant_division_check: matrices must be k x k");
    if (a1.det() == 0 || a2.det() == 0 || b1.det() == 0 || b2.det() == 0)
        throw SingularMatrix("determinant_division_check: all determinants must be nonzero");
    std::size_t r = psi_gram.rows();
    if (!psi_gram.is_square() || e_vecs.rows() != r || f_vecs.rows() != r ||
        e_vecs.cols() != k || f_vecs.cols() != k)
        throw DimensionMismatch("determinant_division_check: pairing data sizes");

    // gamma acts by e_i -> sum_j gamma_ji e_j, i.e. columns transform by
    // right multiplication.
    RatMatrix e_t = RatMatrix(e_vecs) * (RatMatrix(b1).inverse() * RatMatrix(a1));
    RatMatrix f_t = RatMatrix(f_vecs) * (RatMatrix(b2).inverse() * RatMatrix(a2));
    RatMatrix pairing = e_t.transpose() * RatMatrix(psi_gram) * f_t;
    if (pairing != RatMatrix::identity(k))
        throw HypothesisFailed("determinant_division_check: duality pairing is not the identity");

    Int lhs = a1.det() * a2.det();
    Int rhs = b1.det() * b2.det();
    return rhs % lhs == 0;
}

} // namespace latk
