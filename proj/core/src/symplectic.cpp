#include "latticekit/symplectic.hpp"

namespace latk {

SymplecticSpace::SymplecticSpace(Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_alternating()) throw Error("symplectic gram must be alternating");
    Int d = gram_.det();
    if (d != 1 && d != -1) throw NotUnimodular("symplectic gram must be unimodular");
    if (gram_.rows() % 2 != 0) throw Error("symplectic rank must be even");
}

SymplecticSpace SymplecticSpace::standard(std::size_t g) {
    if (g < 1) throw BadParameters("standard symplectic space needs g >= 1");
    Matrix gram(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        gram(i, g + i) = 1;
        gram(g + i, i) = -1;
    }
    return SymplecticSpace(std::move(gram));
}

Int SymplecticSpace::pairing(const std::vector<Int>& x, const std::vector<Int>& y) const {
    if (x.size() != rank() || y.size() != rank()) throw DimensionMismatch("pairing");
    std::vector<Int> gy = mul(gram_, y);
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s += x[i] * gy[i];
    return s;
}

Matrix SymplecticSpace::restricted_gram(const Matrix& b) const {
    if (b.rows() != rank()) throw DimensionMismatch("restricted_gram");
    return b.transpose() * gram_ * b;
}

SymplecticBasis::SymplecticBasis(const SymplecticSpace& space, Matrix vectors)
    : genus_(space.genus()), vectors_(std::move(vectors)) {
    if (vectors_.rows() != space.rank() || vectors_.cols() != space.rank())
        throw DimensionMismatch("symplectic basis must have 2g vectors");
    Matrix g = space.restricted_gram(vectors_);
    Matrix expected = SymplecticSpace::standard(genus_).gram();
    if (g != expected) throw Error("vectors do not form a symplectic basis");
}

std::pair<SymplecticSpace, SymplecticBasis> standard_space(std::size_t g) {
    SymplecticSpace s = SymplecticSpace::standard(g);
    SymplecticBasis b(s, Matrix::identity(2 * g));
    return {s, b};
}

MonodromyOperator::MonodromyOperator(SymplecticSpace space, Matrix matrix,
                                     std::vector<std::vector<Int>> cycles)
    : space_(std::move(space)), matrix_(std::move(matrix)), cycles_(std::move(cycles)) {
    if (matrix_.rows() != space_.rank() || matrix_.cols() != space_.rank())
        throw DimensionMismatch("operator size does not match the space");
    if (matrix_.transpose() * space_.gram() * matrix_ != space_.gram())
        throw Error("operator does not preserve the symplectic form");
}

MonodromyOperator transvection(const SymplecticSpace& space, const std::vector<Int>& delta) {
    return monodromy_from_cycles(space, {delta});
}

MonodromyOperator monodromy_from_cycles(const SymplecticSpace& space,
                                        const std::vector<std::vector<Int>>& deltas) {
    std::size_t n = space.rank();
    // T = I + sum_i d_i (G d_i)^t, so that T x = x + sum_i E(x, d_i) d_i
    // with E(x, d) = x^t G d.
    Matrix t = Matrix::identity(n);
    for (const auto& d : deltas) {
        if (d.size() != n) throw DimensionMismatch("cycle has wrong rank");
        std::vector<Int> gd = mul(space.gram(), d);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t(i, j) += d[i] * gd[j];
    }
    return MonodromyOperator(space, std::move(t), deltas);
}

MonodromyOperator compose(const MonodromyOperator& a, const MonodromyOperator& b) {
    if (!(a.space() == b.space())) throw DimensionMismatch("compose: different spaces");
    std::vector<std::vector<Int>> cycles = a.cycles();
    cycles.insert(cycles.end(), b.cycles().begin(), b.cycles().end());
    return MonodromyOperator(a.space(), a.matrix() * b.matrix(), std::move(cycles));
}

Sublattice invariants(const MonodromyOperator& op) {
    Matrix d = op.matrix() - Matrix::identity(op.space().rank());
    return Sublattice::from_generators(op.space().rank(), kernel(d));
}

Sublattice coinvariant_image(const MonodromyOperator& op) {
    Matrix d = op.matrix() - Matrix::identity(op.space().rank());
    return Sublattice::from_generators(op.space().rank(), d);
}

bool invariants_stable_under_powers(const MonodromyOperator& op, std::size_t m) {
    if (m < 1) throw BadParameters("power must be >= 1");
    Matrix p = Matrix::identity(op.space().rank());
    for (std::size_t i = 0; i < m; ++i) p = p * op.matrix();
    MonodromyOperator pow(op.space(), std::move(p));
    return invariants(op) == invariants(pow);
}

Sublattice complete_isotropic(const SymplecticSpace& space, const Sublattice& u) {
    if (u.ambient_rank() != space.rank()) throw DimensionMismatch("complete_isotropic");
    if (u.is_zero()) return u;
    if (!is_saturated(u)) throw NotSaturated("complete_isotropic: u is not saturated");
    const Matrix& b = u.basis();
    if (!space.restricted_gram(b).is_zero())
        throw NotIsotropic("complete_isotropic: u is not isotropic");

    // E(b_j, -) : H -> Z^r is onto because u is saturated and E unimodular,
    // so the pairing system has an integral solution.
    std::size_t r = u.rank();
    Matrix system = b.transpose() * space.gram();
    auto w0 = integer_solve(system, Matrix::identity(r));
    if (!w0) throw Error("complete_isotropic: pairing system has no integral solution");

    // Correct w by a vector in u to make the completion isotropic:
    // replacing W by W + B S changes the Gram of W by S^t - S, so the
    // strictly lower triangle of the skew matrix W^t G W cancels it.
    Matrix q = space.restricted_gram(*w0);
    Matrix s(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < i; ++j) s(i, j) = q(i, j);
    Matrix w = *w0 + b * s;

    Sublattice result = Sublattice::from_generators(space.rank(), w);
    Matrix both = b.hcat(w);
    Int d = space.restricted_gram(both).det();
    if (d != 1 && d != -1) throw Error("complete_isotropic: completion is not unimodular");
    return result;
}

Matrix random_symplectic(Rng& rng, const SymplecticSpace& space, std::size_t count) {
    std::size_t n = space.rank();
    Matrix m = Matrix::identity(n);
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<Int> d(n);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            d[i] = rng.uniform(-1, 1);
            if (d[i] != 0) nonzero = true;
        }
        if (!nonzero) {
            --s;
            continue;
        }
        m = m * transvection(space, d).matrix();
    }
    return m;
}

ProductSpace::ProductSpace(SymplecticSpace base, std::size_t copies)
    : base_(std::move(base)),
      copies_(copies),
      ambient_(kron(Matrix::identity(copies), base_.gram())) {
    if (copies < 1) throw BadParameters("product space needs at least one copy");
}

Matrix ProductSpace::action(const Matrix& alpha) const {
    if (alpha.rows() != copies_ || alpha.cols() != copies_)
        throw DimensionMismatch("action: alpha must be copies x copies");
    return kron(alpha, Matrix::identity(base_.rank()));
}

Sublattice ProductSpace::image(const Matrix& alpha) const {
    return Sublattice::from_generators(ambient_rank(), action(alpha));
}

std::size_t ProductSpace::e_index(std::size_t copy, std::size_t a) const {
    return copy * base_.rank() + a;
}

std::size_t ProductSpace::f_index(std::size_t copy, std::size_t a) const {
    return copy * base_.rank() + base_.genus() + a;
}

} // namespace latk
