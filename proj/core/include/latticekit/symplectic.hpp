#pragma once

#include "latticekit/rng.hpp"
#include "latticekit/sublattice.hpp"

namespace latk {

// A free Z-module of even rank 2g with a unimodular alternating form,
// given by its Gram matrix. The pairing convention is E(x, y) = x^t G y.
class SymplecticSpace {
  public:
    explicit SymplecticSpace(Matrix gram);

    // Rank 2g, basis ordered (e_1..e_g, f_1..f_g), E(e_i, f_j) = delta_ij.
    static SymplecticSpace standard(std::size_t g);

    std::size_t rank() const { return gram_.rows(); }
    std::size_t genus() const { return rank() / 2; }
    const Matrix& gram() const { return gram_; }

    Int pairing(const std::vector<Int>& x, const std::vector<Int>& y) const;
    // Gram matrix of E restricted to the columns of b.
    Matrix restricted_gram(const Matrix& b) const;

    bool operator==(const SymplecticSpace&) const = default;

  private:
    Matrix gram_;
};

// A symplectic basis (delta_1..delta_g; gamma_1..gamma_g) in ambient
// coordinates: E(delta_i, delta_j) = E(gamma_i, gamma_j) = 0 and
// E(delta_i, gamma_j) = delta_ij.
class SymplecticBasis {
  public:
    SymplecticBasis(const SymplecticSpace& space, Matrix vectors);

    const Matrix& vectors() const { return vectors_; }
    std::vector<Int> delta(std::size_t i) const { return vectors_.col(i); }
    std::vector<Int> gamma(std::size_t i) const { return vectors_.col(genus_ + i); }
    std::size_t genus() const { return genus_; }

  private:
    std::size_t genus_;
    Matrix vectors_; // 2g columns: deltas then gammas
};

std::pair<SymplecticSpace, SymplecticBasis> standard_space(std::size_t g);

// An automorphism of a symplectic lattice, stored with the vanishing cycles
// it was assembled from (empty for operators given directly by a matrix).
// Construction checks T^t G T = G exactly.
class MonodromyOperator {
  public:
    MonodromyOperator(SymplecticSpace space, Matrix matrix,
                      std::vector<std::vector<Int>> cycles = {});

    const SymplecticSpace& space() const { return space_; }
    const Matrix& matrix() const { return matrix_; }
    const std::vector<std::vector<Int>>& cycles() const { return cycles_; }

  private:
    SymplecticSpace space_;
    Matrix matrix_;
    std::vector<std::vector<Int>> cycles_;
};

// x -> x + E(x, delta) * delta.
MonodromyOperator transvection(const SymplecticSpace& space, const std::vector<Int>& delta);

// x -> x + sum_i E(x, delta_i) * delta_i. This is symplectic (and equals the
// product of the individual transvections) when the cycles are pairwise
// orthogonal; construction fails otherwise.
MonodromyOperator monodromy_from_cycles(const SymplecticSpace& space,
                                        const std::vector<std::vector<Int>>& deltas);

MonodromyOperator compose(const MonodromyOperator& a, const MonodromyOperator& b);

// Ker(T - id) as a sublattice (always saturated).
Sublattice invariants(const MonodromyOperator& op);

// (T - id)(ambient), canonical column span (not saturated in general).
Sublattice coinvariant_image(const MonodromyOperator& op);

// Ker(T - id) == Ker(T^m - id).
bool invariants_stable_under_powers(const MonodromyOperator& op, std::size_t m);

// For a saturated isotropic u, returns u' of the same rank such that the
// pairing matrix between u and u' is the identity and u' is itself
// isotropic; in particular E restricted to u + u' is unimodular.
// Deterministic in its input. Throws NotSaturated / NotIsotropic.
Sublattice complete_isotropic(const SymplecticSpace& space, const Sublattice& u);

// Product of `count` transvections along random small vectors.
Matrix random_symplectic(Rng& rng, const SymplecticSpace& space, std::size_t count);

// H^{(k)} = H + ... + H with the copy-major basis layout: coordinates are the
// k blocks stacked, the form acts within copies (Gram = I_k (x) G), and a
// k x k integer matrix acts across copies (alpha (x) I_2g).
class ProductSpace {
  public:
    ProductSpace(SymplecticSpace base, std::size_t copies);

    const SymplecticSpace& base() const { return base_; }
    std::size_t copies() const { return copies_; }
    std::size_t ambient_rank() const { return base_.rank() * copies_; }
    const SymplecticSpace& ambient() const { return ambient_; }

    // alpha (x) I_2g, the action of a copies x copies integer matrix.
    Matrix action(const Matrix& alpha) const;
    // Image sublattice alpha * H^{(k)}.
    Sublattice image(const Matrix& alpha) const;

    // Global coordinate of basis vector e_a / f_a (0-based) of copy c.
    std::size_t e_index(std::size_t copy, std::size_t a) const;
    std::size_t f_index(std::size_t copy, std::size_t a) const;

  private:
    SymplecticSpace base_;
    std::size_t copies_;
    SymplecticSpace ambient_;
};

} // namespace latk
