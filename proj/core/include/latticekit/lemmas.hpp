#pragma once

#include <array>
#include <optional>
#include <string>

#include "latticekit/symplectic.hpp"

namespace latk {

// Constructive instances and exact checkers for the sublattice statements
// the library revolves around. Checkers never throw on a mathematical
// failure: every hypothesis and conclusion verdict is data in the report,
// so that a hypothesis failure can be told apart from a conclusion failure.
// Only malformed inputs raise errors.

// If the column spans a1 Z^n and a2 Z^n agree, the unimodular gamma with
// a2 = a1 * gamma; absent otherwise. Throws SingularMatrix on zero
// determinant inputs.
std::optional<Matrix> common_image_factor(const Matrix& a1, const Matrix& a2);

// Exact check of N^{(k)} ∩ (alpha M^{(k)}) = alpha N^{(k)} for a saturated
// sublattice N of M = Z^r and a nonsingular k x k matrix alpha.
bool check_saturated_embedding(const Sublattice& n_sub, std::size_t k, const Matrix& alpha);

// ---------------------------------------------------------------------------
// Two congruences pinning M inside one submodule W.

struct TwoCongruenceInstance {
    std::size_t h_rank = 0;
    std::size_t k = 0;
    Sublattice w = Sublattice::zero(0);
    Sublattice v1 = Sublattice::zero(0);
    Sublattice v2 = Sublattice::zero(0);
    Sublattice m = Sublattice::zero(0);
    Matrix a1, a2;
    std::string construction;
};

struct TwoCongruenceReport {
    bool v_disjoint = false;        // V1 ∩ V2 = 0
    bool v_saturated = false;       // V1, V2 saturated in H
    bool v_sum_strict = false;      // V1 + V2 strictly inside W
    std::array<bool, 2> congruences{false, false};
    bool hypotheses_hold = false;
    std::string failed_hypothesis;  // first failing hypothesis, if any
    std::optional<Matrix> gamma;    // a2 = a1 * gamma
    bool conclusion_holds = false;  // M ∩ W^{(k)} = a1 W^{(k)} = a2 W^{(k)}
};

TwoCongruenceReport check_two_congruences(const TwoCongruenceInstance& inst);
TwoCongruenceInstance generate_two_congruences(std::size_t g, std::size_t k, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Four chains V_i ⊂ W_i ⊂ H covering H in pairs.

struct FourChainInstance {
    SymplecticSpace h;
    std::size_t k = 0;
    std::array<Sublattice, 4> w;
    std::array<Sublattice, 4> v;
    Sublattice m;
    std::array<Matrix, 4> alphas;
    std::string construction;
};

struct FourChainReport {
    bool chains_valid = false;          // V_i ⊆ W_i ⊆ H, alphas nonsingular
    bool direct_sum_saturated = false;  // ⊕V_i embeds with torsion-free cokernel
    bool pair_cover = false;            // (W1∩W2) + (W3∩W4) = H
    bool intersections_ok = false;      // nonzero, saturated, strict containments
    std::array<bool, 4> congruences{false, false, false, false};
    bool hypotheses_hold = false;
    std::string failed_hypothesis;
    bool images_equal = false;          // all alpha_i H^{(k)} agree
    bool contained_in_m = false;        // ... and are contained in M
    bool conclusion_holds = false;
};

FourChainReport check_four_chains(const FourChainInstance& inst);
FourChainInstance generate_four_chains(std::size_t g, std::size_t k, std::uint64_t seed);

// ---------------------------------------------------------------------------
// A sublattice M of a product H^{(k)} carrying the rescaled unimodular form
// E_M = E(beta^{-1} -, -).

struct RescaledUnimodularInstance {
    SymplecticSpace h;
    std::size_t k = 0;
    QForm beta;
    Sublattice m;
    std::array<Matrix, 2> alphas;
    // Distinguished sublattices of H^{(k)}: H'_i omits the f_i basis vector
    // from every copy, V_i collects the e_i basis vectors.
    std::array<Sublattice, 2> h_prime;
    std::array<Sublattice, 2> v;
    std::string construction;
};

struct RescaledUnimodularReport {
    bool beta_positive = false;         // det(beta) > 0
    bool form_integral = false;         // E_M integral on M
    bool form_unimodular = false;       // ... and unimodular
    std::array<bool, 2> alpha_contained{false, false}; // alpha_i H^{(k)} ⊆ M
    std::array<bool, 2> congruences{false, false};     // M ∩ H'_i = alpha_i H'_i mod V_i
    bool hypotheses_hold = false;
    std::string failed_hypothesis;
    std::optional<Matrix> gamma;        // a2 = a1 * gamma
    std::array<bool, 2> det_squared{false, false};     // det(alpha_i)^2 = det(beta)
    std::array<bool, 2> m_equals_image{false, false};  // M = alpha_i H^{(k)}
    bool conclusion_holds = false;
};

RescaledUnimodularReport check_rescaled_unimodular(const RescaledUnimodularInstance& inst);
RescaledUnimodularInstance generate_rescaled_unimodular(std::size_t g, std::size_t k,
                                                        std::uint64_t seed);

// The canonical H'_i / V_i patterns of a product space (i = 0 or 1).
Sublattice product_h_prime(const ProductSpace& space, std::size_t i);
Sublattice product_v(const ProductSpace& space, std::size_t i);

// ---------------------------------------------------------------------------
// Nested pair H ⊆ G of symplectic lattices of equal rank with two
// commuting transvection-type operators preserving both.

struct NestedPairInstance {
    SymplecticSpace g_lattice;
    Sublattice h_sub;
    MonodromyOperator t1, t2;
    Int n = 0; // intended scaling factor
    Int k = 1; // intended order of H / nG (1 means H = nG)
    std::string construction;
};

// The rank-four family parametrized by k | n, 1 < k <= n: H is spanned by
// n e_1, n e_2, n f_1, (n/k)(f_1 + f_2) and T_i is the transvection along
// k e_i. Throws BadParameters unless k | n and 1 < k <= n.
NestedPairInstance nested_counterexample(const Int& n, const Int& k);

// Members of the same shape with H = nG (k = 1) and randomized transvection
// multipliers; these satisfy the strict form-multiple hypothesis.
NestedPairInstance generate_nested_scaled(std::size_t g, std::uint64_t seed);

struct NestedPairReport {
    bool preserves_h = false;          // T_i(H) ⊆ H
    bool h_full_rank = false;          // rank H = rank G
    bool sum_full = false;             // G^{T1} + G^{T2} = G
    bool intersection_nonzero = false; // G^{T1} ∩ G^{T2} != 0
    std::array<bool, 2> invariants_scaled{false, false}; // H^{T_i} = n_i G^{T_i}
    std::array<std::optional<Int>, 2> n_i;
    bool n_consistent = false;         // n_1 = n_2
    bool hypotheses_hold = false;      // the three conditions above
    std::string failed_hypothesis;
    bool weak_conclusion = false;      // nG ⊆ H
    std::optional<Int> quotient_order; // [H : nG] when finite
    // Strict variant (checked when `improved` is set):
    std::array<bool, 2> invariant_shape{false, false}; // G^{T_i} omits exactly f_i
    bool form_multiple = false;        // E_G restricts to a multiple of a
                                       // unimodular form on H
    std::optional<Int> multiple;
    bool strict_hypotheses_hold = false;
    bool strong_conclusion = false;    // H = nG
};

NestedPairReport check_nested_pair(const NestedPairInstance& inst, bool improved);

} // namespace latk
