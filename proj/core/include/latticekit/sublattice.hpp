#pragma once

#include <optional>

#include "latticekit/normal_forms.hpp"

namespace latk {

// Index of one sublattice in another: a positive integer or "infinite"
// (rank drop). Kept as a distinct variant rather than a sentinel value.
class LatticeIndex {
  public:
    static LatticeIndex finite(Int v) { return LatticeIndex(std::move(v)); }
    static LatticeIndex infinite() { return LatticeIndex(); }

    bool is_finite() const { return value_.has_value(); }
    const Int& value() const {
        if (!value_) throw Error("LatticeIndex: value() on infinite index");
        return *value_;
    }
    bool operator==(const LatticeIndex&) const = default;

  private:
    LatticeIndex() = default;
    explicit LatticeIndex(Int v) : value_(std::move(v)) {}
    std::optional<Int> value_;
};

// A sublattice M of Z^r, stored as its ambient rank together with a basis
// matrix (columns). The basis is kept in column Hermite normal form with
// zero columns dropped, so two equal sublattices compare equal structurally.
class Sublattice {
  public:
    // Canonicalizes an arbitrary generating set (columns of gens).
    static Sublattice from_generators(std::size_t ambient_rank, const Matrix& gens);
    static Sublattice zero(std::size_t ambient_rank);
    static Sublattice full(std::size_t ambient_rank);
    static Sublattice span_of(std::size_t ambient_rank, const std::vector<std::vector<Int>>& vectors);

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t rank() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    bool is_zero() const { return rank() == 0; }
    bool is_full() const { return rank() == ambient_; }

    bool contains_vector(const std::vector<Int>& v) const;

    // Image under an integral linear map t (t.cols() == ambient rank); the
    // result lives in Z^{t.rows()}.
    Sublattice transformed(const Matrix& t) const;
    Sublattice scaled(const Int& c) const;

    bool operator==(const Sublattice& o) const = default;

  private:
    Sublattice(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
    std::size_t ambient_;
    Matrix basis_;
};

bool contains(const Sublattice& outer, const Sublattice& inner);
Sublattice sum(const Sublattice& a, const Sublattice& b);
Sublattice intersect(const Sublattice& a, const Sublattice& b);

// |outer/inner| when the ranks agree, infinite otherwise.
// Throws NotContained if inner is not a subset of outer.
LatticeIndex index(const Sublattice& outer, const Sublattice& inner);

// Smallest saturated sublattice containing s (same rank; the quotient of
// the ambient lattice by the result is torsion-free).
Sublattice saturation(const Sublattice& s);
bool is_saturated(const Sublattice& s);

// X = Y modulo Z, i.e. the images of X and Y in ambient/Z coincide.
bool congruent_mod(const Sublattice& x, const Sublattice& y, const Sublattice& z);

} // namespace latk
