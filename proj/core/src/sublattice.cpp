#include "latticekit/sublattice.hpp"

namespace latk {

Sublattice Sublattice::from_generators(std::size_t ambient_rank, const Matrix& gens) {
    if (!gens.empty() && gens.rows() != ambient_rank)
        throw DimensionMismatch("sublattice generators have wrong ambient rank");
    if (gens.cols() == 0) return Sublattice(ambient_rank, Matrix(ambient_rank, 0));
    HnfResult r = hnf(gens);
    std::size_t nz = 0;
    while (nz < r.h.cols()) {
        bool zero = true;
        for (std::size_t i = 0; i < ambient_rank; ++i)
            if (r.h(i, nz) != 0) {
                zero = false;
                break;
            }
        if (zero) break;
        ++nz;
    }
    return Sublattice(ambient_rank, r.h.col_range(0, nz));
}

Sublattice Sublattice::zero(std::size_t ambient_rank) {
    return Sublattice(ambient_rank, Matrix(ambient_rank, 0));
}

Sublattice Sublattice::full(std::size_t ambient_rank) {
    return Sublattice(ambient_rank, Matrix::identity(ambient_rank));
}

Sublattice Sublattice::span_of(std::size_t ambient_rank,
                               const std::vector<std::vector<Int>>& vectors) {
    Matrix gens(ambient_rank, vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != ambient_rank)
            throw DimensionMismatch("span_of: vector has wrong ambient rank");
        gens.set_col(j, vectors[j]);
    }
    return from_generators(ambient_rank, gens);
}

bool Sublattice::contains_vector(const std::vector<Int>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("contains_vector: wrong ambient rank");
    return integer_solve(basis_, Matrix::column(v)).has_value();
}

Sublattice Sublattice::transformed(const Matrix& t) const {
    if (t.cols() != ambient_) throw DimensionMismatch("transformed: wrong map domain");
    return from_generators(t.rows(), t * basis_);
}

Sublattice Sublattice::scaled(const Int& c) const {
    return from_generators(ambient_, basis_.scaled(c));
}

bool contains(const Sublattice& outer, const Sublattice& inner) {
    if (outer.ambient_rank() != inner.ambient_rank())
        throw DimensionMismatch("contains: ambient ranks differ");
    if (inner.is_zero()) return true;
    return integer_solve(outer.basis(), inner.basis()).has_value();
}

Sublattice sum(const Sublattice& a, const Sublattice& b) {
    if (a.ambient_rank() != b.ambient_rank()) throw DimensionMismatch("sum: ambient ranks differ");
    return Sublattice::from_generators(a.ambient_rank(), a.basis().hcat(b.basis()));
}

Sublattice intersect(const Sublattice& a, const Sublattice& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw DimensionMismatch("intersect: ambient ranks differ");
    if (a.is_zero() || b.is_zero()) return Sublattice::zero(a.ambient_rank());
    // Kernel of [A | B]: a relation A x + B y = 0 identifies the common
    // vector A x; all common vectors arise this way.
    Matrix k = kernel(a.basis().hcat(b.basis()));
    Matrix x_part(a.rank(), k.cols());
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) x_part(i, j) = k(i, j);
    return Sublattice::from_generators(a.ambient_rank(), a.basis() * x_part);
}

LatticeIndex index(const Sublattice& outer, const Sublattice& inner) {
    if (!contains(outer, inner)) throw NotContained("index: inner is not contained in outer");
    if (inner.rank() < outer.rank()) return LatticeIndex::infinite();
    auto x = integer_solve(outer.basis(), inner.basis());
    Int d = x->det();
    return LatticeIndex::finite(d < 0 ? Int(-d) : d);
}

Sublattice saturation(const Sublattice& s) {
    if (s.is_zero() || s.is_full()) return s;
    // Kernels are saturated, so the double annihilator is the saturation.
    Matrix ann = kernel(s.basis().transpose());
    if (ann.cols() == 0) return Sublattice::full(s.ambient_rank());
    return Sublattice::from_generators(s.ambient_rank(), kernel(ann.transpose()));
}

bool is_saturated(const Sublattice& s) {
    return saturation(s) == s;
}

bool congruent_mod(const Sublattice& x, const Sublattice& y, const Sublattice& z) {
    return sum(x, z) == sum(y, z);
}

} // namespace latk
