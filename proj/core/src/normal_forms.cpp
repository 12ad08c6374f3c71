#include "latticekit/normal_forms.hpp"

namespace latk {

namespace {

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_col(Matrix& m, std::size_t j) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

// col_a += c * col_b
void addmul_col(Matrix& m, std::size_t a, std::size_t b, const Int& c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) += c * m(i, b);
}

// Replace (col_a, col_b) by (s*col_a + t*col_b, -(y/g)*col_a + (x/g)*col_b)
// where x = m(r,a), y = m(r,b), g = gcd(x,y) = s*x + t*y. The 2x2 transform
// has determinant 1, so unimodularity of the accumulated u is preserved.
void gcd_cols(Matrix& m, Matrix& u, std::size_t r, std::size_t a, std::size_t b) {
    Int x = m(r, a), y = m(r, b);
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    Int xg = x / g, yg = y / g;
    for (Matrix* w : {&m, &u}) {
        for (std::size_t i = 0; i < w->rows(); ++i) {
            Int va = (*w)(i, a), vb = (*w)(i, b);
            (*w)(i, a) = s * va + t * vb;
            (*w)(i, b) = xg * vb - yg * va;
        }
    }
}

} // namespace

HnfResult hnf(const Matrix& m) {
    Matrix h = m;
    Matrix u = Matrix::identity(m.cols());
    std::size_t cur = 0;
    for (std::size_t r = 0; r < h.rows() && cur < h.cols(); ++r) {
        std::size_t p = cur;
        while (p < h.cols() && h(r, p) == 0) ++p;
        if (p == h.cols()) continue;
        if (p != cur) {
            swap_cols(h, cur, p);
            swap_cols(u, cur, p);
        }
        for (std::size_t j = cur + 1; j < h.cols(); ++j) {
            if (h(r, j) == 0) continue;
            gcd_cols(h, u, r, cur, j);
        }
        if (h(r, cur) < 0) {
            negate_col(h, cur);
            negate_col(u, cur);
        }
        // Reduce earlier columns in the pivot row into [0, pivot).
        for (std::size_t j = 0; j < cur; ++j) {
            if (h(r, j) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(r, j).get_mpz_t(), h(r, cur).get_mpz_t());
            addmul_col(h, j, cur, -q);
            addmul_col(u, j, cur, -q);
        }
        ++cur;
    }
    return {h, u};
}

SnfResult snf(const Matrix& m) {
    Matrix d = m;
    Matrix u = Matrix::identity(m.rows());
    Matrix v = Matrix::identity(m.cols());
    std::size_t n = std::min(d.rows(), d.cols());

    auto row_op = [&](std::size_t a, std::size_t b, const Int& c) {
        for (std::size_t j = 0; j < d.cols(); ++j) d(a, j) += c * d(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) += c * u(b, j);
    };
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d(a, j), d(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
    };
    auto gcd_rows = [&](std::size_t c, std::size_t a, std::size_t b) {
        Int x = d(a, c), y = d(b, c);
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        Int xg = x / g, yg = y / g;
        for (Matrix* w : {&d, &u}) {
            for (std::size_t j = 0; j < w->cols(); ++j) {
                Int va = (*w)(a, j), vb = (*w)(b, j);
                (*w)(a, j) = s * va + t * vb;
                (*w)(b, j) = xg * vb - yg * va;
            }
        }
    };

    for (std::size_t t = 0; t < n; ++t) {
        // Find a pivot in the trailing submatrix.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < d.rows() && !found; ++i)
            for (std::size_t j = t; j < d.cols() && !found; ++j)
                if (d(i, j) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(d, t, pj);
        swap_cols(v, t, pj);

        for (;;) {
            for (std::size_t i = t + 1; i < d.rows(); ++i)
                if (d(i, t) != 0) gcd_rows(t, t, i);
            for (std::size_t j = t + 1; j < d.cols(); ++j)
                if (d(t, j) != 0) gcd_cols(d, v, t, t, j);
            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i)
                if (d(i, t) != 0) clean = false;
            if (!clean) continue;

            // Divisibility: fold any non-multiple of the pivot into column t.
            bool fixed = false;
            for (std::size_t i = t + 1; i < d.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < d.cols() && !fixed; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        row_op(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < d.cols(); ++j) d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < u.cols(); ++j) u(t, j) = -u(t, j);
        }
    }
    return {d, u, v};
}

Matrix kernel(const Matrix& m) {
    HnfResult r = hnf(m);
    std::size_t nz = 0;
    while (nz < r.h.cols()) {
        bool zero = true;
        for (std::size_t i = 0; i < r.h.rows(); ++i)
            if (r.h(i, nz) != 0) {
                zero = false;
                break;
            }
        if (zero) break;
        ++nz;
    }
    // Zero columns of h correspond to kernel generators in u; re-canonicalize.
    Matrix gens = r.u.col_range(nz, r.u.cols());
    HnfResult k = hnf(gens);
    return k.h.col_range(0, gens.cols());
}

std::size_t rank(const Matrix& m) {
    HnfResult r = hnf(m);
    std::size_t nz = 0;
    for (std::size_t j = 0; j < r.h.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < r.h.rows(); ++i)
            if (r.h(i, j) != 0) {
                zero = false;
                break;
            }
        if (!zero) ++nz;
    }
    return nz;
}

std::optional<Matrix> integer_solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("integer_solve: row counts differ");
    HnfResult r = hnf(a);

    // Locate the pivots of h.
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    for (std::size_t j = 0; j < r.h.cols(); ++j) {
        std::size_t i = 0;
        while (i < r.h.rows() && r.h(i, j) == 0) ++i;
        if (i < r.h.rows()) pivots.emplace_back(i, j);
    }

    Matrix y(a.cols(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        std::vector<Int> res = b.col(c);
        for (auto [pr, pc] : pivots) {
            Int q, rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), res[pr].get_mpz_t(),
                        r.h(pr, pc).get_mpz_t());
            if (rem != 0) return std::nullopt;
            y(pc, c) = q;
            if (q != 0)
                for (std::size_t i = 0; i < r.h.rows(); ++i) res[i] -= q * r.h(i, pc);
        }
        for (const Int& x : res)
            if (x != 0) return std::nullopt;
    }
    return r.u * y;
}

} // namespace latk
