#include "latticekit/qform.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace latk {

namespace {

// Gram-Schmidt data of a positive definite Gram matrix, exact rationals.
// B[i] are the squared lengths of the orthogonalized vectors, mu[i][j]
// (j < i) the projection coefficients.
struct Gso {
    std::vector<Rat> b;
    std::vector<std::vector<Rat>> mu;
    bool positive = true;
};

Gso gso_of(const Matrix& w) {
    std::size_t n = w.rows();
    Gso g;
    g.b.assign(n, Rat(0));
    g.mu.assign(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rat acc(w(i, j));
            for (std::size_t l = 0; l < j; ++l) acc -= g.mu[i][l] * g.mu[j][l] * g.b[l];
            if (g.b[j] == 0) {
                g.positive = false;
                return g;
            }
            g.mu[i][j] = acc / g.b[j];
        }
        Rat bb(w(i, i));
        for (std::size_t l = 0; l < i; ++l) bb -= g.mu[i][l] * g.mu[i][l] * g.b[l];
        g.b[i] = bb;
        if (bb <= 0) {
            g.positive = false;
            return g;
        }
    }
    return g;
}

Int round_rat(const Rat& x) {
    // Nearest integer, ties toward -inf (any fixed tie rule works here).
    Rat shifted = x + Rat(1, 2);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
    return q;
}

// In-place basis change b_k += c * b_j on a Gram matrix.
void gram_addmul(Matrix& w, std::size_t k, std::size_t j, const Int& c) {
    if (c == 0) return;
    std::size_t n = w.rows();
    for (std::size_t t = 0; t < n; ++t) w(k, t) += c * w(j, t);
    for (std::size_t t = 0; t < n; ++t) w(t, k) += c * w(t, j);
}

void gram_swap(Matrix& w, std::size_t a, std::size_t b) {
    std::size_t n = w.rows();
    for (std::size_t t = 0; t < n; ++t) std::swap(w(a, t), w(b, t));
    for (std::size_t t = 0; t < n; ++t) std::swap(w(t, a), w(t, b));
}

// Enumerates all x != 0 with x^t w x <= bound (w positive definite, reduced
// coordinates), both signs. Deterministic order.
void enumerate(const Matrix& w, const Gso& g, const Int& bound,
               const std::function<void(const std::vector<Int>&, const Int&)>& emit) {
    std::size_t n = w.rows();
    if (n == 0) return;
    std::vector<Int> x(n, Int(0));
    // used[i] = B_i (x_i + c_i)^2, rem available below level i.
    std::vector<Rat> c(n, Rat(0)), rem(n + 1, Rat(0));
    rem[n] = Rat(bound);

    // Descend from the last coordinate; at each level scan the feasible
    // integer window around -c exactly.
    struct Frame {
        Int lo, hi, cur;
    };
    std::vector<Frame> fr(n);

    auto set_level = [&](std::size_t i) {
        Rat ci(0);
        for (std::size_t j = i + 1; j < n; ++j) ci += g.mu[j][i] * Rat(x[j]);
        c[i] = ci;
        // Feasible x_i: B_i (x_i + c)^2 <= rem[i+1]. Scan outward from
        // floor(-c); windows are small for the bounds used here.
        Int base;
        mpz_fdiv_q(base.get_mpz_t(), Rat(-ci).get_num().get_mpz_t(),
                   Rat(-ci).get_den().get_mpz_t());
        auto ok = [&](const Int& m) {
            Rat d = Rat(m) + ci;
            return g.b[i] * d * d <= rem[i + 1];
        };
        Int lo = base, hi = base;
        if (!ok(base)) {
            // The window may not contain floor(-c) when rem is tight; probe
            // the neighbour, else the window is empty.
            if (ok(base + 1)) {
                lo = hi = base + 1;
            } else {
                fr[i] = {Int(1), Int(0), Int(1)}; // empty
                return;
            }
        }
        while (ok(lo - 1)) --lo;
        while (ok(hi + 1)) ++hi;
        fr[i] = {lo, hi, lo};
    };

    std::size_t i = n - 1;
    set_level(i);
    for (;;) {
        if (fr[i].cur > fr[i].hi) {
            // Exhausted this level; go up.
            if (i == n - 1) break;
            ++i;
            fr[i].cur += 1;
            continue;
        }
        x[i] = fr[i].cur;
        Rat d = Rat(x[i]) + c[i];
        rem[i] = rem[i + 1] - g.b[i] * d * d;
        if (i == 0) {
            bool nonzero = false;
            for (const Int& xi : x)
                if (xi != 0) {
                    nonzero = true;
                    break;
                }
            if (nonzero) {
                Rat q = Rat(bound) - rem[0];
                emit(x, q.get_num()); // q is integral: x^t w x
            }
            fr[i].cur += 1;
        } else {
            --i;
            set_level(i);
        }
    }
}

bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

std::vector<Int> canonical_sign(std::vector<Int> v) {
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
    return v;
}

// Candidate pool for the backtracking searches: short vectors of a reduced
// form with their pairwise inner products.
struct Pool {
    std::vector<std::vector<Int>> vecs; // sign representatives
    std::vector<Int> norms;
    std::vector<std::vector<Int>> pair; // pair[a][b] = <v_a, v_b>
    std::map<std::vector<Int>, std::size_t> lookup;
};

Pool build_pool(const Matrix& w, const Gso& g, const Int& bound) {
    Pool p;
    enumerate(w, g, bound, [&](const std::vector<Int>& x, const Int& norm) {
        std::vector<Int> rep = canonical_sign(x);
        if (p.lookup.count(rep)) return;
        p.lookup[rep] = p.vecs.size();
        p.vecs.push_back(rep);
        p.norms.push_back(norm);
    });
    std::size_t m = p.vecs.size();
    p.pair.assign(m, std::vector<Int>(m, Int(0)));
    for (std::size_t a = 0; a < m; ++a) {
        std::vector<Int> wa = mul(w, p.vecs[a]);
        for (std::size_t b = 0; b < m; ++b) {
            Int s = 0;
            for (std::size_t t = 0; t < w.rows(); ++t) s += p.vecs[b][t] * wa[t];
            p.pair[b][a] = s;
        }
    }
    return p;
}

// Signed reference into a pool.
struct Signed {
    std::size_t idx;
    int sign;
};

Int signed_pair(const Pool& p, const Signed& a, const Signed& b) {
    Int v = p.pair[a.idx][b.idx];
    return (a.sign * b.sign) < 0 ? Int(-v) : v;
}

// Depth-first completion: extend the partial assignment rows [level, k) so
// that <w_i, w_j> = target(i, j) throughout. Returns true on first success.
bool complete_assignment(const Pool& p, const Matrix& target, std::vector<Signed>& chosen,
                         std::size_t level) {
    std::size_t k = target.rows();
    if (level == k) return true;
    for (std::size_t idx = 0; idx < p.vecs.size(); ++idx) {
        if (p.norms[idx] != target(level, level)) continue;
        for (int sign : {1, -1}) {
            Signed cand{idx, sign};
            bool ok = true;
            for (std::size_t j = 0; j < level; ++j) {
                if (signed_pair(p, cand, chosen[j]) != target(level, j)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen[level] = cand;
            if (complete_assignment(p, target, chosen, level + 1)) return true;
        }
    }
    return false;
}

Matrix integer_inverse(const Matrix& u) {
    RatMatrix inv = RatMatrix(u).inverse();
    return inv.to_integer();
}

} // namespace

QForm::QForm(Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric()) throw Error("quadratic form gram must be symmetric");
}

Int QForm::norm(const std::vector<Int>& v) const {
    return pairing(v, v);
}

Int QForm::pairing(const std::vector<Int>& v, const std::vector<Int>& w) const {
    if (v.size() != rank() || w.size() != rank()) throw DimensionMismatch("qform pairing");
    std::vector<Int> gw = mul(gram_, w);
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s += v[i] * gw[i];
    return s;
}

bool is_positive_definite(const QForm& q) {
    // All leading principal minors positive; the Cholesky pivots b_i are
    // the successive minor ratios, so positivity of the pivots is the same
    // test, carried out in exact rational arithmetic.
    if (q.rank() == 0) return true;
    Gso g = gso_of(q.gram());
    return g.positive;
}

bool is_unimodular(const QForm& q) {
    Int d = q.gram().det();
    return d == 1 || d == -1;
}

QForm gl_action(const Matrix& gamma, const QForm& q) {
    if (gamma.rows() != q.rank() || gamma.cols() != q.rank())
        throw DimensionMismatch("gl_action: size mismatch");
    if (!gamma.is_unimodular()) throw NotUnimodular("gl_action: gamma must be unimodular");
    return QForm(gamma * q.gram() * gamma.transpose());
}

ReducedForm lll_reduce(const QForm& q) {
    if (!is_positive_definite(q)) throw NotPositiveDefinite("lll_reduce needs a definite form");
    std::size_t n = q.rank();
    Matrix w = q.gram();
    Matrix u = Matrix::identity(n);
    if (n <= 1) return {QForm(w), u};

    const Rat delta(99, 100);
    std::size_t k = 1;
    while (k < n) {
        Gso g = gso_of(w);
        for (std::size_t jj = k; jj > 0; --jj) {
            std::size_t j = jj - 1;
            Int r = round_rat(g.mu[k][j]);
            if (r != 0) {
                gram_addmul(w, k, j, -r);
                for (std::size_t t = 0; t < n; ++t) u(t, k) -= r * u(t, j);
                g = gso_of(w);
            }
        }
        if (g.b[k] >= (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.b[k - 1]) {
            ++k;
        } else {
            gram_swap(w, k, k - 1);
            for (std::size_t t = 0; t < n; ++t) std::swap(u(t, k), u(t, k - 1));
            k = k > 1 ? k - 1 : 1;
        }
    }
    return {QForm(w), u};
}

std::vector<ShortVector> short_vectors(const QForm& q, const Int& bound) {
    if (bound < 1) throw BadParameters("short_vectors: bound must be >= 1");
    if (!is_positive_definite(q)) throw NotPositiveDefinite("short_vectors needs a definite form");
    ReducedForm red = lll_reduce(q);
    Gso g = gso_of(red.reduced.gram());

    std::map<std::vector<Int>, Int> seen;
    enumerate(red.reduced.gram(), g, bound, [&](const std::vector<Int>& x, const Int& norm) {
        std::vector<Int> orig = canonical_sign(mul(red.transform, x));
        seen.emplace(std::move(orig), norm);
    });

    std::vector<ShortVector> out;
    out.reserve(seen.size());
    for (auto& [v, nrm] : seen) out.push_back({v, nrm});
    std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return lex_less(a.coords, b.coords);
    });
    return out;
}

Decomposition decompose(const QForm& q) {
    if (!is_positive_definite(q)) throw NotPositiveDefinite("decompose needs a definite form");
    std::size_t k = q.rank();
    if (k == 0) return {Matrix(0, 0), {}};

    ReducedForm red = lll_reduce(q);
    Int bound = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (red.reduced.gram()(i, i) > bound) bound = red.reduced.gram()(i, i);

    std::vector<ShortVector> sv = short_vectors(q, bound);

    // A vector v splits as u + (v - u) with orthogonal nonzero parts iff
    // some shorter u has |<u, v>| = <u, u>; only unsplittable vectors may
    // connect two orthogonal summands' components.
    std::vector<bool> splittable(sv.size(), false);
    for (std::size_t a = 0; a < sv.size(); ++a) {
        for (std::size_t b = 0; b < sv.size() && !splittable[a]; ++b) {
            if (sv[b].norm >= sv[a].norm) continue;
            Int p = q.pairing(sv[b].coords, sv[a].coords);
            if (p == sv[b].norm || p == -sv[b].norm) splittable[a] = true;
        }
    }

    // Union-find over the unsplittable vectors, joining on nonzero pairing.
    std::vector<std::size_t> parent(sv.size());
    for (std::size_t i = 0; i < sv.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < sv.size(); ++a) {
        if (splittable[a]) continue;
        for (std::size_t b = a + 1; b < sv.size(); ++b) {
            if (splittable[b]) continue;
            if (q.pairing(sv[a].coords, sv[b].coords) != 0) parent[find(a)] = find(b);
        }
    }

    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t a = 0; a < sv.size(); ++a)
        if (!splittable[a]) comps[find(a)].push_back(a);

    struct Block {
        Matrix basis; // columns
        Matrix gram;
    };
    std::vector<Block> blocks;
    std::size_t total_rank = 0;
    for (auto& [root, members] : comps) {
        Matrix gens(k, members.size());
        for (std::size_t j = 0; j < members.size(); ++j) gens.set_col(j, sv[members[j]].coords);
        Sublattice span = Sublattice::from_generators(k, gens);
        Matrix bg = span.basis().transpose() * q.gram() * span.basis();
        blocks.push_back({span.basis(), bg});
        total_rank += span.rank();
    }
    if (total_rank != k) throw Error("decompose: components do not span the lattice");

    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        if (a.gram.rows() != b.gram.rows()) return a.gram.rows() < b.gram.rows();
        for (std::size_t i = 0; i < a.gram.rows(); ++i)
            for (std::size_t j = 0; j < a.gram.cols(); ++j)
                if (a.gram(i, j) != b.gram(i, j)) return a.gram(i, j) < b.gram(i, j);
        return false;
    });

    Matrix transform(k, k);
    std::vector<QForm> out_blocks;
    std::size_t row = 0;
    for (const Block& blk : blocks) {
        for (std::size_t c = 0; c < blk.basis.cols(); ++c) {
            for (std::size_t t = 0; t < k; ++t) transform(row, t) = blk.basis(t, c);
            ++row;
        }
        out_blocks.emplace_back(blk.gram);
    }
    if (!transform.is_unimodular()) throw Error("decompose: transform is not unimodular");

    // Post-verify the block diagonalization.
    Matrix check = transform * q.gram() * transform.transpose();
    std::size_t off = 0;
    for (const QForm& blk : out_blocks) {
        for (std::size_t i = 0; i < blk.rank(); ++i)
            for (std::size_t j = 0; j < blk.rank(); ++j)
                if (check(off + i, off + j) != blk.gram()(i, j))
                    throw Error("decompose: block verification failed");
        off += blk.rank();
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            bool same_block = false;
            std::size_t o = 0;
            for (const QForm& blk : out_blocks) {
                if (i >= o && i < o + blk.rank() && j >= o && j < o + blk.rank()) same_block = true;
                o += blk.rank();
            }
            if (!same_block && check(i, j) != 0)
                throw Error("decompose: off-block entries are nonzero");
        }
    return {transform, out_blocks};
}

std::optional<Matrix> isometry(const QForm& q1, const QForm& q2) {
    if (!is_positive_definite(q1) || !is_positive_definite(q2))
        throw NotPositiveDefinite("isometry needs definite forms");
    if (q1.rank() != q2.rank()) return std::nullopt;
    if (q1.gram().det() != q2.gram().det()) return std::nullopt;
    std::size_t k = q1.rank();
    if (k == 0) return Matrix(0, 0);

    ReducedForm r1 = lll_reduce(q1);
    ReducedForm r2 = lll_reduce(q2);
    const Matrix& w1 = r1.reduced.gram();
    const Matrix& w2 = r2.reduced.gram();

    Int bound = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (w1(i, i) > bound) bound = w1(i, i);

    Gso g1 = gso_of(w1), g2 = gso_of(w2);
    Pool p1 = build_pool(w1, g1, bound);
    Pool p2 = build_pool(w2, g2, bound);
    if (p1.vecs.size() != p2.vecs.size()) return std::nullopt;

    std::vector<Signed> chosen(k, Signed{0, 1});
    if (!complete_assignment(p2, w1, chosen, 0)) return std::nullopt;

    Matrix wmat(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<Int> v = p2.vecs[chosen[j].idx];
        if (chosen[j].sign < 0)
            for (Int& x : v) x = -x;
        wmat.set_col(j, v);
    }
    Matrix gamma = (r2.transform * wmat * integer_inverse(r1.transform)).transpose();
    if (gamma * q2.gram() * gamma.transpose() != q1.gram())
        throw Error("isometry: witness verification failed");
    if (!gamma.is_unimodular()) throw Error("isometry: witness is not unimodular");
    return gamma;
}

Int automorphism_order(const QForm& q) {
    if (!is_positive_definite(q)) throw NotPositiveDefinite("automorphism_order needs a definite form");
    std::size_t k = q.rank();
    if (k == 0) return 1;

    ReducedForm red = lll_reduce(q);
    const Matrix& w = red.reduced.gram();
    Int bound = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (w(i, i) > bound) bound = w(i, i);
    Gso g = gso_of(w);
    Pool pool = build_pool(w, g, bound);

    // Identity images of the reduced basis vectors inside the pool.
    std::vector<Signed> basis(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Int> e(k, Int(0));
        e[i] = 1;
        std::vector<Int> rep = canonical_sign(e);
        auto it = pool.lookup.find(rep);
        if (it == pool.lookup.end()) throw Error("automorphism_order: basis vector not in pool");
        basis[i] = {it->second, rep == e ? 1 : -1};
    }

    // Stabilizer-chain count: the group order is the product over i of the
    // number of images of basis vector i under isometries fixing the
    // previous ones; each candidate image is validated by completing it to
    // a full isometry.
    Int total = 1;
    std::vector<Signed> chosen(k, Signed{0, 1});
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < i; ++j) chosen[j] = basis[j];
        Int count = 0;
        for (std::size_t idx = 0; idx < pool.vecs.size(); ++idx) {
            if (pool.norms[idx] != w(i, i)) continue;
            for (int sign : {1, -1}) {
                Signed cand{idx, sign};
                bool ok = true;
                for (std::size_t j = 0; j < i; ++j)
                    if (signed_pair(pool, cand, basis[j]) != w(i, j)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                chosen[i] = cand;
                if (complete_assignment(pool, w, chosen, i + 1)) count += 1;
            }
        }
        total *= count;
    }
    return total;
}

QForm e8_gram() {
    return QForm(Matrix::from_rows({
        {2, 0, -1, 0, 0, 0, 0, 0},
        {0, 2, 0, -1, 0, 0, 0, 0},
        {-1, 0, 2, -1, 0, 0, 0, 0},
        {0, -1, -1, 2, -1, 0, 0, 0},
        {0, 0, 0, -1, 2, -1, 0, 0},
        {0, 0, 0, 0, -1, 2, -1, 0},
        {0, 0, 0, 0, 0, -1, 2, -1},
        {0, 0, 0, 0, 0, 0, -1, 2},
    }));
}

std::map<int, int> kneser_indecomposable_ranks() {
    return {{1, 1}, {8, 1}, {12, 1}, {14, 1}, {15, 1}, {16, 2}};
}

namespace {

// One splitting step: an integral vector u and integer s >= 1 with
// u^t gram u = s^2, found by scanning norms s^2 for s = 1..bound.
std::optional<std::pair<std::vector<Int>, Int>> square_norm_vector(const QForm& q,
                                                                   const Int& bound) {
    for (Int s = 1; s <= bound; ++s) {
        Int target = s * s;
        std::vector<ShortVector> sv = short_vectors(q, target);
        for (const ShortVector& v : sv)
            if (v.norm == target) return std::make_pair(v.coords, s);
    }
    return std::nullopt;
}

std::optional<RatMatrix> split_recursive(const QForm& q, const Int& bound) {
    std::size_t k = q.rank();
    if (k == 0) return RatMatrix(0, 0);
    auto found = square_norm_vector(q, bound);
    if (!found) return std::nullopt;
    const auto& [u, s] = *found;

    // Integral basis of the orthogonal complement of u.
    Matrix pair_row(1, k);
    std::vector<Int> gu = mul(q.gram(), u);
    for (std::size_t j = 0; j < k; ++j) pair_row(0, j) = gu[j];
    Matrix comp = kernel(pair_row);
    QForm next(comp.transpose() * q.gram() * comp);

    auto tail = split_recursive(next, bound);
    if (!tail) return std::nullopt;

    RatMatrix out(k, k);
    for (std::size_t j = 0; j < k; ++j) out(0, j) = Rat(u[j]) / Rat(s);
    RatMatrix rest = *tail * RatMatrix(comp.transpose());
    for (std::size_t i = 0; i < k - 1; ++i)
        for (std::size_t j = 0; j < k; ++j) out(i + 1, j) = rest(i, j);
    return out;
}

} // namespace

std::optional<RatMatrix> rational_splitting(const QForm& q, const Int& denominator_bound) {
    if (!is_positive_definite(q))
        throw NotPositiveDefinite("rational_splitting needs a definite form");
    if (!is_unimodular(q)) throw NotUnimodular("rational_splitting needs a unimodular form");
    if (denominator_bound < 1) throw BadParameters("rational_splitting: bound must be >= 1");

    auto gamma = split_recursive(q, denominator_bound);
    if (!gamma) return std::nullopt;
    if (gamma->max_denominator() > denominator_bound) return std::nullopt;
    RatMatrix check = *gamma * RatMatrix(q.gram()) * gamma->transpose();
    if (check != RatMatrix::identity(q.rank()))
        throw Error("rational_splitting: witness verification failed");
    return gamma;
}

} // namespace latk
