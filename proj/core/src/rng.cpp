#include "latticekit/rng.hpp"

namespace latk {

std::uint64_t Rng::next_u64() {
    // splitmix64; stable across platforms and standard libraries.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection sampling keeps the distribution exact.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(lo, hi);
    return m;
}

Matrix random_nonsingular(Rng& rng, std::size_t n, long lo, long hi) {
    for (;;) {
        Matrix m = random_matrix(rng, n, n, lo, hi);
        if (m.det() != 0) return m;
    }
}

Matrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
    Matrix m = Matrix::identity(n);
    if (n < 2) return m;
    for (std::size_t s = 0; s < steps; ++s) {
        switch (rng.uniform(0, 3)) {
        case 0: { // row shear
            std::size_t i = rng.uniform(0, n - 1), j;
            do {
                j = rng.uniform(0, n - 1);
            } while (j == i);
            Int c = rng.uniform(1, 2) * (rng.coin() ? 1 : -1);
            for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
            break;
        }
        case 1: { // column shear
            std::size_t i = rng.uniform(0, n - 1), j;
            do {
                j = rng.uniform(0, n - 1);
            } while (j == i);
            Int c = rng.uniform(1, 2) * (rng.coin() ? 1 : -1);
            for (std::size_t k = 0; k < n; ++k) m(k, i) += c * m(k, j);
            break;
        }
        case 2: { // swap two rows
            std::size_t i = rng.uniform(0, n - 1), j;
            do {
                j = rng.uniform(0, n - 1);
            } while (j == i);
            for (std::size_t k = 0; k < n; ++k) std::swap(m(i, k), m(j, k));
            break;
        }
        default: { // flip the sign of a row
            std::size_t i = rng.uniform(0, n - 1);
            for (std::size_t k = 0; k < n; ++k) m(i, k) = -m(i, k);
            break;
        }
        }
    }
    return m;
}

} // namespace latk
