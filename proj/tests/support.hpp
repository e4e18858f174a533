#pragma once

// Shared test helpers: literal matrix builders and seeded generators
// for the random families the suites draw from (dense, rank-deficient,
// nilpotent, block mixes). Entries stay within [-9, 9].

#include <cstdint>
#include <initializer_list>
#include <random>

#include "ginv/matrix.hpp"

namespace ginv::testsupport {

inline Matrix ints(std::initializer_list<std::initializer_list<long long>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long long v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

inline Matrix rats(std::initializer_list<std::initializer_list<const char*>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const char* v : row) m(i, j++) = Rational::parse(v);
        ++i;
    }
    return m;
}

inline Matrix random_entries(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> dist(-9, 9);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = Rational(dist(rng));
        }
    }
    return m;
}

// Rank deficiency by duplicating or zeroing rows of a dense sample.
inline Matrix random_low_rank(std::mt19937_64& rng, std::size_t n) {
    Matrix m = random_entries(rng, n, n);
    std::uniform_int_distribution<std::size_t> row_dist(0, n - 1);
    std::uniform_int_distribution<int> mode(0, 2);
    std::size_t degenerate = 1 + row_dist(rng) % n;
    for (std::size_t d = 0; d < degenerate; ++d) {
        std::size_t target = row_dist(rng);
        std::size_t source = row_dist(rng);
        for (std::size_t j = 0; j < n; ++j) {
            m(target, j) = mode(rng) == 0 ? Rational(0) : m(source, j);
        }
    }
    return m;
}

inline Matrix random_nilpotent(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> dist(-9, 9);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = Rational(dist(rng));
        }
    }
    return m;
}

// Nilpotent block next to a dense block: singular, usually index > 1,
// not nilpotent as a whole.
inline Matrix random_block_mixed(std::mt19937_64& rng, std::size_t n) {
    if (n < 3) return random_nilpotent(rng, n);
    std::size_t top = 2 + (n > 4 ? rng() % (n - 3) : 0);
    return block_diag(random_nilpotent(rng, top), random_entries(rng, n - top, n - top));
}

// Draws across all families, the mix the identity suites run on.
inline Matrix random_mixed(std::mt19937_64& rng, std::size_t n) {
    switch (rng() % 4) {
        case 0: return random_entries(rng, n, n);
        case 1: return random_low_rank(rng, n);
        case 2: return random_nilpotent(rng, n);
        default: return random_block_mixed(rng, n);
    }
}

}  // namespace ginv::testsupport
