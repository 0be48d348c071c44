#pragma once

// Shared test scaffolding: a deterministic RNG, small random builders for the
// inputs the property tests range over, and the two matrices that anchor the
// worked examples (the trefoil matrix for odd q and the 4x4 base for even q).

#include <random>
#include <vector>

#include "qsig/angle.hpp"
#include "qsig/seifert.hpp"

namespace qsig::testing {

using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Mostly integers with an occasional denominator of 2 or 3: large enough to
// exercise the rational paths, small enough to keep exact arithmetic fast.
inline Rational small_rational(Rng& rng) {
    return make_rational(pick(rng, -3, 3), pick(rng, 0, 3) == 0 ? pick(rng, 2, 3) : 1);
}

inline RationalMatrix random_rational_matrix(Rng& rng, long rows, long cols) {
    RationalMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            m.at(i, j) = small_rational(rng);
    return m;
}

inline SeifertMatrix random_seifert(Rng& rng, long max_dim, int parity) {
    const long dim = pick(rng, 1, max_dim);
    return SeifertMatrix(random_rational_matrix(rng, dim, dim), parity);
}

inline SeifertMatrix random_seifert(Rng& rng, long max_dim) {
    return random_seifert(rng, max_dim, pick(rng, 0, 1) ? 1 : -1);
}

inline SignTuple random_tuple(Rng& rng, long max_len) {
    std::vector<int> s(static_cast<std::size_t>(pick(rng, 1, max_len)));
    for (int& x : s)
        x = pick(rng, 0, 1) ? 1 : -1;
    return SignTuple(std::move(s));
}

inline SeifertMatrix seifert(const std::vector<std::vector<long>>& rows, int parity) {
    const long n = static_cast<long>(rows.size());
    RationalMatrix m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            m.at(i, j) = Rational(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return SeifertMatrix(std::move(m), parity);
}

inline SeifertMatrix trefoil() { return seifert({{1, 1}, {0, 1}}, 1); }

inline SeifertMatrix even_base() {
    return seifert({{1, 1, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 1}, {0, 0, 0, 1}}, -1);
}

inline Angle angle_pi(long num, long den) { return Angle::rational_pi(make_rational(num, den)); }

inline bool is_angle_pi(const Angle& a, long num, long den) {
    return equal_canonical(a, angle_pi(num, den));
}

// Runs f, captures the message of the expected exception type; an empty
// string marks "did not throw", so substring checks fail as they should.
template <class E, class F>
std::string error_message(F&& f) {
    try {
        f();
    } catch (const E& e) {
        return e.what();
    }
    return {};
}

} // namespace qsig::testing
