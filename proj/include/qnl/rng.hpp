#ifndef QNL_RNG_HPP
#define QNL_RNG_HPP

#include "qnl/scalar.hpp"

#include <cstdint>
#include <random>

namespace qnl {

// Deterministic seeded source. Bounded draws use rejection-free modulo on
// raw 64-bit outputs so streams are identical across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : g_(seed) {}

    uint64_t next() { return g_(); }

    long long int_in(long long lo, long long hi) { // inclusive
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    Rat rat_in(long long lo, long long hi) { return Rat(int_in(lo, hi)); }

    Fp fp() { return Fp(next()); }

    Fp fp_nonzero() {
        for (;;) {
            Fp x = fp();
            if (!x.is_zero()) return x;
        }
    }

private:
    std::mt19937_64 g_;
};

} // namespace qnl

#endif
