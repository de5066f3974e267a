#include "valuesrag/rng.hpp"

#include <stdexcept>

#include "valuesrag/util.hpp"

namespace valuesrag {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_stream(std::uint64_t seed, std::string_view label) {
    std::uint64_t state = seed ^ 0x5851f42d4c957f2dull;
    splitmix64(state);
    state ^= fnv1a64(label);
    return splitmix64(state);
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::next_double() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be nonzero");
    std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        std::uint64_t r = next_u64();
        if (r >= threshold) return r % bound;
    }
}

std::int64_t Rng::next_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("next_int: empty range");
    std::uint64_t span = std::uint64_t(hi) - std::uint64_t(lo) + 1;
    return std::int64_t(std::uint64_t(lo) + next_below(span));
}

}  // namespace valuesrag
