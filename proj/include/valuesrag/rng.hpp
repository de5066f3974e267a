#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace valuesrag {

/// Derives an independent stream seed from a base seed and a label.
/// Hash-keyed so substreams can be requested in any order (or in parallel)
/// without disturbing each other.
std::uint64_t derive_stream(std::uint64_t seed, std::string_view label);

/// SplitMix64 generator. All draw primitives are implemented here rather than
/// through <random> distributions so sequences are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double next_double();

    /// Uniform in [0, bound). bound must be nonzero. Unbiased (rejection).
    std::uint64_t next_below(std::uint64_t bound);

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi);

    /// Fisher-Yates shuffle with draws from this stream.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = std::size_t(next_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace valuesrag
