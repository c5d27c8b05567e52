#pragma once

#include <cstdint>

namespace gridmagic {

// Process-wide tunables, all overridable from the CLI. Defaults match the
// documented contract: transfer-matrix state cap 1e5, enumeration cap 1e6,
// Kasteleyn precision ceiling 4096 bits.
struct Config {
    std::uint64_t state_cap = 100000;
    std::uint64_t enumerate_cap = 1000000;
    int precision_ceiling_bits = 4096;
    int threads = 0;  // 0 = hardware concurrency
};

Config& config();

int effective_threads();

}  // namespace gridmagic
