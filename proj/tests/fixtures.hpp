// Published reference data used as exact fixtures across the test suites.
#pragma once

#include "gcp/construct.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace fixtures {

// The length-18 quaternary seed functions.
inline const std::vector<std::int64_t> kPhi1Len18 = {0, 0, 2, 0, 0, 2, 2, 2, 0,
                                                     0, 3, 0, 1, 0, 1, 0, 3, 0};
inline const std::vector<std::int64_t> kPhi2Len18 = {0, 1, 0, 0, 1, 0, 2, 3, 2,
                                                     0, 2, 2, 1, 3, 3, 0, 2, 2};

// The length-11 quaternary seed functions.
inline const std::vector<std::int64_t> kPhi1Len11 = {0, 1, 2, 0, 2, 1, 3, 2, 1, 1, 0};
inline const std::vector<std::int64_t> kPhi2Len11 = {0, 0, 3, 3, 3, 0, 0, 1, 2, 0, 2};

// Length-36 expansion rows of the length-18 seed as (coefficient of h,
// constant) templates, valid for every h >= 1.
struct HTerm {
    std::int64_t hcoef;
    std::int64_t constant;
};
inline const std::array<HTerm, 36> kRow36A = {{
    {0, 1}, {0, 1}, {2, 1}, {0, 1}, {0, 1}, {2, 1}, {2, 1}, {2, 1}, {0, 1}, {0, 1}, {3, 1}, {0, 1},
    {1, 1}, {0, 1}, {1, 1}, {0, 1}, {3, 1}, {0, 1}, {0, 2}, {1, 2}, {0, 2}, {0, 2}, {1, 2}, {0, 2},
    {2, 2}, {3, 2}, {2, 2}, {0, 2}, {2, 2}, {2, 2}, {1, 2}, {3, 2}, {3, 2}, {0, 2}, {2, 2}, {2, 2},
}};
inline const std::array<HTerm, 36> kRow36B = {{
    {0, 0}, {0, 0}, {2, 0}, {0, 0}, {0, 0}, {2, 0}, {2, 0}, {2, 0}, {0, 0}, {0, 0}, {3, 0}, {0, 0},
    {1, 0}, {0, 0}, {1, 0}, {0, 0}, {3, 0}, {0, 0}, {2, 1}, {3, 1}, {2, 1}, {2, 1}, {3, 1}, {2, 1},
    {0, 1}, {1, 1}, {0, 1}, {2, 1}, {0, 1}, {0, 1}, {3, 1}, {1, 1}, {1, 1}, {2, 1}, {0, 1}, {0, 1},
}};

// Length-44 expansion rows of the length-11 seed at h = 1.
inline const std::array<std::int64_t, 44> kRow44A = {
    1, 2, 3, 1, 3, 2, 0, 3, 2, 2, 1, 2, 2, 1, 1, 1, 2, 2, 3, 0, 2, 0,
    2, 3, 0, 2, 0, 3, 1, 0, 3, 3, 2, 1, 1, 0, 0, 0, 1, 1, 2, 3, 1, 3};
inline const std::array<std::int64_t, 44> kRow44B = {
    1, 2, 3, 1, 3, 2, 0, 3, 2, 2, 1, 2, 2, 1, 1, 1, 2, 2, 3, 0, 2, 0,
    0, 1, 2, 0, 2, 1, 3, 2, 1, 1, 0, 3, 3, 2, 2, 2, 3, 3, 0, 1, 3, 1};

// Value tables of the two ceiling-formula functions.
inline const std::array<std::int64_t, 11> kChi1 = {0, 1, 3, 1, 1, 0, 0, 0, 0, 0, 2};
inline const std::array<std::int64_t, 11> kChi2 = {0, 2, 3, 3, 0, 2, 0, 1, 3, 2, 1};

// Full exponent rows of the published length-44 attempt, pinned after first
// computation (cross-checked with an independent exact implementation).
inline const std::array<std::int64_t, 44> kAttempt44A = {
    1, 2, 0, 2, 2, 1, 1, 1, 1, 1, 3, 2, 3, 1, 3, 3, 2, 2, 2, 2, 2, 0,
    2, 0, 1, 1, 2, 0, 2, 3, 1, 0, 3, 1, 3, 0, 0, 1, 3, 1, 2, 0, 3, 2};
inline const std::array<std::int64_t, 44> kAttempt44B = {
    1, 2, 0, 2, 2, 1, 1, 1, 1, 1, 3, 2, 3, 1, 3, 3, 2, 2, 2, 2, 2, 0,
    0, 2, 3, 3, 0, 2, 0, 1, 3, 2, 1, 3, 1, 2, 2, 3, 1, 3, 0, 2, 1, 0};

inline gcp::SeedPair len18_seed() {
    return gcp::SeedPair(gcp::QarySeq(4, kPhi1Len18), gcp::QarySeq(4, kPhi2Len18));
}

inline gcp::SeedPair len11_seed() {
    return gcp::SeedPair(gcp::QarySeq(4, kPhi1Len11), gcp::QarySeq(4, kPhi2Len11));
}

} // namespace fixtures
