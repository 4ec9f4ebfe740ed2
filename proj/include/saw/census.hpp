#pragma once

#include "saw/numeric.hpp"
#include "saw/walk.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace saw {

// Exact walk and bridge counts on Z^d for lengths 0..max_length.
//   c[n]                   self-avoiding walks of length n from the origin
//   b[n]                   bridges of length n
//   bridge_by_height[n][h] bridges of length n ending at height h, 0 <= h <= n
struct Census {
    int dimension = 2;
    int max_length = 0;
    std::vector<BigInt> c;
    std::vector<BigInt> b;
    std::vector<std::vector<BigInt>> bridge_by_height;

    friend bool operator==(const Census&, const Census&) = default;
};

// Zero-filled census of the right shape.
Census make_empty_census(LatticeDim dim, int max_length);

// Problems with the census's shape or internal consistency; empty when valid.
std::vector<std::string> census_violations(const Census& census);

// Throws DomainError if census_violations is non-empty.
void require_valid_census(const Census& census);

struct EnumerateOptions {
    unsigned workers = 1;
    int prefix_depth = 6;
    // Unset: SAW_MAX_N from the environment, else kDefaultMaxLengthCeiling.
    std::optional<int> max_length_ceiling;
};

inline constexpr int kDefaultMaxLengthCeiling = 32;
inline constexpr int kOracleMaxLength = 10;

int effective_max_length_ceiling(const EnumerateOptions& options);

// Pruned depth-first enumeration. Result depends only on (dim, max_length).
Census enumerate_census(LatticeDim dim, int max_length, const EnumerateOptions& options = {});

// Brute force over every step sequence, filtered with is_self_avoiding/classify.
// Rejects max_length > kOracleMaxLength.
Census oracle_census(LatticeDim dim, int max_length);

// A(n, m) = number of length-n bridges with end height >= m.
BigInt bridges_reaching(const Census& census, int n, int m);

// Census file (JSON text, counts as decimal strings).
inline constexpr int kCensusFormatVersion = 1;

std::string canonical_counts(const Census& census);
std::string counts_checksum(const Census& census);

std::string serialize_census(const Census& census);
Census parse_census(const std::string& text);

void save_census(const Census& census, const std::filesystem::path& path);
Census load_census(const std::filesystem::path& path);

Census persist_roundtrip(const Census& census, const std::filesystem::path& path);

}  // namespace saw
