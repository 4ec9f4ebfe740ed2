#include "saw/census.hpp"

#include "saw/errors.hpp"

#include <cstdint>

namespace saw {

Census oracle_census(LatticeDim dim, int max_length) {
    if (max_length < 0) throw DomainError("max_length must be >= 0");
    if (max_length > kOracleMaxLength) {
        throw ResourceLimitError("oracle_census is limited to max_length <= " + std::to_string(kOracleMaxLength));
    }
    Census census = make_empty_census(dim, max_length);
    const int k = dim.directions();

    for (int n = 0; n <= max_length; ++n) {
        std::vector<int> digits(static_cast<std::size_t>(n), 0);
        std::uint64_t walks = 0;
        std::vector<std::uint64_t> by_height(static_cast<std::size_t>(n) + 1, 0);
        for (;;) {
            std::vector<Step> steps;
            steps.reserve(digits.size());
            for (const int dgt : digits) steps.push_back(step_from_direction(dgt));
            const WalkClass wc = classify(Walk(dim, std::move(steps)));
            if (wc.is_saw) ++walks;
            if (wc.is_bridge) ++by_height[static_cast<std::size_t>(wc.end_height)];

            // odometer increment over all (2d)^n sequences
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == k) digits[i++] = 0;
            if (i == digits.size()) break;
        }
        const auto un = static_cast<std::size_t>(n);
        census.c[un] = walks;
        for (std::size_t h = 0; h <= un; ++h) {
            census.bridge_by_height[un][h] = by_height[h];
            census.b[un] += by_height[h];
        }
    }
    return census;
}

}  // namespace saw
