#include "saw/census.hpp"

#include "saw/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <thread>
#include <unordered_set>

namespace saw {

Census make_empty_census(LatticeDim dim, int max_length) {
    if (max_length < 0) throw DomainError("max_length must be >= 0");
    Census out;
    out.dimension = dim.value();
    out.max_length = max_length;
    const auto size = static_cast<std::size_t>(max_length) + 1;
    out.c.assign(size, 0);
    out.b.assign(size, 0);
    out.bridge_by_height.resize(size);
    for (std::size_t n = 0; n < size; ++n) out.bridge_by_height[n].assign(n + 1, 0);
    return out;
}

std::vector<std::string> census_violations(const Census& census) {
    std::vector<std::string> out;
    if (census.dimension < 2) out.push_back("dimension < 2");
    if (census.max_length < 0) out.push_back("max_length < 0");
    if (!out.empty()) return out;

    const auto size = static_cast<std::size_t>(census.max_length) + 1;
    if (census.c.size() != size || census.b.size() != size || census.bridge_by_height.size() != size) {
        out.push_back("count arrays do not have max_length + 1 entries");
        return out;
    }
    for (std::size_t n = 0; n < size; ++n) {
        if (census.bridge_by_height[n].size() != n + 1) {
            out.push_back("bridge_by_height[" + std::to_string(n) + "] does not have n + 1 entries");
            return out;
        }
    }

    if (census.c[0] != 1) out.push_back("c_0 != 1");
    if (census.b[0] != 1) out.push_back("b_0 != 1");
    if (census.bridge_by_height[0][0] != 1) out.push_back("bridge_by_height[0][0] != 1");

    const BigInt branching = 2 * census.dimension - 1;
    BigInt walk_cap = 2 * census.dimension;
    for (std::size_t n = 0; n < size; ++n) {
        const std::string at = "[" + std::to_string(n) + "]";
        if (census.c[n] < 0 || census.b[n] < 0) out.push_back("negative count at n" + at);
        BigInt sum = 0;
        for (std::size_t h = 0; h <= n; ++h) {
            const BigInt& v = census.bridge_by_height[n][h];
            if (v < 0) out.push_back("negative bridge_by_height" + at + "[" + std::to_string(h) + "]");
            sum += v;
        }
        if (sum != census.b[n]) out.push_back("sum of bridge_by_height" + at + " != b" + at);
        if (n > 0 && census.bridge_by_height[n][0] != 0) {
            out.push_back("bridge_by_height" + at + "[0] != 0");
        }
        if (census.b[n] > census.c[n]) out.push_back("b" + at + " > c" + at);
        if (n >= 1) {
            if (census.c[n] > walk_cap) out.push_back("c" + at + " exceeds 2d(2d-1)^(n-1)");
            walk_cap *= branching;
        }
    }
    return out;
}

void require_valid_census(const Census& census) {
    const auto problems = census_violations(census);
    if (!problems.empty()) throw DomainError("invalid census: " + problems.front());
}

int effective_max_length_ceiling(const EnumerateOptions& options) {
    if (options.max_length_ceiling) return *options.max_length_ceiling;
    if (const char* env = std::getenv("SAW_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v <= std::numeric_limits<int>::max()) {
            return static_cast<int>(v);
        }
        throw DomainError(std::string("SAW_MAX_N is not a nonnegative integer: ") + env);
    }
    return kDefaultMaxLengthCeiling;
}

BigInt bridges_reaching(const Census& census, int n, int m) {
    if (n < 0 || n > census.max_length) throw DomainError("bridges_reaching: length out of range");
    BigInt sum = 0;
    const auto& row = census.bridge_by_height[static_cast<std::size_t>(n)];
    for (int h = std::max(m, 0); h <= n; ++h) sum += row[static_cast<std::size_t>(h)];
    return sum;
}

namespace {

// Sites of the box [-N, N]^d, indexed in mixed radix 2N+1.
class Occupancy {
public:
    Occupancy(int dimension, int max_length) {
        const std::uint64_t radix = 2 * static_cast<std::uint64_t>(max_length) + 1;
        std::uint64_t cells = 1;
        for (int i = 0; i < dimension; ++i) {
            if (cells > std::numeric_limits<std::uint64_t>::max() / radix) {
                throw ResourceLimitError("lattice box too large to index");
            }
            stride_.push_back(cells);
            cells *= radix;
        }
        for (int i = 0; i < dimension; ++i) origin_ += static_cast<std::uint64_t>(max_length) * stride_[i];
        dense_ = cells <= kDenseLimit;
        if (dense_) grid_.assign(cells, 0);
    }

    std::uint64_t origin() const { return origin_; }
    const std::vector<std::uint64_t>& strides() const { return stride_; }

    bool test(std::uint64_t site) const { return dense_ ? grid_[site] != 0 : sparse_.count(site) != 0; }
    void set(std::uint64_t site) {
        if (dense_) grid_[site] = 1;
        else sparse_.insert(site);
    }
    void reset(std::uint64_t site) {
        if (dense_) grid_[site] = 0;
        else sparse_.erase(site);
    }

private:
    static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

    std::vector<std::uint64_t> stride_;
    std::uint64_t origin_ = 0;
    bool dense_ = true;
    std::vector<std::uint8_t> grid_;
    std::unordered_set<std::uint64_t> sparse_;
};

struct Tally {
    explicit Tally(int max_length)
        : n1(static_cast<std::size_t>(max_length) + 1), c(n1, 0), by_height(n1 * n1, 0) {}

    std::size_t n1;
    std::vector<std::uint64_t> c;
    std::vector<std::uint64_t> by_height;  // [n * n1 + h]
};

class Enumerator {
public:
    Enumerator(LatticeDim dim, int max_length)
        : max_length_(max_length), occ_(dim.value(), max_length) {
        const int d = dim.value();
        for (int dir = 0; dir < 2 * d; ++dir) {
            const Step s = step_from_direction(dir);
            delta_.push_back(s.sign > 0 ? occ_.strides()[s.axis] : ~occ_.strides()[s.axis] + 1);
            rise_.push_back(s.axis == dim.height_axis() ? s.sign : 0);
        }
    }

    // Counts every walk reachable from the current state with length <= stop_depth.
    // At stop_depth, calls on_frontier(path) instead of descending further.
    template <class Frontier>
    void run(Tally& tally, int stop_depth, Frontier&& on_frontier) {
        descend(tally, 0, occ_.origin(), 0, 0, true, stop_depth, on_frontier);
    }

    // Replays a prefix, then counts everything strictly below it plus the prefix itself.
    void run_from(Tally& tally, const std::vector<std::uint8_t>& prefix) {
        std::uint64_t site = occ_.origin();
        int height = 0, max_height = 0;
        bool bridge_ok = true;
        occ_.set(site);
        std::vector<std::uint64_t> marked{site};
        for (const std::uint8_t dir : prefix) {
            site += delta_[dir];
            height += rise_[dir];
            max_height = std::max(max_height, height);
            bridge_ok = bridge_ok && height > 0;
            occ_.set(site);
            marked.push_back(site);
            path_.push_back(dir);
        }
        // The origin was set above; descend() only manages sites it adds itself.
        walk(tally, static_cast<int>(prefix.size()), site, height, max_height, bridge_ok);
        for (const auto s : marked) occ_.reset(s);
        path_.clear();
    }

private:
    void count(Tally& tally, int depth, int height, int max_height, bool bridge_ok) {
        ++tally.c[static_cast<std::size_t>(depth)];
        if (bridge_ok && height == max_height) {
            ++tally.by_height[static_cast<std::size_t>(depth) * tally.n1 + static_cast<std::size_t>(height)];
        }
    }

    template <class Frontier>
    void descend(Tally& tally, int depth, std::uint64_t site, int height, int max_height, bool bridge_ok,
                 int stop_depth, Frontier& on_frontier) {
        if (depth == 0) occ_.set(site);
        if (depth == stop_depth && stop_depth < max_length_) {
            on_frontier(path_);
        } else {
            count(tally, depth, height, max_height, bridge_ok);
            if (depth < max_length_) {
                for (std::size_t dir = 0; dir < delta_.size(); ++dir) {
                    const std::uint64_t next = site + delta_[dir];
                    if (occ_.test(next)) continue;
                    const int h = height + rise_[dir];
                    occ_.set(next);
                    path_.push_back(static_cast<std::uint8_t>(dir));
                    descend(tally, depth + 1, next, h, std::max(max_height, h), bridge_ok && h > 0, stop_depth,
                            on_frontier);
                    path_.pop_back();
                    occ_.reset(next);
                }
            }
        }
        if (depth == 0) occ_.reset(site);
    }

    // Plain recursion with no frontier, used inside worker tasks.
    void walk(Tally& tally, int depth, std::uint64_t site, int height, int max_height, bool bridge_ok) {
        count(tally, depth, height, max_height, bridge_ok);
        if (depth == max_length_) return;
        for (std::size_t dir = 0; dir < delta_.size(); ++dir) {
            const std::uint64_t next = site + delta_[dir];
            if (occ_.test(next)) continue;
            const int h = height + rise_[dir];
            occ_.set(next);
            walk(tally, depth + 1, next, h, std::max(max_height, h), bridge_ok && h > 0);
            occ_.reset(next);
        }
    }

    int max_length_;
    Occupancy occ_;
    std::vector<std::uint64_t> delta_;  // site offsets, modulo 2^64
    std::vector<int> rise_;
    std::vector<std::uint8_t> path_;
};

void accumulate(Census& census, const Tally& tally) {
    for (std::size_t n = 0; n < tally.n1; ++n) {
        census.c[n] += tally.c[n];
        for (std::size_t h = 0; h <= n; ++h) census.bridge_by_height[n][h] += tally.by_height[n * tally.n1 + h];
    }
}

void finish_bridge_totals(Census& census) {
    for (std::size_t n = 0; n < census.b.size(); ++n) {
        census.b[n] = 0;
        for (const auto& v : census.bridge_by_height[n]) census.b[n] += v;
    }
}

}  // namespace

Census enumerate_census(LatticeDim dim, int max_length, const EnumerateOptions& options) {
    if (max_length < 0) throw DomainError("max_length must be >= 0");
    const int ceiling = effective_max_length_ceiling(options);
    if (max_length > ceiling) {
        throw ResourceLimitError("max_length " + std::to_string(max_length) + " exceeds the ceiling " +
                                 std::to_string(ceiling) + " (set SAW_MAX_N to raise it)");
    }

    Census census = make_empty_census(dim, max_length);
    const int split = std::clamp(options.prefix_depth, 0, max_length);

    std::vector<std::vector<std::uint8_t>> tasks;
    {
        Enumerator head(dim, max_length);
        Tally tally(max_length);
        head.run(tally, split, [&](const std::vector<std::uint8_t>& path) { tasks.push_back(path); });
        accumulate(census, tally);
    }

    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(tasks.size())));
    std::vector<Tally> tallies(workers, Tally(max_length));
    std::atomic<std::size_t> next{0};
    auto work = [&](unsigned w) {
        Enumerator e(dim, max_length);
        for (std::size_t i = next++; i < tasks.size(); i = next++) e.run_from(tallies[w], tasks[i]);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (const auto& t : tallies) accumulate(census, t);
    finish_bridge_totals(census);
    return census;
}

}  // namespace saw
