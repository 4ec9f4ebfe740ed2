#pragma once

#include <cstdint>
#include <vector>

namespace saw {

// Dimension of the hypercubic lattice Z^d; always >= 2.
class LatticeDim {
public:
    explicit LatticeDim(int d);

    int value() const noexcept { return d_; }
    int directions() const noexcept { return 2 * d_; }
    // The last coordinate is the height.
    int height_axis() const noexcept { return d_ - 1; }

    friend bool operator==(LatticeDim, LatticeDim) = default;

private:
    int d_;
};

// One unit step along a coordinate axis.
struct Step {
    std::uint8_t axis = 0;
    std::int8_t sign = 1;  // +1 or -1

    friend bool operator==(const Step&, const Step&) = default;
};

// Direction index in [0, 2d): 2*axis for +, 2*axis+1 for -.
Step step_from_direction(int direction);
int direction_of(Step s);

using Point = std::vector<std::int16_t>;

// A nearest-neighbour path anchored at the origin.
class Walk {
public:
    explicit Walk(LatticeDim dim, std::vector<Step> steps = {});

    LatticeDim dim() const noexcept { return dim_; }
    const std::vector<Step>& steps() const noexcept { return steps_; }
    std::size_t length() const noexcept { return steps_.size(); }

    // v_0 = 0, v_k = v_{k-1} + step_k; length() + 1 entries.
    std::vector<Point> vertices() const;

private:
    LatticeDim dim_;
    std::vector<Step> steps_;
};

struct WalkClass {
    bool is_saw = false;
    bool is_bridge = false;
    int end_height = 0;
    int max_height = 0;
    int min_height = 0;
};

bool is_self_avoiding(const Walk& walk);

// A bridge is a SAW whose height is strictly above the start at every later
// vertex and whose endpoint attains the maximum height. The empty walk is a bridge.
WalkClass classify(const Walk& walk);

}  // namespace saw
