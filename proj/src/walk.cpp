#include "saw/walk.hpp"

#include "saw/errors.hpp"

#include <algorithm>
#include <string>

namespace saw {

LatticeDim::LatticeDim(int d) : d_(d) {
    if (d < 2) throw DomainError("lattice dimension must be >= 2, got " + std::to_string(d));
    if (d > 127) throw DomainError("lattice dimension too large: " + std::to_string(d));
}

Step step_from_direction(int direction) {
    return Step{static_cast<std::uint8_t>(direction / 2),
                static_cast<std::int8_t>(direction % 2 == 0 ? 1 : -1)};
}

int direction_of(Step s) { return 2 * s.axis + (s.sign > 0 ? 0 : 1); }

Walk::Walk(LatticeDim dim, std::vector<Step> steps) : dim_(dim), steps_(std::move(steps)) {
    for (const Step& s : steps_) {
        if (s.axis >= dim_.value() || (s.sign != 1 && s.sign != -1)) {
            throw DomainError("malformed step for dimension " + std::to_string(dim_.value()));
        }
    }
}

std::vector<Point> Walk::vertices() const {
    std::vector<Point> out;
    out.reserve(steps_.size() + 1);
    Point v(static_cast<std::size_t>(dim_.value()), 0);
    out.push_back(v);
    for (const Step& s : steps_) {
        v[s.axis] = static_cast<std::int16_t>(v[s.axis] + s.sign);
        out.push_back(v);
    }
    return out;
}

bool is_self_avoiding(const Walk& walk) {
    auto vs = walk.vertices();
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

WalkClass classify(const Walk& walk) {
    WalkClass wc;
    wc.is_saw = is_self_avoiding(walk);

    const auto vs = walk.vertices();
    const int axis = walk.dim().height_axis();
    bool start_strict_min = true;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        const int h = vs[k][axis];
        wc.max_height = std::max(wc.max_height, h);
        wc.min_height = std::min(wc.min_height, h);
        if (k > 0 && h <= 0) start_strict_min = false;
    }
    wc.end_height = vs.back()[axis];
    wc.is_bridge = wc.is_saw && start_strict_min && wc.end_height == wc.max_height;
    return wc;
}

}  // namespace saw
