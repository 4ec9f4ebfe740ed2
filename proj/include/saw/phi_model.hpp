#pragma once

#include <string>
#include <vector>

namespace saw {

struct Breakpoint {
    double eps = 0.0;
    double phi = 0.0;

    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Sub-ballisticity rate function phi : (0,1] -> [0, inf), nondecreasing.
//
// Tabulated models are left-constant step functions through their breakpoints:
// phi(eps) is the value at the largest breakpoint <= eps. They are defined on
// [first breakpoint, 1] only.
class PhiModel {
public:
    enum class Kind { zero, power_law, tabulated };

    static PhiModel zero();
    // C > 0, nu > 1.
    static PhiModel power_law(double C, double nu);
    // Breakpoints strictly increasing in eps within (0,1], nondecreasing in phi.
    static PhiModel tabulated(std::vector<Breakpoint> breakpoints);

    Kind kind() const noexcept { return kind_; }
    double coefficient() const noexcept { return C_; }
    double exponent() const noexcept { return nu_; }
    const std::vector<Breakpoint>& breakpoints() const noexcept { return table_; }

    // Smallest eps at which the model is defined (0 for analytic models).
    double domain_min() const noexcept;
    bool defined_at(double eps) const noexcept;

    double operator()(double eps) const;

    // inf over eps <= delta <= 1 of phi(delta)/delta.
    double capital_phi(double eps) const;

    std::string describe() const;

    friend bool operator==(const PhiModel& a, const PhiModel& b) {
        return a.kind_ == b.kind_ && a.C_ == b.C_ && a.nu_ == b.nu_ && a.table_ == b.table_;
    }

private:
    PhiModel() = default;

    Kind kind_ = Kind::zero;
    double C_ = 0.0;
    double nu_ = 0.0;
    std::vector<Breakpoint> table_;
    // capital_phi restricted to breakpoint i onward; see capital_phi().
    std::vector<double> suffix_ratio_min_;
};

// Running maximum over sample points: phi~(eps) = sup{raw(delta) : delta <= eps}.
// Samples need not be sorted; duplicates in eps keep the larger value.
// All-zero input yields the zero model.
PhiModel monotonize_phi(std::vector<Breakpoint> raw);

// Decimal text (JSON) form: {"kind": ..., parameters or breakpoints}.
std::string serialize_phi(const PhiModel& model);
PhiModel parse_phi(const std::string& text);

}  // namespace saw
