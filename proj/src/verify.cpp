#include "saw/verify.hpp"

#include "saw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace saw {

std::string to_string(Status s) {
    switch (s) {
        case Status::holds: return "holds";
        case Status::fails: return "fails";
        case Status::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Status parse_status(const std::string& text) {
    if (text == "holds") return Status::holds;
    if (text == "fails") return Status::fails;
    if (text == "inconclusive") return Status::inconclusive;
    throw MalformedFileError("unknown verdict status '" + text + "'");
}

Evidence Evidence::exact(const BigInt& n) { return {n.str(), n.str()}; }

Evidence Evidence::exact(const Rational& q) {
    if (denominator(q) == 1) return exact(BigInt(numerator(q)));
    return of(EvalValue::of(q));
}

Evidence Evidence::of(EvalValue v) { return {format_double(v.lower), format_double(v.upper)}; }

Status compare(EvalValue lhs, EvalValue rhs) {
    if (lhs.upper <= rhs.lower) return Status::holds;
    if (lhs.lower > rhs.upper) return Status::fails;
    return Status::inconclusive;
}

Status compare(const Rational& lhs, const Rational& rhs) { return lhs <= rhs ? Status::holds : Status::fails; }

Verdict make_verdict(std::string subject, Parameters params, EvalValue lhs, EvalValue rhs) {
    return {compare(lhs, rhs), std::move(subject), std::move(params), Evidence::of(lhs), Evidence::of(rhs), {}};
}

Verdict make_verdict(std::string subject, Parameters params, const Rational& lhs, const Rational& rhs) {
    return {compare(lhs, rhs), std::move(subject), std::move(params), Evidence::exact(lhs), Evidence::exact(rhs), {}};
}

namespace {

std::string str(long long v) { return std::to_string(v); }

Verdict vacuous(std::string subject, std::string why) {
    Verdict v = make_verdict(std::move(subject), {}, Rational(0), Rational(0));
    v.message = "vacuous: " + std::move(why);
    return v;
}

// Largest prefix the oracle can brute-force in well under a second.
int oracle_budget(int dimension, int requested) {
    const double per_length = 2.0 * dimension;
    double total = 0.0;
    int k = -1;
    while (k < requested && k < kOracleMaxLength) {
        total += std::pow(per_length, k + 1);
        if (total > 3e6) break;
        ++k;
    }
    return std::max(k, 0);
}

// Tracks the tightest lhs <= rhs instance (largest lhs/rhs), or the first violation.
struct WorstPair {
    bool any = false;
    bool violated = false;
    BigInt lhs, rhs;
    Parameters where;
    long long checked = 0;

    void offer(const BigInt& l, const BigInt& r, Parameters at) {
        ++checked;
        if (violated) return;
        const bool bad = l > r;
        // l/r > lhs/rhs  <=>  l*rhs > lhs*r (all nonnegative)
        if (bad || !any || l * rhs > lhs * r) {
            any = true;
            violated = bad;
            lhs = l;
            rhs = r;
            where = std::move(at);
        }
    }

    Verdict verdict(std::string subject) const {
        if (!any) return vacuous(std::move(subject), "no index combinations");
        Parameters params = where;
        params.emplace_back("combinations_checked", str(checked));
        Verdict v = make_verdict(std::move(subject), std::move(params), Rational(lhs), Rational(rhs));
        v.message = violated ? "first violation shown" : "tightest instance shown";
        return v;
    }
};

std::vector<std::string> compare_prefix(const Census& a, const std::vector<BigInt>& c, const std::vector<BigInt>& b,
                                        const std::vector<std::vector<BigInt>>& bh, int upto) {
    std::vector<std::string> out;
    for (int n = 0; n <= upto; ++n) {
        const auto un = static_cast<std::size_t>(n);
        if (a.c[un] != c[un]) out.push_back("c[" + str(n) + "]");
        if (a.b[un] != b[un]) out.push_back("b[" + str(n) + "]");
        for (std::size_t h = 0; h <= un; ++h) {
            if (a.bridge_by_height[un][h] != bh[un][h]) {
                out.push_back("bridge_by_height[" + str(n) + "][" + str(static_cast<long long>(h)) + "]");
            }
        }
    }
    return out;
}

Verdict mismatch_verdict(std::string subject, Parameters params, const std::vector<std::string>& mismatches) {
    Verdict v = make_verdict(std::move(subject), std::move(params), Rational(static_cast<long long>(mismatches.size())),
                             Rational(0));
    if (!mismatches.empty()) v.message = "mismatch at " + mismatches.front();
    return v;
}

bool shape_ok(const Census& census) {
    if (census.dimension < 2 || census.max_length < 0) return false;
    const auto size = static_cast<std::size_t>(census.max_length) + 1;
    if (census.c.size() != size || census.b.size() != size || census.bridge_by_height.size() != size) return false;
    for (std::size_t n = 0; n < size; ++n) {
        if (census.bridge_by_height[n].size() != n + 1) return false;
    }
    return true;
}

}  // namespace

std::vector<Verdict> check_census_integrity(const Census& census, int oracle_prefix) {
    std::vector<Verdict> out;
    const auto problems = census_violations(census);
    out.push_back(mismatch_verdict("census.structure", {}, problems));
    if (!problems.empty()) out.back().message = problems.front();

    if (!shape_ok(census)) {
        Verdict v;
        v.subject = "census.oracle_prefix";
        v.message = "census shape is invalid; oracle comparison skipped";
        out.push_back(v);
        v.subject = "census.reference_sequence";
        out.push_back(v);
        return out;
    }

    const int k = std::min(census.max_length, oracle_budget(census.dimension, oracle_prefix));
    const Census oracle = oracle_census(LatticeDim(census.dimension), k);
    out.push_back(mismatch_verdict("census.oracle_prefix", {{"prefix_length", str(k)}},
                                   compare_prefix(census, oracle.c, oracle.b, oracle.bridge_by_height, k)));

    if (const ReferenceCounts* ref = reference_counts(census.dimension)) {
        const int upto = std::min(census.max_length, static_cast<int>(ref->c.size()) - 1);
        out.push_back(mismatch_verdict("census.reference_sequence", {{"prefix_length", str(upto)}},
                                       compare_prefix(census, ref->c, ref->b, ref->bridge_by_height, upto)));
    } else {
        Verdict v;
        v.subject = "census.reference_sequence";
        v.message = "no reference sequence recorded for d = " + str(census.dimension);
        out.push_back(v);
    }
    return out;
}

std::vector<Verdict> check_counting_laws(const Census& census) {
    const int N = census.max_length;
    const auto& c = census.c;
    const auto& b = census.b;
    const auto& bh = census.bridge_by_height;
    const auto at = [](int i) { return static_cast<std::size_t>(i); };

    WorstPair sub, super, height;
    for (int n = 1; n <= N; ++n) {
        for (int m = n; n + m <= N; ++m) {
            sub.offer(c[at(n + m)], c[at(n)] * c[at(m)], {{"n", str(n)}, {"m", str(m)}});
            super.offer(b[at(n)] * b[at(m)], b[at(n + m)], {{"n", str(n)}, {"m", str(m)}});
        }
    }
    // b_{k,n+m} >= sum_{i+j=k} b_{i,n} b_{j,m}; a bridge of height n needs length >= n.
    for (int k = 2; k <= N; ++k) {
        for (int n = 1; n < k; ++n) {
            for (int m = 1; n + m <= k; ++m) {
                BigInt sum = 0;
                for (int i = n; k - i >= m; ++i) sum += bh[at(i)][at(n)] * bh[at(k - i)][at(m)];
                height.offer(sum, bh[at(k)][at(n + m)], {{"k", str(k)}, {"n", str(n)}, {"m", str(m)}});
            }
        }
    }
    return {sub.verdict("counting.submultiplicative_c"), super.verdict("counting.supermultiplicative_b"),
            height.verdict("counting.height_concatenation")};
}

Verdict check_lemma_xizc(const Census& census, const MuBracket& bracket) {
    return check_lemma_xizc(census, bracket, bracket.z_low());
}

Verdict check_lemma_xizc(const Census& census, const MuBracket& bracket, const Rational& z) {
    if (z != bracket.z_low()) {
        throw DomainError("check_lemma_xizc only certifies z = 1/mu_high; other points may exceed z_c");
    }
    const std::string subject = "lemma.bridge_height_series_at_most_one";
    if (census.max_length < 1) return vacuous(subject, "no heights >= 1 enumerated");
    Rational worst = -1;
    int worst_n = 0;
    for (int n = 1; n <= census.max_length; ++n) {
        const Rational a = a_trunc_exact({census, z}, n);
        if (a > worst) {
            worst = a;
            worst_n = n;
        }
    }
    Verdict v = make_verdict(subject, {{"z", "1/mu_high"}, {"mu_high", format_double(bracket.mu_high)},
                                       {"heights", "1.." + str(census.max_length)}, {"max_at_height", str(worst_n)}},
                             worst, Rational(1));
    v.message = "largest a_trunc(1/mu_high, n) shown";
    return v;
}

std::vector<Rational> default_z_grid(const MuBracket& bracket) {
    std::vector<Rational> grid;
    if (!std::isfinite(bracket.mu_high)) return grid;
    const long long denom = 8 * static_cast<long long>(std::ceil(bracket.mu_high));
    for (long long k = 1; k <= 7; ++k) grid.emplace_back(k, denom);
    return grid;
}

std::vector<Verdict> check_madras_slade(const Census& census, const MuBracket& bracket,
                                        const std::vector<Rational>& z_grid, Padding pad) {
    for (const auto& z : z_grid) {
        if (z <= 0) throw DomainError("check_madras_slade: grid points must be positive");
        if (!std::isfinite(bracket.mu_high) || z * exact_rational(bracket.mu_high) >= 1) {
            throw DivergentTailError("check_madras_slade: z * mu_high >= 1 for a grid point");
        }
    }
    std::vector<Verdict> out;
    const auto e = exp_bridge_coeffs(census);
    for (int n = 0; n + 1 <= census.max_length; ++n) {
        out.push_back(make_verdict("madras_slade.coefficient", {{"n", str(n)}},
                                   Rational(census.c[static_cast<std::size_t>(n)]), e[static_cast<std::size_t>(n + 1)]));
    }
    for (const auto& z : z_grid) {
        const EvalValue chi = chi_trunc({census, z});
        const EvalValue bridges = B_tail_bound(census, z, bracket.mu_high, pad);
        const EvalValue exponent = sub(scale(EvalValue::exact(bridges.upper), 2.0), EvalValue::exact(2.0));
        const EvalValue rhs = div(exp(exponent, pad), EvalValue::of(z));
        out.push_back(make_verdict("madras_slade.evaluation", {{"z", z.str()}}, chi, rhs));
    }
    if (out.empty()) out.push_back(vacuous("madras_slade.coefficient", "census too short and empty z grid"));
    return out;
}

std::vector<Verdict> check_hw_explicit(const Census& census, const MuBracket& bracket,
                                       const std::optional<PhiModel>& phi, Padding pad) {
    std::vector<Verdict> out;
    const EvalValue mu = EvalValue::exact(bracket.mu_high);
    for (int n = 3; n <= census.max_length; ++n) {
        const EvalValue rhs = mul(pow(mu, n + 1), exp(hw_explicit_log_bound_enclosure(n, pad), pad));
        out.push_back(make_verdict("hw.explicit", {{"n", str(n)}}, EvalValue::of(census.c[static_cast<std::size_t>(n)]), rhs));
    }
    if (out.empty()) out.push_back(vacuous("hw.explicit", "needs n >= 3"));
    if (phi) {
        for (int n = 0; n <= census.max_length; ++n) {
            const BigPsi bp = big_psi(*phi, n);
            const EvalValue rhs = mul(pow(mu, n + 1), exp(quant_log_enclosure(bp.witness_eps, bp.witness_lambda, n, pad), pad));
            out.push_back(make_verdict("quant.bound",
                                       {{"n", str(n)},
                                        {"eps", format_double(bp.witness_eps)},
                                        {"lambda", format_double(bp.witness_lambda)}},
                                       EvalValue::of(census.c[static_cast<std::size_t>(n)]), rhs));
        }
    }
    return out;
}

Verdict check_dch_form(const Census& census, const PhiModel& phi, Padding pad) {
    const std::string subject = "rate.tall_bridges";
    Verdict worst;
    bool have = false;
    long long checked = 0;
    double worst_margin = -std::numeric_limits<double>::infinity();
    for (int n = 1; n <= census.max_length; ++n) {
        const BigInt& total = census.b[static_cast<std::size_t>(n)];
        for (int m = 1; m <= n; ++m) {
            const double ratio = static_cast<double>(m) / n;
            if (!phi.defined_at(ratio)) {
                throw DomainError("check_dch_form: phi undefined at m/n = " + str(m) + "/" + str(n));
            }
            const EvalValue lhs = EvalValue::of(bridges_reaching(census, n, m));
            const EvalValue decay = exp(neg(scale(EvalValue::exact(phi(ratio)), n)), pad);
            const EvalValue rhs = mul(EvalValue::of(total), decay);
            ++checked;
            Verdict v = make_verdict(subject, {{"n", str(n)}, {"m", str(m)}}, lhs, rhs);
            // Keep the first failure, else the first inconclusive, else the tightest.
            const double margin = lhs.upper / rhs.lower;
            const auto rank = [](Status s) { return s == Status::fails ? 2 : s == Status::inconclusive ? 1 : 0; };
            if (!have || rank(v.status) > rank(worst.status) ||
                (rank(v.status) == rank(worst.status) && v.status == Status::holds && margin > worst_margin)) {
                worst = std::move(v);
                worst_margin = margin;
                have = true;
            }
        }
    }
    if (!have) return vacuous(subject, "no (n, m) pairs");
    worst.parameters.emplace_back("pairs_checked", str(checked));
    worst.message = worst.status == Status::holds ? "tightest pair shown" : "first offending pair shown";
    return worst;
}

std::vector<double> default_eps_grid() { return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}; }

std::vector<Verdict> check_remark_B_lower(const Census& census, const MuBracket& bracket, const PhiModel& phi,
                                          const std::vector<double>& eps_grid, Padding pad) {
    std::vector<Verdict> out;
    const EvalValue one = EvalValue::exact(1.0);
    for (const double eps : eps_grid) {
        if (!(eps > 0.0 && eps < 1.0)) throw DomainError("check_remark_B_lower: eps must lie in (0, 1)");
        Parameters params{{"eps", format_double(eps)}};
        const EvalValue keep = sub(one, EvalValue::exact(eps));

        const Rational z_over = (1 - exact_rational(eps)) / exact_rational(bracket.mu_low);
        if (!std::isfinite(bracket.mu_high) || z_over * exact_rational(bracket.mu_high) >= 1) {
            Verdict v;
            v.subject = "remark.bridge_series_window";
            v.parameters = std::move(params);
            v.message = "mu bracket too loose: (1-eps)/mu_low >= 1/mu_high, tail bound unavailable";
            out.push_back(std::move(v));
            continue;
        }

        const EvalValue half = EvalValue::exact(0.5);
        const EvalValue lower = add(add(one, mul(half, log(div(keep, EvalValue::exact(bracket.mu_high)), pad))),
                                    mul(half, neg(log(EvalValue::exact(eps), pad))));

        const double lambda = psi(phi, eps);
        const EvalValue from_phi =
            lambda == 1.0 ? div(one, EvalValue::exact(eps))
                          : div(one, sub(one, exp(scale(log(keep, pad), lambda), pad)));
        const EvalValue from_tail = B_tail_bound(census, z_over, bracket.mu_high, pad);
        const EvalValue upper{std::min(from_phi.lower, from_tail.upper), std::min(from_phi.upper, from_tail.upper)};
        params.emplace_back("psi", format_double(lambda));
        out.push_back(make_verdict("remark.bridge_series_window", std::move(params), lower, upper));
    }
    if (out.empty()) out.push_back(vacuous("remark.bridge_series_window", "empty eps grid"));
    return out;
}

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(verdicts.begin(), verdicts.end(), [s](const Verdict& v) { return v.status == s; }));
}

namespace {

void validate(const VerifyConfig& config) {
    // libm exp/log are not correctly rounded, so at least one ulp is needed.
    if (config.padding.ulps < 1) throw DomainError("padding must be >= 1 ulp");
    if (config.oracle_prefix < 0) throw DomainError("oracle prefix must be >= 0");
    if (config.z_grid) {
        for (const auto& z : *config.z_grid) {
            if (z <= 0) throw DomainError("z grid points must be positive");
        }
    }
    if (config.eps_grid) {
        for (const double eps : *config.eps_grid) {
            if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps grid points must lie in (0, 1)");
        }
    }
}

}  // namespace

Report run_all(const Census& census, const std::optional<PhiModel>& phi, const VerifyConfig& config) {
    validate(config);
    Report report;
    report.census = {census.dimension, census.max_length, counts_checksum(census)};
    const PhiModel model = phi.value_or(PhiModel::zero());
    report.phi_description = phi ? model.describe() : "zero (default)";

    const auto run = [&](const std::string& name, const std::function<std::vector<Verdict>()>& check) {
        try {
            auto verdicts = check();
            report.verdicts.insert(report.verdicts.end(), verdicts.begin(), verdicts.end());
        } catch (const std::exception& e) {
            Verdict v;
            v.subject = name;
            v.message = std::string("check could not run: ") + e.what();
            report.verdicts.push_back(std::move(v));
        }
    };

    run("census.integrity", [&] { return check_census_integrity(census, config.oracle_prefix); });
    if (!shape_ok(census)) return report;

    const MuBracket bracket = mu_bracket(census);
    report.bracket = bracket;
    const Padding pad = config.padding;
    if (config.z_grid && std::isfinite(bracket.mu_high)) {
        for (const auto& z : *config.z_grid) {
            if (z * exact_rational(bracket.mu_high) >= 1) {
                throw DivergentTailError("z grid point " + z.str() + " is not below 1/mu_high");
            }
        }
    }

    run("counting.laws", [&] { return check_counting_laws(census); });
    run("lemma.bridge_height_series_at_most_one",
        [&] { return std::vector<Verdict>{check_lemma_xizc(census, bracket)}; });
    run("madras_slade", [&] {
        return check_madras_slade(census, bracket, config.z_grid.value_or(default_z_grid(bracket)), pad);
    });
    run("hw.explicit", [&] { return check_hw_explicit(census, bracket, model, pad); });
    run("rate.tall_bridges", [&] { return std::vector<Verdict>{check_dch_form(census, model, pad)}; });
    run("remark.bridge_series_window", [&] {
        return check_remark_B_lower(census, bracket, model, config.eps_grid.value_or(default_eps_grid()), pad);
    });
    return report;
}

}  // namespace saw
