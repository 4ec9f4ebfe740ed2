#pragma once

#include "saw/bounds.hpp"
#include "saw/census.hpp"
#include "saw/genfun.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace saw {

enum class Status { holds, fails, inconclusive };

std::string to_string(Status s);
Status parse_status(const std::string& text);

// Decimal endpoints of an enclosure; exact values have lower == upper.
struct Evidence {
    std::string lower;
    std::string upper;

    static Evidence exact(const BigInt& n);
    static Evidence exact(const Rational& q);
    static Evidence of(EvalValue v);

    friend bool operator==(const Evidence&, const Evidence&) = default;
};

using Parameters = std::vector<std::pair<std::string, std::string>>;

// Outcome of one "lhs <= rhs" comparison:
//   holds        upper(lhs) <= lower(rhs)
//   fails        lower(lhs) >  upper(rhs)
//   inconclusive otherwise
struct Verdict {
    Status status = Status::inconclusive;
    std::string subject;
    Parameters parameters;
    Evidence lhs;
    Evidence rhs;
    std::string message;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

Status compare(EvalValue lhs, EvalValue rhs);
Status compare(const Rational& lhs, const Rational& rhs);

Verdict make_verdict(std::string subject, Parameters params, EvalValue lhs, EvalValue rhs);
Verdict make_verdict(std::string subject, Parameters params, const Rational& lhs, const Rational& rhs);

// Shape and sum rules, oracle agreement on a short prefix, and the frozen
// reference sequences where available.
std::vector<Verdict> check_census_integrity(const Census& census, int oracle_prefix = 8);

// Submultiplicativity of c, supermultiplicativity of b, and the height-resolved
// concatenation bound b_{k,n+m} >= sum_{i+j=k} b_{i,n} b_{j,m}. Exact.
std::vector<Verdict> check_counting_laws(const Census& census);

// a_trunc(1/mu_high, n) <= 1 for 1 <= n <= N, the finite form of xi(z_c) >= 0.
Verdict check_lemma_xizc(const Census& census, const MuBracket& bracket);
// Only z == bracket.z_low() is accepted; anything else is a DomainError.
Verdict check_lemma_xizc(const Census& census, const MuBracket& bracket, const Rational& z);

// {k / (8 ceil(mu_high)) : k = 1..7}
std::vector<Rational> default_z_grid(const MuBracket& bracket);

// Coefficient form c_n <= e_{n+1} for n <= N-1, then the evaluation form
// chi_trunc(z) <= exp(2 B_tail_bound(z) - 2) / z on the grid.
std::vector<Verdict> check_madras_slade(const Census& census, const MuBracket& bracket,
                                        const std::vector<Rational>& z_grid, Padding pad = {});

// c_n <= mu_high^{n+1} exp(hw_explicit_log_bound(n)) for 3 <= n <= N and, when
// phi is given, c_n <= mu_high^{n+1} exp(Psi(n) - 2) for 0 <= n <= N.
std::vector<Verdict> check_hw_explicit(const Census& census, const MuBracket& bracket,
                                       const std::optional<PhiModel>& phi, Padding pad = {});

// A(n,m) <= b_n exp(-phi(m/n) n) for all 1 <= m <= n <= N.
// Throws DomainError if phi is undefined at some m/n.
Verdict check_dch_form(const Census& census, const PhiModel& phi, Padding pad = {});

// 1 + log((1-eps)/mu_high)/2 + log(1/eps)/2 <= min{bridge_genfun_upper(phi, eps),
// B_tail_bound((1-eps)/mu_low)}. Inconclusive when the tail bound does not apply.
std::vector<Verdict> check_remark_B_lower(const Census& census, const MuBracket& bracket,
                                          const PhiModel& phi, const std::vector<double>& eps_grid,
                                          Padding pad = {});

std::vector<double> default_eps_grid();

struct VerifyConfig {
    std::optional<std::vector<Rational>> z_grid;
    std::optional<std::vector<double>> eps_grid;
    Padding padding;
    int oracle_prefix = 8;
};

struct CensusDescriptor {
    int dimension = 0;
    int max_length = 0;
    std::string checksum;
};

struct Report {
    CensusDescriptor census;
    std::optional<MuBracket> bracket;
    std::string phi_description;
    std::vector<Verdict> verdicts;
    std::string timestamp;
    std::string toolkit_version;

    std::size_t count(Status s) const;
};

// Runs every registered check. A check that throws becomes an inconclusive
// verdict carrying the message. Without phi the zero model is used.
Report run_all(const Census& census, const std::optional<PhiModel>& phi, const VerifyConfig& config = {});

std::string serialize_report(const Report& report);
Report parse_report(const std::string& text);
std::string render_table(const Report& report);

// Frozen sequences for d = 2 and d = 3; empty when none is recorded.
struct ReferenceCounts {
    std::vector<BigInt> c;
    std::vector<BigInt> b;
    std::vector<std::vector<BigInt>> bridge_by_height;
};
const ReferenceCounts* reference_counts(int dimension);

}  // namespace saw
