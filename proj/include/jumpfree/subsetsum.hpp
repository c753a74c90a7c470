#pragma once

// Target-zero subset sum over integer multisets, and the experiment that
// compares solvability of F and H for a regressively regular witness.

#include "jumpfree/families.hpp"
#include "jumpfree/intsets.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace jumpfree {

/// A solver refused an input that exceeds its size guard. Distinct from
/// "no solution".
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A nonempty sub-multiset with its sum.
struct SubsetCertificate {
    IntMultiset chosen;
    Int sum = 0;

    friend bool operator==(const SubsetCertificate &, const SubsetCertificate &) = default;
};

enum class SolverMethod { Exhaustive, Dp, Mitm };

std::string_view to_string(SolverMethod m);
SolverMethod parse_solver_method(std::string_view name);

inline constexpr std::uint64_t exhaustive_max_size = 24;
inline constexpr std::uint64_t dp_max_weight = 10'000'000;
inline constexpr std::uint64_t mitm_max_size = 40;

/// Searches for a nonempty sub-multiset summing to zero; the empty subset
/// never counts. Throws CapacityError when the method's guard is exceeded:
///   exhaustive  totalSize <= 24
///   dp          sum of |value| * multiplicity <= 10^7
///   mitm        totalSize <= 40
std::optional<SubsetCertificate> solve_subset_sum(const IntMultiset &ms, SolverMethod method);

/// Every sum attained by some nonempty sub-multiset, ascending, as computed
/// by the dp table. Same guard as the dp method.
std::vector<Int> dp_reachable_sums(const IntMultiset &ms);

/// True when `cert` is nonempty, within `ms`, and sums to zero.
bool is_valid_certificate(const SubsetCertificate &cert, const IntMultiset &ms);

struct ExperimentTimings {
    double search_ms = 0;
    double build_ms = 0;
    double solve_f_ms = 0;
    double solve_h_ms = 0;
};

struct ExperimentReport {
    enum class Outcome { Completed, NoWitness };

    Outcome outcome = Outcome::NoWitness;
    std::size_t k = 0;
    std::size_t p = 0;
    GammaTriple gammas;
    SolverMethod method = SolverMethod::Dp;
    std::optional<WitnessResult> witness;
    IntMultiset f_set;
    IntMultiset h_set;
    std::optional<SubsetCertificate> certificate_f;
    std::optional<SubsetCertificate> certificate_h;
    bool fh_equal = false;
    bool solvable_f = false;
    bool solvable_h = false;
    bool agreement = false;
    bool cardinality_ok = false;
    ExperimentTimings timings;
};

/// Finds a witness, builds F and H under multiset semantics, and solves both
/// (concurrently). Timings are informational only.
ExperimentReport run_subset_sum_experiment(const Family &fam, std::size_t p, const GammaTriple &gammas,
                                          SolverMethod method);

} // namespace jumpfree
