#include "jumpfree/subsetsum.hpp"

#include <chrono>
#include <future>

namespace jumpfree {

namespace {

    using Clock = std::chrono::steady_clock;

    double elapsed_ms(Clock::time_point start)
    {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    std::uint64_t power(std::size_t base, std::size_t exp)
    {
        std::uint64_t r = 1;
        while (exp--) r *= base;
        return r;
    }

} // namespace

ExperimentReport run_subset_sum_experiment(const Family &fam, std::size_t p, const GammaTriple &gammas,
                                          SolverMethod method)
{
    if (p < 2) throw std::invalid_argument("experiment: p must be >= 2");

    ExperimentReport report;
    report.k = fam.k();
    report.p = p;
    report.gammas = gammas;
    report.method = method;

    auto start = Clock::now();
    report.witness = find_regressively_regular_witness(fam, p);
    report.timings.search_ms = elapsed_ms(start);
    if (!report.witness) {
        report.outcome = ExperimentReport::Outcome::NoWitness;
        return report;
    }
    report.outcome = ExperimentReport::Outcome::Completed;

    start = Clock::now();
    const auto &f = member(fam, report.witness->function_id);
    auto sets = build_fh(f, report.witness->cube, gammas, Semantics::Multiset);
    report.f_set = std::move(sets.f_set);
    report.h_set = std::move(sets.h_set);
    report.timings.build_ms = elapsed_ms(start);

    report.fh_equal = fh_equal(report.f_set, report.h_set);
    report.cardinality_ok = report.f_set.total_size() == power(p, fam.k());

    const auto timed_solve = [method](const IntMultiset &ms, double &ms_out) {
        const auto t0 = Clock::now();
        auto cert = solve_subset_sum(ms, method);
        ms_out = elapsed_ms(t0);
        return cert;
    };
    auto solve_h = std::async(std::launch::async, timed_solve, std::cref(report.h_set), std::ref(report.timings.solve_h_ms));
    report.certificate_f = timed_solve(report.f_set, report.timings.solve_f_ms);
    report.certificate_h = solve_h.get();

    report.solvable_f = report.certificate_f.has_value();
    report.solvable_h = report.certificate_h.has_value();
    report.agreement = report.solvable_f == report.solvable_h;
    return report;
}

} // namespace jumpfree
