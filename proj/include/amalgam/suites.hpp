#pragma once

#include <map>
#include <string>
#include <vector>

#include "amalgam/instance.hpp"

namespace amalgam {

enum class SuiteStatus { verified, falsified, out_of_hypothesis, skipped };

std::string to_string(SuiteStatus status);

struct SuiteOutcome {
    SuiteStatus status = SuiteStatus::skipped;
    std::string note;
};

struct SuiteDef {
    std::string name;
    std::string kind;       // instance kind the suite applies to
    std::string statement;  // the mathematical assertion it verifies
};

/// Canonical suite list, in report order.
const std::vector<SuiteDef>& suite_definitions();
bool is_known_suite(const std::string& name);

struct SuiteSummary {
    std::string name;
    std::string statement;
    std::size_t verified = 0;
    std::size_t falsified = 0;
    std::size_t out_of_hypothesis = 0;
    std::size_t skipped = 0;
    std::vector<std::pair<std::string, std::string>> failures;  // instance, witness
    std::vector<std::pair<std::string, std::string>> hypothesis_samples;  // capped
};

/// Cross-suite counters the acceptance gate reads.
struct Aggregates {
    std::size_t finite = 0;
    std::size_t semigroup = 0;
    std::size_t scaled = 0;
    std::size_t series = 0;
    std::size_t local_amalgams = 0;
    std::size_t duplications_verified = 0;
    std::size_t embdim_brute_checked = 0;
    std::size_t radical_in_hypothesis = 0;
    std::size_t radical_nontrivial = 0;
    std::size_t hom_lambda_surjective = 0;
    std::size_t hom_lambda_obstructed = 0;
    std::size_t gorenstein_certified = 0;
    std::size_t distinct_semigroups = 0;
    std::size_t symmetric_semigroups = 0;
};

struct Report {
    std::vector<SuiteSummary> suites;
    Aggregates aggregates;
    bool any_falsified = false;
    double elapsed_seconds = 0;

    /// Canonical JSON; timings are excluded unless requested, so that two
    /// runs over identical inputs are byte-identical.
    std::string to_json(bool with_timings = false) const;
    std::string to_table() const;
    int exit_code() const { return any_falsified ? 1 : 0; }
};

struct RunOptions {
    std::vector<std::string> suites;  // empty = all
    unsigned workers = 1;
    std::size_t cap = kDefaultCap;
};

/// Runs the selected suites over the instances. Instances are independent;
/// with workers > 1 they are fanned out and reduced in input order, so the
/// report does not depend on the worker count.
Report run_suites(const std::vector<InstanceSpec>& specs, const RunOptions& options);

}  // namespace amalgam
