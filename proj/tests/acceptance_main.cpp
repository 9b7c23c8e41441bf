// Acceptance gate: runs every verification suite over the full default
// catalog and checks each release criterion at its stated tolerance. Exact
// set/count identities carry zero tolerance; runtime criteria are pinned in
// seconds. One line per criterion; exit 1 if anything fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "amalgam/catalog.hpp"
#include "amalgam/instance.hpp"
#include "amalgam/suites.hpp"

namespace fs = std::filesystem;
using namespace amalgam;

namespace {

int g_failures = 0;

void criterion(int number, bool ok, const std::string& name, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s - %s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), detail.c_str());
    if (!ok) ++g_failures;
}

const SuiteSummary* find_suite(const Report& report, const std::string& name) {
    for (const auto& suite : report.suites)
        if (suite.name == name) return &suite;
    return nullptr;
}

bool suite_clean(const Report& report, const std::string& name, std::size_t expected_verified) {
    const SuiteSummary* suite = find_suite(report, name);
    return suite && suite->falsified == 0 && suite->verified == expected_verified;
}

std::string run_cli(const std::string& cli, const std::string& args, int* exit_code) {
    std::string command = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    std::string output;
    if (pipe) {
        char buffer[4096];
        std::size_t n;
        while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
        int status = pclose(pipe);
        *exit_code = WEXITSTATUS(status);
    } else {
        *exit_code = -1;
    }
    return output;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; i += 2)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    CatalogBounds bounds;
    std::vector<InstanceSpec> catalog = generate_catalog(bounds);
    std::size_t finite = 0, semigroup_count = 0, scaled = 0, series = 0;
    for (const auto& spec : catalog) {
        if (spec.kind == "finite") ++finite;
        else if (spec.kind == "semigroup") ++semigroup_count;
        else if (spec.kind == "scaled-semigroup") ++scaled;
        else ++series;
    }

    auto t0 = std::chrono::steady_clock::now();
    RunOptions options;
    Report report = run_suites(catalog, options);
    double full_elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    // 1. spectrum partition over the full catalog, 100%, single worker
    {
        bool size_ok = finite >= 1000;
        bool clean = suite_clean(report, "spec-partition", finite);
        bool time_ok = full_elapsed <= 300.0;
        std::ostringstream detail;
        detail << finite << " amalgamation instances, all partitioned; full run "
               << full_elapsed << "s (grace 300s)";
        criterion(1, size_ok && clean && time_ok, "spectrum partition", detail.str());
    }

    // 2. maximality transfer + locality agreement (inside spec-partition),
    //    with the is_local cross-check against the maximal-ideal count
    {
        bool clean = suite_clean(report, "spec-partition", finite);
        const SuiteSummary* bounds_suite = find_suite(report, "embdim-bounds");
        bool locals_consistent =
            bounds_suite && bounds_suite->verified == report.aggregates.local_amalgams;
        std::ostringstream detail;
        detail << report.aggregates.local_amalgams << " local amalgams, zero disagreements";
        criterion(2, clean && locals_consistent, "maximality and locality", detail.str());
    }

    // 3. ideal extension formula, exact set equality on every ideal
    criterion(3, suite_clean(report, "ideal-extension", finite), "ideal extension",
              "closure of iota(I) equals the pair set for every ideal of every A");

    // 4. radical criterion with a genuinely nontrivial in-hypothesis instance
    {
        const SuiteSummary* suite = find_suite(report, "radical");
        bool clean = suite && suite->falsified == 0;
        bool populated = suite && suite->verified >= 1 &&
                         report.aggregates.radical_in_hypothesis >= 1 &&
                         report.aggregates.radical_nontrivial >= 1;
        std::ostringstream detail;
        detail << (suite ? suite->verified : 0) << " in-hypothesis instances, "
               << report.aggregates.radical_nontrivial << " nontrivial";
        criterion(4, clean && populated, "radical of extensions", detail.str());
    }

    // 5. hom criterion, both sides of the equivalence populated
    {
        bool clean = suite_clean(report, "hom-lambda", finite);
        bool both_sides = report.aggregates.hom_lambda_surjective >= 1 &&
                          report.aggregates.hom_lambda_obstructed >= 1;
        std::ostringstream detail;
        detail << report.aggregates.hom_lambda_surjective << " surjective / "
               << report.aggregates.hom_lambda_obstructed << " obstructed";
        criterion(5, clean && both_sides, "hom module criterion", detail.str());
    }

    // 6. embedding dimension bounds + equality + brute-force cross-check +
    //    every duplication instance
    {
        std::size_t locals = report.aggregates.local_amalgams;
        bool bounds_ok = suite_clean(report, "embdim-bounds", locals);
        bool equality_ok = suite_clean(report, "embdim-equality", locals);
        bool brute = report.aggregates.embdim_brute_checked >= 1;
        bool duplications = report.aggregates.duplications_verified >= 10;
        std::ostringstream detail;
        detail << locals << " local instances, " << report.aggregates.duplications_verified
               << " duplications, " << report.aggregates.embdim_brute_checked
               << " brute-force cross-checks";
        criterion(6, bounds_ok && equality_ok && brute && duplications,
                  "embedding dimension", detail.str());
    }

    // 7. multiplicity: semigroup duplications (>= 100 semigroups) and the
    //    scaled oracle, within the two-minute budget
    {
        std::vector<InstanceSpec> arithmetic;
        for (const auto& spec : catalog)
            if (spec.kind == "semigroup" || spec.kind == "scaled-semigroup")
                arithmetic.push_back(spec);
        RunOptions sub_options;
        sub_options.suites = {"duplication-invariants", "scaled-multiplicity"};
        auto t1 = std::chrono::steady_clock::now();
        Report sub = run_suites(arithmetic, sub_options);
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
        bool dup_ok = suite_clean(sub, "duplication-invariants", semigroup_count);
        bool scaled_ok = suite_clean(sub, "scaled-multiplicity", scaled);
        bool enough = sub.aggregates.distinct_semigroups >= 100;
        bool time_ok = elapsed <= 120.0;
        std::ostringstream detail;
        detail << sub.aggregates.distinct_semigroups << " semigroups, " << semigroup_count
               << " duplications, " << scaled << " scaled triples, " << elapsed << "s";
        criterion(7, dup_ok && scaled_ok && enough && time_ok, "multiplicity", detail.str());
    }

    // 8. Gorenstein: semigroup flags (inside duplication-invariants, with
    //    both symmetric and non-symmetric semigroups present) and the
    //    Artinian socle oracle over the certified curated family
    {
        const SuiteSummary* socle = find_suite(report, "gorenstein-socle");
        bool socle_ok = socle && socle->falsified == 0;
        bool certified = report.aggregates.gorenstein_certified >= 4;  // n = 2..5 at least
        bool both_symmetry_classes =
            report.aggregates.symmetric_semigroups >= 1 &&
            report.aggregates.symmetric_semigroups < report.aggregates.distinct_semigroups;
        bool dup_ok = suite_clean(report, "duplication-invariants", semigroup_count);
        std::ostringstream detail;
        detail << report.aggregates.gorenstein_certified << " certified socle instances, "
               << report.aggregates.symmetric_semigroups << "/"
               << report.aggregates.distinct_semigroups << " symmetric semigroups";
        criterion(8, socle_ok && certified && both_symmetry_classes && dup_ok,
                  "Gorenstein criteria", detail.str());
    }

    // 9. series witness grid, exact arithmetic, under a second
    {
        std::vector<InstanceSpec> series_specs;
        for (const auto& spec : catalog)
            if (spec.kind == "series-witness") series_specs.push_back(spec);
        RunOptions sub_options;
        sub_options.suites = {"edimlower-witness"};
        auto t1 = std::chrono::steady_clock::now();
        Report sub = run_suites(series_specs, sub_options);
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
        bool ok = suite_clean(sub, "edimlower-witness", series) && series == 9;
        std::ostringstream detail;
        detail << series << " (p, N) pairs in " << elapsed << "s (limit 1s)";
        criterion(9, ok && elapsed <= 1.0, "series witness", detail.str());
    }

    // 10. harness integrity: corrupted instance falsified with a witness
    //     through the CLI, plus byte-identical reports
    {
        bool ok = true;
        std::string detail;
        if (cli.empty()) {
            ok = false;
            detail = "no --cli path provided";
        } else {
            fs::path dir = fs::temp_directory_path() / "amalgam-acceptance";
            fs::create_directories(dir);
            fs::path instance = dir / "corrupted.json";
            {
                std::ofstream out(instance, std::ios::binary);
                out << R"({
  "format": 1, "kind": "finite", "label": "corrupted-mul",
  "A": {"op": "zmod", "n": 4}, "B": {"op": "zmod", "n": 4},
  "f": {"map": [0, 1, 2, 3]}, "J": [2],
  "corrupt": {"ring": "B", "table": "mul", "row": 1, "col": 2, "value": 1}
})";
            }
            fs::path r1 = dir / "report1.json", r2 = dir / "report2.json";
            int code1 = 0, code2 = 0;
            run_cli(cli, "check --instances " + instance.string() + " --report " +
                             r1.string(), &code1);
            run_cli(cli, "check --instances " + instance.string() + " --report " +
                             r2.string(), &code2);
            std::string report1 = slurp(r1), report2 = slurp(r2);
            bool falsified_code = code1 == 1 && code2 == 1;
            bool witnessed = report1.find("\"witness\"") != std::string::npos &&
                             report1.find("falsified") != std::string::npos &&
                             report1.find("(1,2)") != std::string::npos;
            bool deterministic_cli = !report1.empty() && report1 == report2;

            // determinism of the full catalog report, in process
            Report again = run_suites(catalog, options);
            bool deterministic_full = again.to_json() == report.to_json();

            ok = falsified_code && witnessed && deterministic_cli && deterministic_full;
            std::ostringstream os;
            os << "exit=" << code1 << "/" << code2 << ", witness "
               << (witnessed ? "present" : "missing") << ", CLI report "
               << (deterministic_cli ? "byte-identical" : "differs") << ", catalog report "
               << (deterministic_full ? "byte-identical" : "differs");
            detail = os.str();
        }
        criterion(10, ok, "harness integrity", detail);
    }

    if (report.any_falsified) {
        std::printf("[FAIL] full-catalog run reported falsifications\n");
        ++g_failures;
    }
    std::printf("%s: %d criterion failure(s)\n", g_failures == 0 ? "ACCEPTED" : "REJECTED",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
