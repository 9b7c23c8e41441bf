#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "amalgam/catalog.hpp"
#include "amalgam/instance.hpp"
#include "amalgam/spectrum.hpp"
#include "amalgam/suites.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int exit_code_for(const amalgam::AmalgamError& e) {
    switch (e.kind()) {
        case amalgam::ErrorKind::resource_limit: return 3;
        default: return 2;
    }
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) amalgam::fail(amalgam::ErrorKind::usage, "cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<amalgam::InstanceSpec> load_instances(const std::string& source) {
    std::vector<amalgam::InstanceSpec> specs;
    fs::path path(source);
    if (fs::is_directory(path)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(path)) {
            if (entry.path().extension() != ".json") continue;
            if (entry.path().filename() == "manifest.json") continue;
            files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            auto batch = amalgam::parse_instances(read_file(file));
            specs.insert(specs.end(), batch.begin(), batch.end());
        }
    } else {
        specs = amalgam::parse_instances(read_file(path));
    }
    return specs;
}

std::size_t resolve_cap(std::size_t cli_cap, bool cap_given) {
    if (cap_given) return cli_cap;
    if (const char* env = std::getenv("AMALGAM_CAP")) {
        char* end = nullptr;
        unsigned long value = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && value > 0) return value;
        amalgam::fail(amalgam::ErrorKind::usage, "AMALGAM_CAP is not a positive integer");
    }
    return amalgam::kDefaultCap;
}

std::vector<std::string> split_suites(const std::string& list) {
    std::vector<std::string> names;
    std::string current;
    for (char c : list) {
        if (c == ',') {
            if (!current.empty()) names.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) names.push_back(current);
    return names;
}

int cmd_check(const std::string& instances, const std::string& suites,
              const std::string& report_path, const std::string& format,
              unsigned workers, std::size_t cap, bool cap_given, bool timings) {
    std::vector<amalgam::InstanceSpec> specs;
    if (instances.empty()) {
        amalgam::CatalogBounds bounds;
        bounds.cap = resolve_cap(cap, cap_given);
        specs = amalgam::generate_catalog(bounds);
    } else {
        specs = load_instances(instances);
    }

    amalgam::RunOptions options;
    options.suites = split_suites(suites);
    options.workers = workers;
    options.cap = resolve_cap(cap, cap_given);
    amalgam::Report report = amalgam::run_suites(specs, options);

    std::string rendered =
        format == "table" ? report.to_table() : report.to_json(timings);
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        out << rendered;
        std::cout << report.to_table();
    } else {
        std::cout << rendered;
    }
    return report.exit_code();
}

int cmd_catalog(const std::string& bounds_path, const std::string& out_dir) {
    amalgam::CatalogBounds bounds;
    if (!bounds_path.empty())
        bounds = amalgam::bounds_from_json(json::parse(read_file(bounds_path)));
    std::vector<amalgam::InstanceSpec> specs = amalgam::generate_catalog(bounds);

    fs::create_directories(out_dir);
    std::map<std::string, json> shards;
    for (const auto& spec : specs) shards[spec.kind].push_back(amalgam::to_json(spec));
    json manifest;
    manifest["format"] = 1;
    manifest["bounds"] = amalgam::bounds_to_json(bounds);
    manifest["total"] = specs.size();
    for (const auto& [kind, array] : shards) {
        std::string name = kind + ".json";
        std::ofstream out(fs::path(out_dir) / name, std::ios::binary);
        out << array.dump(2) << "\n";
        manifest["shards"][name] = array.size();
    }
    std::ofstream out(fs::path(out_dir) / "manifest.json", std::ios::binary);
    out << manifest.dump(2) << "\n";
    std::cout << "catalog: " << specs.size() << " instances in " << out_dir << "\n";
    return 0;
}

int cmd_spec(const std::string& instance_path, std::size_t cap, bool cap_given) {
    auto specs = amalgam::parse_instances(read_file(instance_path));
    amalgam::RingBuilder builder(resolve_cap(cap, cap_given));
    json out = json::array();
    for (const auto& spec : specs) {
        if (spec.kind != "finite")
            amalgam::fail(amalgam::ErrorKind::usage,
                          "spec subcommand handles finite instances only");
        amalgam::FiniteContext ctx = amalgam::build_finite_context(spec, builder);
        amalgam::SpecReport spec_d = amalgam::primes(ctx.D.ring);
        amalgam::SpecReport spec_a = amalgam::primes(ctx.A);
        amalgam::SpecReport spec_b = amalgam::primes(ctx.B);

        json entry;
        entry["instance"] = spec.label.empty() ? "(unlabeled)" : spec.label;
        entry["ring"] = ctx.D.ring->label;
        entry["size"] = ctx.D.ring->size;
        entry["primes"] = json::array();
        for (const auto& prime : spec_d.primes) {
            json p;
            p["members"] = prime.ideal.members;
            p["size"] = prime.ideal.members.size();
            std::string origin = "?";
            for (std::size_t i = 0; i < spec_a.primes.size(); ++i)
                if (amalgam::lift_prime_A(ctx.D, spec_a.primes[i].ideal).ideal.members ==
                    prime.ideal.members)
                    origin = "A#" + std::to_string(i);
            for (std::size_t i = 0; i < spec_b.primes.size(); ++i) {
                const auto& q = spec_b.primes[i].ideal;
                bool contains_j = std::includes(q.members.begin(), q.members.end(),
                                                ctx.J.members.begin(), ctx.J.members.end());
                if (contains_j) continue;
                if (amalgam::lift_prime_B(ctx.D, q).ideal.members == prime.ideal.members)
                    origin = "B#" + std::to_string(i);
            }
            p["origin"] = origin;
            entry["primes"].push_back(std::move(p));
        }
        entry["maximal"] = spec_d.maximal_indices;
        entry["minimal"] = spec_d.minimal_indices;
        out.push_back(std::move(entry));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"amalgamated-algebra verification harness"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "run verification suites over instances");
    std::string instances, suites, report_path, format = "json";
    unsigned workers = 1;
    std::size_t cap = amalgam::kDefaultCap;
    bool timings = false;
    check->add_option("--instances", instances,
                      "instance file or directory (default: built-in catalog)");
    check->add_option("--suites", suites, "comma-separated suite names (default: all)");
    check->add_option("--report", report_path, "write the report to this path");
    check->add_option("--format", format, "report format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    check->add_option("--workers", workers, "worker threads (default 1)");
    auto* cap_option = check->add_option("--cap", cap, "carrier size cap (default 256)");
    check->add_flag("--timings", timings, "include wall-clock timings in the report");

    auto* catalog = app.add_subcommand("catalog", "write the instance catalog to a directory");
    std::string bounds_path, out_dir = "catalog";
    catalog->add_option("--bounds", bounds_path, "bounds JSON file (default: built-in)");
    catalog->add_option("--out", out_dir, "output directory")->required();

    auto* spec_cmd = app.add_subcommand("spec", "print the prime spectrum of an instance");
    std::string instance_path;
    std::size_t spec_cap = amalgam::kDefaultCap;
    spec_cmd->add_option("--instance", instance_path, "instance file")->required();
    auto* spec_cap_option = spec_cmd->add_option("--cap", spec_cap, "carrier size cap");

    try {
        app.parse(argc, argv);
        if (check->parsed())
            return cmd_check(instances, suites, report_path, format, workers, cap,
                             cap_option->count() > 0, timings);
        if (catalog->parsed()) return cmd_catalog(bounds_path, out_dir);
        if (spec_cmd->parsed())
            return cmd_spec(instance_path, spec_cap, spec_cap_option->count() > 0);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    } catch (const amalgam::AmalgamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 2;
}
