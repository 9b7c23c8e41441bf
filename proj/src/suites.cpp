#include "amalgam/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

#include "amalgam/ideal_calculus.hpp"
#include "amalgam/local_invariants.hpp"
#include "amalgam/semigroup.hpp"
#include "amalgam/series_witness.hpp"
#include "amalgam/spectrum.hpp"

namespace amalgam {

using nlohmann::json;

std::string to_string(SuiteStatus status) {
    switch (status) {
        case SuiteStatus::verified: return "verified";
        case SuiteStatus::falsified: return "falsified";
        case SuiteStatus::out_of_hypothesis: return "out-of-hypothesis";
        case SuiteStatus::skipped: return "skipped";
    }
    return "unknown";
}

const std::vector<SuiteDef>& suite_definitions() {
    static const std::vector<SuiteDef> defs = {
        {"canonical-maps", "finite",
         "construction invariants: carrier = {(a, f(a)+j)}, pA o iota = id, "
         "Ker(pA) = 0 x J, Ker(pB) = f^-1(J) x 0, gamma onto (f(A)+J)/J with "
         "kernel f^-1(J) x J, pullback and corestriction realizations agree"},
        {"spec-partition", "finite",
         "Spec(D) = {P |><| J : P in Spec(A)} + {Qbar : Q in Spec(B), J !<= Q}, "
         "disjointly; maximality transfers both ways; D local iff A local and "
         "J <= Jac(B), with maximal ideal M |><| J"},
        {"min-partition", "finite",
         "Min(D) off V(J0) matches Min(B) off V(J); Min(D) inside V(J0) "
         "matches Min(A) minus the excluded locus union V(f^-1(Q+J))"},
        {"localizations", "finite",
         "D at Qbar = B_Q; D at P' = A_P off V(f^-1(J)); D at P' = "
         "A_P |><| J_S over V(f^-1(J)); all via canonical comparison maps"},
        {"gamma-intersection", "finite",
         "Spec((f(A)+J)/J) corresponds bijectively to V(J0) meet V(J1) "
         "through gamma; matches V(J) in Spec(B) when f is onto"},
        {"ideal-extension", "finite",
         "I*D = {(i, f(i)+b) : b in (f(I)B)J} for every ideal I of A; "
         "I |><| H is an ideal whenever f(I)J <= H <= J is a submodule"},
        {"radical", "finite",
         "rad(I*D) = M |><| J for every I with rad(I) = M, when no prime of B "
         "off V(J) pulls back to M; extensions of M-primary ideals are "
         "primary to the maximal ideal when J <= Jac(B)"},
        {"hom-lambda", "finite",
         "the hom module Hom_D(A, D) = Ann_D(J0) is filled by x -> (x, 0) on "
         "f^-1(J) exactly when Ann_{f(A)+J}(J) = 0"},
        {"embdim-bounds", "finite",
         "embdim(A) <= embdim(D) <= embdim(A) + nu(J) over f(A)+J; "
         "length_D(D/(I |><| J)) = length_A(A/I); brute-force nu cross-check"},
        {"embdim-equality", "finite",
         "embdim(D) = embdim(A) + nu(J) when f(M)B and J lie in Jac(B)"},
        {"gorenstein-socle", "finite",
         "socle dimension of D is 1 whenever A is Gorenstein local and J is a "
         "free rank-one A-module through f"},
        {"duplication-invariants", "semigroup",
         "semigroup duplication: e = 2m, embdim = embdim(S) + nu(E), maximal "
         "CM always, Gorenstein exactly for canonical-ideal translates; "
         "|E \\ (x+E)| = x"},
        {"scaled-multiplicity", "scaled-semigroup",
         "e(D) = m + |E \\ (dm+E)| = m(1+d) for the monomial map t^s -> t^(ds), "
         "confirmed against the truncated pair-basis oracle"},
        {"edimlower-witness", "series-witness",
         "for A = Z_(p), B = Q[[T]], J = TB: the maximal ideal of D is "
         "principal (= pD), so embdim(A) = embdim(D) = 1 < 2 = embdim(A)+nu(J)"},
    };
    return defs;
}

bool is_known_suite(const std::string& name) {
    for (const auto& def : suite_definitions())
        if (def.name == name) return true;
    return false;
}

namespace {

struct InstanceRun {
    std::map<std::string, SuiteOutcome> outcomes;
    std::string kind;
    bool local_amalgam = false;
    bool duplication_verified = false;
    bool brute_checked = false;
    bool radical_in_hypothesis = false;
    bool radical_nontrivial = false;
    int hom_side = -1;  // 1 = Lambda surjective, 0 = obstructed
    bool gorenstein_certified = false;
    std::vector<unsigned> semigroup_gens;
    bool symmetric = false;
};

SuiteOutcome verified() { return {SuiteStatus::verified, ""}; }
SuiteOutcome falsified(std::string note) { return {SuiteStatus::falsified, std::move(note)}; }
SuiteOutcome out_of_hyp(std::string note) {
    return {SuiteStatus::out_of_hypothesis, std::move(note)};
}
SuiteOutcome skipped(std::string note) { return {SuiteStatus::skipped, std::move(note)}; }

SuiteOutcome from_check(const CheckResult& check) {
    return check ? verified() : falsified(check.witness);
}

// ---------------------------------------------------------------- finite

SuiteOutcome run_canonical_maps(const FiniteContext& ctx) {
    CheckResult axioms_a = verify_ring_axioms(*ctx.A);
    if (!axioms_a) return falsified(axioms_a.witness);
    CheckResult axioms_b = verify_ring_axioms(*ctx.B);
    if (!axioms_b) return falsified(axioms_b.witness);
    if (!is_ideal(*ctx.B, ctx.J.members)) return falsified("J fails ideal closure in B");

    const AmalgamRing& D = ctx.D;
    // pullback realization: D = {(a, b) : f(a) and b agree in B/J}
    QuotientRing mod_j = quotient(ctx.B, ctx.J);
    std::vector<Elem> pullback;
    for (Elem a = 0; a < ctx.A->size; ++a)
        for (Elem b = 0; b < ctx.B->size; ++b)
            if (mod_j.projection(ctx.f(a)) == mod_j.projection(b))
                pullback.push_back(static_cast<Elem>(a * ctx.B->size + b));
    if (pullback != D.carrier_ambient)
        return falsified("carrier differs from the fiber product over B/J");

    // retraction identity
    for (Elem a = 0; a < ctx.A->size; ++a)
        if (D.pA(D.iota(a)) != a) return falsified("pA o iota != id");

    // corestriction: rebuilding over f(A)+J gives the same pair set
    {
        std::vector<int> pos(ctx.B->size, -1);
        for (std::size_t k = 0; k < D.fAJ.carrier.size(); ++k)
            pos[D.fAJ.carrier[k]] = static_cast<int>(k);
        std::vector<Elem> f_map(ctx.A->size);
        for (Elem a = 0; a < ctx.A->size; ++a) {
            if (pos[ctx.f(a)] < 0) return falsified("f(A) escapes f(A)+J");
            f_map[a] = static_cast<Elem>(pos[ctx.f(a)]);
        }
        RingHom f_core = hom_from_map(ctx.A, D.fAJ.ring, std::move(f_map));
        AmalgamRing reduced = amalgamate(ctx.A, D.fAJ.ring, f_core, D.J_in_fAJ,
                                         ctx.A->size * D.fAJ.ring->size);
        std::set<std::pair<Elem, Elem>> pairs_full, pairs_reduced;
        for (const auto& [a, b] : D.pair_of) pairs_full.insert({a, b});
        for (const auto& [a, b] : reduced.pair_of)
            pairs_reduced.insert({a, D.fAJ.carrier[b]});
        if (pairs_full != pairs_reduced)
            return falsified("corestriction to f(A)+J changes the carrier");
    }

    // kernel / image counting
    IdealSet f_inv_j = preimage(ctx.f, ctx.J);
    if (kernel(D.pB).members.size() != f_inv_j.members.size())
        return falsified("|Ker(pB)| != |f^-1(J)|");
    if (image(D.pB).size() != D.fAJ.carrier.size())
        return falsified("|image(pB)| != |f(A)+J|");
    return verified();
}

SuiteOutcome run_ideal_extension(const FiniteContext& ctx) {
    const AmalgamRing& D = ctx.D;
    for (const IdealSet& I : all_ideals(ctx.A)) {
        CheckResult formula = check_extension_formula(D, I);
        if (!formula) return falsified(formula.witness);

        std::vector<Elem> iota_i;
        for (Elem i : I.members) iota_i.push_back(D.iota(i));
        IdealSet extension = ideal_generated(D.ring, iota_i);

        std::vector<Elem> f_of_i;
        for (Elem i : I.members) f_of_i.push_back(ctx.f(i));
        IdealSet fib = ideal_generated(ctx.B, f_of_i);

        // the three canonical H-choices are all legal joins
        try {
            IdealSet h_formula = ideal_product(fib, ctx.J);
            JoinedIdeal join_formula = join_ideal(D, I, h_formula.members);
            if (join_formula.join.members != extension.members)
                return falsified("I |><| (f(I)B)J differs from the extension");

            std::set<Elem> span;  // additive span of f(I)J
            span.insert(ctx.B->zero);
            {
                std::vector<Elem> products;
                for (Elem i : I.members)
                    for (Elem j : ctx.J.members)
                        products.push_back(ctx.B->mul(ctx.f(i), j));
                bool grew = true;
                for (Elem p : products) span.insert(p);
                while (grew) {
                    grew = false;
                    std::vector<Elem> current(span.begin(), span.end());
                    for (Elem x : current)
                        for (Elem y : current)
                            if (span.insert(ctx.B->add(x, y)).second) grew = true;
                }
            }
            join_ideal(D, I, std::vector<Elem>(span.begin(), span.end()));
            JoinedIdeal join_j = join_ideal(D, I, ctx.J.members);

            if (fib.is_unit() && extension.members != join_j.join.members)
                return falsified("f(I)B = B but I*D != I |><| J");
            if (I.is_unit() && join_j.join.members.size() != D.ring->size)
                return falsified("A |><| J is not the unit ideal");
        } catch (const AmalgamError& e) {
            return falsified(std::string("join hypothesis check failed: ") + e.what());
        }
    }
    return verified();
}

SuiteOutcome run_radical(const FiniteContext& ctx, InstanceRun& run) {
    RadicalReport report;
    CheckResult check = check_radical_corollary(ctx.D, &report);
    if (!check) return falsified(check.witness);
    run.radical_in_hypothesis = report.in_hypothesis;
    run.radical_nontrivial = report.nontrivial;
    if (!report.in_hypothesis) return out_of_hyp(report.out_of_hypothesis_reason);
    return verified();
}

SuiteOutcome run_hom_lambda(const FiniteContext& ctx, InstanceRun& run) {
    HomCriterionReport report;
    CheckResult check = check_hom_description(ctx.D, &report);
    if (!check) return falsified(check.witness);
    run.hom_side = report.lambda_surjective ? 1 : 0;
    return verified();
}

SuiteOutcome run_embdim(const FiniteContext& ctx, InstanceRun& run, bool equality) {
    std::optional<IdealSet> local = is_local_amalgam(ctx.D);
    if (!local)
        return out_of_hyp("D is not local (A local and J <= Jac(B) required)");
    run.local_amalgam = true;
    EmbdimReport report;
    CheckResult check = equality ? check_embdim_equality(ctx.D, &report)
                                 : check_embdim_bounds(ctx.D, &report);
    if (!check) return falsified(check.witness);
    if (equality && report.is_duplication) run.duplication_verified = true;
    if (!equality && report.brute_checked) run.brute_checked = true;
    return verified();
}

SuiteOutcome run_gorenstein_socle(const FiniteContext& ctx, InstanceRun& run) {
    LocalProfile profile_a;
    try {
        profile_a = local_profile(ctx.A);
    } catch (const AmalgamError&) {
        return out_of_hyp("A is not local");
    }
    if (!is_gorenstein_artinian(profile_a)) return out_of_hyp("A is not Gorenstein");

    // J free of rank one over A through f: some j0 has a*j0 sweeping J
    bool free_rank_one = false;
    for (Elem j0 : ctx.J.members) {
        std::set<Elem> swept;
        for (Elem a = 0; a < ctx.A->size; ++a)
            swept.insert(ctx.B->mul(ctx.f(a), j0));
        if (swept.size() == ctx.A->size &&
            std::equal(swept.begin(), swept.end(), ctx.J.members.begin(),
                       ctx.J.members.end()) &&
            ctx.J.members.size() == swept.size()) {
            free_rank_one = true;
            break;
        }
    }
    if (!free_rank_one)
        return out_of_hyp("J is not a free rank-one A-module through f");
    if (!is_local_amalgam(ctx.D)) return out_of_hyp("D is not local");

    run.gorenstein_certified = true;
    LocalProfile profile_d = local_profile(ctx.D.ring);
    if (profile_d.socle_dim != 1)
        return falsified("socle dimension of D is " + std::to_string(profile_d.socle_dim) +
                         ", expected 1");
    return verified();
}

// ------------------------------------------------------------- semigroup

struct SemigroupContext {
    NumericalSemigroup S;
    NumericalSemigroup T;  // scaled instances only
    SemigroupIdeal E;
};

SuiteOutcome run_duplication(const SemigroupContext& ctx, InstanceRun& run) {
    const NumericalSemigroup& S = ctx.S;
    const SemigroupIdeal& E = ctx.E;
    run.semigroup_gens = S.gens;

    DuplicationInvariants inv;
    try {
        inv = duplication_invariants(S, E);
    } catch (const AmalgamError& e) {
        if (e.kind() == ErrorKind::hypothesis_violation) return out_of_hyp(e.what());
        throw;
    }
    const unsigned m = S.multiplicity;
    if (inv.multiplicity != 2 * m)
        return falsified("duplication multiplicity " + std::to_string(inv.multiplicity) +
                         " != 2m = " + std::to_string(2 * m));
    for (unsigned x = 1; x <= 2 * m; ++x) {
        if (!S.contains(x)) continue;  // shifts outside S do not act on E
        if (colength_shift(E, x) != x)
            return falsified("|E \\ (x+E)| != x at x = " + std::to_string(x));
    }
    if (inv.embdim != S.embdim() + nu(E))
        return falsified("duplication embdim != embdim(S) + nu(E)");
    if (!inv.is_cm) return falsified("duplication flagged non-CM");

    // two routes to symmetry: gap reflection (K = S) vs genus counting
    bool symmetric_by_genus = 2 * S.genus() == static_cast<unsigned>(S.frobenius + 1);
    SemigroupIdeal K = canonical_ideal(S);
    bool k_equals_s = true;
    unsigned window = std::max(K.tail_start, S.conductor) + S.multiplicity + 1;
    for (unsigned n = 0; n < window && k_equals_s; ++n)
        if (K.contains(n) != S.contains(n)) k_equals_s = false;
    if (k_equals_s != symmetric_by_genus)
        return falsified("gap reflection and genus counting disagree on symmetry");
    run.symmetric = symmetric_by_genus;

    if (nu(E) == 1 && inv.is_gorenstein != symmetric_by_genus)
        return falsified("principal duplication Gorenstein flag disagrees with symmetry");

    // an integral translate of the canonical ideal must always be flagged
    {
        unsigned e_min = E.min_element();
        unsigned k_min = K.min_element();
        if (e_min >= k_min) {
            unsigned shift = e_min - k_min;
            bool is_translate = true;
            unsigned w = std::max<unsigned>(E.tail_start, K.tail_start + shift) +
                         S.multiplicity + 1;
            for (unsigned n = 0; n < w && is_translate; ++n)
                if (E.contains(n) != K.contains(static_cast<long>(n) - shift))
                    is_translate = false;
            if (is_translate && !inv.is_gorenstein)
                return falsified("canonical-ideal translate not flagged Gorenstein");
        }
    }
    return verified();
}

SuiteOutcome run_scaled(const InstanceSpec& spec, const SemigroupContext& ctx) {
    const NumericalSemigroup& S = ctx.S;
    const NumericalSemigroup& T = ctx.T;
    unsigned result;
    try {
        result = scaled_amalgam_multiplicity(S, spec.d, T, ctx.E);
    } catch (const AmalgamError& e) {
        if (e.kind() == ErrorKind::hypothesis_violation) return out_of_hyp(e.what());
        return falsified(e.what());
    }
    const unsigned m = S.multiplicity;
    if (result != m * (1 + spec.d))
        return falsified("scaled multiplicity " + std::to_string(result) +
                         " != m(1+d) = " + std::to_string(m * (1 + spec.d)));
    if (spec.d == 1 && T.gens == S.gens && result != 2 * m)
        return falsified("duplication via the scaled route is not 2m");
    return verified();
}

SuiteOutcome run_series(const InstanceSpec& spec) {
    try {
        EmbdimWitness witness = witness_embdim_equality(spec.p, spec.prec);
        if (witness.embdim_a != 1 || witness.embdim_d != 1 || witness.upper_bound != 2)
            return falsified("witness embdim record is not {1, 1, < 2}");
    } catch (const AmalgamError& e) {
        return falsified(e.what());
    }
    return verified();
}

// ----------------------------------------------------------------- driver

InstanceRun run_one(const InstanceSpec& spec, const std::vector<std::string>& requested,
                    RingBuilder& builder) {
    InstanceRun run;
    run.kind = spec.kind;

    auto applicable = [&](const std::string& name) {
        for (const auto& def : suite_definitions())
            if (def.name == name) return def.kind == spec.kind;
        return false;
    };

    std::optional<FiniteContext> ctx;
    std::optional<SemigroupContext> sg;
    std::string build_error;
    if (spec.kind == "finite") {
        try {
            ctx = build_finite_context(spec, builder);
        } catch (const AmalgamError& e) {
            // A corrupted instance is expected to fail here: report it as a
            // falsification with the witness. A broken construction invariant
            // is likewise a finding. Bad input or a blown cap propagates.
            bool finding = e.kind() == ErrorKind::invariant_violation;
            if (!spec.corrupt && !finding) throw;
            if (spec.corrupt && e.kind() == ErrorKind::resource_limit) throw;
            build_error = e.what();
        }
    } else if (spec.kind == "semigroup") {
        SemigroupContext context;
        context.S = semigroup(spec.s_gens);
        context.T = context.S;
        context.E = semigroup_ideal(context.S, spec.e_gens);
        sg = std::move(context);
    } else if (spec.kind == "scaled-semigroup") {
        SemigroupContext context;
        context.S = semigroup(spec.s_gens);
        context.T = semigroup(spec.t_gens);
        context.E = semigroup_ideal(context.T, spec.e_gens);
        sg = std::move(context);
    } else if (spec.kind == "series-witness") {
        if (spec.p < 2 || spec.prec < 2)
            fail(ErrorKind::invalid_parameter,
                 "series-witness: p must be prime and N at least 2");
    } else {
        fail(ErrorKind::invalid_parameter, "unknown instance kind " + spec.kind);
    }

    for (const std::string& name : requested) {
        if (!applicable(name)) {
            run.outcomes[name] = skipped("not applicable to kind " + spec.kind);
            continue;
        }
        // an instance may restrict itself to a subset of the suites
        if (!spec.suites.empty() &&
            std::find(spec.suites.begin(), spec.suites.end(), name) == spec.suites.end()) {
            run.outcomes[name] = skipped("not selected by the instance");
            continue;
        }
        try {
            if (spec.kind == "finite") {
                if (!ctx) {
                    run.outcomes[name] = name == "canonical-maps"
                                             ? falsified(build_error)
                                             : skipped("construction failed");
                    continue;
                }
                // zero-ring carriers are admitted for construction but have
                // no spectrum to partition
                bool degenerate = ctx->A->is_zero_ring() || ctx->B->is_zero_ring();
                if ((degenerate &&
                     (name == "spec-partition" || name == "min-partition" ||
                      name == "localizations" || name == "radical" ||
                      name == "embdim-bounds" || name == "embdim-equality" ||
                      name == "gorenstein-socle")) ||
                    (ctx->A->is_zero_ring() && name == "gamma-intersection")) {
                    run.outcomes[name] = out_of_hyp("zero-ring carrier has empty spectrum");
                    continue;
                }
                if (name == "canonical-maps")
                    run.outcomes[name] = run_canonical_maps(*ctx);
                else if (name == "spec-partition")
                    run.outcomes[name] = from_check(check_spec_partition(ctx->D));
                else if (name == "min-partition")
                    run.outcomes[name] = from_check(check_min_partition(ctx->D));
                else if (name == "localizations")
                    run.outcomes[name] = from_check(check_localizations(ctx->D));
                else if (name == "gamma-intersection")
                    run.outcomes[name] = from_check(check_gamma_intersection(ctx->D));
                else if (name == "ideal-extension")
                    run.outcomes[name] = run_ideal_extension(*ctx);
                else if (name == "radical")
                    run.outcomes[name] = run_radical(*ctx, run);
                else if (name == "hom-lambda")
                    run.outcomes[name] = run_hom_lambda(*ctx, run);
                else if (name == "embdim-bounds")
                    run.outcomes[name] = run_embdim(*ctx, run, false);
                else if (name == "embdim-equality")
                    run.outcomes[name] = run_embdim(*ctx, run, true);
                else if (name == "gorenstein-socle")
                    run.outcomes[name] = run_gorenstein_socle(*ctx, run);
            } else if (spec.kind == "semigroup") {
                run.outcomes[name] = run_duplication(*sg, run);
            } else if (spec.kind == "scaled-semigroup") {
                run.outcomes[name] = run_scaled(spec, *sg);
            } else if (spec.kind == "series-witness") {
                run.outcomes[name] = run_series(spec);
            }
        } catch (const AmalgamError& e) {
            run.outcomes[name] = falsified(e.what());
        }
    }
    return run;
}

}  // namespace

Report run_suites(const std::vector<InstanceSpec>& specs, const RunOptions& options) {
    auto start = std::chrono::steady_clock::now();

    std::vector<std::string> requested = options.suites;
    if (requested.empty()) {
        for (const auto& def : suite_definitions()) requested.push_back(def.name);
    } else {
        for (const auto& name : requested)
            if (!is_known_suite(name))
                fail(ErrorKind::usage, "unknown suite '" + name + "'");
    }

    std::vector<InstanceRun> runs(specs.size());
    unsigned workers = std::max(1u, options.workers);
    if (workers == 1) {
        RingBuilder builder(options.cap);
        for (std::size_t i = 0; i < specs.size(); ++i)
            runs[i] = run_one(specs[i], requested, builder);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                try {
                    RingBuilder builder(options.cap);
                    for (std::size_t i = w; i < specs.size(); i += workers)
                        runs[i] = run_one(specs[i], requested, builder);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& thread : pool) thread.join();
        for (auto& error : errors)
            if (error) std::rethrow_exception(error);
    }

    Report report;
    std::set<std::vector<unsigned>> distinct_semigroups;
    for (const auto& def : suite_definitions()) {
        if (std::find(requested.begin(), requested.end(), def.name) == requested.end())
            continue;
        SuiteSummary summary;
        summary.name = def.name;
        summary.statement = def.statement;
        for (std::size_t i = 0; i < specs.size(); ++i) {
            auto it = runs[i].outcomes.find(def.name);
            if (it == runs[i].outcomes.end()) continue;
            const SuiteOutcome& outcome = it->second;
            switch (outcome.status) {
                case SuiteStatus::verified: ++summary.verified; break;
                case SuiteStatus::falsified:
                    ++summary.falsified;
                    summary.failures.emplace_back(specs[i].label, outcome.note);
                    break;
                case SuiteStatus::out_of_hypothesis:
                    ++summary.out_of_hypothesis;
                    if (summary.hypothesis_samples.size() < 5)
                        summary.hypothesis_samples.emplace_back(specs[i].label, outcome.note);
                    break;
                case SuiteStatus::skipped: ++summary.skipped; break;
            }
        }
        if (summary.falsified > 0) report.any_falsified = true;
        report.suites.push_back(std::move(summary));
    }

    Aggregates& agg = report.aggregates;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const InstanceRun& run = runs[i];
        if (run.kind == "finite") ++agg.finite;
        else if (run.kind == "semigroup") ++agg.semigroup;
        else if (run.kind == "scaled-semigroup") ++agg.scaled;
        else if (run.kind == "series-witness") ++agg.series;
        if (run.local_amalgam) ++agg.local_amalgams;
        if (run.duplication_verified) ++agg.duplications_verified;
        if (run.brute_checked) ++agg.embdim_brute_checked;
        if (run.radical_in_hypothesis) ++agg.radical_in_hypothesis;
        if (run.radical_nontrivial) ++agg.radical_nontrivial;
        if (run.hom_side == 1) ++agg.hom_lambda_surjective;
        if (run.hom_side == 0) ++agg.hom_lambda_obstructed;
        if (run.gorenstein_certified) ++agg.gorenstein_certified;
        if (!run.semigroup_gens.empty()) {
            if (distinct_semigroups.insert(run.semigroup_gens).second && run.symmetric)
                ++agg.symmetric_semigroups;
        }
    }
    agg.distinct_semigroups = distinct_semigroups.size();

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string Report::to_json(bool with_timings) const {
    json j;
    j["format"] = 1;
    j["status"] = any_falsified ? "falsified" : "verified";
    j["catalog"] = {{"instances", aggregates.finite + aggregates.semigroup +
                                      aggregates.scaled + aggregates.series},
                    {"finite", aggregates.finite},
                    {"semigroup", aggregates.semigroup},
                    {"scaled", aggregates.scaled},
                    {"series", aggregates.series}};
    j["aggregates"] = {
        {"local_amalgams", aggregates.local_amalgams},
        {"duplications_verified", aggregates.duplications_verified},
        {"embdim_brute_checked", aggregates.embdim_brute_checked},
        {"radical_in_hypothesis", aggregates.radical_in_hypothesis},
        {"radical_nontrivial", aggregates.radical_nontrivial},
        {"hom_lambda_surjective", aggregates.hom_lambda_surjective},
        {"hom_lambda_obstructed", aggregates.hom_lambda_obstructed},
        {"gorenstein_certified", aggregates.gorenstein_certified},
        {"distinct_semigroups", aggregates.distinct_semigroups},
        {"symmetric_semigroups", aggregates.symmetric_semigroups},
    };
    j["suites"] = json::array();
    for (const auto& suite : suites) {
        json s;
        s["name"] = suite.name;
        s["statement"] = suite.statement;
        s["verified"] = suite.verified;
        s["falsified"] = suite.falsified;
        s["out_of_hypothesis"] = suite.out_of_hypothesis;
        s["skipped"] = suite.skipped;
        s["failures"] = json::array();
        for (const auto& [label, witness] : suite.failures)
            s["failures"].push_back({{"instance", label}, {"witness", witness}});
        s["out_of_hypothesis_samples"] = json::array();
        for (const auto& [label, reason] : suite.hypothesis_samples)
            s["out_of_hypothesis_samples"].push_back(
                {{"instance", label}, {"reason", reason}});
        j["suites"].push_back(std::move(s));
    }
    if (with_timings) j["elapsed_seconds"] = elapsed_seconds;
    return j.dump(2) + "\n";
}

std::string Report::to_table() const {
    std::ostringstream os;
    for (const auto& suite : suites) {
        os << (suite.falsified ? "[FAIL] " : "[ OK ] ");
        os << suite.name;
        for (std::size_t pad = suite.name.size(); pad < 24; ++pad) os << ' ';
        os << "verified=" << suite.verified << " falsified=" << suite.falsified
           << " out-of-hyp=" << suite.out_of_hypothesis << " skipped=" << suite.skipped
           << "\n       " << suite.statement << "\n";
        for (const auto& [label, witness] : suite.failures)
            os << "       FALSIFIED " << label << ": " << witness << "\n";
    }
    os << (any_falsified ? "RESULT: FALSIFIED\n" : "RESULT: all verified\n");
    return os.str();
}

}  // namespace amalgam
