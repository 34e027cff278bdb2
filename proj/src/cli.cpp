#include "suitable/cli.hpp"

#include "suitable/formats.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

namespace suitable {

namespace {

    std::vector<int> parse_int_list(const std::string& text)
    {
        std::vector<int> values;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(item, &used);
            }
            catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != item.size())
                throw InvalidArgument("expected a comma-separated integer list, got '" + text + "'");
            values.push_back(value);
        }
        if (values.empty())
            throw InvalidArgument("empty integer list");
        return values;
    }

    std::string join(const std::vector<int>& values, const char* sep = ",")
    {
        std::string out;
        for (std::size_t i = 0; i < values.size(); ++i)
            out += (i ? sep : "") + std::to_string(values[i]);
        return out;
    }

    int exit_for(Status status)
    {
        switch (status) {
        case Status::certified: return exit_ok;
        case Status::falsified: return exit_falsified;
        case Status::unknown: break;
        }
        return exit_unknown;
    }

    void print_verdict(std::ostream& out, const Verdict& verdict, const PermutationArray& core, int t)
    {
        out << "tier     " << to_string(verdict.tier) << '\n';
        out << "status   " << to_string(verdict.status) << '\n';
        out << "subsets  " << verdict.stats.subsets_examined << '\n';
        out << "time     " << std::fixed << std::setprecision(3) << verdict.stats.elapsed_ms << " ms\n";
        out.unsetf(std::ios::floatfield);
        if (verdict.witness) {
            const ViolationWitness& w = *verdict.witness;
            const long long need = static_cast<long long>(t) + 1 - static_cast<long long>(core.n_symbols())
                + static_cast<long long>(w.t_set.size());
            out << "witness  sigma=" << w.sigma << " T={" << join(w.t_set) << "} c_pre=" << w.count
                << " < " << need << '\n';
        }
        if (! verdict.note.empty())
            out << "note     " << verdict.note << '\n';
    }

    void emit_json(std::ostream& out, const Json& j, const std::string& path)
    {
        if (path.empty() || path == "-")
            out << j.dump(2) << '\n';
        else
            write_text_file(path, j.dump(2) + "\n");
    }

    // --- construct --------------------------------------------------------

    struct ConstructArgs {
        std::string route = "packing";
        int t = 0, v = 0, s = 0, delta = 1, alpha = 3, l = 0;
        std::string k;
        std::uint64_t seed = 0;
        std::string out;
        bool force = false;
        unsigned jobs = 1;
        std::uint64_t budget = 400000;
        CLI::Option* t_opt = nullptr;
        CLI::Option* v_opt = nullptr;
        CLI::Option* s_opt = nullptr;
        CLI::Option* delta_opt = nullptr;
        CLI::Option* alpha_opt = nullptr;
        CLI::Option* l_opt = nullptr;
    };

    int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err)
    {
        const Route route = route_from_string(a.route);
        const bool by_strength = a.t_opt->count() || a.v_opt->count();
        BuildSpec spec;
        if (by_strength) {
            if (! a.t_opt->count() || ! a.v_opt->count())
                throw InvalidArgument("--t and --v go together");
            if (a.s_opt->count() || a.delta_opt->count() || a.alpha_opt->count())
                throw InvalidArgument("give either --t/--v or --s/--delta/--alpha, not both");
            spec = BuildSpec::from_strength(a.t, a.v, a.l, route);
        }
        else {
            if (! a.s_opt->count())
                throw InvalidArgument("need --t and --v, or --s (with optional --delta, --alpha)");
            spec.s = a.s;
            spec.delta = a.delta;
            spec.alpha = a.alpha;
            spec.l = a.l;
            spec.route = route;
        }
        spec.seed = a.seed;
        if (! a.k.empty()) {
            if (route != Route::ramsey)
                throw InvalidArgument("--k applies to the ramsey route only");
            spec.k_vec = parse_int_list(a.k);
            if (! a.l_opt->count())
                spec.l = std::accumulate(spec.k_vec.begin(), spec.k_vec.end(), 0);
        }
        if (! a.l_opt->count() && spec.k_vec.empty())
            throw InvalidArgument("--l is required (or --k for the ramsey route)");

        if (const std::string reason = infeasibility(spec); ! reason.empty()) {
            err << "infeasible: " << reason << '\n';
            if (! a.force)
                return exit_infeasible;
            err << "continuing because of --force\n";
        }

        BuildOptions options;
        options.verify = default_verify_options();
        options.verify.jobs = a.jobs;
        options.packing.jobs = a.jobs;
        options.coloring.jobs = a.jobs;
        options.coloring_budget = a.budget;

        CoreWitness witness;
        try {
            witness = build_core(spec, options);
        }
        catch (const PackingError& e) {
            err << "build failed: " << e.what() << " (best packing had " << e.best_size << " blocks)\n";
            return exit_unknown;
        }
        catch (const BuildError& e) {
            err << "build failed: " << e.what() << '\n';
            return exit_unknown;
        }

        emit_json(out, witness_to_json(witness), a.out);
        if (! a.out.empty() && a.out != "-") {
            out << "wrote (" << witness.core.n_rows() << "," << witness.core.n_symbols() << "," << witness.params.t
                << ") core to " << a.out << '\n';
            print_verdict(out, witness.certificate, witness.core, witness.params.t);
        }
        return exit_for(witness.certificate.status);
    }

    // --- verify -----------------------------------------------------------

    struct VerifyArgs {
        std::string path;
        std::string mode = "auto";
        int t = 0;
        CLI::Option* t_opt = nullptr;
        std::uint64_t trials = 10000;
        std::uint64_t seed = 0;
        unsigned jobs = 1;
    };

    int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
    {
        if (a.mode == "sample" && a.trials == 0) {
            err << "--trials must be at least 1\n";
            return exit_usage;
        }
        CoreWitness file;
        try {
            file = read_witness_file(a.path);
        }
        catch (const Error& e) {
            err << "parse error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const nlohmann::json::exception& e) {
            err << "parse error: " << e.what() << '\n';
            return exit_usage;
        }
        const int t = a.t_opt->count() ? a.t : file.params.t;
        VerifyOptions options = default_verify_options();
        options.jobs = a.jobs;

        Verdict verdict;
        if (a.mode == "auto")
            verdict = certify_core(file.core, t, options);
        else if (a.mode == "exact")
            verdict = verify_exact(file.core, t, options);
        else if (a.mode == "condition_ii")
            verdict = verify_condition_ii(file.core, t, options);
        else if (a.mode == "shallow")
            verdict = verify_shallow(file.core, t, options);
        else if (a.mode == "necessary")
            verdict = verify_necessary(file.core, t);
        else if (a.mode == "sample")
            verdict = sample_falsify(file.core, t, a.trials, a.seed);
        else
            throw InvalidArgument("unknown mode '" + a.mode + "'");

        out << "core     (" << file.core.n_rows() << "," << file.core.n_symbols() << "," << t << ")\n";
        print_verdict(out, verdict, file.core, t);
        const std::string fresh = verdict_to_json(verdict, false).dump();
        if (file.provenance.route != "input" && ! a.t_opt->count()) {
            const std::string stored = verdict_to_json(file.certificate, false).dump();
            out << "embedded " << (fresh == stored ? "matches" : "differs") << '\n';
        }
        out << fresh << '\n';
        return exit_for(verdict.status);
    }

    // --- bounds -----------------------------------------------------------

    struct BoundsArgs {
        std::string formula;
        std::string k;
        int l = 0;
        int m = 1;
        int r = 0;
        std::int64_t value = 0;
        CLI::Option* value_opt = nullptr;
    };

    Json bound_to_json(const BoundReport& report)
    {
        Json j{{"quantity", report.quantity}, {"direction", report.direction}, {"valid", report.valid}};
        j["value"] = report.value ? Json(*report.value) : Json(nullptr);
        j["raw"] = report.raw ? Json(*report.raw) : Json(nullptr);
        j["formula"] = report.provenance;
        j["side_values"] = Json(report.side_values);
        if (! report.note.empty())
            j["note"] = report.note;
        return j;
    }

    int cmd_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err)
    {
        static const std::vector<std::string> known = {"erdos",      "robertson",          "lemma9",
                                                       "corollary1", "lemma10-recurrence", "johnson-d43"};
        if (std::find(known.begin(), known.end(), a.formula) == known.end()) {
            err << "unknown formula '" << a.formula << "'; choose one of";
            for (const auto& f : known)
                err << ' ' << f;
            err << '\n';
            return exit_usage;
        }
        BoundQuery query;
        query.formula = a.formula;
        query.l = a.l;
        query.m = a.m;
        query.r = a.r;
        if (a.value_opt->count())
            query.known_value = a.value;
        if (! a.k.empty()) {
            std::vector<int> ks = parse_int_list(a.k);
            if (a.formula == "corollary1" || a.formula == "lemma10-recurrence")
                query.k_vec = std::move(ks);
            else if (ks.size() == 1)
                query.k = ks.front();
            else
                throw InvalidArgument(a.formula + " takes a single --k");
        }
        const BoundReport report = bounds_report(query);

        auto line = [&out](const std::string& key, const std::string& value) {
            out << std::left << std::setw(16) << key << value << '\n';
        };
        line("quantity", report.quantity);
        line("direction", report.direction);
        line("formula", report.provenance);
        line("valid", report.valid ? "yes" : "no");
        if (report.value)
            line("value", std::to_string(*report.value));
        if (report.raw) {
            std::ostringstream raw;
            raw << std::setprecision(15) << *report.raw;
            line("raw", raw.str());
        }
        for (const auto& [key, value] : report.side_values) {
            std::ostringstream v;
            v << std::setprecision(15) << value;
            line(key, v.str());
        }
        if (! report.note.empty())
            line("note", report.note);
        out << bound_to_json(report).dump() << '\n';
        return report.valid ? exit_ok : exit_unknown;
    }

    // --- packing ----------------------------------------------------------

    struct PackingArgs {
        int l = 0;
        int k = 4;
        std::size_t target = 0;
        std::uint64_t seed = 0;
        int restarts = 64;
        unsigned jobs = 1;
        std::string out;
        std::string path;
    };

    int cmd_packing_build(const PackingArgs& a, std::ostream& out, std::ostream& err)
    {
        std::size_t target = a.target;
        if (target == 0) {
            if (a.k != 4)
                throw InvalidArgument("--target is required unless --k 4");
            target = static_cast<std::size_t>(johnson_d_l43(a.l));
        }
        PackingOptions options;
        options.restarts = a.restarts;
        options.jobs = a.jobs;
        try {
            const BlockPacking packing = build_packing(a.l, a.k, target, a.seed, options);
            emit_json(out, packing_to_json(packing), a.out);
            if (! a.out.empty() && a.out != "-")
                out << "wrote " << packing.blocks.size() << " blocks to " << a.out << '\n';
            return exit_ok;
        }
        catch (const PackingError& e) {
            err << "packing search failed: " << e.what() << " (best " << e.best_size << " of " << target << ")\n";
            return exit_unknown;
        }
    }

    Json read_json_file(const std::string& path)
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidArgument("cannot open '" + path + "'");
        try {
            return Json::parse(in);
        }
        catch (const nlohmann::json::exception& e) {
            throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
        }
    }

    int cmd_packing_check(const PackingArgs& a, std::ostream& out)
    {
        const BlockPacking packing = packing_from_json(read_json_file(a.path));
        const PackingCheck check = validate_packing(packing);
        out << "blocks   " << packing.blocks.size() << '\n';
        if (check.valid) {
            out << "valid    yes\n";
            return exit_ok;
        }
        out << "valid    no\n";
        if (check.triple)
            out << "triple   {" << join(*check.triple) << "} in blocks " << check.first_block << " and "
                << check.second_block << '\n';
        if (! check.problem.empty())
            out << "problem  " << check.problem << '\n';
        return exit_falsified;
    }

    // --- coloring ---------------------------------------------------------

    struct ColoringArgs {
        int n = 0;
        std::string k;
        int m = 1;
        std::uint64_t seed = 0;
        std::uint64_t budget = 400000;
        unsigned jobs = 1;
        std::string out;
        std::string path;
    };

    int cmd_coloring_search(const ColoringArgs& a, std::ostream& out, std::ostream& err)
    {
        const RamseyTarget target{parse_int_list(a.k)};
        ColoringSearchOptions options;
        options.jobs = a.jobs;
        const auto col = search_coloring(a.n, target, a.m, a.seed, a.budget, options);
        if (! col) {
            err << "no coloring found within " << a.budget << " flips\n";
            return exit_unknown;
        }
        emit_json(out, coloring_to_json(*col), a.out);
        if (! a.out.empty() && a.out != "-")
            out << "wrote coloring of K_" << a.n << " to " << a.out << '\n';
        return exit_ok;
    }

    int cmd_coloring_check(const ColoringArgs& a, std::ostream& out)
    {
        const EdgeMultiColoring col = coloring_from_json(read_json_file(a.path));
        const RamseyCheck check = validate_ramsey_coloring(col, RamseyTarget{parse_int_list(a.k)});
        if (check.valid) {
            out << "valid    yes\n";
            return exit_ok;
        }
        out << "valid    no\nclique   {" << join(check.clique) << "} in color " << check.color << '\n';
        return exit_falsified;
    }

    int cmd_coloring_exhaustive(const ColoringArgs& a, std::ostream& out)
    {
        const ExhaustiveResult result = exhaustive_search(a.n, RamseyTarget{parse_int_list(a.k)}, a.m);
        out << "nodes    " << result.nodes << '\n';
        if (result.none_exist) {
            out << "result   no coloring of K_" << a.n << " exists\n";
            return exit_ok;
        }
        out << "result   coloring found\n" << coloring_to_json(*result.example).dump() << '\n';
        return exit_ok;
    }

    // --- plan -------------------------------------------------------------

    int cmd_plan(int t, int v, std::ostream& out)
    {
        const Plan plan = plan_parameters(t, v);
        out << "t=" << plan.t << " v=" << plan.v << " s=" << plan.s << " delta=" << plan.delta
            << " alpha=" << plan.alpha << '\n';
        const PackingPlan& p = plan.packing;
        out << "packing  block size " << p.block_size;
        if (p.applicable)
            out << ", l in {" << join(p.feasible_l) << "}, min rows " << p.min_rows;
        else
            out << ", not applicable";
        out << '\n';
        if (! p.note.empty())
            out << "         " << p.note << '\n';
        const RamseyPlan& r = plan.ramsey;
        out << "ramsey   light " << r.light << ", heavy " << r.heavy << ", colors per edge " << r.colors_per_edge;
        if (r.applicable)
            out << ", min l " << r.min_l << ", min rows " << r.min_rows << ", l guidance " << r.l_guidance;
        else
            out << ", not applicable";
        out << '\n';
        if (! r.note.empty())
            out << "         " << r.note << '\n';
        if (plan.small_l_advisory)
            out << "advisory the smallest l is at most ln s / (6 ln 3) = " << plan.small_l_threshold
                << "; such cores stop existing as s grows\n";

        Json j{{"t", plan.t}, {"v", plan.v}, {"s", plan.s}, {"delta", plan.delta}, {"alpha", plan.alpha}};
        j["packing"] = Json{{"applicable", p.applicable},
                            {"block_size", p.block_size},
                            {"feasible_l", p.feasible_l},
                            {"exact_window", p.exact_window},
                            {"min_rows", p.min_rows}};
        j["ramsey"] = Json{{"applicable", r.applicable},       {"light", r.light},
                           {"heavy", r.heavy},                 {"colors_per_edge", r.colors_per_edge},
                           {"min_l", r.min_l},                 {"min_rows", r.min_rows},
                           {"tau_three_color", r.tau_three_color}, {"tau_general", r.tau_general},
                           {"l_guidance", r.l_guidance}};
        j["ramsey"]["coloring_upper_bound"] =
            r.coloring_upper_bound ? Json(*r.coloring_upper_bound) : Json(nullptr);
        j["small_l_advisory"] = plan.small_l_advisory;
        j["small_l_threshold"] = plan.small_l_threshold;
        out << j.dump() << '\n';
        return p.applicable || r.applicable ? exit_ok : exit_infeasible;
    }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Build and certify suitable cores of permutation arrays."};
    app.name("suitable");
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a suitable core and write its witness JSON");
    construct->add_option("--route", ca.route, "packing or ramsey")->capture_default_str();
    ca.t_opt = construct->add_option("--t", ca.t, "strength");
    ca.v_opt = construct->add_option("--v", ca.v, "core symbol count");
    ca.s_opt = construct->add_option("--s", ca.s, "t = 2s + delta");
    ca.delta_opt = construct->add_option("--delta", ca.delta, "0 or 1")->capture_default_str();
    ca.alpha_opt = construct->add_option("--alpha", ca.alpha, "v = s + alpha")->capture_default_str();
    ca.l_opt = construct->add_option("--l", ca.l, "extra rows beyond v(t + 1 - v)");
    construct->add_option("--k", ca.k, "clique budgets k_1,..,k_r (ramsey route)");
    construct->add_option("--seed", ca.seed, "random seed")->capture_default_str();
    construct->add_option("-o,--out", ca.out, "output path (stdout when omitted)");
    construct->add_flag("--force", ca.force, "build even when the parameters look infeasible");
    construct->add_option("--jobs", ca.jobs, "worker threads")->capture_default_str()->check(CLI::Range(1U, 256U));
    construct->add_option("--budget", ca.budget, "local search flip budget")->capture_default_str();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "certify a witness JSON or text array file");
    verify->add_option("path", va.path, "witness JSON or text array")->required();
    verify->add_option("--mode", va.mode, "auto|exact|condition_ii|shallow|necessary|sample")
        ->capture_default_str()
        ->check(CLI::IsMember({"auto", "exact", "condition_ii", "shallow", "necessary", "sample"}));
    va.t_opt = verify->add_option("--t", va.t, "override the strength");
    verify->add_option("--trials", va.trials, "sample mode trials")->capture_default_str();
    verify->add_option("--seed", va.seed, "sample mode seed")->capture_default_str();
    verify->add_option("--jobs", va.jobs, "worker threads")->capture_default_str()->check(CLI::Range(1U, 256U));

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "evaluate a Ramsey or packing bound");
    bounds->add_option("formula", ba.formula,
                       "erdos|robertson|lemma9|corollary1|lemma10-recurrence|johnson-d43")
        ->required();
    bounds->add_option("--k", ba.k, "clique size, or k_1,..,k_r");
    bounds->add_option("--l", ba.l, "second parameter");
    bounds->add_option("--m", ba.m, "colors per edge")->capture_default_str();
    bounds->add_option("--r", ba.r, "number of colors");
    ba.value_opt = bounds->add_option("--value", ba.value, "known R(k, l-2) for robertson");

    PackingArgs pa;
    auto* packing = app.add_subcommand("packing", "build or check 3-(l,k,1) packings");
    packing->require_subcommand(1);
    auto* packing_build = packing->add_subcommand("build", "randomised greedy packing search");
    packing_build->add_option("--l", pa.l, "points")->required();
    packing_build->add_option("--k", pa.k, "block size")->capture_default_str();
    packing_build->add_option("--target", pa.target, "block count (defaults to D(l,4,3) when k = 4)");
    packing_build->add_option("--seed", pa.seed)->capture_default_str();
    packing_build->add_option("--restarts", pa.restarts)->capture_default_str();
    packing_build->add_option("--jobs", pa.jobs)->capture_default_str()->check(CLI::Range(1U, 256U));
    packing_build->add_option("-o,--out", pa.out, "output path (stdout when omitted)");
    auto* packing_check = packing->add_subcommand("check", "validate a packing JSON file");
    packing_check->add_option("path", pa.path)->required();

    ColoringArgs co;
    auto* coloring = app.add_subcommand("coloring", "search, check or enumerate edge colorings");
    coloring->require_subcommand(1);
    auto* coloring_search = coloring->add_subcommand("search", "local search for a Ramsey coloring");
    coloring_search->add_option("--n", co.n, "vertices")->required();
    coloring_search->add_option("--k", co.k, "clique budgets k_1,..,k_r")->required();
    coloring_search->add_option("--m", co.m, "colors per edge")->capture_default_str();
    coloring_search->add_option("--seed", co.seed)->capture_default_str();
    coloring_search->add_option("--budget", co.budget, "flip budget")->capture_default_str();
    coloring_search->add_option("--jobs", co.jobs)->capture_default_str()->check(CLI::Range(1U, 256U));
    coloring_search->add_option("-o,--out", co.out, "output path (stdout when omitted)");
    auto* coloring_check = coloring->add_subcommand("check", "validate a coloring JSON file");
    coloring_check->add_option("path", co.path)->required();
    coloring_check->add_option("--k", co.k, "clique budgets k_1,..,k_r")->required();
    auto* coloring_exhaustive = coloring->add_subcommand("exhaustive", "decide existence by enumeration");
    coloring_exhaustive->add_option("--n", co.n)->required();
    coloring_exhaustive->add_option("--k", co.k)->required();
    coloring_exhaustive->add_option("--m", co.m)->capture_default_str();

    int plan_t = 0, plan_v = 0;
    auto* plan = app.add_subcommand("plan", "list feasible l for each route");
    plan->add_option("--t", plan_t)->required();
    plan->add_option("--v", plan_v)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*construct)
            return cmd_construct(ca, out, err);
        if (*verify)
            return cmd_verify(va, out, err);
        if (*bounds)
            return cmd_bounds(ba, out, err);
        if (*packing_build)
            return cmd_packing_build(pa, out, err);
        if (*packing_check)
            return cmd_packing_check(pa, out);
        if (*coloring_search)
            return cmd_coloring_search(co, out, err);
        if (*coloring_check)
            return cmd_coloring_check(co, out);
        if (*coloring_exhaustive)
            return cmd_coloring_exhaustive(co, out);
        if (*plan)
            return cmd_plan(plan_t, plan_v, out);
    }
    catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const CapExceeded& e) {
        err << "inconclusive: " << e.what() << '\n';
        return exit_unknown;
    }
    catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_unknown;
    }
    return exit_usage;
}

}  // namespace suitable
