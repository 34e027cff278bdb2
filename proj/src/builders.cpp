#include "suitable/builders.hpp"

#include "suitable/detail/random.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace suitable {

namespace {

    // Rows under construction: a prefix of one, two or three symbols, later
    // completed with the remaining symbols in ascending order.
    class RowLedger {
    public:
        explicit RowLedger(int v) : v_(v) {}

        std::size_t add(Symbol leader, Symbol second)
        {
            rows_.push_back({leader, second});
            const std::size_t idx = rows_.size() - 1;
            by_prefix_.emplace(std::make_pair(leader, second), idx);
            return idx;
        }

        std::optional<std::size_t> find(Symbol leader, Symbol second) const
        {
            auto it = by_prefix_.find({leader, second});
            if (it == by_prefix_.end())
                return std::nullopt;
            return it->second;
        }

        void set_third(std::size_t row, Symbol third)
        {
            if (rows_[row].size() != 2)
                throw BuildError("row " + std::to_string(row + 1) + " already has a third entry");
            rows_[row].push_back(third);
        }

        std::size_t size() const { return rows_.size(); }

        PermutationArray complete() const
        {
            std::vector<Row> out;
            out.reserve(rows_.size());
            std::vector<char> used(static_cast<std::size_t>(v_ + 1));
            for (const Row& prefix : rows_) {
                std::fill(used.begin(), used.end(), 0);
                Row row = prefix;
                for (Symbol s : prefix)
                    used[s] = 1;
                for (Symbol s = 1; s <= v_; ++s)
                    if (! used[s])
                        row.push_back(s);
                out.push_back(std::move(row));
            }
            return PermutationArray(static_cast<std::size_t>(v_), std::move(out));
        }

    private:
        int v_;
        std::vector<Row> rows_;
        std::multimap<std::pair<Symbol, Symbol>, std::size_t> by_prefix_;
    };

    void check_common(const BuildSpec& spec)
    {
        if (spec.delta != 0 && spec.delta != 1)
            throw BuildError("delta must be 0 or 1");
        if (spec.alpha < 3)
            throw BuildError("alpha must be at least 3");
        if (spec.s < 1)
            throw BuildError("s must be at least 1");
        if (spec.slack() < 0)
            throw BuildError("t + 1 - v is negative for s=" + std::to_string(spec.s) + ", alpha="
                             + std::to_string(spec.alpha));
    }

    void expect_leads(const PermutationArray& core, Symbol sym, std::size_t expected)
    {
        const std::size_t got = core.lead_count(sym);
        if (got != expected)
            throw BuildError("symbol " + std::to_string(sym) + " leads " + std::to_string(got) + " rows, expected "
                             + std::to_string(expected));
    }

    // D(l, k, 3) when known exactly, else the counting upper bound.
    std::int64_t packing_number(int l, int k, bool& exact)
    {
        exact = true;
        if (l < k)
            return 0;
        if (k == 3)
            return binomial(l, 3);
        if (k == 4)
            return johnson_d_l43(l);
        exact = false;
        return binomial(l, 3) / binomial(k, 3);
    }

    std::vector<int> resolved_k_vec(const BuildSpec& spec)
    {
        const int r = spec.heavy();
        if (spec.k_vec.empty())
            return balanced_k_vec(spec.l, r);
        return spec.k_vec;
    }

}  // namespace

std::string_view to_string(Route route)
{
    return route == Route::packing ? "packing" : "ramsey";
}

Route route_from_string(std::string_view text)
{
    if (text == "packing")
        return Route::packing;
    if (text == "ramsey")
        return Route::ramsey;
    throw InvalidArgument("unknown route '" + std::string(text) + "'");
}

BuildSpec BuildSpec::from_strength(int t, int v, int l, Route route)
{
    BuildSpec spec;
    spec.s = t / 2;
    spec.delta = t % 2;
    spec.alpha = v - spec.s;
    spec.l = l;
    spec.route = route;
    return spec;
}

std::vector<int> balanced_k_vec(int l, int r)
{
    if (r < 1)
        throw InvalidArgument("balanced split needs r >= 1");
    std::vector<int> k(static_cast<std::size_t>(r), l / r);
    k.back() += l % r;
    return k;
}

std::vector<int> three_color_preset(int l)
{
    return {3, (l - 5) / 2, (l - 1) / 2};
}

Verdict certify_core(const PermutationArray& core, int t, const VerifyOptions& options)
{
    Verdict necessary = verify_necessary(core, t);
    if (necessary.status == Status::falsified)
        return necessary;
    Verdict shallow = verify_shallow(core, t, options);
    if (core.n_symbols() > options.exact_cap)
        return shallow;
    Verdict exact = verify_exact(core, t, options);
    exact.note = "shallow tier: " + std::string(to_string(shallow.status));
    return exact;
}

CoreWitness build_packing_core(const BuildSpec& spec, const BuildOptions& options)
{
    check_common(spec);
    if (spec.route != Route::packing)
        throw BuildError("build_packing_core needs the packing route");
    const int v = spec.v();
    const int k = spec.block_size();
    const int l = spec.l;
    const int c = v - l;
    if (l > v || l < k)
        throw BuildError("packing route needs k <= l <= v (k=" + std::to_string(k) + ", l=" + std::to_string(l)
                         + ", v=" + std::to_string(v) + ")");

    std::optional<BlockPacking> packing;
    std::optional<BlockAssignment> assignment;
    std::string last_failure;
    for (int attempt = 0; attempt < options.assignment_attempts && ! assignment; ++attempt) {
        try {
            BlockPacking p = build_packing(l, k, static_cast<std::size_t>(v),
                                           detail::derive_seed(spec.seed, static_cast<std::uint64_t>(attempt)),
                                           options.packing);
            assignment = assign_blocks(p, v, c);
            packing = std::move(p);
        }
        catch (const PackingError& err) {
            last_failure = err.what();
        }
    }
    if (! assignment)
        throw BuildError("no packing with a valid block assignment: " + last_failure);

    const auto& b = assignment->b;
    auto in_block = [&](Symbol i, Symbol j) {
        const Block& bi = b[static_cast<std::size_t>(i - 1)];
        return std::binary_search(bi.begin(), bi.end(), j);
    };

    RowLedger ledger(v);
    for (Symbol i = 1; i <= v; ++i)
        for (Symbol j = 1; j <= v; ++j)
            if (j != i && ! in_block(i, j))
                ledger.add(i, j);

    // Shared block points go third after the pair prefixes.
    for (Symbol i = 1; i <= v; ++i)
        for (Symbol j = i + 1; j <= v; ++j) {
            const Block& bi = b[static_cast<std::size_t>(i - 1)];
            const Block& bj = b[static_cast<std::size_t>(j - 1)];
            Block shared;
            std::set_intersection(bi.begin(), bi.end(), bj.begin(), bj.end(), std::back_inserter(shared));
            if (shared.empty())
                continue;
            const auto ij = ledger.find(i, j);
            const auto ji = ledger.find(j, i);
            const std::string pair = std::to_string(i) + "," + std::to_string(j);
            if (shared.size() == 2) {
                if (! ij || ! ji)
                    throw BuildError("B_i and B_j share two points but a prefix row is missing for {" + pair + "}");
                ledger.set_third(*ij, shared[0]);
                ledger.set_third(*ji, shared[1]);
            }
            else if (shared.size() == 1) {
                if (ij)
                    ledger.set_third(*ij, shared[0]);
                else if (ji)
                    ledger.set_third(*ji, shared[0]);
                else
                    throw BuildError("B_i and B_j share a point but neither prefix row exists for {" + pair + "}");
            }
            else
                throw BuildError("blocks of {" + pair + "} share more than two points");
        }

    CoreWitness witness;
    witness.core = ledger.complete();
    witness.params.t = spec.t();

    if (static_cast<int>(witness.core.n_rows()) != spec.rows())
        throw BuildError("built " + std::to_string(witness.core.n_rows()) + " rows, expected "
                         + std::to_string(spec.rows()));
    for (Symbol i = 1; i <= v; ++i)
        expect_leads(witness.core, i, static_cast<std::size_t>(spec.slack() + (i > c ? 1 : 0)));

    witness.provenance.route = "packing";
    witness.provenance.s = spec.s;
    witness.provenance.delta = spec.delta;
    witness.provenance.alpha = spec.alpha;
    witness.provenance.l = l;
    witness.provenance.seed = spec.seed;
    witness.provenance.packing = std::move(packing);
    witness.provenance.assignment = std::move(assignment);
    witness.certificate = certify_core(witness.core, witness.params.t, options.verify);
    return witness;
}

CoreWitness build_ramsey_core(const BuildSpec& spec, const BuildOptions& options)
{
    check_common(spec);
    if (spec.route != Route::ramsey)
        throw BuildError("build_ramsey_core needs the ramsey route");
    const int v = spec.v();
    const int c = spec.t() + 2 - v;
    const int r = spec.heavy();
    const std::vector<int> k_vec = resolved_k_vec(spec);

    if (c < 1)
        throw BuildError("ramsey route needs t + 2 - v >= 1");
    if (static_cast<int>(k_vec.size()) != r)
        throw BuildError("ramsey route needs " + std::to_string(r) + " clique budgets, got "
                         + std::to_string(k_vec.size()));
    for (int kh : k_vec)
        if (kh < r)
            throw BuildError("every clique budget must be at least r = " + std::to_string(r)
                             + " so each heavy symbol can lead a row before every other heavy symbol");
    const int l = std::accumulate(k_vec.begin(), k_vec.end(), 0);
    if (spec.l != 0 && spec.l != l)
        throw BuildError("clique budgets sum to " + std::to_string(l) + " but l = " + std::to_string(spec.l));

    RamseyTarget target;
    for (int kh : k_vec)
        target.k.push_back(kh + 1);
    const int m = r - 2;
    auto coloring = search_coloring(c, target, m, spec.seed, options.coloring_budget, options.coloring);
    if (! coloring)
        throw BuildError("no Ramsey coloring of K_" + std::to_string(c) + " found within the search budget");

    RowLedger ledger(v);
    for (Symbol leader = 1; leader <= v; ++leader) {
        for (Symbol i = 1; i <= c; ++i)
            if (i != leader)
                ledger.add(leader, i);
        if (leader > c) {
            // Extra rows: every other heavy symbol first, then the light ones.
            std::vector<Symbol> seconds;
            for (Symbol j = c + 1; j <= v; ++j)
                if (j != leader)
                    seconds.push_back(j);
            for (Symbol j = 1; j <= c; ++j)
                seconds.push_back(j);
            const int extra = k_vec[static_cast<std::size_t>(leader - c - 1)] - 1;
            for (int q = 0; q < extra; ++q)
                ledger.add(leader, seconds[static_cast<std::size_t>(q) % seconds.size()]);
        }
    }

    for (Symbol i = 1; i <= c; ++i)
        for (Symbol j = i + 1; j <= c; ++j) {
            std::vector<int> missing;
            for (int h = 1; h <= r; ++h)
                if (! coloring->has_color(i, j, h))
                    missing.push_back(h);
            if (missing.size() != 2)
                throw BuildError("edge {" + std::to_string(i) + "," + std::to_string(j) + "} must miss exactly two colors");
            const auto ij = ledger.find(i, j);
            const auto ji = ledger.find(j, i);
            if (! ij || ! ji)
                throw BuildError("missing prefix row for light pair {" + std::to_string(i) + "," + std::to_string(j) + "}");
            ledger.set_third(*ij, c + missing[0]);
            ledger.set_third(*ji, c + missing[1]);
        }

    CoreWitness witness;
    witness.core = ledger.complete();
    witness.params.t = spec.t();

    const int rows = v * (c - 1) + l;
    if (static_cast<int>(witness.core.n_rows()) != rows)
        throw BuildError("built " + std::to_string(witness.core.n_rows()) + " rows, expected " + std::to_string(rows));
    for (Symbol i = 1; i <= c; ++i)
        expect_leads(witness.core, i, static_cast<std::size_t>(c - 1));
    for (int h = 1; h <= r; ++h)
        expect_leads(witness.core, c + h, static_cast<std::size_t>(c + k_vec[static_cast<std::size_t>(h - 1)] - 1));

    witness.provenance.route = "ramsey";
    witness.provenance.s = spec.s;
    witness.provenance.delta = spec.delta;
    witness.provenance.alpha = spec.alpha;
    witness.provenance.l = l;
    witness.provenance.k_vec = k_vec;
    witness.provenance.seed = spec.seed;
    witness.provenance.coloring = std::move(coloring);

    witness.certificate = certify_core(witness.core, witness.params.t, options.verify);
    return witness;
}

CoreWitness build_core(const BuildSpec& spec, const BuildOptions& options)
{
    return spec.route == Route::packing ? build_packing_core(spec, options) : build_ramsey_core(spec, options);
}

Plan plan_parameters(int t, int v)
{
    if (t < 3)
        throw InvalidArgument("plan_parameters: need t >= 3");
    if (v > t)
        throw InvalidArgument("plan_parameters: need v <= t");
    Plan plan;
    plan.t = t;
    plan.v = v;
    plan.s = t / 2;
    plan.delta = t % 2;
    plan.alpha = v - plan.s;
    if (plan.alpha < 3)
        throw InvalidArgument("plan_parameters: no route applies when v < floor(t/2) + 3");

    const int slack = t + 1 - v;
    const int k = 2 * plan.alpha - plan.delta - 2;

    PackingPlan& pack = plan.packing;
    pack.block_size = k;
    if (v - 1 - k >= 0) {
        for (int l = k; l <= v; ++l) {
            bool exact = true;
            if (packing_number(l, k, exact) >= v) {
                pack.feasible_l.push_back(l);
                pack.exact_window = pack.exact_window && exact;
            }
        }
    }
    pack.applicable = ! pack.feasible_l.empty();
    if (pack.applicable)
        pack.min_rows = v * slack + pack.feasible_l.front();
    else
        pack.note = "no l <= v gives a packing with at least v blocks";
    if (! pack.exact_window)
        pack.note = "block size above 4: window uses the counting upper bound on D(l,k,3)";

    RamseyPlan& ram = plan.ramsey;
    ram.light = t + 2 - v;
    ram.heavy = k;
    ram.colors_per_edge = k - 2;
    ram.min_l = k * k;
    ram.min_rows = v * slack + ram.min_l;
    ram.applicable = ram.light >= 1 && ram.colors_per_edge >= 1;
    if (ram.applicable) {
        const double r = k;
        ram.tau_general = 2 * r / (std::log(r) - std::log(r - 2));
        if (plan.alpha == 3 && plan.delta == 1)
            ram.tau_three_color = 4 / std::log(2.0);
        const double tau = ram.tau_three_color > 0 ? std::min(ram.tau_three_color, ram.tau_general) : ram.tau_general;
        ram.l_guidance = std::max(ram.min_l, static_cast<int>(std::ceil(tau * std::log(static_cast<double>(plan.s)))));
        std::vector<int> budgets(static_cast<std::size_t>(k), k + 1);
        ram.coloring_upper_bound = closed_form_upper_raw(ram.colors_per_edge, budgets);
        if (ram.light >= *ram.coloring_upper_bound)
            ram.note = "K_" + std::to_string(ram.light) + " admits no coloring at the minimal split";
    }

    if (plan.alpha == 3 && plan.s >= 2) {
        plan.small_l_threshold = std::log(static_cast<double>(plan.s)) / (6 * std::log(3.0));
        int smallest = ram.min_l;
        if (pack.applicable)
            smallest = std::min(smallest, pack.feasible_l.front());
        plan.small_l_advisory = smallest <= plan.small_l_threshold;
    }
    return plan;
}

std::string infeasibility(const BuildSpec& spec)
{
    if (spec.delta != 0 && spec.delta != 1)
        return "delta must be 0 or 1";
    if (spec.alpha < 3)
        return "alpha must be at least 3 (v >= floor(t/2) + 3)";
    if (spec.s < 1)
        return "s must be at least 1";
    if (spec.slack() < 0)
        return "t + 1 - v is negative";

    const int v = spec.v();
    if (spec.route == Route::packing) {
        const int k = spec.block_size();
        if (v - 1 - k < 0)
            return "block size exceeds v - 1";
        if (spec.l > v)
            return "l = " + std::to_string(spec.l) + " exceeds v = " + std::to_string(v);
        if (spec.l < k)
            return "l = " + std::to_string(spec.l) + " is below the block size " + std::to_string(k);
        bool exact = true;
        const std::int64_t d = packing_number(spec.l, k, exact);
        if (d < v)
            return std::string(exact ? "D" : "upper bound on D") + "(" + std::to_string(spec.l) + ","
                + std::to_string(k) + ",3) = " + std::to_string(d) + " < v = " + std::to_string(v);
        return {};
    }

    const int c = spec.t() + 2 - v;
    const int r = spec.heavy();
    if (c < 1)
        return "t + 2 - v must be at least 1";
    if (r < 3)
        return "ramsey route needs at least three heavy symbols";
    if (spec.k_vec.empty() && spec.l < r * r)
        return "l = " + std::to_string(spec.l) + " is below r^2 = " + std::to_string(r * r);
    const std::vector<int> k_vec = resolved_k_vec(spec);
    if (static_cast<int>(k_vec.size()) != r)
        return "need exactly r = " + std::to_string(r) + " clique budgets";
    for (int kh : k_vec)
        if (kh < r)
            return "clique budget " + std::to_string(kh) + " is below r = " + std::to_string(r);
    const int l = std::accumulate(k_vec.begin(), k_vec.end(), 0);
    if (spec.l != 0 && spec.l != l)
        return "clique budgets sum to " + std::to_string(l) + " but l = " + std::to_string(spec.l);
    std::vector<int> budgets;
    for (int kh : k_vec)
        budgets.push_back(kh + 1);
    const double upper = closed_form_upper_raw(r - 2, budgets);
    if (c >= upper)
        return "K_" + std::to_string(c) + " has no coloring: the extended Ramsey number is at most "
            + std::to_string(static_cast<long long>(upper));
    return {};
}

}  // namespace suitable
