#include "suitable/verifier.hpp"

#include "suitable/detail/parallel.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <random>

namespace suitable {

namespace {

    using Clock = std::chrono::steady_clock;

    double elapsed_ms(Clock::time_point start)
    {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    std::vector<Symbol> others_of(std::size_t v, Symbol sigma)
    {
        std::vector<Symbol> out;
        out.reserve(v);
        for (Symbol s = 1; s <= static_cast<Symbol>(v); ++s)
            if (s != sigma)
                out.push_back(s);
        return out;
    }

    // Picks the per-symbol witness with the smallest sigma.
    std::optional<ViolationWitness> first_witness(std::vector<std::optional<ViolationWitness>>& per_symbol)
    {
        for (auto& w : per_symbol)
            if (w)
                return std::move(w);
        return std::nullopt;
    }

    Verdict make_verdict(Tier tier, std::optional<ViolationWitness> witness, Status otherwise)
    {
        Verdict verdict;
        verdict.tier = tier;
        verdict.status = witness ? Status::falsified : otherwise;
        verdict.witness = std::move(witness);
        return verdict;
    }

    void require_strength(int t)
    {
        if (t < 1)
            throw InvalidArgument("strength t must be at least 1, got " + std::to_string(t));
    }

    // Branch and bound for max over T of |T| - sum_{pairs in T} weight(i, j),
    // stopping as soon as the value exceeds `limit`.
    class PairPenaltySearch {
    public:
        PairPenaltySearch(std::vector<std::vector<int>> weight, std::uint64_t node_cap)
            : weight_(std::move(weight)), node_cap_(node_cap)
        {
        }

        enum class Outcome { within_limit, exceeds_limit, aborted };

        Outcome run(long long limit)
        {
            limit_ = limit;
            const std::size_t n = weight_.size();
            if (limit_ < 0) {
                best_set_.clear();
                return Outcome::exceeds_limit;
            }
            std::vector<long long> gain(n, 1);
            std::vector<std::size_t> current;
            best_ = 0;
            found_ = false;
            aborted_ = false;
            descend(0, 0, gain, current);
            if (found_)
                return Outcome::exceeds_limit;
            return aborted_ ? Outcome::aborted : Outcome::within_limit;
        }

        std::uint64_t nodes() const { return nodes_; }
        const std::vector<std::size_t>& best_set() const { return best_set_; }

    private:
        void descend(std::size_t idx, long long value, std::vector<long long>& gain, std::vector<std::size_t>& current)
        {
            if (found_ || aborted_)
                return;
            if (++nodes_ > node_cap_) {
                aborted_ = true;
                return;
            }
            if (value > best_) {
                best_ = value;
                if (value > limit_) {
                    found_ = true;
                    best_set_ = current;
                    return;
                }
            }
            const std::size_t n = weight_.size();
            if (idx == n)
                return;

            long long bound = value;
            for (std::size_t j = idx; j < n; ++j)
                bound += std::max<long long>(0, gain[j]);
            if (bound <= best_)
                return;

            // Including a symbol whose gain is not positive never helps: the
            // value does not rise and later gains can only fall.
            if (gain[idx] > 0) {
                for (std::size_t j = idx + 1; j < n; ++j)
                    gain[j] -= weight_[idx][j];
                current.push_back(idx);
                descend(idx + 1, value + gain[idx], gain, current);
                current.pop_back();
                for (std::size_t j = idx + 1; j < n; ++j)
                    gain[j] += weight_[idx][j];
            }
            // Exclude idx.
            descend(idx + 1, value, gain, current);
        }

        std::vector<std::vector<int>> weight_;
        std::uint64_t node_cap_;
        std::uint64_t nodes_ = 0;
        long long limit_ = 0;
        long long best_ = 0;
        bool found_ = false;
        bool aborted_ = false;
        std::vector<std::size_t> best_set_;
    };

}  // namespace

std::string_view to_string(Status status)
{
    switch (status) {
    case Status::certified: return "certified";
    case Status::falsified: return "falsified";
    case Status::unknown: return "unknown";
    }
    return "unknown";
}

std::string_view to_string(Tier tier)
{
    switch (tier) {
    case Tier::exact: return "exact";
    case Tier::condition_ii: return "condition_ii";
    case Tier::shallow: return "shallow";
    case Tier::necessary: return "necessary";
    case Tier::sample: return "sample";
    }
    return "exact";
}

Status status_from_string(std::string_view text)
{
    for (Status s : {Status::certified, Status::falsified, Status::unknown})
        if (to_string(s) == text)
            return s;
    throw InvalidArgument("unknown verdict status '" + std::string(text) + "'");
}

Tier tier_from_string(std::string_view text)
{
    for (Tier t : {Tier::exact, Tier::condition_ii, Tier::shallow, Tier::necessary, Tier::sample})
        if (to_string(t) == text)
            return t;
    throw InvalidArgument("unknown verifier tier '" + std::string(text) + "'");
}

VerifyOptions default_verify_options()
{
    VerifyOptions options;
    if (const char* env = std::getenv("SUITABLE_VERIFY_CAP"); env && *env) {
        char* end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && cap > 0 && cap <= 30)
            options.exact_cap = cap;
        else
            throw InvalidArgument("SUITABLE_VERIFY_CAP must be an integer in [1, 30]");
    }
    return options;
}

Verdict verify_exact(const PermutationArray& core, int t, const VerifyOptions& options)
{
    require_strength(t);
    const auto start = Clock::now();
    const std::size_t v = core.n_symbols();
    if (v > options.exact_cap)
        throw CapExceeded("verify_exact: v=" + std::to_string(v) + " exceeds the exact cap of "
                          + std::to_string(options.exact_cap)
                          + "; use the shallow tier to certify or sampling to falsify");
    const int slack = t + 1 - static_cast<int>(v);

    std::vector<std::optional<ViolationWitness>> per_symbol(v);
    detail::parallel_for(v, options.jobs, [&](std::size_t index) {
        const auto sigma = static_cast<Symbol>(index + 1);
        const std::vector<Symbol> others = others_of(v, sigma);
        std::vector<int> bit(v + 1, -1);
        for (std::size_t b = 0; b < others.size(); ++b)
            bit[others[b]] = static_cast<int>(b);

        const std::size_t width = others.size();
        const std::size_t space = std::size_t{1} << width;
        std::vector<std::uint32_t> count(space, 0);
        for (const Row& row : core.rows()) {
            std::uint32_t mask = 0;
            for (Symbol s : row) {
                if (s == sigma)
                    break;
                mask |= std::uint32_t{1} << bit[s];
            }
            ++count[mask];
        }

        // Subset-sum transform: count[T] becomes the number of rows whose
        // predecessor set of sigma is contained in T.
        for (std::size_t b = 0; b < width; ++b) {
            const std::size_t step = std::size_t{1} << b;
            for (std::size_t mask = 0; mask < space; ++mask)
                if (mask & step)
                    count[mask] += count[mask ^ step];
        }

        for (std::size_t mask = 0; mask < space; ++mask) {
            const long long need = slack + std::popcount(mask);
            if (static_cast<long long>(count[mask]) < need) {
                ViolationWitness w;
                w.sigma = sigma;
                for (std::size_t b = 0; b < width; ++b)
                    if (mask & (std::size_t{1} << b))
                        w.t_set.push_back(others[b]);
                w.count = count[mask];
                per_symbol[index] = std::move(w);
                return;
            }
        }
    });

    Verdict verdict = make_verdict(Tier::exact, first_witness(per_symbol), Status::certified);
    verdict.stats.subsets_examined = v == 0 ? 0 : static_cast<std::uint64_t>(v) << (v - 1);
    verdict.stats.elapsed_ms = elapsed_ms(start);
    return verdict;
}

Verdict verify_condition_ii(const PermutationArray& core, int t, const VerifyOptions& options)
{
    require_strength(t);
    const auto start = Clock::now();
    const std::size_t v = core.n_symbols();
    if (v > options.condition_ii_cap)
        throw CapExceeded("verify_condition_ii: v=" + std::to_string(v) + " exceeds the oracle cap of "
                          + std::to_string(options.condition_ii_cap));

    std::uint64_t examined = 0;
    std::optional<ViolationWitness> witness;
    for (Symbol sigma = 1; sigma <= static_cast<Symbol>(v) && ! witness; ++sigma) {
        const std::vector<Symbol> others = others_of(v, sigma);
        const int max_size = std::min<int>(t - 1, static_cast<int>(others.size()));
        for (int size = 0; size <= max_size && ! witness; ++size) {
            // Enumerate size-subsets U of `others` as index combinations.
            std::vector<std::size_t> pick(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i)
                pick[i] = static_cast<std::size_t>(i);
            while (true) {
                ++examined;
                long long ahead = 0;
                for (std::size_t r = 0; r < core.n_rows(); ++r) {
                    const std::size_t p = core.position(r, sigma);
                    bool all = true;
                    for (std::size_t idx : pick)
                        if (core.position(r, others[idx]) < p) {
                            all = false;
                            break;
                        }
                    ahead += all;
                }
                if (ahead < t - size) {
                    ViolationWitness w;
                    w.sigma = sigma;
                    std::vector<char> in_u(v + 1, 0);
                    for (std::size_t idx : pick)
                        in_u[others[idx]] = 1;
                    for (Symbol s : others)
                        if (! in_u[s])
                            w.t_set.push_back(s);
                    w.count = ahead;
                    witness = std::move(w);
                    break;
                }
                // Next combination.
                int i = size - 1;
                while (i >= 0 && pick[i] == others.size() - static_cast<std::size_t>(size - i))
                    --i;
                if (i < 0)
                    break;
                ++pick[i];
                for (int j = i + 1; j < size; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
        }
    }

    Verdict verdict = make_verdict(Tier::condition_ii, std::move(witness), Status::certified);
    verdict.stats.subsets_examined = examined;
    verdict.stats.elapsed_ms = elapsed_ms(start);
    return verdict;
}

Verdict verify_shallow(const PermutationArray& core, int t, const VerifyOptions& options)
{
    require_strength(t);
    const auto start = Clock::now();
    const std::size_t v = core.n_symbols();
    const long long slack = t + 1 - static_cast<long long>(v);

    struct Outcome {
        bool ok = true;
        std::uint64_t nodes = 0;
        std::string note;
    };
    std::vector<Outcome> per_symbol(v);

    detail::parallel_for(v, options.jobs, [&](std::size_t index) {
        const auto sigma = static_cast<Symbol>(index + 1);
        long long leads = 0;
        std::vector<long long> second(v + 1, 0);
        std::vector<std::vector<int>> third(v + 1, std::vector<int>(v + 1, 0));
        for (const Row& row : core.rows()) {
            if (row[0] == sigma)
                ++leads;
            else if (row.size() > 1 && row[1] == sigma)
                ++second[row[0]];
            else if (row.size() > 2 && row[2] == sigma) {
                ++third[row[0]][row[1]];
                ++third[row[1]][row[0]];
            }
        }

        // Symbols j with a row starting j sigma never lower the bound, so the
        // minimum is attained on subsets of those without one.
        std::vector<Symbol> zero;
        for (Symbol j = 1; j <= static_cast<Symbol>(v); ++j)
            if (j != sigma && second[j] == 0)
                zero.push_back(j);
        std::vector<std::vector<int>> weight(zero.size(), std::vector<int>(zero.size(), 0));
        for (std::size_t a = 0; a < zero.size(); ++a)
            for (std::size_t b = 0; b < zero.size(); ++b)
                weight[a][b] = third[zero[a]][zero[b]];

        PairPenaltySearch search(std::move(weight), options.shallow_node_cap);
        const auto result = search.run(leads - slack);
        Outcome& out = per_symbol[index];
        out.nodes = search.nodes();
        if (result == PairPenaltySearch::Outcome::within_limit)
            return;
        out.ok = false;
        if (result == PairPenaltySearch::Outcome::aborted) {
            out.note = "shallow search node cap reached at sigma=" + std::to_string(sigma);
            return;
        }
        out.note = "shallow bound too weak at sigma=" + std::to_string(sigma) + ", T={";
        bool first = true;
        for (std::size_t idx : search.best_set()) {
            out.note += (first ? "" : ",") + std::to_string(zero[idx]);
            first = false;
        }
        out.note += "}";
    });

    Verdict verdict;
    verdict.tier = Tier::shallow;
    verdict.status = Status::certified;
    for (const Outcome& out : per_symbol) {
        verdict.stats.subsets_examined += out.nodes;
        if (! out.ok && verdict.status == Status::certified) {
            verdict.status = Status::unknown;
            verdict.note = out.note;
        }
    }
    verdict.stats.elapsed_ms = elapsed_ms(start);
    return verdict;
}

Verdict verify_necessary(const PermutationArray& core, int t)
{
    require_strength(t);
    const auto start = Clock::now();
    const std::size_t v = core.n_symbols();
    const long long slack = t + 1 - static_cast<long long>(v);

    std::vector<long long> lead(v + 1, 0);
    std::vector<std::vector<long long>> pair(v + 1, std::vector<long long>(v + 1, 0));
    for (const Row& row : core.rows()) {
        if (v == 0)
            break;
        ++lead[row[0]];
        if (v > 1)
            ++pair[row[0]][row[1]];
    }

    auto witness_for = [&](Symbol sigma, std::vector<Symbol> t_set) {
        std::sort(t_set.begin(), t_set.end());
        ViolationWitness w;
        w.sigma = sigma;
        w.count = static_cast<long long>(c_pre(core, sigma, t_set));
        w.t_set = std::move(t_set);
        return w;
    };

    auto finish = [&](std::optional<ViolationWitness> witness, std::string note) {
        Verdict verdict = make_verdict(Tier::necessary, std::move(witness), Status::unknown);
        verdict.note = std::move(note);
        verdict.stats.elapsed_ms = elapsed_ms(start);
        return verdict;
    };

    // (i) every symbol leads at least t + 1 - v rows.
    if (slack >= 1)
        for (Symbol k = 1; k <= static_cast<Symbol>(v); ++k)
            if (lead[k] < slack)
                return finish(witness_for(k, {}), "symbol " + std::to_string(k) + " leads too few rows");

    // (ii) two symbols leading exactly t + 1 - v rows need a row starting jk.
    if (slack >= 0)
        for (Symbol j = 1; j <= static_cast<Symbol>(v); ++j)
            for (Symbol k = 1; k <= static_cast<Symbol>(v); ++k)
                if (j != k && lead[j] == slack && lead[k] == slack && pair[j][k] == 0)
                    return finish(witness_for(k, {j}), "no row starts " + std::to_string(j) + " "
                                                           + std::to_string(k));

    // (iii) a symbol k leading exactly t + 2 - v rows, with neither ik nor jk
    // starting a row, needs a row starting ijk or jik.
    if (slack >= -1) {
        for (Symbol k = 1; k <= static_cast<Symbol>(v); ++k) {
            if (lead[k] != slack + 1)
                continue;
            std::vector<std::vector<char>> ends(v + 1, std::vector<char>(v + 1, 0));
            for (const Row& row : core.rows())
                if (row.size() > 2 && row[2] == k) {
                    ends[row[0]][row[1]] = 1;
                    ends[row[1]][row[0]] = 1;
                }
            for (Symbol i = 1; i <= static_cast<Symbol>(v); ++i)
                for (Symbol j = i + 1; j <= static_cast<Symbol>(v); ++j)
                    if (i != k && j != k && pair[i][k] == 0 && pair[j][k] == 0 && ! ends[i][j])
                        return finish(witness_for(k, {i, j}), "no row starts " + std::to_string(i) + " "
                                                                  + std::to_string(j) + " "
                                                                  + std::to_string(k) + " in either order");
        }
    }

    return finish(std::nullopt, "necessary conditions hold");
}

Verdict sample_falsify(const PermutationArray& core, int t, std::uint64_t trials, std::uint64_t seed)
{
    require_strength(t);
    if (trials < 1)
        throw InvalidArgument("sample_falsify: trials must be at least 1");
    const auto start = Clock::now();
    const std::size_t v = core.n_symbols();
    const long long slack = t + 1 - static_cast<long long>(v);

    Verdict verdict;
    verdict.tier = Tier::sample;
    verdict.status = Status::unknown;
    if (v == 0) {
        verdict.stats.elapsed_ms = elapsed_ms(start);
        return verdict;
    }

    // zero[sigma]: symbols j such that no row starts j sigma.
    std::vector<std::vector<Symbol>> zero(v + 1);
    {
        std::vector<std::vector<char>> pair(v + 1, std::vector<char>(v + 1, 0));
        for (const Row& row : core.rows())
            if (v > 1)
                pair[row[0]][row[1]] = 1;
        for (Symbol sigma = 1; sigma <= static_cast<Symbol>(v); ++sigma)
            for (Symbol j = 1; j <= static_cast<Symbol>(v); ++j)
                if (j != sigma && ! pair[j][sigma])
                    zero[sigma].push_back(j);
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Symbol> pick_symbol(1, static_cast<Symbol>(v));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<char> in_t(v + 1, 0);

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const Symbol sigma = pick_symbol(rng);
        const bool biased = ! zero[sigma].empty() && unit(rng) < 0.75;
        const double density = unit(rng);
        std::fill(in_t.begin(), in_t.end(), 0);
        std::vector<Symbol> t_set;
        if (biased) {
            for (Symbol j : zero[sigma])
                if (unit(rng) < density)
                    t_set.push_back(j);
        }
        else {
            for (Symbol j = 1; j <= static_cast<Symbol>(v); ++j)
                if (j != sigma && unit(rng) < density)
                    t_set.push_back(j);
        }
        for (Symbol j : t_set)
            in_t[j] = 1;

        long long count = 0;
        for (const Row& row : core.rows()) {
            bool ok = true;
            for (Symbol s : row) {
                if (s == sigma)
                    break;
                if (! in_t[s]) {
                    ok = false;
                    break;
                }
            }
            count += ok;
        }
        verdict.stats.subsets_examined = trial + 1;
        if (count < slack + static_cast<long long>(t_set.size())) {
            std::sort(t_set.begin(), t_set.end());
            verdict.status = Status::falsified;
            verdict.witness = ViolationWitness{sigma, std::move(t_set), count};
            break;
        }
    }
    verdict.stats.elapsed_ms = elapsed_ms(start);
    return verdict;
}

bool witness_holds(const PermutationArray& core, int t, const ViolationWitness& witness)
{
    long long count = 0;
    try {
        count = static_cast<long long>(c_pre(core, witness.sigma, witness.t_set));
    }
    catch (const InvalidArgument&) {
        return false;
    }
    const long long need = t + 1 - static_cast<long long>(core.n_symbols())
        + static_cast<long long>(witness.t_set.size());
    return count == witness.count && count < need;
}

}  // namespace suitable
