#include "suitable/core_model.hpp"

#include <algorithm>
#include <limits>

namespace suitable {

namespace {

    // Minimal hitting set search: is there a set of at most `budget` symbols
    // that contains a predecessor of sigma in every row listed in `open`?
    bool find_hitting_set(const PermutationArray& array, Symbol sigma, std::vector<std::size_t> open,
                          int budget, std::vector<Symbol>& chosen)
    {
        if (open.empty())
            return true;
        if (budget == 0)
            return false;

        // Branch on the row with the fewest predecessors.
        auto best = std::min_element(open.begin(), open.end(), [&](std::size_t a, std::size_t b) {
            return array.position(a, sigma) < array.position(b, sigma);
        });
        const std::size_t row = *best;
        const std::size_t sigma_pos = array.position(row, sigma);

        for (std::size_t col = 0; col < sigma_pos; ++col) {
            const Symbol pick = array.at(row, col);
            std::vector<std::size_t> rest;
            rest.reserve(open.size());
            for (std::size_t r : open)
                if (array.position(r, pick) > array.position(r, sigma))
                    rest.push_back(r);
            chosen.push_back(pick);
            if (find_hitting_set(array, sigma, std::move(rest), budget - 1, chosen))
                return true;
            chosen.pop_back();
        }
        return false;
    }

}  // namespace

PermutationArray::PermutationArray(std::size_t n_symbols, std::vector<Row> rows)
    : n_symbols_(n_symbols), rows_(std::move(rows))
{
    if (rows_.empty())
        throw InvalidArgument("permutation array needs at least one row");
    if (n_symbols_ > std::numeric_limits<std::uint32_t>::max())
        throw InvalidArgument("too many symbols");

    positions_.assign(rows_.size() * n_symbols_, 0);
    std::vector<char> seen(n_symbols_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Row& row = rows_[r];
        if (row.size() != n_symbols_)
            throw InvalidArgument("row " + std::to_string(r + 1) + " has length " + std::to_string(row.size())
                                  + ", expected " + std::to_string(n_symbols_));
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t col = 0; col < row.size(); ++col) {
            const Symbol s = row[col];
            if (! contains_symbol(s))
                throw InvalidArgument("row " + std::to_string(r + 1) + " contains out-of-range symbol "
                                      + std::to_string(s));
            if (seen[s - 1])
                throw InvalidArgument("row " + std::to_string(r + 1) + " repeats symbol " + std::to_string(s));
            seen[s - 1] = 1;
            positions_[r * n_symbols_ + static_cast<std::size_t>(s - 1)] = static_cast<std::uint32_t>(col);
        }
    }
}

PermutationArray PermutationArray::from_rows(std::vector<Row> rows)
{
    if (rows.empty())
        throw InvalidArgument("permutation array needs at least one row");
    const std::size_t v = rows.front().size();
    return PermutationArray(v, std::move(rows));
}

std::size_t PermutationArray::lead_count(Symbol sym) const
{
    if (n_symbols_ == 0)
        return 0;
    return static_cast<std::size_t>(
        std::count_if(rows_.begin(), rows_.end(), [sym](const Row& row) { return row.front() == sym; }));
}

std::size_t c_pre(const PermutationArray& core, Symbol sigma, std::span<const Symbol> t_set)
{
    if (! core.contains_symbol(sigma))
        throw InvalidArgument("c_pre: symbol " + std::to_string(sigma) + " out of range");

    std::vector<char> allowed(core.n_symbols() + 1, 0);
    for (Symbol s : t_set) {
        if (! core.contains_symbol(s))
            throw InvalidArgument("c_pre: T contains out-of-range symbol " + std::to_string(s));
        if (s == sigma)
            throw InvalidArgument("c_pre: T must not contain sigma");
        allowed[s] = 1;
    }

    std::size_t count = 0;
    for (const Row& row : core.rows()) {
        bool ok = true;
        for (Symbol s : row) {
            if (s == sigma)
                break;
            if (! allowed[s]) {
                ok = false;
                break;
            }
        }
        count += ok;
    }
    return count;
}

ArraySuitability is_suitable_array(const PermutationArray& array, int t)
{
    const auto v = static_cast<int>(array.n_symbols());
    if (t < 1 || t > v)
        throw InvalidArgument("is_suitable_array: need 1 <= t <= v, got t=" + std::to_string(t)
                              + ", v=" + std::to_string(v));

    for (Symbol sigma = 1; sigma <= v; ++sigma) {
        std::vector<std::size_t> open;
        bool leads = false;
        for (std::size_t r = 0; r < array.n_rows(); ++r) {
            if (array.position(r, sigma) == 0) {
                leads = true;
                break;
            }
            open.push_back(r);
        }
        if (leads)
            continue;

        std::vector<Symbol> hitting;
        if (! find_hitting_set(array, sigma, std::move(open), t - 1, hitting))
            continue;

        // Any superset of a hitting set still blocks sigma; pad to t-1 others.
        std::vector<char> in(v + 1, 0);
        in[sigma] = 1;
        for (Symbol s : hitting)
            in[s] = 1;
        for (Symbol s = 1; s <= v && static_cast<int>(hitting.size()) < t - 1; ++s)
            if (! in[s]) {
                in[s] = 1;
                hitting.push_back(s);
            }
        hitting.push_back(sigma);
        std::sort(hitting.begin(), hitting.end());
        return {false, ArrayViolation{sigma, std::move(hitting)}};
    }
    return {true, std::nullopt};
}

CoreExtraction array_to_core(const PermutationArray& array, int t)
{
    const std::size_t n = array.n_rows();
    const std::size_t v = array.n_symbols();
    if (n > v)
        throw InvalidArgument("array_to_core: need N <= v, got N=" + std::to_string(n) + ", v=" + std::to_string(v));
    if (auto check = is_suitable_array(array, t); ! check.suitable)
        throw InvalidArgument("array_to_core: input is not " + std::to_string(t) + "-suitable");

    std::vector<char> is_leader(v + 1, 0);
    std::vector<Symbol> leaders;
    leaders.reserve(n);
    for (const Row& row : array.rows()) {
        auto it = std::find_if(row.begin(), row.end(), [&](Symbol s) { return ! is_leader[s]; });
        is_leader[*it] = 1;
        leaders.push_back(*it);
    }

    std::vector<Symbol> renaming;
    std::vector<Symbol> new_name(v + 1, 0);
    for (Symbol s = 1; s <= static_cast<Symbol>(v); ++s)
        if (! is_leader[s]) {
            renaming.push_back(s);
            new_name[s] = static_cast<Symbol>(renaming.size());
        }

    std::vector<Row> core_rows;
    core_rows.reserve(n);
    for (const Row& row : array.rows()) {
        Row out;
        out.reserve(renaming.size());
        for (Symbol s : row)
            if (! is_leader[s])
                out.push_back(new_name[s]);
        core_rows.push_back(std::move(out));
    }

    return {PermutationArray(renaming.size(), std::move(core_rows)), t, std::move(leaders), std::move(renaming)};
}

PermutationArray core_to_array(const PermutationArray& core)
{
    const auto n = static_cast<Symbol>(core.n_rows());
    const auto v = static_cast<Symbol>(core.n_symbols());
    std::vector<Row> rows;
    rows.reserve(core.n_rows());
    for (Symbol i = 1; i <= n; ++i) {
        Row row;
        row.reserve(static_cast<std::size_t>(v + n));
        row.push_back(v + i);
        const Row& body = core.row(static_cast<std::size_t>(i - 1));
        row.insert(row.end(), body.begin(), body.end());
        for (Symbol j = 1; j <= n; ++j)
            if (j != i)
                row.push_back(v + j);
        rows.push_back(std::move(row));
    }
    return PermutationArray(static_cast<std::size_t>(v + n), std::move(rows));
}

}  // namespace suitable
