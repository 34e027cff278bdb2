#pragma once

// Permutation arrays, suitable cores and the array <-> core transforms.
//
// Symbols are 1-based everywhere: a row over v symbols is a permutation of
// {1, ..., v}. The same carrier type is used for full suitable arrays and for
// cores (the array with the N row leaders stripped off).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace suitable {

using Symbol = int;
using Row = std::vector<Symbol>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An exhaustive routine refused to run because the instance is above its cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// An N x v array whose rows are permutations of [v].
///
/// Immutable after construction. A core produced from an (N, N, t) array has
/// zero symbols; that is the only case where n_symbols() may be 0.
class PermutationArray {
public:
    PermutationArray() = default;

    /// Validates that every row is a permutation of [n_symbols].
    PermutationArray(std::size_t n_symbols, std::vector<Row> rows);

    /// Infers v from the first row.
    static PermutationArray from_rows(std::vector<Row> rows);

    std::size_t n_rows() const { return rows_.size(); }
    std::size_t n_symbols() const { return n_symbols_; }

    const std::vector<Row>& rows() const { return rows_; }
    const Row& row(std::size_t r) const { return rows_[r]; }
    Symbol at(std::size_t r, std::size_t col) const { return rows_[r][col]; }

    /// Zero-based column of `sym` in row `r`.
    std::size_t position(std::size_t r, Symbol sym) const
    {
        return positions_[r * n_symbols_ + static_cast<std::size_t>(sym - 1)];
    }

    /// Number of rows whose first entry is `sym`.
    std::size_t lead_count(Symbol sym) const;

    bool contains_symbol(Symbol sym) const
    {
        return sym >= 1 && static_cast<std::size_t>(sym) <= n_symbols_;
    }

    friend bool operator==(const PermutationArray& a, const PermutationArray& b)
    {
        return a.n_symbols_ == b.n_symbols_ && a.rows_ == b.rows_;
    }

private:
    std::size_t n_symbols_ = 0;
    std::vector<Row> rows_;
    std::vector<std::uint32_t> positions_;
};

/// Strength parameter of a suitable array or core.
struct SuitabilityParams {
    int t = 1;

    /// The per-symbol slack t + 1 - v that appears in every core threshold.
    int slack(std::size_t v) const { return t + 1 - static_cast<int>(v); }
};

/// Number of rows of `core` in which every symbol before `sigma` lies in
/// `t_set`. Rows led by `sigma` always count.
std::size_t c_pre(const PermutationArray& core, Symbol sigma, std::span<const Symbol> t_set);

/// A (sigma, S) pair showing that an array is not t-suitable: no row has
/// sigma ahead of every other member of S.
struct ArrayViolation {
    Symbol sigma = 0;
    std::vector<Symbol> subset;  // sorted, includes sigma
};

struct ArraySuitability {
    bool suitable = false;
    std::optional<ArrayViolation> violation;
};

/// Checks that each symbol precedes each (t-1)-subset of the others in at
/// least one row. Requires 1 <= t <= v.
ArraySuitability is_suitable_array(const PermutationArray& array, int t);

struct CoreExtraction {
    PermutationArray core;
    int t = 0;
    /// leaders[i] is the original symbol chosen as leader of row i.
    std::vector<Symbol> leaders;
    /// renaming[k-1] is the original symbol that became core symbol k.
    std::vector<Symbol> renaming;
};

/// Strips an (N, v, t)-suitable array with N <= v down to an
/// (N, v - N, t)-suitable core. Leaders are chosen top-down: each row takes
/// its first symbol not already claimed by an earlier row. Remaining symbols
/// keep their relative order and are renamed to 1..v-N by numeric order.
CoreExtraction array_to_core(const PermutationArray& array, int t);

/// Extends an N-row core over v' symbols to an N x (v' + N) array: row i is
/// v' + i, then core row i, then the other new symbols ascending.
PermutationArray core_to_array(const PermutationArray& core);

}  // namespace suitable
