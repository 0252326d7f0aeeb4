#pragma once

#include "beltrami/monomial.hpp"
#include "beltrami/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace beltrami {

using RationalVector = std::vector<Rational>;

/// Identifies one scalar equation: which operator equation it comes from
/// (e.g. "curl.x", "div", "fi"), the index m of the leading unknown X_m,
/// and the monomial whose coefficient is being matched.
struct RowLabel {
    std::string equation;
    unsigned order = 0;
    Monomial monomial{};

    friend bool operator==(const RowLabel&, const RowLabel&) = default;
};

std::string to_string(const RowLabel& r);

/// Sparse exact matrix with labeled rows and columns. Only nonzero entries
/// are stored.
class ConstraintMatrix {
public:
    using Entries = std::map<std::pair<std::size_t, std::size_t>, Rational>;

    ConstraintMatrix() = default;
    explicit ConstraintMatrix(std::vector<CoefficientIndex> col_labels);
    /// Unlabeled rows x cols zero matrix (default labels), for generic use.
    ConstraintMatrix(std::size_t rows, std::size_t cols);
    /// Dense constructor with default labels.
    static ConstraintMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return col_labels_.size(); }

    std::size_t add_row(RowLabel label);
    void set(std::size_t row, std::size_t col, const Rational& value);
    void add_to(std::size_t row, std::size_t col, const Rational& value);
    Rational at(std::size_t row, std::size_t col) const;

    const Entries& entries() const { return entries_; }
    const std::vector<CoefficientIndex>& col_labels() const { return col_labels_; }
    const std::vector<RowLabel>& row_labels() const { return row_labels_; }
    std::optional<std::size_t> find_column(const CoefficientIndex& c) const;

    /// Entries of one row as (col, value) pairs in column order.
    std::vector<std::pair<std::size_t, Rational>> row(std::size_t r) const;
    /// All rows in sparse form.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_rows() const;

    RationalVector apply(std::span<const Rational> v) const;

    /// Copy with rows that have no stored entries removed (order kept).
    ConstraintMatrix without_empty_rows() const;

    /// Copy keeping only the given columns, in the given order.
    ConstraintMatrix select_columns(std::span<const std::size_t> cols) const;

    friend bool operator==(const ConstraintMatrix&, const ConstraintMatrix&) = default;

private:
    void check(std::size_t row, std::size_t col) const;

    std::vector<CoefficientIndex> col_labels_;
    std::vector<RowLabel> row_labels_;
    Entries entries_;
};

/// Basis of an exact nullspace. Each vector is scaled so that its first
/// nonzero entry is 1.
struct KernelBasis {
    std::vector<RationalVector> vectors;
    std::vector<CoefficientIndex> col_labels;

    std::size_t dimension() const { return vectors.size(); }
};

/// Exact rank over Q.
std::size_t rank(const ConstraintMatrix& m);

/// Rank of a list of dense row vectors of equal length.
std::size_t rank(const std::vector<RationalVector>& rows);

/// Basis of {v : M v = 0}; dimension cols - rank.
KernelBasis kernel_basis(const ConstraintMatrix& m);

/// True iff M x = rhs has a solution (rank of M equals rank of [M | rhs]).
bool is_consistent(const ConstraintMatrix& m, std::span<const Rational> rhs);

/// span(a) == span(b), decided by exact rank.
bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b);

/// True iff every vector of `inner` lies in span(outer).
bool span_contains(const std::vector<RationalVector>& outer, const std::vector<RationalVector>& inner);

} // namespace beltrami
