#include "beltrami/linear_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace beltrami {

std::string to_string(const RowLabel& r)
{
    return r.equation + "[" + std::to_string(r.order) + "]@" + to_string(r.monomial);
}

ConstraintMatrix::ConstraintMatrix(std::vector<CoefficientIndex> col_labels) : col_labels_(std::move(col_labels)) {}

ConstraintMatrix::ConstraintMatrix(std::size_t rows, std::size_t cols)
    : col_labels_(cols), row_labels_(rows)
{
}

ConstraintMatrix ConstraintMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols)
{
    ConstraintMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("ConstraintMatrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, rows[r][c]);
    }
    return m;
}

std::size_t ConstraintMatrix::add_row(RowLabel label)
{
    row_labels_.push_back(std::move(label));
    return row_labels_.size() - 1;
}

void ConstraintMatrix::check(std::size_t row, std::size_t col) const
{
    if (row >= rows() || col >= cols())
        throw std::out_of_range("ConstraintMatrix: index out of range");
}

void ConstraintMatrix::set(std::size_t row, std::size_t col, const Rational& value)
{
    check(row, col);
    if (value == 0)
        entries_.erase({row, col});
    else
        entries_[{row, col}] = value;
}

void ConstraintMatrix::add_to(std::size_t row, std::size_t col, const Rational& value)
{
    check(row, col);
    if (value == 0)
        return;
    auto [it, inserted] = entries_.try_emplace({row, col}, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0)
            entries_.erase(it);
    }
}

Rational ConstraintMatrix::at(std::size_t row, std::size_t col) const
{
    check(row, col);
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Rational(0) : it->second;
}

std::optional<std::size_t> ConstraintMatrix::find_column(const CoefficientIndex& c) const
{
    auto it = std::find(col_labels_.begin(), col_labels_.end(), c);
    if (it == col_labels_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - col_labels_.begin());
}

std::vector<std::pair<std::size_t, Rational>> ConstraintMatrix::row(std::size_t r) const
{
    std::vector<std::pair<std::size_t, Rational>> out;
    for (auto it = entries_.lower_bound({r, 0}); it != entries_.end() && it->first.first == r; ++it)
        out.emplace_back(it->first.second, it->second);
    return out;
}

std::vector<std::vector<std::pair<std::size_t, Rational>>> ConstraintMatrix::sparse_rows() const
{
    std::vector<std::vector<std::pair<std::size_t, Rational>>> out(rows());
    for (const auto& [rc, v] : entries_)
        out[rc.first].emplace_back(rc.second, v);
    return out;
}

RationalVector ConstraintMatrix::apply(std::span<const Rational> v) const
{
    if (v.size() != cols())
        throw std::invalid_argument("ConstraintMatrix::apply: dimension mismatch");
    RationalVector out(rows(), Rational(0));
    for (const auto& [rc, a] : entries_)
        out[rc.first] += a * v[rc.second];
    return out;
}

ConstraintMatrix ConstraintMatrix::without_empty_rows() const
{
    std::vector<bool> used(rows(), false);
    for (const auto& [rc, v] : entries_)
        used[rc.first] = true;
    ConstraintMatrix out(col_labels_);
    std::vector<std::size_t> remap(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        if (used[r])
            remap[r] = out.add_row(row_labels_[r]);
    for (const auto& [rc, v] : entries_)
        out.entries_.emplace(std::make_pair(remap[rc.first], rc.second), v);
    return out;
}

ConstraintMatrix ConstraintMatrix::select_columns(std::span<const std::size_t> cols) const
{
    std::vector<CoefficientIndex> labels;
    std::vector<std::optional<std::size_t>> remap(this->cols());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        labels.push_back(col_labels_.at(cols[j]));
        remap[cols[j]] = j;
    }
    ConstraintMatrix out(std::move(labels));
    out.row_labels_ = row_labels_;
    for (const auto& [rc, v] : entries_)
        if (remap[rc.second])
            out.entries_.emplace(std::make_pair(rc.first, *remap[rc.second]), v);
    return out;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;
using SparseRationalRow = std::vector<std::pair<std::size_t, Rational>>;

void make_primitive(IntRow& row)
{
    Integer g = 0;
    for (const auto& [c, a] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1)
            return;
    }
    if (g > 1)
        for (auto& [c, a] : row)
            mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

IntRow integerize(const SparseRationalRow& row)
{
    Integer l = 1;
    for (const auto& [c, q] : row)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntRow out;
    out.reserve(row.size());
    for (const auto& [c, q] : row) {
        Integer a = l / q.get_den();
        a *= q.get_num();
        out.emplace_back(c, std::move(a));
    }
    make_primitive(out);
    return out;
}

// m1 * row - m2 * pivot, where the leading entries cancel.
IntRow combine(const IntRow& row, const IntRow& pivot, const Integer& m1, const Integer& m2)
{
    IntRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, m1 * row[i].second);
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -(m2 * pivot[j].second));
            ++j;
        } else {
            Integer v = m1 * row[i].second;
            v -= m2 * pivot[j].second;
            if (v != 0)
                out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    make_primitive(out);
    return out;
}

// Row echelon form by fraction-free elimination over Z. Columns are
// processed in increasing order; the pivot for a column is the row with
// the smallest original index among rows leading in that column. Rows are
// kept primitive (content divided out) after every update.
struct Echelon {
    std::map<std::size_t, IntRow> pivot_rows;
};

Echelon echelonize(const std::vector<SparseRationalRow>& rows)
{
    std::vector<IntRow> work;
    work.reserve(rows.size());
    std::map<std::size_t, std::set<std::size_t>> by_lead;
    for (const auto& r : rows) {
        if (r.empty())
            continue;
        work.push_back(integerize(r));
        by_lead[work.back().front().first].insert(work.size() - 1);
    }

    Echelon e;
    while (!by_lead.empty()) {
        auto node = by_lead.extract(by_lead.begin());
        const std::size_t col = node.key();
        auto& ids = node.mapped();
        const std::size_t pivot_id = *ids.begin();
        const IntRow& pivot = work[pivot_id];
        const Integer& p = pivot.front().second;
        for (auto it = std::next(ids.begin()); it != ids.end(); ++it) {
            IntRow& r = work[*it];
            const Integer& a = r.front().second;
            Integer g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
            IntRow next = combine(r, pivot, p / g, a / g);
            r = std::move(next);
            if (!r.empty())
                by_lead[r.front().first].insert(*it);
        }
        e.pivot_rows.emplace(col, std::move(work[pivot_id]));
    }
    return e;
}

std::vector<SparseRationalRow> dense_to_sparse(const std::vector<RationalVector>& rows, std::size_t& cols)
{
    cols = rows.empty() ? 0 : rows.front().size();
    std::vector<SparseRationalRow> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != cols)
            throw std::invalid_argument("rank: ragged rows");
        SparseRationalRow s;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0)
                s.emplace_back(c, r[c]);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

std::size_t rank(const ConstraintMatrix& m) { return echelonize(m.sparse_rows()).pivot_rows.size(); }

std::size_t rank(const std::vector<RationalVector>& rows)
{
    std::size_t cols = 0;
    return echelonize(dense_to_sparse(rows, cols)).pivot_rows.size();
}

KernelBasis kernel_basis(const ConstraintMatrix& m)
{
    const Echelon e = echelonize(m.sparse_rows());
    KernelBasis basis;
    basis.col_labels = m.col_labels();
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (e.pivot_rows.count(free))
            continue;
        RationalVector x(m.cols(), Rational(0));
        x[free] = 1;
        // Back substitution; pivots right of `free` only see zero unknowns.
        for (auto it = std::make_reverse_iterator(e.pivot_rows.lower_bound(free)); it != e.pivot_rows.rend(); ++it) {
            const auto& [col, row] = *it;
            Rational s = 0;
            for (std::size_t k = 1; k < row.size(); ++k)
                if (x[row[k].first] != 0)
                    s += Rational(row[k].second) * x[row[k].first];
            if (s != 0)
                x[col] = -s / Rational(row.front().second);
        }
        auto lead = std::find_if(x.begin(), x.end(), [](const Rational& q) { return q != 0; });
        const Rational scale = *lead;
        for (auto& q : x)
            q /= scale;
        basis.vectors.push_back(std::move(x));
    }
    return basis;
}

bool is_consistent(const ConstraintMatrix& m, std::span<const Rational> rhs)
{
    if (rhs.size() != m.rows())
        throw std::invalid_argument("is_consistent: rhs length mismatch");
    auto rows = m.sparse_rows();
    const std::size_t base = rank(m);
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (rhs[r] != 0)
            rows[r].emplace_back(m.cols(), rhs[r]);
    return echelonize(rows).pivot_rows.size() == base;
}

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b)
{
    std::vector<RationalVector> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t r = rank(both);
    return rank(a) == r && rank(b) == r;
}

bool span_contains(const std::vector<RationalVector>& outer, const std::vector<RationalVector>& inner)
{
    std::vector<RationalVector> both = outer;
    both.insert(both.end(), inner.begin(), inner.end());
    return rank(both) == rank(outer);
}

} // namespace beltrami
