#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace groupcoh {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix over Z with arbitrary-precision entries, row-major storage.
/// Matrices with zero rows or zero columns are legal everywhere and denote
/// maps to or from the zero group.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

    /// Convenience for literals in tests: rows of machine integers.
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        int r = int(rows.size());
        int c = r ? int(rows.begin()->size()) : 0;
        IntMatrix m(r, c);
        int i = 0;
        for (const auto& row : rows) {
            if (int(row.size()) != c) throw std::invalid_argument("from_rows: ragged rows");
            int j = 0;
            for (long long v : row) m.at(i, j++) = v;
            ++i;
        }
        return m;
    }

    static IntMatrix column(const std::vector<Int>& v) {
        IntMatrix m(int(v.size()), 1);
        for (size_t i = 0; i < v.size(); ++i) m.at(int(i), 0) = v[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& aik = at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Int& b = o.at(k, j);
                    if (!b.is_zero()) r.at(i, j) += aik * b;
                }
            }
        return r;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        check_same_shape(o, "sum");
        IntMatrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    IntMatrix operator-(const IntMatrix& o) const {
        check_same_shape(o, "difference");
        IntMatrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    IntMatrix scaled(const Int& c) const {
        IntMatrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
        return r;
    }

    IntMatrix transposed() const {
        IntMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_zero() const {
        for (const Int& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }
    /// Diagonal with entries +-1 only.
    bool is_signed_identity() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const Int& v = at(i, j);
                if (i == j ? (v != 1 && v != -1) : !v.is_zero()) return false;
            }
        return true;
    }

    std::vector<Int> col_vec(int j) const {
        std::vector<Int> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }
    std::vector<Int> row_vec(int i) const {
        std::vector<Int> v(cols_);
        for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
        return v;
    }
    void set_col(int j, const std::vector<Int>& v) {
        for (int i = 0; i < rows_; ++i) at(i, j) = v[size_t(i)];
    }

    IntMatrix cols_subset(const std::vector<int>& idx) const {
        IntMatrix r(rows_, int(idx.size()));
        for (size_t j = 0; j < idx.size(); ++j)
            for (int i = 0; i < rows_; ++i) r.at(i, int(j)) = at(i, idx[j]);
        return r;
    }
    IntMatrix rows_subset(const std::vector<int>& idx) const {
        IntMatrix r(int(idx.size()), cols_);
        for (size_t i = 0; i < idx.size(); ++i)
            for (int j = 0; j < cols_; ++j) r.at(int(i), j) = at(idx[i], j);
        return r;
    }

    IntMatrix hcat(const IntMatrix& o) const {
        if (rows_ != o.rows_) throw std::invalid_argument("hcat: row mismatch");
        IntMatrix r(rows_, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }
    IntMatrix vcat(const IntMatrix& o) const {
        if (cols_ != o.cols_) throw std::invalid_argument("vcat: column mismatch");
        IntMatrix r(rows_ + o.rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int i = 0; i < o.rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    static IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
        int r = 0, c = 0;
        for (const auto& b : blocks) r += b.rows(), c += b.cols();
        IntMatrix m(r, c);
        int ro = 0, co = 0;
        for (const auto& b : blocks) {
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < b.cols(); ++j) m.at(ro + i, co + j) = b.at(i, j);
            ro += b.rows(), co += b.cols();
        }
        return m;
    }

    std::vector<Int> mul_vec(const std::vector<Int>& v) const {
        if (int(v.size()) != cols_) throw std::invalid_argument("mul_vec: dimension mismatch");
        std::vector<Int> r(rows_);
        for (int i = 0; i < rows_; ++i) {
            Int s = 0;
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) s += at(i, j) * v[j];
            r[size_t(i)] = std::move(s);
        }
        return r;
    }

    // Elementary operations used by the Smith reduction.
    void swap_rows(int i, int k) {
        for (int j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
    }
    void swap_cols(int j, int k) {
        for (int i = 0; i < rows_; ++i) std::swap(at(i, j), at(i, k));
    }
    /// row[dst] += q * row[src]
    void add_row_multiple(int dst, int src, const Int& q) {
        if (q.is_zero()) return;
        for (int j = 0; j < cols_; ++j)
            if (!at(src, j).is_zero()) at(dst, j) += q * at(src, j);
    }
    /// col[dst] += q * col[src]
    void add_col_multiple(int dst, int src, const Int& q) {
        if (q.is_zero()) return;
        for (int i = 0; i < rows_; ++i)
            if (!at(i, src).is_zero()) at(i, dst) += q * at(i, src);
    }
    void negate_row(int i) {
        for (int j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
    }
    void negate_col(int j) {
        for (int i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. Intended for
    /// the small matrices showing up in tests and unimodularity checks.
    Int det() const;

    std::string str() const;

private:
    void check_same_shape(const IntMatrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("IntMatrix: dimension mismatch in ") + what);
    }

    int rows_, cols_;
    std::vector<Int> a_;
};

/// Column-sparse matrix used for chain-level maps between monomial modules,
/// where dense storage of e.g. bar differentials would be wasteful. This is a
/// representation of formulas, not a linear-algebra backend; anything that
/// needs normal forms converts to IntMatrix first.
struct SparseCols {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, Int>>> col;  // per column: (row, coeff)

    SparseCols() = default;
    SparseCols(int r, int c) : rows(r), cols(c), col(size_t(c)) {}

    static SparseCols from_dense(const IntMatrix& m) {
        SparseCols s(m.rows(), m.cols());
        for (int j = 0; j < m.cols(); ++j)
            for (int i = 0; i < m.rows(); ++i)
                if (!m.at(i, j).is_zero()) s.col[size_t(j)].emplace_back(i, m.at(i, j));
        return s;
    }
    IntMatrix dense() const {
        IntMatrix m(rows, cols);
        for (int j = 0; j < cols; ++j)
            for (const auto& [i, v] : col[size_t(j)]) m.at(i, j) += v;
        return m;
    }
    /// this * inner (composition of maps).
    SparseCols compose(const SparseCols& inner) const {
        if (cols != inner.rows) throw std::invalid_argument("SparseCols: dimension mismatch");
        SparseCols r(rows, inner.cols);
        std::vector<Int> acc(size_t(rows));
        for (int j = 0; j < inner.cols; ++j) {
            std::vector<int> touched;
            for (const auto& [k, v] : inner.col[size_t(j)])
                for (const auto& [i, w] : col[size_t(k)]) {
                    if (acc[size_t(i)].is_zero()) touched.push_back(i);
                    acc[size_t(i)] += v * w;
                }
            for (int i : touched) {
                if (!acc[size_t(i)].is_zero()) r.col[size_t(j)].emplace_back(i, acc[size_t(i)]);
                acc[size_t(i)] = 0;
            }
        }
        return r;
    }
    bool is_zero() const {
        std::vector<Int> acc(size_t(rows));
        for (const auto& c : col) {
            std::vector<int> touched;
            for (const auto& [i, v] : c) {
                if (acc[size_t(i)].is_zero()) touched.push_back(i);
                acc[size_t(i)] += v;
            }
            for (int i : touched) {
                if (!acc[size_t(i)].is_zero()) return false;
                acc[size_t(i)] = 0;
            }
        }
        return true;
    }
    SparseCols transposed() const { return from_dense(dense().transposed()); }
};

}  // namespace groupcoh
