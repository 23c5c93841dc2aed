#include "groupcoh/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace groupcoh {

Int IntMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: matrix not square");
    int n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    os << "]";
    return os.str();
}

std::string AbGroupStructure::str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Int& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    if (free_rank > 0) {
        if (!first) os << " + ";
        if (free_rank == 1)
            os << "Z";
        else
            os << "Z^" << free_rank;
    }
    return os.str();
}

namespace {

/// Quotient rounded to nearest, so |a - q*b| <= |b|/2.
Int rounded_quotient(const Int& a, const Int& b) {
    Int q = a / b;  // truncated
    Int r = a - q * b;
    if (r.is_zero()) return q;
    Int twice = 2 * abs(r);
    if (twice > abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
    return q;
}

struct SnfWork {
    IntMatrix S, U, V, Uinv, Vinv;
    bool wu, wv, wui, wvi;

    void row_op(int dst, int src, const Int& q) {
        S.add_row_multiple(dst, src, q);
        if (wu) U.add_row_multiple(dst, src, q);
        if (wui) Uinv.add_col_multiple(src, dst, q);  // right-mult by inverse op
    }
    void col_op(int dst, int src, const Int& q) {
        S.add_col_multiple(dst, src, q);
        if (wv) V.add_col_multiple(dst, src, q);
        if (wvi) Vinv.add_row_multiple(src, dst, q);
    }
    void row_swap(int i, int k) {
        S.swap_rows(i, k);
        if (wu) U.swap_rows(i, k);
        if (wui) Uinv.swap_cols(i, k);
    }
    void col_swap(int j, int k) {
        S.swap_cols(j, k);
        if (wv) V.swap_cols(j, k);
        if (wvi) Vinv.swap_rows(j, k);
    }
    void row_negate(int i) {
        S.negate_row(i);
        if (wu) U.negate_row(i);
        if (wui) Uinv.negate_col(i);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A, SnfOptions opts) {
    const int r = A.rows(), c = A.cols();
    SnfWork w{A,
              opts.want_u ? IntMatrix::identity(r) : IntMatrix(),
              opts.want_v ? IntMatrix::identity(c) : IntMatrix(),
              opts.want_uinv ? IntMatrix::identity(r) : IntMatrix(),
              opts.want_vinv ? IntMatrix::identity(c) : IntMatrix(),
              opts.want_u,
              opts.want_v,
              opts.want_uinv,
              opts.want_vinv};

    const int nmin = std::min(r, c);
    int t = 0;
    while (t < nmin) {
        // minimal-absolute-value nonzero pivot in the trailing submatrix
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j) {
                const Int& v = w.S.at(i, j);
                if (v.is_zero()) continue;
                Int av = abs(v);
                if (pi < 0 || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                    if (best == 1) goto found;
                }
            }
    found:
        if (pi < 0) break;  // trailing submatrix is zero
        if (pi != t) w.row_swap(t, pi);
        if (pj != t) w.col_swap(t, pj);

        for (;;) {
            // clear column t below/above the pivot
            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                Int& v = w.S.at(i, t);
                if (v.is_zero()) continue;
                Int q = rounded_quotient(v, w.S.at(t, t));
                w.row_op(i, t, -q);
                if (!w.S.at(i, t).is_zero()) {
                    w.row_swap(t, i);  // strictly smaller remainder becomes pivot
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int j = t + 1; j < c; ++j) {
                Int& v = w.S.at(t, j);
                if (v.is_zero()) continue;
                Int q = rounded_quotient(v, w.S.at(t, t));
                w.col_op(j, t, -q);
                if (!w.S.at(t, j).is_zero()) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide every entry of the trailing submatrix;
            // otherwise fold the offending row in and re-clean
            bool divides = true;
            for (int i = t + 1; i < r && divides; ++i)
                for (int j = t + 1; j < c; ++j)
                    if (!(w.S.at(i, j) % w.S.at(t, t)).is_zero()) {
                        w.row_op(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.S.at(t, t) < 0) w.row_negate(t);
        ++t;
    }

    SmithDecomposition d;
    d.S = std::move(w.S);
    d.U = std::move(w.U);
    d.V = std::move(w.V);
    d.Uinv = std::move(w.Uinv);
    d.Vinv = std::move(w.Vinv);
    d.rank = t;
    return d;
}

AbGroupStructure cokernel_structure(const IntMatrix& A) {
    SmithDecomposition d = smith_normal_form(A, SnfOptions{false, false, false, false});
    AbGroupStructure s;
    s.free_rank = A.rows() - d.rank;
    for (int i = 0; i < d.rank; ++i)
        if (d.S.at(i, i) > 1) s.torsion.push_back(d.S.at(i, i));
    return s;
}

IntMatrix kernel_basis(const IntMatrix& A) {
    SmithDecomposition d = smith_normal_form(A, SnfOptions{false, true, false, false});
    std::vector<int> idx;
    for (int j = d.rank; j < A.cols(); ++j) idx.push_back(j);
    return d.V.cols_subset(idx);
}

LinearSolveResult solve_linear(const IntMatrix& A, const std::vector<Int>& b) {
    LinearSolveResult res;
    if (int(b.size()) != A.rows()) {
        res.dimension_ok = false;
        return res;
    }
    LinearSolver s(A);
    auto x = s.solve(b);
    res.kernel = s.kernel();
    if (x) {
        res.solvable = true;
        res.x = std::move(*x);
    }
    return res;
}

LinearSolver::LinearSolver(IntMatrix A) : a_(std::move(A)) {
    // diagonal shape: every column supported on exactly one row, no row hit twice
    diagonal_mode_ = true;
    row_col_.assign(size_t(a_.rows()), -1);
    row_val_.assign(size_t(a_.rows()), Int(0));
    for (int j = 0; j < a_.cols() && diagonal_mode_; ++j) {
        int hit = -1;
        for (int i = 0; i < a_.rows(); ++i) {
            if (a_.at(i, j).is_zero()) continue;
            if (hit >= 0 || row_col_[size_t(i)] >= 0) {
                diagonal_mode_ = false;
                break;
            }
            hit = i;
        }
        if (!diagonal_mode_) break;
        if (hit >= 0) {
            row_col_[size_t(hit)] = j;
            row_val_[size_t(hit)] = a_.at(hit, j);
        }
        // all-zero columns are fine: they contribute kernel vectors
    }
    if (!diagonal_mode_) {
        dec_ = std::make_shared<SmithDecomposition>(
            smith_normal_form(a_, SnfOptions{true, true, false, false}));
    }
}

std::optional<std::vector<Int>> LinearSolver::solve(const std::vector<Int>& b) const {
    if (int(b.size()) != a_.rows()) throw std::invalid_argument("LinearSolver: rhs dimension");
    if (diagonal_mode_) {
        std::vector<Int> x(size_t(a_.cols()));
        for (int i = 0; i < a_.rows(); ++i) {
            const Int& bi = b[size_t(i)];
            int j = row_col_[size_t(i)];
            if (j < 0) {
                if (!bi.is_zero()) return std::nullopt;
                continue;
            }
            if (!(bi % row_val_[size_t(i)]).is_zero()) return std::nullopt;
            x[size_t(j)] = bi / row_val_[size_t(i)];
        }
        return x;
    }
    const auto& d = *dec_;
    std::vector<Int> ub = d.U.mul_vec(b);
    std::vector<Int> y(size_t(a_.cols()));
    int nmin = std::min(a_.rows(), a_.cols());
    for (int i = 0; i < a_.rows(); ++i) {
        if (i < nmin && !d.S.at(i, i).is_zero()) {
            if (!(ub[size_t(i)] % d.S.at(i, i)).is_zero()) return std::nullopt;
            y[size_t(i)] = ub[size_t(i)] / d.S.at(i, i);
        } else if (!ub[size_t(i)].is_zero()) {
            return std::nullopt;
        }
    }
    return d.V.mul_vec(y);
}

const IntMatrix& LinearSolver::kernel() const {
    if (!kernel_) {
        if (diagonal_mode_) {
            std::vector<int> zero_cols;
            std::vector<bool> pivot(size_t(a_.cols()), false);
            for (int i = 0; i < a_.rows(); ++i)
                if (row_col_[size_t(i)] >= 0) pivot[size_t(row_col_[size_t(i)])] = true;
            IntMatrix k(a_.cols(), 0);
            for (int j = 0; j < a_.cols(); ++j)
                if (!pivot[size_t(j)]) zero_cols.push_back(j);
            k = IntMatrix(a_.cols(), int(zero_cols.size()));
            for (size_t jj = 0; jj < zero_cols.size(); ++jj) k.at(zero_cols[jj], int(jj)) = 1;
            kernel_ = std::make_shared<IntMatrix>(std::move(k));
        } else {
            std::vector<int> idx;
            for (int j = dec_->rank; j < a_.cols(); ++j) idx.push_back(j);
            kernel_ = std::make_shared<IntMatrix>(dec_->V.cols_subset(idx));
        }
    }
    return *kernel_;
}

bool columns_in_span(const LinearSolver& a, const IntMatrix& b) {
    for (int j = 0; j < b.cols(); ++j)
        if (!a.in_span(b.col_vec(j))) return false;
    return true;
}

bool same_column_span(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) return false;
    LinearSolver sa(a), sb(b);
    return columns_in_span(sa, b) && columns_in_span(sb, a);
}

}  // namespace groupcoh
