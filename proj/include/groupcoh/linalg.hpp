#pragma once

#include "groupcoh/intmatrix.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace groupcoh {

/// U * A * V = S with U, V unimodular and the diagonal of S a nonnegative
/// divisibility chain d1 | d2 | ... . Uinv/Vinv are tracked during the
/// reduction when requested (inverting a large unimodular matrix afterwards
/// would cost another elimination).
struct SmithDecomposition {
    IntMatrix S;
    IntMatrix U, V, Uinv, Vinv;
    int rank = 0;  // number of nonzero diagonal entries

    Int diag(int i) const {
        int n = std::min(S.rows(), S.cols());
        return i < n ? S.at(i, i) : Int(0);
    }
};

struct SnfOptions {
    bool want_u = true;
    bool want_v = true;
    bool want_uinv = false;
    bool want_vinv = false;
};

SmithDecomposition smith_normal_form(const IntMatrix& A, SnfOptions opts = {});

/// Invariant-factor normal form of a finitely generated abelian group:
/// free rank plus torsion divisors d_i >= 2 with d_i | d_{i+1}.
struct AbGroupStructure {
    long long free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbGroupStructure& o) const = default;
    /// Group order; 0 when infinite.
    Int order() const {
        if (free_rank > 0) return 0;
        Int n = 1;
        for (const Int& d : torsion) n *= d;
        return n;
    }
    std::string str() const;
};

/// Structure of Z^rows / colspan(A).
AbGroupStructure cokernel_structure(const IntMatrix& A);

/// Columns spanning {x : A x = 0} over Z (a saturated sublattice, so the
/// basis is exact, not just up to finite index).
IntMatrix kernel_basis(const IntMatrix& A);

struct LinearSolveResult {
    bool dimension_ok = true;
    bool solvable = false;
    std::vector<Int> x;  // particular solution when solvable
    IntMatrix kernel;    // basis of the integer kernel of A
};

/// Solve A x = b exactly over the integers. Distinguishes "no integer
/// solution" (solvable = false) from dimension mismatch (dimension_ok = false).
LinearSolveResult solve_linear(const IntMatrix& A, const std::vector<Int>& b);

/// A fixed coefficient matrix with many right-hand sides. Detects diagonal-
/// shaped matrices (every column supported on a single row) and solves those
/// by divisibility, skipping the Smith reduction entirely; relation matrices
/// of the standard coefficient modules all have that shape.
class LinearSolver {
public:
    explicit LinearSolver(IntMatrix A);

    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;
    bool in_span(const std::vector<Int>& b) const { return solve(b).has_value(); }
    const IntMatrix& kernel() const;
    const IntMatrix& matrix() const { return a_; }

private:
    IntMatrix a_;
    bool diagonal_mode_ = false;
    // diagonal mode: per row, the column index hitting it (or -1) and its value
    std::vector<int> row_col_;
    std::vector<Int> row_val_;
    std::shared_ptr<SmithDecomposition> dec_;  // general mode
    mutable std::shared_ptr<IntMatrix> kernel_;
};

/// True iff every column of B lies in the column span of A.
bool columns_in_span(const LinearSolver& a, const IntMatrix& b);

/// True iff colspan(A) == colspan(B) as sublattices of Z^rows.
bool same_column_span(const IntMatrix& a, const IntMatrix& b);

}  // namespace groupcoh
