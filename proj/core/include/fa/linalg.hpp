#ifndef FA_LINALG_HPP
#define FA_LINALG_HPP

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace fa {

using Rational = mpq_class;

/* sorted by index, no explicit zeros */
using SparseVec = std::vector<std::pair<int, Rational>>;

void sparse_add(SparseVec& acc, const SparseVec& v, const Rational& scale = 1);
SparseVec sparse_normalize(std::vector<std::pair<int, Rational>> terms);

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);
    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalMatrix operator+(const RationalMatrix& other) const;
    RationalMatrix operator-(const RationalMatrix& other) const;
    RationalMatrix scaled(const Rational& c) const;
    RationalMatrix transpose() const;
    bool operator==(const RationalMatrix& other) const;

    bool is_zero() const;
    Rational trace() const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    std::vector<Rational> column(int j) const;
    void set_column(int j, const std::vector<Rational>& v);
    void set_column(int j, const SparseVec& v);

    int rank() const;
    /* columns form a basis of the null space */
    RationalMatrix kernel() const;
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

    static RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom);
    static RationalMatrix hstack(const RationalMatrix& left, const RationalMatrix& right);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/* Row-major sparse system, used for large constraint matrices. */
struct SparseRows {
    int cols = 0;
    std::vector<SparseVec> rows;

    static SparseRows from_dense(const RationalMatrix& m);
    void append(const RationalMatrix& block, int col_offset);
};

/* Null space basis.  basis(free_cols[j], k) = [j == k]. */
struct KernelResult {
    RationalMatrix basis;
    std::vector<int> free_cols;
    std::vector<int> pivot_cols;
    bool certified_modular = false;
};

/* Reduced row echelon basis of a row space.  rref(i, pivots[k]) = [i == k]. */
struct RowSpaceResult {
    RationalMatrix rref;
    std::vector<int> pivots;
    bool certified_modular = false;
};

/* Elimination runs modulo a 61-bit prime; the reconstructed rational answer
 * is verified exactly and, on failure, recomputed with rational elimination.
 * A verified modular answer is exact: rank mod p never exceeds the rational
 * rank, and the verified vectors bound it from the other side. */
KernelResult kernel(const SparseRows& a);
RowSpaceResult row_space(const SparseRows& a);

KernelResult kernel_exact(const SparseRows& a);
RowSpaceResult row_space_exact(const SparseRows& a);

/* Disable the modular path (used by tests comparing both). */
void set_modular_elimination(bool enabled);

} // namespace fa

#endif
