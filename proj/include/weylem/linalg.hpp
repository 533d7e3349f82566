#pragma once

#include "weylem/scalar.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace weylem::linalg {

/// Execution mode for the data-parallel kernels.  Parallel uses OpenMP;
/// Serial is the reference implementation kept for testing and for the
/// kernel benchmark.  Results are bit-identical: arithmetic is exact and
/// each parallel iteration touches disjoint data.
enum class Mode { Serial, Parallel };

Mode default_mode();
void set_default_mode(Mode m);
void set_threads(int n);  // caps OpenMP threads; n <= 1 selects Serial

using Vec = std::vector<Scalar>;

Vec& axpy(Vec& y, const Scalar& c, const Vec& x);  // y += c*x
void scale(Vec& v, const Scalar& c);
bool is_zero(const Vec& v);

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    Vec row(int i) const;
    void set_row(int i, const Vec& v);

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<Vec>& rows, int cols);

    Vec apply(const Vec& v) const;          // matrix * column vector
    Matrix mul(const Matrix& o, Mode mode = default_mode()) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_, cols_;
    std::vector<Scalar> data_;
};

/// In-place reduction to reduced row echelon form with fixed column-order
/// pivoting (first nonzero row per column, leading entries normalized to 1).
/// Returns the pivot columns.  The elimination of the non-pivot rows is the
/// data-parallel inner loop.
std::vector<int> row_reduce(Matrix& m, Mode mode = default_mode());

int rank(Matrix m, Mode mode = default_mode());

/// A growing echelonized subspace of a fixed ambient coordinate space.
/// Rows are kept fully reduced with pivot entries 1, ordered by pivot
/// column, so all derived data is deterministic.
class Subspace {
public:
    explicit Subspace(int ambient) : ambient_(ambient) {}

    int ambient() const { return ambient_; }
    int dim() const { return int(rows_.size()); }

    /// Residue of v after eliminating all current pivots.
    Vec reduce(Vec v) const;

    /// Inserts v if independent; returns true when the dimension grew.
    bool add(Vec v);

    bool contains(const Vec& v) const { return is_zero(reduce(v)); }

    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Coordinates of v in terms of rows() (throws if v is not in the span).
    Vec coordinates(const Vec& v) const;

private:
    int ambient_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

/// Runs fn(i) for i in [0, n), serial or OpenMP-parallel.  fn must only
/// write to data owned by iteration i.
void parallel_for(int64_t n, Mode mode, const std::function<void(int64_t)>& fn);

/// All-true reduction of pred(i) over [0, n) with early exit.
bool parallel_all(int64_t n, Mode mode, const std::function<bool(int64_t)>& pred);

} // namespace weylem::linalg
