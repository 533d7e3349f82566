#include "weylem/linalg.hpp"

#include <atomic>
#include <omp.h>

namespace weylem::linalg {

namespace {
Mode g_mode = Mode::Parallel;
}

Mode default_mode() { return g_mode; }
void set_default_mode(Mode m) { g_mode = m; }

void set_threads(int n) {
    if (n <= 1) {
        g_mode = Mode::Serial;
        omp_set_num_threads(1);
    } else {
        g_mode = Mode::Parallel;
        omp_set_num_threads(n);
    }
}

Vec& axpy(Vec& y, const Scalar& c, const Vec& x) {
    if (c.is_zero()) return y;
    for (size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] += c * x[i];
    return y;
}

void scale(Vec& v, const Scalar& c) {
    for (auto& e : v) e *= c;
}

bool is_zero(const Vec& v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

Vec Matrix::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void Matrix::set_row(int i, const Vec& v) {
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
    Matrix m(int(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(int(i), rows[i]);
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    Vec out(rows_);
    for (int i = 0; i < rows_; ++i) {
        Scalar acc;
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Matrix Matrix::mul(const Matrix& o, Mode mode) const {
    if (cols_ != o.rows_) throw error("Matrix::mul: shape mismatch");
    Matrix out(rows_, o.cols_);
    parallel_for(rows_, mode, [&](int64_t i) {
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(int(i), k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) out.at(int(i), j) += a * o.at(k, j);
        }
    });
    return out;
}

std::vector<int> row_reduce(Matrix& m, Mode mode) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); ++j)
            if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
        parallel_for(m.rows(), mode, [&](int64_t i) {
            if (i == r) return;
            const Scalar f = m.at(int(i), c);
            if (f.is_zero()) return;
            for (int j = c; j < m.cols(); ++j)
                if (!m.at(r, j).is_zero()) m.at(int(i), j) -= f * m.at(r, j);
        });
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(Matrix m, Mode mode) { return int(row_reduce(m, mode).size()); }

Vec Subspace::reduce(Vec v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = v[pivots_[k]];
        if (c.is_zero()) continue;
        Scalar f = -c;
        axpy(v, f, rows_[k]);
    }
    return v;
}

bool Subspace::add(Vec v) {
    v = reduce(std::move(v));
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
        if (!v[j].is_zero()) { p = j; break; }
    if (p < 0) return false;
    scale(v, v[p].inverse());
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = rows_[k][p];
        if (!c.is_zero()) {
            Scalar f = -c;
            axpy(rows_[k], f, v);
        }
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

Vec Subspace::coordinates(const Vec& v) const {
    Vec coords(rows_.size());
    Vec rem = v;
    for (size_t k = 0; k < rows_.size(); ++k) {
        coords[k] = rem[pivots_[k]];
        if (!coords[k].is_zero()) {
            Scalar f = -coords[k];
            axpy(rem, f, rows_[k]);
        }
    }
    if (!is_zero(rem)) throw error("Subspace::coordinates: vector not in span");
    return coords;
}

void parallel_for(int64_t n, Mode mode, const std::function<void(int64_t)>& fn) {
    if (mode == Mode::Serial || n < 2) {
        for (int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
#pragma omp parallel for schedule(dynamic, 16)
    for (int64_t i = 0; i < n; ++i) fn(i);
}

bool parallel_all(int64_t n, Mode mode, const std::function<bool(int64_t)>& pred) {
    if (mode == Mode::Serial || n < 2) {
        for (int64_t i = 0; i < n; ++i)
            if (!pred(i)) return false;
        return true;
    }
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 16)
    for (int64_t i = 0; i < n; ++i) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        if (!pred(i)) ok.store(false, std::memory_order_relaxed);
    }
    return ok.load();
}

} // namespace weylem::linalg
