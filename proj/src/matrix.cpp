#include "jkres/matrix.hpp"

namespace jkres {

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
    RatMatrix out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            out.entries[i][j] = Rational(m.entries[i][j]);
    return out;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& cols_in) {
    if (cols_in.empty()) return RatMatrix();
    int r = static_cast<int>(cols_in[0].size());
    int c = static_cast<int>(cols_in.size());
    RatMatrix out(r, c);
    for (int j = 0; j < c; ++j) {
        if (static_cast<int>(cols_in[j].size()) != r)
            throw Error(ErrorCode::BadInput, "ragged column list");
        for (int i = 0; i < r; ++i) out.entries[i][j] = cols_in[j][i];
    }
    return out;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows_in) {
    if (rows_in.empty()) return RatMatrix();
    int r = static_cast<int>(rows_in.size());
    int c = static_cast<int>(rows_in[0].size());
    RatMatrix out(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows_in[i].size()) != c)
            throw Error(ErrorCode::BadInput, "ragged row list");
        out.entries[i] = rows_in[i];
    }
    return out;
}

Rational det(const RatMatrix& m) {
    if (m.rows != m.cols) throw Error(ErrorCode::BadInput, "determinant of non-square matrix");
    int n = m.rows;
    auto a = m.entries;
    Rational result(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (!a[row][col].is_zero()) { pivot = row; break; }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            result = -result;
        }
        result *= a[col][col];
        Rational inv = a[col][col].inverse();
        for (int row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            Rational factor = a[row][col] * inv;
            for (int j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
        }
    }
    return result;
}

Int det(const IntMatrix& m) {
    Rational d = det(RatMatrix::from_int(m));
    return d.to_int();
}

std::optional<RatVec> try_solve(const RatMatrix& a_in, const RatVec& b) {
    if (a_in.rows != a_in.cols || static_cast<int>(b.size()) != a_in.rows) return std::nullopt;
    int n = a_in.rows;
    auto a = a_in.entries;
    RatVec rhs = b;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (!a[row][col].is_zero()) { pivot = row; break; }
        }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(rhs[pivot], rhs[col]);
        }
        Rational inv = a[col][col].inverse();
        for (int row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            Rational factor = a[row][col] * inv;
            for (int j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
            rhs[row] -= factor * rhs[col];
        }
    }
    RatVec x(n, Rational(0));
    for (int row = n - 1; row >= 0; --row) {
        Rational acc = rhs[row];
        for (int j = row + 1; j < n; ++j) acc -= a[row][j] * x[j];
        x[row] = acc * a[row][row].inverse();
    }
    return x;
}

RatVec solve_in_basis(const std::vector<RatVec>& basis, const RatVec& w) {
    if (basis.empty()) throw Error(ErrorCode::BadInput, "empty basis");
    if (basis.size() != w.size() || basis[0].size() != w.size())
        throw Error(ErrorCode::BadInput, "basis size does not match ambient dimension");
    auto sol = try_solve(RatMatrix::from_columns(basis), w);
    if (!sol) throw Error(ErrorCode::BadInput, "vectors are linearly dependent");
    return *sol;
}

namespace {

// Row-reduce in place; returns pivot columns.
std::vector<int> row_reduce(std::vector<RatVec>& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[r]);
        Rational inv = a[r][c].inverse();
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational factor = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int rank(const RatMatrix& m) {
    auto a = m.entries;
    return static_cast<int>(row_reduce(a).size());
}

std::vector<RatVec> kernel(const RatMatrix& m) {
    auto a = m.entries;
    std::vector<int> pivots = row_reduce(a);
    int cols = m.cols;
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec k(cols, Rational(0));
        k[free_col] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            k[pivots[r]] = -a[r][free_col];
        basis.push_back(std::move(k));
    }
    return basis;
}

std::optional<RatMatrix> try_inverse(const RatMatrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    int n = m.rows;
    std::vector<RatVec> a(n, RatVec(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m.entries[i][j];
        a[i][n + i] = Rational(1);
    }
    std::vector<int> pivots = row_reduce(a);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.entries[i][j] = a[i][n + j];
    return inv;
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::BadInput, "dot: dimension mismatch");
    Rational acc(0);
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::BadInput, "dot: dimension mismatch");
    Int acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Rational dot_mixed(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::BadInput, "dot: dimension mismatch");
    Rational acc(0);
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

} // namespace jkres
