#include "bvlab/linalg.hpp"

#include "bvlab/errors.hpp"

namespace bvlab {

CRat CRat::inverse() const {
    Rat n = re * re + im * im;
    if (n == 0) throw StructureError("division by zero complex rational");
    return CRat(re / n, -im / n);
}

GradedPoly CRat::to_poly(const TablePtr& tbl) const {
    GradedPoly p = GradedPoly::constant(tbl, re);
    if (im != 0) p += GradedPoly::variable(tbl, tbl->imag()) * im;
    return p;
}

CMat CMat::identity(int n) {
    CMat m(n, n);
    for (int j = 0; j < n; ++j) m(j, j) = CRat(1);
    return m;
}

bool CMat::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

CMat CMat::operator+(const CMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw StructureError("matrix shape mismatch in addition");
    CMat r(rows_, cols_);
    for (size_t j = 0; j < data_.size(); ++j) r.data_[j] = data_[j] + o.data_[j];
    return r;
}

CMat CMat::operator-(const CMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw StructureError("matrix shape mismatch in subtraction");
    CMat r(rows_, cols_);
    for (size_t j = 0; j < data_.size(); ++j) r.data_[j] = data_[j] - o.data_[j];
    return r;
}

CMat CMat::operator*(const CMat& o) const {
    if (cols_ != o.rows_) throw StructureError("matrix shape mismatch in product");
    CMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const CRat& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const CRat& b = o(k, j);
                if (!b.is_zero()) r(i, j) = r(i, j) + a * b;
            }
        }
    return r;
}

CMat CMat::operator*(const CRat& s) const {
    CMat r(rows_, cols_);
    for (size_t j = 0; j < data_.size(); ++j) r.data_[j] = data_[j] * s;
    return r;
}

CMat CMat::transpose() const {
    CMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

CMat CMat::conj_transpose() const {
    CMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
    return r;
}

std::vector<CRat> CMat::apply(const std::vector<CRat>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw StructureError("vector length mismatch in apply");
    std::vector<CRat> r(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero())
                r[static_cast<size_t>(i)] =
                    r[static_cast<size_t>(i)] + (*this)(i, j) * v[static_cast<size_t>(j)];
    return r;
}

namespace {

// Row-reduces `m` in place; returns pivot columns. When `rhs` is given the
// same operations are applied to it.
std::vector<int> row_reduce(CMat& m, CMat* rhs = nullptr) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!m(r, col).is_zero()) { p = r; break; }
        if (p < 0) continue;
        if (p != row) {
            for (int c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
            if (rhs)
                for (int c = 0; c < rhs->cols(); ++c) std::swap((*rhs)(p, c), (*rhs)(row, c));
        }
        CRat inv = m(row, col).inverse();
        for (int c = 0; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
        if (rhs)
            for (int c = 0; c < rhs->cols(); ++c) (*rhs)(row, c) = (*rhs)(row, c) * inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            CRat f = m(r, col);
            for (int c = 0; c < m.cols(); ++c) m(r, c) = m(r, c) - f * m(row, c);
            if (rhs)
                for (int c = 0; c < rhs->cols(); ++c)
                    (*rhs)(r, c) = (*rhs)(r, c) - f * (*rhs)(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(CMat m) {
    return static_cast<int>(row_reduce(m).size());
}

CMat kernel_basis(CMat m) {
    int n = m.cols();
    std::vector<int> pivots = row_reduce(m);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);

    CMat basis(n, static_cast<int>(free_cols.size()));
    for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
        int fc = free_cols[static_cast<size_t>(j)];
        basis(fc, j) = CRat(1);
        for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
            basis(pivots[static_cast<size_t>(r)], j) = -m(r, fc);
    }
    return basis;
}

CMat solve(CMat a, CMat b) {
    if (a.rows() != b.rows()) throw StructureError("solve: shape mismatch");
    std::vector<int> pivots = row_reduce(a, &b);
    // consistency: zero rows of a must have zero rhs
    for (int r = static_cast<int>(pivots.size()); r < a.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
            if (!b(r, c).is_zero())
                throw StructureError("solve: inconsistent linear system");
    CMat x(a.cols(), b.cols());
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
        for (int c = 0; c < b.cols(); ++c)
            x(pivots[static_cast<size_t>(r)], c) = b(r, c);
    return x;
}

CMat inverse(const CMat& a) {
    if (a.rows() != a.cols()) throw StructureError("inverse of non-square matrix");
    CMat m = a;
    CMat rhs = CMat::identity(a.rows());
    std::vector<int> pivots = row_reduce(m, &rhs);
    if (static_cast<int>(pivots.size()) != a.rows())
        throw StructureError("matrix is singular");
    return rhs;
}

CMat diagonal(const std::vector<CRat>& entries) {
    CMat m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    for (int j = 0; j < m.rows(); ++j) m(j, j) = entries[static_cast<size_t>(j)];
    return m;
}

std::vector<GradedPoly> mat_apply(const TablePtr& tbl, const CMat& m,
                                  const std::vector<GradedPoly>& v) {
    if (static_cast<size_t>(m.cols()) != v.size())
        throw StructureError("matrix does not fit the polynomial vector");
    std::vector<GradedPoly> out(static_cast<size_t>(m.rows()), GradedPoly::zero(tbl));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            CRat e = m(r, c);
            if (!e.is_zero()) out[r] = out[r] + e.to_poly(tbl) * v[static_cast<size_t>(c)];
        }
    return out;
}

std::vector<GradedPoly> mat_solve(const TablePtr& tbl, CMat m,
                                  std::vector<GradedPoly> rhs) {
    const int n = m.rows();
    if (m.cols() != n || static_cast<size_t>(n) != rhs.size())
        throw StructureError("matrix does not fit the polynomial vector");
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n && piv < 0; ++r)
            if (!m(r, c).is_zero()) piv = r;
        if (piv < 0) throw StructureError("singular linear system");
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
            std::swap(rhs[static_cast<size_t>(c)], rhs[static_cast<size_t>(piv)]);
        }
        CRat inv = m(c, c).inverse();
        for (int j = 0; j < n; ++j) m(c, j) = m(c, j) * inv;
        rhs[static_cast<size_t>(c)] = inv.to_poly(tbl) * rhs[static_cast<size_t>(c)];
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            CRat f = m(r, c);
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) m(r, j) = m(r, j) - f * m(c, j);
            rhs[static_cast<size_t>(r)] =
                rhs[static_cast<size_t>(r)] - f.to_poly(tbl) * rhs[static_cast<size_t>(c)];
        }
    }
    return rhs;
}

}  // namespace bvlab
