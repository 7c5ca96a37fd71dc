#pragma once

#include "bvlab/algebra.hpp"
#include "bvlab/rational.hpp"

#include <vector>

namespace bvlab {

// Complex rationals, the coefficient field of the per-mode cochain complexes.
struct CRat {
    Rat re = 0;
    Rat im = 0;

    CRat() = default;
    CRat(Rat r) : re(std::move(r)) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    CRat(int r) : re(r) {}
    static CRat i(const Rat& v = 1) { return CRat(0, v); }

    bool is_zero() const { return re == 0 && im == 0; }
    CRat conj() const { return CRat(re, -im); }
    CRat operator-() const { return CRat(-re, -im); }
    CRat operator+(const CRat& o) const { return CRat(re + o.re, im + o.im); }
    CRat operator-(const CRat& o) const { return CRat(re - o.re, im - o.im); }
    CRat operator*(const CRat& o) const {
        return CRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    CRat inverse() const;
    CRat operator/(const CRat& o) const { return *this * o.inverse(); }
    bool operator==(const CRat& o) const = default;

    // re + im * i as a polynomial over the given table
    GradedPoly to_poly(const TablePtr& tbl) const;
};

// Dense exact matrix.
class CMat {
public:
    CMat() = default;
    CMat(int rows, int cols) : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static CMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    CRat& operator()(int r, int c) { return data_[idx(r, c)]; }
    const CRat& operator()(int r, int c) const { return data_[idx(r, c)]; }
    bool is_zero() const;
    bool operator==(const CMat& o) const = default;

    CMat operator+(const CMat& o) const;
    CMat operator-(const CMat& o) const;
    CMat operator*(const CMat& o) const;
    CMat operator*(const CRat& s) const;
    CMat operator-() const { return *this * CRat(-1); }
    CMat transpose() const;
    CMat conj_transpose() const;

    std::vector<CRat> apply(const std::vector<CRat>& v) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<CRat> data_;
    size_t idx(int r, int c) const {
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
    }
};

int rank(CMat m);

// Basis of the right kernel, one column per basis vector.
CMat kernel_basis(CMat m);

// Exact solve A X = B with free variables set to zero.
// Throws StructureError when the system is inconsistent.
CMat solve(CMat a, CMat b);

// Inverse of a square matrix; throws StructureError when singular.
CMat inverse(const CMat& a);

// Diagonal matrix from entries.
CMat diagonal(const std::vector<CRat>& entries);

// Apply an exact matrix to a vector of polynomials.
std::vector<GradedPoly> mat_apply(const TablePtr& tbl, const CMat& m,
                                  const std::vector<GradedPoly>& v);

// Solve a square system M x = rhs with polynomial right hand sides by exact
// elimination. Throws StructureError when the matrix is singular.
std::vector<GradedPoly> mat_solve(const TablePtr& tbl, CMat m,
                                  std::vector<GradedPoly> rhs);

}  // namespace bvlab
