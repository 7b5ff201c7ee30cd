#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oqk/field.hpp"

namespace oqk {

struct Vec {
    FieldSpecPtr spec;
    std::vector<FieldElement> c;

    Vec() : spec(FieldSpec::gf2()) {}
    Vec(FieldSpecPtr s, size_t n) : spec(std::move(s)), c(n, FieldElement::zero(spec)) {}
    Vec(FieldSpecPtr s, std::vector<FieldElement> v) : spec(std::move(s)), c(std::move(v)) {}

    size_t dim() const { return c.size(); }
    FieldElement& operator[](size_t i) { return c[i]; }
    const FieldElement& operator[](size_t i) const { return c[i]; }
    bool is_zero() const;
    Vec operator+(const Vec& o) const;
    Vec scaled(const FieldElement& a) const;
    bool operator==(const Vec& o) const { return c == o.c; }
    std::string to_string() const;
};

// Dense row-major matrix over an exact field.
class Mat {
  public:
    Mat() : spec_(FieldSpec::gf2()) {}
    Mat(FieldSpecPtr s, size_t rows, size_t cols)
        : spec_(std::move(s)), rows_(rows), cols_(cols),
          a_(rows * cols, FieldElement::zero(spec_)) {}

    static Mat identity(const FieldSpecPtr& s, size_t n);
    static Mat from_columns(const FieldSpecPtr& s, const std::vector<Vec>& cols);
    static Mat from_rows(const FieldSpecPtr& s, const std::vector<Vec>& rows);

    const FieldSpecPtr& spec() const { return spec_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    FieldElement& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const FieldElement& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Vec row(size_t i) const;
    Vec col(size_t j) const;
    std::vector<Vec> columns() const;

    Mat operator+(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Vec apply(const Vec& v) const;  // matrix * column vector
    Mat transpose() const;
    Mat submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const;
    void paste(size_t r0, size_t c0, const Mat& block);

    bool operator==(const Mat& o) const;
    bool is_identity() const;
    bool is_zero() const;
    std::string to_string() const;
    // canonical byte key (bit codes for BinaryExt); used for group tables
    std::string key() const;

  private:
    FieldSpecPtr spec_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> a_;
};

struct Rref {
    Mat R;
    std::vector<int> pivots;  // pivot column per nonzero row
    unsigned rank = 0;
};

Rref rref(const Mat& A);
unsigned rank(const Mat& A);
std::optional<Mat> inverse(const Mat& A);
// basis of { x : A x = 0 }, as columns
std::vector<Vec> kernel_basis(const Mat& A);
// one solution of A x = b, if any
std::optional<Vec> solve(const Mat& A, const Vec& b);
// basis of the column space (columns of A reduced to an independent set)
std::vector<Vec> column_space_basis(const Mat& A);

// Row-span subspace with a cached canonical (RREF) basis.
class Subspace {
  public:
    Subspace() : spec_(FieldSpec::gf2()) {}
    static Subspace span(const FieldSpecPtr& s, size_t ambient_dim, const std::vector<Vec>& gens);

    const FieldSpecPtr& spec() const { return spec_; }
    size_t ambient_dim() const { return ambient_; }
    unsigned dim() const { return (unsigned)basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }  // canonical RREF rows
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;

  private:
    FieldSpecPtr spec_;
    size_t ambient_ = 0;
    std::vector<Vec> basis_;
};

}  // namespace oqk
