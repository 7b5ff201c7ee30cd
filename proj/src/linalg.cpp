#include "oqk/linalg.hpp"

#include <sstream>

namespace oqk {

bool Vec::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

Vec Vec::operator+(const Vec& o) const {
    Vec r(spec, c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] + o[i];
    return r;
}

Vec Vec::scaled(const FieldElement& a) const {
    Vec r(spec, c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] * a;
    return r;
}

std::string Vec::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += c[i].to_string();
    }
    return s + ")";
}

Mat Mat::identity(const FieldSpecPtr& s, size_t n) {
    Mat m(s, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(s);
    return m;
}

Mat Mat::from_columns(const FieldSpecPtr& s, const std::vector<Vec>& cols) {
    size_t n = cols.empty() ? 0 : cols[0].dim();
    Mat m(s, n, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
    return m;
}

Mat Mat::from_rows(const FieldSpecPtr& s, const std::vector<Vec>& rows) {
    size_t n = rows.empty() ? 0 : rows[0].dim();
    Mat m(s, rows.size(), n);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    return m;
}

Vec Mat::row(size_t i) const {
    Vec v(spec_, cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Mat::col(size_t j) const {
    Vec v(spec_, rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Vec> Mat::columns() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (size_t j = 0; j < cols_; ++j) out.push_back(col(j));
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(spec_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    Mat r(spec_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const FieldElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const FieldElement& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) = r.at(i, j) + aik * b;
            }
        }
    return r;
}

Vec Mat::apply(const Vec& v) const {
    Vec r(spec_, rows_);
    for (size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (size_t i = 0; i < rows_; ++i) {
            const FieldElement& a = at(i, j);
            if (!a.is_zero()) r[i] = r[i] + a * v[j];
        }
    }
    return r;
}

Mat Mat::transpose() const {
    Mat r(spec_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const {
    Mat r(spec_, nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

void Mat::paste(size_t r0, size_t c0, const Mat& block) {
    for (size_t i = 0; i < block.rows(); ++i)
        for (size_t j = 0; j < block.cols(); ++j) at(r0 + i, c0 + j) = block.at(i, j);
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ",";
            os << at(i, j).to_string();
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

std::string Mat::key() const {
    std::string k;
    if (spec_->is_binary()) {
        k.reserve(a_.size() * 2);
        for (const auto& x : a_) {
            k.push_back(char(x.bits() & 0xff));
            k.push_back(char((x.bits() >> 8) & 0xff));
        }
    } else {
        for (const auto& x : a_) {
            for (int b = 0; b < 8; ++b) k.push_back(char((x.num() >> (8 * b)) & 0xff));
            for (int b = 0; b < 8; ++b) k.push_back(char((x.den() >> (8 * b)) & 0xff));
        }
    }
    return k;
}

// pivot on the first nonzero entry (deterministic echelon forms)
Rref rref(const Mat& A) {
    Rref out{A, {}, 0};
    Mat& R = out.R;
    size_t r = 0;
    for (size_t col = 0; col < A.cols() && r < A.rows(); ++col) {
        size_t piv = A.rows();
        for (size_t i = r; i < A.rows(); ++i)
            if (!R.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv == A.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < A.cols(); ++j) std::swap(R.at(piv, j), R.at(r, j));
        FieldElement inv = R.at(r, col).inv();
        for (size_t j = col; j < A.cols(); ++j) R.at(r, j) = R.at(r, j) * inv;
        for (size_t i = 0; i < A.rows(); ++i) {
            if (i == r || R.at(i, col).is_zero()) continue;
            FieldElement f = R.at(i, col);
            for (size_t j = col; j < A.cols(); ++j) R.at(i, j) = R.at(i, j) + f * R.at(r, j);
        }
        out.pivots.push_back((int)col);
        ++r;
    }
    out.rank = (unsigned)r;
    return out;
}

unsigned rank(const Mat& A) { return rref(A).rank; }

std::optional<Mat> inverse(const Mat& A) {
    if (A.rows() != A.cols()) return std::nullopt;
    size_t n = A.rows();
    Mat aug(A.spec(), n, 2 * n);
    aug.paste(0, 0, A);
    aug.paste(0, n, Mat::identity(A.spec(), n));
    Rref r = rref(aug);
    for (size_t i = 0; i < n; ++i)
        if (i >= r.pivots.size() || r.pivots[i] != (int)i) return std::nullopt;
    return r.R.submatrix(0, n, n, n);
}

std::vector<Vec> kernel_basis(const Mat& A) {
    Rref r = rref(A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (size_t freec = 0; freec < A.cols(); ++freec) {
        if (is_pivot[freec]) continue;
        Vec v(A.spec(), A.cols());
        v[freec] = FieldElement::one(A.spec());
        for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = r.R.at(i, freec);
        out.push_back(v);
    }
    return out;
}

std::optional<Vec> solve(const Mat& A, const Vec& b) {
    Mat aug(A.spec(), A.rows(), A.cols() + 1);
    aug.paste(0, 0, A);
    for (size_t i = 0; i < A.rows(); ++i) aug.at(i, A.cols()) = b[i];
    Rref r = rref(aug);
    for (size_t i = 0; i < r.pivots.size(); ++i)
        if (r.pivots[i] == (int)A.cols()) return std::nullopt;
    Vec x(A.spec(), A.cols());
    for (size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.R.at(i, A.cols());
    return x;
}

std::vector<Vec> column_space_basis(const Mat& A) {
    Rref r = rref(A);
    std::vector<Vec> out;
    for (int p : r.pivots) out.push_back(A.col(p));
    return out;
}

Subspace Subspace::span(const FieldSpecPtr& s, size_t ambient_dim, const std::vector<Vec>& gens) {
    Subspace sp;
    sp.spec_ = s;
    sp.ambient_ = ambient_dim;
    if (gens.empty()) return sp;
    Rref r = rref(Mat::from_rows(s, gens));
    for (unsigned i = 0; i < r.rank; ++i) sp.basis_.push_back(r.R.row(i));
    return sp;
}

bool Subspace::contains(const Vec& v) const {
    Vec w = v;
    for (size_t i = 0; i < basis_.size(); ++i) {
        // basis rows are RREF: pivot entries are 1 and unique per row
        size_t p = 0;
        while (p < ambient_ && basis_[i][p].is_zero()) ++p;
        if (p == ambient_) continue;
        if (!w[p].is_zero()) w = w + basis_[i].scaled(w[p]);
    }
    return w.is_zero();
}

bool Subspace::contains(const Subspace& o) const {
    for (const auto& b : o.basis_)
        if (!contains(b)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_.size() == o.basis_.size() && contains(o);
}

Subspace Subspace::sum(const Subspace& o) const {
    std::vector<Vec> gens = basis_;
    gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
    return span(spec_, ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& o) const {
    // rows of [B1; B2] kernel combinations: x = a^T B1 = b^T B2
    if (basis_.empty() || o.basis_.empty()) return span(spec_, ambient_, {});
    Mat stacked(spec_, basis_.size() + o.basis_.size(), ambient_);
    for (size_t i = 0; i < basis_.size(); ++i)
        for (size_t j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_[i][j];
    for (size_t i = 0; i < o.basis_.size(); ++i)
        for (size_t j = 0; j < ambient_; ++j) stacked.at(basis_.size() + i, j) = o.basis_[i][j];
    std::vector<Vec> ker = kernel_basis(stacked.transpose());
    std::vector<Vec> gens;
    for (const auto& kvec : ker) {
        Vec v(spec_, ambient_);
        for (size_t i = 0; i < basis_.size(); ++i) v = v + basis_[i].scaled(kvec[i]);
        gens.push_back(v);
    }
    return span(spec_, ambient_, gens);
}

}  // namespace oqk
