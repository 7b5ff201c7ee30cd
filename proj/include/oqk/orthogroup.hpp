#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "oqk/quadspace.hpp"

namespace oqk {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An element of O(q,k): columns are the images of the signature basis.
struct Isometry {
    QuadForm form;
    Mat matrix;
};

// q preserved on every basis vector and every pairwise sum of basis vectors
// (polarization then recovers B-preservation on all of W)
bool preserves_form(const QuadForm& q, const Mat& M);
bool preserves_bilinear(const QuadForm& q, const Mat& M);
bool is_isometry(const QuadForm& q, const Mat& M);

// z -> z + a B(w,z) w; no validation here (downstream callers decide whether
// orthogonal or merely symplectic use is intended)
Isometry transvection(const QuadForm& q, const Vec& w, const FieldElement& a,
                      bool symplectic_only = false);
// tau_w = transvection with a = 1/q(w); requires q(w) != 0
Isometry orthogonal_transvection(const QuadForm& q, const Vec& w);
// canonical eta on P = H _|_ H given as (x1,y1,x2,y2):
// x1->x1, y1->y1+x2, x2->x2, y2->y2+x1, identity on the B-complement of P
Isometry basic_null(const QuadForm& q, const std::array<Vec, 4>& plane_pair);
// swaps g <-> g2 (independent radical vectors of equal norm), fixes a complement
Isometry basic_radical(const QuadForm& q, const Vec& g, const Vec& g2);

Subspace residual_space(const QuadForm& q, const Mat& M);
inline Subspace residual_space(const Isometry& phi) { return residual_space(phi.form, phi.matrix); }
unsigned residue(const QuadForm& q, const Mat& M);

enum class GroupKind { Orthogonal, Symplectic };

struct EnumOptions {
    unsigned budget_bits = 14;  // cap on n * log2|k| for the backtracking frontier
    unsigned jobs = 1;
    GroupKind kind = GroupKind::Orthogonal;
};

// Complete finite matrix group, elements bit-packed column-major and kept in
// a canonical sorted order; the brute-force oracle everything else tests against.
class GroupTable {
  public:
    GroupTable(QuadForm form, unsigned n, std::vector<std::uint16_t> sorted_codes);

    const QuadForm& form() const { return form_; }
    unsigned dim() const { return n_; }
    std::size_t order() const;
    Mat element(std::size_t idx) const;
    std::optional<std::size_t> index_of(const Mat& M) const;
    bool contains(const Mat& M) const { return index_of(M).has_value(); }
    const std::uint16_t* raw(std::size_t idx) const { return codes_.data() + idx * n_ * n_; }

    static std::vector<std::uint16_t> pack(const Mat& M);  // column-major codes

  private:
    QuadForm form_;
    unsigned n_;
    std::vector<std::uint16_t> codes_;
    std::size_t count_;
};

// All of O(q,k) (or Sp(B,k)) by backtracking over basis-vector images with
// incremental q/B constraint checks; deterministic output order.
GroupTable enumerate_group(const QuadForm& q, const EnumOptions& opts = {});

// indices of the elements phi != id with phi^2 = id
std::vector<std::uint32_t> involutions_of(const GroupTable& table);

// packed helpers shared with the oracle searches
namespace packed {
void mul(const FieldSpec& spec, const std::uint16_t* A, const std::uint16_t* B,
         std::uint16_t* out, unsigned n);
bool is_identity(const std::uint16_t* A, unsigned n);
// Gauss-Jordan inverse on column-major codes; the matrix must be invertible
void inverse(const FieldSpec& spec, const std::uint16_t* A, std::uint16_t* out, unsigned n);
}  // namespace packed

}  // namespace oqk
