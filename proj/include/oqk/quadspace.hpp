#pragma once

#include <utility>

#include "oqk/linalg.hpp"

namespace oqk {

struct QuadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Isotropy over the nonsingular part of a GF(2)(t) form is not decided here.
struct Undecidable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadratic form held as signature data [a_1,b_1] _|_ ... _|_ <c_1,...,c_s>,
// basis ordered x_1,y_1,...,x_r,y_r,g_1,...,g_s.
struct QuadForm {
    FieldSpecPtr spec;
    unsigned r = 0, s = 0;
    std::vector<std::pair<FieldElement, FieldElement>> pairs;
    std::vector<FieldElement> diag;

    explicit QuadForm(FieldSpecPtr sp) : spec(std::move(sp)) {}
    static QuadForm make(FieldSpecPtr sp, std::vector<std::pair<FieldElement, FieldElement>> pairs,
                         std::vector<FieldElement> diag);
    static QuadForm hyperbolic(const FieldSpecPtr& sp, unsigned copies);

    unsigned dim() const { return 2 * r + s; }
    FieldElement eval(const Vec& w) const;
    FieldElement bilinear(const Vec& w, const Vec& w2) const;
    Mat gram() const;
    QuadForm orth_sum(const QuadForm& o) const;
    bool operator==(const QuadForm& o) const;
    std::string to_string() const;
};

// General quadratic map q(w) = w^T Q w, Q upper triangular; used for forms
// carried through a basis change.
struct TriForm {
    FieldSpecPtr spec;
    Mat Q;

    static TriForm of(const QuadForm& q);
    static TriForm on_subspace(const TriForm& q, const std::vector<Vec>& basis);
    TriForm transport(const Mat& S) const;  // pullback along w -> S w
    unsigned dim() const { return (unsigned)Q.rows(); }
    FieldElement eval(const Vec& w) const;
    FieldElement bilinear(const Vec& w, const Vec& w2) const;
    Mat gram() const;
};

Subspace radical(const TriForm& q);
Subspace radical(const QuadForm& q);

struct WittDecomposition {
    unsigned m = 0;  // Witt index
    unsigned d = 0;  // defect
    QuadForm aniso_pairs;  // nonsingular anisotropic kernel, type (r',0)
    QuadForm aniso_diag;   // totally singular anisotropic kernel, type (0,s')
    // columns: x_1,y_1,...,x_m,y_m | aniso pair vectors | aniso diag | defect
    Mat change_of_basis;
    QuadForm reassembled() const;  // m x H _|_ aniso_pairs _|_ aniso_diag _|_ d x <0>
};

WittDecomposition witt_decompose(const TriForm& q);
WittDecomposition witt_decompose(const QuadForm& q);

// class of sum(a_i b_i) mod {x^2 + x}; canonical representative is 0 or the
// least residue of absolute trace 1 (BinaryExt, s = 0 only)
FieldElement arf_invariant(const QuadForm& q);
bool arf_class_equal(const FieldElement& a, const FieldElement& b);

bool is_isometric(const QuadForm& a, const QuadForm& b);
bool is_isometric(const TriForm& a, const TriForm& b);

// isometry of totally singular diagonal forms: equal dimension + equal k^2-span
bool totally_singular_isometric(const std::vector<FieldElement>& a,
                                const std::vector<FieldElement>& b);

struct Completion {
    std::vector<Vec> v;  // B(u_i, v_j) = delta_ij
    Mat pairing;         // the certificate, identity by construction
};
// U: independent vectors spanning a B-isotropic subspace disjoint from rad(W)
Completion nonsingular_completion(const QuadForm& q, const std::vector<Vec>& U);

std::vector<QuadForm> rewrite_equivalences(const QuadForm& q);

// all |k|^n coordinate vectors in code order (BinaryExt only)
std::vector<Vec> enumerate_vectors(const FieldSpecPtr& s, size_t n);

// no nonzero isotropic vector; exhaustive over BinaryExt, k^2-rank criterion
// for totally singular RatFunc forms, Undecidable otherwise
bool is_anisotropic(const TriForm& q);

}  // namespace oqk
