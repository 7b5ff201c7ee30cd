#pragma once

#include "oqk/orthogroup.hpp"

namespace oqk {

// Wall parametrization of an involution: the residual space R = im(phi + id)
// (totally B-isotropic) together with the nondegenerate symmetric form
// theta(Nz, Nz') = B(z, Nz') on it.  theta(r,r) = q(r) for orthogonal phi;
// phi is recovered from (R, theta), so conjugacy data lives entirely here.
struct WallForm {
    std::vector<Vec> basisR;  // canonical (echelon) basis of the residual space
    Mat theta;                // Gram matrix of theta in basisR coordinates
    bool alternating = false; // every diagonal entry zero (q vanishes on R)
};

WallForm wall_form(const QuadForm& q, const Mat& M);

// theta-orthogonal basis with nonzero diagonal (coordinates in basisR);
// nullopt iff theta is alternating.  Alternating 2x2 blocks left over after
// splitting are absorbed into earlier anisotropic vectors.
std::optional<std::vector<Vec>> orthogonal_anisotropic_basis(const Mat& theta);

enum class InvKind { Radical, Null, Diagonal, Hyperbolic, GeneralTriple };
std::string to_string(InvKind k);

struct InvolutionDescriptor {
    InvKind kind;
    unsigned residue = 0;
    unsigned length = 0;
    std::vector<FieldElement> norm_signature;  // inducing norms / radical signature
    QuadForm residual_q;                       // totally singular form on the residual space

    InvolutionDescriptor() : kind(InvKind::Diagonal), residual_q(FieldSpec::gf2()) {}
};

InvolutionDescriptor classify(const Isometry& phi);
InvolutionDescriptor classify(const QuadForm& q, const Mat& M);

// inducing set of a Diagonal involution: mutually orthogonal anisotropic
// vectors w_i with phi = tau_{w_l} ... tau_{w_1}
std::vector<Vec> diagonal_inducing_set(const QuadForm& q, const Mat& M);

bool conjugate_test_transvections(const QuadForm& q, const Mat& a, const Mat& b);
bool conjugate_test_null(const QuadForm& q, const Mat& a, const Mat& b);
bool conjugate_test_radical(const QuadForm& q, const Mat& a, const Mat& b);

// involution (or identity) with residual space inside rad(W), on the block
// split W = rad(W) _|_ W_1 read off the signature basis
struct Triple {
    QuadForm form;
    Mat rho;  // s x s on the radical
    Mat Y;    // s x 2r, W_1 -> rad
    Mat tau;  // 2r x 2r symplectic involution on W_1
};

Triple decompose_triple(const QuadForm& q, const Mat& M);
Mat reassemble_triple(const Triple& t);  // back to signature coordinates

struct NormalizedTriple {
    Mat rho;
    Mat Y0;    // s x 2r in the new W_1' basis; q(Y0 w) = 0, Y0 v_i = 0
    Mat tauY;  // product of orthogonal transvections on the new basis
    Mat new_basis;             // columns: rad basis | U_Y | X | V (signature coords)
    std::vector<Vec> inducing; // the vectors u_i + (1/a_i) rho(Y v_i)
};

NormalizedTriple normalize_triple(const Triple& t);

enum class TriBool { False, True, Unknown };

// Clause-by-clause conjugacy of general involutions: rho-parts conjugate in
// O(q_rad), tau-parts conjugate in Sp(B_W1), and the affine Z-equation solvable.
TriBool conjugate_test_general(const Triple& a, const Triple& b, unsigned budget_bits = 14);

bool oracle_conjugate(const GroupTable& table, const Mat& a, const Mat& b);

// class id per involution, computed by scanning conjugation by every group
// element from each unprocessed representative
std::vector<unsigned> conjugacy_classes(const GroupTable& table,
                                        const std::vector<std::uint32_t>& involutions);

// dispatch on the classification kinds; Unknown when the kinds need the
// general test and it runs out of budget
TriBool conjugate_test(const QuadForm& q, const Mat& a, const Mat& b, unsigned budget_bits = 14);

}  // namespace oqk
