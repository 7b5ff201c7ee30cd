#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oqk {

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomials over GF(2), bit i = coefficient of t^i.  Degree is capped at 63
// (one machine word); operations that would exceed the cap throw FieldError.
namespace poly2 {

using Poly = std::uint64_t;

int degree(Poly p);  // degree(0) == -1
Poly mul(Poly a, Poly b);
Poly divmod(Poly a, Poly b, Poly& rem);
Poly mod(Poly a, Poly b);
Poly gcd(Poly a, Poly b);
bool is_irreducible(Poly p);
std::string to_string(Poly p, char var = 't');
std::optional<Poly> parse(const std::string& s, char var = 't');

}  // namespace poly2

enum class FieldKind : std::uint8_t { BinaryExt, RatFunc };

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

// One of the two supported coefficient fields: GF(2^m) for m <= 16 with an
// explicit irreducible modulus, or the rational function field GF(2)(t).
class FieldSpec {
  public:
    static FieldSpecPtr binary_ext(unsigned m, poly2::Poly modulus);
    static FieldSpecPtr binary_ext_default(unsigned m);  // fixed modulus per m
    static FieldSpecPtr gf2();
    static FieldSpecPtr rat_func();

    FieldKind kind() const { return kind_; }
    unsigned degree() const { return m_; }
    poly2::Poly modulus() const { return modulus_; }
    bool is_binary() const { return kind_ == FieldKind::BinaryExt; }
    std::uint64_t order() const;  // BinaryExt only
    // dimension of k as a vector space over k^2 (1 for perfect, 2 for GF(2)(t))
    unsigned k2_dim() const { return kind_ == FieldKind::BinaryExt ? 1u : 2u; }
    std::string name() const;

    bool operator==(const FieldSpec& o) const {
        return kind_ == o.kind_ && m_ == o.m_ && modulus_ == o.modulus_;
    }

  private:
    FieldSpec(FieldKind k, unsigned m, poly2::Poly mod) : kind_(k), m_(m), modulus_(mod) {}
    FieldKind kind_;
    unsigned m_;
    poly2::Poly modulus_;
};

inline bool same_spec(const FieldSpecPtr& a, const FieldSpecPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Immutable field element.  BinaryExt elements are m-bit polynomial residues;
// RatFunc elements are reduced fractions num/den of GF(2)-polynomials with
// den != 0.  Equality is bitwise on the canonical representation.
class FieldElement {
  public:
    FieldElement() : FieldElement(FieldSpec::gf2(), std::uint32_t(0)) {}
    FieldElement(FieldSpecPtr spec, std::uint32_t bits);                     // BinaryExt
    FieldElement(FieldSpecPtr spec, poly2::Poly num, poly2::Poly den = 1);   // RatFunc

    static FieldElement zero(const FieldSpecPtr& s);
    static FieldElement one(const FieldSpecPtr& s);
    // the generator t (BinaryExt with m >= 2, or RatFunc)
    static FieldElement gen(const FieldSpecPtr& s);

    const FieldSpecPtr& spec() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;
    std::uint32_t bits() const { return bits_; }
    poly2::Poly num() const { return num_; }
    poly2::Poly den() const { return den_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inv() const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }
    FieldElement square() const { return *this * *this; }
    std::optional<FieldElement> sqrt() const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    // total order on canonical representations (lexicographic tie-breaks)
    bool operator<(const FieldElement& o) const;

    std::string to_string() const;
    std::uint64_t hash() const;

  private:
    FieldSpecPtr spec_;
    std::uint32_t bits_ = 0;   // BinaryExt residue
    poly2::Poly num_ = 0;      // RatFunc numerator
    poly2::Poly den_ = 1;      // RatFunc denominator (monic, coprime to num)
    void reduce_fraction();
};

// raw residue product for the packed fast paths (BinaryExt codes)
std::uint32_t mul_bits(const FieldSpec& spec, std::uint32_t a, std::uint32_t b);

// absolute trace GF(2^m) -> GF(2); classifies the Artin-Schreier classes
bool absolute_trace(const FieldElement& a);

// coordinates of a in the k^2-basis of k: a = h0^2 + t*h1^2.
// For BinaryExt (perfect) this is (sqrt(a), 0).
std::pair<FieldElement, FieldElement> square_class_coordinates(const FieldElement& a);

// coordinates mapped through sqrt, i.e. (h0, h1) restricted to k2_dim entries
std::vector<FieldElement> k2_coordinates(const FieldElement& a);

// dimension over k^2 of the span of elems
unsigned k2_linear_rank(const std::vector<FieldElement>& elems);

// lambda with sum lambda_i^2 * basis_i = target, if target lies in the k^2-span
std::optional<std::vector<FieldElement>> k2_solve(const std::vector<FieldElement>& basis,
                                                  const FieldElement& target);

bool k2_span_contains(const std::vector<FieldElement>& basis, const FieldElement& target);
bool k2_span_equal(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b);

// all 2^m elements, code order (BinaryExt only)
std::vector<FieldElement> enumerate_field(const FieldSpecPtr& s);

}  // namespace oqk
