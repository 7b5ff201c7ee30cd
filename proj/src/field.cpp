#include "oqk/field.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

namespace oqk {

namespace poly2 {

int degree(Poly p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

Poly mul(Poly a, Poly b) {
    if (a == 0 || b == 0) return 0;
    int da = degree(a), db = degree(b);
    if (da + db > 63) throw FieldError("polynomial degree overflow (cap 64 bits)");
    Poly acc = 0;
    while (b) {
        int i = std::countr_zero(b);
        acc ^= a << i;
        b &= b - 1;
    }
    return acc;
}

Poly divmod(Poly a, Poly b, Poly& rem) {
    if (b == 0) throw FieldError("polynomial division by zero");
    Poly q = 0;
    int db = degree(b);
    int da = degree(a);
    while (da >= db) {
        int shift = da - db;
        q ^= Poly(1) << shift;
        a ^= b << shift;
        da = degree(a);
    }
    rem = a;
    return q;
}

Poly mod(Poly a, Poly b) {
    Poly r;
    divmod(a, b, r);
    return r;
}

Poly gcd(Poly a, Poly b) {
    while (b) {
        Poly r = mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

bool is_irreducible(Poly p) {
    int d = degree(p);
    if (d <= 0) return false;
    if (d == 1) return true;
    // exhaustive trial division by every polynomial of degree 1..d/2
    for (int e = 1; 2 * e <= d; ++e) {
        for (Poly f = Poly(1) << e; f < (Poly(1) << (e + 1)); ++f) {
            if (mod(p, f) == 0) return false;
        }
    }
    return true;
}

std::string to_string(Poly p, char var) {
    if (p == 0) return "0";
    std::string out;
    for (int i = degree(p); i >= 0; --i) {
        if (!((p >> i) & 1)) continue;
        if (!out.empty()) out += "+";
        if (i == 0)
            out += "1";
        else if (i == 1)
            out += var;
        else {
            out += var;
            out += "^";
            out += std::to_string(i);
        }
    }
    return out;
}

std::optional<Poly> parse(const std::string& s, char var) {
    Poly p = 0;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    skip_ws();
    if (i == s.size()) return std::nullopt;
    bool expect_term = true;
    while (i < s.size()) {
        skip_ws();
        if (!expect_term) {
            if (s[i] != '+') return std::nullopt;
            ++i;
            skip_ws();
        }
        if (i >= s.size()) return std::nullopt;
        if (s[i] == '0' || s[i] == '1') {
            if (s[i] == '1') p ^= 1;
            ++i;
        } else if (s[i] == var) {
            ++i;
            unsigned e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit((unsigned char)s[i])) return std::nullopt;
                e = 0;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) e = e * 10 + (s[i++] - '0');
                if (e > 63) return std::nullopt;
            }
            p ^= Poly(1) << e;
        } else {
            return std::nullopt;
        }
        expect_term = false;
        skip_ws();
        if (i < s.size() && s[i] != '+') return std::nullopt;
    }
    return p;
}

}  // namespace poly2

// ---------------------------------------------------------------- FieldSpec

FieldSpecPtr FieldSpec::binary_ext(unsigned m, poly2::Poly modulus) {
    if (m == 0 || m > 16) throw FieldError("GF(2^m) supports 1 <= m <= 16");
    if (poly2::degree(modulus) != (int)m) throw FieldError("modulus degree must equal m");
    if (!poly2::is_irreducible(modulus)) throw FieldError("modulus is reducible");
    return FieldSpecPtr(new FieldSpec(FieldKind::BinaryExt, m, modulus));
}

FieldSpecPtr FieldSpec::binary_ext_default(unsigned m) {
    // Conway-free fixed choices, lowest-weight irreducibles
    static const std::array<poly2::Poly, 17> mods = {
        0,      0b10,      0b111,      0b1011,      0b10011,     0b100101,
        0b1000011, 0b10000011, 0b100011011, 0b1000010001, 0b10000001001,
        0b100000000101, 0b1000001010011, 0b10000000011011, 0b100010000000011,
        0b1000000000000011, 0b10000000000101101};
    if (m == 0 || m > 16) throw FieldError("GF(2^m) supports 1 <= m <= 16");
    return binary_ext(m, mods[m]);
}

FieldSpecPtr FieldSpec::gf2() {
    static FieldSpecPtr s = binary_ext(1, 0b10);
    return s;
}

FieldSpecPtr FieldSpec::rat_func() {
    static FieldSpecPtr s(new FieldSpec(FieldKind::RatFunc, 0, 0));
    return s;
}

std::uint64_t FieldSpec::order() const {
    if (kind_ != FieldKind::BinaryExt) throw FieldError("GF(2)(t) is infinite");
    return std::uint64_t(1) << m_;
}

std::string FieldSpec::name() const {
    if (kind_ == FieldKind::RatFunc) return "f2t";
    switch (m_) {
        case 1: return "gf2";
        case 2: return "gf4";
        case 3: return "gf8";
        case 4: return "gf16";
        default: return "gf2^" + std::to_string(m_);
    }
}

// ------------------------------------------------------------- FieldElement

FieldElement::FieldElement(FieldSpecPtr spec, std::uint32_t bits)
    : spec_(std::move(spec)), bits_(bits) {
    if (spec_->kind() != FieldKind::BinaryExt) throw FieldError("bit constructor needs GF(2^m)");
    if (bits_ >> spec_->degree()) throw FieldError("residue out of range");
}

FieldElement::FieldElement(FieldSpecPtr spec, poly2::Poly num, poly2::Poly den)
    : spec_(std::move(spec)), num_(num), den_(den) {
    if (spec_->kind() != FieldKind::RatFunc) throw FieldError("fraction constructor needs GF(2)(t)");
    if (den_ == 0) throw FieldError("zero denominator");
    reduce_fraction();
}

void FieldElement::reduce_fraction() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    poly2::Poly g = poly2::gcd(num_, den_);
    if (g != 1) {
        poly2::Poly r;
        num_ = poly2::divmod(num_, g, r);
        den_ = poly2::divmod(den_, g, r);
    }
}

FieldElement FieldElement::zero(const FieldSpecPtr& s) {
    return s->is_binary() ? FieldElement(s, std::uint32_t(0)) : FieldElement(s, poly2::Poly(0));
}

FieldElement FieldElement::one(const FieldSpecPtr& s) {
    return s->is_binary() ? FieldElement(s, std::uint32_t(1)) : FieldElement(s, poly2::Poly(1));
}

FieldElement FieldElement::gen(const FieldSpecPtr& s) {
    if (s->is_binary()) {
        if (s->degree() < 2) throw FieldError("GF(2) has no generator t");
        return FieldElement(s, std::uint32_t(2));
    }
    return FieldElement(s, poly2::Poly(2));
}

bool FieldElement::is_zero() const { return spec_->is_binary() ? bits_ == 0 : num_ == 0; }
bool FieldElement::is_one() const { return spec_->is_binary() ? bits_ == 1 : (num_ == 1 && den_ == 1); }

static void check_specs(const FieldElement& a, const FieldElement& b) {
    if (!same_spec(a.spec(), b.spec())) throw FieldError("field spec mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_specs(*this, o);
    if (spec_->is_binary()) return FieldElement(spec_, bits_ ^ o.bits_);
    // n1/d1 + n2/d2 over the lcm of the denominators
    poly2::Poly r;
    poly2::Poly g = poly2::gcd(den_, o.den_);
    poly2::Poly d1g = poly2::divmod(den_, g, r);   // den_ / g
    poly2::Poly d2g = poly2::divmod(o.den_, g, r); // o.den_ / g
    poly2::Poly n = poly2::mul(num_, d2g) ^ poly2::mul(o.num_, d1g);
    poly2::Poly den = poly2::mul(den_, d2g);       // lcm
    return FieldElement(spec_, n, den);
}

std::uint32_t mul_bits(const FieldSpec& spec, std::uint32_t a, std::uint32_t b) {
    std::uint64_t acc = 0, bb = b;
    while (a) {
        int i = std::countr_zero(a);
        acc ^= bb << i;
        a &= a - 1;
    }
    unsigned m = spec.degree();
    std::uint64_t mod = spec.modulus();
    for (int d = poly2::degree(acc); d >= (int)m; d = poly2::degree(acc))
        acc ^= mod << (d - m);
    return std::uint32_t(acc);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_specs(*this, o);
    if (spec_->is_binary()) return FieldElement(spec_, mul_bits(*spec_, bits_, o.bits_));
    if (is_zero() || o.is_zero()) return zero(spec_);
    // cross-reduce before multiplying to keep degrees within the cap
    poly2::Poly r;
    poly2::Poly g1 = poly2::gcd(num_, o.den_), g2 = poly2::gcd(o.num_, den_);
    poly2::Poly n1 = poly2::divmod(num_, g1, r), d2 = poly2::divmod(o.den_, g1, r);
    poly2::Poly n2 = poly2::divmod(o.num_, g2, r), d1 = poly2::divmod(den_, g2, r);
    return FieldElement(spec_, poly2::mul(n1, n2), poly2::mul(d1, d2));
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw FieldError("division by zero");
    if (!spec_->is_binary()) return FieldElement(spec_, den_, num_);
    // extended euclid in GF(2)[t]: u*bits_ = gcd = 1 (mod modulus)
    poly2::Poly a = bits_, b = spec_->modulus();
    poly2::Poly ua = 1, ub = 0;
    while (a != 1) {
        poly2::Poly r, q = poly2::divmod(b, a, r);
        poly2::Poly un = ub ^ poly2::mul(q, ua);
        b = a;
        a = r;
        ub = ua;
        ua = un;
    }
    unsigned m = spec_->degree();
    poly2::Poly mod = spec_->modulus();
    for (int d = poly2::degree(ua); d >= (int)m; d = poly2::degree(ua)) ua ^= mod << (d - m);
    return FieldElement(spec_, std::uint32_t(ua));
}

std::optional<FieldElement> FieldElement::sqrt() const {
    if (spec_->is_binary()) {
        // Frobenius is bijective: sqrt(a) = a^(2^(m-1))
        FieldElement x = *this;
        for (unsigned i = 0; i + 1 < spec_->degree(); ++i) x = x.square();
        return x;
    }
    static constexpr poly2::Poly odd_mask = 0xAAAAAAAAAAAAAAAAull;
    if ((num_ & odd_mask) || (den_ & odd_mask)) return std::nullopt;
    auto compress = [](poly2::Poly p) {
        poly2::Poly q = 0;
        for (int i = 0; i <= 62; i += 2)
            if ((p >> i) & 1) q |= poly2::Poly(1) << (i / 2);
        return q;
    };
    return FieldElement(spec_, compress(num_), compress(den_));
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!same_spec(spec_, o.spec_)) return false;
    return spec_->is_binary() ? bits_ == o.bits_ : (num_ == o.num_ && den_ == o.den_);
}

bool FieldElement::operator<(const FieldElement& o) const {
    check_specs(*this, o);
    if (spec_->is_binary()) return bits_ < o.bits_;
    return num_ != o.num_ ? num_ < o.num_ : den_ < o.den_;
}

std::string FieldElement::to_string() const {
    if (spec_->is_binary()) {
        if (spec_->degree() == 1) return bits_ ? "1" : "0";
        return poly2::to_string(bits_);
    }
    if (den_ == 1) return poly2::to_string(num_);
    std::ostringstream os;
    bool par_n = std::popcount(num_) > 1, par_d = std::popcount(den_) > 1;
    os << (par_n ? "(" : "") << poly2::to_string(num_) << (par_n ? ")" : "") << "/"
       << (par_d ? "(" : "") << poly2::to_string(den_) << (par_d ? ")" : "");
    return os.str();
}

std::uint64_t FieldElement::hash() const {
    std::uint64_t h = spec_->is_binary() ? (std::uint64_t(bits_) | 0x100000000ull) : 0;
    auto mix = [](std::uint64_t x) {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdull;
        x ^= x >> 33;
        return x;
    };
    if (spec_->is_binary()) return mix(h);
    return mix(num_ * 0x9e3779b97f4a7c15ull ^ mix(den_));
}

bool absolute_trace(const FieldElement& a) {
    if (!a.spec()->is_binary()) throw FieldError("trace needs GF(2^m)");
    FieldElement acc = a, pw = a;
    for (unsigned i = 1; i < a.spec()->degree(); ++i) {
        pw = pw.square();
        acc = acc + pw;
    }
    return acc.is_one();
}

std::pair<FieldElement, FieldElement> square_class_coordinates(const FieldElement& a) {
    const FieldSpecPtr& s = a.spec();
    if (s->is_binary()) return {*a.sqrt(), FieldElement::zero(s)};
    // a = n/d = n d / d^2; split n d into even part + t * (even part)
    poly2::Poly w = poly2::mul(a.num(), a.den());
    poly2::Poly even = 0, odd = 0;
    for (int i = 0; i <= 63; ++i)
        if ((w >> i) & 1) (i % 2 ? odd : even) |= poly2::Poly(1) << i;
    auto compress = [](poly2::Poly p) {
        poly2::Poly q = 0;
        for (int i = 0; i <= 63; ++i)
            if ((p >> i) & 1) q |= poly2::Poly(1) << (i / 2);
        return q;
    };
    FieldElement h0(s, compress(even), a.den());
    FieldElement h1(s, compress(odd >> 1), a.den());
    return {h0, h1};
}

std::vector<FieldElement> k2_coordinates(const FieldElement& a) {
    auto [h0, h1] = square_class_coordinates(a);
    if (a.spec()->is_binary()) return {h0};
    return {h0, h1};
}

// Tiny dedicated elimination: rows have k2_dim(spec) <= 2 entries over k.
namespace {

struct K2Rows {
    std::vector<std::vector<FieldElement>> rows;  // echelonized, nonzero
    std::vector<int> pivots;
};

// reduce row against the echelon rows; returns the reduced row
std::vector<FieldElement> k2_reduce(const K2Rows& e, std::vector<FieldElement> row,
                                    std::vector<FieldElement>* combo = nullptr) {
    for (size_t r = 0; r < e.rows.size(); ++r) {
        int p = e.pivots[r];
        if (!row[p].is_zero()) {
            FieldElement f = row[p] / e.rows[r][p];
            for (size_t j = 0; j < row.size(); ++j) row[j] = row[j] + f * e.rows[r][j];
            if (combo) (*combo)[r] = f;
        }
    }
    return row;
}

void k2_insert(K2Rows& e, std::vector<FieldElement> row) {
    row = k2_reduce(e, std::move(row));
    for (size_t j = 0; j < row.size(); ++j) {
        if (!row[j].is_zero()) {
            e.rows.push_back(row);
            e.pivots.push_back((int)j);
            return;
        }
    }
}

}  // namespace

unsigned k2_linear_rank(const std::vector<FieldElement>& elems) {
    K2Rows e;
    for (const auto& a : elems) k2_insert(e, k2_coordinates(a));
    return (unsigned)e.rows.size();
}

std::optional<std::vector<FieldElement>> k2_solve(const std::vector<FieldElement>& basis,
                                                  const FieldElement& target) {
    const FieldSpecPtr& s = target.spec();
    if (basis.empty()) {
        if (target.is_zero()) return std::vector<FieldElement>{};
        return std::nullopt;
    }
    // Sum lambda_i^2 b_i = target  <=>  for each k^2-coordinate j:
    // sum_i lambda_i * coord_j(b_i) = coord_j(target), a linear system over k.
    size_t w = s->k2_dim(), n = basis.size();
    std::vector<std::vector<FieldElement>> aug(w, std::vector<FieldElement>(n + 1, FieldElement::zero(s)));
    for (size_t i = 0; i < n; ++i) {
        auto v = k2_coordinates(basis[i]);
        for (size_t j = 0; j < w; ++j) aug[j][i] = v[j];
    }
    auto t = k2_coordinates(target);
    for (size_t j = 0; j < w; ++j) aug[j][n] = t[j];
    // tiny Gaussian elimination (w <= 2 rows)
    size_t row = 0;
    std::vector<int> pivot_col;
    for (size_t col = 0; col < n && row < w; ++col) {
        size_t pr = w;
        for (size_t rr = row; rr < w; ++rr)
            if (!aug[rr][col].is_zero()) {
                pr = rr;
                break;
            }
        if (pr == w) continue;
        std::swap(aug[row], aug[pr]);
        FieldElement p = aug[row][col].inv();
        for (size_t j = col; j <= n; ++j) aug[row][j] = aug[row][j] * p;
        for (size_t rr = 0; rr < w; ++rr) {
            if (rr == row || aug[rr][col].is_zero()) continue;
            FieldElement f = aug[rr][col];
            for (size_t j = col; j <= n; ++j) aug[rr][j] = aug[rr][j] + f * aug[row][j];
        }
        pivot_col.push_back((int)col);
        ++row;
    }
    for (size_t rr = row; rr < w; ++rr)
        if (!aug[rr][n].is_zero()) return std::nullopt;
    std::vector<FieldElement> lam(n, FieldElement::zero(s));
    for (size_t r = 0; r < row; ++r) lam[pivot_col[r]] = aug[r][n];
    return lam;
}

bool k2_span_contains(const std::vector<FieldElement>& basis, const FieldElement& target) {
    std::vector<FieldElement> all = basis;
    all.push_back(target);
    return k2_linear_rank(all) == k2_linear_rank(basis);
}

bool k2_span_equal(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    std::vector<FieldElement> all = a;
    all.insert(all.end(), b.begin(), b.end());
    unsigned ra = k2_linear_rank(a), rb = k2_linear_rank(b);
    return ra == rb && k2_linear_rank(all) == ra;
}

std::vector<FieldElement> enumerate_field(const FieldSpecPtr& s) {
    if (!s->is_binary()) throw FieldError("cannot enumerate GF(2)(t)");
    std::vector<FieldElement> out;
    out.reserve(s->order());
    for (std::uint64_t c = 0; c < s->order(); ++c) out.emplace_back(s, std::uint32_t(c));
    return out;
}

}  // namespace oqk
