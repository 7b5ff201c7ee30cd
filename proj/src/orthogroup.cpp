#include "oqk/orthogroup.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace oqk {

bool preserves_form(const QuadForm& q, const Mat& M) {
    size_t n = q.dim();
    if (M.rows() != n || M.cols() != n) return false;
    std::vector<Vec> img = M.columns();
    std::vector<Vec> basis;
    for (size_t j = 0; j < n; ++j) {
        Vec e(q.spec, n);
        e[j] = FieldElement::one(q.spec);
        basis.push_back(e);
    }
    for (size_t j = 0; j < n; ++j)
        if (q.eval(img[j]) != q.eval(basis[j])) return false;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (q.eval(img[i] + img[j]) != q.eval(basis[i] + basis[j])) return false;
    return true;
}

bool preserves_bilinear(const QuadForm& q, const Mat& M) {
    Mat G = q.gram();
    return M.transpose() * G * M == G;
}

bool is_isometry(const QuadForm& q, const Mat& M) {
    if (M.rows() != q.dim() || M.cols() != q.dim()) return false;
    if (rank(M) != q.dim()) return false;
    return preserves_form(q, M);
}

Isometry transvection(const QuadForm& q, const Vec& w, const FieldElement& a,
                      bool symplectic_only) {
    if (w.dim() != q.dim()) throw GroupError("vector dimension mismatch");
    if (w.is_zero()) throw GroupError("transvection needs w != 0");
    size_t n = q.dim();
    Mat M = Mat::identity(q.spec, n);
    TriForm tq = TriForm::of(q);
    for (size_t j = 0; j < n; ++j) {
        Vec e(q.spec, n);
        e[j] = FieldElement::one(q.spec);
        FieldElement c = a * tq.bilinear(w, e);
        if (c.is_zero()) continue;
        for (size_t i = 0; i < n; ++i) M.at(i, j) = M.at(i, j) + c * w[i];
    }
    Isometry phi{q, M};
    if (symplectic_only && !preserves_bilinear(q, M))
        throw GroupError("transvection does not preserve B");
    return phi;
}

Isometry orthogonal_transvection(const QuadForm& q, const Vec& w) {
    FieldElement qw = q.eval(w);
    if (qw.is_zero()) throw GroupError("orthogonal transvection needs q(w) != 0");
    return transvection(q, w, qw.inv());
}

namespace {

// complete `chosen` to a basis with standard basis vectors, deterministically
std::vector<Vec> complete_basis(const FieldSpecPtr& spec, size_t n, std::vector<Vec> chosen) {
    Subspace cur = Subspace::span(spec, n, chosen);
    for (size_t j = 0; j < n && chosen.size() < n; ++j) {
        Vec e(spec, n);
        e[j] = FieldElement::one(spec);
        if (!cur.contains(e)) {
            chosen.push_back(e);
            cur = Subspace::span(spec, n, chosen);
        }
    }
    if (chosen.size() != n) throw GroupError("could not complete basis");
    return chosen;
}

Mat conjugate_block_to_basis(const FieldSpecPtr& spec, const std::vector<Vec>& basis,
                             const Mat& block) {
    Mat S = Mat::from_columns(spec, basis);
    auto Sinv = inverse(S);
    if (!Sinv) throw GroupError("chosen vectors are dependent");
    return S * block * *Sinv;
}

}  // namespace

Isometry basic_null(const QuadForm& q, const std::array<Vec, 4>& p) {
    const auto& [x1, y1, x2, y2] = p;
    TriForm tq = TriForm::of(q);
    auto is_hyp = [&](const Vec& x, const Vec& y) {
        return q.eval(x).is_zero() && q.eval(y).is_zero() && tq.bilinear(x, y).is_one();
    };
    if (!is_hyp(x1, y1) || !is_hyp(x2, y2)) throw GroupError("P is not a sum of hyperbolic planes");
    for (const Vec* a : {&x1, &y1})
        for (const Vec* b : {&x2, &y2})
            if (!tq.bilinear(*a, *b).is_zero()) throw GroupError("the two planes are not orthogonal");
    size_t n = q.dim();
    std::vector<Vec> basis = complete_basis(q.spec, n, {x1, y1, x2, y2});
    // remaining basis vectors are corrected to the B-complement of P
    for (size_t i = 4; i < n; ++i) {
        Vec w = basis[i];
        w = w + x1.scaled(tq.bilinear(y1, w)) + y1.scaled(tq.bilinear(x1, w));
        w = w + x2.scaled(tq.bilinear(y2, w)) + y2.scaled(tq.bilinear(x2, w));
        basis[i] = w;
    }
    Mat block = Mat::identity(q.spec, n);
    FieldElement one = FieldElement::one(q.spec);
    block.at(2, 1) = one;  // y1 -> y1 + x2
    block.at(0, 3) = one;  // y2 -> y2 + x1
    Isometry eta{q, conjugate_block_to_basis(q.spec, basis, block)};
    if (!is_isometry(q, eta.matrix)) throw GroupError("basic null construction failed");
    return eta;
}

Isometry basic_radical(const QuadForm& q, const Vec& g, const Vec& g2) {
    Subspace rad = radical(q);
    if (!rad.contains(g) || !rad.contains(g2)) throw GroupError("vectors not in the radical");
    if (q.eval(g) != q.eval(g2)) throw GroupError("radical swap needs equal norms");
    Subspace pair = Subspace::span(q.spec, q.dim(), {g, g2});
    if (pair.dim() != 2) throw GroupError("radical swap needs independent vectors");
    std::vector<Vec> basis = complete_basis(q.spec, q.dim(), {g, g2});
    Mat block = Mat::identity(q.spec, q.dim());
    FieldElement one = FieldElement::one(q.spec), zero = FieldElement::zero(q.spec);
    block.at(0, 0) = zero;
    block.at(1, 1) = zero;
    block.at(0, 1) = one;
    block.at(1, 0) = one;
    Isometry rho{q, conjugate_block_to_basis(q.spec, basis, block)};
    if (!is_isometry(q, rho.matrix)) throw GroupError("basic radical construction failed");
    return rho;
}

Subspace residual_space(const QuadForm& q, const Mat& M) {
    Mat N = M + Mat::identity(q.spec, q.dim());
    return Subspace::span(q.spec, q.dim(), column_space_basis(N));
}

unsigned residue(const QuadForm& q, const Mat& M) { return residual_space(q, M).dim(); }

// ------------------------------------------------------------- GroupTable

GroupTable::GroupTable(QuadForm form, unsigned n, std::vector<std::uint16_t> sorted_codes)
    : form_(std::move(form)), n_(n), codes_(std::move(sorted_codes)) {
    count_ = n_ == 0 ? 1 : codes_.size() / (size_t(n_) * n_);
}

std::size_t GroupTable::order() const { return count_; }

std::vector<std::uint16_t> GroupTable::pack(const Mat& M) {
    std::vector<std::uint16_t> out;
    out.reserve(M.rows() * M.cols());
    for (size_t j = 0; j < M.cols(); ++j)
        for (size_t i = 0; i < M.rows(); ++i) out.push_back((std::uint16_t)M.at(i, j).bits());
    return out;
}

Mat GroupTable::element(std::size_t idx) const {
    Mat M(form_.spec, n_, n_);
    const std::uint16_t* p = codes_.data() + idx * n_ * n_;
    for (unsigned j = 0; j < n_; ++j)
        for (unsigned i = 0; i < n_; ++i) M.at(i, j) = FieldElement(form_.spec, std::uint32_t(p[j * n_ + i]));
    return M;
}

std::optional<std::size_t> GroupTable::index_of(const Mat& M) const {
    if (n_ == 0) return M.rows() == 0 ? std::optional<std::size_t>(0) : std::nullopt;
    auto key = pack(M);
    size_t stride = size_t(n_) * n_;
    size_t lo = 0, hi = count_;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        const std::uint16_t* p = codes_.data() + mid * stride;
        int cmp = 0;
        for (size_t t = 0; t < stride; ++t) {
            if (p[t] != key[t]) {
                cmp = p[t] < key[t] ? -1 : 1;
                break;
            }
        }
        if (cmp == 0) return mid;
        if (cmp < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return std::nullopt;
}

namespace packed {

void mul(const FieldSpec& spec, const std::uint16_t* A, const std::uint16_t* B, std::uint16_t* out,
         unsigned n) {
    // column-major: out(:,j) = A * B(:,j)
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = 0; i < n; ++i) {
            std::uint32_t acc = 0;
            for (unsigned t = 0; t < n; ++t) {
                std::uint32_t b = B[j * n + t];
                if (b) acc ^= mul_bits(spec, A[t * n + i], b);
            }
            out[j * n + i] = (std::uint16_t)acc;
        }
    }
}

bool is_identity(const std::uint16_t* A, unsigned n) {
    for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i < n; ++i)
            if (A[j * n + i] != (i == j ? 1 : 0)) return false;
    return true;
}

void inverse(const FieldSpec& spec, const std::uint16_t* A, std::uint16_t* out, unsigned n) {
    // row-major scratch augmented with the identity
    std::vector<std::uint32_t> m(size_t(n) * 2 * n, 0);
    auto at = [&](unsigned i, unsigned j) -> std::uint32_t& { return m[i * 2 * n + j]; };
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) at(i, j) = A[j * n + i];
        at(i, n + i) = 1;
    }
    auto inv_code = [&](std::uint32_t c) {
        // c^(2^m - 2) by square-and-multiply
        std::uint32_t acc = 1, sq = c;
        for (unsigned i = 1; i < spec.degree(); ++i) {
            sq = mul_bits(spec, sq, sq);
            acc = mul_bits(spec, acc, sq);
        }
        return acc;
    };
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = n;
        for (unsigned i = col; i < n; ++i)
            if (at(i, col)) {
                piv = i;
                break;
            }
        if (piv == n) throw GroupError("packed inverse of a singular matrix");
        if (piv != col)
            for (unsigned j = 0; j < 2 * n; ++j) std::swap(at(piv, j), at(col, j));
        std::uint32_t pi = inv_code(at(col, col));
        for (unsigned j = 0; j < 2 * n; ++j) at(col, j) = mul_bits(spec, at(col, j), pi);
        for (unsigned i = 0; i < n; ++i) {
            if (i == col || !at(i, col)) continue;
            std::uint32_t f = at(i, col);
            for (unsigned j = 0; j < 2 * n; ++j) at(i, j) ^= mul_bits(spec, f, at(col, j));
        }
    }
    for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i < n; ++i) out[j * n + i] = (std::uint16_t)at(i, n + j);
}

}  // namespace packed

namespace {

struct EnumContext {
    const FieldSpec* spec;
    unsigned n;
    bool check_q;
    std::vector<std::vector<std::uint16_t>> cand;    // all coordinate vectors
    std::vector<std::uint16_t> cand_q;               // q(x) per candidate
    std::vector<std::vector<std::uint16_t>> cand_gx; // G*x per candidate
    std::vector<std::uint16_t> basis_q;              // q(e_j)
    std::vector<std::uint16_t> gram;                 // row-major B(e_i,e_j)
    std::vector<std::uint16_t> inv_table;            // code -> code^-1 (0 -> 0)
};

struct EchelonState {
    // normalized rows (pivot entry 1) for the independence check
    std::vector<std::vector<std::uint16_t>> rows;
    std::vector<unsigned> piv;
};

bool reduces_to_zero(const EnumContext& cx, EchelonState& st, const std::uint16_t* x,
                     std::vector<std::uint16_t>& scratch, bool insert) {
    scratch.assign(x, x + cx.n);
    for (size_t r = 0; r < st.rows.size(); ++r) {
        std::uint32_t c = scratch[st.piv[r]];
        if (!c) continue;
        for (unsigned i = 0; i < cx.n; ++i)
            if (st.rows[r][i]) scratch[i] ^= mul_bits(*cx.spec, c, st.rows[r][i]);
    }
    unsigned p = cx.n;
    for (unsigned i = 0; i < cx.n; ++i)
        if (scratch[i]) {
            p = i;
            break;
        }
    if (p == cx.n) return true;
    if (insert) {
        std::uint32_t pinv = cx.inv_table[scratch[p]];
        std::vector<std::uint16_t> row(cx.n);
        for (unsigned i = 0; i < cx.n; ++i)
            row[i] = (std::uint16_t)mul_bits(*cx.spec, scratch[i], pinv);
        st.rows.push_back(std::move(row));
        st.piv.push_back(p);
    }
    return false;
}

void dfs(const EnumContext& cx, unsigned level, std::vector<std::uint32_t>& picked,
         EchelonState& st, std::vector<std::uint16_t>& out,
         const std::vector<std::uint32_t>* top_candidates) {
    if (level == cx.n) {
        for (std::uint32_t ci : picked)
            out.insert(out.end(), cx.cand[ci].begin(), cx.cand[ci].end());
        return;
    }
    const size_t ncand = cx.cand.size();
    std::vector<std::uint16_t> scratch(cx.n);
    auto try_candidate = [&](std::uint32_t ci) {
        if (ci == 0) return;  // zero vector is never an image of a basis vector
        if (cx.check_q && cx.cand_q[ci] != cx.basis_q[level]) return;
        for (unsigned i = 0; i < level; ++i) {
            // B(img_i, x) must equal B(e_i, e_level)
            const auto& gx = cx.cand_gx[ci];
            const auto& prev = cx.cand[picked[i]];
            std::uint32_t acc = 0;
            for (unsigned t = 0; t < cx.n; ++t)
                if (prev[t] && gx[t]) acc ^= mul_bits(*cx.spec, prev[t], gx[t]);
            if (acc != cx.gram[i * cx.n + level]) return;
        }
        EchelonState saved = st;
        if (reduces_to_zero(cx, st, cx.cand[ci].data(), scratch, true)) {
            st = std::move(saved);
            return;
        }
        picked.push_back(ci);
        dfs(cx, level + 1, picked, st, out, nullptr);
        picked.pop_back();
        st = std::move(saved);
    };
    if (level == 0 && top_candidates) {
        for (std::uint32_t ci : *top_candidates) try_candidate(ci);
    } else {
        for (std::uint32_t ci = 0; ci < ncand; ++ci) try_candidate(ci);
    }
}

}  // namespace

GroupTable enumerate_group(const QuadForm& q, const EnumOptions& opts) {
    const FieldSpecPtr& spec = q.spec;
    if (!spec->is_binary()) throw GroupError("enumeration needs a finite field");
    unsigned n = q.dim();
    if (n == 0) return GroupTable(q, 0, {});
    if (n * spec->degree() > opts.budget_bits)
        throw BudgetExceeded("enumeration budget exceeded (n*log2|k| = " +
                             std::to_string(n * spec->degree()) + " > " +
                             std::to_string(opts.budget_bits) + ")");

    EnumContext cx;
    cx.spec = spec.get();
    cx.n = n;
    cx.check_q = opts.kind == GroupKind::Orthogonal;
    TriForm tq = TriForm::of(q);
    Mat G = tq.gram();

    std::vector<Vec> vecs = enumerate_vectors(spec, n);
    cx.cand.reserve(vecs.size());
    cx.cand_q.reserve(vecs.size());
    cx.cand_gx.reserve(vecs.size());
    for (const Vec& v : vecs) {
        std::vector<std::uint16_t> cv(n), gx(n);
        for (unsigned i = 0; i < n; ++i) cv[i] = (std::uint16_t)v[i].bits();
        Vec gv = G.apply(v);
        for (unsigned i = 0; i < n; ++i) gx[i] = (std::uint16_t)gv[i].bits();
        cx.cand.push_back(std::move(cv));
        cx.cand_gx.push_back(std::move(gx));
        cx.cand_q.push_back((std::uint16_t)tq.eval(v).bits());
    }
    cx.basis_q.resize(n);
    cx.gram.resize(size_t(n) * n);
    for (unsigned j = 0; j < n; ++j) {
        cx.basis_q[j] = (std::uint16_t)tq.Q.at(j, j).bits();
        for (unsigned i = 0; i < n; ++i) cx.gram[i * n + j] = (std::uint16_t)G.at(i, j).bits();
    }
    cx.inv_table.assign(spec->order(), 0);
    for (std::uint32_t c = 1; c < spec->order(); ++c)
        cx.inv_table[c] = (std::uint16_t)FieldElement(spec, std::uint32_t(c)).inv().bits();

    unsigned jobs = std::max(1u, opts.jobs);
    std::vector<std::uint16_t> all;
    if (jobs == 1) {
        std::vector<std::uint32_t> picked;
        EchelonState st;
        dfs(cx, 0, picked, st, all, nullptr);
    } else {
        std::vector<std::vector<std::uint32_t>> buckets(jobs);
        for (std::uint32_t ci = 0; ci < cx.cand.size(); ++ci) buckets[ci % jobs].push_back(ci);
        std::vector<std::vector<std::uint16_t>> outs(jobs);
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < jobs; ++t)
            threads.emplace_back([&, t] {
                std::vector<std::uint32_t> picked;
                EchelonState st;
                dfs(cx, 0, picked, st, outs[t], &buckets[t]);
            });
        for (auto& th : threads) th.join();
        for (auto& o : outs) all.insert(all.end(), o.begin(), o.end());
    }

    // canonical order: sort elements by their packed codes
    size_t stride = size_t(n) * n;
    size_t count = all.size() / stride;
    std::vector<std::uint32_t> order_idx(count);
    std::iota(order_idx.begin(), order_idx.end(), 0);
    std::sort(order_idx.begin(), order_idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::lexicographical_compare(all.begin() + a * stride, all.begin() + (a + 1) * stride,
                                            all.begin() + b * stride, all.begin() + (b + 1) * stride);
    });
    std::vector<std::uint16_t> sorted;
    sorted.reserve(all.size());
    for (std::uint32_t idx : order_idx)
        sorted.insert(sorted.end(), all.begin() + idx * stride, all.begin() + (idx + 1) * stride);
    return GroupTable(q, n, std::move(sorted));
}

std::vector<std::uint32_t> involutions_of(const GroupTable& table) {
    std::vector<std::uint32_t> out;
    unsigned n = table.dim();
    if (n == 0) return out;
    const FieldSpec& spec = *table.form().spec;
    std::vector<std::uint16_t> sq(size_t(n) * n);
    for (std::size_t i = 0; i < table.order(); ++i) {
        const std::uint16_t* a = table.raw(i);
        if (packed::is_identity(a, n)) continue;
        packed::mul(spec, a, a, sq.data(), n);
        if (packed::is_identity(sq.data(), n)) out.push_back((std::uint32_t)i);
    }
    return out;
}

}  // namespace oqk
