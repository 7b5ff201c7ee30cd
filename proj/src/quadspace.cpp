#include "oqk/quadspace.hpp"

#include <algorithm>

namespace oqk {

QuadForm QuadForm::make(FieldSpecPtr sp, std::vector<std::pair<FieldElement, FieldElement>> pairs,
                        std::vector<FieldElement> diag) {
    QuadForm q(std::move(sp));
    q.pairs = std::move(pairs);
    q.diag = std::move(diag);
    q.r = (unsigned)q.pairs.size();
    q.s = (unsigned)q.diag.size();
    for (auto& [a, b] : q.pairs)
        if (!same_spec(a.spec(), q.spec) || !same_spec(b.spec(), q.spec))
            throw QuadError("pair coefficient from wrong field");
    for (auto& c : q.diag)
        if (!same_spec(c.spec(), q.spec)) throw QuadError("diagonal coefficient from wrong field");
    return q;
}

QuadForm QuadForm::hyperbolic(const FieldSpecPtr& sp, unsigned copies) {
    std::vector<std::pair<FieldElement, FieldElement>> p(
        copies, {FieldElement::zero(sp), FieldElement::zero(sp)});
    return make(sp, std::move(p), {});
}

FieldElement QuadForm::eval(const Vec& w) const {
    if (w.dim() != dim()) throw QuadError("dimension mismatch");
    FieldElement acc = FieldElement::zero(spec);
    for (unsigned i = 0; i < r; ++i) {
        const FieldElement& e = w[2 * i];
        const FieldElement& f = w[2 * i + 1];
        acc = acc + pairs[i].first * e * e + e * f + pairs[i].second * f * f;
    }
    for (unsigned j = 0; j < s; ++j) {
        const FieldElement& z = w[2 * r + j];
        acc = acc + diag[j] * z * z;
    }
    return acc;
}

FieldElement QuadForm::bilinear(const Vec& w, const Vec& w2) const {
    return eval(w + w2) + eval(w) + eval(w2);
}

Mat QuadForm::gram() const {
    Mat g(spec, dim(), dim());
    FieldElement one = FieldElement::one(spec);
    for (unsigned i = 0; i < r; ++i) {
        g.at(2 * i, 2 * i + 1) = one;
        g.at(2 * i + 1, 2 * i) = one;
    }
    return g;
}

QuadForm QuadForm::orth_sum(const QuadForm& o) const {
    QuadForm q(spec);
    q.pairs = pairs;
    q.pairs.insert(q.pairs.end(), o.pairs.begin(), o.pairs.end());
    q.diag = diag;
    q.diag.insert(q.diag.end(), o.diag.begin(), o.diag.end());
    q.r = r + o.r;
    q.s = s + o.s;
    return q;
}

bool QuadForm::operator==(const QuadForm& o) const {
    return same_spec(spec, o.spec) && pairs == o.pairs && diag == o.diag;
}

std::string QuadForm::to_string() const {
    if (dim() == 0) return "<>";
    std::string out;
    for (unsigned i = 0; i < r; ++i) {
        if (!out.empty()) out += "_|_";
        out += "[" + pairs[i].first.to_string() + "," + pairs[i].second.to_string() + "]";
    }
    if (s) {
        if (!out.empty()) out += "_|_";
        out += "<";
        for (unsigned j = 0; j < s; ++j) {
            if (j) out += ",";
            out += diag[j].to_string();
        }
        out += ">";
    }
    return out;
}

TriForm TriForm::of(const QuadForm& q) {
    TriForm t{q.spec, Mat(q.spec, q.dim(), q.dim())};
    FieldElement one = FieldElement::one(q.spec);
    for (unsigned i = 0; i < q.r; ++i) {
        t.Q.at(2 * i, 2 * i) = q.pairs[i].first;
        t.Q.at(2 * i, 2 * i + 1) = one;
        t.Q.at(2 * i + 1, 2 * i + 1) = q.pairs[i].second;
    }
    for (unsigned j = 0; j < q.s; ++j) t.Q.at(2 * q.r + j, 2 * q.r + j) = q.diag[j];
    return t;
}

TriForm TriForm::transport(const Mat& S) const {
    Mat M = S.transpose() * Q * S;
    // fold below-diagonal entries up: q is represented upper-triangular
    Mat U(spec, M.rows(), M.cols());
    for (size_t i = 0; i < M.rows(); ++i) {
        U.at(i, i) = M.at(i, i);
        for (size_t j = i + 1; j < M.cols(); ++j) U.at(i, j) = M.at(i, j) + M.at(j, i);
    }
    return TriForm{spec, U};
}

TriForm TriForm::on_subspace(const TriForm& q, const std::vector<Vec>& basis) {
    Mat S = Mat::from_columns(q.spec, basis);
    return q.transport(S);
}

FieldElement TriForm::eval(const Vec& w) const {
    if (w.dim() != dim()) throw QuadError("dimension mismatch");
    FieldElement acc = FieldElement::zero(spec);
    for (size_t i = 0; i < Q.rows(); ++i) {
        if (w[i].is_zero()) continue;
        for (size_t j = i; j < Q.cols(); ++j) {
            const FieldElement& c = Q.at(i, j);
            if (!c.is_zero() && !w[j].is_zero()) acc = acc + c * w[i] * w[j];
        }
    }
    return acc;
}

FieldElement TriForm::bilinear(const Vec& w, const Vec& w2) const {
    return eval(w + w2) + eval(w) + eval(w2);
}

Mat TriForm::gram() const { return Q + Q.transpose(); }

Subspace radical(const TriForm& q) {
    std::vector<Vec> ker = kernel_basis(q.gram());
    return Subspace::span(q.spec, q.dim(), ker);
}

Subspace radical(const QuadForm& q) { return radical(TriForm::of(q)); }

std::vector<Vec> enumerate_vectors(const FieldSpecPtr& s, size_t n) {
    if (!s->is_binary()) throw FieldError("cannot enumerate vectors over GF(2)(t)");
    std::vector<FieldElement> elems = enumerate_field(s);
    std::vector<Vec> out;
    size_t total = 1;
    for (size_t i = 0; i < n; ++i) total *= elems.size();
    out.reserve(total);
    std::vector<size_t> idx(n, 0);
    for (size_t c = 0; c < total; ++c) {
        Vec v(s, n);
        for (size_t i = 0; i < n; ++i) v[i] = elems[idx[i]];
        out.push_back(std::move(v));
        for (size_t i = 0; i < n; ++i) {
            if (++idx[i] < elems.size()) break;
            idx[i] = 0;
        }
    }
    return out;
}

namespace {

// find a nonzero isotropic vector in the span of `basis` that lies outside
// `avoid` (ambient form q); exhaustive scan, BinaryExt only
std::optional<Vec> find_isotropic(const TriForm& q, const std::vector<Vec>& basis,
                                  const Subspace* avoid = nullptr) {
    if (basis.empty()) return std::nullopt;
    for (const Vec& coeff : enumerate_vectors(q.spec, basis.size())) {
        if (coeff.is_zero()) continue;
        Vec w(q.spec, q.dim());
        for (size_t i = 0; i < basis.size(); ++i)
            if (!coeff[i].is_zero()) w = w + basis[i].scaled(coeff[i]);
        if (w.is_zero()) continue;
        if (avoid && avoid->contains(w)) continue;
        if (q.eval(w).is_zero()) return w;
    }
    return std::nullopt;
}

std::vector<Vec> reduce_to_basis(const FieldSpecPtr& spec, size_t ambient,
                                 const std::vector<Vec>& gens) {
    return Subspace::span(spec, ambient, gens).basis();
}

}  // namespace

WittDecomposition witt_decompose(const TriForm& q) {
    const FieldSpecPtr& spec = q.spec;
    size_t n = q.dim();
    WittDecomposition out{0, 0, QuadForm(spec), QuadForm(spec), Mat(spec, n, n)};

    Subspace rad = radical(q);

    Mat gram = q.gram();
    auto bil = [&](const Vec& a, const Vec& b) {
        FieldElement acc = FieldElement::zero(spec);
        Vec gb = gram.apply(b);
        for (size_t i = 0; i < a.dim(); ++i)
            if (!a[i].is_zero() && !gb[i].is_zero()) acc = acc + a[i] * gb[i];
        return acc;
    };

    // split hyperbolic planes off; isotropic vectors must be taken from the
    // whole remaining space (minus the radical) so the leftover kernel is
    // jointly anisotropic with the radical part
    std::vector<Vec> hyp;  // x_1,y_1,x_2,y_2,...
    std::vector<Vec> cur;
    {
        std::vector<Vec> all;
        for (size_t j = 0; j < n; ++j) {
            Vec e(spec, n);
            e[j] = FieldElement::one(spec);
            all.push_back(e);
        }
        cur = all;
    }
    while (true) {
        bool has_nonsingular_part = Subspace::span(spec, n, cur).dim() > rad.dim();
        if (!has_nonsingular_part) break;
        if (!spec->is_binary()) throw Undecidable("isotropy over the nonsingular part of GF(2)(t)");
        auto u = find_isotropic(q, cur, &rad);
        if (!u) break;
        // partner with B(u,v) = 1, then normalize q(v) to 0
        Vec v(spec, n);
        bool found = false;
        for (const Vec& w : cur) {
            FieldElement b = bil(*u, w);
            if (!b.is_zero()) {
                v = w.scaled(b.inv());
                found = true;
                break;
            }
        }
        if (!found) throw QuadError("isotropic vector outside the radical has no partner");
        v = v + u->scaled(q.eval(v));
        hyp.push_back(*u);
        hyp.push_back(v);
        ++out.m;
        // pass to the orthogonal complement of {u, v}
        std::vector<Vec> next;
        for (const Vec& w : cur) {
            Vec w2 = w + u->scaled(bil(v, w)) + v.scaled(bil(*u, w));
            next.push_back(w2);
        }
        cur = reduce_to_basis(spec, n, next);
    }

    // defect and anisotropic part inside the radical, by k^2 elimination
    std::vector<Vec> aniso_rad, defect;
    std::vector<FieldElement> aniso_norms;
    for (const Vec& v : rad.basis()) {
        FieldElement nv = q.eval(v);
        if (auto lam = k2_solve(aniso_norms, nv)) {
            Vec w = v;
            for (size_t i = 0; i < aniso_rad.size(); ++i)
                if (!(*lam)[i].is_zero()) w = w + aniso_rad[i].scaled((*lam)[i]);
            defect.push_back(w);
        } else {
            aniso_rad.push_back(v);
            aniso_norms.push_back(nv);
        }
    }

    // remaining nonsingular part (complement of the radical inside cur) is
    // anisotropic; extract a symplectic basis
    std::vector<Vec> aniso_pair_vecs;
    {
        std::vector<Vec> comp;
        Subspace acc = rad;
        for (const Vec& w : cur) {
            if (!acc.contains(w)) {
                comp.push_back(w);
                std::vector<Vec> gens = acc.basis();
                gens.push_back(w);
                acc = Subspace::span(spec, n, gens);
            }
        }
        cur = comp;
    }
    while (!cur.empty()) {
        Vec u = cur[0];
        Vec v(spec, n);
        bool found = false;
        for (size_t i = 1; i < cur.size(); ++i) {
            FieldElement b = bil(u, cur[i]);
            if (!b.is_zero()) {
                v = cur[i].scaled(b.inv());
                found = true;
                break;
            }
        }
        if (!found) throw QuadError("degenerate bilinear form on anisotropic part");
        aniso_pair_vecs.push_back(u);
        aniso_pair_vecs.push_back(v);
        out.aniso_pairs.pairs.emplace_back(q.eval(u), q.eval(v));
        std::vector<Vec> next;
        for (const Vec& w : cur) next.push_back(w + u.scaled(bil(v, w)) + v.scaled(bil(u, w)));
        cur = reduce_to_basis(spec, n, next);
    }
    out.aniso_pairs.r = (unsigned)out.aniso_pairs.pairs.size();

    for (const Vec& v : aniso_rad) out.aniso_diag.diag.push_back(q.eval(v));
    out.aniso_diag.s = (unsigned)out.aniso_diag.diag.size();
    out.d = (unsigned)defect.size();

    std::vector<Vec> cols;
    cols.insert(cols.end(), hyp.begin(), hyp.end());
    cols.insert(cols.end(), aniso_pair_vecs.begin(), aniso_pair_vecs.end());
    cols.insert(cols.end(), aniso_rad.begin(), aniso_rad.end());
    cols.insert(cols.end(), defect.begin(), defect.end());
    out.change_of_basis = Mat::from_columns(spec, cols);
    return out;
}

WittDecomposition witt_decompose(const QuadForm& q) { return witt_decompose(TriForm::of(q)); }

QuadForm WittDecomposition::reassembled() const {
    const FieldSpecPtr& spec = aniso_pairs.spec;
    QuadForm q = QuadForm::hyperbolic(spec, m).orth_sum(aniso_pairs).orth_sum(aniso_diag);
    QuadForm zeros(spec);
    zeros.s = d;
    zeros.diag.assign(d, FieldElement::zero(spec));
    return q.orth_sum(zeros);
}

FieldElement arf_invariant(const QuadForm& q) {
    if (q.s != 0) throw QuadError("arf invariant needs a nonsingular form");
    if (!q.spec->is_binary()) throw QuadError("arf invariant computed over GF(2^m) only");
    FieldElement acc = FieldElement::zero(q.spec);
    for (const auto& [a, b] : q.pairs) acc = acc + a * b;
    if (!absolute_trace(acc)) return FieldElement::zero(q.spec);
    for (const auto& e : enumerate_field(q.spec))
        if (absolute_trace(e)) return e;
    throw QuadError("no trace-one element");  // unreachable
}

bool arf_class_equal(const FieldElement& a, const FieldElement& b) {
    // a ~ b mod {x^2+x}  <=>  Tr(a+b) = 0
    return absolute_trace(a) == absolute_trace(b);
}

bool totally_singular_isometric(const std::vector<FieldElement>& a,
                                const std::vector<FieldElement>& b) {
    return a.size() == b.size() && k2_span_equal(a, b);
}

bool is_isometric(const TriForm& a, const TriForm& b) {
    if (!same_spec(a.spec, b.spec)) throw QuadError("field spec mismatch");
    if (a.dim() != b.dim()) return false;
    WittDecomposition wa = witt_decompose(a), wb = witt_decompose(b);
    if (wa.m != wb.m || wa.d != wb.d) return false;
    if (wa.aniso_pairs.dim() != wb.aniso_pairs.dim()) return false;
    if (wa.aniso_pairs.dim() > 0 &&
        !arf_class_equal(arf_invariant(wa.aniso_pairs), arf_invariant(wb.aniso_pairs)))
        return false;
    return totally_singular_isometric(wa.aniso_diag.diag, wb.aniso_diag.diag);
}

bool is_isometric(const QuadForm& a, const QuadForm& b) {
    return is_isometric(TriForm::of(a), TriForm::of(b));
}

Completion nonsingular_completion(const QuadForm& q, const std::vector<Vec>& U) {
    const FieldSpecPtr& spec = q.spec;
    size_t n = q.dim(), l = U.size();
    TriForm tq = TriForm::of(q);
    for (size_t i = 0; i < l; ++i)
        for (size_t j = i; j < l; ++j)
            if (!tq.bilinear(U[i], U[j]).is_zero())
                throw QuadError("U is not totally singular (B does not vanish)");
    Subspace uspan = Subspace::span(spec, n, U);
    if (uspan.dim() != l) throw QuadError("U is not independent");
    Subspace rad = radical(tq);
    if (uspan.intersect(rad).dim() != 0) throw QuadError("U intersects the radical");

    // solve B(u_i, v_j) = delta_ij
    Mat G = tq.gram();
    Mat A(spec, l, n);
    for (size_t i = 0; i < l; ++i) {
        Vec gu = G.apply(U[i]);
        for (size_t j = 0; j < n; ++j) A.at(i, j) = gu[j];
    }
    std::vector<Vec> V;
    for (size_t j = 0; j < l; ++j) {
        Vec e(spec, l);
        e[j] = FieldElement::one(spec);
        auto vj = solve(A, e);
        if (!vj) throw QuadError("no completion (U meets the radical)");
        V.push_back(*vj);
    }
    // make V mutually orthogonal: v_j += B(v_i, v_j) u_i for i < j
    for (size_t j = 0; j < l; ++j)
        for (size_t i = 0; i < j; ++i) {
            FieldElement c = tq.bilinear(V[i], V[j]);
            if (!c.is_zero()) V[j] = V[j] + U[i].scaled(c);
        }
    // kill the norm of v_i paired with an isotropic u_i
    for (size_t i = 0; i < l; ++i)
        if (q.eval(U[i]).is_zero()) V[i] = V[i] + U[i].scaled(q.eval(V[i]));

    Mat pairing(spec, l, l);
    for (size_t i = 0; i < l; ++i)
        for (size_t j = 0; j < l; ++j) pairing.at(i, j) = tq.bilinear(U[i], V[j]);
    return Completion{std::move(V), std::move(pairing)};
}

std::vector<QuadForm> rewrite_equivalences(const QuadForm& q) {
    std::vector<QuadForm> out;
    FieldElement one = FieldElement::one(q.spec);
    for (unsigned i = 0; i < q.r; ++i) {
        auto [a, b] = q.pairs[i];
        {
            QuadForm w = q;
            w.pairs[i] = {a, a + b + one};
            out.push_back(w);
        }
        {
            QuadForm w = q;
            w.pairs[i] = {b, a};
            out.push_back(w);
        }
        std::vector<FieldElement> alphas;
        if (q.spec->is_binary()) {
            for (const auto& e : enumerate_field(q.spec))
                if (!e.is_zero()) alphas.push_back(e);
        } else {
            alphas = {FieldElement::one(q.spec), FieldElement::gen(q.spec)};
        }
        for (const auto& al : alphas) {
            QuadForm w = q;
            FieldElement a2 = al * al;
            w.pairs[i] = {a2 * a, b / a2};
            out.push_back(w);
        }
    }
    for (unsigned i = 0; i < q.r; ++i)
        for (unsigned j = 0; j < q.r; ++j) {
            if (i == j) continue;
            {
                // [a,a'] _|_ [b,b'] = [a+b,a'] _|_ [b,a'+b']
                QuadForm w = q;
                w.pairs[i] = {q.pairs[i].first + q.pairs[j].first, q.pairs[i].second};
                w.pairs[j] = {q.pairs[j].first, q.pairs[i].second + q.pairs[j].second};
                out.push_back(w);
            }
            if (i < j) {
                QuadForm w = q;
                std::swap(w.pairs[i], w.pairs[j]);
                out.push_back(w);
            }
        }
    return out;
}

bool is_anisotropic(const TriForm& q) {
    if (q.dim() == 0) return true;
    if (q.spec->is_binary()) {
        for (const Vec& v : enumerate_vectors(q.spec, q.dim()))
            if (!v.is_zero() && q.eval(v).is_zero()) return false;
        return true;
    }
    // totally singular iff B == 0
    if (!q.gram().is_zero())
        throw Undecidable("anisotropy of a nonsingular GF(2)(t) form");
    std::vector<FieldElement> norms;
    for (size_t i = 0; i < q.dim(); ++i) norms.push_back(q.Q.at(i, i));
    return k2_linear_rank(norms) == q.dim();
}

}  // namespace oqk
