#include "oqk/involutions.hpp"

#include <algorithm>
#include <climits>

namespace oqk {

namespace {

bool is_involution(const QuadForm& q, const Mat& M) {
    return M.rows() == q.dim() && !M.is_identity() && (M * M).is_identity();
}

Vec embed(const FieldSpecPtr& spec, size_t n, const std::vector<Vec>& basis, const Vec& coords) {
    Vec out(spec, n);
    for (size_t i = 0; i < basis.size(); ++i)
        if (!coords[i].is_zero()) out = out + basis[i].scaled(coords[i]);
    return out;
}

// canonical representative of value mod the k^2-span of `span_basis`
FieldElement reduce_mod_k2span(const FieldElement& value, std::vector<FieldElement> span_basis) {
    const FieldSpecPtr& s = value.spec();
    // echelonize the span coordinates, then sweep the value's coordinates
    std::vector<std::vector<FieldElement>> rows;
    std::vector<int> pivots;
    for (const auto& b : span_basis) {
        std::vector<FieldElement> r = k2_coordinates(b);
        for (size_t i = 0; i < rows.size(); ++i)
            if (!r[pivots[i]].is_zero()) {
                FieldElement f = r[pivots[i]] / rows[i][pivots[i]];
                for (size_t j = 0; j < r.size(); ++j) r[j] = r[j] + f * rows[i][j];
            }
        for (size_t j = 0; j < r.size(); ++j)
            if (!r[j].is_zero()) {
                rows.push_back(r);
                pivots.push_back((int)j);
                break;
            }
    }
    std::vector<FieldElement> v = k2_coordinates(value);
    for (size_t i = 0; i < rows.size(); ++i)
        if (!v[pivots[i]].is_zero()) {
            FieldElement f = v[pivots[i]] / rows[i][pivots[i]];
            for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] + f * rows[i][j];
        }
    // reconstruct from the remaining coordinates: value = h0^2 + t h1^2
    FieldElement out = v[0] * v[0];
    if (v.size() > 1) out = out + FieldElement::gen(s) * v[1] * v[1];
    return out;
}

}  // namespace

std::string to_string(InvKind k) {
    switch (k) {
        case InvKind::Radical: return "radical";
        case InvKind::Null: return "null";
        case InvKind::Diagonal: return "diagonal";
        case InvKind::Hyperbolic: return "hyperbolic";
        case InvKind::GeneralTriple: return "general";
    }
    return "?";
}

WallForm wall_form(const QuadForm& q, const Mat& M) {
    if (!is_involution(q, M)) throw GroupError("not an involution");
    const FieldSpecPtr& spec = q.spec;
    size_t n = q.dim();
    Mat N = M + Mat::identity(spec, n);
    Subspace R = residual_space(q, M);
    const std::vector<Vec>& rb = R.basis();
    size_t d = rb.size();
    TriForm tq = TriForm::of(q);

    WallForm out{rb, Mat(spec, d, d), true};
    std::vector<Vec> z;
    for (const Vec& r : rb) {
        auto zi = solve(N, r);
        if (!zi) throw GroupError("residual vector has no preimage");
        z.push_back(*zi);
    }
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) out.theta.at(i, j) = tq.bilinear(z[i], rb[j]);
    for (size_t i = 0; i < d; ++i)
        if (!out.theta.at(i, i).is_zero()) out.alternating = false;
    return out;
}

std::optional<std::vector<Vec>> orthogonal_anisotropic_basis(const Mat& theta) {
    const FieldSpecPtr& spec = theta.spec();
    size_t d = theta.rows();
    auto th = [&](const Vec& a, const Vec& b) {
        FieldElement acc = FieldElement::zero(spec);
        Vec tb = theta.apply(b);
        for (size_t i = 0; i < d; ++i)
            if (!a[i].is_zero() && !tb[i].is_zero()) acc = acc + a[i] * tb[i];
        return acc;
    };
    std::vector<Vec> done, rest;
    for (size_t i = 0; i < d; ++i) {
        Vec e(spec, d);
        e[i] = FieldElement::one(spec);
        rest.push_back(e);
    }
    while (!rest.empty()) {
        size_t pick = rest.size();
        for (size_t i = 0; i < rest.size(); ++i)
            if (!th(rest[i], rest[i]).is_zero()) {
                pick = i;
                break;
            }
        if (pick < rest.size()) {
            Vec w = rest[pick];
            FieldElement c = th(w, w);
            std::vector<Vec> next;
            for (size_t i = 0; i < rest.size(); ++i) {
                if (i == pick) continue;
                next.push_back(rest[i] + w.scaled(th(rest[i], w) / c));
            }
            done.push_back(w);
            rest = std::move(next);
            continue;
        }
        // span(rest) is alternating; absorb a hyperbolic pair into the last
        // extracted anisotropic vector
        if (done.empty()) return std::nullopt;
        size_t ei = 0, fi = rest.size();
        for (size_t j = 1; j < rest.size(); ++j)
            if (!th(rest[0], rest[j]).is_zero()) {
                fi = j;
                break;
            }
        if (fi == rest.size()) throw GroupError("degenerate Wall form");
        Vec e = rest[ei];
        Vec f = rest[fi].scaled(th(e, rest[fi]).inv());
        std::vector<Vec> next;
        for (size_t j = 0; j < rest.size(); ++j) {
            if (j == ei || j == fi) continue;
            next.push_back(rest[j] + e.scaled(th(f, rest[j])) + f.scaled(th(e, rest[j])));
        }
        Vec w = done.back();
        done.pop_back();
        FieldElement c = th(w, w);
        Vec v1 = e + w;
        Vec v2 = f + w.scaled(c.inv());
        Vec v3 = e + f.scaled(c) + w;
        done.push_back(v1);
        done.push_back(v2);
        done.push_back(v3);
        rest = std::move(next);
    }
    return done;
}

std::vector<Vec> diagonal_inducing_set(const QuadForm& q, const Mat& M) {
    WallForm wf = wall_form(q, M);
    auto basis = orthogonal_anisotropic_basis(wf.theta);
    if (!basis) throw GroupError("involution is not a product of orthogonal transvections");
    std::vector<Vec> out;
    for (const Vec& coords : *basis) out.push_back(embed(q.spec, q.dim(), wf.basisR, coords));
    return out;
}

InvolutionDescriptor classify(const QuadForm& q, const Mat& M) {
    if (!is_involution(q, M)) throw GroupError("not an involution");
    InvolutionDescriptor d;
    d.residual_q = QuadForm(q.spec);
    Subspace R = residual_space(q, M);
    d.residue = R.dim();
    for (const Vec& r : R.basis()) d.residual_q.diag.push_back(q.eval(r));
    d.residual_q.s = d.residue;

    Subspace rad = radical(q);
    bool in_rad = true;
    for (const Vec& r : R.basis()) in_rad = in_rad && rad.contains(r);

    if (in_rad) {
        d.kind = InvKind::Radical;
        d.length = d.residue;
        // inducing preimages, taken in the radical when possible, then each
        // norm reduced to a canonical representative modulo the k^2-span of
        // the fixed-space norms
        const FieldSpecPtr& spec = q.spec;
        size_t n = q.dim();
        Mat N = M + Mat::identity(spec, n);
        std::vector<Vec> fixed = kernel_basis(N);
        std::vector<FieldElement> fixed_norms;
        for (const Vec& f : fixed) fixed_norms.push_back(q.eval(f));
        // restrict N to the radical; fall back to all of W if needed
        Mat radmat = Mat::from_columns(spec, rad.basis());
        Mat Nrad = N * radmat;
        for (const Vec& r : R.basis()) {
            Vec g(spec, n);
            if (auto sol = solve(Nrad, r)) {
                g = radmat.apply(*sol);
            } else if (auto sol2 = solve(N, r)) {
                g = *sol2;
            } else {
                throw GroupError("residual vector has no preimage");
            }
            d.norm_signature.push_back(reduce_mod_k2span(q.eval(g), fixed_norms));
        }
        return d;
    }

    if (q.s == 0) {
        WallForm wf = wall_form(q, M);
        if (wf.alternating) {
            d.kind = InvKind::Null;
            d.length = d.residue / 2;
            return d;
        }
        auto basis = orthogonal_anisotropic_basis(wf.theta);
        if (basis) {
            d.kind = InvKind::Diagonal;
            d.length = d.residue;
            for (const Vec& coords : *basis) {
                Vec w = embed(q.spec, q.dim(), wf.basisR, coords);
                d.norm_signature.push_back(q.eval(w));
            }
        } else {
            // no factorization of length res exists
            d.kind = InvKind::Hyperbolic;
            d.length = d.residue + 1;
        }
        return d;
    }

    d.kind = InvKind::GeneralTriple;
    d.length = d.residue;
    return d;
}

InvolutionDescriptor classify(const Isometry& phi) { return classify(phi.form, phi.matrix); }

bool conjugate_test_transvections(const QuadForm& q, const Mat& a, const Mat& b) {
    InvolutionDescriptor da = classify(q, a), db = classify(q, b);
    auto is_tr = [](InvKind k) { return k == InvKind::Diagonal || k == InvKind::Hyperbolic; };
    if (!is_tr(da.kind) || !is_tr(db.kind)) throw GroupError("not transvection-product involutions");
    if (da.kind != db.kind) return false;  // reduced lengths differ
    if (da.residue != db.residue) return false;
    return totally_singular_isometric(da.norm_signature, db.norm_signature);
}

bool conjugate_test_null(const QuadForm& q, const Mat& a, const Mat& b) {
    InvolutionDescriptor da = classify(q, a), db = classify(q, b);
    if (da.kind != InvKind::Null || db.kind != InvKind::Null)
        throw GroupError("not null involutions");
    return da.length == db.length;
}

bool conjugate_test_radical(const QuadForm& q, const Mat& a, const Mat& b) {
    InvolutionDescriptor da = classify(q, a), db = classify(q, b);
    if (da.kind != InvKind::Radical || db.kind != InvKind::Radical)
        throw GroupError("not radical involutions");
    if (da.length != db.length) return false;
    if (!totally_singular_isometric(da.norm_signature, db.norm_signature)) return false;
    // the fixed spaces travel with any conjugator, so their forms must match
    Mat Na = a + Mat::identity(q.spec, q.dim());
    Mat Nb = b + Mat::identity(q.spec, q.dim());
    TriForm tq = TriForm::of(q);
    TriForm fa = TriForm::on_subspace(tq, kernel_basis(Na));
    TriForm fb = TriForm::on_subspace(tq, kernel_basis(Nb));
    return is_isometric(fa, fb);
}

// ------------------------------------------------------------------ triples

Triple decompose_triple(const QuadForm& q, const Mat& M) {
    if (!(M * M).is_identity()) throw GroupError("not an involution");
    const FieldSpecPtr& spec = q.spec;
    unsigned s = q.s, w1 = 2 * q.r, n = q.dim();
    // permute to (rad | W_1) order: rad basis vectors sit at the tail of the
    // signature basis
    Mat P(spec, n, n);
    FieldElement one = FieldElement::one(spec);
    for (unsigned j = 0; j < s; ++j) P.at(w1 + j, j) = one;
    for (unsigned j = 0; j < w1; ++j) P.at(j, s + j) = one;
    Mat Pm = *inverse(P) * M * P;
    for (unsigned i = s; i < n; ++i)
        for (unsigned j = 0; j < s; ++j)
            if (!Pm.at(i, j).is_zero()) throw GroupError("radical is not invariant");
    Triple t{q, Pm.submatrix(0, 0, s, s), Mat(spec, s, w1), Pm.submatrix(s, s, w1, w1)};
    t.Y = t.rho * Pm.submatrix(0, s, s, w1);  // block is rho*Y and rho^2 = id
    return t;
}

Mat reassemble_triple(const Triple& t) {
    const QuadForm& q = t.form;
    const FieldSpecPtr& spec = q.spec;
    unsigned s = q.s, w1 = 2 * q.r, n = q.dim();
    Mat block(spec, n, n);
    block.paste(0, 0, t.rho);
    block.paste(0, s, t.rho * t.Y);
    block.paste(s, s, t.tau);
    Mat P(spec, n, n);
    FieldElement one = FieldElement::one(spec);
    for (unsigned j = 0; j < s; ++j) P.at(w1 + j, j) = one;
    for (unsigned j = 0; j < w1; ++j) P.at(j, s + j) = one;
    return P * block * *inverse(P);
}

NormalizedTriple normalize_triple(const Triple& t) {
    const QuadForm& q = t.form;
    const FieldSpecPtr& spec = q.spec;
    unsigned s = q.s, w1dim = 2 * q.r, n = q.dim();
    QuadForm qw1 = QuadForm::make(spec, q.pairs, {});  // restriction to W_1
    TriForm tq = TriForm::of(q);

    auto embed_w1 = [&](const Vec& v) {
        Vec out(spec, n);
        for (unsigned i = 0; i < w1dim; ++i) out[i] = v[i];
        return out;
    };
    auto embed_rad = [&](const Vec& v) {
        Vec out(spec, n);
        for (unsigned i = 0; i < s; ++i) out[w1dim + i] = v[i];
        return out;
    };

    NormalizedTriple out{t.rho, Mat(spec, s, w1dim), Mat::identity(spec, n), Mat(spec, n, n), {}};

    std::vector<Vec> U, V, X;  // W_1 coordinate vectors
    if (!t.tau.is_identity()) {
        // symplectic Wall data of tau on W_1
        Mat Nt = t.tau + Mat::identity(spec, w1dim);
        Subspace Rt = Subspace::span(spec, w1dim, column_space_basis(Nt));
        TriForm tw1 = TriForm::of(qw1);
        size_t dt = Rt.dim();
        Mat theta(spec, dt, dt);
        std::vector<Vec> z;
        for (const Vec& r : Rt.basis()) {
            auto zi = solve(Nt, r);
            if (!zi) throw GroupError("tau residual vector has no preimage");
            z.push_back(*zi);
        }
        for (size_t i = 0; i < dt; ++i)
            for (size_t j = 0; j < dt; ++j) theta.at(i, j) = tw1.bilinear(z[i], Rt.basis()[j]);
        auto basis = orthogonal_anisotropic_basis(theta);
        if (!basis)
            throw GroupError("tau is not a product of symplectic transvections with a_i != 0");
        for (const Vec& coords : *basis) U.push_back(embed(spec, w1dim, Rt.basis(), coords));
        Completion comp = nonsingular_completion(qw1, U);
        V = comp.v;
        // X = B-orthogonal complement of span(U u V) inside W_1
        {
            Mat G = tw1.gram();
            Mat A(spec, 2 * U.size(), w1dim);
            for (size_t i = 0; i < U.size(); ++i) {
                Vec gu = G.apply(U[i]), gv = G.apply(V[i]);
                for (unsigned j = 0; j < w1dim; ++j) {
                    A.at(2 * i, j) = gu[j];
                    A.at(2 * i + 1, j) = gv[j];
                }
            }
            X = kernel_basis(A);
        }
    } else {
        // tau = id: no transvection part, W_1 is all fixed
        for (unsigned i = 0; i < w1dim; ++i) {
            Vec e(spec, w1dim);
            e[i] = FieldElement::one(spec);
            X.push_back(e);
        }
    }

    // a_i = 1/theta(u_i,u_i); the paper replaces u_i by u_i + (1/a_i) rho(Y v_i)
    std::vector<Vec> UY;  // ambient coordinates
    for (size_t i = 0; i < U.size(); ++i) {
        // recover a_i from tau itself: tau(v_i) = v_i + a_i u_i
        Vec tv = t.tau.apply(V[i]);
        Vec diff = tv + V[i];
        FieldElement ai = FieldElement::zero(spec);
        for (unsigned j = 0; j < w1dim; ++j)
            if (!U[i][j].is_zero()) {
                ai = diff[j] / U[i][j];
                break;
            }
        if (ai.is_zero()) throw GroupError("vanishing transvection coefficient");
        Vec yv(spec, s);
        for (unsigned r = 0; r < s; ++r) {
            FieldElement acc = FieldElement::zero(spec);
            for (unsigned c = 0; c < w1dim; ++c) acc = acc + t.Y.at(r, c) * V[i][c];
            yv[r] = acc;
        }
        Vec rho_yv = t.rho.apply(yv);
        Vec uy = embed_w1(U[i]) + embed_rad(rho_yv).scaled(ai.inv());
        UY.push_back(uy);
        out.inducing.push_back(uy);
    }

    // new basis: rad | U_Y | X | V  (W_1' = span(U_Y u X u V))
    std::vector<Vec> cols;
    for (unsigned j = 0; j < s; ++j) {
        Vec g(spec, n);
        g[w1dim + j] = FieldElement::one(spec);
        cols.push_back(g);
    }
    for (const Vec& u : UY) cols.push_back(u);
    for (const Vec& x : X) cols.push_back(embed_w1(x));
    for (const Vec& v : V) cols.push_back(embed_w1(v));
    out.new_basis = Mat::from_columns(spec, cols);

    // tau_Y = product of the orthogonal transvections induced by the new vectors
    Mat tauY_amb = Mat::identity(spec, n);
    for (const Vec& uy : UY) tauY_amb = orthogonal_transvection(q, uy).matrix * tauY_amb;

    // express the original involution in the new basis and read off the blocks
    Mat S = out.new_basis;
    auto Sinv = inverse(S);
    if (!Sinv) throw GroupError("normalized basis is degenerate");
    Mat orig = reassemble_triple(t);
    Mat moved = *Sinv * orig * S;
    Mat tauY_moved = *Sinv * tauY_amb * S;
    out.tauY = tauY_moved.submatrix(s, s, w1dim, w1dim);
    Mat y0block = moved.submatrix(0, s, s, w1dim);
    out.Y0 = t.rho * y0block;
    return out;
}

TriBool conjugate_test_general(const Triple& a, const Triple& b, unsigned budget_bits) {
    const QuadForm& q = a.form;
    if (!(q == b.form)) throw GroupError("triples live on different spaces");
    const FieldSpecPtr& spec = q.spec;
    unsigned s = q.s, w1 = 2 * q.r;
    QuadForm qrad = QuadForm::make(spec, {}, q.diag);
    QuadForm qw1 = QuadForm::make(spec, q.pairs, {});
    GroupTable orad(qrad, 0, {});
    GroupTable spw1(qw1, 0, {});
    try {
        orad = enumerate_group(qrad, {budget_bits, 1, GroupKind::Orthogonal});
        spw1 = enumerate_group(qw1, {budget_bits, 1, GroupKind::Symplectic});
    } catch (const BudgetExceeded&) {
        return TriBool::Unknown;
    }

    TriForm tw1 = TriForm::of(qw1);
    for (std::size_t pi = 0; pi < orad.order(); ++pi) {
        Mat psi = orad.element(pi);
        if (!(psi * a.rho == b.rho * psi)) continue;  // clause 1
        for (std::size_t mi = 0; mi < spw1.order(); ++mi) {
            Mat mu = spw1.element(mi);
            if (!(mu * a.tau == b.tau * mu)) continue;  // clause 2
            // clause 3: solve rho1 Z + Z tau1 = psi^-1 Y2 mu + Y1  (linear in Z),
            // subject to q(Zw) = q(w) + q(mu w) on the W_1 basis
            Mat rhs = *inverse(psi) * b.Y * mu + a.Y;
            // unknowns: Z (s x w1); build the linear system row by row
            size_t nz = size_t(s) * w1;
            Mat A(spec, nz, nz);
            Vec bvec(spec, nz);
            for (unsigned i = 0; i < s; ++i)
                for (unsigned j = 0; j < w1; ++j) {
                    size_t row = i * w1 + j;
                    bvec[row] = rhs.at(i, j);
                    // (rho1 Z)_{ij} = sum_t rho1_{it} Z_{tj}
                    for (unsigned tt = 0; tt < s; ++tt) {
                        size_t col = tt * w1 + j;
                        A.at(row, col) = A.at(row, col) + a.rho.at(i, tt);
                    }
                    // (Z tau1)_{ij} = sum_t Z_{it} tau1_{tj}
                    for (unsigned tt = 0; tt < w1; ++tt) {
                        size_t col = i * w1 + tt;
                        A.at(row, col) = A.at(row, col) + a.tau.at(tt, j);
                    }
                }
            auto part = solve(A, bvec);
            if (!part) continue;
            std::vector<Vec> ker = kernel_basis(A);
            std::uint64_t total = 1;
            bool over = false;
            for (size_t i = 0; i < ker.size() && !over; ++i) {
                total *= spec->order();
                over = total > (std::uint64_t(1) << budget_bits);
            }
            if (over) return TriBool::Unknown;  // Z search budget
            std::vector<Vec> coeffs = enumerate_vectors(spec, ker.size());
            for (const Vec& cf : coeffs) {
                Vec zvec = *part;
                for (size_t i = 0; i < ker.size(); ++i)
                    if (!cf[i].is_zero()) zvec = zvec + ker[i].scaled(cf[i]);
                Mat Z(spec, s, w1);
                for (unsigned i = 0; i < s; ++i)
                    for (unsigned j = 0; j < w1; ++j) Z.at(i, j) = zvec[i * w1 + j];
                bool ok = true;
                for (unsigned j = 0; j < w1 && ok; ++j) {
                    Vec e(spec, w1);
                    e[j] = FieldElement::one(spec);
                    Vec ze = Z.apply(e);
                    FieldElement qz = FieldElement::zero(spec);
                    for (unsigned i = 0; i < s; ++i) qz = qz + q.diag[i] * ze[i] * ze[i];
                    ok = qz == tw1.eval(e) + tw1.eval(mu.apply(e));
                }
                if (ok) return TriBool::True;
            }
        }
    }
    return TriBool::False;
}

bool oracle_conjugate(const GroupTable& table, const Mat& a, const Mat& b) {
    if (!table.contains(a) || !table.contains(b)) throw GroupError("element not in the table");
    unsigned n = table.dim();
    const FieldSpec& spec = *table.form().spec;
    auto pa = GroupTable::pack(a), pb = GroupTable::pack(b);
    std::vector<std::uint16_t> l(size_t(n) * n), r(size_t(n) * n);
    for (std::size_t i = 0; i < table.order(); ++i) {
        const std::uint16_t* g = table.raw(i);
        packed::mul(spec, g, pa.data(), l.data(), n);
        packed::mul(spec, pb.data(), g, r.data(), n);
        if (l == r) return true;  // g a = b g  <=>  g a g^-1 = b
    }
    return false;
}

std::vector<unsigned> conjugacy_classes(const GroupTable& table,
                                        const std::vector<std::uint32_t>& involutions) {
    unsigned n = table.dim();
    const FieldSpec& spec = *table.form().spec;
    std::vector<unsigned> cls(involutions.size(), UINT_MAX);
    // map packed involution -> position
    std::vector<std::pair<std::vector<std::uint16_t>, size_t>> keyed;
    for (size_t i = 0; i < involutions.size(); ++i) {
        const std::uint16_t* p = table.raw(involutions[i]);
        keyed.emplace_back(std::vector<std::uint16_t>(p, p + size_t(n) * n), i);
    }
    std::sort(keyed.begin(), keyed.end());
    auto find_pos = [&](const std::vector<std::uint16_t>& key) -> size_t {
        auto it = std::lower_bound(keyed.begin(), keyed.end(), key,
                                   [](const auto& a, const auto& b) { return a.first < b; });
        return it->second;
    };
    unsigned next_cls = 0;
    std::vector<std::uint16_t> ginv(size_t(n) * n), tmp(size_t(n) * n), conj(size_t(n) * n);
    for (size_t i = 0; i < involutions.size(); ++i) {
        if (cls[i] != UINT_MAX) continue;
        unsigned me = next_cls++;
        const std::uint16_t* rep = table.raw(involutions[i]);
        for (std::size_t e = 0; e < table.order(); ++e) {
            const std::uint16_t* g = table.raw(e);
            packed::mul(spec, g, rep, tmp.data(), n);
            packed::inverse(spec, g, ginv.data(), n);
            packed::mul(spec, tmp.data(), ginv.data(), conj.data(), n);
            cls[find_pos(conj)] = me;
        }
    }
    return cls;
}

TriBool conjugate_test(const QuadForm& q, const Mat& a, const Mat& b, unsigned budget_bits) {
    InvolutionDescriptor da = classify(q, a), db = classify(q, b);
    if (da.kind != db.kind) {
        // different kinds are never conjugate: the residual space position
        // (inside/outside rad), q|R, and reduced length are all invariants
        if ((da.kind == InvKind::Diagonal && db.kind == InvKind::Hyperbolic) ||
            (da.kind == InvKind::Hyperbolic && db.kind == InvKind::Diagonal))
            return conjugate_test_transvections(q, a, b) ? TriBool::True : TriBool::False;
        return TriBool::False;
    }
    switch (da.kind) {
        case InvKind::Radical:
            return conjugate_test_radical(q, a, b) ? TriBool::True : TriBool::False;
        case InvKind::Null:
            return conjugate_test_null(q, a, b) ? TriBool::True : TriBool::False;
        case InvKind::Diagonal:
        case InvKind::Hyperbolic:
            return conjugate_test_transvections(q, a, b) ? TriBool::True : TriBool::False;
        case InvKind::GeneralTriple:
            return conjugate_test_general(decompose_triple(q, a), decompose_triple(q, b),
                                          budget_bits);
    }
    return TriBool::Unknown;
}

}  // namespace oqk
