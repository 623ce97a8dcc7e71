#include "qnl/nets.hpp"

#include <algorithm>

namespace qnl {

Splitting Splitting::xi0(int m) {
    Splitting s;
    s.m = m;
    s.n = 2 * m + 1;
    for (int i = 0; i <= m; ++i) s.first.push_back(i);
    for (int i = m + 1; i <= 2 * m; ++i) s.second.push_back(i);
    return s;
}

void Splitting::validate() const {
    if (n != 2 * m + 1 || static_cast<int>(first.size()) != m + 1 ||
        static_cast<int>(second.size()) != m)
        throw BadSplitting();
    std::vector<bool> seen(n, false);
    for (int i : first) {
        if (i < 0 || i >= n || seen[i]) throw BadSplitting();
        seen[i] = true;
    }
    for (int i : second) {
        if (i < 0 || i >= n || seen[i]) throw BadSplitting();
        seen[i] = true;
    }
    if (base_change && (base_change->rows() != n || base_change->cols() != n))
        throw BadSplitting();
}

BarthRank barth_rank(const Net& a) {
    int r = rank(flatten(a));
    return BarthRank{r, r == 2 * a.n + 2};
}

MonadData monad_assemble(const Net& a) {
    if (!barth_rank(a).pass) throw RankPrecondition();
    int n = a.n, w = 2 * n + 2;
    Mat<Rat> big = flatten(a);

    // W basis: first 2n+2 independent columns in index order
    MonadData md;
    md.n = n;
    std::vector<int> chosen;
    for (int c = 0; c < 4 * n && static_cast<int>(chosen.size()) < w; ++c) {
        std::vector<int> trial = chosen;
        trial.push_back(c);
        if (rank(big.columns(trial)) == static_cast<int>(trial.size())) chosen = trial;
    }
    md.w_columns = chosen;
    md.w_basis = big.columns(chosen);

    // coordinates of every column of A in the chosen basis: A = B * C
    Mat<Rat> coords = solve(md.w_basis, big); // w x 4n
    for (int al = 0; al < 4; ++al) {
        Mat<Rat> ac(w, n);
        for (int r = 0; r < w; ++r)
            for (int i = 0; i < n; ++i) ac(r, i) = coords(r, 4 * i + al);
        md.a_coeffs[al] = ac;
    }

    // the induced skew form is the principal submatrix on the chosen indices
    Mat<Rat> q(w, w);
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j) q(i, j) = big(chosen[i], chosen[j]);
    md.q = q;
    return md;
}

std::vector<Mat<Rat>> monad_identity_residual(const MonadData& md) {
    std::vector<Mat<Rat>> out;
    for (int al = 0; al < 4; ++al)
        for (int be = al; be < 4; ++be) {
            Mat<Rat> t = md.a_coeffs[al].transpose() * md.q * md.a_coeffs[be];
            if (al == be)
                out.push_back(t + t.transpose()); // diagonal coefficient is 2 sym(t)
            else
                out.push_back(t + (md.a_coeffs[be].transpose() * md.q * md.a_coeffs[al]));
        }
    return out;
}

SectionKernels barth_sections(const Net& a) {
    MonadData md = monad_assemble(a);
    int n = a.n, w = 2 * n + 2;

    // section-level map W -> H^dual (x) V^dual induced by a^dual q
    Mat<Rat> sec(4 * n, w);
    for (int al = 0; al < 4; ++al)
        sec.set_block(n * al, 0, md.a_coeffs[al].transpose() * md.q);
    int sk = w - rank(sec);

    // h in H with h (x) V inside ker A
    Mat<Rat> big = flatten(a);
    Mat<Rat> vert(16 * n, n);
    for (int i = 0; i < n; ++i)
        for (int al = 0; al < 4; ++al)
            for (int r = 0; r < 4 * n; ++r) vert(4 * r + al, i) = big(r, 4 * i + al);
    int vk = n - rank(vert);

    return SectionKernels{sk, vk, sk == 0 && vk == 0};
}

namespace {

Mat<Fp> fiber_a_dual(const std::array<Mat<Fp>, 4>& ac, const std::array<uint64_t, 4>& x) {
    // n x (2n+2) fiber matrix of a^dual at the point x
    int w = ac[0].rows(), n = ac[0].cols();
    Mat<Fp> m(n, w);
    for (int al = 0; al < 4; ++al) {
        Fp xv(x[al]);
        if (xv.is_zero()) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < w; ++j) m(i, j) += ac[al](j, i) * xv;
    }
    return m;
}

std::array<uint64_t, 4> sample_point(Rng& rng) {
    for (;;) {
        std::array<uint64_t, 4> x{rng.fp().value(), rng.fp().value(), rng.fp().value(), rng.fp().value()};
        if (x[0] || x[1] || x[2] || x[3]) return x;
    }
}

} // namespace

SurjectivityReport barth_surjectivity(const Net& a, int samples, uint64_t seed) {
    if (!barth_rank(a).pass) throw RankPrecondition();
    MonadData md = monad_assemble(a);
    SurjectivityReport rep;
    rep.samples = samples;
    rep.seed = seed;
    std::array<Mat<Fp>, 4> ac;
    try {
        for (int al = 0; al < 4; ++al) ac[al] = to_fp(md.a_coeffs[al]);
    } catch (const std::domain_error&) {
        rep.verdict = Verdict::inconclusive; // denominator collision with p
        return rep;
    }
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        auto x = sample_point(rng);
        if (rank(fiber_a_dual(ac, x)) < a.n) {
            rep.verdict = Verdict::fail_at_point;
            rep.witness = x;
            return rep;
        }
    }
    rep.verdict = samples > 0 ? Verdict::pass : Verdict::inconclusive;
    return rep;
}

namespace {

// flatten after the optional base change, then reorder H-indices so that
// `first` indices come first
Mat<Rat> arranged_flatten(const Net& a, const Splitting& xi) {
    xi.validate();
    if (a.n != xi.n) throw BadSplitting();
    Net a2 = xi.base_change ? base_change(a, *xi.base_change) : a;
    Mat<Rat> big = flatten(a2);
    std::vector<int> order;
    order.reserve(4 * a.n);
    for (int i : xi.first)
        for (int al = 0; al < 4; ++al) order.push_back(4 * i + al);
    for (int i : xi.second)
        for (int al = 0; al < 4; ++al) order.push_back(4 * i + al);
    Mat<Rat> out(4 * a.n, 4 * a.n);
    for (int i = 0; i < 4 * a.n; ++i)
        for (int j = 0; j < 4 * a.n; ++j) out(i, j) = big(order[i], order[j]);
    return out;
}

MixedMap mixed_from_flatten(const Mat<Rat>& blk, int rows, int cols) {
    MixedMap c(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            c.at(i, j) = TwoFormDual::from_skew(blk.block(4 * i, 4 * j, 4, 4));
    return c;
}

} // namespace

BlockDecomposition block_decompose(const Net& a, const Splitting& xi) {
    Mat<Rat> big = arranged_flatten(a, xi);
    int p = xi.m + 1, q = xi.m;
    BlockDecomposition d{Net(p), MixedMap(p, q), Net(q)};
    d.a1 = unflatten_net(big.block(0, 0, 4 * p, 4 * p), p);
    d.a3 = unflatten_net(big.block(4 * p, 4 * p, 4 * q, 4 * q), q);
    d.a2 = mixed_from_flatten(big.block(0, 4 * p, 4 * p, 4 * q), p, q);
    return d;
}

Net assemble_from_blocks(const Net& b, const MixedMap& c, const Net& a3, const Splitting& xi) {
    xi.validate();
    int p = xi.m + 1, q = xi.m, n = xi.n;
    if (b.n != p || a3.n != q || c.rows != p || c.cols != q) throw BadSplitting();
    Mat<Rat> big(4 * n, 4 * n);
    Mat<Rat> cb = flatten(c);
    big.set_block(0, 0, flatten(b));
    big.set_block(0, 4 * p, cb);
    big.set_block(4 * p, 0, -cb.transpose());
    big.set_block(4 * p, 4 * p, flatten(a3));
    // undo the H reordering
    std::vector<int> order;
    for (int i : xi.first)
        for (int al = 0; al < 4; ++al) order.push_back(4 * i + al);
    for (int i : xi.second)
        for (int al = 0; al < 4; ++al) order.push_back(4 * i + al);
    Mat<Rat> back(4 * n, 4 * n);
    for (int i = 0; i < 4 * n; ++i)
        for (int j = 0; j < 4 * n; ++j) back(order[i], order[j]) = big(i, j);
    Net out = unflatten_net(back, n);
    if (xi.base_change) out = base_change(out, inverse(*xi.base_change));
    return out;
}

Net schur_residual(const Net& a, const Splitting& xi) {
    BlockDecomposition d = block_decompose(a, xi);
    Mat<Rat> b = flatten(d.a1);
    Mat<Rat> binv;
    try {
        binv = inverse(b);
    } catch (const SingularMatrix&) {
        throw SingularA1();
    }
    Mat<Rat> c = flatten(d.a2);
    Mat<Rat> res = flatten(d.a3) + c.transpose() * binv * c;
    return unflatten_net(res, xi.m);
}

Net pair_to_net(const Net& b, const MixedMap& c) {
    int m = c.cols;
    if (b.n != m + 1 || c.rows != m + 1) throw std::invalid_argument("pair_to_net: shape mismatch");
    Mat<Rat> bf = flatten(b);
    Mat<Rat> binv;
    try {
        binv = inverse(bf);
    } catch (const SingularMatrix&) {
        throw SingularB();
    }
    Mat<Rat> cf = flatten(c);
    Mat<Rat> cbc = cf.transpose() * binv * cf; // skew 4m x 4m
    SplitParts parts = split_skew(cbc, m);
    if (!parts.lambda_part.is_zero()) throw NotInS(parts.lambda_part);
    Net a3 = unflatten_net(-cbc, m);
    return assemble_from_blocks(b, c, a3, Splitting::xi0(m));
}

XmReport xm_membership(const Net& b, const MixedMap& c, int samples, uint64_t seed) {
    int m = c.cols;
    Mat<Rat> bf = flatten(b);
    Mat<Rat> binv;
    try {
        binv = inverse(bf);
    } catch (const SingularMatrix&) {
        throw SingularB();
    }
    Mat<Rat> cf = flatten(c);
    SplitParts parts = split_skew(cf.transpose() * binv * cf, m);

    XmReport rep;
    rep.samples = samples;
    rep.seed = seed;
    rep.i_pass = parts.lambda_part.is_zero();
    rep.lambda_part = parts.lambda_part;

    // fiberwise checks of (ii) and (iii) at sampled points of P^3 over F_p.
    // (ii): [B(.(x)x) | C(.(x)x)] must have full rank 2m+1;
    // (iii): rho fiber h -> [C(h(x)x)] must be injective modulo im B(.(x)x).
    Mat<Fp> bp, cp;
    try {
        bp = to_fp(bf);
        cp = to_fp(cf);
    } catch (const std::domain_error&) {
        return rep; // ii/iii stay inconclusive
    }
    Rng rng(seed);
    auto column_at = [](const Mat<Fp>& f, int nH, const std::array<uint64_t, 4>& x) {
        // matrix of h -> F(h (x) x), size rows x nH
        Mat<Fp> out(f.rows(), nH);
        for (int i = 0; i < f.rows(); ++i)
            for (int h = 0; h < nH; ++h) {
                Fp s(0);
                for (int al = 0; al < 4; ++al) s += f(i, 4 * h + al) * Fp(x[al]);
                out(i, h) = s;
            }
        return out;
    };
    bool ii_ok = true, iii_ok = true;
    for (int s = 0; s < samples && (ii_ok || iii_ok); ++s) {
        auto x = sample_point(rng);
        Mat<Fp> bx = column_at(bp, m + 1, x);
        Mat<Fp> cx = column_at(cp, m, x);
        Mat<Fp> joint(4 * (m + 1), 2 * m + 1);
        joint.set_block(0, 0, bx);
        joint.set_block(0, m + 1, cx);
        int r = rank(joint);
        if (ii_ok && r < 2 * m + 1) {
            rep.ii = Verdict::fail_at_point;
            rep.witness_ii = x;
            ii_ok = false;
        }
        if (iii_ok && (r - rank(bx)) < m) {
            rep.iii = Verdict::fail_at_point;
            rep.witness_iii = x;
            iii_ok = false;
        }
    }
    if (ii_ok) rep.ii = samples > 0 ? Verdict::pass : Verdict::inconclusive;
    if (iii_ok) rep.iii = samples > 0 ? Verdict::pass : Verdict::inconclusive;
    if (m == 0) rep.iii = Verdict::pass; // vacuous
    return rep;
}

LineP3 LineP3::from_points(const std::vector<Rat>& u, const std::vector<Rat>& v) {
    LineP3 l;
    l.span = Mat<Rat>(4, 2);
    for (int i = 0; i < 4; ++i) {
        l.span(i, 0) = u[i];
        l.span(i, 1) = v[i];
    }
    for (int k = 0; k < 6; ++k) {
        int i = kWedgeBasis[k][0], j = kWedgeBasis[k][1];
        l.pluecker[k] = u[i] * v[j] - u[j] * v[i];
    }
    l.validate();
    return l;
}

LineP3 LineP3::from_pluecker(const TwoForm& pi) {
    if (pi.is_zero()) throw ZeroForm();
    // spanning vectors: two independent columns of the skew view
    Mat<Rat> m = pi.skew();
    std::vector<int> cols;
    for (int c = 0; c < 4 && static_cast<int>(cols.size()) < 2; ++c) {
        std::vector<int> trial = cols;
        trial.push_back(c);
        if (rank(m.columns(trial)) == static_cast<int>(trial.size())) cols = trial;
    }
    if (cols.size() != 2) throw std::invalid_argument("LineP3: pluecker form not decomposable");
    std::vector<Rat> u(4), v(4);
    for (int i = 0; i < 4; ++i) {
        u[i] = m(i, cols[0]);
        v[i] = m(i, cols[1]);
    }
    LineP3 l = from_points(u, v);
    // from_points recomputes the bivector; proportional to pi by construction
    return l;
}

void LineP3::validate() const {
    if (!wedge_pair(pluecker, pluecker).is_zero()) throw std::invalid_argument("LineP3: bivector not decomposable");
    if (pluecker.is_zero() || rank(span) != 2) throw std::invalid_argument("LineP3: degenerate span");
}

int jump_order(const Net& a, const LineP3& l) {
    if (!barth_rank(a).pass) throw RankPrecondition();
    Mat<Rat> q(a.n, a.n);
    for (int k = 0; k < 6; ++k) {
        if (l.pluecker[k].is_zero()) continue;
        q = q + a.comp[k].mat().scaled(l.pluecker[k]);
    }
    return a.n - rank(q);
}

namespace {

struct RestrictedMonad {
    // a^dual q restricted to the line as a pencil  s*Pu + t*Pv  (n x (2n+2)),
    // and the a-map pencil  s*Au + t*Av  ((2n+2) x n)
    Mat<Rat> pu, pv, au, av;
    int n = 0;
};

RestrictedMonad restrict_monad(const MonadData& md, const LineP3& l) {
    RestrictedMonad r;
    r.n = md.n;
    int w = 2 * md.n + 2;
    r.pu = Mat<Rat>(md.n, w);
    r.pv = Mat<Rat>(md.n, w);
    r.au = Mat<Rat>(w, md.n);
    r.av = Mat<Rat>(w, md.n);
    for (int al = 0; al < 4; ++al) {
        Mat<Rat> p = md.a_coeffs[al].transpose() * md.q;
        if (!l.span(al, 0).is_zero()) {
            r.pu = r.pu + p.scaled(l.span(al, 0));
            r.au = r.au + md.a_coeffs[al].scaled(l.span(al, 0));
        }
        if (!l.span(al, 1).is_zero()) {
            r.pv = r.pv + p.scaled(l.span(al, 1));
            r.av = r.av + md.a_coeffs[al].scaled(l.span(al, 1));
        }
    }
    return r;
}

void check_a_fiberwise_injective(const RestrictedMonad& r, int k) {
    // k+2 sample parameters plus the point at infinity
    for (int t = 0; t <= k + 1; ++t) {
        Mat<Rat> ax = r.au + r.av.scaled(Rat(t));
        if (rank(ax) != r.n) throw DegenerateRestriction();
    }
    if (rank(r.av) != r.n) throw DegenerateRestriction();
}

// kernel of the section map W (x) S^k -> H^dual (x) S^{k+1} on the line
Mat<Rat> section_kernel_on_line(const RestrictedMonad& r, int k) {
    int w = r.pu.cols(), n = r.n;
    Mat<Rat> m(n * (k + 2), w * (k + 1));
    for (int d = 0; d <= k; ++d) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < w; ++j) {
                m(n * d + i, w * d + j) += r.pu(i, j);
                m(n * (d + 1) + i, w * d + j) += r.pv(i, j);
            }
    }
    return kernel(m);
}

} // namespace

int restriction_h0(const Net& a, const LineP3& l, int k) {
    if (k < 0) throw std::invalid_argument("restriction_h0: k must be >= 0");
    MonadData md = monad_assemble(a);
    RestrictedMonad r = restrict_monad(md, l);
    check_a_fiberwise_injective(r, k);
    Mat<Rat> ker = section_kernel_on_line(r, k);
    return ker.cols() - a.n * k;
}

std::optional<int> jump_oracle(const Net& a, const LineP3& l) {
    MonadData md = monad_assemble(a);
    RestrictedMonad r = restrict_monad(md, l);
    try {
        check_a_fiberwise_injective(r, 1);
    } catch (const DegenerateRestriction&) {
        return std::nullopt;
    }
    Mat<Rat> v0 = section_kernel_on_line(r, 0); // w x dim
    int h0 = v0.cols();
    if (h0 > 2) return h0 - 1; // d >= 2 is visible at k = 0
    if (h0 < 2) return std::nullopt; // not locally free along l in the expected way

    // d in {0,1}: compare h^0(E|l(1)) with the image of multiplication by
    // linear forms; codimension 1 means d = 1
    int w = 2 * a.n + 2;
    Mat<Rat> v1 = section_kernel_on_line(r, 1);
    int h0_1 = v1.cols() - a.n;

    // generators of V0 * {s,t} + a(H) inside W (x) S^1 = (w_s | w_t)
    Mat<Rat> gens(2 * w, 2 * v0.cols() + a.n);
    for (int c = 0; c < v0.cols(); ++c)
        for (int i = 0; i < w; ++i) {
            gens(i, 2 * c) = v0(i, c);
            gens(w + i, 2 * c + 1) = v0(i, c);
        }
    for (int h = 0; h < a.n; ++h)
        for (int i = 0; i < w; ++i) {
            gens(i, 2 * v0.cols() + h) = r.au(i, h);
            gens(w + i, 2 * v0.cols() + h) = r.av(i, h);
        }
    Mat<Rat> ah = gens.block(0, 2 * v0.cols(), 2 * w, a.n);
    int image_dim = rank(gens) - rank(ah);
    return image_dim == h0_1 ? 0 : 1;
}

Mat<Rat> random_gl(int n, Rng& rng, long long bound) {
    for (;;) {
        Mat<Rat> g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = rng.rat_in(-bound, bound);
        if (rank(g) == n) return g;
    }
}

Net base_change(const Net& a, const Mat<Rat>& g) {
    if (g.rows() != a.n || g.cols() != a.n) throw std::invalid_argument("base_change: shape mismatch");
    Net out(a.n);
    for (int k = 0; k < 6; ++k)
        out.comp[k] = QuadraticFormMatrix(g.transpose() * a.comp[k].mat() * g);
    return out;
}

} // namespace qnl
