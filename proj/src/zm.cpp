#include "qnl/zm.hpp"

namespace qnl {

Mat<Rat> theta(const ZPoint& z) {
    Mat<Rat> phi = flatten(z.phi);
    return phi.transpose() * flatten(z.d) * phi;
}

ZhatReport zhat_membership(const ZPoint& z) {
    SplitParts parts = split_skew(theta(z), z.phi.m);
    ZhatReport rep;
    rep.lambda_part = parts.lambda_part;
    rep.pass = parts.lambda_part.is_zero();
    rep.d_invertible = rank(flatten(z.d)) == 4 * z.d.m;
    return rep;
}

namespace {

// coordinate helpers over the canonical order (12,13,14,23,24,34)
template <class W>
W form(std::initializer_list<long> coords) {
    W w;
    int k = 0;
    for (long c : coords) w[k++] = Rat(c);
    return w;
}

TwoForm d_prime() { return form<TwoForm>({-1, 0, 0, 0, 0, 1}); }
TwoForm d_second() { return form<TwoForm>({0, 1, 0, 0, 1, 0}); }

TwoFormDual phi11(const Rat& n) {
    TwoFormDual w;
    w[wedge_index(0, 1)] = Rat(-1);
    w[wedge_index(2, 3)] = n;
    return w;
}
TwoFormDual phi22(const Rat& n) {
    TwoFormDual w;
    w[wedge_index(0, 2)] = Rat(1);
    w[wedge_index(1, 3)] = n;
    return w;
}
TwoFormDual phi12(const Rat& f, const Rat& g) {
    TwoFormDual w;
    w[wedge_index(0, 3)] = f;
    w[wedge_index(1, 2)] = g;
    return w;
}
TwoFormDual phi21(const Rat& a, const Rat& d, const Rat& f, const Rat& g) {
    TwoFormDual w;
    w[wedge_index(0, 2)] = a;
    w[wedge_index(0, 3)] = f;
    w[wedge_index(1, 2)] = -g;
    w[wedge_index(1, 3)] = d;
    return w;
}

TwoFormDual dual_from(const std::array<Rat, 6>& c) {
    TwoFormDual w;
    w.c = c;
    return w;
}
TwoForm primal_from(const std::array<Rat, 6>& c) {
    TwoForm w;
    w.c = c;
    return w;
}

void set_dual_block(DualNet& d, int i, int j, const TwoForm& w) {
    for (int k = 0; k < 6; ++k) {
        QuadraticFormMatrix q = d.comp[k];
        q.set(i, j, q(i, j) + w[k]);
        d.comp[k] = q;
    }
}

} // namespace

FixtureParams FixtureParams::base() {
    FixtureParams fp;
    fp.N = Rat(101);
    fp.a = Rat(4);
    fp.d = Rat(6);
    fp.f = Rat(2);
    fp.g = Rat(5);
    fp.p = {Rat(-9), Rat(-2), Rat(-4), Rat(6), Rat(-3), Rat(-7)};
    fp.q = {Rat(-4), Rat(-4), Rat(-2), Rat(3), Rat(-7), Rat(8)};
    fp.lambda = Rat(-2);
    return fp;
}

FixtureParams FixtureParams::even_default() {
    FixtureParams fp = base();
    // membership family: r13 = r24 = s13 = s24 = 0, r12 + r34 = s12 + s34 = 0,
    // r23 = s23, r14 = s14 = (f/g) s23
    Rat t(5);
    Rat fg = fp.f / fp.g;
    fp.r = {Rat(3), Rat(0), fg * t, t, Rat(0), Rat(-3)};
    fp.s = {Rat(-8), Rat(0), fg * t, t, Rat(0), Rat(8)};
    fp.check_even_relation();
    return fp;
}

FixtureParams FixtureParams::recorded_even_sample() {
    FixtureParams fp = base();
    fp.r = {Rat(3), Rat(7), Rat(-2), Rat(4), Rat(-6), Rat(-8)};
    fp.s = {Rat(-8), Rat(-3), Rat(8), Rat(-2), Rat(0), Rat(-5)};
    fp.check_even_relation();
    return fp;
}

void FixtureParams::check_even_relation() const {
    // r_i3 + r_i4 = s_i3 + s_i4 for i = 1, 2
    auto at = [](const std::array<Rat, 6>& c, int i, int j) { return c[wedge_index(i, j)]; };
    if (at(r, 0, 2) + at(r, 0, 3) != at(s, 0, 2) + at(s, 0, 3) ||
        at(r, 1, 2) + at(r, 1, 3) != at(s, 1, 2) + at(s, 1, 3))
        throw BadShape();
}

TwoForm FixtureParams::alpha0() const { return primal_from(p); }
TwoFormDual FixtureParams::theta0() const { return dual_from(q); }

ZPoint fixture_delta(int m_minus_1, const FixtureParams& fp) {
    ZPoint z{DualNet(m_minus_1), PhiMap(m_minus_1)};
    TwoFormDual p11 = phi11(fp.N), p22 = phi22(fp.N);
    TwoFormDual p12 = phi12(fp.f, fp.g), p21 = phi21(fp.a, fp.d, fp.f, fp.g);

    auto place_d2 = [&](int at) {
        set_dual_block(z.d, at, at, d_prime());
        set_dual_block(z.d, at + 1, at + 1, d_second());
    };
    auto place_phi2 = [&](int at) {
        z.phi.at(at, at) = p11;
        z.phi.at(at, at + 1) = p12;
        z.phi.at(at + 1, at) = p21;
        z.phi.at(at + 1, at + 1) = p22;
    };

    if (m_minus_1 >= 2 && m_minus_1 % 2 == 0) {
        for (int k = 0; k < m_minus_1 / 2; ++k) {
            place_d2(2 * k);
            place_phi2(2 * k);
        }
        return z;
    }
    if (m_minus_1 >= 3 && m_minus_1 % 2 == 1) {
        fp.check_even_relation();
        // D3 = D2 (+) D', phi3 with the lambda couplings and r/s corners
        place_d2(0);
        set_dual_block(z.d, 2, 2, d_prime());
        z.phi.at(0, 0) = p11;
        z.phi.at(0, 1) = p12;
        z.phi.at(0, 2) = dual_from(fp.r);
        z.phi.at(1, 0) = p21;
        z.phi.at(1, 1) = p22;
        z.phi.at(1, 2) = p21.scaled(fp.lambda);
        z.phi.at(2, 0) = dual_from(fp.s);
        z.phi.at(2, 1) = p12.scaled(fp.lambda);
        z.phi.at(2, 2) = p11;
        for (int k = 0; k < (m_minus_1 - 3) / 2; ++k) {
            place_d2(3 + 2 * k);
            place_phi2(3 + 2 * k);
        }
        return z;
    }
    throw BadShape();
}

ZPoint fixture_delta_modified(int p, const Rat& c, const Rat& eps,
                              const std::vector<Rat>& f, const std::vector<Rat>& g,
                              const FixtureParams& fp) {
    if (static_cast<int>(f.size()) != p || static_cast<int>(g.size()) != p) throw BadShape();
    int m1 = 2 * p;
    ZPoint z{DualNet(m1), PhiMap(m1)};
    for (int k = 0; k < p; ++k) {
        TwoForm dp = d_prime();
        dp[wedge_index(0, 3)] = c * g[k];
        dp[wedge_index(1, 2)] = c * f[k];
        set_dual_block(z.d, 2 * k, 2 * k, dp);
        set_dual_block(z.d, 2 * k + 1, 2 * k + 1, d_second());
        z.phi.at(2 * k, 2 * k) = phi11(fp.N);
        z.phi.at(2 * k, 2 * k + 1) = phi12(eps * f[k], eps * g[k]);
        z.phi.at(2 * k + 1, 2 * k) = phi21(eps * fp.a, eps * fp.d, eps * f[k], eps * g[k]);
        z.phi.at(2 * k + 1, 2 * k + 1) = phi22(fp.N);
    }
    return z;
}

namespace {

// variable coordinate order inside one 2-form block: (12, 34, 13, 14, 23, 24)
constexpr int kVarOrder[6] = {0, 5, 1, 2, 3, 4};

// rows of the symmetric part of a 4x4 block, monomial order
// e1^2, e1e2, e1e3, e1e4, e2^2, e2e3, e2e4, e3^2, e3e4, e4^2
void write_sym_rows(const Mat<Rat>& t, Mat<Rat>& out, int row0, int col) {
    int r = row0;
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) {
            out(r, col) = (a == b) ? t(a, a) : t(a, b) + t(b, a);
            ++r;
        }
}

} // namespace

Mat<Rat> fibre_system(const TwoFormDual& theta0, const TwoForm& alpha0, const ZPoint& z) {
    int m1 = z.phi.m;
    Mat<Rat> phiT = flatten(z.phi).transpose();
    Mat<Rat> dmat = flatten(z.d);
    Mat<Rat> phiTD = phiT * dmat;
    Mat<Rat> pq = alpha0.skew() * theta0.skew();

    Mat<Rat> sys(10 * m1, 12 * m1);
    // chi columns: for H-coordinate j and coordinate kk (variable order),
    // column index 12 j + kk
    for (int j = 0; j < m1; ++j)
        for (int kk = 0; kk < 6; ++kk) {
            TwoFormDual e;
            e[kVarOrder[kk]] = Rat(1);
            Mat<Rat> es = e.skew();
            // composite block for row-coordinate i: (phiT D)_{i j} * skew(e)
            for (int i = 0; i < m1; ++i) {
                Mat<Rat> t = phiTD.block(4 * i, 4 * j, 4, 4) * es;
                write_sym_rows(t, sys, 10 * i, 12 * j + kk);
            }
        }
    // psi columns: coordinate i gets column 12 i + 6 + kk; contributes only to
    // its own row block via skew(psi_i)^T * alpha0 * theta0
    for (int i = 0; i < m1; ++i)
        for (int kk = 0; kk < 6; ++kk) {
            TwoFormDual e;
            e[kVarOrder[kk]] = Rat(1);
            Mat<Rat> t = e.skew().transpose() * pq;
            write_sym_rows(t, sys, 10 * i, 12 * i + 6 + kk);
        }
    return sys;
}

namespace {

// printed 10 x 6 blocks of the 30 x 36 matrix
constexpr long kM11[10][6] = {
    {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 100, 0, 0, 0}, {0, 0, 0, 100, 0, 0},
    {0, 0, 0, 0, 100, 0}, {0, 0, 0, 0, 0, 100}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}};
constexpr long kM12[10][6] = {
    {2, 0, 0, 0, 0, 0}, {0, 2, 0, 0, 0, 0}, {0, 0, 0, -5, -2, 0}, {0, 0, 2, 2, 0, -2},
    {0, 0, 5, 0, -2, -5}, {0, 0, 0, 5, 2, 0}, {5, 0, 0, 0, 0, 0}, {0, -5, 0, 0, 0, 0},
    {2, 0, 0, 0, 0, 0}, {0, -2, 0, 0, 0, 0}};
constexpr long kM13[10][6] = {
    {0, 0, -6, -4, -2, -7}, {0, 0, 6, -4, -2, 7}, {-7, -7, -5, 0, 0, 0}, {2, 2, 0, -5, 0, 0},
    {-4, -4, 0, 0, -5, 0}, {6, 6, 0, 0, 0, -5}, {0, 0, 0, 0, -12, -8}, {0, 0, -8, 0, 14, 0},
    {0, 0, -4, -14, 0, 0}, {0, 0, 0, 12, 0, -4}};
constexpr long kM21[10][6] = {
    {0, 0, 0, -5, 2, 0}, {0, 0, 0, -5, 2, 0}, {0, 0, 0, 0, 0, 0}, {-2, -2, 0, 0, 0, 0},
    {-5, -5, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -5}, {0, 0, -5, 0, 0, 0},
    {0, 0, 2, 0, 0, 0}, {0, 0, 0, 0, 0, 2}};
constexpr long kM22[10][6] = {
    {100, 0, 0, 0, 0, 0}, {0, 100, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 100, 0, 0},
    {0, 0, 0, 0, -100, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}};
constexpr long kM23[10][6] = {
    {0, 0, 0, 10, -4, 0}, {0, 0, 0, 10, -4, 0}, {0, 0, 0, 0, 0, 0}, {4, 4, 0, 0, 0, 0},
    {10, 10, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 10}, {0, 0, 10, 0, 0, 0},
    {0, 0, -4, 0, 0, 0}, {0, 0, 0, 0, 0, -4}};
constexpr long kM31[10][6] = {
    {0, 0, 0, 2, 8, 3}, {0, 0, 0, 2, 8, -3}, {3, 3, -13, 0, 0, 0}, {-8, -8, 0, -13, 0, 0},
    {2, 2, 0, 0, -13, 0}, {0, 0, 0, 0, 0, -13}, {0, 0, 0, 0, 0, 4}, {0, 0, 4, 0, -6, 0},
    {0, 0, 16, 0, -6, 0}, {0, 0, 0, 0, 0, 16}};
constexpr long kM32[10][6] = {
    {-4, 0, 0, 0, 0, 0}, {0, -4, 0, 0, 0, 0}, {0, 0, 0, 10, 4, 0}, {0, 0, -4, -4, 0, 4},
    {0, 0, -10, 0, 4, 10}, {0, 0, 0, -10, -4, 0}, {-10, 0, 0, 0, 0, 0}, {0, 10, 0, 0, 0, 0},
    {-4, 0, 0, 0, 0, 0}, {0, -4, 0, 0, 0, 0}};
constexpr long kMpsi[10][6] = {
    {-20, 0, 20, 66, -5, -47}, {0, 3, 40, -38, -37, -57}, {57, -47, -82, -38, -22, 0},
    {37, 5, 7, -79, 0, -22}, {-38, 66, -28, 0, -62, -38}, {40, -20, 0, -28, 7, -59},
    {-56, 0, 0, 0, 40, 132}, {0, -76, -76, 0, -114, 0}, {44, 0, -10, -94, 0, 0},
    {0, -14, 0, 80, 0, -74}};

Mat<Rat> block10x6(const long (&data)[10][6]) {
    Mat<Rat> m(10, 6);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 6; ++j) m(i, j) = Rat(data[i][j]);
    return m;
}

} // namespace

Mat<Rat> printed_mtilde() {
    Mat<Rat> m(30, 36);
    m.set_block(0, 0, block10x6(kM11));
    m.set_block(0, 6, block10x6(kM12));
    m.set_block(0, 12, block10x6(kM13));
    m.set_block(0, 18, block10x6(kMpsi));
    m.set_block(10, 0, block10x6(kM21));
    m.set_block(10, 6, block10x6(kM22));
    m.set_block(10, 12, block10x6(kM23));
    m.set_block(10, 24, block10x6(kMpsi));
    m.set_block(20, 0, block10x6(kM31));
    m.set_block(20, 6, block10x6(kM32));
    m.set_block(20, 12, block10x6(kM11)); // M33 repeats the M11 block
    m.set_block(20, 30, block10x6(kMpsi));
    return m;
}

Mat<Rat> printed_m() {
    Mat<Rat> m(20, 24);
    m.set_block(0, 0, block10x6(kM11));
    m.set_block(0, 6, block10x6(kM12));
    m.set_block(0, 12, block10x6(kMpsi));
    m.set_block(10, 0, block10x6(kM21));
    m.set_block(10, 6, block10x6(kM22));
    m.set_block(10, 18, block10x6(kMpsi));
    return m;
}

std::vector<int> match_rows_up_to_scale(const Mat<Rat>& printed, const Mat<Rat>& assembled) {
    std::vector<int> match(printed.rows(), -1);
    for (int i = 0; i < printed.rows(); ++i) {
        for (int j = 0; j < assembled.rows(); ++j) {
            // proportional rows (nonzero scale), zero rows match zero rows
            Rat scale;
            bool ok = true, seen = false;
            for (int c = 0; c < printed.cols() && ok; ++c) {
                const Rat& pv = printed(i, c);
                const Rat& av = assembled(j, c);
                if (av.is_zero()) {
                    ok = pv.is_zero();
                } else if (!seen) {
                    scale = pv / av;
                    seen = true;
                    ok = !scale.is_zero() || pv.is_zero();
                } else {
                    ok = (pv == scale * av);
                }
            }
            if (ok && (seen || printed.block(i, 0, 1, printed.cols()).is_zero())) {
                match[i] = j;
                break;
            }
        }
    }
    return match;
}

Mat<Rat> sharp_d_inverse(const DualNet& d) {
    Mat<Rat> df = flatten(d);
    Mat<Rat> inv;
    try {
        inv = inverse(df);
    } catch (const SingularMatrix&) {
        throw SingularD();
    }
    Net dinv = unflatten_net(inv, d.m);
    Mat<Rat> out(6 * d.m, d.m);
    for (int j = 0; j < d.m; ++j)
        for (int i = 0; i < d.m; ++i)
            for (int k = 0; k < 6; ++k) out(6 * i + k, j) = dinv.comp[k](i, j);
    return out;
}

Mat<Rat> sharp_phi(const PhiMap& phi, const std::vector<int>& cols) {
    Mat<Rat> out(6 * phi.m, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (int i = 0; i < phi.m; ++i)
            for (int k = 0; k < 6; ++k) out(6 * i + k, static_cast<int>(c)) = phi.at(i, cols[c])[k];
    return out;
}

Mat<Rat> fiber_subspace(const DualNet& d, const PhiMap& phi, const std::vector<int>& j_cols) {
    int m = d.m, m1 = static_cast<int>(j_cols.size());
    Mat<Rat> df = flatten(d);
    if (rank(df) < 4 * m) throw SingularD();

    // (phi o j)^dual o D, a 4(m-1) x 4m matrix
    Mat<Rat> phiF = flatten(phi);
    Mat<Rat> jmat(4 * m, 4 * m1);
    for (int c = 0; c < m1; ++c)
        for (int al = 0; al < 4; ++al) jmat(4 * j_cols[c] + al, 4 * c + al) = Rat(1);
    Mat<Rat> lead = jmat.transpose() * phiF.transpose() * df;

    // beta as a matrix on the 6m coordinates of eta
    Mat<Rat> beta(10 * m1, 6 * m);
    for (int i0 = 0; i0 < m; ++i0)
        for (int k = 0; k < 6; ++k) {
            TwoFormDual e;
            e[k] = Rat(1);
            Mat<Rat> es = e.skew();
            for (int i = 0; i < m1; ++i) {
                Mat<Rat> t = lead.block(4 * i, 4 * i0, 4, 4) * es;
                write_sym_rows(t, beta, 10 * i, 6 * i0 + k);
            }
        }
    return kernel(beta);
}

} // namespace qnl
