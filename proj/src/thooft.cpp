#include "qnl/thooft.hpp"

namespace qnl {

Net build_thooft(const THooftDatum& d) {
    Net a(d.n);
    for (const auto& t : d.terms) {
        if (t.w.is_zero() || !is_decomposable(t.w)) throw NotDecomposable();
        if (static_cast<int>(t.h.size()) != d.n) throw std::invalid_argument("build_thooft: bad h length");
        for (int k = 0; k < 6; ++k) {
            if (t.w[k].is_zero()) continue;
            QuadraticFormMatrix q = a.comp[k];
            for (int i = 0; i < d.n; ++i)
                for (int j = i; j < d.n; ++j)
                    q.set(i, j, q(i, j) + t.h[i] * t.h[j] * t.w[k]);
            a.comp[k] = q;
        }
    }
    return a;
}

bool is_decomposable(const TwoFormDual& w) { return wedge_pair_dual(w, w).is_zero(); }

LineP3 line_of(const TwoFormDual& w) {
    if (w.is_zero()) throw ZeroForm();
    if (!is_decomposable(w)) throw NotDecomposable();
    Mat<Rat> ker = kernel(w.skew());
    if (ker.cols() != 2) throw NotDecomposable();
    std::vector<Rat> u(4), v(4);
    for (int i = 0; i < 4; ++i) {
        u[i] = ker(i, 0);
        v[i] = ker(i, 1);
    }
    return LineP3::from_points(u, v);
}

bool lines_disjoint(const LineP3& l1, const LineP3& l2) {
    return !wedge_pair(l1.pluecker, l2.pluecker).is_zero();
}

namespace {

// integer square root test for a nonnegative rational
bool rat_sqrt(const Rat& x, Rat& out) {
    const mpq_class& q = x.raw();
    if (q < 0) return false;
    mpz_class sn, sd;
    if (mpz_root(sn.get_mpz_t(), q.get_num().get_mpz_t(), 2) == 0) return false;
    if (mpz_root(sd.get_mpz_t(), q.get_den().get_mpz_t(), 2) == 0) return false;
    out = Rat(mpq_class(sn) / mpq_class(sd));
    return true;
}

} // namespace

LPairResult l_pair(const TwoForm& a, const TwoFormDual& b) {
    // a must be invertible to locate <a^-1>; b only has to be a nonzero
    // point of the pencil (a decomposable b is itself one of the roots)
    Mat<Rat> am = a.skew();
    if (rank(am) != 4 || b.is_zero()) throw SingularInput();
    TwoFormDual ainv = TwoFormDual::from_skew(inverse(am));

    // proportionality of <a^-1> and <b>
    {
        Mat<Rat> two(6, 2);
        for (int k = 0; k < 6; ++k) {
            two(k, 0) = ainv[k];
            two(k, 1) = b[k];
        }
        if (rank(two) < 2) throw SamePoint();
    }

    LPairDegenerate deg;
    deg.c0 = wedge_pair_dual(ainv, ainv);
    deg.c1 = wedge_pair_dual(ainv, b);
    deg.c2 = wedge_pair_dual(b, b);

    // lambda^2 c0 + 2 lambda mu c1 + mu^2 c2 = 0 on the pencil lambda ainv + mu b
    auto line_at = [&](const Rat& lam, const Rat& mu) {
        TwoFormDual w = ainv.scaled(lam) + b.scaled(mu);
        return line_of(w);
    };
    if (deg.c0.is_zero() && deg.c2.is_zero()) {
        if (deg.c1.is_zero()) { deg.double_root = true; return deg; } // whole pencil on G
        return std::make_pair(line_at(Rat(1), Rat(0)), line_at(Rat(0), Rat(1)));
    }
    if (deg.c0.is_zero()) {
        // mu (2 lambda c1 + mu c2) = 0
        if (deg.c1.is_zero()) { deg.double_root = true; return deg; }
        return std::make_pair(line_at(Rat(1), Rat(0)), line_at(deg.c2, Rat(-2) * deg.c1));
    }
    Rat disc = deg.c1 * deg.c1 - deg.c0 * deg.c2;
    if (disc.is_zero()) {
        deg.double_root = true;
        return deg;
    }
    Rat sq;
    if (!rat_sqrt(disc, sq)) {
        deg.irrational = true;
        return deg;
    }
    // lambda / mu = (-c1 +- sqrt(disc)) / c0
    return std::make_pair(line_at(-deg.c1 + sq, deg.c0), line_at(-deg.c1 - sq, deg.c0));
}

Fixtures fixtures() {
    Fixtures f{Net(3), Net(5)};
    auto set_diag = [](Net& a, int i, int k, long v) {
        QuadraticFormMatrix q = a.comp[k];
        q.set(i, i, q(i, i) + Rat(v));
        a.comp[k] = q;
    };
    // h1^2 (x) (e1^e2 + e3^e4) + h2^2 (x) (e1^e3 + e4^e2)
    set_diag(f.a1, 0, wedge_index(0, 1), 1);
    set_diag(f.a1, 0, wedge_index(2, 3), 1);
    set_diag(f.a1, 1, wedge_index(0, 2), 1);
    set_diag(f.a1, 1, wedge_index(1, 3), -1);
    // same plus h3^2 (x) (e1^e4 + e2^e3)
    set_diag(f.a2, 0, wedge_index(0, 1), 1);
    set_diag(f.a2, 0, wedge_index(2, 3), 1);
    set_diag(f.a2, 1, wedge_index(0, 2), 1);
    set_diag(f.a2, 1, wedge_index(1, 3), -1);
    set_diag(f.a2, 2, wedge_index(0, 3), 1);
    set_diag(f.a2, 2, wedge_index(1, 2), 1);
    return f;
}

THooftDatum random_thooft(int m, Rng& rng, long long coord_bound) {
    int n = 2 * m + 1, terms = 2 * m + 2;
    for (int attempt = 0; attempt < 32; ++attempt) {
        THooftDatum d;
        d.n = n;
        std::vector<LineP3> lines;
        bool ok = true;
        for (int t = 0; t < terms && ok; ++t) {
            bool placed = false;
            for (int retry = 0; retry < 32 && !placed; ++retry) {
                std::vector<Rat> u(4), v(4);
                for (int i = 0; i < 4; ++i) {
                    u[i] = rng.rat_in(-coord_bound, coord_bound);
                    v[i] = rng.rat_in(-coord_bound, coord_bound);
                }
                TwoFormDual w;
                bool zero = true;
                for (int k = 0; k < 6; ++k) {
                    int i = kWedgeBasis[k][0], j = kWedgeBasis[k][1];
                    w[k] = u[i] * v[j] - u[j] * v[i];
                    zero = zero && w[k].is_zero();
                }
                if (zero) continue;
                LineP3 l = line_of(w);
                bool disjoint = true;
                for (const auto& prev : lines) disjoint = disjoint && lines_disjoint(prev, l);
                if (!disjoint) continue;
                THooftDatum::Term term;
                term.w = w;
                term.h.resize(n);
                for (int i = 0; i < n; ++i) term.h[i] = rng.rat_in(-coord_bound, coord_bound);
                d.terms.push_back(std::move(term));
                lines.push_back(std::move(l));
                placed = true;
            }
            ok = placed;
        }
        if (!ok) continue;
        if (barth_rank(build_thooft(d)).pass) return d;
    }
    throw std::runtime_error("random_thooft: retry cap exhausted");
}

} // namespace qnl
