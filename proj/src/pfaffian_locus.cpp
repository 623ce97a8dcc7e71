#include "qnl/pfaffian_locus.hpp"

#include <algorithm>

namespace qnl {

void QuarticForm::add(std::array<int, 4> mono, const Rat& c) {
    if (c.is_zero()) return;
    std::sort(mono.begin(), mono.end());
    auto it = c_.find(mono);
    if (it == c_.end()) {
        c_[mono] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

bool QuarticForm::is_zero() const { return c_.empty(); }

Rat QuarticForm::eval(const std::vector<Rat>& x) const {
    Rat s;
    for (const auto& [mono, c] : c_) s += c * x[mono[0]] * x[mono[1]] * x[mono[2]] * x[mono[3]];
    return s;
}

QuarticForm QuarticForm::operator+(const QuarticForm& o) const {
    QuarticForm r = *this;
    for (const auto& [mono, c] : o.c_) r.add(mono, c);
    return r;
}

QuarticForm QuarticForm::operator-(const QuarticForm& o) const {
    QuarticForm r = *this;
    for (const auto& [mono, c] : o.c_) r.add(mono, -c);
    return r;
}

QuarticForm QuarticForm::product(const QuadraticFormMatrix& a, const QuadraticFormMatrix& b) {
    int n = a.dim();
    QuarticForm q(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& ac = a(i, j);
            if (ac.is_zero()) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Rat c = ac * b(k, l);
                    if (!c.is_zero()) q.add({i, j, k, l}, c);
                }
        }
    return q;
}

Net QuadBlockSkew::as_net() const {
    Net a(mp1);
    a.comp = blocks;
    return a;
}

Mat<Rat> QuadBlockSkew::evaluate(const std::vector<Rat>& x) const {
    Mat<Rat> m(4, 4);
    for (int k = 0; k < 6; ++k) {
        Rat v = blocks[k].eval(x);
        m(kWedgeBasis[k][0], kWedgeBasis[k][1]) = v;
        m(kWedgeBasis[k][1], kWedgeBasis[k][0]) = -v;
    }
    return m;
}

QuarticForm pfaffian_quartic(const QuadBlockSkew& b) {
    return QuarticForm::product(b.at(0, 1), b.at(2, 3)) -
           QuarticForm::product(b.at(0, 2), b.at(1, 3)) +
           QuarticForm::product(b.at(0, 3), b.at(1, 2));
}

bool m_locus_member(const QuadBlockSkew& b) { return pfaffian_quartic(b).is_zero(); }

QuadBlockSkew structured_family(const QuadraticFormMatrix& a12, const QuadraticFormMatrix& a13,
                                const QuadraticFormMatrix& a14, const Rat& lambda, const Rat& gamma) {
    QuadBlockSkew b(a12.dim());
    b.blocks[wedge_index(0, 1)] = a12;
    b.blocks[wedge_index(0, 2)] = a13;
    b.blocks[wedge_index(0, 3)] = a14;
    b.blocks[wedge_index(1, 2)] = QuadraticFormMatrix(a13.mat().scaled(lambda));
    b.blocks[wedge_index(1, 3)] = QuadraticFormMatrix(a12.mat().scaled(gamma) + a14.mat().scaled(lambda));
    b.blocks[wedge_index(2, 3)] = QuadraticFormMatrix(a13.mat().scaled(gamma));
    return b;
}

DegeneracyReport degeneracy_check(const QuadBlockSkew& b) {
    DegeneracyReport rep;
    rep.member = m_locus_member(b);
    rep.big_rank = rank(flatten(b.as_net()));
    rep.degenerate = rep.big_rank < 4 * b.mp1;
    return rep;
}

QuadraticFormMatrix random_quadric(int dim, Rng& rng, long long bound) {
    QuadraticFormMatrix q(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) q.set(i, j, rng.rat_in(-bound, bound));
    return q;
}

QuadBlockSkew random_block_skew(int mp1, Rng& rng, long long bound) {
    QuadBlockSkew b(mp1);
    for (auto& blk : b.blocks) blk = random_quadric(mp1, rng, bound);
    return b;
}

QuadBlockSkew random_member_small(int mp1, Rng& rng) {
    if (mp1 > 3) throw std::invalid_argument("random_member_small: only m <= 2");
    int nq = mp1 * (mp1 + 1) / 2;
    std::vector<std::pair<int, int>> sym_idx;
    for (int i = 0; i < mp1; ++i)
        for (int j = i; j < mp1; ++j) sym_idx.push_back({i, j});
    auto basis_quadric = [&](int t) {
        QuadraticFormMatrix q(mp1);
        q.set(sym_idx[t].first, sym_idx[t].second, Rat(1));
        return q;
    };
    std::vector<std::array<int, 4>> monos;
    for (int i = 0; i < mp1; ++i)
        for (int j = i; j < mp1; ++j)
            for (int k = j; k < mp1; ++k)
                for (int l = k; l < mp1; ++l) monos.push_back({i, j, k, l});
    std::map<std::array<int, 4>, int> rowof;
    for (size_t i = 0; i < monos.size(); ++i) rowof[monos[i]] = static_cast<int>(i);

    for (;;) {
        QuadraticFormMatrix a12 = random_quadric(mp1, rng), a13 = random_quadric(mp1, rng),
                            a14 = random_quadric(mp1, rng);
        // Pf = A12 A34 - A13 A24 + A14 A23; unknown blocks (A23, A24, A34)
        Mat<Rat> sys(static_cast<int>(monos.size()), 3 * nq);
        auto fill = [&](int col0, const QuadraticFormMatrix& fixed, bool negate) {
            for (int t = 0; t < nq; ++t) {
                QuarticForm q = QuarticForm::product(fixed, basis_quadric(t));
                for (const auto& [mono, c] : q.coefficients())
                    sys(rowof.at(mono), col0 + t) += negate ? -c : c;
            }
        };
        fill(0, a14, false);      // A23 columns
        fill(nq, a13, true);      // A24 columns
        fill(2 * nq, a12, false); // A34 columns
        Mat<Rat> ker = kernel(sys);
        if (ker.cols() == 0) continue;
        // random kernel combination
        std::vector<Rat> sol(3 * nq);
        bool nonzero = false;
        for (int c = 0; c < ker.cols(); ++c) {
            Rat w = rng.rat_in(-9, 9);
            for (int r = 0; r < 3 * nq; ++r) sol[r] += w * ker(r, c);
        }
        for (auto& v : sol) nonzero = nonzero || !v.is_zero();
        if (!nonzero) continue;
        QuadBlockSkew b(mp1);
        b.blocks[wedge_index(0, 1)] = a12;
        b.blocks[wedge_index(0, 2)] = a13;
        b.blocks[wedge_index(0, 3)] = a14;
        QuadraticFormMatrix a23(mp1), a24(mp1), a34(mp1);
        for (int t = 0; t < nq; ++t) {
            a23.set(sym_idx[t].first, sym_idx[t].second, sol[t]);
            a24.set(sym_idx[t].first, sym_idx[t].second, sol[nq + t]);
            a34.set(sym_idx[t].first, sym_idx[t].second, sol[2 * nq + t]);
        }
        b.blocks[wedge_index(1, 2)] = a23;
        b.blocks[wedge_index(1, 3)] = a24;
        b.blocks[wedge_index(2, 3)] = a34;
        if (m_locus_member(b)) return b;
    }
}

} // namespace qnl
