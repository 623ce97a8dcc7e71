// Acceptance suite: one line per criterion, exit 0 only if all pass.
// Failing criteria are reported with the observed exact values.

#include "qnl/json_io.hpp"
#include "qnl/nets.hpp"
#include "qnl/pfaffian_locus.hpp"
#include "qnl/report.hpp"
#include "qnl/thooft.hpp"
#include "qnl/zm.hpp"

#include <cstdio>
#include <string>

using namespace qnl;

namespace {

int failures = 0;

void line(int id, bool pass, const std::string& what, const std::string& detail) {
    std::printf("ACCEPT %02d %s  %s (%s)\n", id, pass ? "pass" : "FAIL", what.c_str(), detail.c_str());
    if (!pass) ++failures;
}

// t'Hooft-derived pair satisfying condition (i)
bool thooft_pair(int m, Rng& rng, Net& b, MixedMap& c) {
    THooftDatum d = random_thooft(m, rng, 15);
    BlockDecomposition dec = block_decompose(build_thooft(d), Splitting::xi0(m));
    if (rank(flatten(dec.a1)) != 4 * (m + 1)) return false;
    b = dec.a1;
    c = dec.a2;
    return true;
}

// B-factoring pair: C = B o (g (x) id), condition (i) holds identically
void factored_pair(int m, Rng& rng, Net& b, MixedMap& c) {
    for (;;) {
        Net cand(m + 1);
        for (int k = 0; k < 6; ++k) {
            QuadraticFormMatrix q(m + 1);
            for (int i = 0; i <= m; ++i)
                for (int j = i; j <= m; ++j) q.set(i, j, rng.rat_in(-5, 5));
            cand.comp[k] = q;
        }
        if (rank(flatten(cand)) != 4 * (m + 1)) continue;
        b = cand;
        Mat<Rat> g(m + 1, m);
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j < m; ++j) g(i, j) = rng.rat_in(-5, 5);
        Mat<Rat> gx(4 * (m + 1), 4 * m);
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j < m; ++j)
                for (int al = 0; al < 4; ++al) gx(4 * i + al, 4 * j + al) = g(i, j);
        Mat<Rat> cf = flatten(b) * gx;
        c = MixedMap(m + 1, m);
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j < m; ++j) c.at(i, j) = TwoFormDual::from_skew(cf.block(4 * i, 4 * j, 4, 4));
        return;
    }
}

} // namespace

int main() {
    // 1. rank of the 20x24 system assembled from the fixture data
    {
        Stopwatch sw;
        FixtureParams fp = FixtureParams::base();
        ZPoint z = fixture_delta(2, fp);
        Mat<Rat> sys = fibre_system(fp.theta0(), fp.alpha0(), z);
        int r = rank(sys);
        bool pass = (r == 20) && sw.ms() < 1000;
        line(1, pass, "rank of assembled 20x24 fixture system == 20",
             "observed rank=" + std::to_string(r) + ", elapsed_ms=" + std::to_string(sw.ms()) +
                 "; the faithful system provably has rank 8(m-1)=16: its kernel contains the "
                 "chi = sharp(phi)h and psi = h(x)theta0, h(x)(theta0 alpha0 theta0) gauge vectors");
    }

    // 2. printed 30x36 matrix has rank 30
    {
        Stopwatch sw;
        int r = rank(printed_mtilde());
        line(2, r == 30 && sw.ms() < 1000, "rank of printed 30x36 matrix == 30",
             "observed rank=" + std::to_string(r) + ", elapsed_ms=" + std::to_string(sw.ms()));
    }

    // 3. direct-sum rank laws on the printed matrices
    {
        Mat<Rat> m = printed_m(), mt = printed_mtilde();
        bool ok = true;
        std::string detail;
        for (int p = 1; p <= 4; ++p) {
            std::vector<Mat<Rat>> copies(p, m);
            int r = rank(block_diag(copies));
            ok = ok && (r == 20 * p);
            detail += "20*" + std::to_string(p) + "->" + std::to_string(r) + " ";
        }
        for (int p = 0; p <= 3; ++p) {
            std::vector<Mat<Rat>> blocks{mt};
            for (int i = 0; i < p; ++i) blocks.push_back(m);
            int r = rank(block_diag(blocks));
            ok = ok && (r == 30 + 20 * p);
            detail += "30+20*" + std::to_string(p) + "->" + std::to_string(r) + " ";
        }
        line(3, ok, "block-diagonal joins give ranks 20p and 30+20p", detail);
    }

    // 4. fixture A1(xi0) blocks invertible of sizes 8 and 12
    {
        Fixtures f = fixtures();
        int r1 = rank(flatten(block_decompose(f.a1, Splitting::xi0(1)).a1));
        int r2 = rank(flatten(block_decompose(f.a2, Splitting::xi0(2)).a1));
        line(4, r1 == 8 && r2 == 12, "A1(xi0) blocks invertible (sizes 8, 12)",
             "ranks " + std::to_string(r1) + ", " + std::to_string(r2));
    }

    // 5. Barth on the fixtures: ranks 8, 12 and vanishing kernels
    {
        Fixtures f = fixtures();
        BarthRank r1 = barth_rank(f.a1), r2 = barth_rank(f.a2);
        SectionKernels k1 = barth_sections(f.a1), k2 = barth_sections(f.a2);
        bool pass = r1.rank == 8 && r2.rank == 12 && k1.section_kernel_dim == 0 &&
                    k1.vertical_kernel_dim == 0 && k2.section_kernel_dim == 0 &&
                    k2.vertical_kernel_dim == 0;
        line(5, pass, "fixture ranks 8/12 with zero section and vertical kernels",
             "ranks " + std::to_string(r1.rank) + "/" + std::to_string(r2.rank) +
                 ", section kernels " + std::to_string(k1.section_kernel_dim) + "/" +
                 std::to_string(k2.section_kernel_dim) + ", vertical kernels " +
                 std::to_string(k1.vertical_kernel_dim) + "/" + std::to_string(k2.vertical_kernel_dim) +
                 "; the fixtures only use m+1 of the 2m+1 H-basis vectors, so the vertical "
                 "kernels are 1 and 2 by inspection");
    }

    // 6. Z-membership of the delta fixtures
    {
        bool ok = true;
        std::string detail;
        FixtureParams odd = FixtureParams::base();
        for (int p = 1; p <= 4; ++p) {
            ZhatReport r = zhat_membership(fixture_delta(2 * p, odd));
            ok = ok && r.pass && r.d_invertible;
            detail += "odd p=" + std::to_string(p) + (r.pass ? " ok " : " FAIL ");
        }
        FixtureParams even = FixtureParams::even_default();
        even.check_even_relation();
        for (int p = 0; p <= 3; ++p) {
            ZhatReport r = zhat_membership(fixture_delta(2 * p + 3, even));
            ok = ok && r.pass && r.d_invertible;
            detail += "even p=" + std::to_string(p) + (r.pass ? " ok " : " FAIL ");
        }
        line(6, ok, "delta fixtures are Z-members (odd p<=4, even p<=3, r/s relation enforced)", detail);
    }

    // 7. kernel of the fixture fibre system
    {
        FixtureParams fp = FixtureParams::base();
        bool ok = true;
        std::string detail;
        for (int p = 1; p <= 2; ++p) {
            int m1 = 2 * p;
            ZPoint z = fixture_delta(m1, fp);
            int k = kernel(fibre_system(fp.theta0(), fp.alpha0(), z)).cols();
            ok = ok && (k == 2 * m1);
            detail += "m-1=" + std::to_string(m1) + ": kernel=" + std::to_string(k) +
                      " (expected " + std::to_string(2 * m1) + ") ";
        }
        line(7, ok, "fixture fibre-system kernel has dimension 2(m-1)",
             detail + "; the faithful system's kernel is 4(m-1): 2(m-1) gauge directions in chi "
                      "plus 2(m-1) in psi, verified exactly in the unit tests");
    }

    // 8. Schur property suite, >= 200 pairs per m in {1,2,3}
    {
        bool ok = true;
        std::string detail;
        for (int m = 1; m <= 3; ++m) {
            Rng rng(8000 + m);
            int good = 0, total = 0;
            for (int t = 0; t < 100; ++t) {
                Net b;
                MixedMap c;
                if (!thooft_pair(m, rng, b, c)) continue;
                ++total;
                Net a = pair_to_net(b, c);
                bool inst = rank(flatten(a)) == 4 * (m + 1) &&
                            flatten(schur_residual(a, Splitting::xi0(m))).is_zero();
                good += inst ? 1 : 0;
            }
            for (int t = 0; t < 110; ++t) {
                Net b;
                MixedMap c;
                factored_pair(m, rng, b, c);
                ++total;
                Net a = pair_to_net(b, c);
                bool inst = rank(flatten(a)) == 4 * (m + 1) &&
                            flatten(schur_residual(a, Splitting::xi0(m))).is_zero();
                good += inst ? 1 : 0;
            }
            ok = ok && (good == total) && (total >= 200);
            detail += "m=" + std::to_string(m) + ": " + std::to_string(good) + "/" +
                      std::to_string(total) + " ";
        }
        line(8, ok, "Schur suite: assembled rank 4(m+1) and zero residual on (i)-pairs", detail);
    }

    // 9. Pfaffian degeneracy law on the structured family and pf^2 = det
    {
        bool ok = true;
        std::string detail;
        for (int m = 1; m <= 4; ++m) {
            Rng rng(9000 + m);
            int good = 0;
            const int count = 1000;
            for (int t = 0; t < count; ++t) {
                QuadBlockSkew b = structured_family(random_quadric(m + 1, rng), random_quadric(m + 1, rng),
                                                    random_quadric(m + 1, rng), rng.rat_in(-9, 9),
                                                    rng.rat_in(-9, 9));
                DegeneracyReport r = degeneracy_check(b);
                good += (r.member && r.degenerate) ? 1 : 0;
            }
            ok = ok && (good == count);
            detail += "m=" + std::to_string(m) + ": " + std::to_string(good) + "/1000 ";
        }
        Rng rng(9100);
        int pf_good = 0;
        for (int t = 0; t < 200; ++t) {
            int n = (t % 2 == 0) ? 6 : 8;
            Mat<Rat> m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    m(i, j) = rng.rat_in(-9, 9);
                    m(j, i) = -m(i, j);
                }
            Rat pf = pfaffian(m);
            pf_good += (pf * pf == det(m)) ? 1 : 0;
        }
        ok = ok && (pf_good == 200);
        detail += "pf^2=det: " + std::to_string(pf_good) + "/200";
        line(9, ok, "structured members are degenerate; pfaffian^2 = det", detail);
    }

    // 10. jump-order oracle equivalence
    {
        Stopwatch sw;
        Rng rng(10001);
        int pairs = 0, mismatches = 0;
        while (pairs < 50) {
            int m = static_cast<int>(rng.int_in(1, 2)); // n = 3, 5
            THooftDatum d = random_thooft(m, rng, 9);
            Net a = build_thooft(d);
            for (int lt = 0; lt < 2 && pairs < 50; ++lt) {
                LineP3 l = [&]() -> LineP3 {
                    if (lt == 0) {
                        // line through two construction lines: guaranteed jumping
                        LineP3 l1 = line_of(d.terms[0].w), l2 = line_of(d.terms[1].w);
                        std::vector<Rat> u(4), v(4);
                        for (int i = 0; i < 4; ++i) {
                            u[i] = l1.span(i, 0);
                            v[i] = l2.span(i, 0);
                        }
                        return LineP3::from_points(u, v);
                    }
                    for (;;) {
                        std::vector<Rat> u(4), v(4);
                        for (int i = 0; i < 4; ++i) {
                            u[i] = rng.rat_in(-5, 5);
                            v[i] = rng.rat_in(-5, 5);
                        }
                        try {
                            return LineP3::from_points(u, v);
                        } catch (const std::exception&) {
                        }
                    }
                }();
                auto od = jump_oracle(a, l);
                if (!od) continue;
                int dd = jump_order(a, l);
                if (dd != *od) ++mismatches;
                for (int k = 0; k <= a.n; ++k) {
                    int h0 = restriction_h0(a, l, k);
                    if (h0 != std::max(2 * k + 2, dd + k + 1)) ++mismatches;
                }
                ++pairs;
            }
        }
        bool ok = mismatches == 0 && sw.ms() < 60000;
        line(10, ok, "jump order matches the restriction oracle (50 pairs, k = 0..n)",
             std::to_string(pairs) + " pairs, " + std::to_string(mismatches) +
                 " mismatches, elapsed_ms=" + std::to_string(sw.ms()));
    }

    // 11. t'Hooft generation: rank 12 at n = 5; construction lines jump
    {
        Rng rng(11000);
        int rank_ok = 0, jump_ok = 0;
        const int count = 100;
        for (int t = 0; t < count; ++t) {
            THooftDatum d = random_thooft(2, rng, 1000);
            Net a = build_thooft(d);
            if (barth_rank(a).rank == 12) ++rank_ok;
            bool all_jump = true;
            for (const auto& term : d.terms)
                all_jump = all_jump && jump_order(a, line_of(term.w)) >= 1;
            jump_ok += all_jump ? 1 : 0;
        }
        bool ok = rank_ok == count && jump_ok == count;
        line(11, ok, "100 seeded 6-term data: Barth rank 12 and jumping construction lines",
             "rank ok " + std::to_string(rank_ok) + "/100, lines jumping " + std::to_string(jump_ok) +
                 "/100; construction lines of a generic t'Hooft net do not jump (the contracted "
                 "form keeps full rank), confirmed by the independent restriction oracle");
    }

    // 12. dimension arithmetic up to n = 50
    {
        bool ok = true;
        for (long long n = 1; n <= 50 && ok; ++n) {
            DimRecord d = dims(n);
            ok = d.moduli_dim == 8 * n - 3 && d.dim_Lambda_m == 5 * n * (n - 1) &&
                 d.barth_codim == 2 * n * n - 5 * n + 3 && d.expected_dim_MI == n * n + 8 * n - 3 &&
                 d.expected_dim_Z == 4 * n * (n + 2) && d.dim_S_n == 3 * n * (n + 1);
        }
        line(12, ok, "dimension formulas for n <= 50", ok ? "all exact" : "mismatch");
    }

    std::printf("ACCEPTANCE: %d/12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
