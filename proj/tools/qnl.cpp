// Command-line front end: loads JSON inputs, runs the verification suites
// and emits machine-readable reports. Exit codes: 0 all checks pass,
// 1 some check failed, 2 input error.

#include "qnl/json_io.hpp"
#include "qnl/nets.hpp"
#include "qnl/pfaffian_locus.hpp"
#include "qnl/report.hpp"
#include "qnl/thooft.hpp"
#include "qnl/zm.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace qnl;

namespace {

uint64_t default_seed() {
    if (const char* env = std::getenv("QNL_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
        }
    }
    return 1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void apply_field(const std::string& field) {
    if (field.empty() || field == "rational") return;
    if (field.rfind("fp:", 0) == 0) {
        Fp::set_modulus(std::stoull(field.substr(3)));
        return;
    }
    throw ParseError("unknown field spec '" + field + "'");
}

int emit(Report& rep, const Stopwatch& sw, bool pretty) {
    rep.elapsed_ms = sw.ms();
    std::cout << rep.to_json().dump(pretty ? 2 : -1) << "\n";
    return rep.exit_code();
}

json point_json(const std::array<uint64_t, 4>& x) {
    json j = json::array();
    for (uint64_t v : x) j.push_back(v);
    return j;
}

const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail_at_point: return "fail_at_point";
        default: return "inconclusive";
    }
}

int cmd_verify_barth(const std::string& path, int samples, uint64_t seed, bool pretty) {
    Stopwatch sw;
    std::string raw = slurp(path);
    Net a = net_from_json(json::parse(raw));
    Report rep;
    rep.command = "verify-barth";
    rep.inputs_digest = digest_hex(raw);
    rep.seed = seed;

    BarthRank br = barth_rank(a);
    rep.checks.push_back({"barth_i", br.pass, json(br.rank), json(2 * a.n + 2), json()});
    if (br.pass) {
        SurjectivityReport sr = barth_surjectivity(a, samples, seed);
        json witness;
        if (sr.witness) witness = point_json(*sr.witness);
        rep.checks.push_back({"barth_ii", sr.verdict == Verdict::pass, json(verdict_str(sr.verdict)),
                              json("pass"), witness});
        SectionKernels sk = barth_sections(a);
        json obs = json::object();
        obs["section_kernel_dim"] = sk.section_kernel_dim;
        obs["vertical_kernel_dim"] = sk.vertical_kernel_dim;
        json want = json::object();
        want["section_kernel_dim"] = 0;
        want["vertical_kernel_dim"] = 0;
        rep.checks.push_back({"barth_iii", sk.pass, obs, want, json()});
    }
    return emit(rep, sw, pretty);
}

int cmd_fixture_ranks(const std::string& which, int p, bool pretty) {
    Stopwatch sw;
    Report rep;
    rep.command = "fixtures ranks";
    rep.inputs_digest = digest_hex(which + "/p=" + std::to_string(p));

    FixtureParams fp = which == "even" ? FixtureParams::even_default() : FixtureParams::base();
    {
        Mat<Rat> printed = which == "even" ? printed_mtilde() : printed_m();
        int expect = which == "even" ? 30 : 20;
        int r = rank(printed);
        json obs = json::object();
        obs["matrix"] = which == "even" ? "Mtilde" : "M";
        obs["rank"] = r;
        obs["expected"] = expect;
        obs["pass"] = (r == expect);
        rep.checks.push_back({"printed_rank", r == expect, obs, json(expect), json()});
    }
    {
        std::vector<Mat<Rat>> blocks;
        int expect = 20 * p;
        if (which == "even") {
            blocks.push_back(printed_mtilde());
            expect = 30 + 20 * p;
        }
        for (int i = 0; i < p; ++i) blocks.push_back(printed_m());
        int r = blocks.empty() ? 0 : rank(block_diag(blocks));
        rep.checks.push_back({"printed_directsum_rank", r == expect, json(r), json(expect), json()});
    }
    {
        // system assembled from the fixture data; the faithful assembly has
        // rank 8(m-1) against the published 10(m-1) (see README)
        int m1 = which == "even" ? 3 + 2 * p : 2 * std::max(p, 1);
        ZPoint z = fixture_delta(m1, fp);
        Mat<Rat> sys = fibre_system(fp.theta0(), fp.alpha0(), z);
        int r = rank(sys);
        rep.checks.push_back({"assembled_system_rank", r == 10 * m1, json(r), json(10 * m1), json()});
    }
    if (which == "odd" && p == 1) {
        // informational row comparison of the assembled chi-part against the
        // recorded table (always passes; the counts are the payload)
        ZPoint z = fixture_delta(2, fp);
        Mat<Rat> sys = fibre_system(fp.theta0(), fp.alpha0(), z);
        Mat<Rat> printed = printed_m();
        Mat<Rat> p_chi(20, 12), a_chi(20, 12), p_psi(20, 12), a_psi(20, 12);
        for (int i = 0; i < 20; ++i)
            for (int j = 0; j < 12; ++j) {
                p_chi(i, j) = printed(i, j);
                a_chi(i, j) = sys(i, j < 6 ? j : 6 + j);
                p_psi(i, j) = printed(i, 12 + j);
                a_psi(i, j) = sys(i, j < 6 ? 6 + j : 12 + j);
            }
        auto count = [](const std::vector<int>& v) {
            int c = 0;
            for (int x : v) c += (x >= 0);
            return c;
        };
        json obs = json::object();
        obs["chi_rows_matched"] = count(match_rows_up_to_scale(p_chi, a_chi));
        obs["psi_rows_matched"] = count(match_rows_up_to_scale(p_psi, a_psi));
        obs["rows"] = 20;
        rep.checks.push_back({"assembled_vs_printed_rows_info", true, obs, json("informational"), json()});
    }
    return emit(rep, sw, pretty);
}

int cmd_thooft_build(int terms, int n, uint64_t seed, const std::string& out,
                     const std::string& emit_kind, bool pretty) {
    Stopwatch sw;
    if (n % 2 == 0 || terms != n + 1)
        throw ParseError("t'Hooft data needs odd n and terms = n + 1");
    Rng rng(seed);
    THooftDatum d = random_thooft((n - 1) / 2, rng);
    json jd = emit_kind == "datum" ? thooft_to_json(d) : net_to_json(build_thooft(d));
    if (out.empty()) {
        std::cout << jd.dump(pretty ? 2 : -1) << "\n";
        return 0;
    }
    std::ofstream f(out);
    f << jd.dump(2) << "\n";
    Report rep;
    rep.command = "thooft build";
    rep.inputs_digest = digest_hex(jd.dump());
    rep.seed = seed;
    BarthRank br = barth_rank(build_thooft(d));
    rep.checks.push_back({"barth_i", br.pass, json(br.rank), json(2 * n + 2), json()});
    return emit(rep, sw, pretty);
}

int cmd_thooft_check(const std::string& path, uint64_t seed, int samples, bool pretty) {
    Stopwatch sw;
    std::string raw = slurp(path);
    THooftDatum d = thooft_from_json(json::parse(raw));
    Report rep;
    rep.command = "thooft check";
    rep.inputs_digest = digest_hex(raw);
    rep.seed = seed;
    bool alldec = true, alldisj = true;
    for (size_t i = 0; i < d.terms.size(); ++i) {
        alldec = alldec && is_decomposable(d.terms[i].w) && !d.terms[i].w.is_zero();
        for (size_t j = i + 1; j < d.terms.size(); ++j)
            alldisj = alldisj && lines_disjoint(line_of(d.terms[i].w), line_of(d.terms[j].w));
    }
    rep.checks.push_back({"terms_decomposable", alldec, json(alldec), json(true), json()});
    rep.checks.push_back({"lines_pairwise_disjoint", alldisj, json(alldisj), json(true), json()});
    Net a = build_thooft(d);
    BarthRank br = barth_rank(a);
    rep.checks.push_back({"barth_i", br.pass, json(br.rank), json(2 * d.n + 2), json()});
    if (br.pass) {
        SurjectivityReport sr = barth_surjectivity(a, samples, seed);
        rep.checks.push_back({"barth_ii", sr.verdict == Verdict::pass, json(verdict_str(sr.verdict)),
                              json("pass"), json()});
    }
    return emit(rep, sw, pretty);
}

int cmd_zm_membership(const std::string& which, int p, const std::string& dfile,
                      const std::string& phifile, bool pretty) {
    Stopwatch sw;
    Report rep;
    rep.command = "zm membership";
    ZPoint z;
    if (!dfile.empty()) {
        std::string rawd = slurp(dfile), rawp = slurp(phifile);
        z.d = dualnet_from_json(json::parse(rawd));
        z.phi = phimap_from_json(json::parse(rawp));
        rep.inputs_digest = digest_hex(rawd + rawp);
    } else {
        int m1 = which == "even" ? 3 + 2 * p : 2 * std::max(p, 1);
        FixtureParams fp = which == "even" ? FixtureParams::even_default() : FixtureParams::base();
        z = fixture_delta(m1, fp);
        rep.inputs_digest = digest_hex(which + "/p=" + std::to_string(p));
    }
    ZhatReport r = zhat_membership(z);
    rep.checks.push_back({"lambda_part_vanishes", r.pass, json(r.pass), json(true), json()});
    rep.checks.push_back({"d_invertible", r.d_invertible, json(r.d_invertible), json(true), json()});
    return emit(rep, sw, pretty);
}

int cmd_zm_fiber(const std::string& which, int p, bool pretty) {
    Stopwatch sw;
    Report rep;
    rep.command = "zm fiber";
    int m1 = which == "even" ? 3 + 2 * p : 2 * std::max(p, 1);
    FixtureParams fp = which == "even" ? FixtureParams::even_default() : FixtureParams::base();
    rep.inputs_digest = digest_hex(which + "/p=" + std::to_string(p));
    ZPoint z = fixture_delta(m1, fp);
    Mat<Rat> sys = fibre_system(fp.theta0(), fp.alpha0(), z);
    int r = rank(sys);
    int k = sys.cols() - r;
    rep.checks.push_back({"system_rank", r == 10 * m1, json(r), json(10 * m1), json()});
    rep.checks.push_back({"kernel_dim", k == 2 * m1, json(k), json(2 * m1), json()});
    return emit(rep, sw, pretty);
}

int cmd_pfaffian_member(const std::string& path, bool pretty) {
    Stopwatch sw;
    std::string raw = slurp(path);
    QuadBlockSkew b = quadblock_from_json(json::parse(raw));
    Report rep;
    rep.command = "pfaffian member";
    rep.inputs_digest = digest_hex(raw);
    DegeneracyReport r = degeneracy_check(b);
    rep.checks.push_back({"member", r.member, json(r.member), json(true), json()});
    rep.checks.push_back(
        {"degenerate", r.degenerate, json(r.big_rank), json("< " + std::to_string(4 * b.mp1)), json()});
    return emit(rep, sw, pretty);
}

int cmd_pfaffian_degeneracy(int count, int m, uint64_t seed, bool pretty) {
    Stopwatch sw;
    Report rep;
    rep.command = "pfaffian degeneracy";
    rep.inputs_digest = digest_hex("structured/" + std::to_string(count) + "/" + std::to_string(m));
    rep.seed = seed;
    Rng rng(seed);
    int good = 0;
    for (int t = 0; t < count; ++t) {
        QuadBlockSkew b = structured_family(random_quadric(m + 1, rng), random_quadric(m + 1, rng),
                                            random_quadric(m + 1, rng), rng.rat_in(-9, 9), rng.rat_in(-9, 9));
        DegeneracyReport r = degeneracy_check(b);
        good += (r.member && r.degenerate) ? 1 : 0;
    }
    rep.checks.push_back({"member_implies_degenerate", good == count, json(good), json(count), json()});
    return emit(rep, sw, pretty);
}

int cmd_jump(const std::string& netfile, const std::string& line, bool pretty) {
    Stopwatch sw;
    std::string raw = slurp(netfile);
    Net a = net_from_json(json::parse(raw));
    LineP3 l = [&] {
        for (int k = 0; k < 6; ++k)
            if (line == wedge_key(k)) {
                TwoForm pi;
                pi[k] = Rat(1);
                return LineP3::from_pluecker(pi);
            }
        return LineP3::from_pluecker(twoform_from_json(json::parse(line)));
    }();
    Report rep;
    rep.command = "jump";
    rep.inputs_digest = digest_hex(raw + line);
    int d = jump_order(a, l);
    auto od = jump_oracle(a, l);
    json obs = json::object();
    obs["jump_order"] = d;
    obs["oracle"] = od ? json(*od) : json("undefined");
    rep.checks.push_back({"oracle_agreement", !od || *od == d, obs, json(d), json()});
    return emit(rep, sw, pretty);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification tool for instanton nets of quadrics"};
    app.require_subcommand(1);

    uint64_t seed = default_seed();
    int samples = 64;
    std::string field = "rational";
    bool pretty = false;
    app.add_option("--seed", seed, "RNG seed (env QNL_SEED)");
    app.add_option("--samples", samples, "sample count for randomized checks");
    app.add_option("--field", field, "rational | fp:PRIME (randomized checks only)");
    app.add_flag("--pretty", pretty, "indent JSON output");

    auto* vb = app.add_subcommand("verify-barth", "run the three Barth checks on a net file");
    vb->fallthrough();
    std::string net_path;
    vb->add_option("file", net_path, "qnl-net-v1 JSON")->required();

    auto* fx = app.add_subcommand("fixtures", "fixture computations");
    fx->fallthrough();
    auto* fr = fx->add_subcommand("ranks", "printed and assembled system ranks");
    fr->fallthrough();
    std::string fcase = "odd";
    int pcount = 1;
    fr->add_option("--case", fcase, "odd | even")->check(CLI::IsMember({"odd", "even"}));
    fr->add_option("--p", pcount, "number of block copies");

    auto* th = app.add_subcommand("thooft", "t'Hooft data");
    th->fallthrough();
    auto* tb = th->add_subcommand("build", "generate a random datum");
    tb->fallthrough();
    int terms = 4, nsize = 3;
    std::string outfile;
    tb->add_option("--terms", terms, "term count (n + 1)");
    tb->add_option("--n", nsize, "net size (odd)");
    tb->add_option("-o,--out", outfile, "write here and report on it");
    std::string emit_kind = "net";
    tb->add_option("--emit", emit_kind, "net | datum")->check(CLI::IsMember({"net", "datum"}));
    auto* tc = th->add_subcommand("check", "verify a datum file");
    tc->fallthrough();
    std::string thfile;
    tc->add_option("file", thfile)->required();

    auto* zm = app.add_subcommand("zm", "Z_m fixtures");
    zm->fallthrough();
    auto* zmm = zm->add_subcommand("membership", "Lambda-part vanishing of a fixture or files");
    zmm->fallthrough();
    std::string zcase = "odd", dfile, phifile;
    int zp = 1;
    zmm->add_option("--case", zcase)->check(CLI::IsMember({"odd", "even"}));
    zmm->add_option("--p", zp);
    zmm->add_option("--d", dfile, "qnl-dualnet-v1 JSON");
    zmm->add_option("--phi", phifile, "qnl-phimap-v1 JSON");
    auto* zmf = zm->add_subcommand("fiber", "fibre system rank and kernel for a fixture");
    zmf->fallthrough();
    zmf->add_option("--case", zcase)->check(CLI::IsMember({"odd", "even"}));
    zmf->add_option("--p", zp);

    auto* pf = app.add_subcommand("pfaffian", "Pfaffian locus checks");
    pf->fallthrough();
    auto* pfm = pf->add_subcommand("member", "membership + degeneracy of a block file");
    pfm->fallthrough();
    std::string pffile;
    pfm->add_option("file", pffile)->required();
    auto* pfd = pf->add_subcommand("degeneracy", "batch degeneracy suite");
    pfd->fallthrough();
    std::string family = "structured";
    int count = 100, msize = 2;
    pfd->add_option("--family", family)->check(CLI::IsMember({"structured"}));
    pfd->add_option("--count", count);
    pfd->add_option("--m", msize);

    auto* jp = app.add_subcommand("jump", "jump order of a net at a line");
    jp->fallthrough();
    std::string jnet, jline = "e12";
    jp->add_option("--net", jnet)->required();
    jp->add_option("--line", jline, "e12..e34 or a JSON bivector");

    CLI11_PARSE(app, argc, argv);

    try {
        apply_field(field);
        if (vb->parsed()) return cmd_verify_barth(net_path, samples, seed, pretty);
        if (fr->parsed()) return cmd_fixture_ranks(fcase, pcount, pretty);
        if (tb->parsed()) return cmd_thooft_build(terms, nsize, seed, outfile, emit_kind, pretty);
        if (tc->parsed()) return cmd_thooft_check(thfile, seed, samples, pretty);
        if (zmm->parsed()) return cmd_zm_membership(zcase, zp, dfile, phifile, pretty);
        if (zmf->parsed()) return cmd_zm_fiber(zcase, zp, pretty);
        if (pfm->parsed()) return cmd_pfaffian_member(pffile, pretty);
        if (pfd->parsed()) return cmd_pfaffian_degeneracy(count, msize, seed, pretty);
        if (jp->parsed()) return cmd_jump(jnet, jline, pretty);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
