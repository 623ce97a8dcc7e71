#ifndef QNL_THOOFT_HPP
#define QNL_THOOFT_HPP

#include "qnl/nets.hpp"

#include <variant>

namespace qnl {

struct NotDecomposable : std::runtime_error { NotDecomposable() : std::runtime_error("2-form fails w^w = 0") {} };
struct SingularInput : std::runtime_error { SingularInput() : std::runtime_error("l_pair needs invertible forms") {} };
struct SamePoint : std::runtime_error { SamePoint() : std::runtime_error("l_pair: <a^-1> = <b> in P(Lambda^2 V^dual)") {} };

struct THooftDatum {
    int n = 0;
    struct Term {
        std::vector<Rat> h;
        TwoFormDual w;
    };
    std::vector<Term> terms;
};

// sum of h^2 (x) w over the terms; every w must be decomposable and nonzero
Net build_thooft(const THooftDatum& d);

bool is_decomposable(const TwoFormDual& w);

// the line {f = g = 0} of a decomposable w = f ^ g
LineP3 line_of(const TwoFormDual& w);

bool lines_disjoint(const LineP3& l1, const LineP3& l2);

struct LPairDegenerate {
    // quadratic lambda^2 c0 + 2 lambda mu c1 + mu^2 c2 on the pencil of
    // <a^-1> and <b>; reported when the roots collide or are irrational
    Rat c0, c1, c2;
    bool double_root = false;
    bool irrational = false;
};
using LPairResult = std::variant<std::pair<LineP3, LineP3>, LPairDegenerate>;

// the two intersection points of the pencil span(<a^-1>, <b>) with the
// Grassmannian quadric, as lines in P^3
LPairResult l_pair(const TwoForm& a, const TwoFormDual& b);

struct Fixtures {
    Net a1; // n = 3
    Net a2; // n = 5
};
Fixtures fixtures();

// seeded random datum with 2m+2 terms, pairwise-disjoint lines, generic
// coordinates; retries each open condition up to 32 times
THooftDatum random_thooft(int m, Rng& rng, long long coord_bound = 1000);

} // namespace qnl

#endif
