#ifndef QNL_PFAFFIAN_LOCUS_HPP
#define QNL_PFAFFIAN_LOCUS_HPP

#include "qnl/rng.hpp"
#include "qnl/tensor.hpp"

#include <map>

namespace qnl {

// degree-4 polynomial on H_{m+1}, keyed by sorted multi-indices
class QuarticForm {
public:
    explicit QuarticForm(int dim = 0) : dim_(dim) {}

    int dim() const { return dim_; }
    void add(std::array<int, 4> mono, const Rat& c);
    bool is_zero() const;
    Rat eval(const std::vector<Rat>& x) const;
    QuarticForm operator+(const QuarticForm& o) const;
    QuarticForm operator-(const QuarticForm& o) const;
    size_t terms() const { return c_.size(); }
    const std::map<std::array<int, 4>, Rat>& coefficients() const { return c_; }

    // product of two quadratic forms as a quartic
    static QuarticForm product(const QuadraticFormMatrix& a, const QuadraticFormMatrix& b);

private:
    int dim_;
    std::map<std::array<int, 4>, Rat> c_;
};

// B in S_{m+1} as a 4x4 skew matrix of quadratic forms
struct QuadBlockSkew {
    int mp1 = 0;
    // blocks A12, A13, A14, A23, A24, A34 over the wedge basis order
    std::array<QuadraticFormMatrix, 6> blocks;

    explicit QuadBlockSkew(int mp1_ = 0) : mp1(mp1_) {
        for (auto& b : blocks) b = QuadraticFormMatrix(mp1_);
    }
    const QuadraticFormMatrix& at(int i, int j) const { return blocks[wedge_index(i, j)]; }

    Net as_net() const; // same data as an S_{m+1} element
    Mat<Rat> evaluate(const std::vector<Rat>& x) const; // the 4x4 skew B(x)
};

// A12 A34 - A13 A24 + A14 A23 as an exact quartic
QuarticForm pfaffian_quartic(const QuadBlockSkew& b);

bool m_locus_member(const QuadBlockSkew& b);

// the case-(i) substitution A23 = lambda A13, A34 = gamma A13,
// A24 = gamma A12 + lambda A14
QuadBlockSkew structured_family(const QuadraticFormMatrix& a12, const QuadraticFormMatrix& a13,
                                const QuadraticFormMatrix& a14, const Rat& lambda, const Rat& gamma);

struct DegeneracyReport {
    bool member = false;
    int big_rank = 0;
    bool degenerate = false;
};
DegeneracyReport degeneracy_check(const QuadBlockSkew& b);

QuadraticFormMatrix random_quadric(int dim, Rng& rng, long long bound = 9);
QuadBlockSkew random_block_skew(int mp1, Rng& rng, long long bound = 9);

// random member of M_{m+1} beyond the structured family, for m <= 2: fixes
// A12, A13, A14 and solves the linear system on the complementary blocks
QuadBlockSkew random_member_small(int mp1, Rng& rng);

} // namespace qnl

#endif
