#ifndef QNL_NETS_HPP
#define QNL_NETS_HPP

#include "qnl/rng.hpp"
#include "qnl/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qnl {

struct RankPrecondition : std::runtime_error { RankPrecondition() : std::runtime_error("net fails Barth rank precondition") {} };
struct BadSplitting : std::runtime_error { BadSplitting() : std::runtime_error("invalid splitting") {} };
struct SingularA1 : std::runtime_error { SingularA1() : std::runtime_error("A1(xi) block is singular") {} };
struct SingularB : std::runtime_error { SingularB() : std::runtime_error("B is singular") {} };
struct NotInS : std::runtime_error {
    LambdaElement lambda_part;
    explicit NotInS(LambdaElement l) : std::runtime_error("condition (i) fails: Lambda part nonzero"), lambda_part(std::move(l)) {}
};
struct DegenerateRestriction : std::runtime_error { DegenerateRestriction() : std::runtime_error("a-map drops rank on the line") {} };
struct ZeroForm : std::runtime_error { ZeroForm() : std::runtime_error("zero 2-form") {} };

// ordered partition of {0..n-1}, sizes m+1 and m, plus an optional base change
struct Splitting {
    int n = 0, m = 0;
    std::vector<int> first;  // m+1 indices
    std::vector<int> second; // m indices
    std::optional<Mat<Rat>> base_change;

    // contiguous split {0..m} | {m+1..2m}
    static Splitting xi0(int m);
    void validate() const;
};

struct BarthRank {
    int rank = 0;
    bool pass = false;
};
BarthRank barth_rank(const Net& a);

struct MonadData {
    int n = 0;
    std::vector<int> w_columns;     // chosen column indices of flatten(A)
    Mat<Rat> w_basis;               // 4n x (2n+2)
    std::array<Mat<Rat>, 4> a_coeffs; // each (2n+2) x n
    Mat<Rat> q;                     // skew invertible (2n+2) x (2n+2)
};
MonadData monad_assemble(const Net& a);

// all ten symmetric coefficient matrices of a^dual q a; zero iff the monad
// identity holds
std::vector<Mat<Rat>> monad_identity_residual(const MonadData& md);

struct SectionKernels {
    int section_kernel_dim = 0;
    int vertical_kernel_dim = 0;
    bool pass = false;
};
SectionKernels barth_sections(const Net& a);

enum class Verdict { pass, fail_at_point, inconclusive };

struct SurjectivityReport {
    Verdict verdict = Verdict::inconclusive;
    int samples = 0;
    uint64_t seed = 0;
    std::optional<std::array<uint64_t, 4>> witness; // point of P^3 over F_p
};
SurjectivityReport barth_surjectivity(const Net& a, int samples, uint64_t seed);

struct BlockDecomposition {
    Net a1;      // over m+1
    MixedMap a2; // (m+1) x m
    Net a3;      // over m
};
BlockDecomposition block_decompose(const Net& a, const Splitting& xi);
Net assemble_from_blocks(const Net& b, const MixedMap& c, const Net& a3, const Splitting& xi);

// A3(xi) + A2(xi)^dual A1(xi)^{-1} A2(xi); zero iff rank(A) = rank(A1)
Net schur_residual(const Net& a, const Splitting& xi);

// g_m: (B, C) -> xi~(B, C, -C^dual B^{-1} C)
Net pair_to_net(const Net& b, const MixedMap& c);

struct XmReport {
    bool i_pass = false;
    LambdaElement lambda_part;
    Verdict ii = Verdict::inconclusive;
    Verdict iii = Verdict::inconclusive;
    std::optional<std::array<uint64_t, 4>> witness_ii, witness_iii;
    int samples = 0;
    uint64_t seed = 0;
};
XmReport xm_membership(const Net& b, const MixedMap& c, int samples, uint64_t seed);

// line in P^3: decomposable Pluecker bivector plus cached spanning vectors
struct LineP3 {
    TwoForm pluecker;
    Mat<Rat> span; // 4 x 2

    static LineP3 from_points(const std::vector<Rat>& u, const std::vector<Rat>& v);
    static LineP3 from_pluecker(const TwoForm& pi);
    void validate() const;
};

// corank of the contracted symmetric form Q_l = sum_k <comp_k, pluecker>
int jump_order(const Net& a, const LineP3& l);

// h^0(E|l (k)) computed from the restricted monad; k >= 0
int restriction_h0(const Net& a, const LineP3& l, int k);

// independent jump-order oracle: h^0 at k = 0 plus the multiplication map
// H^0(E|l) (x) H^0(O(1)) -> H^0(E|l(1)) to separate d = 0 from d = 1
std::optional<int> jump_oracle(const Net& a, const LineP3& l);

// random invertible n x n base change with entries in [-bound, bound]
Mat<Rat> random_gl(int n, Rng& rng, long long bound = 5);

// pull A back along g: result(h (x) v) = A(g h (x) v)
Net base_change(const Net& a, const Mat<Rat>& g);

} // namespace qnl

#endif
