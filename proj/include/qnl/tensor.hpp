#ifndef QNL_TENSOR_HPP
#define QNL_TENSOR_HPP

#include "qnl/matrix.hpp"

#include <array>
#include <stdexcept>

namespace qnl {

struct ZeroTensor : std::runtime_error { ZeroTensor() : std::runtime_error("zero tensor has no rank") {} };

// Lambda^2 basis order used everywhere: (12, 13, 14, 23, 24, 34).
inline constexpr int kWedgeBasis[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

inline int wedge_index(int i, int j) {
    static constexpr int tbl[4][4] = {
        {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    int k = tbl[i][j];
    if (k < 0) throw std::invalid_argument("wedge_index: equal indices");
    return k;
}

namespace detail {
template <class Derived>
struct SixCoords {
    std::array<Rat, 6> c{};

    const Rat& operator[](int k) const { return c[k]; }
    Rat& operator[](int k) { return c[k]; }
    bool is_zero() const {
        for (auto& x : c) if (!x.is_zero()) return false;
        return true;
    }
    bool operator==(const Derived& o) const { return c == o.c; }

    // skew 4x4 view, entry (i,j) = +coord for i<j
    Mat<Rat> skew() const {
        Mat<Rat> m(4, 4);
        for (int k = 0; k < 6; ++k) {
            m(kWedgeBasis[k][0], kWedgeBasis[k][1]) = c[k];
            m(kWedgeBasis[k][1], kWedgeBasis[k][0]) = -c[k];
        }
        return m;
    }
    static Derived from_skew(const Mat<Rat>& m) {
        if (!m.is_skew() || m.rows() != 4) throw NotSkew();
        Derived w;
        for (int k = 0; k < 6; ++k) w.c[k] = m(kWedgeBasis[k][0], kWedgeBasis[k][1]);
        return w;
    }
    static Derived basis(int i, int j) {
        Derived w;
        if (i < j) w.c[wedge_index(i, j)] = Rat(1);
        else w.c[wedge_index(j, i)] = Rat(-1);
        return w;
    }
    Derived operator+(const Derived& o) const {
        Derived r;
        for (int k = 0; k < 6; ++k) r.c[k] = c[k] + o.c[k];
        return r;
    }
    Derived operator-(const Derived& o) const {
        Derived r;
        for (int k = 0; k < 6; ++k) r.c[k] = c[k] - o.c[k];
        return r;
    }
    Derived scaled(const Rat& x) const {
        Derived r;
        for (int k = 0; k < 6; ++k) r.c[k] = c[k] * x;
        return r;
    }
};
} // namespace detail

// element of Lambda^2 V (Pluecker carrier for lines)
struct TwoForm : detail::SixCoords<TwoForm> {};

// element of Lambda^2 V^dual
struct TwoFormDual : detail::SixCoords<TwoFormDual> {};

// coefficient of e1^e2^e3^e4 in a^b
template <class W>
Rat wedge_pair_impl(const W& a, const W& b) {
    return a[0] * b[5] - a[1] * b[4] + a[2] * b[3] + a[3] * b[2] - a[4] * b[1] + a[5] * b[0];
}
inline Rat wedge_pair(const TwoForm& a, const TwoForm& b) { return wedge_pair_impl(a, b); }
inline Rat wedge_pair_dual(const TwoFormDual& a, const TwoFormDual& b) { return wedge_pair_impl(a, b); }

// duality pairing with <e_i^e_j, e^i^e^j> = 1
inline Rat pair_form(const TwoFormDual& w, const TwoForm& pi) {
    Rat s;
    for (int k = 0; k < 6; ++k) s += w[k] * pi[k];
    return s;
}

// symmetric n x n matrix of scalars (one Lambda^2 coefficient of a net)
class QuadraticFormMatrix {
public:
    QuadraticFormMatrix() : m_(0, 0) {}
    explicit QuadraticFormMatrix(int dim) : m_(dim, dim) {}
    explicit QuadraticFormMatrix(Mat<Rat> m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols() || m_ != m_.transpose())
            throw std::invalid_argument("QuadraticFormMatrix: not symmetric");
    }
    int dim() const { return m_.rows(); }
    const Rat& operator()(int i, int j) const { return m_(i, j); }
    void set(int i, int j, const Rat& v) { m_(i, j) = v; m_(j, i) = v; }
    const Mat<Rat>& mat() const { return m_; }
    bool operator==(const QuadraticFormMatrix& o) const { return m_ == o.m_; }

    // value of the quadratic form at x
    Rat eval(const std::vector<Rat>& x) const {
        Rat s;
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) s += m_(i, j) * x[i] * x[j];
        return s;
    }

private:
    Mat<Rat> m_;
};

// A in S_n = S^2 H_n^dual (x) Lambda^2 V^dual, stored componentwise
struct Net {
    int n = 0;
    std::array<QuadraticFormMatrix, 6> comp;

    explicit Net(int n_ = 0) : n(n_) {
        for (auto& q : comp) q = QuadraticFormMatrix(n);
    }
    bool operator==(const Net& o) const { return n == o.n && comp == o.comp; }
    bool is_zero() const {
        for (auto& q : comp) if (!q.mat().is_zero()) return false;
        return true;
    }
    Net operator+(const Net& o) const {
        Net r(n);
        for (int k = 0; k < 6; ++k) r.comp[k] = QuadraticFormMatrix(comp[k].mat() + o.comp[k].mat());
        return r;
    }
    Net operator-(const Net& o) const {
        Net r(n);
        for (int k = 0; k < 6; ++k) r.comp[k] = QuadraticFormMatrix(comp[k].mat() - o.comp[k].mat());
        return r;
    }
};

// D in S_m^dual: six symmetric m x m components over the Lambda^2 V basis;
// flattens to a skew map H_m^dual (x) V^dual -> H_m (x) V
struct DualNet {
    int m = 0;
    std::array<QuadraticFormMatrix, 6> comp;

    explicit DualNet(int m_ = 0) : m(m_) {
        for (auto& q : comp) q = QuadraticFormMatrix(m);
    }
    bool operator==(const DualNet& o) const { return m == o.m && comp == o.comp; }
};

// phi in Phi_m = Hom(H_m, H_m^dual (x) Lambda^2 V^dual); no symmetry
struct PhiMap {
    int m = 0;
    std::vector<TwoFormDual> e; // row-major m x m

    explicit PhiMap(int m_ = 0) : m(m_), e(static_cast<size_t>(m_) * m_) {}
    TwoFormDual& at(int i, int j) { return e[static_cast<size_t>(i) * m + j]; }
    const TwoFormDual& at(int i, int j) const { return e[static_cast<size_t>(i) * m + j]; }
    bool operator==(const PhiMap& o) const { return m == o.m && e == o.e; }
};

// C in Sigma_{m+1} = Hom(H_m, H_{m+1}^dual (x) Lambda^2 V^dual)
struct MixedMap {
    int rows = 0, cols = 0; // rows = m+1, cols = m
    std::vector<TwoFormDual> e;

    MixedMap(int rows_ = 0, int cols_ = 0)
        : rows(rows_), cols(cols_), e(static_cast<size_t>(rows_) * cols_) {}
    TwoFormDual& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const TwoFormDual& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
    bool is_zero() const {
        for (auto& w : e) if (!w.is_zero()) return false;
        return true;
    }
};

// element of Lambda_m = Lambda^2 H_m^dual (x) S^2 V^dual: H-skew array of
// symmetric 4x4 blocks, stored for i < j
struct LambdaElement {
    int m = 0;
    std::vector<Mat<Rat>> upper; // (i,j), i<j, lexicographic

    explicit LambdaElement(int m_ = 0) : m(m_), upper(static_cast<size_t>(m_) * (m_ - 1) / 2, Mat<Rat>(4, 4)) {}
    static size_t pos(int i, int j, int m) {
        return static_cast<size_t>(i) * (2 * m - i - 1) / 2 + (j - i - 1);
    }
    Mat<Rat>& block(int i, int j) { return upper[pos(i, j, m)]; }
    const Mat<Rat>& block(int i, int j) const { return upper[pos(i, j, m)]; }
    bool is_zero() const {
        for (auto& b : upper) if (!b.is_zero()) return false;
        return true;
    }
};

// block index (i, alpha) -> 4 i + alpha
Mat<Rat> flatten(const Net& a);
Mat<Rat> flatten(const DualNet& d);
Mat<Rat> flatten(const PhiMap& p);
Mat<Rat> flatten(const MixedMap& c);

// inverse of flatten for an S-element; throws if M is not in the image
Net unflatten_net(const Mat<Rat>& m, int n);
DualNet unflatten_dual(const Mat<Rat>& m, int n);

struct SplitParts {
    Net s_part;
    LambdaElement lambda_part;
};

// canonical decomposition of a skew 4n x 4n matrix into S + Lambda parts
SplitParts split_skew(const Mat<Rat>& m, int n);
Mat<Rat> embed_lambda(const LambdaElement& l);

// rank of x in H_n^dual (x) V^dual given as an n x 4 matrix
int point_rank(const Mat<Rat>& x);

struct DimRecord {
    long long dim_S_n;          // 3n(n+1)
    long long dim_Lambda_m;     // 5m(m-1)
    long long barth_codim;      // 2n^2 - 5n + 3
    long long expected_dim_MI;  // n^2 + 8n - 3
    long long expected_dim_Z;   // 4m(m+2)
    long long moduli_dim;       // 8n - 3
};
DimRecord dims(long long n);

} // namespace qnl

#endif
