#ifndef QNL_MATRIX_HPP
#define QNL_MATRIX_HPP

#include "qnl/scalar.hpp"

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace qnl {

struct SingularMatrix : std::runtime_error { SingularMatrix() : std::runtime_error("singular matrix") {} };
struct NotSkew : std::runtime_error { NotSkew() : std::runtime_error("matrix is not skew-symmetric") {} };
struct OddDimension : std::runtime_error { OddDimension() : std::runtime_error("pfaffian needs even dimension") {} };

// Dense row-major matrix over an exact field K (Rat or Fp).
template <class K>
class Mat {
public:
    Mat() : r_(0), c_(0) {}
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
    Mat(std::initializer_list<std::initializer_list<K>> rows) {
        r_ = static_cast<int>(rows.size());
        c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
        a_.reserve(static_cast<size_t>(r_) * c_);
        for (auto& row : rows) {
            if (static_cast<int>(row.size()) != c_) throw std::invalid_argument("Mat: ragged init");
            for (auto& x : row) a_.push_back(x);
        }
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    K& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const K& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const {
        Mat t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (c_ != o.r_) throw std::invalid_argument("Mat: shape mismatch in product");
        Mat p(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const K& x = (*this)(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < o.c_; ++j) p(i, j) += x * o(k, j);
            }
        return p;
    }
    Mat operator+(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat: shape mismatch in sum");
        Mat s(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
        return s;
    }
    Mat operator-(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat: shape mismatch in difference");
        Mat s(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
        return s;
    }
    Mat operator-() const {
        Mat s(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = -a_[i];
        return s;
    }
    Mat scaled(const K& x) const {
        Mat s(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] * x;
        return s;
    }

    bool is_zero() const {
        for (auto& x : a_) if (!x.is_zero()) return false;
        return true;
    }
    bool is_skew() const {
        if (r_ != c_) return false;
        for (int i = 0; i < r_; ++i)
            for (int j = i; j < c_; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        return true;
    }

    Mat block(int i0, int j0, int nr, int nc) const {
        Mat b(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }
    void set_block(int i0, int j0, const Mat& b) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }
    Mat columns(const std::vector<int>& idx) const {
        Mat b(r_, static_cast<int>(idx.size()));
        for (int i = 0; i < r_; ++i)
            for (size_t j = 0; j < idx.size(); ++j) b(i, static_cast<int>(j)) = (*this)(i, idx[j]);
        return b;
    }

private:
    int r_, c_;
    std::vector<K> a_;
};

template <class K>
Mat<K> block_diag(const std::vector<Mat<K>>& blocks) {
    int r = 0, c = 0;
    for (auto& b : blocks) { r += b.rows(); c += b.cols(); }
    Mat<K> m(r, c);
    int i0 = 0, j0 = 0;
    for (auto& b : blocks) { m.set_block(i0, j0, b); i0 += b.rows(); j0 += b.cols(); }
    return m;
}

// Echelon state shared by rank/kernel/solve. Fraction-preserving Gaussian
// elimination; pivots chosen over the whole remaining submatrix, smallest
// operand first so rational growth stays tame. Deterministic.
template <class K>
struct Echelon {
    Mat<K> m;
    std::vector<int> pivot_col; // per eliminated row
    explicit Echelon(Mat<K> in) : m(std::move(in)) {
        int rows = m.rows(), cols = m.cols(), r = 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int best = -1;
            size_t bw = 0;
            for (int i = r; i < rows; ++i) {
                if (m(i, c).is_zero()) continue;
                size_t w = m(i, c).weight();
                if (best < 0 || w < bw) { best = i; bw = w; }
            }
            if (best < 0) continue;
            if (best != r)
                for (int j = 0; j < cols; ++j) std::swap(m(r, j), m(best, j));
            for (int i = 0; i < rows; ++i) {
                if (i == r || m(i, c).is_zero()) continue;
                K f = m(i, c) / m(r, c);
                for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
            }
            pivot_col.push_back(c);
            ++r;
        }
    }
    int rank() const { return static_cast<int>(pivot_col.size()); }
};

template <class K>
int rank(const Mat<K>& m) { return Echelon<K>(m).rank(); }

// columns form a basis of the null space; M * column = 0 exactly
template <class K>
Mat<K> kernel(const Mat<K>& m) {
    Echelon<K> e(m);
    int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivot_col) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c) if (!is_pivot[c]) free_cols.push_back(c);
    Mat<K> ker(cols, static_cast<int>(free_cols.size()));
    for (size_t f = 0; f < free_cols.size(); ++f) {
        int fc = free_cols[f];
        ker(fc, static_cast<int>(f)) = K(1);
        for (int r = 0; r < e.rank(); ++r) {
            int pc = e.pivot_col[r];
            ker(pc, static_cast<int>(f)) = -(e.m(r, fc) / e.m(r, pc));
        }
    }
    return ker;
}

template <class K>
Mat<K> inverse(const Mat<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    int n = m.rows();
    Mat<K> aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Mat<K>::identity(n));
    Echelon<K> e(std::move(aug));
    if (e.rank() < n || e.pivot_col.back() >= n) throw SingularMatrix();
    Mat<K> inv(n, n);
    for (int r = 0; r < n; ++r) {
        int pc = e.pivot_col[r];
        for (int j = 0; j < n; ++j) inv(pc, j) = e.m(r, n + j) / e.m(r, pc);
    }
    return inv;
}

// solves M x = b for all columns of b; throws SingularMatrix if inconsistent
// or underdetermined on the pivot columns needed
template <class K>
Mat<K> solve(const Mat<K>& m, const Mat<K>& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
    int n = m.rows(), k = m.cols(), w = b.cols();
    Mat<K> aug(n, k + w);
    aug.set_block(0, 0, m);
    aug.set_block(0, k, b);
    Echelon<K> e(std::move(aug));
    Mat<K> x(k, w);
    for (int r = 0; r < e.rank(); ++r) {
        int pc = e.pivot_col[r];
        if (pc >= k) throw SingularMatrix(); // inconsistent system
        for (int j = 0; j < w; ++j) x(pc, j) = e.m(r, k + j) / e.m(r, pc);
    }
    return x;
}

template <class K>
K det(const Mat<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    Mat<K> a = m;
    int n = a.rows();
    K d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i) if (!a(i, c).is_zero()) { p = i; break; }
        if (p < 0) return K(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(c, j), a(p, j));
            d = -d;
        }
        d *= a(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            K f = a(i, c) / a(c, c);
            for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

namespace detail {

template <class K>
K pf_recursive(const Mat<K>& m, std::vector<int> idx) {
    if (idx.empty()) return K(1);
    K acc(0);
    int i0 = idx[0];
    for (size_t j = 1; j < idx.size(); ++j) {
        const K& x = m(i0, idx[j]);
        if (x.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(idx.size() - 2);
        for (size_t t = 1; t < idx.size(); ++t)
            if (t != j) rest.push_back(idx[t]);
        K sub = pf_recursive(m, std::move(rest));
        if (j % 2 == 1) acc += x * sub;
        else acc -= x * sub;
    }
    return acc;
}

// skew elimination: congruence transforms preserve Pf up to det of the
// transform; row/col swaps contribute -1 each
template <class K>
K pf_elimination(Mat<K> a) {
    int n = a.rows();
    K pf(1);
    for (int k = 0; k + 1 < n; k += 2) {
        int p = -1;
        for (int i = k + 1; i < n; ++i) if (!a(k, i).is_zero()) { p = i; break; }
        if (p < 0) return K(0);
        if (p != k + 1) {
            for (int j = 0; j < n; ++j) std::swap(a(k + 1, j), a(p, j));
            for (int i = 0; i < n; ++i) std::swap(a(i, k + 1), a(i, p));
            pf = -pf;
        }
        K piv = a(k, k + 1);
        pf *= piv;
        for (int i = k + 2; i < n; ++i) {
            if (!a(k, i).is_zero()) {
                K f = a(k, i) / piv; // clear row k using the (k, k+1) pivot
                for (int j = 0; j < n; ++j) a(i, j) -= f * a(k + 1, j);
                for (int j = 0; j < n; ++j) a(j, i) -= f * a(j, k + 1);
            }
            if (!a(k + 1, i).is_zero()) {
                K f = a(k + 1, i) / piv; // then row k+1 using row k
                for (int j = 0; j < n; ++j) a(i, j) += f * a(k, j);
                for (int j = 0; j < n; ++j) a(j, i) += f * a(j, k);
            }
        }
    }
    return pf;
}

} // namespace detail

// Pf with the convention Pf([[0,1],[-1,0]]) = 1; pfaffian(M)^2 = det(M)
template <class K>
K pfaffian(const Mat<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian: not square");
    if (m.rows() % 2 != 0) throw OddDimension();
    if (!m.is_skew()) throw NotSkew();
    if (m.rows() <= 8) {
        std::vector<int> idx(m.rows());
        for (int i = 0; i < m.rows(); ++i) idx[i] = i;
        return detail::pf_recursive(m, idx);
    }
    return detail::pf_elimination(m);
}

Mat<Fp> to_fp(const Mat<Rat>& m);

} // namespace qnl

#endif
