#include "qnl/tensor.hpp"

namespace qnl {

namespace {

template <class T>
Mat<Rat> flatten_sym_components(const std::array<QuadraticFormMatrix, 6>& comp, int n) {
    Mat<Rat> big(4 * n, 4 * n);
    for (int k = 0; k < 6; ++k) {
        int a = kWedgeBasis[k][0], b = kWedgeBasis[k][1];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Rat& v = comp[k](i, j);
                if (v.is_zero()) continue;
                big(4 * i + a, 4 * j + b) += v;
                big(4 * i + b, 4 * j + a) -= v;
            }
    }
    return big;
}

} // namespace

Mat<Rat> flatten(const Net& a) { return flatten_sym_components<Net>(a.comp, a.n); }
Mat<Rat> flatten(const DualNet& d) { return flatten_sym_components<DualNet>(d.comp, d.m); }

Mat<Rat> flatten(const PhiMap& p) {
    Mat<Rat> big(4 * p.m, 4 * p.m);
    for (int i = 0; i < p.m; ++i)
        for (int j = 0; j < p.m; ++j) big.set_block(4 * i, 4 * j, p.at(i, j).skew());
    return big;
}

Mat<Rat> flatten(const MixedMap& c) {
    Mat<Rat> big(4 * c.rows, 4 * c.cols);
    for (int i = 0; i < c.rows; ++i)
        for (int j = 0; j < c.cols; ++j) big.set_block(4 * i, 4 * j, c.at(i, j).skew());
    return big;
}

namespace {

template <class Out>
Out unflatten_impl(const Mat<Rat>& m, int n) {
    if (m.rows() != 4 * n || m.cols() != 4 * n) throw std::invalid_argument("unflatten: bad shape");
    Out out(n);
    for (int k = 0; k < 6; ++k) {
        int a = kWedgeBasis[k][0], b = kWedgeBasis[k][1];
        QuadraticFormMatrix q(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) q.set(i, j, m(4 * i + a, 4 * j + b));
        out.comp[k] = q;
    }
    Mat<Rat> back = flatten_sym_components<Out>(out.comp, n);
    if (back != m) throw std::invalid_argument("unflatten: matrix is not an S-element");
    return out;
}

} // namespace

Net unflatten_net(const Mat<Rat>& m, int n) { return unflatten_impl<Net>(m, n); }
DualNet unflatten_dual(const Mat<Rat>& m, int n) { return unflatten_impl<DualNet>(m, n); }

SplitParts split_skew(const Mat<Rat>& m, int n) {
    if (m.rows() != 4 * n || m.cols() != 4 * n || !m.is_skew()) throw NotSkew();
    const Rat half(1, 2);
    SplitParts out{Net(n), LambdaElement(n)};
    // S-part: symmetrize in the H indices; stays skew in the V indices
    for (int k = 0; k < 6; ++k) {
        int a = kWedgeBasis[k][0], b = kWedgeBasis[k][1];
        QuadraticFormMatrix q(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                q.set(i, j, (m(4 * i + a, 4 * j + b) + m(4 * j + a, 4 * i + b)) * half);
        out.s_part.comp[k] = q;
    }
    // Lambda-part: antisymmetrize in H; symmetric 4x4 blocks
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mat<Rat> blk(4, 4);
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    blk(a, b) = (m(4 * i + a, 4 * j + b) - m(4 * j + a, 4 * i + b)) * half;
            out.lambda_part.block(i, j) = blk;
        }
    return out;
}

Mat<Rat> embed_lambda(const LambdaElement& l) {
    int n = l.m;
    Mat<Rat> big(4 * n, 4 * n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            big.set_block(4 * i, 4 * j, l.block(i, j));
            big.set_block(4 * j, 4 * i, -l.block(i, j));
        }
    return big;
}

int point_rank(const Mat<Rat>& x) {
    if (x.is_zero()) throw ZeroTensor();
    return rank(x);
}

DimRecord dims(long long n) {
    if (n < 1) throw std::invalid_argument("dims: n must be >= 1");
    return DimRecord{
        3 * n * (n + 1),
        5 * n * (n - 1),
        2 * n * n - 5 * n + 3,
        n * n + 8 * n - 3,
        4 * n * (n + 2),
        8 * n - 3,
    };
}

Fp to_fp(const Rat& r) {
    const mpq_class& q = r.raw();
    mpz_class p(static_cast<unsigned long>(Fp::modulus()));
    mpz_class num = q.get_num() % p;
    mpz_class den = q.get_den() % p;
    if (den == 0) throw std::domain_error("to_fp: denominator vanishes mod p");
    if (num < 0) num += p;
    Fp fn(static_cast<uint64_t>(mpz_get_ui(num.get_mpz_t())));
    Fp fd(static_cast<uint64_t>(mpz_get_ui(den.get_mpz_t())));
    return fn / fd;
}

Mat<Fp> to_fp(const Mat<Rat>& m) {
    Mat<Fp> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = to_fp(m(i, j));
    return out;
}

} // namespace qnl
