#ifndef QNL_SCALAR_HPP
#define QNL_SCALAR_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qnl {

// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(static_cast<long>(n)) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // parses "p" or "p/q"
    static Rat parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rat: bad literal '" + s + "'");
        if (q.get_den() == 0) throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rat(q);
    }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    // pivot-size heuristic: total limb count of num and den
    size_t weight() const {
        return mpz_size(v_.get_num_mpz_t()) + mpz_size(v_.get_den_mpz_t());
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rat operator*(long a, const Rat& b) { return Rat(a) * b; }

// Prime field element for randomized identity checks. Never used on
// acceptance-path ranks. Modulus is process-global, set before any
// concurrent use; default is the Mersenne prime 2^61 - 1.
class Fp {
public:
    static constexpr uint64_t kDefaultModulus = 2305843009213693951ull;

    Fp() : x_(0) {}
    Fp(uint64_t x) : x_(x % modulus()) {}
    static Fp from_int(long long v) {
        long long m = static_cast<long long>(modulus());
        long long r = v % m;
        if (r < 0) r += m;
        return Fp(static_cast<uint64_t>(r));
    }

    static uint64_t& modulus() {
        static uint64_t p = kDefaultModulus;
        return p;
    }
    static void set_modulus(uint64_t p) {
        if (p <= (1ull << 31) || p % 2 == 0) throw std::invalid_argument("Fp: modulus must be an odd prime > 2^31");
        modulus() = p;
    }

    Fp operator+(Fp o) const { uint64_t s = x_ + o.x_; if (s >= modulus()) s -= modulus(); return raw(s); }
    Fp operator-(Fp o) const { return raw(x_ >= o.x_ ? x_ - o.x_ : x_ + modulus() - o.x_); }
    Fp operator*(Fp o) const {
        return raw(static_cast<uint64_t>((static_cast<unsigned __int128>(x_) * o.x_) % modulus()));
    }
    Fp operator/(Fp o) const { return *this * o.inv(); }
    Fp operator-() const { return raw(x_ == 0 ? 0 : modulus() - x_); }
    Fp& operator+=(Fp o) { *this = *this + o; return *this; }
    Fp& operator-=(Fp o) { *this = *this - o; return *this; }
    Fp& operator*=(Fp o) { *this = *this * o; return *this; }

    Fp inv() const {
        if (x_ == 0) throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        int64_t t = 0, nt = 1;
        int64_t r = static_cast<int64_t>(modulus()), nr = static_cast<int64_t>(x_);
        while (nr != 0) {
            int64_t qq = r / nr;
            t -= qq * nt; std::swap(t, nt);
            r -= qq * nr; std::swap(r, nr);
        }
        if (t < 0) t += static_cast<int64_t>(modulus());
        return raw(static_cast<uint64_t>(t));
    }

    bool operator==(Fp o) const { return x_ == o.x_; }
    bool operator!=(Fp o) const { return x_ != o.x_; }
    bool is_zero() const { return x_ == 0; }
    Rat abs() const { return Rat(1); } // pivoting over Fp ignores magnitude
    size_t weight() const { return 1; }
    uint64_t value() const { return x_; }

private:
    static Fp raw(uint64_t x) { Fp f; f.x_ = x; return f; }
    uint64_t x_;
};

// reduce a rational mod p; throws if the denominator vanishes mod p
Fp to_fp(const Rat& r);

} // namespace qnl

#endif
