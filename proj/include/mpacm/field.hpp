#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace mpacm {

/// Exact rational scalar.  mpq_class keeps values canonical (lowest terms,
/// positive denominator), which is exactly the invariant we need.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Prime field F_p with a process-wide modulus (selected once by the CLI or
/// a test before any arithmetic).  Values are always reduced to [0, p).
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long x) {  // NOLINT(google-explicit-constructor): field literals F(0), F(1)
        long m = static_cast<long>(modulus_);
        long r = x % m;
        if (r < 0) r += m;
        v_ = static_cast<std::uint64_t>(r);
    }

    static void set_modulus(std::uint64_t p) {
        if (p < 3) throw std::invalid_argument("Fp modulus must be a prime > 2");
        modulus_ = p;
    }
    static std::uint64_t modulus() { return modulus_; }

    std::uint64_t value() const { return v_; }

    friend Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % modulus_); }
    friend Fp operator-(Fp a, Fp b) { return from_raw((a.v_ + modulus_ - b.v_) % modulus_); }
    friend Fp operator-(Fp a) { return from_raw(a.v_ == 0 ? 0 : modulus_ - a.v_); }
    friend Fp operator*(Fp a, Fp b) {
        return from_raw(static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a.v_) * b.v_ % modulus_));
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(modulus_), nr = static_cast<std::int64_t>(v_);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(modulus_);
        return from_raw(static_cast<std::uint64_t>(t));
    }

private:
    static Fp from_raw(std::uint64_t v) { Fp x; x.v_ = v; return x; }
    static inline std::uint64_t modulus_ = 65521;
    std::uint64_t v_;
};

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(Fp x) { return x.value() == 0; }

/// Convert an exact rational into the working field.
template <class F>
F to_field(const Rat& q);

template <>
inline Rat to_field<Rat>(const Rat& q) { return q; }

template <>
inline Fp to_field<Fp>(const Rat& q) {
    mpz_class p(static_cast<unsigned long>(Fp::modulus()));
    mpz_class num = q.get_num() % p;
    mpz_class den = q.get_den() % p;
    if (den == 0) throw std::domain_error("to_field<Fp>: denominator divisible by modulus");
    if (num < 0) num += p;
    Fp n(num.get_si());
    Fp d(den.get_si());
    return n / d;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(Fp x) { return std::to_string(x.value()); }

}  // namespace mpacm
