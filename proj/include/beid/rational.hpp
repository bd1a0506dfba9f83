#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace beid {

// Exact rational scalar. GMP does the bignum work; everything downstream
// only needs field operations and exact comparison.
using Rat = mpq_class;

inline std::string coeff_str(const Rat& q) { return q.get_str(); }
inline bool coeff_negative(const Rat& q) { return sgn(q) < 0; }
inline std::string coeff_abs_str(const Rat& q) { return static_cast<Rat>(abs(q)).get_str(); }

// Prime field Z/p with a process-wide modulus (default 32003). The modulus is
// configured once before any arithmetic and treated as read-only afterwards.
class Zp {
public:
    Zp() : v_(0) {}
    Zp(long long x) {
        long long p = modulus();
        v_ = x % p;
        if (v_ < 0) v_ += p;
    }

    static void set_modulus(long long p) {
        if (p < 2) throw std::invalid_argument("Zp modulus must be >= 2");
        modulus_ref() = p;
    }
    static long long modulus() { return modulus_ref(); }

    long long value() const { return v_; }

    friend Zp operator+(Zp a, Zp b) { return Zp::raw((a.v_ + b.v_) % modulus()); }
    friend Zp operator-(Zp a, Zp b) { return Zp::raw((a.v_ - b.v_ + modulus()) % modulus()); }
    friend Zp operator*(Zp a, Zp b) {
        return Zp::raw(static_cast<long long>(static_cast<__int128>(a.v_) * b.v_ % modulus()));
    }
    friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
    Zp operator-() const { return Zp::raw(v_ == 0 ? 0 : modulus() - v_); }
    Zp& operator+=(Zp b) { return *this = *this + b; }
    Zp& operator-=(Zp b) { return *this = *this - b; }
    Zp& operator*=(Zp b) { return *this = *this * b; }
    Zp& operator/=(Zp b) { return *this = *this / b; }
    friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
    friend bool operator!=(Zp a, Zp b) { return a.v_ != b.v_; }

    Zp inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in Z/p");
        // extended Euclid
        long long a = v_, b = modulus(), x0 = 1, x1 = 0;
        while (b != 0) {
            long long q = a / b;
            long long t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        if (a != 1) throw std::domain_error("modulus is not prime: no inverse");
        return Zp(x0);
    }

private:
    static Zp raw(long long v) {
        Zp z;
        z.v_ = v;
        return z;
    }
    static long long& modulus_ref() {
        static long long p = 32003;
        return p;
    }
    long long v_;
};

inline std::string coeff_str(const Zp& z) { return std::to_string(z.value()); }
inline bool coeff_negative(const Zp&) { return false; }
inline std::string coeff_abs_str(const Zp& z) { return std::to_string(z.value()); }

}  // namespace beid
