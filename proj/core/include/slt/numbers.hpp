#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace slt {

// All arithmetic in this library is exact. Int/Rat are GMP-backed; Fraction
// is the strictly positive reduced rational used by the continued-fraction
// layer (num/den >= 1, gcd(num, den) = 1).
using Int = mpz_class;
using Rat = mpq_class;

struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Non-negative residue of a mod n (n > 0).
inline Int mod(const Int& a, const Int& n) {
    if (n <= 0) throw std::invalid_argument("mod: modulus must be positive");
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int cdiv(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::string str(const Int& v) { return v.get_str(); }

// Rationals serialize as "p/q" in lowest terms, "p" when integral.
inline std::string str(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline bool is_integer(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    return c.get_den() == 1;
}

inline long to_long(const Int& v, const char* what = "value") {
    if (!v.fits_slong_p())
        throw std::invalid_argument(std::string(what) + " out of supported range");
    return v.get_si();
}

class Fraction {
public:
    Fraction(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_ <= 0 || den_ <= 0)
            throw std::invalid_argument("Fraction: numerator and denominator must be positive");
        Int g = slt::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    Rat rat() const { return Rat(num_, den_); }

    bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    std::string to_string() const { return str(num_) + "/" + str(den_); }

private:
    Int num_, den_;
};

}  // namespace slt
