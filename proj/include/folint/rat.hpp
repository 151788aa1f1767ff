#pragma once

#include <gmpxx.h>
#include <string>
#include <cstdint>
#include <stdexcept>

namespace folint {

// Exact rational scalar. mpq_class keeps gcd(|num|,den)=1 and den>=1 after
// arithmetic; construction from raw parts goes through canonicalize().
using Rat = mpq_class;
using Int = mpz_class;

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
    explicit DivisionByZero(const std::string& w) : std::runtime_error(w) {}
};

inline Rat rat(long n, long d = 1) {
    if (d == 0) throw DivisionByZero();
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& n, const Int& d) {
    if (d == 0) throw DivisionByZero();
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_one(const Rat& r) { return r == 1; }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Int n, d;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), a);
    if (e < 0) {
        if (n == 0) throw DivisionByZero();
        std::swap(n, d);
    }
    return rat(n, d);
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Parses "p" or "p/q"; throws on malformed input.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw DivisionByZero();
    return r;
}

} // namespace folint
