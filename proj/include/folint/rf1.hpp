#pragma once

#include "folint/upoly.hpp"

namespace folint {

// Univariate rational function over Q, normalized (coprime, monic denominator).
// Models a field, so it can serve as coefficient type of UPoly.
struct RF1 {
    UPoly<Rat> num, den;

    RF1() : den(UPoly<Rat>::one()) {}
    RF1(long v) : num(UPoly<Rat>(Rat(v))), den(UPoly<Rat>::one()) {}
    RF1(const Rat& v) : num(UPoly<Rat>(v)), den(UPoly<Rat>::one()) {}
    explicit RF1(UPoly<Rat> n) : num(std::move(n)), den(UPoly<Rat>::one()) {}
    RF1(UPoly<Rat> n, UPoly<Rat> d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        if (den.is_zero()) throw DivisionByZero("RF1: zero denominator");
        if (num.is_zero()) { den = UPoly<Rat>::one(); return; }
        UPoly<Rat> g = upoly_gcd_rat(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        Rat l = den.lc();
        if (!is_one(l)) {
            Rat inv = 1 / l;
            num = num * inv;
            den = den * inv;
        }
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_poly() const { return den.degree() == 0; }

    friend RF1 operator-(const RF1& x) {
        RF1 r;
        r.num = -x.num;
        r.den = x.den;
        return r;
    }
    friend RF1 operator+(const RF1& a, const RF1& b) {
        return RF1(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RF1 operator-(const RF1& a, const RF1& b) {
        return RF1(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RF1 operator*(const RF1& a, const RF1& b) {
        return RF1(a.num * b.num, a.den * b.den);
    }
    friend RF1 operator/(const RF1& a, const RF1& b) {
        if (b.is_zero()) throw DivisionByZero();
        return RF1(a.num * b.den, a.den * b.num);
    }
    RF1& operator+=(const RF1& o) { *this = *this + o; return *this; }
    RF1& operator-=(const RF1& o) { *this = *this - o; return *this; }
    RF1& operator*=(const RF1& o) { *this = *this * o; return *this; }
    RF1& operator/=(const RF1& o) { *this = *this / o; return *this; }

    friend bool operator==(const RF1& a, const RF1& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator==(const RF1& a, long v) {
        return a.is_poly() && a.num == UPoly<Rat>(Rat(v)) * a.den;
    }
};

inline bool is_zero(const RF1& x) { return x.is_zero(); }

} // namespace folint
