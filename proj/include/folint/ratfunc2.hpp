#pragma once

#include "folint/bipoly.hpp"

namespace folint {

// Normalized bivariate rational function over K: gcd(num, den) = 1 and the
// denominator has leading coefficient 1 in the fixed graded-lex order.
template <class K>
class RatFunc2 {
public:
    RatFunc2() : num_(BiPoly<K>::zero()), den_(BiPoly<K>::one()) {}
    RatFunc2(long v) : num_(BiPoly<K>(K(v))), den_(BiPoly<K>::one()) {}
    explicit RatFunc2(K k) : num_(BiPoly<K>(std::move(k))), den_(BiPoly<K>::one()) {}
    explicit RatFunc2(BiPoly<K> n) : num_(std::move(n)), den_(BiPoly<K>::one()) {}
    RatFunc2(BiPoly<K> n, BiPoly<K> d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static RatFunc2 x() { return RatFunc2(BiPoly<K>::x()); }
    static RatFunc2 y() { return RatFunc2(BiPoly<K>::y()); }

    const BiPoly<K>& num() const { return num_; }
    const BiPoly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_poly() const { return den_.is_constant(); }
    K constant_value() const { return num_.constant_value() / den_.constant_value(); }

    friend RatFunc2 operator-(const RatFunc2& f) {
        RatFunc2 r;
        r.num_ = -f.num_;
        r.den_ = f.den_;
        return r;
    }
    friend RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b) {
        if (a.den_ == b.den_) return RatFunc2(a.num_ + b.num_, a.den_);
        return RatFunc2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b) {
        if (a.den_ == b.den_) return RatFunc2(a.num_ - b.num_, a.den_);
        return RatFunc2(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b) {
        return RatFunc2(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b) {
        if (b.is_zero()) throw DivisionByZero("RatFunc2 division by zero");
        return RatFunc2(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc2& operator+=(const RatFunc2& o) { *this = *this + o; return *this; }
    RatFunc2& operator-=(const RatFunc2& o) { *this = *this - o; return *this; }
    RatFunc2& operator*=(const RatFunc2& o) { *this = *this * o; return *this; }
    RatFunc2& operator/=(const RatFunc2& o) { *this = *this / o; return *this; }

    friend bool operator==(const RatFunc2& a, const RatFunc2& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc2& a, const RatFunc2& b) { return !(a == b); }

    RatFunc2 dx() const {
        return RatFunc2(num_.dx() * den_ - num_ * den_.dx(), den_ * den_);
    }
    RatFunc2 dy() const {
        return RatFunc2(num_.dy() * den_ - num_ * den_.dy(), den_ * den_);
    }

    // Evaluation; throws DivisionByZero when the denominator vanishes.
    K eval(const K& vx, const K& vy) const {
        K d = den_.eval(vx, vy);
        if (folint::is_zero(d)) throw DivisionByZero("RatFunc2 eval: pole");
        return num_.eval(vx, vy) / d;
    }
    bool den_vanishes_at(const K& vx, const K& vy) const {
        return folint::is_zero(den_.eval(vx, vy));
    }

    RatFunc2 pow(long e) const {
        if (e < 0) return RatFunc2(1) / pow(-e);
        RatFunc2 r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    RatFunc2 subst_swap_vars() const {
        return RatFunc2(num_.swap_vars(), den_.swap_vars());
    }

private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("RatFunc2: zero denominator");
        if (num_.is_zero()) {
            den_ = BiPoly<K>::one();
            return;
        }
        BiPoly<K> g = bipoly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *bipoly_divide(num_, g);
            den_ = *bipoly_divide(den_, g);
        }
        const K& l = den_.lead_coeff();
        if (!is_one(l)) {
            K inv = K(1) / l;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    BiPoly<K> num_, den_;
};

using QPoly = BiPoly<Rat>;
using QRat2 = RatFunc2<Rat>;

template <class K>
bool is_zero(const RatFunc2<K>& f) { return f.is_zero(); }

template <class K>
std::string to_string(const RatFunc2<K>& f, const char* vx = "x", const char* vy = "y") {
    if (f.is_poly()) return to_string(f.num(), vx, vy);
    return "(" + to_string(f.num(), vx, vy) + ")/(" + to_string(f.den(), vx, vy) + ")";
}

// Substitute x := a, y := b (rational functions) into f.
template <class K>
RatFunc2<K> ratfunc2_compose(const RatFunc2<K>& f, const RatFunc2<K>& a, const RatFunc2<K>& b) {
    auto eval_poly = [&](const BiPoly<K>& p) {
        RatFunc2<K> acc;
        for (auto& [m, c] : p.terms())
            acc += RatFunc2<K>(K(c)) * a.pow(m.i) * b.pow(m.j);
        return acc;
    };
    RatFunc2<K> d = eval_poly(f.den());
    if (d.is_zero()) throw DivisionByZero("ratfunc2_compose: denominator vanished");
    return eval_poly(f.num()) / d;
}

} // namespace folint
