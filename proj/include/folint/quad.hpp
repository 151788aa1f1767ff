#pragma once

#include "folint/rat.hpp"
#include <optional>
#include <sstream>

namespace folint {

// Element of Q or of a quadratic extension Q(alpha), alpha^2 = p*alpha + q
// with t^2 - p*t - q irreducible over Q. A value with b == 0 is plain
// rational and compatible with any extension.
struct QuadField {
    Rat p, q;
    bool operator==(const QuadField& o) const { return p == o.p && q == o.q; }
};

class Quad {
public:
    Quad() : a_(0), b_(0) {}
    Quad(long v) : a_(v), b_(0) {}
    Quad(const Rat& v) : a_(v), b_(0) {}
    Quad(Rat av, Rat bv, QuadField f) : a_(std::move(av)), b_(std::move(bv)) {
        if (!folint::is_zero(b_)) field_ = f;
    }

    static Quad sqrt_of(const Rat& q) { return Quad(Rat(0), Rat(1), QuadField{Rat(0), q}); }
    static Quad root(const QuadField& f) { return Quad(Rat(0), Rat(1), f); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    bool rational() const { return folint::is_zero(b_); }
    const std::optional<QuadField>& field() const { return field_; }

    // Rational value; throws when the element is irrational.
    const Rat& to_rat() const {
        if (!rational()) throw std::runtime_error("Quad: not rational");
        return a_;
    }

    bool is_zero() const { return folint::is_zero(a_) && folint::is_zero(b_); }

    Quad conj() const {
        if (rational()) return *this;
        // conj(a + b*alpha) = a + b*p - b*alpha
        return Quad(a_ + b_ * field_->p, -b_, *field_);
    }

    Rat norm() const {
        if (rational()) return a_ * a_;
        return a_ * a_ + a_ * b_ * field_->p - b_ * b_ * field_->q;
    }

    Rat trace() const {
        if (rational()) return 2 * a_;
        return 2 * a_ + b_ * field_->p;
    }

    friend Quad operator-(const Quad& x) { return make(-x.a_, -x.b_, x.field_); }

    friend Quad operator+(const Quad& x, const Quad& y) {
        auto f = join(x, y);
        return make(x.a_ + y.a_, x.b_ + y.b_, f);
    }
    friend Quad operator-(const Quad& x, const Quad& y) {
        auto f = join(x, y);
        return make(x.a_ - y.a_, x.b_ - y.b_, f);
    }
    friend Quad operator*(const Quad& x, const Quad& y) {
        auto f = join(x, y);
        Rat cross = x.b_ * y.b_;
        if (folint::is_zero(cross))
            return make(x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_, f);
        return make(x.a_ * y.a_ + cross * f->q,
                    x.a_ * y.b_ + x.b_ * y.a_ + cross * f->p, f);
    }
    friend Quad operator/(const Quad& x, const Quad& y) {
        if (y.is_zero()) throw DivisionByZero();
        if (y.rational()) return make(x.a_ / y.a_, x.b_ / y.a_, x.field_);
        Quad c = y.conj();
        Rat n = y.norm();
        Quad t = x * c;
        return make(t.a_ / n, t.b_ / n, t.field_);
    }

    Quad& operator+=(const Quad& y) { *this = *this + y; return *this; }
    Quad& operator-=(const Quad& y) { *this = *this - y; return *this; }
    Quad& operator*=(const Quad& y) { *this = *this * y; return *this; }
    Quad& operator/=(const Quad& y) { *this = *this / y; return *this; }

    friend bool operator==(const Quad& x, const Quad& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.rational() || y.rational() || *x.field_ == *y.field_);
    }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
    friend bool operator==(const Quad& x, long v) { return x.rational() && x.a_ == v; }
    friend bool operator!=(const Quad& x, long v) { return !(x == v); }

private:
    static Quad make(Rat a, Rat b, std::optional<QuadField> f) {
        Quad r;
        r.a_ = std::move(a);
        r.b_ = std::move(b);
        if (!folint::is_zero(r.b_)) r.field_ = f;
        return r;
    }
    static std::optional<QuadField> join(const Quad& x, const Quad& y) {
        if (x.field_ && y.field_) {
            if (!(*x.field_ == *y.field_)) throw std::runtime_error("Quad: mixed extensions");
            return x.field_;
        }
        return x.field_ ? x.field_ : y.field_;
    }

    Rat a_, b_;
    std::optional<QuadField> field_;
};

inline bool is_zero(const Quad& q) { return q.is_zero(); }
inline bool is_one(const Quad& q) { return q.rational() && is_one(q.a()); }

inline Quad quad_pow(const Quad& base, long e) {
    if (e < 0) return Quad(1) / quad_pow(base, -e);
    Quad r(1), b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

std::string quad_root_symbol(const QuadField& f);

inline std::string to_string(const Quad& x) {
    if (x.rational()) return to_string(x.a());
    std::ostringstream os;
    std::string root = quad_root_symbol(*x.field());
    bool need_a = !is_zero(x.a());
    if (need_a) os << to_string(x.a());
    Rat b = x.b();
    if (sgn(b) < 0) { os << "-"; b = -b; }
    else if (need_a) os << "+";
    if (!is_one(b)) os << to_string(b) << "*";
    os << root;
    return os.str();
}

inline std::string quad_root_symbol(const QuadField& f) {
    if (is_zero(f.p)) return "sqrt(" + to_string(f.q) + ")";
    return "rootof(t^2-(" + to_string(f.p) + ")*t-(" + to_string(f.q) + "))";
}

} // namespace folint
