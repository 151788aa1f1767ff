#pragma once

#include "folint/rat.hpp"
#include <vector>
#include <utility>
#include <algorithm>
#include <cassert>

namespace folint {

// Dense univariate polynomial over a field K (K = Rat, Quad, RF1, ...).
// c[i] is the coefficient of t^i; the representation has no trailing zeros.
template <class K>
struct UPoly {
    std::vector<K> c;

    UPoly() = default;
    explicit UPoly(K k) { c.push_back(std::move(k)); trim(); }
    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly(K(1)); }
    static UPoly t() {
        UPoly p;
        p.c = {K(0), K(1)};
        return p;
    }
    static UPoly monomial(int deg, K k) {
        UPoly p;
        if (!folint::is_zero(k)) {
            p.c.assign(deg + 1, K(0));
            p.c[deg] = std::move(k);
        }
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for 0
    const K& lc() const { assert(!c.empty()); return c.back(); }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return K(0);
        return c[i];
    }

    void trim() {
        while (!c.empty() && folint::is_zero(c.back())) c.pop_back();
    }

    friend UPoly operator-(const UPoly& p) {
        UPoly r = p;
        for (auto& x : r.c) x = -x;
        return r;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        UPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, K(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (folint::is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }

    friend UPoly operator*(const UPoly& a, const K& k) {
        UPoly r = a;
        for (auto& x : r.c) x = x * k;
        r.trim();
        return r;
    }

    UPoly& operator+=(const UPoly& o) { *this = *this + o; return *this; }
    UPoly& operator-=(const UPoly& o) { *this = *this - o; return *this; }
    UPoly& operator*=(const UPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c.size() != b.c.size()) return false;
        for (size_t i = 0; i < a.c.size(); ++i)
            if (!(a.c[i] == b.c[i])) return false;
        return true;
    }

    UPoly derivative() const {
        UPoly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * K(static_cast<long>(i));
        r.trim();
        return r;
    }

    K eval(const K& x) const {
        K v(0);
        for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        UPoly r = *this;
        K inv = K(1) / lc();
        for (auto& x : r.c) x = x * inv;
        return r;
    }
};

template <class K>
bool is_zero(const UPoly<K>& p) { return p.is_zero(); }

// Euclidean division over a field. Returns {quotient, remainder}.
template <class K>
std::pair<UPoly<K>, UPoly<K>> divmod(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.is_zero()) throw DivisionByZero("UPoly divmod by zero");
    UPoly<K> q, r = a;
    int db = b.degree();
    K linv = K(1) / b.lc();
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        K f = r.lc() * linv;
        if (q.c.size() < static_cast<size_t>(k + 1)) q.c.resize(k + 1, K(0));
        q.c[k] += f;
        for (int i = 0; i <= db; ++i)
            r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class K>
UPoly<K> operator/(const UPoly<K>& a, const UPoly<K>& b) { return divmod(a, b).first; }
template <class K>
UPoly<K> operator%(const UPoly<K>& a, const UPoly<K>& b) { return divmod(a, b).second; }

template <class K>
UPoly<K> upoly_pow(const UPoly<K>& p, long e) {
    UPoly<K> r = UPoly<K>::one(), b = p;
    while (e) {
        if (e & 1) r *= b;
        if (e >>= 1) b *= b;
    }
    return r;
}

// Monic gcd over a field.
template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Extended gcd: g = s*a + t*b with g monic.
template <class K>
void upoly_ext_gcd(const UPoly<K>& a, const UPoly<K>& b,
                   UPoly<K>& g, UPoly<K>& s, UPoly<K>& t) {
    UPoly<K> r0 = a, r1 = b;
    UPoly<K> s0 = UPoly<K>::one(), s1;
    UPoly<K> t0, t1 = UPoly<K>::one();
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UPoly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) { g = r0; s = s0; t = t0; return; }
    K inv = K(1) / r0.lc();
    g = r0 * inv;
    s = s0 * inv;
    t = t0 * inv;
}

// Inverse of a modulo m (requires gcd(a,m)=1).
template <class K>
UPoly<K> upoly_invmod(const UPoly<K>& a, const UPoly<K>& m) {
    UPoly<K> g, s, t;
    upoly_ext_gcd(a % m, m, g, s, t);
    if (g.degree() != 0) throw std::runtime_error("upoly_invmod: not invertible");
    return s % m;
}

// --- Rat-specific helpers ------------------------------------------------

// num scaled to integer coefficients; den the common denominator.
inline void upoly_clear_denominators(const UPoly<Rat>& p, std::vector<Int>& num, Int& den) {
    den = 1;
    for (const auto& x : p.c) den = int_lcm(den, x.get_den());
    num.clear();
    num.reserve(p.c.size());
    for (const auto& x : p.c) num.push_back(Int(x.get_num() * (den / x.get_den())));
}

inline Int ivec_content(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) {
        g = int_gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

// gcd with controlled growth: integer-primitive PRS.
UPoly<Rat> upoly_gcd_rat(const UPoly<Rat>& a, const UPoly<Rat>& b);

// Yun squarefree decomposition: p = const * prod f_i^i, f_i monic squarefree.
template <class K>
std::vector<std::pair<UPoly<K>, int>> upoly_squarefree(const UPoly<K>& p) {
    std::vector<std::pair<UPoly<K>, int>> out;
    if (p.degree() <= 0) return out;
    UPoly<K> a = p.monic();
    UPoly<K> g = upoly_gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.push_back({a, 1});
        return out;
    }
    UPoly<K> b = a / g;
    UPoly<K> c = a.derivative() / g;
    UPoly<K> d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly<K> f = upoly_gcd(b, d);
        if (f.degree() > 0) out.push_back({f, i});
        b = b / f;
        c = d / f;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// Resultant over a field via the Euclidean remainder sequence.
template <class K>
K upoly_resultant(UPoly<K> a, UPoly<K> b) {
    if (a.is_zero() || b.is_zero()) return K(0);
    K acc(1);
    bool neg = false;
    while (b.degree() > 0) {
        if (a.degree() < b.degree()) {
            if ((static_cast<long>(a.degree()) * b.degree()) % 2 == 1) neg = !neg;
            std::swap(a, b);
            continue;
        }
        auto r = a % b;
        if (r.is_zero()) return K(0);
        if ((static_cast<long>(a.degree()) * b.degree()) % 2 == 1) neg = !neg;
        K lb = b.lc();
        for (int i = 0; i < a.degree() - r.degree(); ++i) acc = acc * lb;
        a = std::move(b);
        b = std::move(r);
    }
    K lb = b.lc();
    for (int i = 0; i < a.degree(); ++i) acc = acc * lb;
    return neg ? -acc : acc;
}

} // namespace folint
