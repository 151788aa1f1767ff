#pragma once

#include "folint/upoly.hpp"
#include "folint/quad.hpp"
#include <map>
#include <vector>
#include <string>
#include <sstream>
#include <optional>

namespace folint {

// Monomial x^i y^j, ordered graded-lex with x > y, largest first.
struct Mono {
    int i = 0, j = 0;
    int deg() const { return i + j; }
    bool operator==(const Mono& o) const { return i == o.i && j == o.j; }
};

struct MonoGrlexDesc {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.deg() != b.deg()) return a.deg() > b.deg();
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    }
};

// Sparse exact bivariate polynomial over a field K. No zero entries are
// stored; iteration order is the fixed graded-lex order, so canonical forms
// and printing are reproducible bit-for-bit.
template <class K>
class BiPoly {
public:
    using Map = std::map<Mono, K, MonoGrlexDesc>;

    BiPoly() = default;
    explicit BiPoly(K k) { add_term(0, 0, std::move(k)); }
    BiPoly(long v) : BiPoly(K(v)) {}

    static BiPoly zero() { return BiPoly(); }
    static BiPoly one() { return BiPoly(K(1)); }
    static BiPoly x(int e = 1) { BiPoly p; p.add_term(e, 0, K(1)); return p; }
    static BiPoly y(int e = 1) { BiPoly p; p.add_term(0, e, K(1)); return p; }
    static BiPoly term(int i, int j, K k) { BiPoly p; p.add_term(i, j, std::move(k)); return p; }

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{0, 0});
    }
    K constant_value() const {
        if (t_.empty()) return K(0);
        auto it = t_.find(Mono{0, 0});
        return it == t_.end() ? K(0) : it->second;
    }

    int deg_x() const {
        int d = -1;
        for (auto& [m, c] : t_) d = std::max(d, m.i);
        return d;
    }
    int deg_y() const {
        int d = -1;
        for (auto& [m, c] : t_) d = std::max(d, m.j);
        return d;
    }
    int total_deg() const { return t_.empty() ? -1 : t_.begin()->first.deg(); }

    const Mono& lead_mono() const { return t_.begin()->first; }
    const K& lead_coeff() const { return t_.begin()->second; }

    K coeff(int i, int j) const {
        auto it = t_.find(Mono{i, j});
        return it == t_.end() ? K(0) : it->second;
    }

    void add_term(int i, int j, K c) {
        if (folint::is_zero(c)) return;
        auto [it, ins] = t_.try_emplace(Mono{i, j}, c);
        if (!ins) {
            it->second += c;
            if (folint::is_zero(it->second)) t_.erase(it);
        }
    }

    friend BiPoly operator-(const BiPoly& p) {
        BiPoly r = p;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (auto& [m, c] : b.t_) r.add_term(m.i, m.j, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (auto& [m, c] : b.t_) r.add_term(m.i, m.j, -c);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (auto& [ma, ca] : a.t_)
            for (auto& [mb, cb] : b.t_)
                r.add_term(ma.i + mb.i, ma.j + mb.j, ca * cb);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const K& k) {
        if (folint::is_zero(k)) return BiPoly();
        BiPoly r = a;
        for (auto& [m, c] : r.t_) c = c * k;
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) { *this = *this + o; return *this; }
    BiPoly& operator-=(const BiPoly& o) { *this = *this - o; return *this; }
    BiPoly& operator*=(const BiPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        if (a.t_.size() != b.t_.size()) return false;
        auto ia = a.t_.begin(), ib = b.t_.begin();
        for (; ia != a.t_.end(); ++ia, ++ib)
            if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
        return true;
    }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly dx() const {
        BiPoly r;
        for (auto& [m, c] : t_)
            if (m.i > 0) r.add_term(m.i - 1, m.j, c * K(m.i));
        return r;
    }
    BiPoly dy() const {
        BiPoly r;
        for (auto& [m, c] : t_)
            if (m.j > 0) r.add_term(m.i, m.j - 1, c * K(m.j));
        return r;
    }

    K eval(const K& vx, const K& vy) const {
        K acc(0);
        for (auto& [m, c] : t_) {
            K p = c;
            for (int a = 0; a < m.i; ++a) p = p * vx;
            for (int a = 0; a < m.j; ++a) p = p * vy;
            acc += p;
        }
        return acc;
    }

    // Substitute y = c, result as univariate poly in x.
    UPoly<K> eval_y(const K& c) const {
        UPoly<K> r;
        for (auto& [m, co] : t_) {
            K p = co;
            for (int a = 0; a < m.j; ++a) p = p * c;
            if (r.c.size() < static_cast<size_t>(m.i + 1)) r.c.resize(m.i + 1, K(0));
            r.c[m.i] += p;
        }
        r.trim();
        return r;
    }
    UPoly<K> eval_x(const K& c) const {
        UPoly<K> r;
        for (auto& [m, co] : t_) {
            K p = co;
            for (int a = 0; a < m.i; ++a) p = p * c;
            if (r.c.size() < static_cast<size_t>(m.j + 1)) r.c.resize(m.j + 1, K(0));
            r.c[m.j] += p;
        }
        r.trim();
        return r;
    }

    BiPoly swap_vars() const {
        BiPoly r;
        for (auto& [m, c] : t_) r.add_term(m.j, m.i, c);
        return r;
    }

private:
    Map t_;
};

template <class K>
bool is_zero(const BiPoly<K>& p) { return p.is_zero(); }

template <class K>
BiPoly<K> bipoly_pow(const BiPoly<K>& p, long e) {
    BiPoly<K> r = BiPoly<K>::one(), b = p;
    while (e) {
        if (e & 1) r *= b;
        if (e >>= 1) b *= b;
    }
    return r;
}

// Recursive views: index = degree in the main variable, entry = poly in the
// other variable.
template <class K>
std::vector<UPoly<K>> bipoly_xrec(const BiPoly<K>& p) {
    std::vector<UPoly<K>> v(std::max(0, p.deg_x() + 1));
    for (auto& [m, c] : p.terms()) {
        auto& u = v[m.i];
        if (u.c.size() < static_cast<size_t>(m.j + 1)) u.c.resize(m.j + 1, K(0));
        u.c[m.j] += c;
    }
    for (auto& u : v) u.trim();
    return v;
}

template <class K>
std::vector<UPoly<K>> bipoly_yrec(const BiPoly<K>& p) {
    std::vector<UPoly<K>> v(std::max(0, p.deg_y() + 1));
    for (auto& [m, c] : p.terms()) {
        auto& u = v[m.j];
        if (u.c.size() < static_cast<size_t>(m.i + 1)) u.c.resize(m.i + 1, K(0));
        u.c[m.i] += c;
    }
    for (auto& u : v) u.trim();
    return v;
}

template <class K>
BiPoly<K> bipoly_from_xrec(const std::vector<UPoly<K>>& v) {
    BiPoly<K> p;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < v[i].c.size(); ++j)
            p.add_term(static_cast<int>(i), static_cast<int>(j), v[i].c[j]);
    return p;
}

template <class K>
BiPoly<K> bipoly_from_yrec(const std::vector<UPoly<K>>& v) {
    BiPoly<K> p;
    for (size_t j = 0; j < v.size(); ++j)
        for (size_t i = 0; i < v[j].c.size(); ++i)
            p.add_term(static_cast<int>(i), static_cast<int>(j), v[j].c[i]);
    return p;
}

template <class K>
BiPoly<K> bipoly_from_upoly_x(const UPoly<K>& u) {
    BiPoly<K> p;
    for (size_t i = 0; i < u.c.size(); ++i) p.add_term(static_cast<int>(i), 0, u.c[i]);
    return p;
}

template <class K>
BiPoly<K> bipoly_from_upoly_y(const UPoly<K>& u) {
    BiPoly<K> p;
    for (size_t j = 0; j < u.c.size(); ++j) p.add_term(0, static_cast<int>(j), u.c[j]);
    return p;
}

// Exact division test in graded-lex; returns quotient iff g | f.
template <class K>
std::optional<BiPoly<K>> bipoly_divide(const BiPoly<K>& f, const BiPoly<K>& g) {
    if (g.is_zero()) throw DivisionByZero("BiPoly divide by zero");
    BiPoly<K> q, r = f;
    const Mono& lg = g.lead_mono();
    const K& cg = g.lead_coeff();
    while (!r.is_zero()) {
        const Mono& lr = r.lead_mono();
        if (lr.i < lg.i || lr.j < lg.j) return std::nullopt;
        K c = r.lead_coeff() / cg;
        int di = lr.i - lg.i, dj = lr.j - lg.j;
        q.add_term(di, dj, c);
        r -= BiPoly<K>::term(di, dj, c) * g;
    }
    return q;
}

template <class K>
bool bipoly_divides(const BiPoly<K>& g, const BiPoly<K>& f) {
    if (f.is_zero()) return true;
    if (g.is_zero()) return false;
    return bipoly_divide(f, g).has_value();
}

// Pseudo-division in y: lc_y(b)^delta * a = q*b + r with deg_y r < deg_y b.
template <class K>
void bipoly_pseudo_divmod_y(const BiPoly<K>& a, const BiPoly<K>& b,
                            BiPoly<K>& q, BiPoly<K>& r, int& delta) {
    int db = b.deg_y();
    if (db < 0) throw DivisionByZero("pseudo divmod by zero");
    auto brec = bipoly_yrec(b);
    BiPoly<K> lcb = bipoly_from_upoly_x(brec[db]);
    q = BiPoly<K>::zero();
    r = a;
    delta = 0;
    while (!r.is_zero() && r.deg_y() >= db) {
        int dr = r.deg_y();
        auto rrec = bipoly_yrec(r);
        BiPoly<K> lcr = bipoly_from_upoly_x(rrec[dr]);
        // r <- lcb*r - lcr*y^(dr-db)*b
        q = q * lcb + BiPoly<K>::term(0, dr - db, K(1)) * lcr;
        r = r * lcb - BiPoly<K>::term(0, dr - db, K(1)) * lcr * b;
        ++delta;
    }
}

// Content of p as a polynomial in main variable x: gcd over K[y] of the
// x-coefficients (monic normalization).
template <class K>
UPoly<K> bipoly_content_x(const BiPoly<K>& p, UPoly<K> (*ugcd)(const UPoly<K>&, const UPoly<K>&)) {
    UPoly<K> g;
    for (auto& u : bipoly_xrec(p)) {
        if (u.is_zero()) continue;
        g = g.is_zero() ? u.monic() : ugcd(g, u);
        if (g.degree() == 0) return UPoly<K>::one();
    }
    return g.is_zero() ? UPoly<K>::one() : g;
}

namespace detail {
template <class K> inline UPoly<K> field_ugcd(const UPoly<K>& a, const UPoly<K>& b) { return upoly_gcd(a, b); }
template <> inline UPoly<Rat> field_ugcd<Rat>(const UPoly<Rat>& a, const UPoly<Rat>& b) { return upoly_gcd_rat(a, b); }
} // namespace detail

// gcd over K[x,y] up to a constant: content/primitive split in x plus a
// primitive pseudo-remainder sequence, with a cheap evaluation probe for the
// (common) coprime case. Result is primitive with monic leading coefficient.
template <class K>
BiPoly<K> bipoly_gcd(const BiPoly<K>& A, const BiPoly<K>& B);

// Rational-specific normalization helpers.
Rat bipoly_rat_content(const BiPoly<Rat>& p);           // c with p/c integer, coprime, positive lead
BiPoly<Rat> bipoly_rat_primitive(const BiPoly<Rat>& p); // p / content

namespace detail {

template <class K>
BiPoly<K> strip_content_x(const BiPoly<K>& p) {
    if (p.is_zero()) return p;
    UPoly<K> c = bipoly_content_x<K>(p, &field_ugcd<K>);
    if (c.degree() <= 0) return p;
    auto q = bipoly_divide(p, bipoly_from_upoly_y(c));
    return *q;
}

// gcd of x-primitive inputs with deg_x >= 1 via a primitive PRS in x.
template <class K>
BiPoly<K> prim_gcd_x(BiPoly<K> a, BiPoly<K> b) {
    auto sw = [](const BiPoly<K>& p) { return p.swap_vars(); };
    // probe a y-evaluation: constant gcd there certifies coprime primitive parts
    auto lca = bipoly_xrec(a).back();
    auto lcb = bipoly_xrec(b).back();
    for (long c0 = 2; c0 < 40; ++c0) {
        K c(c0);
        if (folint::is_zero(lca.eval(c)) || folint::is_zero(lcb.eval(c))) continue;
        UPoly<K> g1 = field_ugcd<K>(a.eval_y(c), b.eval_y(c));
        if (g1.degree() == 0) return BiPoly<K>::one();
        break;
    }
    if (a.deg_x() < b.deg_x()) std::swap(a, b);
    while (!b.is_zero()) {
        BiPoly<K> q, r;
        int delta;
        // pseudo-division in x == pseudo-division in y of the swapped polys
        bipoly_pseudo_divmod_y(sw(a), sw(b), q, r, delta);
        a = std::move(b);
        b = strip_content_x(sw(r));
        if (!b.is_zero() && b.deg_x() == 0) {
            // x-degree 0 remainder: primitive parts are coprime in x
            return BiPoly<K>::one();
        }
    }
    return strip_content_x(a);
}

} // namespace detail

template <class K>
BiPoly<K> bipoly_gcd(const BiPoly<K>& A, const BiPoly<K>& B) {
    if (A.is_zero()) return B.is_zero() ? B : bipoly_monic(B);
    if (B.is_zero()) return bipoly_monic(A);
    if (A.is_constant() || B.is_constant()) return BiPoly<K>::one();
    // purely univariate cases
    if (A.deg_x() == 0 && B.deg_x() == 0)
        return bipoly_from_upoly_y(detail::field_ugcd<K>(A.eval_x(K(0)), B.eval_x(K(0))));
    if (A.deg_y() == 0 && B.deg_y() == 0)
        return bipoly_from_upoly_x(detail::field_ugcd<K>(A.eval_y(K(0)), B.eval_y(K(0))));
    bool swapped = A.deg_x() + B.deg_x() > A.deg_y() + B.deg_y();
    BiPoly<K> a = swapped ? A.swap_vars() : A;
    BiPoly<K> b = swapped ? B.swap_vars() : B;
    UPoly<K> ca = bipoly_content_x<K>(a, &detail::field_ugcd<K>);
    UPoly<K> cb = bipoly_content_x<K>(b, &detail::field_ugcd<K>);
    UPoly<K> cg = detail::field_ugcd<K>(ca, cb);
    BiPoly<K> ap = detail::strip_content_x(a);
    BiPoly<K> bp = detail::strip_content_x(b);
    BiPoly<K> g;
    if (ap.deg_x() == 0 || bp.deg_x() == 0)
        g = BiPoly<K>::one();
    else
        g = detail::prim_gcd_x(ap, bp);
    g = g * bipoly_from_upoly_y(cg);
    if (swapped) g = g.swap_vars();
    return bipoly_monic(g);
}

template <class K>
BiPoly<K> bipoly_monic(const BiPoly<K>& p) {
    if (p.is_zero()) return p;
    return p * (K(1) / p.lead_coeff());
}

// --- canonical text form --------------------------------------------------

namespace detail {
inline bool coeff_is_negative(const Rat& c) { return sgn(c) < 0; }
inline Rat coeff_abs(const Rat& c) { return abs(c); }
inline bool coeff_is_negative(const Quad& c) { return c.rational() ? sgn(c.a()) < 0 : false; }
inline Quad coeff_abs(const Quad& c) { return coeff_is_negative(c) ? -c : c; }
inline bool coeff_needs_parens(const Rat&) { return false; }
inline bool coeff_needs_parens(const Quad& c) { return !c.rational(); }
} // namespace detail

template <class K>
std::string to_string(const BiPoly<K>& p, const char* vx = "x", const char* vy = "y") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        K a = c;
        if (detail::coeff_is_negative(c)) {
            os << "-";
            a = detail::coeff_abs(c);
        } else if (!first) {
            os << "+";
        }
        bool have_vars = m.i > 0 || m.j > 0;
        bool unit = is_one(a);
        if (!unit || !have_vars) {
            if (detail::coeff_needs_parens(a)) os << "(" << to_string(a) << ")";
            else os << to_string(a);
            if (have_vars) os << "*";
        }
        if (m.i > 0) {
            os << vx;
            if (m.i > 1) os << "^" << m.i;
            if (m.j > 0) os << "*";
        }
        if (m.j > 0) {
            os << vy;
            if (m.j > 1) os << "^" << m.j;
        }
        first = false;
    }
    return os.str();
}

} // namespace folint
