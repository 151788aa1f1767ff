#include "folint/bipoly.hpp"

namespace folint {

namespace {

void ztrim(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// lc(b)^delta * a = q*b + r over Z; only r is needed.
std::vector<Int> zprem(std::vector<Int> a, const std::vector<Int>& b) {
    int db = static_cast<int>(b.size()) - 1;
    const Int& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int k = static_cast<int>(a.size()) - 1 - db;
        Int la = a.back();
        for (auto& x : a) x *= lb;
        for (int i = 0; i <= db; ++i) a[i + k] -= la * b[i];
        ztrim(a);
    }
    return a;
}

void zprimitive(std::vector<Int>& v) {
    Int g = ivec_content(v);
    if (g == 0 || g == 1) return;
    for (auto& x : v) x /= g;
}

} // namespace

UPoly<Rat> upoly_gcd_rat(const UPoly<Rat>& a, const UPoly<Rat>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Int> za, zb;
    Int d;
    upoly_clear_denominators(a, za, d);
    upoly_clear_denominators(b, zb, d);
    zprimitive(za);
    zprimitive(zb);
    if (za.size() < zb.size()) std::swap(za, zb);
    while (!zb.empty()) {
        std::vector<Int> r = zprem(za, zb);
        zprimitive(r);
        za = std::move(zb);
        zb = std::move(r);
    }
    UPoly<Rat> g;
    g.c.reserve(za.size());
    for (auto& x : za) g.c.emplace_back(Rat(x));
    g.trim();
    return g.monic();
}

Rat bipoly_rat_content(const BiPoly<Rat>& p) {
    if (p.is_zero()) return Rat(1);
    Int den = 1;
    for (auto& [m, c] : p.terms()) den = int_lcm(den, c.get_den());
    Int g = 0;
    for (auto& [m, c] : p.terms()) {
        g = int_gcd(g, Int(c.get_num() * (den / c.get_den())));
        if (g == 1) break;
    }
    Rat content = rat(g, den);
    if (sgn(p.lead_coeff()) < 0) content = -content;
    return content;
}

BiPoly<Rat> bipoly_rat_primitive(const BiPoly<Rat>& p) {
    if (p.is_zero()) return p;
    return p * (1 / bipoly_rat_content(p));
}

} // namespace folint
