#include "folint/factor.hpp"
#include <algorithm>
#include <numeric>

namespace folint {

namespace {

// --- F_p univariate arithmetic (p < 2^31) ----------------------------------

using u64 = std::uint64_t;

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return (unsigned __int128)a * b % p; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a % p, p - 2); }
};

using FpPoly = std::vector<u64>; // coeff of t^i, no trailing zeros

void fp_trim(FpPoly& f) { while (!f.empty() && f.back() == 0) f.pop_back(); }

FpPoly fp_mul(const Fp& F, const FpPoly& a, const FpPoly& b) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return r;
}

FpPoly fp_mod(const Fp& F, FpPoly a, const FpPoly& m) {
    int dm = static_cast<int>(m.size()) - 1;
    u64 linv = F.inv(m.back());
    while (static_cast<int>(a.size()) - 1 >= dm) {
        u64 c = F.mul(a.back(), linv);
        int k = static_cast<int>(a.size()) - 1 - dm;
        for (int i = 0; i <= dm; ++i)
            a[i + k] = F.sub(a[i + k], F.mul(c, m[i]));
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

FpPoly fp_divexact(const Fp& F, FpPoly a, const FpPoly& d) {
    int dd = static_cast<int>(d.size()) - 1;
    u64 linv = F.inv(d.back());
    FpPoly q(a.size() - d.size() + 1, 0);
    while (static_cast<int>(a.size()) - 1 >= dd && !a.empty()) {
        u64 c = F.mul(a.back(), linv);
        int k = static_cast<int>(a.size()) - 1 - dd;
        q[k] = c;
        for (int i = 0; i <= dd; ++i)
            a[i + k] = F.sub(a[i + k], F.mul(c, d[i]));
        fp_trim(a);
    }
    return q;
}

FpPoly fp_gcd(const Fp& F, FpPoly a, FpPoly b) {
    while (!b.empty()) {
        FpPoly r = fp_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        u64 linv = F.inv(a.back());
        for (auto& c : a) c = F.mul(c, linv);
    }
    return a;
}

FpPoly fp_powmod(const Fp& F, FpPoly a, Int e, const FpPoly& m) {
    FpPoly r = {1};
    a = fp_mod(F, a, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fp_mod(F, fp_mul(F, r, a), m);
        e >>= 1;
        if (e > 0) a = fp_mod(F, fp_mul(F, a, a), m);
    }
    return r;
}

FpPoly fp_derivative(const Fp& F, const FpPoly& a) {
    FpPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(a[i], i % F.p));
    fp_trim(r);
    return r;
}

// Cantor-Zassenhaus factorization of a squarefree monic polynomial mod p.
void fp_equal_degree(const Fp& F, const FpPoly& f, int d, std::vector<FpPoly>& out, u64& rngstate) {
    int n = static_cast<int>(f.size()) - 1;
    if (n == d) {
        out.push_back(f);
        return;
    }
    Int e = (int_pow(Int(static_cast<unsigned long>(F.p)), d) - 1) / 2;
    for (;;) {
        FpPoly a(n, 0);
        for (int i = 0; i < n; ++i) {
            rngstate = rngstate * 6364136223846793005ULL + 1442695040888963407ULL;
            a[i] = (rngstate >> 16) % F.p;
        }
        fp_trim(a);
        if (a.size() <= 1) continue;
        FpPoly g = fp_gcd(F, f, a);
        if (g.size() > 1 && g.size() < f.size()) {
            FpPoly h = fp_divexact(F, f, g);
            fp_equal_degree(F, g, d, out, rngstate);
            fp_equal_degree(F, h, d, out, rngstate);
            return;
        }
        FpPoly b = fp_powmod(F, a, e, f);
        if (b.empty()) continue;
        b[0] = F.sub(b[0], 1);
        fp_trim(b);
        g = fp_gcd(F, f, b);
        if (g.size() > 1 && g.size() < f.size()) {
            FpPoly h = fp_divexact(F, f, g);
            fp_equal_degree(F, g, d, out, rngstate);
            fp_equal_degree(F, h, d, out, rngstate);
            return;
        }
    }
}

std::vector<FpPoly> fp_factor_squarefree(const Fp& F, FpPoly f) {
    // distinct degree, then equal degree splits
    std::vector<FpPoly> out;
    u64 rngstate = 0x9e3779b97f4a7c15ULL;
    if (f.back() != 1) {
        u64 linv = F.inv(f.back());
        for (auto& c : f) c = F.mul(c, linv);
    }
    FpPoly h = {0, 1}; // t
    FpPoly v = f;
    int d = 0;
    while (static_cast<int>(v.size()) - 1 > 0) {
        ++d;
        if (2 * d > static_cast<int>(v.size()) - 1) {
            out.push_back(v);
            break;
        }
        h = fp_powmod(F, h, Int(static_cast<unsigned long>(F.p)), v);
        FpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = F.sub(hx[1], 1); // h - t
        fp_trim(hx);
        FpPoly g = fp_gcd(F, v, hx);
        if (g.size() > 1) {
            fp_equal_degree(F, g, d, out, rngstate);
            v = fp_divexact(F, v, g);
            h = fp_mod(F, h, v);
        }
    }
    return out;
}

// --- Z[t] helpers -----------------------------------------------------------

using ZPoly = std::vector<Int>;

void ztrim(ZPoly& v) { while (!v.empty() && v.back() == 0) v.pop_back(); }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

bool zdivides(const ZPoly& d, const ZPoly& a, ZPoly* quot = nullptr) {
    if (a.empty()) { if (quot) quot->clear(); return true; }
    if (d.empty()) return false;
    ZPoly r = a, q(a.size(), 0);
    while (!r.empty() && r.size() >= d.size()) {
        Int c = r.back() / d.back();
        if (c * d.back() != r.back()) return false;
        int k = static_cast<int>(r.size() - d.size());
        q[k] = c;
        for (size_t i = 0; i < d.size(); ++i) r[i + k] -= c * d[i];
        ztrim(r);
    }
    if (!r.empty()) return false;
    ztrim(q);
    if (quot) *quot = q;
    return true;
}

ZPoly upoly_to_z(const UPoly<Rat>& p, Rat* content) {
    std::vector<Int> num;
    Int den;
    upoly_clear_denominators(p, num, den);
    Int g = ivec_content(num);
    if (g == 0) g = 1;
    for (auto& x : num) x /= g;
    if (!num.empty() && num.back() < 0) {
        for (auto& x : num) x = -x;
        g = -g;
    }
    if (content) *content = rat(g, den);
    return num;
}

UPoly<Rat> z_to_upoly(const ZPoly& z) {
    UPoly<Rat> p;
    p.c.reserve(z.size());
    for (auto& x : z) p.c.emplace_back(Rat(x));
    p.trim();
    return p;
}

Int zpoly_maxnorm(const ZPoly& f) {
    Int m = 0;
    for (auto& c : f) { Int a = abs(c); if (a > m) m = a; }
    return m;
}

// Zassenhaus factorization of a primitive squarefree f in Z[t], deg >= 1.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
    int n = static_cast<int>(f.size()) - 1;
    if (n == 1) return {f};
    // choose p: lc not divisible, squarefree mod p
    u64 p = 0;
    Fp F{};
    FpPoly fp;
    for (u64 cand = (1u << 29) + 3;; cand += 2) {
        bool prime = true;
        for (u64 d = 3; d * d <= cand; d += 2)
            if (cand % d == 0) { prime = false; break; }
        if (!prime) continue;
        F.p = cand;
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(cand))) continue;
        fp.assign(f.size(), 0);
        for (size_t i = 0; i < f.size(); ++i) {
            Int m = f[i] % Int(static_cast<unsigned long>(cand));
            if (m < 0) m += Int(static_cast<unsigned long>(cand));
            fp[i] = m.get_ui();
        }
        fp_trim(fp);
        FpPoly g = fp_gcd(F, fp, fp_derivative(F, fp));
        if (g.size() == 1) { p = cand; break; }
    }
    std::vector<FpPoly> mods = fp_factor_squarefree(F, fp);
    std::sort(mods.begin(), mods.end());
    if (mods.size() == 1) return {f};

    // lift bound: factors have coefficients bounded by 2^n * sqrt(n+1) * maxnorm * |lc|
    Int bound = zpoly_maxnorm(f) * abs(f.back()) * int_pow(Int(2), n + 2) * Int(n + 1);
    Int pk(static_cast<unsigned long>(p));
    int k = 1;
    while (pk <= 2 * bound) { pk *= Int(static_cast<unsigned long>(p)); ++k; }

    // linear Hensel lift of all factors simultaneously
    size_t r = mods.size();
    std::vector<ZPoly> u(r);
    for (size_t i = 0; i < r; ++i) {
        u[i].assign(mods[i].size(), 0);
        for (size_t j = 0; j < mods[i].size(); ++j) u[i][j] = Int(static_cast<unsigned long>(mods[i][j]));
    }
    // Bezout basis mod p: s_i * prod_{j!=i} u_j = 1 mod (p, u_i)
    std::vector<FpPoly> bez(r);
    for (size_t i = 0; i < r; ++i) {
        FpPoly prod = {1};
        for (size_t j = 0; j < r; ++j)
            if (j != i) prod = fp_mod(F, fp_mul(F, prod, mods[j]), mods[i]);
        // invert prod modulo mods[i] by extended euclid in F_p[t]
        FpPoly r0 = mods[i], r1 = prod, t0 = {}, t1 = {1};
        while (!r1.empty() && r1.size() > 1) {
            // q = r0 / r1
            FpPoly q = fp_divexact(F, [&] {
                FpPoly tmp = r0;
                FpPoly rem = fp_mod(F, tmp, r1);
                // r0 = q*r1 + rem -> q = (r0 - rem)/r1
                ZPoly dummy;
                (void)dummy;
                FpPoly diff = r0;
                diff.resize(std::max(diff.size(), rem.size()), 0);
                for (size_t z = 0; z < rem.size(); ++z) diff[z] = F.sub(diff[z], rem[z]);
                fp_trim(diff);
                return diff;
            }(), r1);
            FpPoly newr = fp_mod(F, r0, r1);
            FpPoly qt1 = fp_mul(F, q, t1);
            FpPoly newt = t0;
            newt.resize(std::max(newt.size(), qt1.size()), 0);
            for (size_t z = 0; z < qt1.size(); ++z) newt[z] = F.sub(newt[z], qt1[z]);
            fp_trim(newt);
            r0 = std::move(r1); r1 = std::move(newr);
            t0 = std::move(t1); t1 = std::move(newt);
        }
        // r1 is a nonzero constant (coprimality), scale
        u64 c = F.inv(r1.empty() ? 1 : r1[0]);
        for (auto& x : t1) x = F.mul(x, c);
        bez[i] = t1;
    }

    Int lc = f.back();
    Int lcinv_p; // lc^{-1} mod p
    {
        Fp Fl{p};
        Int m = lc % Int(static_cast<unsigned long>(p));
        if (m < 0) m += Int(static_cast<unsigned long>(p));
        lcinv_p = Int(static_cast<unsigned long>(Fl.inv(m.get_ui())));
    }

    Int pj(static_cast<unsigned long>(p));
    Int P(static_cast<unsigned long>(p));
    for (int step = 1; step < k; ++step) {
        // error e = (f - lc * prod u_i) / p^step mod p
        ZPoly prod = {lc};
        for (auto& ui : u) prod = zmul(prod, ui);
        ZPoly err = f;
        err.resize(std::max(err.size(), prod.size()), 0);
        for (size_t i = 0; i < prod.size(); ++i) err[i] -= prod[i];
        ztrim(err);
        FpPoly e;
        e.reserve(err.size());
        for (auto& c : err) {
            Int q = c / pj;
            Int m = q % P;
            if (m < 0) m += P;
            e.push_back(m.get_ui());
        }
        fp_trim(e);
        if (!e.empty()) {
            for (size_t i = 0; i < r; ++i) {
                FpPoly di = fp_mod(F, fp_mul(F, e, bez[i]), mods[i]);
                // scale by lc^{-1}
                u64 li = static_cast<u64>(lcinv_p.get_ui());
                for (auto& x : di) x = F.mul(x, li);
                if (di.empty()) continue;
                if (u[i].size() < di.size()) u[i].resize(di.size(), 0);
                for (size_t z = 0; z < di.size(); ++z) {
                    Int add = Int(static_cast<unsigned long>(di[z])) * pj;
                    u[i][z] += add;
                }
            }
        }
        pj *= P;
    }
    // symmetric remainder mod p^k
    auto sym = [&](ZPoly v) {
        for (auto& c : v) {
            c %= pj;
            if (c < 0) c += pj;
            if (2 * c > pj) c -= pj;
        }
        ztrim(v);
        return v;
    };

    // recombination
    std::vector<ZPoly> out;
    std::vector<int> live(r);
    std::iota(live.begin(), live.end(), 0);
    ZPoly rem = f;
    size_t card = 1;
    while (2 * card <= live.size()) {
        bool found = false;
        std::vector<int> idx(card);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            ZPoly cand = {rem.back()};
            for (size_t t = 0; t < card; ++t) {
                cand = zmul(cand, u[live[idx[t]]]);
                cand = sym(cand);
            }
            // primitive part
            Int g = ivec_content(cand);
            if (g != 0 && g != 1) for (auto& c : cand) c /= g;
            if (!cand.empty() && cand.back() < 0) for (auto& c : cand) c = -c;
            ZPoly quot;
            if (cand.size() > 1 && zdivides(cand, rem, &quot)) {
                out.push_back(cand);
                rem = quot;
                std::vector<int> nl;
                for (size_t t2 = 0, ti = 0; t2 < live.size(); ++t2) {
                    if (ti < card && static_cast<int>(t2) == idx[ti]) { ++ti; continue; }
                    nl.push_back(live[t2]);
                }
                live = std::move(nl);
                found = true;
                break;
            }
            // next combination
            int pos = static_cast<int>(card) - 1;
            while (pos >= 0 && idx[pos] == static_cast<int>(live.size() - card + pos)) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t t2 = pos + 1; t2 < card; ++t2) idx[t2] = idx[t2 - 1] + 1;
        }
        if (!found) ++card;
    }
    if (rem.size() > 1) out.push_back([&] {
        ZPoly v = rem;
        Int g = ivec_content(v);
        if (g != 0 && g != 1) for (auto& c : v) c /= g;
        if (!v.empty() && v.back() < 0) for (auto& c : v) c = -c;
        return v;
    }());
    return out;
}

} // namespace

UFactorization factor_upoly_q(const UPoly<Rat>& p) {
    UFactorization out;
    out.content = Rat(1);
    if (p.degree() <= 0) {
        out.content = p.is_zero() ? Rat(0) : p.c[0];
        return out;
    }
    Rat cont;
    ZPoly z = upoly_to_z(p, &cont);
    out.content = cont;
    // squarefree decomposition over Q first
    auto sq = upoly_squarefree(z_to_upoly(z));
    // account for the monic normalization constant inside squarefree
    UPoly<Rat> check = UPoly<Rat>::one();
    for (auto& [fpart, mult] : sq) {
        Rat c2;
        ZPoly zf = upoly_to_z(fpart, &c2);
        auto irr = zassenhaus(zf);
        std::sort(irr.begin(), irr.end(), [](const ZPoly& a, const ZPoly& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            for (size_t i = a.size(); i-- > 0;)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;
        });
        for (auto& zi : irr)
            out.factors.push_back({z_to_upoly(zi), mult});
    }
    // fix content so that content * prod factors^mult == p
    UPoly<Rat> prod = UPoly<Rat>::one();
    for (auto& [f, m] : out.factors) prod *= upoly_pow(f, m);
    // p = c * prod -> c = lc(p)/lc(prod)
    out.content = p.lc() / prod.lc();
    return out;
}

namespace {

// truncated power series in z with UPoly<Rat> (in x) coefficients
using XSeries = std::vector<UPoly<Rat>>;

XSeries xs_mul(const XSeries& a, const XSeries& b, int K) {
    XSeries r(K);
    for (int i = 0; i < K && i < static_cast<int>(a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j + i < K && j < static_cast<int>(b.size()); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

// inverse of a scalar (x-degree 0) series with nonzero constant term
XSeries xs_scalar_inv(const XSeries& a, int K) {
    XSeries r(K);
    Rat a0 = a[0].coeff(0);
    Rat inv0 = 1 / a0;
    r[0] = UPoly<Rat>(inv0);
    for (int n = 1; n < K; ++n) {
        Rat acc(0);
        for (int i = 1; i <= n && i < static_cast<int>(a.size()); ++i)
            acc += a[i].coeff(0) * r[n - i].coeff(0);
        r[n] = UPoly<Rat>(-acc * inv0);
    }
    return r;
}

QPoly xseries_to_bipoly_shift(const XSeries& s, const Rat& c) {
    // sum_k s_k(x) (y-c)^k
    QPoly acc;
    QPoly ymc = QPoly::y() - QPoly(Rat(c));
    QPoly pw = QPoly::one();
    for (size_t k = 0; k < s.size(); ++k) {
        if (!s[k].is_zero()) {
            QPoly xs;
            for (size_t i = 0; i < s[k].c.size(); ++i)
                xs.add_term(static_cast<int>(i), 0, s[k].c[i]);
            acc += xs * pw;
        }
        pw *= ymc;
    }
    return acc;
}

// factor a primitive (in x) squarefree bivariate with deg_x >= 1
std::vector<QPoly> factor_biv_squarefree(const QPoly& S) {
    if (S.deg_y() <= 0) {
        auto uf = factor_upoly_q(S.eval_y(Rat(0)));
        std::vector<QPoly> out;
        for (auto& [f, m] : uf.factors)
            for (int i = 0; i < m; ++i) out.push_back(bipoly_from_upoly_x(f));
        return out;
    }
    auto xr = bipoly_xrec(S);
    UPoly<Rat> ell = xr.back(); // lc_x(S) in y
    // good evaluation point
    Rat c;
    UPoly<Rat> u0;
    for (long cc = 0;; cc = cc > 0 ? -cc : -cc + 1) {
        c = Rat(cc);
        if (is_zero(ell.eval(c))) continue;
        u0 = S.eval_y(c);
        UPoly<Rat> g = upoly_gcd_rat(u0, u0.derivative());
        if (g.degree() == 0) break;
    }
    auto uf = factor_upoly_q(u0);
    if (uf.factors.size() == 1) return {bipoly_rat_primitive(S)};

    int K = S.deg_y() + std::max(0, ell.degree()) + 1;
    // shift to z = y - c: represent S as series in z (exact, polynomial)
    XSeries Sz(K);
    {
        // S(x, z+c) via repeated Taylor: coefficient of z^k is (1/k!) d^k/dy^k S at y=c
        QPoly cur = S;
        Rat fact(1);
        for (int k = 0; k < K; ++k) {
            if (k > 0) {
                cur = cur.dy();
                fact *= Rat(k);
            }
            Sz[k] = cur.eval_y(c) * (1 / fact);
        }
    }
    XSeries ellz(K);
    {
        UPoly<Rat> cur = ell;
        Rat fact(1);
        for (int k = 0; k < K; ++k) {
            if (k > 0) {
                cur = cur.derivative();
                fact *= Rat(k);
            }
            ellz[k] = UPoly<Rat>(cur.eval(c) * (1 / fact));
        }
    }
    XSeries Shat = xs_mul(Sz, xs_scalar_inv(ellz, K), K); // monic in x over Q[[z]]

    // initial monic univariate factors
    size_t r = uf.factors.size();
    std::vector<UPoly<Rat>> u(r);
    for (size_t i = 0; i < r; ++i) u[i] = uf.factors[i].first.monic();
    // Bezout basis: s_i * prod_{j != i} u_j == 1 mod u_i
    std::vector<UPoly<Rat>> bez(r);
    for (size_t i = 0; i < r; ++i) {
        UPoly<Rat> prod = UPoly<Rat>::one();
        for (size_t j = 0; j < r; ++j)
            if (j != i) prod = (prod * u[j]) % u[i];
        bez[i] = upoly_invmod(prod, u[i]);
    }
    // linear lift in z
    std::vector<XSeries> fz(r);
    for (size_t i = 0; i < r; ++i) {
        fz[i].assign(K, UPoly<Rat>());
        fz[i][0] = u[i];
    }
    for (int step = 1; step < K; ++step) {
        XSeries prod(K);
        prod[0] = UPoly<Rat>::one();
        for (size_t i = 0; i < r; ++i) prod = xs_mul(prod, fz[i], K);
        UPoly<Rat> e = Shat[step] - prod[step];
        if (e.is_zero()) continue;
        for (size_t i = 0; i < r; ++i) {
            UPoly<Rat> di = (e * bez[i]) % u[i];
            if (!di.is_zero()) fz[i][step] = fz[i][step] + di;
        }
        // re-check: after updating all factors, error at this order clears
        // because cross terms appear only at higher orders
    }

    // recombination
    std::vector<QPoly> out;
    std::vector<int> live(r);
    std::iota(live.begin(), live.end(), 0);
    QPoly rem = bipoly_rat_primitive(S);
    size_t card = 1;
    XSeries ellz_series = ellz;
    while (2 * card <= live.size()) {
        bool found = false;
        std::vector<int> idx(card);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            XSeries cand = ellz_series;
            for (size_t t = 0; t < card; ++t) cand = xs_mul(cand, fz[live[idx[t]]], K);
            QPoly C = bipoly_rat_primitive(xseries_to_bipoly_shift(cand, c));
            if (!C.is_constant() && bipoly_divides(C, rem)) {
                out.push_back(C);
                rem = *bipoly_divide(rem, C);
                std::vector<int> nl;
                for (size_t t2 = 0, ti = 0; t2 < live.size(); ++t2) {
                    if (ti < card && static_cast<int>(t2) == idx[ti]) { ++ti; continue; }
                    nl.push_back(live[t2]);
                }
                live = std::move(nl);
                found = true;
                break;
            }
            int pos = static_cast<int>(card) - 1;
            while (pos >= 0 && idx[pos] == static_cast<int>(live.size() - card + pos)) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t t2 = pos + 1; t2 < card; ++t2) idx[t2] = idx[t2 - 1] + 1;
        }
        if (!found) ++card;
    }
    if (!rem.is_constant()) out.push_back(bipoly_rat_primitive(rem));
    return out;
}

} // namespace

bool bipoly_canonical_less(const QPoly& a, const QPoly& b) {
    if (a.total_deg() != b.total_deg()) return a.total_deg() < b.total_deg();
    auto ia = a.terms().begin(), ib = b.terms().begin();
    MonoGrlexDesc cmp;
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (!(ia->first == ib->first)) return cmp(ib->first, ia->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return a.terms().size() < b.terms().size();
}

QFactorization factor_over_Q(const QPoly& p) {
    QFactorization out;
    if (p.is_zero()) throw std::invalid_argument("factor_over_Q: zero polynomial");
    out.content = Rat(1);
    if (p.is_constant()) {
        out.content = p.constant_value();
        return out;
    }
    QPoly w = bipoly_rat_primitive(p);
    // split off the pure-y content (gcd of x-coefficients)
    UPoly<Rat> conty = bipoly_content_x<Rat>(w, &upoly_gcd_rat);
    if (conty.degree() > 0) {
        auto uf = factor_upoly_q(conty);
        for (auto& [f, m] : uf.factors)
            out.factors.push_back({bipoly_from_upoly_y(f), m});
        w = *bipoly_divide(w, bipoly_from_upoly_y(conty));
    }
    if (w.deg_x() >= 1 || w.deg_y() >= 1) {
        if (w.deg_x() == 0) {
            auto uf = factor_upoly_q(w.eval_x(Rat(0)));
            for (auto& [f, m] : uf.factors)
                out.factors.push_back({bipoly_from_upoly_y(f), m});
        } else {
            // squarefree levels in x (every factor of w depends on x)
            QPoly a = w;
            QPoly g = bipoly_gcd(a, a.dx());
            if (g.is_constant()) {
                for (auto& f : factor_biv_squarefree(a)) out.factors.push_back({f, 1});
            } else {
                QPoly bpart = *bipoly_divide(a, g);
                QPoly cpart = *bipoly_divide(a.dx(), g);
                QPoly d = cpart - bpart.dx();
                int i = 1;
                while (!bpart.is_constant()) {
                    QPoly f = bipoly_gcd(bpart, d);
                    if (!f.is_constant())
                        for (auto& irr : factor_biv_squarefree(bipoly_rat_primitive(f)))
                            out.factors.push_back({irr, i});
                    bpart = *bipoly_divide(bpart, f);
                    cpart = *bipoly_divide(d, f);
                    d = cpart - bpart.dx();
                    ++i;
                }
            }
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& A, const auto& B) { return bipoly_canonical_less(A.first, B.first); });
    // content such that content * prod factors^mult == p exactly
    QPoly prod = QPoly::one();
    for (auto& [f, m] : out.factors) prod *= bipoly_pow(f, m);
    out.content = p.lead_coeff() / prod.lead_coeff();
    return out;
}

QPoly bipoly_squarefree_part(const QPoly& p) {
    auto f = factor_over_Q(p);
    QPoly r = QPoly::one();
    for (auto& [q, m] : f.factors) r *= q;
    return r;
}

} // namespace folint
