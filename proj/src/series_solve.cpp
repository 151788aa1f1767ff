#include "folint/series_solve.hpp"
#ifdef _OPENMP
#include <omp.h>
#endif

namespace folint {

namespace {

// dual integer a + eps*b mod eps^2
struct DInt {
    Int v, e;
};

// Series container with one adaptive common denominator; appending a new
// exact coefficient bumps the denominator by an lcm join and rescales.
struct DSeries {
    std::vector<DInt> c;
    Int den = 1;

    void push_exact(const Rat& v, const Rat& e, bool dual) {
        Int nd = int_lcm(den, v.get_den());
        if (dual) nd = int_lcm(nd, e.get_den());
        if (nd != den) {
            Int f = nd / den;
            for (auto& x : c) {
                x.v *= f;
                if (dual) x.e *= f;
            }
            den = nd;
        }
        DInt t;
        t.v = v.get_num() * (den / v.get_den());
        t.e = dual ? Int(e.get_num() * (den / e.get_den())) : Int(0);
        c.push_back(std::move(t));
    }
};

// Shift p(x,y) to x = x0 + t, y = y0 + w and clear denominators; out[j][k] is
// the integer coefficient of w^j t^k.
std::vector<std::vector<Int>> shift_clear(const QPoly& p, const Rat& x0, const Rat& y0,
                                          Int& den_out) {
    int dx = std::max(0, p.deg_x()), dy = std::max(0, p.deg_y());
    std::vector<std::vector<Rat>> acc(dy + 1, std::vector<Rat>(dx + 1, Rat(0)));
    std::vector<std::vector<Rat>> xs(dx + 1), ys(dy + 1);
    xs[0] = {Rat(1)};
    for (int i = 1; i <= dx; ++i) {
        xs[i].assign(i + 1, Rat(0));
        for (int k = 0; k < i; ++k) {
            xs[i][k] += xs[i - 1][k] * x0;
            xs[i][k + 1] += xs[i - 1][k];
        }
    }
    ys[0] = {Rat(1)};
    for (int j = 1; j <= dy; ++j) {
        ys[j].assign(j + 1, Rat(0));
        for (int k = 0; k < j; ++k) {
            ys[j][k] += ys[j - 1][k] * y0;
            ys[j][k + 1] += ys[j - 1][k];
        }
    }
    for (auto& [m, c] : p.terms())
        for (size_t a = 0; a < xs[m.i].size(); ++a)
            for (size_t b = 0; b < ys[m.j].size(); ++b)
                acc[b][a] += c * xs[m.i][a] * ys[m.j][b];
    Int den(1);
    for (auto& row : acc)
        for (auto& c : row) den = int_lcm(den, c.get_den());
    std::vector<std::vector<Int>> out(dy + 1, std::vector<Int>(dx + 1, Int(0)));
    for (int j = 0; j <= dy; ++j)
        for (int k = 0; k <= dx; ++k)
            out[j][k] = acc[j][k].get_num() * (den / acc[j][k].get_den());
    den_out = den;
    return out;
}

// Term-by-term recurrence for y' = N/D in local coordinates: maintains
// W = Y - y0, powers W^j (j <= J), A = D(t,W), B = N(t,W).
class SeriesEngine {
public:
    SeriesEngine(const QRat2& F, const Rat& x0, const Rat& y0, int sigma, bool dual)
        : sigma_(sigma), dual_(dual) {
        Int dd, dn;
        dcoef_ = shift_clear(F.den(), x0, y0, dd);
        ncoef_ = shift_clear(F.num(), x0, y0, dn);
        if (dd != dn) {
            Int g = int_gcd(dd, dn);
            Int fd = dn / g, fn = dd / g;
            for (auto& row : dcoef_) for (auto& c : row) c *= fd;
            for (auto& row : ncoef_) for (auto& c : row) c *= fn;
        }
        J_ = static_cast<int>(std::max(dcoef_.size(), ncoef_.size())) - 1;
        p0_ = dcoef_[0][0];
        if (p0_ == 0) throw SingularPoint();
        p1_ = (static_cast<int>(dcoef_.size()) > 1) ? dcoef_[1][0] : Int(0);

        W_.push_exact(Rat(0), dual_ ? Rat(1) : Rat(0), dual_);
        pow_.resize(std::max(0, J_ - 1)); // pow_[j-2] holds W^j
        for (auto& p : pow_) p.push_exact(Rat(0), Rat(0), dual_);
        extend_AB(0);
    }

    void run() {
        for (int n = 0; n + 1 < sigma_; ++n) step(n);
    }

    void result(const Rat& x0, const Rat& y0, TruncSeries& val, TruncSeries* eps) const {
        std::vector<Rat> v(sigma_), e(sigma_);
        for (int i = 0; i < sigma_; ++i) {
            v[i] = rat(W_.c[i].v, W_.den);
            if (eps) e[i] = rat(W_.c[i].e, W_.den);
        }
        v[0] += y0;
        val = TruncSeries::from_rats(v, x0);
        if (eps) *eps = TruncSeries::from_rats(e, x0);
    }

private:
    const DSeries& power(int j) const {
        return j == 1 ? W_ : pow_[j - 2];
    }

    // A_n, B_n as exact rationals from the maintained data.
    void extend_AB(int n) {
        auto accum = [&](const std::vector<std::vector<Int>>& coef, DSeries& dst) {
            Rat av(0), ae(0);
            for (int j = 0; j < static_cast<int>(coef.size()); ++j) {
                for (int k = 0; k < static_cast<int>(coef[j].size()); ++k) {
                    if (coef[j][k] == 0 || n - k < 0) continue;
                    if (j == 0) {
                        if (n - k == 0) av += Rat(coef[j][k]);
                        continue;
                    }
                    const DSeries& P = power(j);
                    if (n - k >= static_cast<int>(P.c.size())) continue;
                    av += rat(coef[j][k] * P.c[n - k].v, P.den);
                    if (dual_) ae += rat(coef[j][k] * P.c[n - k].e, P.den);
                }
            }
            dst.push_exact(av, ae, dual_);
        };
        accum(dcoef_, A_);
        accum(ncoef_, B_);
    }

    void step(int n) {
        // dot = sum_{m=1}^{n} A_m (n+1-m) W_{n+1-m}, over den A.den * W.den
        Int dotv(0), dote(0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : dotv, dote) if (n > 512)
#endif
        for (int m = 1; m <= n; ++m) {
            Int t = A_.c[m].v * (n + 1 - m);
            dotv += t * W_.c[n + 1 - m].v;
            if (dual_) {
                dote += t * W_.c[n + 1 - m].e;
                dote += (A_.c[m].e * (n + 1 - m)) * W_.c[n + 1 - m].v;
            }
        }
        // S = B_n - dot/(DA*DW)
        Rat Sv = rat(B_.c[n].v, B_.den) - rat(dotv, A_.den * W_.den);
        Rat Se(0);
        if (dual_) Se = rat(B_.c[n].e, B_.den) - rat(dote, A_.den * W_.den);
        // w_{n+1} = S / ((n+1)(p0 + eps p1))
        Rat np0 = Rat(Int(n + 1) * p0_);
        Rat wv = Sv / np0;
        Rat we(0);
        if (dual_) we = (Se - Sv * rat(p1_, p0_)) / np0;
        W_.push_exact(wv, we, dual_);

        // extend powers W^j at index n+1
        for (int j = 2; j <= J_; ++j) {
            const DSeries& lower = power(j - 1);
            Int pv(0), pe(0);
            for (int a = 0; a <= n + 1; ++a) {
                const DInt& x = lower.c[a];
                const DInt& y = W_.c[n + 1 - a];
                pv += x.v * y.v;
                if (dual_) {
                    pe += x.v * y.e;
                    pe += x.e * y.v;
                }
            }
            Int dd = lower.den * W_.den;
            pow_[j - 2].push_exact(rat(pv, dd), dual_ ? rat(pe, dd) : Rat(0), dual_);
        }
        extend_AB(n + 1);
    }

    int sigma_;
    bool dual_;
    int J_ = 0;
    Int p0_, p1_;
    std::vector<std::vector<Int>> dcoef_, ncoef_;
    DSeries W_;
    std::vector<DSeries> pow_; // W^2 .. W^J
    DSeries A_, B_;
};

} // namespace

TruncSeries sol_series_y1(const QRat2& F, const Rat& x0, const Rat& y0, int sigma,
                          TruncSeries* eps_out) {
    if (sigma <= 0) throw std::invalid_argument("sol_series: sigma must be positive");
    if (F.den_vanishes_at(x0, y0)) throw SingularPoint();
    SeriesEngine eng(F, x0, y0, sigma, eps_out != nullptr);
    eng.run();
    TruncSeries val;
    eng.result(x0, y0, val, eps_out);
    return val;
}

std::vector<TruncSeries> power_list_extend(const TruncSeries& y1, int d) {
    std::vector<TruncSeries> p(static_cast<size_t>(d) + 1);
    p[0] = TruncSeries::constant(Rat(1), y1.x0(), y1.order());
    if (d >= 1) p[1] = y1;
    // even powers by squaring; odd powers by
    // a^(2i-1) = (a^(i-1)+a^i)^2/2 - a^(2i-2)/2 - a^(2i)/2
    for (int k = 2; k <= d; k += 2) p[k] = ts_square(p[k / 2]);
    for (int k = 3; k <= d; k += 2) {
        if (k + 1 <= d) {
            int i = (k + 1) / 2;
            TruncSeries s = ts_square(ts_add(p[i - 1], p[i]));
            p[k] = ts_scale(ts_sub(ts_sub(s, p[k - 1]), p[k + 1]), rat(1, 2));
        } else {
            p[k] = ts_mul(p[k - 1], p[1]);
        }
    }
    return p;
}

std::vector<TruncSeries> sol_series(const QRat2& F, const Rat& x0, const Rat& y0,
                                    int sigma, int d) {
    TruncSeries y1 = sol_series_y1(F, x0, y0, sigma, nullptr);
    return power_list_extend(y1, d);
}

std::vector<DualSeries> dual_sol_series(const QRat2& F, const Rat& x0, const Rat& y0,
                                        int sigma, int d) {
    TruncSeries eps;
    TruncSeries y1 = sol_series_y1(F, x0, y0, sigma, &eps);
    std::vector<TruncSeries> p = power_list_extend(y1, d);
    std::vector<DualSeries> out(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        out[i].value = p[i];
        if (i == 0)
            out[i].eps = TruncSeries(x0, y1.order());
        else
            out[i].eps = ts_scale(ts_mul(p[i - 1], eps), Rat(i));
    }
    return out;
}

} // namespace folint
