#include "folint/residues.hpp"

namespace folint {

namespace {

RF1 rf1_derivative(const RF1& f) {
    return RF1(f.num.derivative() * f.den - f.num * f.den.derivative(), f.den * f.den);
}

UPoly<RF1> rf_mod(const UPoly<RF1>& a, const UPoly<RF1>& m) { return a % m; }

UPoly<RF1> rf_dmain(const UPoly<RF1>& a) { return a.derivative(); }

UPoly<RF1> rf_dother(const UPoly<RF1>& a) {
    UPoly<RF1> r = a;
    for (auto& c : r.c) c = rf1_derivative(c);
    r.trim();
    return r;
}

int mult_of(const QPoly& q, QPoly d) {
    int m = 0;
    for (;;) {
        auto quot = bipoly_divide(d, q);
        if (!quot) return m;
        d = *quot;
        ++m;
    }
}

// residue along an irreducible curve with deg_y >= 1, using the dy component
Quad residue_main_y(const QRat2& K1, const QRat2& K2, const QPoly& q) {
    if (mult_of(q, K1.den()) > 1 || mult_of(q, K2.den()) > 1) throw HigherOrderPole();
    QRat2 A = K2 * QRat2(q);
    if (mult_of(q, A.den()) > 0) throw HigherOrderPole();
    UPoly<RF1> qm = bipoly_to_rfpoly(q, 'y');
    UPoly<RF1> a = rf_mod(bipoly_to_rfpoly(A.num(), 'y'), qm);
    UPoly<RF1> b = rf_mod(bipoly_to_rfpoly(A.den(), 'y'), qm);
    UPoly<RF1> dq = rf_mod(bipoly_to_rfpoly(q.dy(), 'y'), qm);
    UPoly<RF1> r = rf_mod(a * upoly_invmod(b * dq % qm, qm), qm);
    if (r.is_zero()) return Quad(0);

    if (r.degree() == 0 && r.c[0].is_poly() && r.c[0].num.degree() <= 0)
        return Quad(r.c[0].num.coeff(0));

    // constancy along the curve: dr/dx + y'(x) dr/dy = 0 with y' = -q_x/q_y
    UPoly<RF1> qx = rf_mod(bipoly_to_rfpoly(q.dx(), 'y'), qm);
    UPoly<RF1> test = rf_mod(rf_dother(r) * dq - rf_dmain(r) * qx, qm);
    if (!test.is_zero()) throw NonConstantResidue();

    // algebraic constant: specialize x and read off the minimal polynomial
    for (long xs = 2;; ++xs) {
        Rat xv(xs);
        bool ok = true;
        UPoly<Rat> qx0, rnum, rden;
        // q(xv, y)
        qx0 = q.eval_x(xv);
        if (qx0.degree() != q.deg_y()) continue;
        // r evaluated at x = xv: UPoly<Rat> in y; all RF1 denominators must not vanish
        UPoly<Rat> rv;
        rv.c.assign(r.c.size(), Rat(0));
        for (size_t i = 0; i < r.c.size(); ++i) {
            Rat dv = r.c[i].den.eval(xv);
            if (is_zero(dv)) { ok = false; break; }
            rv.c[i] = r.c[i].num.eval(xv) / dv;
        }
        if (!ok) continue;
        rv.trim();
        // min poly of rv modulo qx0: resultant_y(qx0(y), t - rv(y))
        UPoly<RF1> qq, tr;
        qq.c.reserve(qx0.c.size());
        for (auto& c : qx0.c) qq.c.emplace_back(RF1(c));
        qq.trim();
        // t - rv(y): UPoly in y over Q(t); coefficients linear in t
        UPoly<RF1> tv;
        tv.c.assign(std::max<size_t>(rv.c.size(), 1), RF1(0));
        for (size_t i = 0; i < rv.c.size(); ++i) tv.c[i] = RF1(UPoly<Rat>(-rv.c[i]));
        UPoly<Rat> tpoly = UPoly<Rat>::t();
        tv.c[0] = tv.c[0] + RF1(tpoly);
        tv.trim();
        RF1 res = upoly_resultant(qq, tv);
        UPoly<Rat> m = res.num;
        auto sq = upoly_squarefree(m);
        if (sq.size() != 1 && !sq.empty()) {
            // constant residue has a single minimal polynomial; take the product of distinct parts
            UPoly<Rat> mp = UPoly<Rat>::one();
            for (auto& [f, e] : sq) mp *= f;
            m = mp;
        } else if (!sq.empty()) {
            m = sq[0].first;
        }
        auto fac = factor_upoly_q(m);
        if (fac.factors.size() != 1 || fac.factors[0].second != 1)
            throw NonConstantResidue();
        UPoly<Rat> mp = fac.factors[0].first.monic();
        if (mp.degree() == 1) return Quad(-mp.coeff(0));
        if (mp.degree() == 2) {
            // alpha^2 = -c1*alpha - c0
            QuadField f{-mp.coeff(1), -mp.coeff(0)};
            return Quad::root(f);
        }
        throw std::runtime_error("residue lies in an extension of degree > 2 (unsupported)");
    }
}

} // namespace

Quad residue_along_curve(const QRat2& K1, const QRat2& K2, const QPoly& curve) {
    if (curve.deg_y() >= 1) return residue_main_y(K1, K2, curve);
    // swap variables: form becomes K2s dx' + K1s dy', curve gains deg_y >= 1
    QRat2 K1s = K2.subst_swap_vars();
    QRat2 K2s = K1.subst_swap_vars();
    return residue_main_y(K1s, K2s, curve.swap_vars());
}

namespace {

void infinity_components(const QRat2& K1, const QRat2& K2, QRat2& C1, QRat2& C2) {
    // x = 1/t, y = s/t; in the composed world the first variable is t, second s
    QRat2 t = QRat2::x(), s = QRat2::y();
    QRat2 K1c = ratfunc2_compose(K1, QRat2(1) / t, s / t);
    QRat2 K2c = ratfunc2_compose(K2, QRat2(1) / t, s / t);
    C1 = -(K1c + s * K2c) / (t * t);
    C2 = K2c / t;
}

} // namespace

Quad residue_at_infinity(const QRat2& K1, const QRat2& K2) {
    QRat2 C1, C2;
    infinity_components(K1, K2, C1, C2);
    return residue_along_curve(C1, C2, QPoly::x());
}

ResidueReport residues_on_P2(const QRat2& K1, const QRat2& K2) {
    ResidueReport rep;
    QPoly dd = K1.den() * K2.den();
    QFactorization fac = factor_over_Q(dd);
    for (auto& [q, m] : fac.factors) {
        int m1 = mult_of(q, K1.den());
        int m2 = mult_of(q, K2.den());
        if (m1 > 1 || m2 > 1) {
            rep.simple_poles = false;
            continue;
        }
        Quad r;
        try {
            r = residue_along_curve(K1, K2, q);
        } catch (const HigherOrderPole&) {
            rep.simple_poles = false;
            continue;
        } catch (const NonConstantResidue&) {
            rep.all_rational = false;
            continue;
        } catch (const std::runtime_error&) {
            rep.all_rational = false;
            continue;
        }
        if (r.is_zero()) continue;
        if (!r.rational()) {
            rep.all_rational = false;
            continue;
        }
        rep.rational_residues.push_back({q, r.to_rat()});
    }
    // the line at infinity
    try {
        QRat2 C1, C2;
        infinity_components(K1, K2, C1, C2);
        int m1 = mult_of(QPoly::x(), C1.den());
        int m2 = mult_of(QPoly::x(), C2.den());
        if (m1 > 1 || m2 > 1) {
            rep.simple_poles = false;
        } else {
            Quad r = residue_along_curve(C1, C2, QPoly::x());
            if (!r.is_zero() && !r.rational()) rep.all_rational = false;
        }
    } catch (const HigherOrderPole&) {
        rep.simple_poles = false;
    } catch (const NonConstantResidue&) {
        rep.all_rational = false;
    } catch (const std::runtime_error&) {
        rep.all_rational = false;
    }
    return rep;
}

std::vector<RTEntry> rothstein_trager_residues(const QRat2& f, char var) {
    const QPoly& nb = f.num();
    const QPoly& db = f.den();
    bool main_y = (var == 'y');
    if ((main_y && db.deg_x() > 0) || (!main_y && db.deg_y() > 0) ||
        (main_y && nb.deg_x() > 0) || (!main_y && nb.deg_y() > 0))
        throw std::invalid_argument("rothstein_trager_residues: input must be univariate in var");
    UPoly<Rat> N = main_y ? nb.eval_x(Rat(0)) : nb.eval_y(Rat(0));
    UPoly<Rat> D = main_y ? db.eval_x(Rat(0)) : db.eval_y(Rat(0));
    if (upoly_gcd_rat(D, D.derivative()).degree() > 0) throw MultiplePole();

    // R(t) = Res_z(D, N - t D')
    UPoly<RF1> Dz, Wz;
    for (auto& c : D.c) Dz.c.emplace_back(RF1(c));
    Dz.trim();
    UPoly<Rat> Dp = D.derivative();
    size_t n = std::max(N.c.size(), Dp.c.size());
    Wz.c.assign(std::max<size_t>(n, 1), RF1(0));
    UPoly<Rat> tp = UPoly<Rat>::t();
    for (size_t i = 0; i < n; ++i) {
        UPoly<Rat> lin; // N_i - t*Dp_i as poly in t
        lin = UPoly<Rat>(N.coeff(static_cast<int>(i))) - tp * UPoly<Rat>(Dp.coeff(static_cast<int>(i)));
        Wz.c[i] = RF1(lin);
    }
    Wz.trim();
    RF1 res = upoly_resultant(Dz, Wz);
    UPoly<Rat> R = res.num;
    if (R.is_zero()) throw std::runtime_error("rothstein_trager: degenerate resultant");

    std::vector<RTEntry> out;
    auto fac = factor_upoly_q(R);
    for (auto& [m, e] : fac.factors) {
        if (m.degree() < 1) continue;
        RTEntry entry;
        entry.min_poly = m.monic();
        if (m.degree() == 1) {
            Rat c = -entry.min_poly.coeff(0);
            // gcd(D, N - c D') over Q
            UPoly<Rat> g = upoly_gcd_rat(D, N - Dp * UPoly<Rat>(c));
            entry.pole_factor = main_y ? bipoly_from_upoly_y(g) : bipoly_from_upoly_x(g);
        } else if (m.degree() == 2) {
            QuadField qf{-entry.min_poly.coeff(1), -entry.min_poly.coeff(0)};
            Quad alpha = Quad::root(qf);
            UPoly<Quad> Dq, Wq;
            for (auto& c : D.c) Dq.c.emplace_back(Quad(c));
            Dq.trim();
            size_t nn = std::max(N.c.size(), Dp.c.size());
            Wq.c.assign(std::max<size_t>(nn, 1), Quad(0));
            for (size_t i = 0; i < nn; ++i)
                Wq.c[i] = Quad(N.coeff(static_cast<int>(i))) - alpha * Quad(Dp.coeff(static_cast<int>(i)));
            Wq.trim();
            UPoly<Quad> g = upoly_gcd(Dq, Wq);
            // Q-rational pole set: norm g * conj(g)
            UPoly<Quad> gc = g;
            for (auto& c : gc.c) c = c.conj();
            UPoly<Quad> prod = g * gc;
            UPoly<Rat> gr;
            gr.c.reserve(prod.c.size());
            for (auto& c : prod.c) gr.c.push_back(c.to_rat());
            gr.trim();
            UPoly<Rat> norm = gr.monic();
            entry.pole_factor = main_y ? bipoly_from_upoly_y(norm) : bipoly_from_upoly_x(norm);
        } else {
            // degree > 2: exact representation by min poly; pole set unrefined
            UPoly<Rat> sq = D;
            entry.pole_factor = main_y ? bipoly_from_upoly_y(sq) : bipoly_from_upoly_x(sq);
        }
        out.push_back(std::move(entry));
    }
    std::sort(out.begin(), out.end(), [](const RTEntry& a, const RTEntry& b) {
        if (a.min_poly.degree() != b.min_poly.degree()) return a.min_poly.degree() < b.min_poly.degree();
        for (int i = a.min_poly.degree(); i >= 0; --i)
            if (!(a.min_poly.coeff(i) == b.min_poly.coeff(i)))
                return a.min_poly.coeff(i) < b.min_poly.coeff(i);
        return false;
    });
    return out;
}

} // namespace folint
