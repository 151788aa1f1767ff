#include "folint/partfrac.hpp"

namespace folint {

UPoly<RF1> bipoly_to_rfpoly(const QPoly& p, char var) {
    auto rec = (var == 'y') ? bipoly_yrec(p) : bipoly_xrec(p);
    UPoly<RF1> out;
    out.c.reserve(rec.size());
    for (auto& u : rec) out.c.emplace_back(RF1(u));
    out.trim();
    return out;
}

QRat2 rfpoly_to_ratfunc(const UPoly<RF1>& p, char var) {
    // common denominator in the other variable
    UPoly<Rat> den = UPoly<Rat>::one();
    for (auto& c : p.c)
        if (!c.is_zero()) den = (den * c.den) / upoly_gcd_rat(den, c.den);
    QPoly num;
    for (size_t k = 0; k < p.c.size(); ++k) {
        if (p.c[k].is_zero()) continue;
        UPoly<Rat> scaled = p.c[k].num * (den / p.c[k].den);
        for (size_t i = 0; i < scaled.c.size(); ++i) {
            if (is_zero(scaled.c[i])) continue;
            if (var == 'y') num.add_term(static_cast<int>(i), static_cast<int>(k), scaled.c[i]);
            else num.add_term(static_cast<int>(k), static_cast<int>(i), scaled.c[i]);
        }
    }
    QPoly d = (var == 'y') ? bipoly_from_upoly_x(den) : bipoly_from_upoly_y(den);
    return QRat2(num, d);
}

PFDecomp partial_fractions(const QRat2& f, char var) {
    PFDecomp out;
    out.var = var;
    if (f.is_zero()) return out;

    auto depends_on_var = [&](const QPoly& p) {
        return var == 'y' ? p.deg_y() > 0 : p.deg_x() > 0;
    };

    QFactorization den_f = factor_over_Q(f.den());
    QPoly den_other = QPoly(Rat(den_f.content));
    std::vector<std::pair<QPoly, int>> var_factors;
    for (auto& [q, m] : den_f.factors) {
        if (depends_on_var(q)) var_factors.push_back({q, m});
        else den_other *= bipoly_pow(q, m);
    }

    UPoly<RF1> N = bipoly_to_rfpoly(f.num(), var);
    UPoly<RF1> D = UPoly<RF1>::one();
    std::vector<UPoly<RF1>> qp; // q_i^{e_i}
    for (auto& [q, m] : var_factors) {
        qp.push_back(upoly_pow(bipoly_to_rfpoly(q, var), m));
        D *= qp.back();
    }

    auto [quot, rem] = divmod(N, D);
    // poly part: quot / den_other
    {
        QRat2 qpoly = rfpoly_to_ratfunc(quot, var);
        out.poly_part = qpoly / QRat2(den_other);
    }
    if (rem.is_zero()) return out;

    for (size_t i = 0; i < var_factors.size(); ++i) {
        auto& [q, e] = var_factors[i];
        UPoly<RF1> qrf = bipoly_to_rfpoly(q, var);
        // component: rem * inv(D / q^e) mod q^e
        UPoly<RF1> cof = UPoly<RF1>::one();
        for (size_t j = 0; j < var_factors.size(); ++j)
            if (j != i) cof = (cof * qp[j]) % qp[i];
        UPoly<RF1> comp = (rem % qp[i]) * upoly_invmod(cof, qp[i]);
        comp = comp % qp[i];
        // q-adic digits: comp = sum_m d_m q^m with deg d_m < deg q
        std::vector<UPoly<RF1>> digits;
        UPoly<RF1> cur = comp;
        for (int m = 0; m < e && !cur.is_zero(); ++m) {
            auto [dq, dr] = divmod(cur, qrf);
            digits.push_back(dr);
            cur = dq;
        }
        for (size_t m = 0; m < digits.size(); ++m) {
            if (digits[m].is_zero()) continue;
            // term digits[m] / q^(e-m)
            QRat2 numr = rfpoly_to_ratfunc(digits[m], var);
            PFTerm t;
            t.factor = q;
            t.mult = e - static_cast<int>(m);
            QRat2 with_other = numr / QRat2(den_other);
            t.num = with_other.num();
            t.den_other = with_other.den();
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

} // namespace folint
