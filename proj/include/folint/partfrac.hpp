#pragma once

#include "folint/factor.hpp"
#include "folint/rf1.hpp"

namespace folint {

// One term num / (den_other * factor^mult); factor is irreducible and depends
// on `var`, den_other is free of `var`.
struct PFTerm {
    QPoly num;
    QPoly factor;
    int mult = 1;
    QPoly den_other;
    QRat2 value() const {
        return QRat2(num, den_other * bipoly_pow(factor, mult));
    }
};

struct PFDecomp {
    char var = 'y';
    QRat2 poly_part; // denominator free of var
    std::vector<PFTerm> terms;

    QRat2 recombine() const {
        QRat2 acc = poly_part;
        for (auto& t : terms) acc += t.value();
        return acc;
    }
};

PFDecomp partial_fractions(const QRat2& f, char var);

// Conversions between bivariate polynomials and univariate polynomials over
// the rational-function field in the other variable.
UPoly<RF1> bipoly_to_rfpoly(const QPoly& p, char var);
QRat2 rfpoly_to_ratfunc(const UPoly<RF1>& p, char var);

} // namespace folint
