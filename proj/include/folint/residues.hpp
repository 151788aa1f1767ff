#pragma once

#include "folint/partfrac.hpp"
#include "folint/quad.hpp"

namespace folint {

struct NonConstantResidue : std::runtime_error {
    NonConstantResidue() : std::runtime_error("residue is not constant along the curve") {}
};
struct HigherOrderPole : std::runtime_error {
    HigherOrderPole() : std::runtime_error("pole of order > 1 along the curve") {}
};
struct MultiplePole : std::runtime_error {
    MultiplePole() : std::runtime_error("multiple pole") {}
};

// Residue of the 1-form K1 dx + K2 dy along the zero set of an irreducible
// curve polynomial. The curve must produce a pole of order exactly one.
Quad residue_along_curve(const QRat2& K1, const QRat2& K2, const QPoly& curve);

// Residue along the line at infinity (x = 1/t, y = s/t, curve t = 0).
Quad residue_at_infinity(const QRat2& K1, const QRat2& K2);

// Pole data for the algebraicity test of step 8: true when every pole of
// K1 dx + K2 dy on P^2 is simple with the stated residues.
struct ResidueReport {
    bool simple_poles = true;
    bool all_rational = true;
    std::vector<std::pair<QPoly, Rat>> rational_residues; // (curve, residue), nonzero only
};
ResidueReport residues_on_P2(const QRat2& K1, const QRat2& K2);

// Rothstein-Trager data: residues of f d(var) at the poles of an irreducible
// denominator factor, represented by their shared minimal polynomial.
struct RTEntry {
    UPoly<Rat> min_poly;  // irreducible over Q, monic; roots are the residues
    QPoly pole_factor;    // factor of den(f) carrying these residues
};
std::vector<RTEntry> rothstein_trager_residues(const QRat2& f, char var);

} // namespace folint
