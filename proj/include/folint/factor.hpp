#pragma once

#include "folint/ratfunc2.hpp"

namespace folint {

struct UFactorization {
    Rat content;
    std::vector<std::pair<UPoly<Rat>, int>> factors; // primitive over Z, positive lc, irreducible
};

struct QFactorization {
    Rat content;
    std::vector<std::pair<QPoly, int>> factors; // primitive over Z, positive lead, irreducible over Q
};

// Factorization into irreducibles over Q. Constants give an empty factor list.
UFactorization factor_upoly_q(const UPoly<Rat>& p);
QFactorization factor_over_Q(const QPoly& p);

// Squarefree part (product of distinct irreducible factors), primitive.
QPoly bipoly_squarefree_part(const QPoly& p);

// Deterministic factor order used everywhere factor lists are exposed.
bool bipoly_canonical_less(const QPoly& a, const QPoly& b);

} // namespace folint
