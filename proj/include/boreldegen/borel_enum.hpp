#pragma once
#include "monomial_ideal.hpp"
#include <vector>

namespace boreldegen {

// Catalogue of all saturated Borel-fixed ideals with quotient Hilbert
// polynomial p, in a fixed deterministic order (descending by generator
// sequence); labels are 1-based positions.
struct BorelCatalog {
    HilbertPolynomial p;
    int nvars = 0;
    std::vector<MonomialIdeal> entries;
};

// deg p <= 1 (curves and finite subschemes), nvars >= 3.
BorelCatalog enumerate_saturated_borel(const HilbertPolynomial& p, int nvars);

int catalog_label(const BorelCatalog& c, const MonomialIdeal& I); // throws if absent

// deterministic catalogue comparator: true if a precedes b
bool catalog_precedes(const MonomialIdeal& a, const MonomialIdeal& b);

} // namespace boreldegen
