#pragma once

#include <string>
#include <vector>

#include "ramsey/colouring.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/families.hpp"
#include "ramsey/small_graph.hpp"

namespace ramsey {

// An absence the construction guarantees: no `copies` disjoint monochromatic
// members of `family` in `colour`. Each claim is directly checkable with the
// packing detector.
struct AbsenceClaim {
    GraphFamily family;
    int copies = 1;
    Colour colour = Colour::red;
};

struct ConstructionReport {
    TwoColouring colouring;
    PartitionSpec partition;
    std::vector<AbsenceClaim> claims;
};

// Two-block colouring: R a red clique of size (k-alpha)n-1, B a blue clique
// of size kn-1, cross edges red. Certifies r(nH) > (2k-alpha)n-2. Rejects H
// with isolated vertices.
ConstructionReport bes_lower(const SmallGraph& h, int n);

// A of size n|H|-1 all blue, A x C red, C coloured by e_col. e_col must
// contain no red member of d_family(G) and no blue H (validated; the
// violating certificate is reported). H must be connected. Certifies
// r(G, nH) > n|H| + |C| - 1.
ConstructionReport asym_lower(const SmallGraph& g, const SmallGraph& h, int n,
                              const TwoColouring& e_col);

// Three-block colouring R/B/E with R internal red, B internal blue, R x B
// red, E x B red, E x R blue, E coloured by e_col. e_col must avoid red
// members of d_c_family(H) and blue members of d_family(H). Certifies the
// absence of a monochromatic nH.
ConstructionReport estimate_lower(const SmallGraph& h, int n, const TwoColouring& e_col);

// The generic critical-colouring template: R internal red, B internal blue,
// R x B in join_colour, E x R blue, E x B red, E as given. No claims are
// attached; check_critical_structure is the validator.
ConstructionReport critical_template(int r_size, int b_size, Colour join_colour,
                                     const TwoColouring& e_col);

struct StructureViolation {
    int property = 0;            // 1, 2 or 3
    std::string description;
    int witness_u = -1, witness_v = -1; // edge witness for properties 1-2
    std::optional<Tie> witness_tie;     // tie witness for property 3
};

struct StructureCheck {
    bool ok = true;
    std::vector<StructureViolation> violations;
};

// Checks the three structural properties of a critical colouring against a
// named R/B/E partition: (1) R red-internal and B blue-internal, (2) R x B
// monochrome, E x R blue, E x B red, (3) no H-tie meets E (exact search
// restricted to E-touching ties). Reports one witness per failed property.
StructureCheck check_critical_structure(const TwoColouring& c, const PartitionSpec& p,
                                        const SmallGraph& h);

} // namespace ramsey
