#pragma once

#include <vector>

#include "forest_specht/diagram.hpp"
#include "forest_specht/matching.hpp"
#include "forest_specht/symfunc.hpp"

namespace forest {

/// Set of box ids, ascending.
struct HorizontalStrip {
  std::vector<int> boxes;
  friend bool operator==(const HorizontalStrip&, const HorizontalStrip&) = default;
};

/// labels[id] is the label (1..N) of box id.
struct ForestTableau {
  std::vector<int> labels;
  friend auto operator<=>(const ForestTableau&, const ForestTableau&) = default;
};

/// Chain x0 = (u,u), y_i = least-column box sharing the row of x_i,
/// x_{i+1} = transversal box in the column of y_i. Returns the transversal
/// with every x_i swapped for y_i, ordered by the slot of the x it replaced.
/// Box ids are those of sfd.diagram. Throws DiagramError when u = 0.
Transversal derive_u_prime(const StandardFormDiagram& sfd);

/// Strips of a diagram in standard form with respect to its transversal,
/// sorted by size then boxes. The empty strip is always present.
std::vector<HorizontalStrip> horizontal_strips(const StandardFormDiagram& sfd);

/// Transversal of the matching picked by `choice` on the diagram's graph.
Transversal chosen_transversal(const Diagram& d, const ApmChoice& choice = canonical_apm_choice());

/// Strips of d for the matching picked by `choice`.
std::vector<HorizontalStrip> diagram_strips(const Diagram& d, const ApmChoice& choice = canonical_apm_choice());

/// Semistandard tableaux with labels at most N, in lexicographic order of
/// their label sequences. Each sub-diagram uses its own chosen matching.
std::vector<ForestTableau> ssyt_enumerate(const Diagram& d, int N, const ApmChoice& choice = canonical_apm_choice());
BigInt ssyt_count(const Diagram& d, int N, const ApmChoice& choice = canonical_apm_choice());
/// Number of semistandard tableaux of each content (length-N vectors).
MonomialExpansion ssyt_generating_function(const Diagram& d, int N, const ApmChoice& choice = canonical_apm_choice());

/// Semistandard tableaux with N = n restricted to content (1,...,1).
std::vector<ForestTableau> standard_tableaux(const Diagram& d, const ApmChoice& choice = canonical_apm_choice());
/// Label n goes on a box of the chosen matching, then recurse.
std::vector<ForestTableau> standard_tableaux_by_matching(const Diagram& d, const ApmChoice& choice = canonical_apm_choice());

}  // namespace forest
