#pragma once

#include <string>

#include "wordlab/fair.hpp"
#include "wordlab/lattice.hpp"
#include "wordlab/partitions.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

enum class RenderStyle { ascii, svg };

enum class Shade {
  none,
  left_right,  // Left cells '.', Right cells ':'
  steps        // one frame per b, Left cells accumulated row by row
};

/// Line representation: a-steps go right, b-steps go up, origin bottom
/// left. ASCII rows are drawn top to bottom, |w|_b + 1 of them; each cell
/// takes two characters (its bottom edge, then its shade).
std::string render_line(Word const& w, RenderStyle style, Shade shade);

struct DiagonalAreas {
  Rational upper;  // S_b(w) - |w|_b / 2
  Rational lower;  // S_b(mirror w) - |w|_b / 2
};

/// Areas on either side of the path where b is the diagonal step (1, 1),
/// inside the |w| x |w|_b rectangle, by the shoelace formula.
DiagonalAreas diagonal_areas(Word const& w);

std::string render_diagonal(Word const& w, RenderStyle style);

/// One row of '#' per nonzero part.
std::string render_ferrers(Partition const& lambda);

/// Graphviz digraph, nodes in lexicographic order.
std::string render_class_dot(ClassGraph const& g);

}  // namespace wordlab
