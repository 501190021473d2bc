#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sandpile/core.hpp"
#include "sandpile/cylindric.hpp"

namespace sandpile {

struct DiagramLabel {
    Value column = 0;  // 0-based cell coordinates
    Value row = 0;
    std::string text;
    Side side = Side::Left;
};

// Two lattice paths in an m x n grid. `red` holds the n north and m-1 east
// steps of the non-sink columns; the sink column adds a final east step at
// height n when drawn. `green` holds n north and m east steps.
struct DiagramSpec {
    GraphShape shape;
    std::string red;
    std::string green;
    std::vector<std::pair<Value, Value>> shaded;  // (column, row) cells
    std::vector<DiagramLabel> labels;
    Value col_min = 0;  // drawn column range, inclusive
    Value col_max = 0;
};

DiagramSpec diagram_of(const Configuration& u);          // stable sorted
Configuration configuration_of(const DiagramSpec& spec);  // partial configuration

// The diagram of a parking sorted u with the labels 0..sink placed on the
// rolled strip, widened to hold every label.
DiagramSpec cylindric_diagram(const Configuration& u);

// Text glyphs, drawn from the top row down:
//   '+' grid vertex, '-' and '|' plain grid edges,
//   'R' red path edge, 'G' green path edge, '*' edge on both paths,
//   '#' intersection cell, "12r" label 12 right of the red cut (red),
//   "12g" label 12 left of it (green).
std::string render_text(const DiagramSpec& spec);
std::string render_svg(const DiagramSpec& spec);

}  // namespace sandpile
