#pragma once

#include <string>
#include <vector>

#include "posh/drawing.hpp"
#include "posh/graph.hpp"
#include "posh/pointset.hpp"

namespace posh {

enum class EdgeTone { Plain, Red, Blue };

struct SvgOptions {
    bool force = false;           // render drawings that are not certified
    std::vector<char> inside;     // per vertex: 1 draws it as V_I, 0 as V_O; empty = no classes
    std::vector<EdgeTone> tones;  // per edge; empty = all plain
    const PointSet* points = nullptr;  // unused points drawn as small glyphs
    bool labels = true;
    int width = 800;
    int height = 600;
};

// y is shown as sign(y) * log2(1 + |y|) (display only); x is linear.
double display_y(const Rational& y);

// Deterministic SVG text. Throws PreconditionError for an uncertified
// drawing unless options.force is set.
std::string render_svg(const MultiGraph& g, const Drawing& d, const SvgOptions& options = {});

// One glyph per point of the chain.
std::string render_pointset_svg(const PointSet& ps, int width = 800, int height = 600);

}  // namespace posh
