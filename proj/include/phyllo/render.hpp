#pragma once

#include <string>

#include "phyllo/tessellation.hpp"

namespace phyllo {

enum class Projection { automatic, disc, poincare, orthographic, stereographic };

// Accepts "auto", "disc", "poincare", "orthographic", "stereographic".
Projection parse_projection(const std::string& name);
const char* projection_name(Projection p);

struct RenderOptions {
    Projection projection = Projection::automatic;
    int size = 800;                  // pixels, square canvas
    double stereographic_clip = 2.0; // chart radius beyond which cells are dropped
};

// Pentagons blue, hexagons red, heptagons green, 4-sided cells yellow, other
// cells gray. Each polygon carries class="<cell class>" and data-s="<index>".
const char* cell_color(CellClass c);

// Throws std::invalid_argument when the projection does not fit the surface.
std::string render_svg(const Tessellation& tess, const RenderOptions& options = {});

}  // namespace phyllo
