#pragma once

#include <string>

#include "portraits/portrait.hpp"

namespace portraits {

struct RenderOptions {
    int size_px = 512;
    bool show_translates = false;          // dashed ghosts of A_j + k/d
    bool highlight_characteristic = false; // thick outer arc over (t-, t+)
    bool label_angles = false;
};

/// Chord diagram of P as a standalone SVG 1.1 document. Angle 0 is the
/// rightmost point and angles grow counter-clockwise. Output depends only on
/// the arguments. Throws std::invalid_argument when size_px < 64.
std::string portrait_svg(const OrbitPortrait& portrait, const RenderOptions& opts = {});

} // namespace portraits
