#pragma once

#include <string>

#include "digitop/map.hpp"

namespace digitop::render {

// Deterministic figures for 1- and 2-dimensional images: lattice points at a
// fixed pitch, derived adjacency edges drawn between them. Output is
// byte-stable across runs. Higher dimensions are rejected.
std::string svg(const DigitalImage& image);

// Renders the domain of a map (typically a standard projection) with nodes
// tinted by their image point, so fibers share a colour.
std::string svg_with_fibers(const DigitalMap& projection);

std::string ascii(const DigitalImage& image);
std::string ascii_with_fibers(const DigitalMap& projection);

}  // namespace digitop::render
