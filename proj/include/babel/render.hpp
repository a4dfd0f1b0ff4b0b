#pragma once

// Schematic SVG pictures of level-2 apartments. Each real component is a disk
// placed at its w2 lattice point; w2 itself has no faithful planar embedding.

#include <array>
#include <string>
#include <vector>

#include "babel/apartment.hpp"

namespace babel {

// Planar images of the simple roots: A1 a = (1, 0); A2 a = (2, 0), b = (-1, sqrt3);
// B2 a = (2, 0), b = (-2, 2). Their dot products reproduce the Gram matrices.
std::vector<std::array<double, 2>> planar_simple_roots(RootType t);
std::array<double, 2> planar(RootType t, const std::vector<Q>& root_coords);

std::string render_apartment_svg(RootType t);

// Two vertices on the w2 level of Sigma(2, A2) whose enclosure consists of four
// affine planes, two affine half-planes and six affine sectors.
std::vector<Point> enclosure_example_pair();

// Shades cl({x, y}) in Sigma(2, A2) from enclosure_contains evaluated on a grid of
// real offsets inside every nearby component.
std::string render_enclosure_svg(const Point& x, const Point& y);

}  // namespace babel
