#pragma once

#include <vector>

#include "symknot/laurent.hpp"
#include "symknot/planar_diagram.hpp"

namespace symknot {

// Checkerboard data for a connected single-component diagram: the face
// 2-coloring, the Goeritz matrix of the white class with one region
// deleted, and the Gordon-Litherland type-II correction.
struct GoeritzData {
  std::vector<int> face_color;            // per face, 0 or 1
  int white_color = 0;                    // class used as white
  std::vector<std::vector<Int>> minor;    // Goeritz matrix minor
  int mu = 0;                             // sum of eta over type II crossings
};

// which_class selects the color class used as white (0 or 1); determinant
// and signature are independent of the choice.
GoeritzData build_goeritz(const PlanarDiagram& d, int which_class = 0);

Int determinant_int(const PlanarDiagram& d);
int determinant_checked(const PlanarDiagram& d);  // |det| as int, with range guard

int signature(const PlanarDiagram& d);
int signature_with_class(const PlanarDiagram& d, int which_class);

// Exact integer linear algebra used by the Goeritz form.
Int bareiss_determinant(std::vector<std::vector<Int>> m);
int symmetric_signature(std::vector<std::vector<Int>> m);

}  // namespace symknot
