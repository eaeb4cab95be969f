#pragma once

#include <cstdint>
#include <string>

#include "squareham/planar_map.hpp"

namespace squareham {

// Fixed reference embeddings: "theta", "k4", "prism", "cube", "tutte".
PlaneMultigraph named(const std::string& name);

// Random member of the cubic 2-connected plane class, grown from theta
// (allow_multi) or K4 (simple) by face-local expansions: subdivide two
// distinct edges of one face and join the new vertices inside it. Each
// move adds 2 vertices and 3 edges and preserves the class.
PlaneMultigraph random_class_G(int n_target, std::uint64_t seed, bool allow_multi);

} // namespace squareham
