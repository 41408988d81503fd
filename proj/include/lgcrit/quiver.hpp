#pragma once

#include <string>

#include "lgcrit/bundle.hpp"

namespace lgcrit {

/// Arrow of the endomorphism quiver, labeled by the ray generator that
/// induces it: v_i steps (k,l) to (k+1,l); e_0 steps to (k,l+1); e_j steps to
/// (k-a_j, l+1). An arrow exists exactly when the target stays in the box.
struct QuiverArrow {
  int src = 0;
  int dst = 0;
  std::string gen;
};

/// Commutation relation at a node: the two composite paths g1-then-g2 and
/// g2-then-g1 both exist (and automatically agree).
struct QuiverRelation {
  int node = 0;
  std::string g1, g2;
};

struct Quiver {
  BundleSpec spec;
  std::vector<ExcLabel> nodes;       // collection order
  std::vector<QuiverArrow> arrows;   // generator-major, then source order
  std::vector<QuiverRelation> relations;
};

Quiver build_quiver(const BundleSpec& spec);

/// Graphviz form. Base arrows are blue, the untwisted fiber arrow black, and
/// twisted fiber arrows alternate red/green by twist slot. Byte-stable.
std::string quiver_dot(const Quiver& q);

/// JSON form with the same ordering. Byte-stable.
std::string quiver_json(const Quiver& q);

}  // namespace lgcrit
