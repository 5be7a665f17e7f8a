// Projection of an initial segment of Ignatiev's frame onto a J-line, with a
// closed defining formula for the preimage of every world.
#pragma once

#include "plog/formula.hpp"
#include "plog/ignatiev.hpp"
#include "plog/jline.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace plog {

enum class ProjectionCase {
  Singleton,  // one world
  Shift,      // one 1-plane: the inner J-line moved up one modality
  Sum,        // several 1-planes stacked along coordinate 0
};

struct ProjectionNode {
  ProjectionCase kind = ProjectionCase::Singleton;
  JLineShape shape;
  Ordinal iota;
  /// Per world in tuple order. `core` avoids relation 0 and does not pin
  /// down coordinate 0; `full` is the defining formula.
  std::vector<Formula> core;
  std::vector<Formula> full;
  /// Shift: the inner node. Sum: one node per plane, root-side plane first.
  std::vector<ProjectionNode> parts;
  /// Sum: where each plane's copy starts on coordinate 0.
  std::vector<Ordinal> offsets;
};

struct ProjectionSpec {
  Ordinal iota;
  JLineShape shape;
  /// World tuple name -> closed defining formula.
  std::map<World, Formula> defs;
  ProjectionNode tree;
};

class ProjectionError : public std::runtime_error {
 public:
  ProjectionError(const std::string& what, World world) : std::runtime_error(what + " at world " + world), world_(std::move(world)) {}
  const World& world() const { return world_; }

 private:
  World world_;
};

/// Builds and verifies the projection: the defining formulas' truth sets are
/// pairwise disjoint, cover the segment up to iota, and the root's is the
/// axis point of iota. Throws ProjectionError otherwise.
ProjectionSpec build_projection(const JLineShape& s);

/// The world whose preimage contains p. Throws std::invalid_argument if
/// p[0] > iota.
World project_point(const ProjectionSpec& ps, const IgPoint& p);

/// Closed instance of f true at the axis point of the projection: each
/// variable becomes the disjunction of the defining formulas of the worlds
/// where it holds. Requires f & guards(f) true at the root under v
/// (std::invalid_argument otherwise); throws std::logic_error if the
/// result fails the check.
Formula closed_substitution_witness(const JLineShape& s, const Valuation& v, const Formula& f);
Formula closed_substitution_witness(const ProjectionSpec& ps, const Valuation& v, const Formula& f);

}  // namespace plog
