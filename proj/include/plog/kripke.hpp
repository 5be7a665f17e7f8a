// Finite multimodal Kripke frames: evaluation and the structural checks for
// J-frames, stratification, hereditary linearity and planes.
#pragma once

#include "plog/formula.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace plog {

using World = std::string;
using Edge = std::pair<World, World>;

/// A frame with relations rel[0..n-1]. An edge (u, v) in rel[k] means v is
/// k-accessible from u, i.e. <k>A holds at u when A holds at some such v.
/// Worlds are kept in lexicographic order; no structural property is assumed.
class FiniteFrame {
 public:
  FiniteFrame() = default;
  /// Throws std::invalid_argument on duplicate worlds, edges naming unknown
  /// worlds, or more relations than n.
  FiniteFrame(unsigned n, std::vector<World> worlds, const std::vector<std::vector<Edge>>& rel);

  unsigned n() const { return n_; }
  std::size_t size() const { return worlds_.size(); }
  const std::vector<World>& worlds() const { return worlds_; }
  const World& world(std::size_t i) const { return worlds_[i]; }
  std::optional<std::size_t> index_of(const World& w) const;

  bool related(unsigned k, std::size_t from, std::size_t to) const { return adj_[k][from * size() + to] != 0; }
  const std::vector<std::size_t>& successors(unsigned k, std::size_t from) const { return succ_[k][from]; }
  /// Edges of rel[k] by name, in lexicographic order.
  std::vector<Edge> edges(unsigned k) const;

  friend bool operator==(const FiniteFrame& a, const FiniteFrame& b) {
    return a.n_ == b.n_ && a.worlds_ == b.worlds_ && a.adj_ == b.adj_;
  }

 private:
  unsigned n_ = 0;
  std::vector<World> worlds_;
  std::vector<std::vector<char>> adj_;
  std::vector<std::vector<std::vector<std::size_t>>> succ_;
};

/// Variable name -> worlds where it holds. Unlisted variables are false everywhere.
using Valuation = std::map<std::string, std::set<World>>;

/// Truth value of f at every world, indexed like frame.worlds().
/// Throws std::invalid_argument if the signature of f exceeds frame.n() or
/// the valuation names an unknown world.
std::vector<bool> truth_values(const FiniteFrame& frame, const Valuation& val, const Formula& f);

bool eval_at(const FiniteFrame& frame, const Valuation& val, const World& w, const Formula& f);

struct FrameReport {
  std::string property;
  bool holds = true;
  /// Worlds that violate the property (empty when it holds).
  std::vector<World> witness;
  std::string detail;
};

/// Irreflexivity, transitivity and acyclicity of every relation, then the
/// three interaction conditions for every k < m:
///   (1) x <m y <k z  =>  x <k z
///   (2) x <k y <m z  =>  x <k z
///   (3) x <k z and y <m z  =>  x <k y
FrameReport check_j_frame(const FiniteFrame& frame);

/// For k < m: x <m y and z <k y imply z <k x. Witness (x, y, z).
FrameReport check_stratified(const FiniteFrame& frame);

/// Any two distinct worlds are related by some relation in some direction.
/// Throws std::invalid_argument if the frame is not a J-frame.
FrameReport check_hl_direct(const FiniteFrame& frame);

/// Equivalence classes of the closure of rel[k] u ... u rel[n-1];
/// k == n gives singletons. Classes and their members are sorted.
std::vector<std::vector<World>> planes_partition(const FiniteFrame& frame, unsigned k);

/// Plane characterisation of hereditary linearity: a single 0-plane, and for
/// every k each rel[k] is compatible with the (k+1)-planes and strictly,
/// linearly orders the (k+1)-planes inside every k-plane.
FrameReport check_hl_planes(const FiniteFrame& frame);

/// The unique world from which every other world is accessible, if any.
/// Throws std::invalid_argument if the frame is not a J-frame.
std::optional<World> find_root(const FiniteFrame& frame);

}  // namespace plog
