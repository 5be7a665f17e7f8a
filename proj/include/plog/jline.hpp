// J-lines: finite hereditarily linear J-frames as nested ordered planes,
// plus the bounded decision procedures built on them.
#pragma once

#include "plog/formula.hpp"
#include "plog/kripke.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plog {

/// A leaf has no children. A shape for n modalities is a node whose children
/// are shapes for n-1 modalities: the 1-planes in order, root side first.
struct JLineShape {
  std::vector<JLineShape> children;

  static JLineShape leaf() { return {}; }
  /// Single world with n modalities.
  static JLineShape point(unsigned n);

  bool is_leaf() const { return children.empty(); }
  /// Common depth of all leaves; throws std::invalid_argument if uneven.
  unsigned depth() const;
  /// Number of worlds (leaves).
  std::size_t size() const;

  friend bool operator==(const JLineShape&, const JLineShape&) = default;
};

using WorldTuple = std::vector<unsigned>;

/// Leaf coordinates in lexicographic order; the first is the all-zero root.
std::vector<WorldTuple> world_tuples(const JLineShape& s);
/// "(0,1)".
std::string tuple_name(const WorldTuple& t);

/// For consecutive worlds in lexicographic order, the first coordinate where
/// they differ. Shapes of depth n and size N correspond one-to-one to words of
/// length N-1 over {0..n-1}.
std::vector<unsigned> level_word(const JLineShape& s);
JLineShape shape_from_level_word(unsigned n, const std::vector<unsigned>& word);

/// Nested brackets: a node is "[...]" around its children, a leaf is ".".
std::string render_shape(const JLineShape& s);
/// Throws std::invalid_argument on malformed text or uneven depth.
JLineShape parse_shape(std::string_view text);

/// Worlds are tuple names; x <k y iff x and y agree below k and y_k > x_k.
FiniteFrame materialize(const JLineShape& s);

/// Recovers the shape of a hereditarily linear J-frame together with the
/// tuple assigned to each frame world. Empty if the frame is not one.
struct ShapeMatch {
  JLineShape shape;
  std::map<World, WorldTuple> tuples;
};
std::optional<ShapeMatch> shape_of_frame(const FiniteFrame& frame);

/// Calls visit on every shape with 1..max_worlds worlds, ordered by size and
/// then by level word. Stops early when visit returns false.
void for_each_jline(unsigned n, std::size_t max_worlds, const std::function<bool(const JLineShape&)>& visit);
std::vector<JLineShape> enumerate_jlines(unsigned n, std::size_t max_worlds);

/// max(1, (k+1) * k^(n-1)) with k = modal_count(f); saturates at UINT64_MAX.
std::uint64_t jline_size_bound(const Formula& f, unsigned n);

enum class Status { Theorem, Refuted, Inconclusive };
std::string to_string(Status s);

struct Countermodel {
  JLineShape shape;
  Valuation valuation;
  World world;
};

struct Verdict {
  Status status = Status::Inconclusive;
  std::optional<Countermodel> countermodel;
  /// Size bound for the searched formula.
  std::uint64_t bound_used = 0;
  /// Largest model size examined.
  std::uint64_t searched_worlds = 0;
};

constexpr std::uint64_t kDefaultCap = 5000;

/// Searches J-lines for a world satisfying f. Refuted means satisfiable and
/// carries the witness; theorem means f is inconsistent with the logic of
/// n-modal J-lines. Throws std::invalid_argument if n < max(1, signature).
Verdict jlin_satisfy(const Formula& f, unsigned n, std::uint64_t cap = kDefaultCap);

/// Decides f in GLP.3 by looking for a J-line whose root satisfies
/// ~f & guards(~f). The countermodel is a least-size one.
Verdict glp3_decide(const Formula& f, std::uint64_t cap = kDefaultCap);

/// The formula glp3_decide searches for at the root.
Formula glp3_search_target(const Formula& f, unsigned n);

}  // namespace plog
