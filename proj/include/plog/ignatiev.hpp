// Ignatiev's universal frame for the closed fragment of GLP.
//
// Points are ordinal sequences x with x[i+1] <= log x[i], identified with
// their finite prefix up to the last nonzero entry. x reaches y by relation
// m when they agree below m and y[m] < x[m]. Definable sets are unions of
// cells: boxes of ordinal intervals on the first few coordinates.
#pragma once

#include "plog/formula.hpp"
#include "plog/jline.hpp"
#include "plog/ordinal.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace plog {

class IgPoint {
 public:
  IgPoint() = default;
  const std::vector<Ordinal>& coords() const { return coords_; }
  /// Coordinate i, zero past the stored prefix.
  Ordinal coord(std::size_t i) const { return i < coords_.size() ? coords_[i] : Ordinal(); }

  friend bool operator==(const IgPoint&, const IgPoint&) = default;

 private:
  friend IgPoint ig_validate(std::vector<Ordinal> coords);
  std::vector<Ordinal> coords_;
};

class IgPointError : public std::invalid_argument {
 public:
  IgPointError(const std::string& what, std::size_t index) : std::invalid_argument(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Checks the log chain and strips trailing zeros. Throws IgPointError
/// naming the first offending index.
IgPoint ig_validate(std::vector<Ordinal> coords);
/// (iota, log iota, log log iota, ...).
IgPoint delta_point(const Ordinal& iota);
/// "(w, 1)"; the origin is "()".
std::string render_point(const IgPoint& p);

struct Interval {
  Ordinal lo;
  std::optional<Ordinal> hi;  // empty means unbounded

  bool contains(const Ordinal& v) const { return lo <= v && (!hi || v < *hi); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Points with lo_i <= x[i] < hi_i for every listed coordinate i.
struct Cell {
  std::vector<Interval> constraints;

  bool contains(const IgPoint& p) const;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Finite union of cells, kept canonical: every cell is nonempty, has its
/// lower bounds raised to the least feasible values, and carries no trailing
/// unconstrained coordinates; cells are deduplicated and sorted by text.
class CellSet {
 public:
  CellSet() = default;
  static CellSet whole();
  static CellSet of(std::vector<Cell> cells);
  /// {x : x[0] <= iota}.
  static CellSet segment(const Ordinal& iota);
  /// {p}.
  static CellSet singleton(const IgPoint& p);

  const std::vector<Cell>& cells() const { return cells_; }
  bool is_empty() const { return cells_.empty(); }
  bool member(const IgPoint& p) const;
  /// Least point of the first cell, if any.
  std::optional<IgPoint> first_point() const;

  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  std::vector<Cell> cells_;
};

/// The cell with raised lower bounds and no trailing unconstrained
/// coordinates, or none if it has no points.
std::optional<Cell> canonical_cell(const Cell& c);

CellSet cs_union(const CellSet& a, const CellSet& b);
CellSet cs_intersect(const CellSet& a, const CellSet& b);
CellSet cs_complement(const CellSet& a);
CellSet cs_difference(const CellSet& a, const CellSet& b);
/// Points with a relation-m successor in a.
CellSet cs_diamond(unsigned m, const CellSet& a);
bool cs_equals(const CellSet& a, const CellSet& b);

/// "x0 in [lo,hi) ; x1 in [lo,hi)" per cell, one per line; "∞" when
/// unbounded. The whole space renders "x0 in [0,∞)", the empty set "empty".
std::string render_cell(const Cell& c);
std::string render_cellset(const CellSet& s);

/// Exact truth set. Throws std::invalid_argument on formulas with variables.
CellSet closed_truthset(const Formula& f);

struct ClosedVerdict {
  Status status = Status::Theorem;
  /// Least point of the first cell where f fails.
  std::optional<IgPoint> witness;
};

ClosedVerdict glp_closed_decide(const Formula& f);

/// Least iota such that f holds at delta_point(iota); none if f holds at no
/// main-axis point.
std::optional<Ordinal> axis_witness(const Formula& f);

Ordinal worm_ordinal(const Worm& w);
/// Worm whose ordinal is iota. Throws std::logic_error if the round trip fails.
Worm ordinal_worm(const Ordinal& iota);

/// Closed formula true exactly at delta_point(iota). Throws
/// std::logic_error if the truth set is not that singleton.
Formula axis_defining_formula(const Ordinal& iota);

/// Least k with <n-1>^k T -> <0>f a theorem. Throws std::invalid_argument if
/// f is not closed, n is 0 or f is inconsistent.
unsigned cover_k(const Formula& f, unsigned n);

}  // namespace plog
