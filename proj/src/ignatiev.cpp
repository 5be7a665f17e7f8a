#include "plog/ignatiev.hpp"

#include <algorithm>
#include <map>

namespace plog {

IgPoint ig_validate(std::vector<Ordinal> coords) {
  for (std::size_t i = 1; i < coords.size(); ++i)
    if (coords[i] > ord_log(coords[i - 1]))
      throw IgPointError("coordinate " + std::to_string(i) + " exceeds the log of its predecessor", i);
  while (!coords.empty() && coords.back().is_zero()) coords.pop_back();
  IgPoint p;
  p.coords_ = std::move(coords);
  return p;
}

IgPoint delta_point(const Ordinal& iota) {
  std::vector<Ordinal> cs;
  for (Ordinal v = iota; !v.is_zero(); v = ord_log(v)) cs.push_back(v);
  return ig_validate(std::move(cs));
}

std::string render_point(const IgPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i) s += ", ";
    s += ord_render(p.coords()[i]);
  }
  return s + ")";
}

bool Cell::contains(const IgPoint& p) const {
  for (std::size_t i = 0; i < constraints.size(); ++i)
    if (!constraints[i].contains(p.coord(i))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Cell algebra

namespace {

const Interval kFree{Ordinal(), std::nullopt};

const Interval& at(const Cell& c, std::size_t i) { return i < c.constraints.size() ? c.constraints[i] : kFree; }

bool hi_le(const std::optional<Ordinal>& a, const std::optional<Ordinal>& b) { return !b || (a && *a <= *b); }

bool subsumed(const Cell& a, const Cell& b) {
  const std::size_t d = std::max(a.constraints.size(), b.constraints.size());
  for (std::size_t i = 0; i < d; ++i) {
    const Interval& x = at(a, i);
    const Interval& y = at(b, i);
    if (x.lo < y.lo || !hi_le(x.hi, y.hi)) return false;
  }
  return true;
}

Cell intersect_cells(const Cell& a, const Cell& b) {
  Cell out;
  const std::size_t d = std::max(a.constraints.size(), b.constraints.size());
  for (std::size_t i = 0; i < d; ++i) {
    const Interval& x = at(a, i);
    const Interval& y = at(b, i);
    Interval r{std::max(x.lo, y.lo), x.hi};
    if (!r.hi || (y.hi && *y.hi < *r.hi)) r.hi = y.hi;
    out.constraints.push_back(std::move(r));
  }
  return out;
}

std::vector<Cell> complement_cell(const Cell& c) {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < c.constraints.size(); ++i) {
    Cell prefix;
    prefix.constraints.assign(c.constraints.begin(), c.constraints.begin() + static_cast<std::ptrdiff_t>(i));
    const Interval& iv = c.constraints[i];
    if (!iv.lo.is_zero()) {
      Cell below = prefix;
      below.constraints.push_back(Interval{Ordinal(), iv.lo});
      out.push_back(std::move(below));
    }
    if (iv.hi) {
      Cell above = prefix;
      above.constraints.push_back(Interval{*iv.hi, std::nullopt});
      out.push_back(std::move(above));
    }
  }
  return out;
}

}  // namespace

std::optional<Cell> canonical_cell(const Cell& c) {
  Cell out = c;
  auto& cs = out.constraints;
  Ordinal need;  // least feasible value one coordinate further out
  for (std::size_t i = cs.size(); i > 0; --i) {
    Interval& iv = cs[i - 1];
    Ordinal least = least_with_log_at_least(iv.lo, need);
    if (iv.hi && least >= *iv.hi) return std::nullopt;
    iv.lo = least;
    need = least;
  }
  while (!cs.empty() && cs.back() == kFree) cs.pop_back();
  return out;
}

std::string render_cell(const Cell& c) {
  if (c.constraints.empty()) return "x0 in [0,∞)";
  std::string s;
  for (std::size_t i = 0; i < c.constraints.size(); ++i) {
    const Interval& iv = c.constraints[i];
    if (i) s += " ; ";
    s += "x" + std::to_string(i) + " in [" + ord_render(iv.lo) + "," + (iv.hi ? ord_render(*iv.hi) : "∞") + ")";
  }
  return s;
}

std::string render_cellset(const CellSet& s) {
  if (s.is_empty()) return "empty";
  std::string out;
  for (const Cell& c : s.cells()) out += render_cell(c) + "\n";
  out.pop_back();
  return out;
}

CellSet CellSet::whole() { return of({Cell{}}); }

CellSet CellSet::of(std::vector<Cell> cells) {
  std::vector<std::pair<std::string, Cell>> keyed;
  for (const Cell& c : cells)
    if (auto cc = canonical_cell(c)) keyed.emplace_back(render_cell(*cc), std::move(*cc));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  CellSet out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    bool dropped = false;
    for (std::size_t j = 0; j < keyed.size() && !dropped; ++j)
      dropped = j != i && subsumed(keyed[i].second, keyed[j].second);
    if (!dropped) out.cells_.push_back(keyed[i].second);
  }
  return out;
}

CellSet CellSet::segment(const Ordinal& iota) { return of({Cell{{Interval{Ordinal(), ord_succ(iota)}}}}); }

CellSet CellSet::singleton(const IgPoint& p) {
  Cell c;
  for (const Ordinal& v : p.coords()) c.constraints.push_back(Interval{v, ord_succ(v)});
  c.constraints.push_back(Interval{Ordinal(), Ordinal(1)});
  return of({std::move(c)});
}

bool CellSet::member(const IgPoint& p) const {
  return std::any_of(cells_.begin(), cells_.end(), [&](const Cell& c) { return c.contains(p); });
}

std::optional<IgPoint> CellSet::first_point() const {
  if (cells_.empty()) return std::nullopt;
  std::vector<Ordinal> coords;
  for (const Interval& iv : cells_.front().constraints) coords.push_back(iv.lo);
  return ig_validate(std::move(coords));
}

CellSet cs_union(const CellSet& a, const CellSet& b) {
  std::vector<Cell> cells = a.cells();
  cells.insert(cells.end(), b.cells().begin(), b.cells().end());
  return CellSet::of(std::move(cells));
}

CellSet cs_intersect(const CellSet& a, const CellSet& b) {
  std::vector<Cell> cells;
  for (const Cell& x : a.cells())
    for (const Cell& y : b.cells()) cells.push_back(intersect_cells(x, y));
  return CellSet::of(std::move(cells));
}

CellSet cs_complement(const CellSet& a) {
  CellSet out = CellSet::whole();
  for (const Cell& c : a.cells()) {
    out = cs_intersect(out, CellSet::of(complement_cell(c)));
    if (out.is_empty()) break;
  }
  return out;
}

CellSet cs_difference(const CellSet& a, const CellSet& b) { return cs_intersect(a, cs_complement(b)); }

CellSet cs_diamond(unsigned m, const CellSet& a) {
  std::vector<Cell> cells;
  for (const Cell& c : a.cells()) {
    // Canonical cells start each coordinate at its least feasible value.
    const std::size_t d = c.constraints.size();
    Ordinal least = m < d ? c.constraints[m].lo : Ordinal();
    Cell out;
    for (std::size_t i = 0; i < m; ++i) out.constraints.push_back(at(c, i));
    out.constraints.push_back(Interval{ord_succ(least), std::nullopt});
    cells.push_back(std::move(out));
  }
  return CellSet::of(std::move(cells));
}

bool cs_equals(const CellSet& a, const CellSet& b) {
  return cs_difference(a, b).is_empty() && cs_difference(b, a).is_empty();
}

// ---------------------------------------------------------------------------
// Truth sets

namespace {

CellSet truthset_cached(const Formula& f, std::map<Formula, CellSet>& cache) {
  if (auto it = cache.find(f); it != cache.end()) return it->second;
  CellSet out;
  switch (f.op()) {
    case Op::Top: out = CellSet::whole(); break;
    case Op::Var: throw std::invalid_argument("closed_truthset: formula has variable '" + f.name() + "'");
    case Op::Not: out = cs_complement(truthset_cached(f.lhs(), cache)); break;
    case Op::And: out = cs_intersect(truthset_cached(f.lhs(), cache), truthset_cached(f.rhs(), cache)); break;
    case Op::Or: out = cs_union(truthset_cached(f.lhs(), cache), truthset_cached(f.rhs(), cache)); break;
    case Op::Imp:
      out = cs_union(cs_complement(truthset_cached(f.lhs(), cache)), truthset_cached(f.rhs(), cache));
      break;
    case Op::Dia: out = cs_diamond(f.index(), truthset_cached(f.lhs(), cache)); break;
    case Op::Box:
      out = cs_complement(cs_diamond(f.index(), cs_complement(truthset_cached(f.lhs(), cache))));
      break;
  }
  cache.emplace(f, out);
  return out;
}

}  // namespace

CellSet closed_truthset(const Formula& f) {
  thread_local std::map<Formula, CellSet> cache;
  if (cache.size() > 200000) cache.clear();
  return truthset_cached(f, cache);
}

ClosedVerdict glp_closed_decide(const Formula& f) {
  CellSet bad = closed_truthset(Formula::neg(f));
  if (bad.is_empty()) return ClosedVerdict{Status::Theorem, std::nullopt};
  return ClosedVerdict{Status::Refuted, bad.first_point()};
}

// ---------------------------------------------------------------------------
// Main axis

namespace {

// Does the axis continue validly from coordinate i with value v there?
bool axis_member(const Cell& c, std::size_t i, const Ordinal& v) {
  for (Ordinal x = v; i < c.constraints.size(); ++i, x = ord_log(x))
    if (!c.constraints[i].contains(x)) return false;
  return true;
}

// Least v >= floor with axis_member(c, i, v).
std::optional<Ordinal> axis_least(const Cell& c, std::size_t i, const Ordinal& floor) {
  if (i >= c.constraints.size()) return floor;
  const Interval& iv = c.constraints[i];
  const Ordinal start = std::max(floor, iv.lo);
  if (iv.hi && start >= *iv.hi) return std::nullopt;
  const Ordinal e = ord_log(start);
  if (axis_member(c, i + 1, e)) return start;
  // Any larger v has log below e only via start + w^b, else a log above e.
  std::optional<Ordinal> low = axis_least(c, i + 1, Ordinal());
  if (!low) return std::nullopt;
  Ordinal candidate;
  if (*low < e) {
    candidate = start + ord_omega_pow(*low);
  } else {
    std::optional<Ordinal> high = axis_least(c, i + 1, ord_succ(e));
    if (!high) return std::nullopt;
    candidate = least_with_log_equal(start, *high);
  }
  if (iv.hi && candidate >= *iv.hi) return std::nullopt;
  return candidate;
}

Worm shifted_up(Worm w) {
  for (unsigned& i : w.indices) ++i;
  return w;
}

Worm concat(Worm a, const Worm& b) {
  a.indices.insert(a.indices.end(), b.indices.begin(), b.indices.end());
  return a;
}

Worm worm_recipe(const Ordinal& iota) {
  if (iota.is_zero()) return Worm{};
  const auto& terms = iota.terms();
  const OrdinalTerm& last = terms.back();
  std::vector<OrdinalTerm> rest(terms.begin(), terms.end() - 1);
  if (last.coefficient > 1) rest.push_back(OrdinalTerm{last.exponent, last.coefficient - 1});
  const Ordinal gamma = Ordinal::from_terms(std::move(rest));
  if (last.exponent.is_zero()) return concat(Worm{{0}}, worm_recipe(gamma));
  Worm head = shifted_up(worm_recipe(last.exponent));
  if (gamma.is_zero()) return head;
  return concat(concat(std::move(head), Worm{{0}}), worm_recipe(gamma));
}

}  // namespace

std::optional<Ordinal> axis_witness(const Formula& f) {
  std::optional<Ordinal> best;
  const CellSet truth = closed_truthset(f);
  for (const Cell& c : truth.cells()) {
    auto v = axis_least(c, 0, Ordinal());
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

Ordinal worm_ordinal(const Worm& w) {
  auto v = axis_witness(w.to_formula());
  if (!v) throw std::logic_error("worm holds nowhere on the main axis");
  return *v;
}

Worm ordinal_worm(const Ordinal& iota) {
  Worm w = worm_recipe(iota);
  if (worm_ordinal(w) != iota) throw std::logic_error("worm construction failed for " + ord_render(iota));
  return w;
}

Formula axis_defining_formula(const Ordinal& iota) {
  Formula f;
  if (iota.is_zero()) {
    f = Formula::box(0, Formula::bottom());
  } else {
    Formula a = ordinal_worm(iota).to_formula();
    f = Formula::conj(a, Formula::box(0, Formula::neg(a)));
  }
  if (!cs_equals(closed_truthset(f), CellSet::singleton(delta_point(iota))))
    throw std::logic_error("axis formula does not define the axis point for " + ord_render(iota));
  return f;
}

unsigned cover_k(const Formula& f, unsigned n) {
  if (n == 0) throw std::invalid_argument("cover_k: n must be positive");
  if (!f.is_closed()) throw std::invalid_argument("cover_k: formula is not closed");
  if (glp_closed_decide(Formula::neg(f)).status == Status::Theorem)
    throw std::invalid_argument("cover_k: formula is inconsistent");
  const Formula goal = Formula::dia(0, f);
  Formula power = Formula::top();
  for (unsigned k = 0; k <= 64; ++k) {
    if (glp_closed_decide(Formula::imp(power, goal)).status == Status::Theorem) return k;
    power = Formula::dia(n - 1, power);
  }
  throw std::logic_error("cover_k: no k up to 64");
}

}  // namespace plog
