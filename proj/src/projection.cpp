#include "plog/projection.hpp"

#include <algorithm>

namespace plog {

namespace {

// x[0] <= sigma.
Formula at_most(const Ordinal& sigma) { return Formula::neg(Formula::dia(0, axis_defining_formula(sigma))); }

ProjectionNode build_node(const JLineShape& s) {
  ProjectionNode node;
  node.shape = s;
  if (s.size() == 1) {
    node.kind = ProjectionCase::Singleton;
    node.core = {Formula::top()};
    node.full = {Formula::box(0, Formula::bottom())};
    return node;
  }
  if (s.children.size() == 1) {
    node.kind = ProjectionCase::Shift;
    ProjectionNode inner = build_node(s.children.front());
    node.iota = ord_omega_pow(inner.iota);
    const Formula guard = Formula::box(0, Formula::neg(axis_defining_formula(node.iota)));
    for (const Formula& f : inner.full) {
      node.core.push_back(shift_modalities(f, 1));
      node.full.push_back(Formula::conj(node.core.back(), guard));
    }
    node.parts.push_back(std::move(inner));
    return node;
  }
  node.kind = ProjectionCase::Sum;
  const std::size_t planes = s.children.size();
  for (const JLineShape& c : s.children) node.parts.push_back(build_node(JLineShape{{c}}));
  // The last plane sits at the bottom of coordinate 0, the root plane on top;
  // copies are separated by one point so every copy starts at a successor.
  node.offsets.assign(planes, Ordinal());
  std::vector<Ordinal> tops(planes);
  Ordinal offset;
  for (std::size_t j = 0; j < planes; ++j) {
    const std::size_t i = planes - 1 - j;
    node.offsets[i] = offset;
    tops[i] = offset + node.parts[i].iota;
    offset = ord_succ(tops[i]);
  }
  node.iota = tops.front();
  for (std::size_t i = 0; i < planes; ++i) {
    std::vector<Formula> guards;
    if (i + 1 < planes) guards.push_back(Formula::dia(0, axis_defining_formula(tops[i + 1])));
    guards.push_back(at_most(tops[i]));
    for (const Formula& core : node.parts[i].core) {
      std::vector<Formula> conj{core};
      conj.insert(conj.end(), guards.begin(), guards.end());
      node.full.push_back(conj_all(conj));
    }
  }
  node.core = node.full;
  return node;
}

std::size_t project_index(const ProjectionNode& node, const IgPoint& p) {
  switch (node.kind) {
    case ProjectionCase::Singleton: return 0;
    case ProjectionCase::Shift: {
      std::vector<Ordinal> tail(p.coords().begin() + std::min<std::ptrdiff_t>(1, static_cast<std::ptrdiff_t>(p.coords().size())),
                                p.coords().end());
      return project_index(node.parts.front(), ig_validate(std::move(tail)));
    }
    case ProjectionCase::Sum: {
      const Ordinal x0 = p.coord(0);
      std::size_t before = 0;
      for (std::size_t i = 0; i < node.parts.size(); ++i) before += node.parts[i].full.size();
      for (std::size_t i = node.parts.size(); i > 0; --i) {
        const ProjectionNode& part = node.parts[i - 1];
        before -= part.full.size();
        if (x0 <= node.offsets[i - 1] + part.iota) {
          std::vector<Ordinal> coords = p.coords();
          if (coords.empty()) coords.emplace_back();
          coords[0] = ord_sub_left(x0, node.offsets[i - 1]);
          return before + project_index(part, ig_validate(std::move(coords)));
        }
      }
      break;
    }
  }
  throw std::invalid_argument("point lies outside the projected segment");
}

}  // namespace

ProjectionSpec build_projection(const JLineShape& s) {
  if (s.depth() == 0) throw std::invalid_argument("build_projection: shape needs at least one modality");
  ProjectionSpec ps;
  ps.shape = s;
  ps.tree = build_node(s);
  ps.iota = ps.tree.iota;
  const std::vector<WorldTuple> ts = world_tuples(s);
  std::vector<CellSet> sets;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    ps.defs.emplace(tuple_name(ts[i]), ps.tree.full[i]);
    sets.push_back(closed_truthset(ps.tree.full[i]));
  }
  const CellSet segment = CellSet::segment(ps.iota);
  CellSet covered;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (sets[i].is_empty()) throw ProjectionError("empty preimage", tuple_name(ts[i]));
    if (!cs_difference(sets[i], segment).is_empty()) throw ProjectionError("preimage leaves the segment", tuple_name(ts[i]));
    if (!cs_intersect(sets[i], covered).is_empty()) throw ProjectionError("overlapping preimages", tuple_name(ts[i]));
    covered = cs_union(covered, sets[i]);
  }
  if (!cs_equals(covered, segment)) throw ProjectionError("preimages do not cover the segment", tuple_name(ts.front()));
  if (!cs_equals(sets.front(), CellSet::singleton(delta_point(ps.iota))))
    throw ProjectionError("root preimage is not the axis point", tuple_name(ts.front()));
  return ps;
}

World project_point(const ProjectionSpec& ps, const IgPoint& p) {
  if (p.coord(0) > ps.iota) throw std::invalid_argument("project_point: point lies above the segment");
  return tuple_name(world_tuples(ps.shape)[project_index(ps.tree, p)]);
}

Formula closed_substitution_witness(const JLineShape& s, const Valuation& v, const Formula& f) {
  return closed_substitution_witness(build_projection(s), v, f);
}

Formula closed_substitution_witness(const ProjectionSpec& ps, const Valuation& v, const Formula& f) {
  const unsigned n = ps.shape.depth();
  const FiniteFrame frame = materialize(ps.shape);
  const World root = tuple_name(world_tuples(ps.shape).front());
  if (!eval_at(frame, v, root, Formula::conj(f, m_plus(f, n))))
    throw std::invalid_argument("closed_substitution_witness: root does not satisfy the formula and its guards");
  std::map<std::string, Formula> subst;
  for (const std::string& p : variables(f)) {
    std::vector<Formula> parts;
    if (auto it = v.find(p); it != v.end())
      for (const World& w : it->second) parts.push_back(ps.defs.at(w));
    subst.emplace(p, disj_all(parts));
  }
  Formula closed = substitute_closed(f, subst);
  if (!closed_truthset(closed).member(delta_point(ps.iota)))
    throw std::logic_error("closed substitution fails at the axis point");
  return closed;
}

}  // namespace plog
