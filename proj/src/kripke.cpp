#include "plog/kripke.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace plog {

FiniteFrame::FiniteFrame(unsigned n, std::vector<World> worlds, const std::vector<std::vector<Edge>>& rel)
    : n_(n), worlds_(std::move(worlds)) {
  std::sort(worlds_.begin(), worlds_.end());
  if (std::adjacent_find(worlds_.begin(), worlds_.end()) != worlds_.end())
    throw std::invalid_argument("duplicate world name");
  if (rel.size() > n_) throw std::invalid_argument("more relations than modalities");
  const std::size_t sz = worlds_.size();
  adj_.assign(n_, std::vector<char>(sz * sz, 0));
  succ_.assign(n_, std::vector<std::vector<std::size_t>>(sz));
  for (unsigned k = 0; k < rel.size(); ++k) {
    for (const auto& [u, v] : rel[k]) {
      auto iu = index_of(u);
      auto iv = index_of(v);
      if (!iu || !iv) throw std::invalid_argument("edge names an unknown world in relation " + std::to_string(k));
      adj_[k][*iu * sz + *iv] = 1;
    }
  }
  for (unsigned k = 0; k < n_; ++k)
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j)
        if (adj_[k][i * sz + j]) succ_[k][i].push_back(j);
}

std::optional<std::size_t> FiniteFrame::index_of(const World& w) const {
  auto it = std::lower_bound(worlds_.begin(), worlds_.end(), w);
  if (it == worlds_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - worlds_.begin());
}

std::vector<Edge> FiniteFrame::edges(unsigned k) const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j : succ_[k][i]) out.emplace_back(worlds_[i], worlds_[j]);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

class Evaluator {
 public:
  Evaluator(const FiniteFrame& frame, const Valuation& val) : frame_(frame) {
    for (const auto& [p, ws] : val) {
      std::vector<bool> bits(frame.size(), false);
      for (const World& w : ws) {
        auto i = frame.index_of(w);
        if (!i) throw std::invalid_argument("valuation of '" + p + "' names unknown world '" + w + "'");
        bits[*i] = true;
      }
      vars_.emplace(p, std::move(bits));
    }
  }

  const std::vector<bool>& eval(const Formula& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    const std::size_t sz = frame_.size();
    std::vector<bool> out(sz, false);
    switch (f.op()) {
      case Op::Top: out.assign(sz, true); break;
      case Op::Var:
        if (auto it = vars_.find(f.name()); it != vars_.end()) out = it->second;
        break;
      case Op::Not: {
        const auto& a = eval(f.lhs());
        for (std::size_t i = 0; i < sz; ++i) out[i] = !a[i];
        break;
      }
      case Op::And:
      case Op::Or:
      case Op::Imp: {
        std::vector<bool> a = eval(f.lhs());
        const auto& b = eval(f.rhs());
        for (std::size_t i = 0; i < sz; ++i)
          out[i] = f.op() == Op::And ? (a[i] && b[i]) : f.op() == Op::Or ? (a[i] || b[i]) : (!a[i] || b[i]);
        break;
      }
      case Op::Box:
      case Op::Dia: {
        const auto& a = eval(f.lhs());
        const bool box = f.op() == Op::Box;
        for (std::size_t i = 0; i < sz; ++i) {
          bool v = box;
          for (std::size_t j : frame_.successors(f.index(), i)) {
            if (a[j] != box) {
              v = !box;
              break;
            }
          }
          out[i] = v;
        }
        break;
      }
    }
    return memo_.emplace(f, std::move(out)).first->second;
  }

 private:
  const FiniteFrame& frame_;
  std::map<std::string, std::vector<bool>> vars_;
  std::map<Formula, std::vector<bool>> memo_;
};

}  // namespace

std::vector<bool> truth_values(const FiniteFrame& frame, const Valuation& val, const Formula& f) {
  if (modal_signature(f) > frame.n())
    throw std::invalid_argument("formula uses modality " + std::to_string(modal_signature(f) - 1) +
                                " but the frame has " + std::to_string(frame.n()) + " relations");
  Evaluator ev(frame, val);
  return ev.eval(f);
}

bool eval_at(const FiniteFrame& frame, const Valuation& val, const World& w, const Formula& f) {
  auto i = frame.index_of(w);
  if (!i) throw std::invalid_argument("unknown world '" + w + "'");
  return truth_values(frame, val, f)[*i];
}

// ---------------------------------------------------------------------------
// Structural checks

namespace {

FrameReport ok(std::string property) { return FrameReport{std::move(property), true, {}, {}}; }

FrameReport violation(std::string property, const FiniteFrame& fr, std::initializer_list<std::size_t> ws,
                      std::string detail) {
  FrameReport r{std::move(property), false, {}, std::move(detail)};
  for (std::size_t i : ws) r.witness.push_back(fr.world(i));
  return r;
}

bool has_cycle(const FiniteFrame& fr, unsigned k) {
  const std::size_t sz = fr.size();
  std::vector<int> color(sz, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t s = 0; s < sz; ++s) {
    if (color[s]) continue;
    stack.emplace_back(s, 0);
    color[s] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      const auto& out = fr.successors(k, u);
      if (next < out.size()) {
        std::size_t v = out[next++];
        if (color[v] == 1) return true;
        if (color[v] == 0) {
          color[v] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        color[u] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

// Class id (smallest member index) of every world under the k-plane relation.
std::vector<std::size_t> plane_ids(const FiniteFrame& fr, unsigned k) {
  UnionFind uf(fr.size());
  for (unsigned j = k; j < fr.n(); ++j)
    for (std::size_t i = 0; i < fr.size(); ++i)
      for (std::size_t t : fr.successors(j, i)) uf.unite(i, t);
  std::vector<std::size_t> ids(fr.size());
  for (std::size_t i = 0; i < fr.size(); ++i) ids[i] = uf.find(i);
  return ids;
}

void require_j_frame(const FiniteFrame& fr, const char* who) {
  FrameReport r = check_j_frame(fr);
  if (!r.holds) throw std::invalid_argument(std::string(who) + ": frame is not a J-frame (" + r.detail + ")");
}

}  // namespace

FrameReport check_j_frame(const FiniteFrame& fr) {
  const std::string prop = "j-frame";
  const std::size_t sz = fr.size();
  for (unsigned k = 0; k < fr.n(); ++k) {
    for (std::size_t x = 0; x < sz; ++x)
      if (fr.related(k, x, x)) return violation(prop, fr, {x}, "relation " + std::to_string(k) + " is reflexive");
    for (std::size_t x = 0; x < sz; ++x)
      for (std::size_t y : fr.successors(k, x))
        for (std::size_t z : fr.successors(k, y))
          if (!fr.related(k, x, z))
            return violation(prop, fr, {x, y, z}, "relation " + std::to_string(k) + " is not transitive");
    if (has_cycle(fr, k)) return violation(prop, fr, {}, "relation " + std::to_string(k) + " has a cycle");
  }
  for (unsigned k = 0; k < fr.n(); ++k) {
    for (unsigned m = k + 1; m < fr.n(); ++m) {
      const std::string km = " (k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")";
      for (std::size_t x = 0; x < sz; ++x)
        for (std::size_t y : fr.successors(m, x))
          for (std::size_t z : fr.successors(k, y))
            if (!fr.related(k, x, z)) return violation(prop, fr, {x, y, z}, "x <m y <k z but not x <k z" + km);
      for (std::size_t x = 0; x < sz; ++x)
        for (std::size_t y : fr.successors(k, x))
          for (std::size_t z : fr.successors(m, y))
            if (!fr.related(k, x, z)) return violation(prop, fr, {x, y, z}, "x <k y <m z but not x <k z" + km);
      for (std::size_t x = 0; x < sz; ++x)
        for (std::size_t z : fr.successors(k, x))
          for (std::size_t y = 0; y < sz; ++y)
            if (fr.related(m, y, z) && !fr.related(k, x, y))
              return violation(prop, fr, {x, y, z}, "x <k z and y <m z but not x <k y" + km);
    }
  }
  return ok(prop);
}

FrameReport check_stratified(const FiniteFrame& fr) {
  const std::string prop = "stratified";
  for (unsigned k = 0; k < fr.n(); ++k)
    for (unsigned m = k + 1; m < fr.n(); ++m)
      for (std::size_t x = 0; x < fr.size(); ++x)
        for (std::size_t y : fr.successors(m, x))
          for (std::size_t z = 0; z < fr.size(); ++z)
            if (fr.related(k, z, y) && !fr.related(k, z, x))
              return violation(prop, fr, {x, y, z},
                               "x <m y and z <k y but not z <k x (k=" + std::to_string(k) +
                                   ", m=" + std::to_string(m) + ")");
  return ok(prop);
}

FrameReport check_hl_direct(const FiniteFrame& fr) {
  require_j_frame(fr, "check_hl_direct");
  const std::string prop = "hereditarily-linear";
  for (std::size_t x = 0; x < fr.size(); ++x)
    for (std::size_t y = x + 1; y < fr.size(); ++y) {
      bool related = false;
      for (unsigned k = 0; k < fr.n() && !related; ++k) related = fr.related(k, x, y) || fr.related(k, y, x);
      if (!related) return violation(prop, fr, {x, y}, "worlds are unrelated");
    }
  return ok(prop);
}

std::vector<std::vector<World>> planes_partition(const FiniteFrame& fr, unsigned k) {
  if (k > fr.n()) throw std::invalid_argument("planes_partition: k exceeds the number of relations");
  std::vector<std::size_t> ids = plane_ids(fr, k);
  std::map<std::size_t, std::vector<World>> classes;
  for (std::size_t i = 0; i < fr.size(); ++i) classes[ids[i]].push_back(fr.world(i));
  std::vector<std::vector<World>> out;
  for (auto& [id, members] : classes) out.push_back(std::move(members));
  return out;
}

FrameReport check_hl_planes(const FiniteFrame& fr) {
  const std::string prop = "hl-planes";
  const std::size_t sz = fr.size();
  if (sz == 0) return ok(prop);
  std::vector<std::size_t> zero = plane_ids(fr, 0);
  for (std::size_t i = 1; i < sz; ++i)
    if (zero[i] != zero[0]) return violation(prop, fr, {0, i}, "more than one 0-plane");

  for (unsigned k = 0; k < fr.n(); ++k) {
    const std::string ks = " (k=" + std::to_string(k) + ")";
    std::vector<std::size_t> outer = plane_ids(fr, k);
    std::vector<std::size_t> inner = plane_ids(fr, k + 1);
    // Plane-level relation between (k+1)-planes, keyed by class ids.
    std::set<std::pair<std::size_t, std::size_t>> plane_rel;
    for (std::size_t u = 0; u < sz; ++u)
      for (std::size_t v : fr.successors(k, u)) {
        if (inner[u] == inner[v]) return violation(prop, fr, {u, v}, "edge inside a (k+1)-plane" + ks);
        plane_rel.emplace(inner[u], inner[v]);
      }
    // Compatibility: an edge between two planes relates all their members.
    for (std::size_t a = 0; a < sz; ++a)
      for (std::size_t b = 0; b < sz; ++b)
        if (plane_rel.count({inner[a], inner[b]}) && !fr.related(k, a, b))
          return violation(prop, fr, {a, b}, "relation not compatible with (k+1)-planes" + ks);
    // Strict linear order of the (k+1)-planes inside each k-plane.
    std::set<std::size_t> reps(inner.begin(), inner.end());
    for (std::size_t p : reps)
      for (std::size_t q : reps) {
        if (p >= q || outer[p] != outer[q]) continue;
        bool pq = plane_rel.count({p, q}) > 0;
        bool qp = plane_rel.count({q, p}) > 0;
        if (pq == qp)
          return violation(prop, fr, {p, q},
                           std::string(pq ? "planes related both ways" : "planes unrelated") + ks);
      }
    for (auto [p, q] : plane_rel)
      for (std::size_t r : reps)
        if (plane_rel.count({q, r}) && !plane_rel.count({p, r}))
          return violation(prop, fr, {p, q, r}, "plane order not transitive" + ks);
  }
  return ok(prop);
}

std::optional<World> find_root(const FiniteFrame& fr) {
  require_j_frame(fr, "find_root");
  std::optional<World> root;
  for (std::size_t w = 0; w < fr.size(); ++w) {
    bool all = true;
    for (std::size_t v = 0; v < fr.size() && all; ++v) {
      if (v == w) continue;
      bool reach = false;
      for (unsigned k = 0; k < fr.n() && !reach; ++k) reach = fr.related(k, w, v);
      all = reach;
    }
    if (all) {
      if (root) return std::nullopt;
      root = fr.world(w);
    }
  }
  return root;
}

}  // namespace plog
