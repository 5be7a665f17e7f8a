#include "plog/jline.hpp"

#include "plog/jline_search.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace plog {

JLineShape JLineShape::point(unsigned n) {
  JLineShape s;
  for (unsigned i = 0; i < n; ++i) {
    JLineShape up;
    up.children.push_back(std::move(s));
    s = std::move(up);
  }
  return s;
}

unsigned JLineShape::depth() const {
  if (is_leaf()) return 0;
  unsigned d = children.front().depth();
  for (const auto& c : children)
    if (c.depth() != d) throw std::invalid_argument("shape has leaves at different depths");
  return d + 1;
}

std::size_t JLineShape::size() const {
  if (is_leaf()) return 1;
  std::size_t total = 0;
  for (const auto& c : children) total += c.size();
  return total;
}

namespace {

void collect_tuples(const JLineShape& s, WorldTuple& prefix, std::vector<WorldTuple>& out) {
  if (s.is_leaf()) {
    out.push_back(prefix);
    return;
  }
  for (unsigned i = 0; i < s.children.size(); ++i) {
    prefix.push_back(i);
    collect_tuples(s.children[i], prefix, out);
    prefix.pop_back();
  }
}

unsigned first_difference(const WorldTuple& a, const WorldTuple& b) {
  unsigned k = 0;
  while (k < a.size() && a[k] == b[k]) ++k;
  return k;
}

}  // namespace

std::vector<WorldTuple> world_tuples(const JLineShape& s) {
  s.depth();
  std::vector<WorldTuple> out;
  WorldTuple prefix;
  collect_tuples(s, prefix, out);
  return out;
}

std::string tuple_name(const WorldTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

std::vector<unsigned> level_word(const JLineShape& s) {
  std::vector<WorldTuple> ts = world_tuples(s);
  std::vector<unsigned> word;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) word.push_back(first_difference(ts[i], ts[i + 1]));
  return word;
}

JLineShape shape_from_level_word(unsigned n, const std::vector<unsigned>& word) {
  if (n == 0) {
    if (!word.empty()) throw std::invalid_argument("a 0-modal shape has a single world");
    return JLineShape::leaf();
  }
  JLineShape root = JLineShape::point(n);
  // path[j]: node at depth j on the rightmost branch.
  std::vector<JLineShape*> path(n);
  auto refresh = [&](unsigned from) {
    for (unsigned j = from; j < n; ++j) path[j] = j == 0 ? &root : &path[j - 1]->children.back();
  };
  refresh(0);
  for (unsigned k : word) {
    if (k >= n) throw std::invalid_argument("level word letter " + std::to_string(k) + " is not below n");
    path[k]->children.push_back(JLineShape::point(n - k - 1));
    refresh(k + 1);
  }
  return root;
}

std::string render_shape(const JLineShape& s) {
  if (s.is_leaf()) return ".";
  std::string out = "[";
  for (const auto& c : s.children) out += render_shape(c);
  return out + "]";
}

namespace {

JLineShape parse_shape_at(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw std::invalid_argument("shape text ends early");
  if (text[pos] == '.') {
    ++pos;
    return JLineShape::leaf();
  }
  if (text[pos] != '[')
    throw std::invalid_argument("unexpected '" + std::string(1, text[pos]) + "' in shape at position " +
                                std::to_string(pos));
  ++pos;
  JLineShape s;
  while (pos < text.size() && text[pos] != ']') s.children.push_back(parse_shape_at(text, pos));
  if (pos >= text.size()) throw std::invalid_argument("unclosed '[' in shape");
  ++pos;
  if (s.children.empty()) throw std::invalid_argument("empty plane in shape");
  return s;
}

}  // namespace

JLineShape parse_shape(std::string_view text) {
  std::size_t pos = 0;
  JLineShape s = parse_shape_at(text, pos);
  if (pos != text.size()) throw std::invalid_argument("trailing text after shape");
  s.depth();
  return s;
}

FiniteFrame materialize(const JLineShape& s) {
  const unsigned n = s.depth();
  std::vector<WorldTuple> ts = world_tuples(s);
  std::vector<World> names;
  for (const auto& t : ts) names.push_back(tuple_name(t));
  std::vector<std::vector<Edge>> rel(n);
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j) rel[first_difference(ts[i], ts[j])].emplace_back(names[i], names[j]);
  return FiniteFrame(n, std::move(names), rel);
}

std::optional<ShapeMatch> shape_of_frame(const FiniteFrame& frame) {
  if (frame.size() == 0 || frame.n() == 0) return std::nullopt;
  if (!check_j_frame(frame).holds || !check_hl_direct(frame).holds) return std::nullopt;
  const std::size_t sz = frame.size();
  auto reaches = [&](std::size_t a, std::size_t b) {
    for (unsigned k = 0; k < frame.n(); ++k)
      if (frame.related(k, a, b)) return true;
    return false;
  };
  // In a hereditarily linear J-frame the union of the relations is a strict
  // linear order; rank each world by its number of predecessors.
  std::vector<std::size_t> order(sz);
  std::vector<std::size_t> rank(sz, 0);
  for (std::size_t a = 0; a < sz; ++a)
    for (std::size_t b = 0; b < sz; ++b)
      if (reaches(b, a)) ++rank[a];
  for (std::size_t a = 0; a < sz; ++a) {
    if (rank[a] >= sz) return std::nullopt;
    order[rank[a]] = a;
  }
  std::vector<bool> seen(sz, false);
  for (std::size_t r : rank) {
    if (seen[r]) return std::nullopt;
    seen[r] = true;
  }
  std::vector<unsigned> word;
  for (std::size_t i = 0; i + 1 < sz; ++i) {
    unsigned k = 0;
    while (k < frame.n() && !frame.related(k, order[i], order[i + 1])) ++k;
    if (k == frame.n()) return std::nullopt;
    word.push_back(k);
  }
  ShapeMatch m{shape_from_level_word(frame.n(), word), {}};
  std::vector<WorldTuple> ts = world_tuples(m.shape);
  for (std::size_t i = 0; i < sz; ++i) m.tuples.emplace(frame.world(order[i]), ts[i]);
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j)
      for (unsigned k = 0; k < frame.n(); ++k) {
        bool expected = j > i && first_difference(ts[i], ts[j]) == k;
        if (frame.related(k, order[i], order[j]) != expected) return std::nullopt;
      }
  return m;
}

void for_each_jline(unsigned n, std::size_t max_worlds, const std::function<bool(const JLineShape&)>& visit) {
  if (n == 0) throw std::invalid_argument("J-lines need at least one modality");
  for (std::size_t size = 1; size <= max_worlds; ++size) {
    std::vector<unsigned> word(size - 1, 0);
    while (true) {
      if (!visit(shape_from_level_word(n, word))) return;
      std::size_t i = word.size();
      while (i > 0 && word[i - 1] == n - 1) word[--i] = 0;
      if (i == 0) break;
      ++word[i - 1];
    }
  }
}

std::vector<JLineShape> enumerate_jlines(unsigned n, std::size_t max_worlds) {
  std::vector<JLineShape> out;
  for_each_jline(n, max_worlds, [&](const JLineShape& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::uint64_t jline_size_bound(const Formula& f, unsigned n) {
  if (n == 0) throw std::invalid_argument("jline_size_bound: n must be positive");
  const std::uint64_t k = modal_count(f);
  if (k == 0) return 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v = k + 1;
  for (unsigned i = 1; i < n; ++i) {
    if (v > kMax / k) return kMax;
    v *= k;
  }
  return v;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Theorem: return "theorem";
    case Status::Refuted: return "refuted";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

Verdict run_search(const Formula& target, unsigned n, std::uint64_t bound, std::uint64_t cap) {
  if (cap == 0) throw std::invalid_argument("cap must be at least 1");
  const std::uint64_t limit = std::min(bound, cap);
  SearchResult r = symbolic_root_search(target, n, SearchLimits{limit});
  Verdict v;
  v.bound_used = bound;
  v.searched_worlds = r.depth;
  switch (r.outcome) {
    case SearchOutcome::Found:
      v.status = Status::Refuted;
      v.countermodel = std::move(r.model);
      break;
    case SearchOutcome::Exhausted: v.status = Status::Theorem; break;
    case SearchOutcome::DepthReached: v.status = limit == bound ? Status::Theorem : Status::Inconclusive; break;
    case SearchOutcome::StateLimit: v.status = Status::Inconclusive; break;
  }
  return v;
}

}  // namespace

Verdict jlin_satisfy(const Formula& f, unsigned n, std::uint64_t cap) {
  if (n < std::max(1u, modal_signature(f)))
    throw std::invalid_argument("jlin_satisfy: n is below the modal signature of the formula");
  return run_search(box_normalize(f), n, jline_size_bound(f, n), cap);
}

Formula glp3_search_target(const Formula& f, unsigned n) {
  Formula neg = box_normalize(Formula::neg(f));
  return Formula::conj(neg, m_plus(neg, n));
}

Verdict glp3_decide(const Formula& f, std::uint64_t cap) {
  const unsigned n = std::max(1u, modal_signature(f));
  Formula target = glp3_search_target(f, n);
  return run_search(target, n, jline_size_bound(target, n), cap);
}

}  // namespace plog
