#include "plog/jline_search.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace plog {

namespace {

// Target formula flattened into children-first instructions.
struct Program {
  struct Instr {
    Op op = Op::Top;
    int a = -1;
    int b = -1;
    unsigned index = 0;  // relation of a Box
    int slot = -1;       // variable number (Var) or boxed-argument number (Box)
  };

  std::vector<Instr> code;
  std::vector<int> boxed;  // instruction computing each boxed argument
  std::vector<std::string> vars;
  int root = -1;

  explicit Program(const Formula& target) {
    Formula f = box_normalize(target);
    std::set<Formula> args;
    for (const Formula& g : subformulas(f))
      if (g.op() == Op::Box) args.insert(g.lhs());
    if (args.size() > 64) throw std::length_error("more than 64 distinct boxed subformulas");
    std::set<std::string> names = variables(f);
    if (names.size() > 16) throw std::length_error("more than 16 variables");
    vars.assign(names.begin(), names.end());
    for (const Formula& g : args) arg_slot_.emplace(g, static_cast<int>(arg_slot_.size()));
    root = emit(f);
    boxed.resize(args.size());
    for (const auto& [g, s] : arg_slot_) boxed[s] = emit(g);
  }

  std::size_t var_count() const { return vars.size(); }

 private:
  int emit(const Formula& f) {
    if (auto it = seen_.find(f); it != seen_.end()) return it->second;
    Instr in;
    in.op = f.op();
    switch (f.op()) {
      case Op::Top: break;
      case Op::Var:
        in.slot = static_cast<int>(std::lower_bound(vars.begin(), vars.end(), f.name()) - vars.begin());
        break;
      case Op::Not: in.a = emit(f.lhs()); break;
      case Op::Box:
        in.a = emit(f.lhs());
        in.index = f.index();
        in.slot = arg_slot_.at(f.lhs());
        break;
      case Op::Dia: throw std::logic_error("diamond survived normalization");
      default:
        in.a = emit(f.lhs());
        in.b = emit(f.rhs());
        break;
    }
    code.push_back(in);
    int id = static_cast<int>(code.size()) - 1;
    seen_.emplace(f, id);
    return id;
  }

  std::map<Formula, int> seen_;
  std::map<Formula, int> arg_slot_;
};

Countermodel build_model(unsigned n, const std::vector<unsigned>& word, const std::vector<std::uint32_t>& vals,
                         const std::vector<std::string>& vars) {
  Countermodel cm;
  cm.shape = shape_from_level_word(n, word);
  std::vector<WorldTuple> ts = world_tuples(cm.shape);
  for (std::size_t v = 0; v < vars.size(); ++v) {
    auto& ws = cm.valuation[vars[v]];
    for (std::size_t i = 0; i < ts.size(); ++i)
      if ((vals[i] >> v) & 1u) ws.insert(tuple_name(ts[i]));
  }
  cm.world = tuple_name(ts.front());
  return cm;
}

// ---------------------------------------------------------------------------
// Symbolic kernel

constexpr std::uint64_t kAll = ~std::uint64_t{0};

struct Summary {
  int parent = -1;
  unsigned level = 0;
  std::uint32_t val = 0;
};

class SymbolicSearch {
 public:
  SymbolicSearch(const Formula& target, unsigned n) : prog_(target), n_(n), scratch_(prog_.code.size()) {}

  SearchResult run(const SearchLimits& limits) {
    SearchResult res;
    const std::uint32_t nvals = std::uint32_t{1} << prog_.var_count();
    std::vector<std::uint64_t> fresh(n_, kAll);
    std::vector<int> layer;
    for (std::uint32_t val = 0; val < nvals; ++val) {
      if (probe(fresh, val, -1, 0, layer, res)) return finish(res, 1);
    }
    std::uint64_t depth = 1;
    std::vector<std::uint64_t> next_boxes(n_);
    while (depth < limits.max_worlds) {
      std::vector<int> next;
      for (int id : layer) {
        for (unsigned k = 0; k < n_; ++k) {
          successor_boxes(id, k, next_boxes);
          for (std::uint32_t val = 0; val < nvals; ++val)
            if (probe(next_boxes, val, id, k, next, res)) return finish(res, depth + 1);
        }
      }
      if (next.empty()) {
        res.outcome = SearchOutcome::Exhausted;
        return finish(res, depth);
      }
      ++depth;
      layer = std::move(next);
      if (nodes_.size() > limits.max_states) {
        res.outcome = SearchOutcome::StateLimit;
        return finish(res, depth);
      }
    }
    res.outcome = SearchOutcome::DepthReached;
    return finish(res, depth);
  }

 private:
  // Boxed-argument sets for a new world placed in front of node id at level k.
  void successor_boxes(int id, unsigned k, std::vector<std::uint64_t>& out) const {
    const std::uint64_t* s = &boxes_[static_cast<std::size_t>(id) * n_];
    for (unsigned j = 0; j < k; ++j) out[j] = s[j];
    std::uint64_t at = truths_[id];
    for (unsigned j = k; j < n_; ++j) at &= s[j];
    out[k] = at;
    for (unsigned j = k + 1; j < n_; ++j) out[j] = kAll;
  }

  // Evaluates the front world; records a new summary if unseen. Returns true
  // when the target holds there.
  bool probe(const std::vector<std::uint64_t>& boxes, std::uint32_t val, int parent, unsigned level,
             std::vector<int>& layer, SearchResult& res) {
    for (std::size_t i = 0; i < prog_.code.size(); ++i) {
      const auto& in = prog_.code[i];
      char v = 0;
      switch (in.op) {
        case Op::Top: v = 1; break;
        case Op::Var: v = static_cast<char>((val >> in.slot) & 1u); break;
        case Op::Not: v = !scratch_[in.a]; break;
        case Op::And: v = scratch_[in.a] && scratch_[in.b]; break;
        case Op::Or: v = scratch_[in.a] || scratch_[in.b]; break;
        case Op::Imp: v = !scratch_[in.a] || scratch_[in.b]; break;
        case Op::Box: v = static_cast<char>((boxes[in.index] >> in.slot) & 1u); break;
        case Op::Dia: break;
      }
      scratch_[i] = v;
    }
    if (scratch_[prog_.root]) {
      res.model = reconstruct(parent, level, val);
      res.outcome = SearchOutcome::Found;
      return true;
    }
    std::uint64_t truth = 0;
    for (std::size_t s = 0; s < prog_.boxed.size(); ++s)
      if (scratch_[prog_.boxed[s]]) truth |= std::uint64_t{1} << s;
    std::vector<std::uint64_t> key(boxes);
    key.push_back(truth);
    if (!seen_.insert(std::move(key)).second) return false;
    boxes_.insert(boxes_.end(), boxes.begin(), boxes.end());
    truths_.push_back(truth);
    nodes_.push_back(Summary{parent, level, val});
    layer.push_back(static_cast<int>(nodes_.size()) - 1);
    return false;
  }

  Countermodel reconstruct(int parent, unsigned level, std::uint32_t val) const {
    std::vector<unsigned> word;
    std::vector<std::uint32_t> vals{val};
    if (parent >= 0) word.push_back(level);
    for (int id = parent; id >= 0; id = nodes_[id].parent) {
      vals.push_back(nodes_[id].val);
      if (nodes_[id].parent >= 0) word.push_back(nodes_[id].level);
    }
    return build_model(n_, word, vals, prog_.vars);
  }

  SearchResult& finish(SearchResult& res, std::uint64_t depth) const {
    res.depth = depth;
    res.states = nodes_.size();
    return res;
  }

  Program prog_;
  unsigned n_;
  std::vector<char> scratch_;
  std::vector<std::uint64_t> boxes_;  // n_ entries per summary
  std::vector<std::uint64_t> truths_;
  std::vector<Summary> nodes_;
  std::unordered_set<std::vector<std::uint64_t>, boost::hash<std::vector<std::uint64_t>>> seen_;
};

// ---------------------------------------------------------------------------
// Enumeration kernel

class ShapeEvaluator {
 public:
  ShapeEvaluator(const Program& prog, unsigned n, std::size_t worlds)
      : prog_(prog), n_(n), worlds_(worlds), succ_(n * worlds), masks_(prog.code.size()) {}

  void set_word(std::uint64_t index) {
    word_.assign(worlds_ - 1, 0);
    for (std::size_t i = word_.size(); i > 0; --i) {
      word_[i - 1] = static_cast<unsigned>(index % n_);
      index /= n_;
    }
    std::fill(succ_.begin(), succ_.end(), 0);
    for (std::size_t i = 0; i < worlds_; ++i) {
      unsigned m = n_;
      for (std::size_t j = i + 1; j < worlds_; ++j) {
        m = std::min(m, word_[j - 1]);
        succ_[m * worlds_ + i] |= std::uint64_t{1} << j;
      }
    }
  }

  const std::vector<unsigned>& word() const { return word_; }

  // Valuation index packs variable v at world i into bit i * vars + v.
  bool root_satisfies(std::uint64_t val) {
    const std::size_t nv = prog_.var_count();
    const std::uint64_t all = worlds_ == 64 ? kAll : (std::uint64_t{1} << worlds_) - 1;
    for (std::size_t i = 0; i < prog_.code.size(); ++i) {
      const auto& in = prog_.code[i];
      std::uint64_t m = 0;
      switch (in.op) {
        case Op::Top: m = all; break;
        case Op::Var:
          for (std::size_t w = 0; w < worlds_; ++w)
            if ((val >> (w * nv + in.slot)) & 1u) m |= std::uint64_t{1} << w;
          break;
        case Op::Not: m = all & ~masks_[in.a]; break;
        case Op::And: m = masks_[in.a] & masks_[in.b]; break;
        case Op::Or: m = masks_[in.a] | masks_[in.b]; break;
        case Op::Imp: m = all & (~masks_[in.a] | masks_[in.b]); break;
        case Op::Box:
          for (std::size_t w = 0; w < worlds_; ++w)
            if ((succ_[in.index * worlds_ + w] & ~masks_[in.a]) == 0) m |= std::uint64_t{1} << w;
          break;
        case Op::Dia: break;
      }
      masks_[i] = m;
    }
    return masks_[prog_.root] & 1u;
  }

 private:
  const Program& prog_;
  unsigned n_;
  std::size_t worlds_;
  std::vector<unsigned> word_;
  std::vector<std::uint64_t> succ_;
  std::vector<std::uint64_t> masks_;
};

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (v > (std::uint64_t{1} << 40) / base) throw std::length_error("enumeration space too large");
    v *= base;
  }
  return v;
}

}  // namespace

SearchResult symbolic_root_search(const Formula& target, unsigned n, const SearchLimits& limits) {
  if (n == 0) throw std::invalid_argument("symbolic_root_search: n must be positive");
  if (modal_signature(target) > n) throw std::invalid_argument("target uses a modality beyond n");
  if (limits.max_worlds == 0) throw std::invalid_argument("max_worlds must be positive");
  return SymbolicSearch(target, n).run(limits);
}

SearchResult enumerate_root_search(const Formula& target, unsigned n, std::uint64_t max_worlds, Execution mode) {
  if (n == 0) throw std::invalid_argument("enumerate_root_search: n must be positive");
  if (modal_signature(target) > n) throw std::invalid_argument("target uses a modality beyond n");
  if (max_worlds == 0 || max_worlds > 63) throw std::invalid_argument("max_worlds must be in 1..63");
  const Program prog(target);
  const std::size_t nv = prog.var_count();
  SearchResult res;
  for (std::size_t worlds = 1; worlds <= max_worlds; ++worlds) {
    if (nv * worlds > 40) throw std::length_error("valuation space too large");
    const std::uint64_t nvals = std::uint64_t{1} << (nv * worlds);
    const std::uint64_t total = checked_pow(n, worlds - 1) * nvals;
    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t found = kNone;

    if (mode == Execution::Serial) {
      ShapeEvaluator ev(prog, n, worlds);
      for (std::uint64_t idx = 0; idx < total && found == kNone; ++idx) {
        if (idx % nvals == 0) ev.set_word(idx / nvals);
        if (ev.root_satisfies(idx % nvals)) found = idx;
      }
    } else {
      std::atomic<std::uint64_t> best{kNone};
#pragma omp parallel
      {
        ShapeEvaluator ev(prog, n, worlds);
        std::uint64_t current = kNone;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
          const auto idx = static_cast<std::uint64_t>(i);
          if (idx > best.load(std::memory_order_relaxed)) continue;
          if (idx / nvals != current) {
            current = idx / nvals;
            ev.set_word(current);
          }
          if (ev.root_satisfies(idx % nvals)) {
            std::uint64_t prev = best.load(std::memory_order_relaxed);
            while (idx < prev && !best.compare_exchange_weak(prev, idx, std::memory_order_relaxed)) {
            }
          }
        }
      }
      found = best.load();
    }

    res.depth = worlds;
    if (found != kNone) {
      ShapeEvaluator ev(prog, n, worlds);
      ev.set_word(found / nvals);
      const std::uint64_t val = found % nvals;
      std::vector<std::uint32_t> vals(worlds, 0);
      for (std::size_t w = 0; w < worlds; ++w) vals[w] = static_cast<std::uint32_t>((val >> (w * nv)) & ((1u << nv) - 1));
      res.outcome = SearchOutcome::Found;
      res.model = build_model(n, ev.word(), vals, prog.vars);
      return res;
    }
  }
  res.outcome = SearchOutcome::DepthReached;
  return res;
}

}  // namespace plog
