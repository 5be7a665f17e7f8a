#include "plog/formula.hpp"

#include <algorithm>
#include <cctype>

namespace plog {

struct Formula::Node {
  Op op = Op::Top;
  unsigned index = 0;
  std::string name;
  Formula a;
  Formula b;
  std::size_t size = 1;
};

Formula::Formula() : node_(nullptr) {}

Formula Formula::top() { return Formula(); }
Formula Formula::bottom() { return neg(top()); }

Formula Formula::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->op = Op::Var;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::neg(Formula f) {
  auto n = std::make_shared<Node>();
  n->op = Op::Not;
  n->size = 1 + f.size();
  n->a = std::move(f);
  return Formula(std::move(n));
}

namespace {

template <class NodeT>
std::shared_ptr<NodeT> binary_node(Op op, Formula a, Formula b) {
  auto n = std::make_shared<NodeT>();
  n->op = op;
  n->size = 1 + a.size() + b.size();
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

}  // namespace

Formula Formula::conj(Formula a, Formula b) { return Formula(binary_node<Node>(Op::And, std::move(a), std::move(b))); }
Formula Formula::disj(Formula a, Formula b) { return Formula(binary_node<Node>(Op::Or, std::move(a), std::move(b))); }
Formula Formula::imp(Formula a, Formula b) { return Formula(binary_node<Node>(Op::Imp, std::move(a), std::move(b))); }

Formula Formula::box(unsigned index, Formula f) {
  auto n = std::make_shared<Node>();
  n->op = Op::Box;
  n->index = index;
  n->size = 1 + f.size();
  n->a = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::dia(unsigned index, Formula f) {
  auto n = std::make_shared<Node>();
  n->op = Op::Dia;
  n->index = index;
  n->size = 1 + f.size();
  n->a = std::move(f);
  return Formula(std::move(n));
}

// A null node stands for T so that default construction never allocates.
Op Formula::op() const { return node_ ? node_->op : Op::Top; }

const std::string& Formula::name() const {
  static const std::string empty;
  return node_ ? node_->name : empty;
}

unsigned Formula::index() const { return node_ ? node_->index : 0; }

const Formula& Formula::lhs() const {
  if (!node_ || !(is_unary() || is_binary())) throw std::logic_error("lhs() on a leaf formula");
  return node_->a;
}

const Formula& Formula::rhs() const {
  if (!node_ || !is_binary()) throw std::logic_error("rhs() on a non-binary formula");
  return node_->b;
}

std::size_t Formula::size() const { return node_ ? node_->size : 1; }

bool Formula::is_closed() const {
  switch (op()) {
    case Op::Top: return true;
    case Op::Var: return false;
    case Op::Not:
    case Op::Box:
    case Op::Dia: return lhs().is_closed();
    default: return lhs().is_closed() && rhs().is_closed();
  }
}

std::size_t Formula::modal_depth() const {
  switch (op()) {
    case Op::Top:
    case Op::Var: return 0;
    case Op::Not: return lhs().modal_depth();
    case Op::Box:
    case Op::Dia: return 1 + lhs().modal_depth();
    default: return std::max(lhs().modal_depth(), rhs().modal_depth());
  }
}

bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.op() <=> b.op(); c != 0) return c;
  switch (a.op()) {
    case Op::Top: return std::strong_ordering::equal;
    case Op::Var: return a.name() <=> b.name();
    case Op::Not: return a.lhs() <=> b.lhs();
    case Op::Box:
    case Op::Dia:
      if (auto c = a.index() <=> b.index(); c != 0) return c;
      return a.lhs() <=> b.lhs();
    default:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
}

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::conj(acc, fs[i]);
  return acc;
}

Formula disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::bottom();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::disj(acc, fs[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Formula parse() {
    Formula f = impl();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  Formula impl() {
    Formula left = disjunction();
    if (accept("->")) return Formula::imp(left, impl());
    return left;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (accept("|")) acc = Formula::disj(acc, conjunction());
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (accept("&")) acc = Formula::conj(acc, unary());
    return acc;
  }

  unsigned nat() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected modality index");
    if (pos_ - start > 9) fail("modality index too large");
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }

  Formula unary() {
    skip();
    if (accept("~")) return Formula::neg(unary());
    if (accept("[")) {
      unsigned k = nat();
      expect("]");
      return Formula::box(k, unary());
    }
    // '<' can only start a diamond; '->' has already been ruled out here.
    if (accept("<")) {
      unsigned k = nat();
      expect(">");
      return Formula::dia(k, unary());
    }
    return atom();
  }

  Formula atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = impl();
      expect(")");
      return f;
    }
    if (c == 'T' || c == 'F') {
      ++pos_;
      if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        fail("unexpected identifier character");
      return c == 'T' ? Formula::top() : Formula::bottom();
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::islower(static_cast<unsigned char>(s_[pos_])) ||
              std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      if (id == "w") {
        pos_ = start;
        fail("'w' is reserved");
      }
      return Formula::var(std::move(id));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

int precedence(const Formula& f) {
  switch (f.op()) {
    case Op::Imp: return 1;
    case Op::Or: return 2;
    case Op::And: return 3;
    default: return 4;
  }
}

void render_into(const Formula& f, std::string& out);

void render_wrapped(const Formula& f, bool wrap, std::string& out) {
  if (wrap) out += '(';
  render_into(f, out);
  if (wrap) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::Top: out += 'T'; return;
    case Op::Var: out += f.name(); return;
    case Op::Not: out += '~'; break;
    case Op::Box: out += '[' + std::to_string(f.index()) + ']'; break;
    case Op::Dia: out += '<' + std::to_string(f.index()) + '>'; break;
    case Op::And:
    case Op::Or:
    case Op::Imp: {
      int p = precedence(f);
      bool right_assoc = f.op() == Op::Imp;
      render_wrapped(f.lhs(), right_assoc ? precedence(f.lhs()) <= p : precedence(f.lhs()) < p, out);
      out += f.op() == Op::And ? " & " : f.op() == Op::Or ? " | " : " -> ";
      render_wrapped(f.rhs(), right_assoc ? precedence(f.rhs()) < p : precedence(f.rhs()) <= p, out);
      return;
    }
  }
  render_wrapped(f.lhs(), f.lhs().is_binary(), out);
}

void collect_subformulas(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  if (f.is_unary() || f.is_binary()) collect_subformulas(f.lhs(), out);
  if (f.is_binary()) collect_subformulas(f.rhs(), out);
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string render_formula(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

Formula box_normalize(const Formula& f) {
  switch (f.op()) {
    case Op::Top:
    case Op::Var: return f;
    case Op::Not: return Formula::neg(box_normalize(f.lhs()));
    case Op::Box: return Formula::box(f.index(), box_normalize(f.lhs()));
    case Op::Dia: return Formula::neg(Formula::box(f.index(), Formula::neg(box_normalize(f.lhs()))));
    case Op::And: return Formula::conj(box_normalize(f.lhs()), box_normalize(f.rhs()));
    case Op::Or: return Formula::disj(box_normalize(f.lhs()), box_normalize(f.rhs()));
    case Op::Imp: return Formula::imp(box_normalize(f.lhs()), box_normalize(f.rhs()));
  }
  return f;
}

std::set<Formula> subformulas(const Formula& f) {
  std::set<Formula> out;
  collect_subformulas(f, out);
  return out;
}

std::set<Formula> closure_sigma(const Formula& f, unsigned n) {
  if (n < modal_signature(f))
    throw std::invalid_argument("closure_sigma: n = " + std::to_string(n) + " is below the modal signature " +
                                std::to_string(modal_signature(f)));
  std::set<Formula> sigma = subformulas(box_normalize(f));
  std::vector<Formula> work(sigma.begin(), sigma.end());
  auto add = [&](Formula g) {
    if (sigma.insert(g).second) work.push_back(std::move(g));
  };
  while (!work.empty()) {
    Formula g = work.back();
    work.pop_back();
    if (g.op() != Op::Not) add(Formula::neg(g));
    if (g.op() == Op::Box)
      for (unsigned k = 0; k < n; ++k) add(Formula::box(k, g.lhs()));
  }
  return sigma;
}

Formula m_guard(const Formula& f, unsigned n) {
  std::vector<Formula> conjuncts;
  for (const Formula& g : subformulas(box_normalize(f))) {
    if (g.op() != Op::Box) continue;
    for (unsigned k = g.index() + 1; k < n; ++k)
      conjuncts.push_back(Formula::imp(g, Formula::box(k, g.lhs())));
  }
  return conj_all(conjuncts);
}

Formula m_plus(const Formula& f, unsigned n) {
  Formula m = m_guard(f, n);
  std::vector<Formula> parts{m};
  for (unsigned k = 0; k < n; ++k) parts.push_back(Formula::box(k, m));
  return conj_all(parts);
}

Formula substitute_closed(const Formula& f, const std::map<std::string, Formula>& subst) {
  switch (f.op()) {
    case Op::Top: return f;
    case Op::Var: {
      auto it = subst.find(f.name());
      if (it == subst.end()) throw std::invalid_argument("substitute_closed: no image for variable '" + f.name() + "'");
      if (!it->second.is_closed())
        throw std::invalid_argument("substitute_closed: image of '" + f.name() + "' is not closed");
      return it->second;
    }
    case Op::Not: return Formula::neg(substitute_closed(f.lhs(), subst));
    case Op::Box: return Formula::box(f.index(), substitute_closed(f.lhs(), subst));
    case Op::Dia: return Formula::dia(f.index(), substitute_closed(f.lhs(), subst));
    case Op::And: return Formula::conj(substitute_closed(f.lhs(), subst), substitute_closed(f.rhs(), subst));
    case Op::Or: return Formula::disj(substitute_closed(f.lhs(), subst), substitute_closed(f.rhs(), subst));
    case Op::Imp: return Formula::imp(substitute_closed(f.lhs(), subst), substitute_closed(f.rhs(), subst));
  }
  return f;
}

unsigned modal_signature(const Formula& f) {
  switch (f.op()) {
    case Op::Top:
    case Op::Var: return 0;
    case Op::Not: return modal_signature(f.lhs());
    case Op::Box:
    case Op::Dia: return std::max(f.index() + 1, modal_signature(f.lhs()));
    default: return std::max(modal_signature(f.lhs()), modal_signature(f.rhs()));
  }
}

std::size_t modal_count(const Formula& f) {
  switch (f.op()) {
    case Op::Top:
    case Op::Var: return 0;
    case Op::Not: return modal_count(f.lhs());
    case Op::Box:
    case Op::Dia: return 1 + modal_count(f.lhs());
    default: return modal_count(f.lhs()) + modal_count(f.rhs());
  }
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  for (const Formula& g : subformulas(f))
    if (g.op() == Op::Var) out.insert(g.name());
  return out;
}

Formula shift_modalities(const Formula& f, unsigned by) {
  switch (f.op()) {
    case Op::Top:
    case Op::Var: return f;
    case Op::Not: return Formula::neg(shift_modalities(f.lhs(), by));
    case Op::Box: return Formula::box(f.index() + by, shift_modalities(f.lhs(), by));
    case Op::Dia: return Formula::dia(f.index() + by, shift_modalities(f.lhs(), by));
    case Op::And: return Formula::conj(shift_modalities(f.lhs(), by), shift_modalities(f.rhs(), by));
    case Op::Or: return Formula::disj(shift_modalities(f.lhs(), by), shift_modalities(f.rhs(), by));
    case Op::Imp: return Formula::imp(shift_modalities(f.lhs(), by), shift_modalities(f.rhs(), by));
  }
  return f;
}

Formula Worm::to_formula() const {
  Formula f = Formula::top();
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) f = Formula::dia(*it, f);
  return f;
}

Worm Worm::from_formula(const Formula& f) {
  Worm w;
  const Formula* cur = &f;
  while (cur->op() == Op::Dia) {
    w.indices.push_back(cur->index());
    cur = &cur->lhs();
  }
  if (cur->op() != Op::Top) throw std::invalid_argument("not a worm: " + render_formula(f));
  return w;
}

}  // namespace plog
