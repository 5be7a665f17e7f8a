#include "plog/ordinal.hpp"

#include <cctype>

namespace plog {

Ordinal::Ordinal() = default;

Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back(OrdinalTerm{Ordinal(), Natural(n)});
}

Ordinal Ordinal::omega() { return ord_omega_pow(Ordinal(1)); }

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient <= 0) throw std::invalid_argument("ordinal coefficient must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw std::invalid_argument("ordinal exponents must be strictly decreasing");
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

bool Ordinal::is_zero() const { return terms_.empty(); }

bool Ordinal::is_limit() const { return !is_zero() && !is_successor(); }

bool Ordinal::is_finite() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }

bool Ordinal::is_successor() const { return !terms_.empty() && terms_.back().exponent.is_zero(); }

Natural Ordinal::to_natural() const {
  if (!is_finite()) throw std::domain_error("ordinal is not finite");
  return terms_.empty() ? Natural(0) : terms_[0].coefficient;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c;
    if (a.terms_[i].coefficient != b.terms_[i].coefficient)
      return a.terms_[i].coefficient < b.terms_[i].coefficient ? std::strong_ordering::less
                                                               : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms().front().exponent;
  std::vector<OrdinalTerm> out;
  for (const OrdinalTerm& t : a.terms()) {
    if (t.exponent > lead) {
      out.push_back(t);
    } else {
      if (t.exponent == lead) {
        out.push_back(OrdinalTerm{lead, t.coefficient + b.terms().front().coefficient});
        out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
        return Ordinal::from_terms(std::move(out));
      }
      break;
    }
  }
  out.insert(out.end(), b.terms().begin(), b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) { return ord_add(a, b); }

Ordinal ord_omega_pow(const Ordinal& a) { return Ordinal::from_terms({OrdinalTerm{a, Natural(1)}}); }

Ordinal ord_log(const Ordinal& a) { return a.is_zero() ? Ordinal() : a.terms().back().exponent; }

Ordinal ord_succ(const Ordinal& a) { return ord_add(a, Ordinal(1)); }

Ordinal ord_sub_left(const Ordinal& b, const Ordinal& a) {
  if (a > b) throw std::domain_error("ord_sub_left: subtrahend exceeds minuend");
  const auto& at = a.terms();
  const auto& bt = b.terms();
  std::size_t i = 0;
  while (i < at.size() && i < bt.size() && at[i] == bt[i]) ++i;
  if (i == at.size()) return Ordinal::from_terms({bt.begin() + static_cast<std::ptrdiff_t>(i), bt.end()});
  // a < b and they first differ at position i, so b's term there is larger.
  std::vector<OrdinalTerm> rest;
  if (at[i].exponent == bt[i].exponent) {
    rest.push_back(OrdinalTerm{bt[i].exponent, bt[i].coefficient - at[i].coefficient});
    rest.insert(rest.end(), bt.begin() + static_cast<std::ptrdiff_t>(i) + 1, bt.end());
  } else {
    rest.assign(bt.begin() + static_cast<std::ptrdiff_t>(i), bt.end());
  }
  return Ordinal::from_terms(std::move(rest));
}

namespace {

// Terms of `o` whose exponent is >= nu.
Ordinal prefix_at_least(const Ordinal& o, const Ordinal& nu) {
  std::vector<OrdinalTerm> keep;
  for (const OrdinalTerm& t : o.terms()) {
    if (t.exponent < nu) break;
    keep.push_back(t);
  }
  return Ordinal::from_terms(std::move(keep));
}

}  // namespace

Ordinal least_with_log_at_least(const Ordinal& lo, const Ordinal& nu) {
  if (ord_log(lo) >= nu) return lo;
  return ord_add(prefix_at_least(lo, nu), ord_omega_pow(nu));
}

Ordinal least_with_log_equal(const Ordinal& lo, const Ordinal& beta) {
  if (ord_log(lo) == beta) return lo;
  return ord_add(prefix_at_least(lo, beta), ord_omega_pow(beta));
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class OrdParser {
 public:
  explicit OrdParser(std::string_view s) : s_(s) {}

  Ordinal parse() {
    Ordinal o = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return o;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw OrdinalSyntaxError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Ordinal sum() {
    Ordinal acc = term();
    while (accept('+')) acc = ord_add(acc, term());
    return acc;
  }

  Natural nat() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return Natural(std::string(s_.substr(start, pos_ - start)));
  }

  Ordinal scaled(const Ordinal& exponent, const Natural& coeff) {
    if (coeff == 0) return Ordinal();
    return Ordinal::from_terms({OrdinalTerm{exponent, coeff}});
  }

  Ordinal term() {
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return scaled(Ordinal(), nat());
    if (!accept('w')) fail("expected 'w' or a natural number");
    Ordinal exponent(1);
    if (accept('^')) {
      skip();
      if (accept('w')) {
        exponent = Ordinal::omega();
      } else if (accept('(')) {
        exponent = sum();
        if (!accept(')')) fail("expected ')'");
      } else {
        exponent = scaled(Ordinal(), nat());
      }
    }
    Natural coeff = 1;
    if (accept('*')) coeff = nat();
    return scaled(exponent, coeff);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string render_sum(const Ordinal& o, const char* sep);

std::string render_term(const OrdinalTerm& t) {
  const Ordinal& e = t.exponent;
  if (e.is_zero()) return t.coefficient.str();
  std::string s = "w";
  if (e == Ordinal(1)) {
    // w^1 is written w
  } else if (e.is_finite()) {
    s += "^" + e.to_natural().str();
  } else if (e == Ordinal::omega()) {
    s += "^w";
  } else {
    s += "^(" + render_sum(e, "+") + ")";
  }
  if (t.coefficient != 1) s += "*" + t.coefficient.str();
  return s;
}

std::string render_sum(const Ordinal& o, const char* sep) {
  if (o.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < o.terms().size(); ++i) {
    if (i) s += sep;
    s += render_term(o.terms()[i]);
  }
  return s;
}

}  // namespace

Ordinal ord_parse(std::string_view text) { return OrdParser(text).parse(); }

std::string ord_render(const Ordinal& o) { return render_sum(o, " + "); }

}  // namespace plog
