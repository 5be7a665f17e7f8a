// Ordinals below epsilon_0 in Cantor normal form.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plog {

using Natural = boost::multiprecision::cpp_int;

struct OrdinalTerm;

/// w^e1*c1 + w^e2*c2 + ... with e1 > e2 > ... and every ci >= 1.
/// The empty sum is 0. Every value is kept in canonical form.
class Ordinal {
 public:
  Ordinal();
  Ordinal(std::uint64_t n);  // NOLINT: naturals are ordinals

  static Ordinal omega();
  /// Builds from terms; exponents must be strictly decreasing, coefficients positive.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  const std::vector<OrdinalTerm>& terms() const { return terms_; }
  bool is_zero() const;
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;
  /// Value as a natural; throws std::domain_error for infinite ordinals.
  Natural to_natural() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  Natural coefficient;

  friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b);
/// Ordinal (non-commutative) sum a + b.
Ordinal ord_add(const Ordinal& a, const Ordinal& b);
/// w^a.
Ordinal ord_omega_pow(const Ordinal& a);
/// Exponent of the last Cantor term; log 0 = 0.
Ordinal ord_log(const Ordinal& a);
/// a + 1.
Ordinal ord_succ(const Ordinal& a);
/// The unique c with a + c = b. Throws std::domain_error if a > b.
Ordinal ord_sub_left(const Ordinal& b, const Ordinal& a);

/// Least v >= lo with ord_log(v) >= nu.
Ordinal least_with_log_at_least(const Ordinal& lo, const Ordinal& nu);
/// Least v >= lo with ord_log(v) == beta.
Ordinal least_with_log_equal(const Ordinal& lo, const Ordinal& beta);

Ordinal operator+(const Ordinal& a, const Ordinal& b);

class OrdinalSyntaxError : public std::runtime_error {
 public:
  OrdinalSyntaxError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)) {}
};

/// Grammar: ord := '0' | term ('+' term)* ; term := nat | 'w' ('^' exp)? ('*' nat)? ;
/// exp := 'w' | nat | '(' ord ')'. Non-canonical sums are normalized.
Ordinal ord_parse(std::string_view text);
/// Canonical text: "w^w + w*3 + 1", nested exponents as "w^(w+1)".
std::string ord_render(const Ordinal& o);

}  // namespace plog
