#pragma once

// Exact multivariate Laurent polynomials over Z in the variables
// t1..tn, q1..qn and a single Burau variable t.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace braidrep {

using Integer = mpz_class;

enum class VarFamily { T = 0, Q = 1, SingleT = 2 };

struct VarId {
  VarFamily family = VarFamily::T;
  int index = 0;  // 0 for SingleT

  static VarId t(int i) { return {VarFamily::T, i}; }
  static VarId q(int i) { return {VarFamily::Q, i}; }
  static VarId single_t() { return {VarFamily::SingleT, 0}; }

  std::string name() const;
  auto operator<=>(const VarId&) const = default;
};

class UniverseMismatch : public std::invalid_argument {
 public:
  UniverseMismatch(int a, int b);
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A Laurent monomial. Exponents are kept sorted by variable, and a zero
/// exponent is never stored, so the constant monomial is the empty list.
class Monomial {
 public:
  using Entry = std::pair<VarId, int>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries);
  static Monomial of(VarId v, int exp = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  int exponent(VarId v) const;
  bool is_constant() const { return entries_.empty(); }

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Entry> entries_;
};

/// Element of Z[t1^±1..tn^±1, q1^±1..qn^±1, t^±1]. The universe size n is
/// carried by every value; arithmetic between different universes throws.
class LaurentPoly {
 public:
  using Terms = std::map<Monomial, Integer>;

  explicit LaurentPoly(int universe = 0) : universe_(universe) {}
  LaurentPoly(int universe, const Integer& c);

  static LaurentPoly constant(int universe, const Integer& c) { return {universe, c}; }
  static LaurentPoly monomial(int universe, const Monomial& m, const Integer& c = 1);
  static LaurentPoly var(int universe, VarId v, int exp = 1);

  int universe() const { return universe_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }

  /// Units of the Laurent ring are exactly the monomials with coefficient ±1.
  bool is_unit() const;
  /// Inverse of a unit. Throws std::domain_error otherwise.
  LaurentPoly unit_inverse() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly pow(int e) const;

  /// Ring homomorphism fixing Z and sending each variable in `images` to its
  /// image. Variables raised to a negative power must map to units.
  LaurentPoly specialize(const std::map<VarId, LaurentPoly>& images) const;

  /// Relabels t_k -> t_{perm[k-1]} and q_k -> q_{perm[k-1]} (1-based images).
  LaurentPoly permute(const std::vector<int>& perm) const;

  std::string format() const;
  static LaurentPoly parse(std::string_view text, int universe);

  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j, int universe);

  bool operator==(const LaurentPoly& o) const {
    return universe_ == o.universe_ && terms_ == o.terms_;
  }

 private:
  void check_universe(const LaurentPoly& o) const;
  void check_var(VarId v) const;
  void add_term(const Monomial& m, const Integer& c);

  int universe_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Convenience factory for one variable universe.
struct Ring {
  int n;

  LaurentPoly zero() const { return LaurentPoly(n); }
  LaurentPoly one() const { return LaurentPoly(n, 1); }
  LaurentPoly c(long v) const { return LaurentPoly(n, v); }
  LaurentPoly t(int i, int e = 1) const { return LaurentPoly::var(n, VarId::t(i), e); }
  LaurentPoly q(int i, int e = 1) const { return LaurentPoly::var(n, VarId::q(i), e); }
  LaurentPoly single_t(int e = 1) const { return LaurentPoly::var(n, VarId::single_t(), e); }
  LaurentPoly parse(std::string_view s) const { return LaurentPoly::parse(s, n); }
};

}  // namespace braidrep
