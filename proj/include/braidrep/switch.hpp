#pragma once

// Switches (set-theoretic Yang-Baxter solutions) on finite carriers,
// multi-switches on product carriers, virtual pairs, symbolic module
// switches and the induced permutation actions of braid words.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidrep/audit.hpp"
#include "braidrep/braid.hpp"
#include "braidrep/finite.hpp"
#include "braidrep/laurent.hpp"

namespace braidrep {

using Pair = std::pair<int, int>;

/// Bijection S of X^2, X = {0..size-1}, stored as (S^l(a,b), S^r(a,b)).
class FiniteSwitch {
 public:
  /// Throws std::invalid_argument if the table is not a bijection of X^2.
  FiniteSwitch(int size, std::vector<Pair> table);
  static FiniteSwitch from_function(int size, const std::function<Pair(int, int)>& f);
  /// Left and right output tables.
  static FiniteSwitch from_tables(const OperationTable& left, const OperationTable& right);

  int size() const { return size_; }
  Pair operator()(int a, int b) const { return table_[index(a, b)]; }
  Pair inverse(int a, int b) const { return inverse_[index(a, b)]; }
  bool is_involutive() const;
  OperationTable left_table() const;
  OperationTable right_table() const;

  bool operator==(const FiniteSwitch& o) const { return size_ == o.size_ && table_ == o.table_; }

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * size_ + b; }
  int size_;
  std::vector<Pair> table_;
  std::vector<Pair> inverse_;
};

struct VirtualPair {
  FiniteSwitch s;
  FiniteSwitch v;
};

/// (S x id)(id x S)(S x id) = (id x S)(S x id)(id x S) on all of X^3.
CheckReport check_ybe(const FiniteSwitch& s);
/// v^2 = id, YBE for v, YBE for s, and (V x id)(id x S)(V x id) =
/// (id x V)(S x id)(id x V).
CheckReport check_virtual_pair(const VirtualPair& p);

// ---- built-in switches ---------------------------------------------------

FiniteSwitch twist(int size);
/// S(a,b) = (a b a^-1, a).
FiniteSwitch artin_switch(const FiniteGroup& g);
/// S(a,b) = ((1-t)a + tb, a) over Z_m; t must be a unit mod m.
FiniteSwitch burau_switch(int m, int t);
/// S(a,b) = (b*a, a).
FiniteSwitch quandle_switch(const FiniteQuandle& q);
/// S(a,b) = (-a + a.b, (-a + a.b)^-1 . a . b), inverse taken for `.`.
FiniteSwitch skew_brace_switch(const FiniteSkewBrace& b);
/// S(a,b) = (b^a, a_b).
FiniteSwitch biquandle_switch(const FiniteBiquandle& b);

struct BuiltinParams {
  int size = 3;
  int modulus = 5;
  int t = 2;
  std::optional<FiniteGroup> group;
  std::optional<FiniteQuandle> quandle;
  std::optional<FiniteSkewBrace> brace;
};

/// Names: twist, artin, burau, dihedral (quandle switch of R_size), quandle,
/// skewbrace, skewbrace-trivial (trivial brace on Z_size). `artin` uses
/// `group` if given, else S_3 for size 6 and Z_size otherwise.
FiniteSwitch builtin_switch(const std::string& name, const BuiltinParams& params);

// ---- multi-switches ------------------------------------------------------

/// S = (S_0, S_1..S_m) on X x X_1 x .. x X_m, each X_i a subset of X
/// (listed as elements of X). S_0 receives the X-pair and, for each i, the
/// X_i-pair as elements of X.
class FiniteMultiSwitch {
 public:
  using S0 = std::function<Pair(int a, int b, const std::vector<Pair>& subsets)>;

  /// Assembles the switch on the product carrier; throws if a component
  /// does not act on its subset or the result is not a bijection.
  FiniteMultiSwitch(int x_size, std::vector<std::vector<int>> subsets, S0 s0,
                    std::vector<FiniteSwitch> components);

  int m() const { return static_cast<int>(subsets_.size()); }
  int x_size() const { return x_size_; }
  const std::vector<std::vector<int>>& subsets() const { return subsets_; }
  const std::vector<FiniteSwitch>& components() const { return components_; }
  const FiniteSwitch& assembled() const { return assembled_; }

  /// Product index of (a; x_1..x_m), x_i given as elements of X.
  int encode(int a, const std::vector<int>& xs) const;
  std::pair<int, std::vector<int>> decode(int code) const;

 private:
  int x_size_;
  std::vector<std::vector<int>> subsets_;
  std::vector<FiniteSwitch> components_;
  FiniteSwitch assembled_;
};

/// Assembled map is a switch and every component S_i is a switch on X_i.
CheckReport check_multiswitch(const FiniteMultiSwitch& s);

struct VirtualMultiPair {
  FiniteMultiSwitch s;
  FiniteMultiSwitch v;
  VirtualPair assembled() const { return {s.assembled(), v.assembled()}; }
};

/// S(a,b;x,y) = (b*a, a; y,x), V(a,b;x,y) = (b*^-1 x, a*y; y,x) on X x X_1.
/// Throws std::invalid_argument unless `subset` is a trivial subquandle.
VirtualMultiPair manturov_pair(const FiniteQuandle& q, const std::vector<int>& subset);

/// S(a,b;x,y) = (b^a, a_b; y,x), V(a,b;x,y) = (b^{x^-1}, a^y; y,x).
/// Throws std::invalid_argument unless `subset` is a trivial subbiquandle.
VirtualMultiPair biquandle_pair(const FiniteBiquandle& b, const std::vector<int>& subset);

/// The two side conditions of the biquandle pair, over a,b in X, x,y in X_1.
CheckReport check_biquandle_side_conditions(const FiniteBiquandle& b, const std::vector<int>& subset);
/// Side conditions, then the virtual pair checks for biquandle_pair.
CheckReport check_biquandle_pair(const FiniteBiquandle& b, const std::vector<int>& subset);

// ---- symbolic module switches -------------------------------------------

/// A point of X^k x X_1^k (x X_2^k) for the free module X with formal basis
/// {a,b,c}: module entries are coefficient vectors over that basis, and
/// ring entries are units. Coefficients live in the Laurent ring of
/// universe 3; the fresh variables x,y,z are t1,t2,t3 and p,q,r are q1,q2,q3.
struct ModuleState {
  std::vector<std::vector<LaurentPoly>> module;
  std::vector<LaurentPoly> x;
  std::vector<LaurentPoly> p;  // empty for the 2-switch

  static ModuleState generic(int k, bool with_p);
  std::string str() const;
  bool operator==(const ModuleState&) const = default;
};

/// S_2B(a,b;x,y) = ((1-y)a + xb, a; y,x) at positions (i, i+1), 0-based.
ModuleState apply_s2b(const ModuleState& s, int i);
ModuleState apply_s2b_inverse(const ModuleState& s, int i);
/// S_3B = S_2B x T.
ModuleState apply_s3b(const ModuleState& s, int i);
/// V_3B(a,b;x,y;p,q) = (pb, q^-1 a; y,x; q,p).
ModuleState apply_v3b(const ModuleState& s, int i);

enum class SymbolicCheck { S2B, S3B_V3B };

/// S2B: inverse and YBE. S3B_V3B: YBE for S, V^2 = id, YBE for V and the
/// matched identity. `details` carries every composite as text.
CheckReport symbolic_multiswitch_check(SymbolicCheck which);

// ---- permutation representations ----------------------------------------

/// Default 10^6; the environment variable BRAIDREP_MAX_STATES overrides it.
std::uint64_t max_states();

/// Action of braid words on X^n through S_i = id^{i-1} x S x id^{n-i-1}
/// (and V for rho_i).
class PermutationRep {
 public:
  /// Throws std::length_error when |X|^n exceeds max_states().
  PermutationRep(FiniteSwitch s, std::optional<FiniteSwitch> v, int n);

  int strands() const { return n_; }
  std::uint64_t states() const { return states_; }
  std::vector<int> decode(std::uint64_t state) const;
  std::uint64_t encode(const std::vector<int>& tuple) const;

  std::vector<int> apply(const BraidWord& w, std::vector<int> tuple) const;
  /// Image of every state under w.
  std::vector<std::uint64_t> action(const BraidWord& w) const;
  /// All B_n relators, plus the virtual ones when v is present.
  AuditReport audit() const;

 private:
  void apply_letter(const BraidLetter& l, std::vector<int>& tuple) const;
  FiniteSwitch s_;
  std::optional<FiniteSwitch> v_;
  int n_;
  std::uint64_t states_;
};

}  // namespace braidrep
