#pragma once

// Free products of free groups and free abelian groups, e.g. F_n * Z^m,
// with a canonical normal form, endomorphisms given on generators, and the
// abelianized Fox calculus.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidrep/audit.hpp"
#include "braidrep/braid.hpp"
#include "braidrep/laurent.hpp"

namespace braidrep {

enum class FactorKind { Free, FreeAbelian };

struct FactorSpec {
  FactorKind kind;
  std::vector<std::string> generators;
  bool operator==(const FactorSpec&) const = default;
};

class GroupUniverse;
using UniversePtr = std::shared_ptr<const GroupUniverse>;

class GroupUniverse {
 public:
  struct Generator {
    std::string name;
    int factor;
    int position;  // 0-based inside its factor
  };

  static UniversePtr make(std::vector<FactorSpec> factors);
  /// Header syntax: `F(x,3) * A(u,3; v,0..3)`. Inside a factor, families are
  /// separated by ';': `x,3` is x1..x3, `v,0..3` is v0..v3 and a bare name is
  /// a single generator.
  static UniversePtr parse(std::string_view header);

  const std::vector<FactorSpec>& factors() const { return factors_; }
  const std::vector<Generator>& generators() const { return gens_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }
  int id(std::string_view name) const;  // throws std::invalid_argument
  bool has(std::string_view name) const;
  int rank(int factor) const { return static_cast<int>(factors_[factor].generators.size()); }
  std::string header() const;

  bool operator==(const GroupUniverse& o) const { return factors_ == o.factors_; }

 private:
  explicit GroupUniverse(std::vector<FactorSpec> factors);
  std::vector<FactorSpec> factors_;
  std::vector<Generator> gens_;
  std::map<std::string, int, std::less<>> by_name_;
};

/// A generator id raised to a nonzero power.
struct Letter {
  int gen;
  int exp;
  bool operator==(const Letter&) const = default;
};

/// One maximal run of the normal form, drawn from a single factor.
/// Free factor: `data` is a freely reduced list of signed letters (+-(pos+1)).
/// Abelian factor: `data` is the exponent vector, of length rank(factor).
struct Syllable {
  int factor;
  std::vector<int> data;
  bool operator==(const Syllable&) const = default;
};

class GroupWord {
 public:
  explicit GroupWord(UniversePtr universe);

  static GroupWord generator(UniversePtr universe, int gen, int exp = 1);
  static GroupWord generator(UniversePtr universe, std::string_view name, int exp = 1);
  /// Product of the given generator powers, brought to normal form.
  static GroupWord normalize(UniversePtr universe, const std::vector<Letter>& letters);
  /// Word syntax: `x1 x2^-1 u3 v0`.
  static GroupWord parse(UniversePtr universe, std::string_view text);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  /// Expanded letter list of the normal form (abelian syllables in
  /// generator order).
  std::vector<Letter> letters() const;
  std::size_t length() const;

  GroupWord operator*(const GroupWord& o) const;
  GroupWord& operator*=(const GroupWord& o) { return *this = *this * o; }
  GroupWord inverse() const;
  GroupWord pow(int k) const;

  std::string str() const;
  bool operator==(const GroupWord& o) const;

 private:
  void append(Syllable s);  // multiplies on the right, keeping normal form
  UniversePtr universe_;
  std::vector<Syllable> syllables_;
};

GroupWord gw_normalize(UniversePtr universe, const std::vector<Letter>& letters);

/// a^b = b^-1 a b
GroupWord conj(const GroupWord& a, const GroupWord& b);
/// a^-b = b^-1 a^-1 b
GroupWord conj_inv(const GroupWord& a, const GroupWord& b);
GroupWord commutator(const GroupWord& a, const GroupWord& b);

/// Endomorphism of the universe group, given by the images of generators.
class GeneratorMap {
 public:
  /// Throws if images of generators of one abelian factor fail to commute.
  GeneratorMap(UniversePtr universe, std::vector<GroupWord> images);
  static GeneratorMap identity(UniversePtr universe);
  /// Identity except for the listed generator images.
  static GeneratorMap with_images(UniversePtr universe,
                                  const std::map<std::string, GroupWord>& images);

  const UniversePtr& universe() const { return universe_; }
  const GroupWord& image(int gen) const { return images_[gen]; }
  const std::vector<GroupWord>& images() const { return images_; }

  GroupWord apply(const GroupWord& w) const;
  bool is_identity() const;
  bool operator==(const GeneratorMap& o) const { return images_ == o.images_; }

 private:
  struct Unchecked {};
  GeneratorMap(UniversePtr universe, std::vector<GroupWord> images, Unchecked);
  friend GeneratorMap gw_compose(const GeneratorMap&, const GeneratorMap&);

  UniversePtr universe_;
  std::vector<GroupWord> images_;
};

GroupWord gw_apply(const GeneratorMap& e, const GroupWord& w);
/// e1 first, then e2: gw_apply(gw_compose(e1, e2), w) == gw_apply(e2, gw_apply(e1, w)).
GeneratorMap gw_compose(const GeneratorMap& e1, const GeneratorMap& e2);

/// Abelianization x_k -> t_k of a word lying in one free factor.
LaurentPoly abelianize(const GroupWord& w);
/// (d w / d x_i)^ab for w in a single free factor of rank n; the result
/// lives in the Laurent ring with universe n.
LaurentPoly fox_derivative_ab(const GroupWord& w, int i);

enum class GroupRepName { ArtinB, ArtinVB, PhiM, PhiMTilde };
std::optional<GroupRepName> group_rep_from_string(std::string_view s);
std::string to_string(GroupRepName name);

/// A representation of B_n or VB_n by automorphisms of a free product,
/// given by generator images with explicit inverse witnesses for sigma_i.
class GroupRep {
 public:
  GroupRep(GroupRepName name, int n, UniversePtr universe, std::vector<GeneratorMap> sigma,
           std::vector<GeneratorMap> sigma_inv, std::vector<GeneratorMap> rho);

  GroupRepName name() const { return name_; }
  int strands() const { return n_; }
  bool is_virtual() const { return !rho_.empty(); }
  const UniversePtr& universe() const { return universe_; }

  const GeneratorMap& image(const BraidLetter& l) const;
  GeneratorMap evaluate(const BraidWord& w) const;
  /// sigma_i sigma_i^-1, sigma_i^-1 sigma_i and rho_i rho_i all compose to the identity.
  bool verify_inverse_witnesses() const;
  AuditReport audit() const;

 private:
  GroupRepName name_;
  int n_;
  UniversePtr universe_;
  std::vector<GeneratorMap> sigma_, sigma_inv_, rho_;
};

GroupRep builtin_group_rep(GroupRepName name, int n);

}  // namespace braidrep
