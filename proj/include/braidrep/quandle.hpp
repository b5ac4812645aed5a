#pragma once

// Terms of FQ_n * T_n and FQ_{n+1} in the conjugation model: a term is
// base^w = w^-1 base w inside F(x,n) * A(y,n) (resp. F(x,n; y)), and
// a*b = b^-1 a b, a*^-1 b = b a b^-1.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidrep/audit.hpp"
#include "braidrep/braid.hpp"
#include "braidrep/finite.hpp"
#include "braidrep/group_words.hpp"

namespace braidrep {

class QuandleTerm {
 public:
  static QuandleTerm generator(const UniversePtr& universe, std::string_view name);
  static QuandleTerm generator(const UniversePtr& universe, int gen);
  /// base^conjugator. The stored conjugator never starts with an
  /// element of the centralizer of the base (a power of a free base, or any
  /// element of the abelian factor of an abelian base).
  static QuandleTerm conjugate(const UniversePtr& universe, int base, const GroupWord& conjugator);
  /// Syntax `x1 * x2`, `x1 *~ y1`, left-associative, parentheses allowed.
  static QuandleTerm parse(const UniversePtr& universe, std::string_view text);

  const UniversePtr& universe() const { return conjugator_.universe(); }
  int base() const { return base_; }
  const GroupWord& conjugator() const { return conjugator_; }
  /// The group element w^-1 base w.
  GroupWord element() const;
  std::string str() const;

  bool operator==(const QuandleTerm& o) const {
    return base_ == o.base_ && conjugator_ == o.conjugator_;
  }

 private:
  QuandleTerm(int base, GroupWord conjugator) : base_(base), conjugator_(std::move(conjugator)) {}
  int base_;
  GroupWord conjugator_;
};

/// a * b, or a *^-1 b when `inverse` is set.
QuandleTerm q_mul(const QuandleTerm& a, const QuandleTerm& b, bool inverse = false);

/// Quandle endomorphism given by the images of the generators.
class QuandleAutoMap {
 public:
  QuandleAutoMap(UniversePtr universe, std::vector<QuandleTerm> images);
  static QuandleAutoMap identity(const UniversePtr& universe);
  static QuandleAutoMap with_images(const UniversePtr& universe,
                                    const std::map<std::string, QuandleTerm>& images);

  const UniversePtr& universe() const { return universe_; }
  const QuandleTerm& image(int gen) const { return images_[gen]; }
  const std::vector<QuandleTerm>& images() const { return images_; }

  QuandleTerm apply(const QuandleTerm& t) const;
  bool is_identity() const;
  bool operator==(const QuandleAutoMap& o) const { return images_ == o.images_; }

 private:
  UniversePtr universe_;
  std::vector<QuandleTerm> images_;
  GeneratorMap group_map_;  // images as group elements, used to push conjugators
};

/// e1 first, then e2.
QuandleAutoMap q_compose(const QuandleAutoMap& e1, const QuandleAutoMap& e2);

enum class QuandleRepName { Phi2Q, FreeQuandleN1 };
std::optional<QuandleRepName> quandle_rep_from_string(std::string_view s);
std::string to_string(QuandleRepName name);

class QuandleRep {
 public:
  QuandleRep(QuandleRepName name, int n, UniversePtr universe, std::vector<QuandleAutoMap> sigma,
             std::vector<QuandleAutoMap> sigma_inv, std::vector<QuandleAutoMap> rho);

  QuandleRepName name() const { return name_; }
  int strands() const { return n_; }
  const UniversePtr& universe() const { return universe_; }

  const QuandleAutoMap& image(const BraidLetter& l) const;
  QuandleAutoMap evaluate(const BraidWord& w) const;
  bool verify_inverse_witnesses() const;
  AuditReport audit() const;

 private:
  QuandleRepName name_;
  int n_;
  UniversePtr universe_;
  std::vector<QuandleAutoMap> sigma_, sigma_inv_, rho_;
};

/// VB_n -> Aut(FQ_n * T_n).
QuandleRep rep_phi2Q(int n);
/// VB_n -> Aut(FQ_{n+1}), generators x1..xn and y.
QuandleRep rep_fq_n_plus_1(int n);

/// Idempotence, bijectivity of every right translation, right
/// self-distributivity; failures name the axiom and the witness.
CheckReport check_quandle_axioms(const OperationTable& table);

}  // namespace braidrep
