#pragma once

// Words in the generators sigma_i, rho_i of the (virtual) braid group.
//
// Convention, used by every module: actions are on the right, so the word
// g1 g2 ... gk acts by applying the image of g1 first.

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace braidrep {

enum class LetterKind { Sigma, Rho };

struct BraidLetter {
  LetterKind kind = LetterKind::Sigma;
  int index = 1;     // 1 <= index <= n-1
  int exponent = 1;  // +-1; always +1 for Rho

  static BraidLetter sigma(int i, int e = 1) { return {LetterKind::Sigma, i, e}; }
  static BraidLetter rho(int i) { return {LetterKind::Rho, i, 1}; }

  BraidLetter inverse() const;
  std::string str() const;
  bool operator==(const BraidLetter&) const = default;
};

/// 1-based permutation of {1..n}: images[k-1] is the image of k.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  /// Apply `this` first, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

class BraidWord {
 public:
  explicit BraidWord(int n, std::vector<BraidLetter> letters = {});

  /// Parses `s1 s2^-1 r1`. Exponents may be any integer: s1^3 expands to
  /// s1 s1 s1, and rho powers are taken mod 2.
  static BraidWord parse(std::string_view text, int n);

  int strands() const { return n_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_classical() const;

  BraidWord inverse() const;
  BraidWord reduced() const;
  BraidWord operator*(const BraidWord& o) const;
  BraidWord power(int k) const;
  std::string str() const;

  bool operator==(const BraidWord&) const = default;

 private:
  int n_;
  std::vector<BraidLetter> letters_;
};

/// Free reduction plus rho_i^2 = 1.
BraidWord reduce(const BraidWord& w);

enum class RelatorTag { b1, b2, vb3, vb4, vb5, vb6, vb7 };
std::string to_string(RelatorTag tag);

struct Relator {
  BraidWord lhs;
  BraidWord rhs;
  RelatorTag tag;
};

/// All defining relations of B_n (virtual=false) or VB_n (virtual=true).
std::vector<Relator> relator_catalog(int n, bool virtual_group);

/// Image under the quotient sending sigma_i and rho_i to (i, i+1).
Permutation permutation_of(const BraidWord& w);

/// a_{i,j} = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1.
BraidWord pure_generator(int i, int j, int n);

/// Uniform letters from sigma_i^{+-1} (and rho_i when `virtual_group`).
BraidWord random_braid_word(std::mt19937_64& rng, int n, int length, bool virtual_group);

/// lambda_{1,2} = r1 s1^-1, lambda_{1,3} = r2 lambda_{1,2} r2,
/// lambda_{2,3} = r2 s2^-1, as words on three strands.
BraidWord lambda_generator(int i, int j);

}  // namespace braidrep
