#pragma once

// Semilinear automorphisms of K^n, K a Laurent ring: a variable
// permutation together with a matrix whose row k is the image of e_k.
// A vector is a coefficient row v; the action is v -> perm(v) * M.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidrep/audit.hpp"
#include "braidrep/braid.hpp"
#include "braidrep/group_words.hpp"
#include "braidrep/laurent.hpp"

namespace braidrep {

using Matrix = std::vector<std::vector<LaurentPoly>>;

Matrix identity_matrix(int n, int universe);
Matrix matrix_product(const Matrix& a, const Matrix& b);
Matrix permute_entries(const Matrix& m, const Permutation& p);
LaurentPoly determinant(const Matrix& m);

class SemilinearAuto {
 public:
  /// The permutation acts on t_k and q_k alike (t_k -> t_{perm(k)}).
  SemilinearAuto(Permutation perm, Matrix rows);
  static SemilinearAuto identity(int n, int universe);

  int n() const { return perm_.size(); }
  int universe() const { return rows_.front().front().universe(); }
  const Permutation& perm() const { return perm_; }
  const Matrix& rows() const { return rows_; }
  const LaurentPoly& entry(int r, int c) const { return rows_[r][c]; }

  std::vector<LaurentPoly> evaluate(const std::vector<LaurentPoly>& v) const;
  /// Throws std::domain_error when the determinant is not a unit.
  SemilinearAuto inverse() const;
  bool is_linear() const { return perm_.is_identity(); }
  bool is_identity() const;
  bool is_upper_triangular() const;

  /// One line per basis vector, `e1 -> (1 - t2) e1 + (t1) e2`.
  std::string str() const;
  /// {"n":3,"perm":[2,1,3],"rows":[[<poly>,...],...]}
  nlohmann::json to_json() const;
  static SemilinearAuto from_json(const nlohmann::json& j);

  bool operator==(const SemilinearAuto& o) const { return perm_ == o.perm_ && rows_ == o.rows_; }

 private:
  Permutation perm_;
  Matrix rows_;
};

/// f first, then g: evaluate(sl_compose(f,g), v) == g.evaluate(f.evaluate(v)).
SemilinearAuto sl_compose(const SemilinearAuto& f, const SemilinearAuto& g);

enum class SlRep { Phi2B, Phi3B, BurauClassic };
std::optional<SlRep> sl_rep_from_string(std::string_view s);
std::string to_string(SlRep rep);

/// Throws std::invalid_argument for rho letters outside Phi3B.
SemilinearAuto sl_generator(SlRep rep, const BraidLetter& gen, int n);

struct RepMatrixReport {
  std::string word;
  SemilinearAuto image;
  bool is_linear;
  bool is_upper_triangular;
  nlohmann::json to_json() const;
};

RepMatrixReport sl_evaluate_word(SlRep rep, const BraidWord& w);
AuditReport sl_audit(SlRep rep, int n);

/// The five-case formula for the Gassner image of a_{i,j}.
Matrix gassner_closed_form(int i, int j, int n);
/// Abelianized Fox Jacobian of the Artin image of a_{i,j}.
Matrix fox_gassner(int i, int j, int n);

/// R_j G(a_{i,j}) R_j^-1 == G(a_{i,j+1}) as semilinear maps, for j < n.
bool gassner_inductive_step(int i, int j, int n);

enum class Specialization { AllTtoT, QtoOne };
SemilinearAuto sl_specialize(const SemilinearAuto& a, Specialization mode);

/// Each specialized Phi2B sigma_i matrix against the classical Burau block.
CheckReport burau_recovery(int n);
/// Each specialized Phi3B sigma_i matrix against the Phi2B one.
CheckReport q_to_one_recovery(int n);

struct KernelWitness {
  GroupWord word;  // in the free group on A = lambda_{1,2}, B = lambda_{1,3}
  std::size_t free_reduced_length;
  BraidWord expansion;
  SemilinearAuto image;

  bool nontrivial() const { return free_reduced_length > 0; }
  bool pass() const { return nontrivial() && image.is_identity(); }
  nlohmann::json to_json() const;
};

/// w = [[[A,B],[A^-1,B^-1]], [[A,B^-1],[A^-1,B]]], [a,b] = a^-1 b^-1 a b.
KernelWitness kernel_witness();

}  // namespace braidrep
