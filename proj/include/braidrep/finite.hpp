#pragma once

// Finite algebraic structures on {0, ..., size-1}, stored as dense tables.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace braidrep {

/// Dense binary operation table; (a, b) -> cell(a, b). No axioms assumed.
class OperationTable {
 public:
  OperationTable() = default;
  OperationTable(int size, std::vector<int> cells);
  static OperationTable from_rows(const std::vector<std::vector<int>>& rows);
  template <class F>
  static OperationTable from_function(int size, F&& f) {
    std::vector<int> cells(static_cast<std::size_t>(size) * size);
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) cells[a * size + b] = f(a, b);
    return OperationTable(size, std::move(cells));
  }

  int size() const { return size_; }
  int operator()(int a, int b) const { return cells_[a * size_ + b]; }
  /// The x with op(x, b) == c, if x -> op(x, b) is a bijection.
  std::optional<OperationTable> right_division() const;
  std::vector<std::vector<int>> rows() const;
  bool operator==(const OperationTable&) const = default;

 private:
  int size_ = 0;
  std::vector<int> cells_;
};

class FiniteGroup {
 public:
  /// Throws std::invalid_argument naming the failed group axiom.
  explicit FiniteGroup(OperationTable mul);
  static FiniteGroup cyclic(int m);
  /// Symmetric group on k letters; element 0 is the identity.
  static FiniteGroup symmetric(int k);

  int order() const { return mul_.size(); }
  int mul(int a, int b) const { return mul_(a, b); }
  int inv(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }
  bool is_abelian() const;
  const OperationTable& table() const { return mul_; }

 private:
  OperationTable mul_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

class FiniteQuandle {
 public:
  /// Throws std::invalid_argument naming the failed quandle axiom.
  static FiniteQuandle from_table(OperationTable op);
  /// a*b = 2b - a mod m.
  static FiniteQuandle dihedral(int m);
  /// a*b = a.
  static FiniteQuandle trivial(int m);
  /// a*b = b^-1 a b.
  static FiniteQuandle conjugation(const FiniteGroup& g);

  int size() const { return op_.size(); }
  int op(int a, int b) const { return op_(a, b); }
  int op_inv(int a, int b) const { return inv_(a, b); }
  const OperationTable& table() const { return op_; }
  bool is_trivial_subquandle(const std::vector<int>& subset) const;

 private:
  FiniteQuandle(OperationTable op, OperationTable inv) : op_(std::move(op)), inv_(std::move(inv)) {}
  OperationTable op_, inv_;
};

/// Skew brace (X, +, .): both tables groups and
/// a.(b+c) = (a.b) - a + (a.c).
class FiniteSkewBrace {
 public:
  FiniteSkewBrace(FiniteGroup plus, FiniteGroup times);
  /// + and . both equal to the group law.
  static FiniteSkewBrace trivial(const FiniteGroup& g);
  /// a.b = b + a.
  static FiniteSkewBrace almost_trivial(const FiniteGroup& g);

  int size() const { return plus_.order(); }
  const FiniteGroup& plus() const { return plus_; }
  const FiniteGroup& times() const { return times_; }

 private:
  FiniteGroup plus_, times_;
};

/// Biquandle given by its up operation a^b and down operation a_b, with
/// switch S(a, b) = (b^a, a_b).
class FiniteBiquandle {
 public:
  /// Throws std::invalid_argument naming the failed axiom: "up bijective",
  /// "down bijective", "axiom 2 (up)", "axiom 2 (down)", "biquandle identity 1..3",
  /// "switch bijective".
  FiniteBiquandle(OperationTable up, OperationTable down);
  /// a^b = a*b, a_b = a.
  static FiniteBiquandle from_quandle(const FiniteQuandle& q);

  int size() const { return up_.size(); }
  int up(int a, int b) const { return up_(a, b); }          // a^b
  int down(int a, int b) const { return down_(a, b); }      // a_b
  int up_inv(int a, int b) const { return up_inv_(a, b); }  // a^{b^-1}
  int down_inv(int a, int b) const { return down_inv_(a, b); }
  bool is_trivial_subbiquandle(const std::vector<int>& subset) const;

 private:
  OperationTable up_, down_, up_inv_, down_inv_;
};

/// Text format: a header line `quandle N`, `group N`, `switch N` or
/// `skewbrace N`, then N rows of N space-separated indices per table.
/// `switch` carries two tables (left outputs, then right outputs);
/// `skewbrace` carries + then .; the others one table.
struct StructureFile {
  std::string kind;
  int size = 0;
  std::vector<OperationTable> tables;
};

/// Throws std::runtime_error with a line number on malformed input.
StructureFile read_structure_file(std::istream& in);
void write_structure_file(std::ostream& out, const StructureFile& file);

}  // namespace braidrep
