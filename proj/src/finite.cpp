#include "braidrep/finite.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "braidrep/quandle.hpp"

namespace braidrep {

OperationTable::OperationTable(int size, std::vector<int> cells)
    : size_(size), cells_(std::move(cells)) {
  if (size_ < 1) throw std::invalid_argument("table size must be positive");
  if (cells_.size() != static_cast<std::size_t>(size_) * size_)
    throw std::invalid_argument("table must have size^2 entries");
  for (int c : cells_)
    if (c < 0 || c >= size_) throw std::invalid_argument("table entry out of range");
}

OperationTable OperationTable::from_rows(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<int> cells;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw std::invalid_argument("table must be square");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return OperationTable(n, std::move(cells));
}

std::optional<OperationTable> OperationTable::right_division() const {
  std::vector<int> inv(cells_.size(), -1);
  for (int b = 0; b < size_; ++b) {
    for (int x = 0; x < size_; ++x) {
      int c = (*this)(x, b);
      if (inv[c * size_ + b] >= 0) return std::nullopt;
      inv[c * size_ + b] = x;
    }
  }
  return OperationTable(size_, std::move(inv));
}

std::vector<std::vector<int>> OperationTable::rows() const {
  std::vector<std::vector<int>> r(size_);
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) r[a].push_back((*this)(a, b));
  return r;
}

// ---- groups ------------------------------------------------------------

FiniteGroup::FiniteGroup(OperationTable mul) : mul_(std::move(mul)) {
  const int n = mul_.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul_(mul_(a, b), c) != mul_(a, mul_(b, c)))
          throw std::invalid_argument("group table is not associative at (" + std::to_string(a) +
                                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul_(e, a) == a && mul_(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("group table has no identity");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul_(a, b) == identity_ && mul_(b, a) == identity_) inverse_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inverse_[a] < 0) throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
}

FiniteGroup FiniteGroup::cyclic(int m) {
  return FiniteGroup(OperationTable::from_function(m, [m](int a, int b) { return (a + b) % m; }));
}

FiniteGroup FiniteGroup::symmetric(int k) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
  // product a.b applies a first, then b
  return FiniteGroup(OperationTable::from_function(static_cast<int>(perms.size()), [&](int a, int b) {
    std::vector<int> r(k);
    for (int x = 0; x < k; ++x) r[x] = perms[b][perms[a][x]];
    return index.at(r);
  }));
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

// ---- quandles ----------------------------------------------------------

FiniteQuandle FiniteQuandle::from_table(OperationTable op) {
  CheckReport r = check_quandle_axioms(op);
  if (!r.pass) {
    for (const auto& p : r.parts)
      if (!p.pass) throw std::invalid_argument("quandle table fails " + p.check);
  }
  auto inv = op.right_division();
  return FiniteQuandle(std::move(op), std::move(*inv));
}

FiniteQuandle FiniteQuandle::dihedral(int m) {
  return from_table(OperationTable::from_function(m, [m](int a, int b) { return ((2 * b - a) % m + m) % m; }));
}

FiniteQuandle FiniteQuandle::trivial(int m) {
  return from_table(OperationTable::from_function(m, [](int a, int) { return a; }));
}

FiniteQuandle FiniteQuandle::conjugation(const FiniteGroup& g) {
  return from_table(OperationTable::from_function(
      g.order(), [&g](int a, int b) { return g.mul(g.mul(g.inv(b), a), b); }));
}

bool FiniteQuandle::is_trivial_subquandle(const std::vector<int>& subset) const {
  if (subset.empty()) return false;
  for (int a : subset) {
    if (a < 0 || a >= size()) return false;
    for (int b : subset)
      if (op(a, b) != a) return false;
  }
  return true;
}

// ---- skew braces -------------------------------------------------------

FiniteSkewBrace::FiniteSkewBrace(FiniteGroup plus, FiniteGroup times)
    : plus_(std::move(plus)), times_(std::move(times)) {
  const int n = plus_.order();
  if (times_.order() != n) throw std::invalid_argument("skew brace tables differ in size");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int lhs = times_.mul(a, plus_.mul(b, c));
        int rhs = plus_.mul(plus_.mul(times_.mul(a, b), plus_.inv(a)), times_.mul(a, c));
        if (lhs != rhs)
          throw std::invalid_argument("skew brace compatibility fails at (" + std::to_string(a) +
                                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
      }
}

FiniteSkewBrace FiniteSkewBrace::trivial(const FiniteGroup& g) { return FiniteSkewBrace(g, g); }

FiniteSkewBrace FiniteSkewBrace::almost_trivial(const FiniteGroup& g) {
  return FiniteSkewBrace(
      g, FiniteGroup(OperationTable::from_function(g.order(), [&g](int a, int b) { return g.mul(b, a); })));
}

// ---- biquandles --------------------------------------------------------

FiniteBiquandle::FiniteBiquandle(OperationTable up_table, OperationTable down_table)
    : up_(std::move(up_table)), down_(std::move(down_table)) {
  const int n = up_.size();
  if (down_.size() != n) throw std::invalid_argument("biquandle tables differ in size");
  auto ui = up_.right_division();
  if (!ui) throw std::invalid_argument("biquandle fails up bijective");
  auto di = down_.right_division();
  if (!di) throw std::invalid_argument("biquandle fails down bijective");
  up_inv_ = std::move(*ui);
  down_inv_ = std::move(*di);
  for (int a = 0; a < n; ++a) {
    if (up_inv(a, a) != down(a, up_inv(a, a)))
      throw std::invalid_argument("biquandle fails axiom 2 (up) at a=" + std::to_string(a));
    if (down_inv(a, a) != up(a, down_inv(a, a)))
      throw std::invalid_argument("biquandle fails axiom 2 (down) at a=" + std::to_string(a));
  }
  // the three equalities forced by the Yang-Baxter equation for S(a,b) = (b^a, a_b)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::string at = " at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + ")";
        if (up(up(a, b), c) != up(up(a, down(c, b)), up(b, c)))
          throw std::invalid_argument("biquandle fails identity 1" + at);
        if (down(down(a, b), c) != down(down(a, up(c, b)), down(b, c)))
          throw std::invalid_argument("biquandle fails identity 2" + at);
        if (down(up(a, b), up(c, down(b, a))) != up(down(a, c), down(b, up(c, a))))
          throw std::invalid_argument("biquandle fails identity 3" + at);
      }
  std::vector<bool> hit(static_cast<std::size_t>(n) * n, false);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::size_t k = static_cast<std::size_t>(up(b, a)) * n + down(a, b);
      if (hit[k]) throw std::invalid_argument("biquandle fails switch bijective");
      hit[k] = true;
    }
}

FiniteBiquandle FiniteBiquandle::from_quandle(const FiniteQuandle& q) {
  return FiniteBiquandle(q.table(), OperationTable::from_function(q.size(), [](int a, int) { return a; }));
}

bool FiniteBiquandle::is_trivial_subbiquandle(const std::vector<int>& subset) const {
  if (subset.empty()) return false;
  for (int a : subset) {
    if (a < 0 || a >= size()) return false;
    for (int b : subset)
      if (up(a, b) != a || down(a, b) != a) return false;
  }
  return true;
}

// ---- file format -------------------------------------------------------

StructureFile read_structure_file(std::istream& in) {
  StructureFile f;
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto p = line.find('#');
      if (p != std::string::npos) line.erase(p);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& msg) -> std::runtime_error {
    return std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
  };
  if (!next_line()) throw std::runtime_error("empty structure file");
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> f.kind >> f.size) || (hs >> extra)) throw fail("expected '<kind> <size>' header");
  }
  int tables = 0;
  if (f.kind == "quandle" || f.kind == "group") {
    tables = 1;
  } else if (f.kind == "switch" || f.kind == "skewbrace") {
    tables = 2;
  } else {
    throw fail("unknown structure kind '" + f.kind + "'");
  }
  if (f.size < 1 || f.size > 4096) throw fail("size out of range");
  for (int t = 0; t < tables; ++t) {
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < f.size; ++r) {
      if (!next_line()) throw fail("unexpected end of file, expected table row");
      std::istringstream rs(line);
      std::vector<int> row;
      std::string tok;
      while (rs >> tok) {
        try {
          std::size_t used = 0;
          int v = std::stoi(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
          if (v < 0 || v >= f.size) throw fail("entry " + tok + " out of range");
          row.push_back(v);
        } catch (const std::invalid_argument&) {
          throw fail("bad entry '" + tok + "'");
        } catch (const std::out_of_range&) {
          throw fail("bad entry '" + tok + "'");
        }
      }
      if (static_cast<int>(row.size()) != f.size)
        throw fail("expected " + std::to_string(f.size) + " entries");
      rows.push_back(std::move(row));
    }
    f.tables.push_back(OperationTable::from_rows(rows));
  }
  if (next_line()) throw fail("trailing data");
  return f;
}

void write_structure_file(std::ostream& out, const StructureFile& file) {
  out << file.kind << ' ' << file.size << '\n';
  for (const auto& t : file.tables)
    for (const auto& row : t.rows()) {
      for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
      out << '\n';
    }
}

}  // namespace braidrep
