#include "braidrep/gassner.hpp"

#include <stdexcept>

namespace braidrep {

// ---- matrices ----------------------------------------------------------

Matrix identity_matrix(int n, int universe) {
  Matrix m(n, std::vector<LaurentPoly>(n, LaurentPoly(universe)));
  for (int k = 0; k < n; ++k) m[k][k] = LaurentPoly(universe, 1);
  return m;
}

Matrix matrix_product(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("matrix size mismatch");
  const int u = a.front().front().universe();
  Matrix out(n, std::vector<LaurentPoly>(n, LaurentPoly(u)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (!b[k][c].is_zero()) out[r][c] += a[r][k] * b[k][c];
    }
  return out;
}

Matrix permute_entries(const Matrix& m, const Permutation& p) {
  if (p.is_identity()) return m;
  Matrix out = m;
  for (auto& row : out)
    for (auto& e : row) e = e.permute(p.images());
  return out;
}

namespace {

Matrix minor_of(const Matrix& m, std::size_t skip_r, std::size_t skip_c) {
  Matrix out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r == skip_r) continue;
    std::vector<LaurentPoly> row;
    for (std::size_t c = 0; c < m.size(); ++c)
      if (c != skip_c) row.push_back(m[r][c]);
    out.push_back(std::move(row));
  }
  return out;
}

std::string format_row(const std::vector<LaurentPoly>& row) {
  std::string s;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c].is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string e = "e" + std::to_string(c + 1);
    s += row[c].is_one() ? e : "(" + row[c].format() + ") " + e;
  }
  return s.empty() ? "0" : s;
}

}  // namespace

LaurentPoly determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  LaurentPoly det(m[0][0].universe());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    LaurentPoly term = m[0][c] * determinant(minor_of(m, 0, c));
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

// ---- SemilinearAuto ----------------------------------------------------

SemilinearAuto::SemilinearAuto(Permutation perm, Matrix rows) : perm_(std::move(perm)), rows_(std::move(rows)) {
  const std::size_t n = perm_.images().size();
  if (n == 0) throw std::invalid_argument("semilinear map needs rank >= 1");
  if (rows_.size() != n) throw std::invalid_argument("matrix rank differs from permutation size");
  for (const auto& row : rows_)
    if (row.size() != n) throw std::invalid_argument("matrix must be square");
  const int u = rows_[0][0].universe();
  for (const auto& row : rows_)
    for (const auto& e : row)
      if (e.universe() != u) throw UniverseMismatch(u, e.universe());
}

SemilinearAuto SemilinearAuto::identity(int n, int universe) {
  return SemilinearAuto(Permutation::identity(n), identity_matrix(n, universe));
}

std::vector<LaurentPoly> SemilinearAuto::evaluate(const std::vector<LaurentPoly>& v) const {
  if (static_cast<int>(v.size()) != n()) throw std::invalid_argument("vector length differs from rank");
  std::vector<LaurentPoly> out(n(), LaurentPoly(universe()));
  for (int k = 0; k < n(); ++k) {
    LaurentPoly a = v[k].permute(perm_.images());
    if (a.is_zero()) continue;
    for (int c = 0; c < n(); ++c) out[c] += a * rows_[k][c];
  }
  return out;
}

SemilinearAuto SemilinearAuto::inverse() const {
  LaurentPoly det = determinant(rows_);
  if (!det.is_unit()) throw std::domain_error("determinant " + det.format() + " is not a unit");
  LaurentPoly dinv = det.unit_inverse();
  const int size = n();
  Matrix inv(size, std::vector<LaurentPoly>(size, LaurentPoly(universe())));
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) {
      LaurentPoly cof = size == 1 ? LaurentPoly(universe(), 1) : determinant(minor_of(rows_, c, r));
      inv[r][c] = ((r + c) % 2 ? -cof : cof) * dinv;
    }
  Permutation pinv = perm_.inverse();
  return SemilinearAuto(pinv, permute_entries(inv, pinv));
}

bool SemilinearAuto::is_identity() const { return *this == identity(n(), universe()); }

bool SemilinearAuto::is_upper_triangular() const {
  for (int r = 0; r < n(); ++r)
    for (int c = 0; c < r; ++c)
      if (!rows_[r][c].is_zero()) return false;
  return true;
}

std::string SemilinearAuto::str() const {
  std::string s = "perm [";
  for (int k = 0; k < n(); ++k) s += (k ? " " : "") + std::to_string(perm_(k + 1));
  s += "]\n";
  for (int k = 0; k < n(); ++k) s += "e" + std::to_string(k + 1) + " -> " + format_row(rows_[k]) + "\n";
  return s;
}

nlohmann::json SemilinearAuto::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(e.to_json());
    rows.push_back(std::move(r));
  }
  return {{"n", n()}, {"universe", universe()}, {"perm", perm_.images()}, {"rows", rows}};
}

SemilinearAuto SemilinearAuto::from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  int u = j.contains("universe") ? j.at("universe").get<int>() : n;
  Matrix rows;
  for (const auto& r : j.at("rows")) {
    std::vector<LaurentPoly> row;
    for (const auto& e : r) row.push_back(LaurentPoly::from_json(e, u));
    rows.push_back(std::move(row));
  }
  return SemilinearAuto(Permutation(j.at("perm").get<std::vector<int>>()), std::move(rows));
}

SemilinearAuto sl_compose(const SemilinearAuto& f, const SemilinearAuto& g) {
  if (f.n() != g.n()) throw std::invalid_argument("rank mismatch in composition");
  return SemilinearAuto(f.perm().then(g.perm()), matrix_product(permute_entries(f.rows(), g.perm()), g.rows()));
}

// ---- representations ---------------------------------------------------

std::optional<SlRep> sl_rep_from_string(std::string_view s) {
  if (s == "phi2b" || s == "Phi2B") return SlRep::Phi2B;
  if (s == "phi3b" || s == "Phi3B") return SlRep::Phi3B;
  if (s == "burau" || s == "BurauClassic") return SlRep::BurauClassic;
  return std::nullopt;
}

std::string to_string(SlRep rep) {
  switch (rep) {
    case SlRep::Phi2B: return "Phi2B";
    case SlRep::Phi3B: return "Phi3B";
    case SlRep::BurauClassic: return "BurauClassic";
  }
  return "?";
}

SemilinearAuto sl_generator(SlRep rep, const BraidLetter& gen, int n) {
  if (n < 2) throw std::invalid_argument("representations need n >= 2");
  const int j = gen.index;
  if (j < 1 || j > n - 1) throw std::out_of_range("generator index out of range");
  if (gen.kind == LetterKind::Rho && rep != SlRep::Phi3B)
    throw std::invalid_argument(to_string(rep) + " is a braid group representation; rho is undefined");
  Ring R{n};
  Matrix m = identity_matrix(n, n);
  const int a = j - 1, b = j;  // 0-based rows of e_j, e_{j+1}
  m[a][a] = m[b][b] = R.zero();
  if (rep == SlRep::BurauClassic) {
    auto t = R.single_t();
    if (gen.exponent > 0) {
      m[a][a] = R.one() - t;
      m[a][b] = t;
      m[b][a] = R.one();
    } else {
      m[a][b] = R.one();
      m[b][a] = R.single_t(-1);
      m[b][b] = R.one() - R.single_t(-1);
    }
    return SemilinearAuto(Permutation::identity(n), std::move(m));
  }
  if (gen.kind == LetterKind::Rho) {
    m[a][b] = R.q(j);
    m[b][a] = R.q(j + 1, -1);
  } else if (gen.exponent > 0) {
    m[a][a] = R.one() - R.t(j + 1);
    m[a][b] = R.t(j);
    m[b][a] = R.one();
  } else {
    m[a][b] = R.one();
    m[b][a] = R.t(j + 1, -1);
    m[b][b] = R.t(j + 1, -1) * (R.t(j) - R.one());
  }
  return SemilinearAuto(Permutation::transposition(n, j, j + 1), std::move(m));
}

nlohmann::json RepMatrixReport::to_json() const {
  return {{"word", word},
          {"image", image.to_json()},
          {"is_linear", is_linear},
          {"is_upper_triangular", is_upper_triangular}};
}

RepMatrixReport sl_evaluate_word(SlRep rep, const BraidWord& w) {
  const int n = w.strands();
  SemilinearAuto acc = SemilinearAuto::identity(n, n);
  for (const auto& l : w.letters()) acc = sl_compose(acc, sl_generator(rep, l, n));
  bool lin = acc.is_linear(), tri = acc.is_upper_triangular();
  return {w.str(), std::move(acc), lin, tri};
}

AuditReport sl_audit(SlRep rep, int n) {
  return audit_relators(
      to_string(rep), n, rep == SlRep::Phi3B, [rep](const BraidWord& w) { return sl_evaluate_word(rep, w).image; },
      [](const SemilinearAuto& a, const SemilinearAuto& b) -> std::string {
        if (!(a.perm() == b.perm())) return "permutations differ";
        for (int r = 0; r < a.n(); ++r)
          for (int c = 0; c < a.n(); ++c)
            if (!(a.entry(r, c) == b.entry(r, c)))
              return "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " +
                     a.entry(r, c).format() + " vs " + b.entry(r, c).format();
        return {};
      });
}

// ---- Gassner -----------------------------------------------------------

Matrix gassner_closed_form(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) throw std::out_of_range("Gassner image needs 1 <= i < j <= n");
  Ring R{n};
  Matrix m = identity_matrix(n, n);
  auto row = [&](int k) -> std::vector<LaurentPoly>& { return m[k - 1]; };
  row(i)[i - 1] = R.one() - R.t(i) + R.t(i) * R.t(j);
  row(i)[j - 1] = R.t(i) * (R.one() - R.t(i));
  for (int k = i + 1; k < j; ++k) {
    row(k)[i - 1] = (R.one() - R.t(k)) * (R.one() - R.t(j));
    row(k)[j - 1] = (R.one() - R.t(k)) * (R.t(i) - R.one());
  }
  row(j)[i - 1] = R.one() - R.t(j);
  row(j)[j - 1] = R.t(i);
  return m;
}

Matrix fox_gassner(int i, int j, int n) {
  GeneratorMap image = builtin_group_rep(GroupRepName::ArtinB, n).evaluate(pure_generator(i, j, n));
  Matrix m;
  for (int r = 0; r < n; ++r) {
    std::vector<LaurentPoly> row;
    for (int s = 1; s <= n; ++s) row.push_back(fox_derivative_ab(image.image(r), s));
    m.push_back(std::move(row));
  }
  return m;
}

bool gassner_inductive_step(int i, int j, int n) {
  if (j >= n) throw std::out_of_range("inductive step needs j < n");
  SemilinearAuto g(Permutation::identity(n), gassner_closed_form(i, j, n));
  SemilinearAuto r = sl_generator(SlRep::Phi2B, BraidLetter::sigma(j), n);
  SemilinearAuto rinv = sl_generator(SlRep::Phi2B, BraidLetter::sigma(j, -1), n);
  SemilinearAuto next(Permutation::identity(n), gassner_closed_form(i, j + 1, n));
  return sl_compose(sl_compose(r, g), rinv) == next;
}

SemilinearAuto sl_specialize(const SemilinearAuto& a, Specialization mode) {
  const int u = a.universe();
  Ring R{u};
  std::map<VarId, LaurentPoly> images;
  for (int k = 1; k <= u; ++k) {
    if (mode == Specialization::AllTtoT) images.insert_or_assign(VarId::t(k), R.single_t());
    else images.insert_or_assign(VarId::q(k), R.one());
  }
  Matrix m = a.rows();
  for (auto& row : m)
    for (auto& e : row) e = e.specialize(images);
  return SemilinearAuto(a.perm(), std::move(m));
}

namespace {

CheckReport compare_generators(const std::string& name, int n, SlRep from, Specialization mode, SlRep to,
                               bool compare_perm) {
  std::vector<CheckReport> parts;
  for (int i = 1; i < n; ++i)
    for (int e : {1, -1}) {
      BraidLetter l = BraidLetter::sigma(i, e);
      SemilinearAuto got = sl_specialize(sl_generator(from, l, n), mode);
      SemilinearAuto want = sl_generator(to, l, n);
      CheckReport c{.check = l.str()};
      c.pass = got.rows() == want.rows() && (!compare_perm || got.perm() == want.perm());
      if (!c.pass) c.counterexample = {{"specialized", got.str()}, {"expected", want.str()}};
      parts.push_back(std::move(c));
    }
  return CheckReport::all_of(name, std::move(parts));
}

}  // namespace

CheckReport burau_recovery(int n) {
  return compare_generators("burau_recovery", n, SlRep::Phi2B, Specialization::AllTtoT, SlRep::BurauClassic, false);
}

CheckReport q_to_one_recovery(int n) {
  return compare_generators("q_to_one_recovery", n, SlRep::Phi3B, Specialization::QtoOne, SlRep::Phi2B, true);
}

// ---- kernel witness ----------------------------------------------------

nlohmann::json KernelWitness::to_json() const {
  return {{"word", word.str()},
          {"free_reduced_length", free_reduced_length},
          {"braid_length", expansion.length()},
          {"nontrivial", nontrivial()},
          {"image_is_identity", image.is_identity()},
          {"image", image.to_json()},
          {"pass", pass()}};
}

KernelWitness kernel_witness() {
  auto u = GroupUniverse::parse("F(A; B)");
  GroupWord A = GroupWord::generator(u, "A");
  GroupWord B = GroupWord::generator(u, "B");
  GroupWord Ai = A.inverse(), Bi = B.inverse();
  GroupWord w = commutator(commutator(commutator(A, B), commutator(Ai, Bi)),
                           commutator(commutator(A, Bi), commutator(Ai, B)));
  const BraidWord lA = lambda_generator(1, 2);
  const BraidWord lB = lambda_generator(1, 3);
  BraidWord expansion(3);
  for (const auto& l : w.letters()) {
    const BraidWord& base = u->generators()[l.gen].name == "A" ? lA : lB;
    expansion = expansion * base.power(l.exp);
  }
  SemilinearAuto image = sl_evaluate_word(SlRep::Phi3B, expansion).image;
  return {w, w.length(), std::move(expansion), std::move(image)};
}

}  // namespace braidrep
