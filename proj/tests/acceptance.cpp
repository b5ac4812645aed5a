// Acceptance suite: one line per criterion, exact arithmetic, wall-clock limits.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "braidrep/gassner.hpp"
#include "braidrep/group_words.hpp"
#include "braidrep/quandle.hpp"
#include "braidrep/switch.hpp"

using namespace braidrep;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

Ring R3{3};
using Elem = std::vector<LaurentPoly>;

// Module element over the formal basis {a,b,c}.
Elem elem(const LaurentPoly& ca, const LaurentPoly& cb, const LaurentPoly& cc) { return {ca, cb, cc}; }

LaurentPoly one = R3.one(), zero = R3.zero();
LaurentPoly x = R3.t(1), y = R3.t(2), z = R3.t(3);
LaurentPoly p = R3.q(1), q = R3.q(2), r = R3.q(3);

ModuleState state(std::vector<Elem> m, std::vector<LaurentPoly> xs, std::vector<LaurentPoly> ps = {}) {
  return ModuleState{std::move(m), std::move(xs), std::move(ps)};
}

// ---- 1 -----------------------------------------------------------------
void s2b() {
  auto rep = symbolic_multiswitch_check(SymbolicCheck::S2B);
  require(rep.pass, "symbolic check failed: " + rep.to_json().dump());
  ModuleState g = ModuleState::generic(3, false);
  ModuleState lhs = apply_s2b(apply_s2b(apply_s2b(g, 0), 1), 0);
  ModuleState rhs = apply_s2b(apply_s2b(apply_s2b(g, 1), 0), 1);
  // ((1-z)a + x((1-z)b + yc), (1-y)a + xb, a; z, y, x)
  ModuleState shown = state({elem(one - z, x * (one - z), x * y), elem(one - y, x, zero), elem(one, zero, zero)},
                            {z, y, x});
  require(lhs == shown, "S1S2S1 = " + lhs.str());
  require(rhs == shown, "S2S1S2 = " + rhs.str());
  // inverse (b, y^-1 a + y^-1 (x-1) b; y, x)
  ModuleState g2 = ModuleState::generic(2, false);
  ModuleState inv = apply_s2b_inverse(g2, 0);
  ModuleState inv_shown = state({elem(zero, one, zero), elem(R3.t(2, -1), R3.t(2, -1) * (x - one), zero)}, {y, x});
  require(inv == inv_shown, "S^-1 = " + inv.str());
}

// ---- 2 -----------------------------------------------------------------
void s3b() {
  auto rep = symbolic_multiswitch_check(SymbolicCheck::S3B_V3B);
  require(rep.pass, "symbolic check failed: " + rep.to_json().dump());
  ModuleState g = ModuleState::generic(3, true);
  auto S = [](const ModuleState& s, int i) { return apply_s3b(s, i); };
  auto V = [](const ModuleState& s, int i) { return apply_v3b(s, i); };
  LaurentPoly qi = R3.q(2, -1), ri = R3.q(3, -1);
  ModuleState v121 = state({elem(zero, zero, q * p), elem(zero, ri * p, zero), elem(ri * qi, zero, zero)},
                           {z, y, x}, {r, q, p});
  ModuleState v212 = state({elem(zero, zero, p * q), elem(zero, p * ri, zero), elem(qi * ri, zero, zero)},
                           {z, y, x}, {r, q, p});
  require(V(V(V(g, 0), 1), 0) == v121, "V1V2V1 = " + V(V(V(g, 0), 1), 0).str());
  require(V(V(V(g, 1), 0), 1) == v212, "V2V1V2 = " + V(V(V(g, 1), 0), 1).str());
  ModuleState g2 = ModuleState::generic(2, true);
  require(V(V(g2, 0), 0) == g2, "V^2 != id");
  // ((1-z)a + xqc, pr^-1 b, q^-1 a; z, y, x; r, q, p)
  ModuleState matched = state({elem(one - z, zero, x * q), elem(zero, p * ri, zero), elem(qi, zero, zero)},
                              {z, y, x}, {r, q, p});
  require(V(S(V(g, 1), 0), 1) == matched, "V2S1V2 = " + V(S(V(g, 1), 0), 1).str());
  require(V(S(V(g, 0), 1), 0) == matched, "V1S2V1 = " + V(S(V(g, 0), 1), 0).str());
}

// ---- 3 -----------------------------------------------------------------
void gassner() {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        auto rep = sl_evaluate_word(SlRep::Phi2B, pure_generator(i, j, n));
        Matrix closed = gassner_closed_form(i, j, n);
        Matrix fox = fox_gassner(i, j, n);
        std::string at = " at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(n) + ")";
        require(rep.is_linear, "a_ij image not linear" + at);
        require(rep.image.rows() == closed, "word evaluation differs from closed form" + at);
        require(fox == closed, "Fox Jacobian differs from closed form" + at);
        if (j < n) require(gassner_inductive_step(i, j, n), "inductive step fails" + at);
      }
  }
  // base of the induction, written out
  Ring R{2};
  Matrix a12 = {{R.one() - R.t(1) + R.t(1) * R.t(2), R.t(1) * (R.one() - R.t(1))}, {R.one() - R.t(2), R.t(1)}};
  require(sl_evaluate_word(SlRep::Phi2B, BraidWord::parse("s1 s1", 2)).image.rows() == a12, "a_12 display");
}

// ---- 4 -----------------------------------------------------------------
void burau() {
  for (int n = 2; n <= 6; ++n) {
    Ring R{n};
    for (int i = 1; i < n; ++i) {
      Matrix block = identity_matrix(n, n);
      block[i - 1][i - 1] = R.one() - R.single_t();
      block[i - 1][i] = R.single_t();
      block[i][i - 1] = R.one();
      block[i][i] = R.zero();
      auto special = sl_specialize(sl_generator(SlRep::Phi2B, BraidLetter::sigma(i), n), Specialization::AllTtoT);
      require(special.rows() == block, "sigma_" + std::to_string(i) + " specialization, n=" + std::to_string(n));
    }
    require(burau_recovery(n).pass, "burau_recovery n=" + std::to_string(n));
  }
}

// ---- 5 -----------------------------------------------------------------
void phi3b_audit() {
  for (int n = 2; n <= 4; ++n) {
    auto a = sl_audit(SlRep::Phi3B, n);
    require(!a.checks.empty() && a.pass(), "Phi3B audit n=" + std::to_string(n) + ": " + a.to_json().dump());
  }
}

// ---- 6 -----------------------------------------------------------------
void kernel() {
  Ring R{3};
  auto t = [&](int i, int e = 1) { return R.t(i, e); };
  auto qq = [&](int i, int e = 1) { return R.q(i, e); };
  Matrix l12 = {{qq(2) * t(2, -1), qq(2) * t(2, -1) * (t(1) - R.one()), R.zero()},
                {R.zero(), qq(1, -1), R.zero()},
                {R.zero(), R.zero(), R.one()}};
  Matrix l13 = {{qq(3) * t(3, -1), R.zero(), qq(3) * t(3, -1) * (t(1) - R.one()) * qq(2)},
                {R.zero(), R.one(), R.zero()},
                {R.zero(), R.zero(), qq(1, -1)}};
  Matrix l23 = {{R.one(), R.zero(), R.zero()},
                {R.zero(), qq(3) * t(3, -1), qq(3) * t(3, -1) * (t(2) - R.one())},
                {R.zero(), R.zero(), qq(2, -1)}};
  const std::pair<int, int> idx[] = {{1, 2}, {1, 3}, {2, 3}};
  const Matrix* expected[] = {&l12, &l13, &l23};
  for (int k = 0; k < 3; ++k) {
    auto rep = sl_evaluate_word(SlRep::Phi3B, lambda_generator(idx[k].first, idx[k].second));
    std::string name = "lambda_" + std::to_string(idx[k].first) + std::to_string(idx[k].second);
    require(rep.is_linear, name + " not linear");
    require(rep.image.rows() == *expected[k], name + " = \n" + rep.image.str());
    require(rep.is_upper_triangular, name + " not upper triangular");
    require(!rep.image.is_identity(), name + " is the identity");
  }
  // Free reduction oracle in the rank-2 free group, letters +-1 (A), +-2 (B).
  using FW = std::vector<int>;
  auto inv = [](FW w) {
    std::reverse(w.begin(), w.end());
    for (int& l : w) l = -l;
    return w;
  };
  auto mul = [](FW a, const FW& b) {
    for (int l : b) {
      if (!a.empty() && a.back() == -l) a.pop_back();
      else a.push_back(l);
    }
    return a;
  };
  auto comm = [&](const FW& a, const FW& b) { return mul(mul(mul(inv(a), inv(b)), a), b); };
  FW A{1}, B{2}, Ai{-1}, Bi{-2};
  FW w = comm(comm(comm(A, B), comm(Ai, Bi)), comm(comm(A, Bi), comm(Ai, B)));
  KernelWitness kw = kernel_witness();
  require(!w.empty(), "oracle reduces the witness to the empty word");
  require(kw.free_reduced_length == w.size(),
          "free reduced length " + std::to_string(kw.free_reduced_length) + " vs oracle " + std::to_string(w.size()));
  require(kw.nontrivial(), "witness trivial");
  require(kw.image.is_identity() && kw.image.perm().is_identity(), "witness image not identity:\n" + kw.image.str());
  require(kw.pass(), "kernel witness report fails");
}

// ---- 7 -----------------------------------------------------------------
void quandle_reps() {
  for (int n = 2; n <= 4; ++n) {
    for (auto rep : {rep_phi2Q(n), rep_fq_n_plus_1(n)}) {
      std::string name = to_string(rep.name()) + " n=" + std::to_string(n);
      require(rep.verify_inverse_witnesses(), name + " inverse witnesses");
      auto a = rep.audit();
      require(!a.checks.empty() && a.pass(), name + ": " + a.to_json().dump());
    }
  }
}

// ---- 8 -----------------------------------------------------------------
void group_reps() {
  for (int n = 2; n <= 4; ++n)
    for (auto name : {GroupRepName::ArtinB, GroupRepName::ArtinVB, GroupRepName::PhiM, GroupRepName::PhiMTilde}) {
      GroupRep rep = builtin_group_rep(name, n);
      std::string label = to_string(name) + " n=" + std::to_string(n);
      require(rep.verify_inverse_witnesses(), label + " inverse witnesses");
      auto a = rep.audit();
      require(a.checks.size() == relator_catalog(n, rep.is_virtual()).size() && a.pass(),
              label + ": " + a.to_json().dump());
    }
}

// ---- 9 -----------------------------------------------------------------
void finite_switches() {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  require(!s3.is_abelian() && s3.order() == 6, "S3 table");
  std::vector<std::pair<std::string, FiniteSwitch>> ybe = {
      {"twist", twist(3)},
      {"artin S3", artin_switch(s3)},
      {"burau Z5 t=2", burau_switch(5, 2)},
      {"dihedral R3", quandle_switch(FiniteQuandle::dihedral(3))},
      {"trivial brace Z4", skew_brace_switch(FiniteSkewBrace::trivial(FiniteGroup::cyclic(4)))},
  };
  for (const auto& [name, s] : ybe) require(check_ybe(s).pass, name + " YBE");
  require(ybe.back().second == twist(4), "trivial brace switch is not the twist");
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) require(burau_switch(5, 2)(a, b) == Pair{(4 * a + 2 * b) % 5, a}, "burau table");

  auto manturov = manturov_pair(FiniteQuandle::dihedral(3), {0});
  auto vp = manturov.assembled();
  auto mr = check_virtual_pair(vp);
  require(mr.pass, "Manturov pair: " + mr.to_json().dump());
  require(!(vp.v == twist(vp.v.size())), "Manturov V is the twist");

  // permutation representations, n = 3, carriers of size <= 4
  struct Case {
    std::string name;
    FiniteSwitch s;
    std::optional<FiniteSwitch> v;
  };
  std::vector<Case> cases = {
      {"twist |X|=2", twist(2), twist(2)},
      {"twist |X|=4", twist(4), twist(4)},
      {"burau Z3 t=2", burau_switch(3, 2), twist(3)},
      {"dihedral R3", quandle_switch(FiniteQuandle::dihedral(3)), twist(3)},
      {"dihedral R4", quandle_switch(FiniteQuandle::dihedral(4)), twist(4)},
      {"Manturov R3 x {0}", vp.s, vp.v},
      {"trivial brace Z4", skew_brace_switch(FiniteSkewBrace::trivial(FiniteGroup::cyclic(4))), twist(4)},
      {"burau Z5 t=2", burau_switch(5, 2), std::nullopt},
      {"(S_A, T) on S3", artin_switch(s3), twist(6)},
  };
  for (const auto& c : cases) {
    auto a = PermutationRep(c.s, c.v, 3).audit();
    require(!a.checks.empty() && a.pass(), c.name + " permutation rep: " + a.to_json().dump());
  }
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<void()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "S2B Yang-Baxter, symbolic", 1, s2b},
      {2, "(S3B, V3B) virtual 3-switch, symbolic", 1, s3b},
      {3, "Gassner coincidence, n = 2..5, with inductive step", 10, gassner},
      {4, "Burau recovery by t_i = t", 1, burau},
      {5, "Phi3B relator audit, n = 2..4", 10, phi3b_audit},
      {6, "lambda images and kernel witness", 30, kernel},
      {7, "quandle representation audits, n = 2..4", 10, quandle_reps},
      {8, "group automorphism representation audits, n = 2..4", 10, group_reps},
      {9, "finite switch suite", 10, finite_switches},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run();
    } catch (const Failure& f) {
      error = f.what;
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && secs > c.limit_s) error = "time limit exceeded";
    bool ok = error.empty();
    failed += !ok;
    std::printf("[%s] criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                secs, c.limit_s, ok ? "" : " -- ", error.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
