#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "braidrep/switch.hpp"
#include "support.hpp"

using namespace braidrep;

namespace {

using Triple = std::array<int, 3>;

Triple s12(const std::function<Pair(int, int)>& s, Triple t) {
  auto [l, r] = s(t[0], t[1]);
  return {l, r, t[2]};
}
Triple s23(const std::function<Pair(int, int)>& s, Triple t) {
  auto [l, r] = s(t[1], t[2]);
  return {t[0], l, r};
}

// Direct evaluation of both braid-relation sides on X^3.
bool ybe_oracle(const FiniteSwitch& s) {
  auto f = [&](int a, int b) { return s(a, b); };
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      for (int c = 0; c < s.size(); ++c) {
        Triple t{a, b, c};
        if (s12(f, s23(f, s12(f, t))) != s23(f, s12(f, s23(f, t)))) return false;
      }
  return true;
}

bool matched_oracle(const FiniteSwitch& s, const FiniteSwitch& v) {
  auto fs = [&](int a, int b) { return s(a, b); };
  auto fv = [&](int a, int b) { return v(a, b); };
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      for (int c = 0; c < s.size(); ++c) {
        Triple t{a, b, c};
        if (s12(fv, s23(fs, s12(fv, t))) != s23(fv, s12(fs, s23(fv, t)))) return false;
      }
  return true;
}

bool virtual_pair_oracle(const FiniteSwitch& s, const FiniteSwitch& v) {
  for (int a = 0; a < v.size(); ++a)
    for (int b = 0; b < v.size(); ++b) {
      auto [l, r] = v(a, b);
      if (v(l, r) != Pair{a, b}) return false;
    }
  return ybe_oracle(s) && ybe_oracle(v) && matched_oracle(s, v);
}

/// S(a,b) = (f(b), f^-1(a)) for a permutation f: an involutive switch.
FiniteSwitch permutation_switch(const std::vector<int>& f) {
  std::vector<int> inv(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) inv[f[k]] = static_cast<int>(k);
  return FiniteSwitch::from_function(static_cast<int>(f.size()), [&](int a, int b) { return Pair{f[b], inv[a]}; });
}

TEST(FiniteSwitch, BijectivityEnforced) {
  std::vector<Pair> table{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  EXPECT_NO_THROW(FiniteSwitch(2, table));
  table[1] = {0, 0};
  EXPECT_THROW(FiniteSwitch(2, table), std::invalid_argument);
  EXPECT_THROW(FiniteSwitch(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(FiniteSwitch(2, {{0, 0}, {0, 1}, {1, 0}, {1, 2}}), std::invalid_argument);
}

TEST(FiniteSwitch, InverseTable) {
  auto s = burau_switch(5, 2);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      auto [l, r] = s(a, b);
      EXPECT_EQ(s.inverse(l, r), (Pair{a, b}));
    }
  EXPECT_FALSE(s.is_involutive());
  EXPECT_TRUE(twist(4).is_involutive());
}

TEST(FiniteSwitch, TablesRoundTrip) {
  auto s = artin_switch(FiniteGroup::symmetric(3));
  EXPECT_EQ(FiniteSwitch::from_tables(s.left_table(), s.right_table()), s);
}

TEST(YBE, Examples) {
  EXPECT_TRUE(check_ybe(twist(3)).pass);
  auto sa = check_ybe(artin_switch(FiniteGroup::symmetric(3)));
  EXPECT_TRUE(sa.pass);
  EXPECT_TRUE(sa.counterexample.is_null());
  EXPECT_EQ(sa.to_json()["check"], "ybe");
}

TEST(YBE, AgreesWithOracleOnRandomBijections) {
  auto g = testing_support::rng(40);
  int failures = 0;
  for (int it = 0; it < 200; ++it) {
    int n = testing_support::uniform(g, 2, 3);
    std::vector<Pair> cells;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) cells.push_back({a, b});
    std::shuffle(cells.begin(), cells.end(), g);
    FiniteSwitch s(n, cells);
    auto r = check_ybe(s);
    ASSERT_EQ(r.pass, ybe_oracle(s));
    if (!r.pass) {
      ++failures;
      int a = r.counterexample["a"], b = r.counterexample["b"], c = r.counterexample["c"];
      auto f = [&](int x, int y) { return s(x, y); };
      Triple t{a, b, c};
      ASSERT_NE(s12(f, s23(f, s12(f, t))), s23(f, s12(f, s23(f, t))));
    }
  }
  EXPECT_GT(failures, 0);
}

TEST(Builtins, Formulas) {
  auto b = burau_switch(5, 2);
  for (int a = 0; a < 5; ++a)
    for (int c = 0; c < 5; ++c) EXPECT_EQ(b(a, c), (Pair{(4 * a + 2 * c) % 5, a}));
  EXPECT_THROW(burau_switch(6, 2), std::invalid_argument);
  EXPECT_EQ(skew_brace_switch(FiniteSkewBrace::trivial(FiniteGroup::cyclic(4))), twist(4));
  auto d = quandle_switch(FiniteQuandle::dihedral(3));
  for (int a = 0; a < 3; ++a)
    for (int c = 0; c < 3; ++c) EXPECT_EQ(d(a, c), (Pair{((2 * a - c) % 3 + 3) % 3, a}));
  auto g = FiniteGroup::symmetric(3);
  auto sa = artin_switch(g);
  for (int a = 0; a < 6; ++a)
    for (int c = 0; c < 6; ++c) EXPECT_EQ(sa(a, c), (Pair{g.mul(g.mul(a, c), g.inv(a)), a}));
  EXPECT_THROW(builtin_switch("nope", {}), std::invalid_argument);
  EXPECT_THROW(builtin_switch("quandle", {}), std::invalid_argument);
}

TEST(Builtins, AllSatisfyYBE) {
  auto s3 = FiniteGroup::symmetric(3);
  std::vector<FiniteSwitch> all{
      twist(3),
      artin_switch(s3),
      artin_switch(FiniteGroup::cyclic(4)),
      burau_switch(5, 2),
      burau_switch(7, 3),
      quandle_switch(FiniteQuandle::dihedral(3)),
      quandle_switch(FiniteQuandle::dihedral(5)),
      quandle_switch(FiniteQuandle::conjugation(s3)),
      skew_brace_switch(FiniteSkewBrace::trivial(FiniteGroup::cyclic(4))),
      skew_brace_switch(FiniteSkewBrace::trivial(s3)),
      skew_brace_switch(FiniteSkewBrace::almost_trivial(s3)),
      biquandle_switch(FiniteBiquandle::from_quandle(FiniteQuandle::dihedral(3))),
  };
  for (std::size_t k = 0; k < all.size(); ++k) {
    EXPECT_TRUE(check_ybe(all[k]).pass) << k;
    EXPECT_TRUE(ybe_oracle(all[k])) << k;
  }
}

bool brace_oracle(const FiniteGroup& plus, const FiniteGroup& times) {
  int n = plus.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int lhs = times.mul(a, plus.mul(b, c));
        int rhs = plus.mul(plus.mul(times.mul(a, b), plus.inv(a)), times.mul(a, c));
        if (lhs != rhs) return false;
      }
  return true;
}

TEST(SkewBrace, CompatibilityEnforced) {
  auto s3 = FiniteGroup::symmetric(3);
  auto z6 = FiniteGroup::cyclic(6);
  auto z4 = FiniteGroup::cyclic(4);
  auto klein = FiniteGroup(OperationTable::from_function(4, [](int a, int b) { return a ^ b; }));
  ASSERT_FALSE(brace_oracle(s3, z6));
  EXPECT_THROW(FiniteSkewBrace(s3, z6), std::invalid_argument);
  for (const auto& [p, t] : {std::pair{z4, klein}, {klein, z4}, {z4, z4}})
    EXPECT_EQ(brace_oracle(p, t), [&] {
      try {
        FiniteSkewBrace b(p, t);
        return true;
      } catch (const std::invalid_argument&) {
        return false;
      }
    }());
}

TEST(VirtualPair, Examples) {
  auto g = FiniteGroup::symmetric(3);
  auto r = check_virtual_pair({artin_switch(g), twist(6)});
  EXPECT_TRUE(r.pass) << r.to_json().dump();
  EXPECT_EQ(r.parts.size(), 4u);
  EXPECT_TRUE(check_virtual_pair({twist(3), twist(3)}).pass);
  EXPECT_TRUE(check_virtual_pair({artin_switch(FiniteGroup::cyclic(5)), twist(5)}).pass);
}

TEST(VirtualPair, AgreesWithOracle) {
  auto g = FiniteGroup::symmetric(3);
  std::vector<FiniteSwitch> s{twist(6), artin_switch(g), quandle_switch(FiniteQuandle::conjugation(g))};
  std::vector<FiniteSwitch> v{twist(6), permutation_switch({1, 2, 0, 4, 5, 3}), permutation_switch({0, 1, 2, 3, 5, 4}),
                              artin_switch(g)};
  for (const auto& a : s)
    for (const auto& b : v) EXPECT_EQ(check_virtual_pair({a, b}).pass, virtual_pair_oracle(a, b));
}

TEST(Manturov, Examples) {
  auto r3 = FiniteQuandle::dihedral(3);
  auto p = manturov_pair(r3, {0});
  auto rep = check_virtual_pair(p.assembled());
  EXPECT_TRUE(rep.pass) << rep.to_json().dump();
  EXPECT_TRUE(virtual_pair_oracle(p.s.assembled(), p.v.assembled()));

  auto t3 = FiniteQuandle::trivial(3);
  auto full = manturov_pair(t3, {0, 1, 2});
  EXPECT_TRUE(check_virtual_pair(full.assembled()).pass);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
          auto [l, r] = full.s.assembled()(full.s.encode(a, {x}), full.s.encode(b, {y}));
          EXPECT_EQ(full.s.decode(l), (std::pair<int, std::vector<int>>{b, {y}}));
          EXPECT_EQ(full.s.decode(r), (std::pair<int, std::vector<int>>{a, {x}}));
        }
  EXPECT_THROW(manturov_pair(r3, {0, 1}), std::invalid_argument);
}

TEST(Manturov, FormulaOnProductCarrier) {
  auto q = FiniteQuandle::dihedral(5);
  std::vector<int> sub{2};
  auto p = manturov_pair(q, sub);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      auto [l, r] = p.v.assembled()(p.v.encode(a, {2}), p.v.encode(b, {2}));
      EXPECT_EQ(p.v.decode(l).first, q.op_inv(b, 2));
      EXPECT_EQ(p.v.decode(r).first, q.op(a, 2));
    }
  EXPECT_TRUE(check_virtual_pair(p.assembled()).pass);
}

TEST(MultiSwitch, ComponentsAreSwitches) {
  auto q = FiniteQuandle::dihedral(3);
  FiniteMultiSwitch ms(
      3, {{0, 1}, {0, 1, 2}}, [&](int a, int b, const std::vector<Pair>&) { return Pair{q.op(b, a), a}; },
      {twist(2), burau_switch(3, 2)});
  auto r = check_multiswitch(ms);
  EXPECT_TRUE(r.pass) << r.to_json().dump();
  for (const auto& c : ms.components()) EXPECT_TRUE(ybe_oracle(c));
  EXPECT_EQ(ms.assembled().size(), 3 * 2 * 3);
  for (int code = 0; code < ms.assembled().size(); ++code) {
    auto [a, xs] = ms.decode(code);
    EXPECT_EQ(ms.encode(a, xs), code);
  }
}

TEST(MultiSwitch, BadComponentIsReported) {
  // Bijection of {0,1}^2 that violates the braid relation.
  FiniteSwitch bad(2, {{0, 1}, {0, 0}, {1, 0}, {1, 1}});
  ASSERT_FALSE(ybe_oracle(bad));
  FiniteMultiSwitch ms(
      2, {{0, 1}}, [](int a, int b, const std::vector<Pair>&) { return Pair{b, a}; }, {bad});
  EXPECT_FALSE(check_multiswitch(ms).pass);
  EXPECT_THROW(FiniteMultiSwitch(2, {{0, 5}}, [](int a, int b, const std::vector<Pair>&) { return Pair{b, a}; },
                                 {twist(2)}),
               std::invalid_argument);
}

TEST(Biquandle, AxiomErrorsNamed) {
  auto expect_reason = [](const OperationTable& up, const OperationTable& down, const std::string& reason) {
    try {
      FiniteBiquandle b(up, down);
      ADD_FAILURE() << "expected failure " << reason;
    } catch (const std::invalid_argument& e) {
      EXPECT_NE(std::string(e.what()).find(reason), std::string::npos) << e.what();
    }
  };
  auto proj = OperationTable::from_function(3, [](int a, int) { return a; });
  expect_reason(OperationTable::from_function(3, [](int, int) { return 0; }), proj, "up bijective");
  expect_reason(proj, OperationTable::from_function(3, [](int, int) { return 1; }), "down bijective");
  expect_reason(OperationTable::from_function(3, [](int a, int) { return (a + 1) % 3; }), proj, "axiom 2");
  EXPECT_NO_THROW(FiniteBiquandle(proj, proj));
}

// Every solution of the braid relation on a 2- or 3-element set satisfies the
// three up/down identities; those that are biquandles construct cleanly.
TEST(Biquandle, IdentitiesFollowFromYBE) {
  for (int n : {2, 3}) {
    std::vector<int> perm(n * n);
    std::iota(perm.begin(), perm.end(), 0);
    int solutions = 0, biquandles = 0;
    do {
      std::vector<Pair> cells;
      for (int k : perm) cells.push_back({k / n, k % n});
      FiniteSwitch s(n, cells);
      if (!ybe_oracle(s)) continue;
      ++solutions;
      auto up = [&](int x, int a) { return s(a, x).first; };
      auto down = [&](int a, int b) { return s(a, b).second; };
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            ASSERT_EQ(up(up(a, b), c), up(up(a, down(c, b)), up(b, c)));
            ASSERT_EQ(down(down(a, b), c), down(down(a, up(c, b)), down(b, c)));
            ASSERT_EQ(down(up(a, b), up(c, down(b, a))), up(down(a, c), down(b, up(c, a))));
          }
      try {
        FiniteBiquandle bq(OperationTable::from_function(n, up), OperationTable::from_function(n, down));
        ++biquandles;
        EXPECT_EQ(biquandle_switch(bq), s);
      } catch (const std::invalid_argument& e) {
        EXPECT_EQ(std::string(e.what()).find("identity"), std::string::npos) << e.what();
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_GT(solutions, 0);
    EXPECT_GT(biquandles, 0);
  }
}

TEST(Biquandle, QuandlePairPasses) {
  for (int m : {3, 5}) {
    auto b = FiniteBiquandle::from_quandle(FiniteQuandle::dihedral(m));
    auto r = check_biquandle_pair(b, {0});
    EXPECT_TRUE(r.pass) << r.to_json().dump();
    auto p = biquandle_pair(b, {0});
    auto mp = manturov_pair(FiniteQuandle::dihedral(m), {0});
    EXPECT_EQ(p.s.assembled(), mp.s.assembled());
    EXPECT_EQ(p.v.assembled(), mp.v.assembled());
  }
  auto b = FiniteBiquandle::from_quandle(FiniteQuandle::dihedral(3));
  EXPECT_THROW(biquandle_pair(b, {0, 1}), std::invalid_argument);
}

TEST(StructureFile, RoundTrip) {
  StructureFile f{"switch", 3, {twist(3).left_table(), twist(3).right_table()}};
  std::stringstream ss;
  write_structure_file(ss, f);
  auto back = read_structure_file(ss);
  EXPECT_EQ(back.kind, "switch");
  EXPECT_EQ(back.size, 3);
  EXPECT_EQ(back.tables, f.tables);

  std::istringstream q("# dihedral\nquandle 3\n0 2 1\n2 1 0\n1 0 2\n");
  auto qf = read_structure_file(q);
  EXPECT_EQ(qf.tables.at(0), FiniteQuandle::dihedral(3).table());
}

TEST(StructureFile, Errors) {
  for (const char* text : {"", "quandle\n", "loop 2\n0 1\n1 0\n", "quandle 2\n0 1\n", "quandle 2\n0 1\n1 5\n",
                           "quandle 2\n0 1 1\n1 0\n", "switch 2\n0 1\n1 0\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_structure_file(in), std::runtime_error) << text;
  }
}

TEST(Symbolic, S2BComposites) {
  auto r = symbolic_multiswitch_check(SymbolicCheck::S2B);
  EXPECT_TRUE(r.pass) << r.to_json().dump();
  Ring R{3};
  auto s = ModuleState::generic(3, false);
  auto lhs = apply_s2b(apply_s2b(apply_s2b(s, 0), 1), 0);
  auto rhs = apply_s2b(apply_s2b(apply_s2b(s, 1), 0), 1);
  auto a = std::vector<LaurentPoly>{R.one(), R.zero(), R.zero()};
  auto vec = [&](LaurentPoly ca, LaurentPoly cb, LaurentPoly cc) { return std::vector<LaurentPoly>{ca, cb, cc}; };
  ModuleState expect;
  expect.module = {vec(R.one() - R.t(3), R.t(1) * (R.one() - R.t(3)), R.t(1) * R.t(2)),
                   vec(R.one() - R.t(2), R.t(1), R.zero()), a};
  expect.x = {R.t(3), R.t(2), R.t(1)};
  EXPECT_EQ(lhs, expect) << lhs.str();
  EXPECT_EQ(rhs, expect) << rhs.str();
  EXPECT_EQ(apply_s2b_inverse(apply_s2b(s, 1), 1), s);
}

TEST(Symbolic, S3BV3B) {
  auto r = symbolic_multiswitch_check(SymbolicCheck::S3B_V3B);
  EXPECT_TRUE(r.pass) << r.to_json().dump();
  Ring R{3};
  auto s = ModuleState::generic(3, true);
  EXPECT_EQ(apply_v3b(apply_v3b(s, 0), 0), s);
  auto vsv = apply_v3b(apply_s3b(apply_v3b(s, 1), 0), 1);
  auto vec = [&](LaurentPoly ca, LaurentPoly cb, LaurentPoly cc) { return std::vector<LaurentPoly>{ca, cb, cc}; };
  ModuleState expect;
  expect.module = {vec(R.one() - R.t(3), R.zero(), R.t(1) * R.q(2)), vec(R.zero(), R.q(1) * R.q(3, -1), R.zero()),
                   vec(R.q(2, -1), R.zero(), R.zero())};
  expect.x = {R.t(3), R.t(2), R.t(1)};
  expect.p = {R.q(3), R.q(2), R.q(1)};
  EXPECT_EQ(vsv, expect) << vsv.str();
  EXPECT_EQ(apply_v3b(apply_s3b(apply_v3b(s, 0), 1), 0), expect);
}

TEST(PermutationRep, Examples) {
  PermutationRep tw(twist(2), std::nullopt, 3);
  EXPECT_EQ(tw.states(), 8u);
  EXPECT_TRUE(tw.audit().pass());

  PermutationRep bu(burau_switch(5, 2), std::nullopt, 3);
  EXPECT_EQ(bu.states(), 125u);
  auto a = bu.audit();
  ASSERT_EQ(a.checks.size(), 1u);
  EXPECT_EQ(a.checks[0].tag, RelatorTag::b1);
  EXPECT_TRUE(a.pass());

  auto g = FiniteGroup::symmetric(3);
  PermutationRep sa(artin_switch(g), twist(6), 3);
  auto va = sa.audit();
  EXPECT_EQ(va.checks.size(), relator_catalog(3, true).size());
  EXPECT_TRUE(va.pass()) << va.to_json().dump();
}

TEST(PermutationRep, ApplyMatchesDirectComposition) {
  auto s = burau_switch(5, 3);
  PermutationRep rep(s, std::nullopt, 3);
  std::vector<int> t{1, 4, 2};
  auto out = rep.apply(BraidWord::parse("s1 s2", 3), t);
  auto [l, r] = s(1, 4);
  auto [l2, r2] = s(r, 2);
  EXPECT_EQ(out, (std::vector<int>{l, l2, r2}));
  auto act = rep.action(BraidWord::parse("s1 s2", 3));
  EXPECT_EQ(act[rep.encode(t)], rep.encode(out));
  EXPECT_EQ(rep.apply(BraidWord::parse("s2^-1 s1^-1", 3), out), t);
  EXPECT_THROW(rep.apply(BraidWord::parse("r1", 3), t), std::invalid_argument);
}

TEST(PermutationRep, InvolutiveGivesSymmetricGroupAction) {
  for (const auto& s : {twist(3), permutation_switch({1, 2, 0}), permutation_switch({1, 0, 3, 2})}) {
    ASSERT_TRUE(s.is_involutive());
    PermutationRep rep(s, std::nullopt, 4);
    for (int i = 1; i <= 2; ++i) {
      auto w = (BraidWord(4, {BraidLetter::sigma(i), BraidLetter::sigma(i + 1)})).power(3);
      auto act = rep.action(w);
      for (std::uint64_t k = 0; k < act.size(); ++k) ASSERT_EQ(act[k], k);
      auto sq = rep.action(BraidWord(4, {BraidLetter::sigma(i), BraidLetter::sigma(i)}));
      for (std::uint64_t k = 0; k < sq.size(); ++k) ASSERT_EQ(sq[k], k);
    }
  }
}

TEST(PermutationRep, BoundFromEnvironment) {
  ::setenv("BRAIDREP_MAX_STATES", "26", 1);
  EXPECT_THROW(PermutationRep(twist(3), std::nullopt, 3), std::length_error);
  ::setenv("BRAIDREP_MAX_STATES", "27", 1);
  EXPECT_NO_THROW(PermutationRep(twist(3), std::nullopt, 3));
  ::setenv("BRAIDREP_MAX_STATES", "abc", 1);
  EXPECT_THROW(max_states(), std::invalid_argument);
  ::unsetenv("BRAIDREP_MAX_STATES");
  EXPECT_EQ(max_states(), 1'000'000u);
  EXPECT_THROW(PermutationRep(twist(4), std::nullopt, 10), std::length_error);
}

}  // namespace
