#include "braidrep/switch.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "braidrep/quandle.hpp"

namespace braidrep {

namespace {

nlohmann::json pair_json(Pair p) { return nlohmann::json::array({p.first, p.second}); }

using Triple = std::array<int, 3>;

Triple on12(const FiniteSwitch& s, Triple t) {
  auto [l, r] = s(t[0], t[1]);
  return {l, r, t[2]};
}

Triple on23(const FiniteSwitch& s, Triple t) {
  auto [l, r] = s(t[1], t[2]);
  return {t[0], l, r};
}

CheckReport ybe_report(const std::string& name, const FiniteSwitch& s) {
  CheckReport rep{.check = name};
  const int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Triple t{a, b, c};
        Triple lhs = on12(s, on23(s, on12(s, t)));
        Triple rhs = on23(s, on12(s, on23(s, t)));
        if (lhs != rhs) {
          rep.pass = false;
          rep.counterexample = {{"a", a}, {"b", b}, {"c", c}, {"lhs", lhs}, {"rhs", rhs}};
          return rep;
        }
      }
  return rep;
}

}  // namespace

// ---- FiniteSwitch ------------------------------------------------------

FiniteSwitch::FiniteSwitch(int size, std::vector<Pair> table) : size_(size), table_(std::move(table)) {
  if (size_ < 1) throw std::invalid_argument("switch carrier must be nonempty");
  if (table_.size() != static_cast<std::size_t>(size_) * size_)
    throw std::invalid_argument("switch table must have size^2 entries");
  inverse_.assign(table_.size(), {-1, -1});
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      auto [l, r] = table_[index(a, b)];
      if (l < 0 || l >= size_ || r < 0 || r >= size_)
        throw std::invalid_argument("switch output out of range at (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
      Pair& slot = inverse_[index(l, r)];
      if (slot.first >= 0)
        throw std::invalid_argument("switch table is not a bijection: (" + std::to_string(slot.first) +
                                    "," + std::to_string(slot.second) + ") and (" + std::to_string(a) +
                                    "," + std::to_string(b) + ") share an image");
      slot = {a, b};
    }
}

FiniteSwitch FiniteSwitch::from_function(int size, const std::function<Pair(int, int)>& f) {
  std::vector<Pair> table;
  table.reserve(static_cast<std::size_t>(size) * size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) table.push_back(f(a, b));
  return FiniteSwitch(size, std::move(table));
}

FiniteSwitch FiniteSwitch::from_tables(const OperationTable& left, const OperationTable& right) {
  if (left.size() != right.size()) throw std::invalid_argument("switch tables differ in size");
  return from_function(left.size(), [&](int a, int b) { return Pair{left(a, b), right(a, b)}; });
}

bool FiniteSwitch::is_involutive() const {
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      auto [l, r] = (*this)(a, b);
      if ((*this)(l, r) != Pair{a, b}) return false;
    }
  return true;
}

OperationTable FiniteSwitch::left_table() const {
  return OperationTable::from_function(size_, [this](int a, int b) { return (*this)(a, b).first; });
}

OperationTable FiniteSwitch::right_table() const {
  return OperationTable::from_function(size_, [this](int a, int b) { return (*this)(a, b).second; });
}

CheckReport check_ybe(const FiniteSwitch& s) { return ybe_report("ybe", s); }

CheckReport check_virtual_pair(const VirtualPair& p) {
  if (p.s.size() != p.v.size()) throw std::invalid_argument("virtual pair carriers differ");
  const int n = p.s.size();
  CheckReport inv{.check = "v_involutive"};
  for (int a = 0; a < n && inv.pass; ++a)
    for (int b = 0; b < n && inv.pass; ++b) {
      auto img = p.v(a, b);
      auto back = p.v(img.first, img.second);
      if (back != Pair{a, b}) {
        inv.pass = false;
        inv.counterexample = {{"a", a}, {"b", b}, {"v(a,b)", pair_json(img)}, {"v(v(a,b))", pair_json(back)}};
      }
    }
  CheckReport matched{.check = "matched"};
  for (int a = 0; a < n && matched.pass; ++a)
    for (int b = 0; b < n && matched.pass; ++b)
      for (int c = 0; c < n && matched.pass; ++c) {
        Triple t{a, b, c};
        Triple lhs = on12(p.v, on23(p.s, on12(p.v, t)));
        Triple rhs = on23(p.v, on12(p.s, on23(p.v, t)));
        if (lhs != rhs) {
          matched.pass = false;
          matched.counterexample = {{"a", a}, {"b", b}, {"c", c}, {"lhs", lhs}, {"rhs", rhs}};
        }
      }
  return CheckReport::all_of("virtual_pair", {inv, ybe_report("ybe_v", p.v), ybe_report("ybe_s", p.s), matched});
}

// ---- built-ins ---------------------------------------------------------

FiniteSwitch twist(int size) {
  return FiniteSwitch::from_function(size, [](int a, int b) { return Pair{b, a}; });
}

FiniteSwitch artin_switch(const FiniteGroup& g) {
  return FiniteSwitch::from_function(g.order(), [&g](int a, int b) {
    return Pair{g.mul(g.mul(a, b), g.inv(a)), a};
  });
}

FiniteSwitch burau_switch(int m, int t) {
  if (m < 2) throw std::invalid_argument("Burau modulus must be at least 2");
  int tr = ((t % m) + m) % m;
  if (std::gcd(tr, m) != 1)
    throw std::invalid_argument("t = " + std::to_string(t) + " is not a unit mod " + std::to_string(m));
  return FiniteSwitch::from_function(m, [m, tr](int a, int b) {
    long long l = (static_cast<long long>(1 - tr + m) * a + static_cast<long long>(tr) * b) % m;
    return Pair{static_cast<int>(l), a};
  });
}

FiniteSwitch quandle_switch(const FiniteQuandle& q) {
  return FiniteSwitch::from_function(q.size(), [&q](int a, int b) { return Pair{q.op(b, a), a}; });
}

FiniteSwitch skew_brace_switch(const FiniteSkewBrace& br) {
  const FiniteGroup& plus = br.plus();
  const FiniteGroup& times = br.times();
  return FiniteSwitch::from_function(br.size(), [&](int a, int b) {
    int ab = times.mul(a, b);
    int l = plus.mul(plus.inv(a), ab);
    int r = times.mul(times.inv(l), ab);
    return Pair{l, r};
  });
}

FiniteSwitch biquandle_switch(const FiniteBiquandle& bq) {
  return FiniteSwitch::from_function(bq.size(), [&bq](int a, int b) { return Pair{bq.up(b, a), bq.down(a, b)}; });
}

FiniteSwitch builtin_switch(const std::string& name, const BuiltinParams& p) {
  if (name == "twist") return twist(p.size);
  if (name == "artin") {
    if (p.group) return artin_switch(*p.group);
    return artin_switch(p.size == 6 ? FiniteGroup::symmetric(3) : FiniteGroup::cyclic(p.size));
  }
  if (name == "burau") return burau_switch(p.modulus, p.t);
  if (name == "dihedral") return quandle_switch(FiniteQuandle::dihedral(p.size));
  if (name == "quandle") {
    if (!p.quandle) throw std::invalid_argument("quandle switch needs a quandle table");
    return quandle_switch(*p.quandle);
  }
  if (name == "skewbrace") {
    if (!p.brace) throw std::invalid_argument("skew brace switch needs skew brace tables");
    return skew_brace_switch(*p.brace);
  }
  if (name == "skewbrace-trivial") return skew_brace_switch(FiniteSkewBrace::trivial(FiniteGroup::cyclic(p.size)));
  throw std::invalid_argument("unknown builtin switch '" + name + "'");
}

// ---- multi-switches ----------------------------------------------------

namespace {

int position_in(const std::vector<int>& subset, int x) {
  auto it = std::find(subset.begin(), subset.end(), x);
  if (it == subset.end()) throw std::invalid_argument("element " + std::to_string(x) + " outside subset");
  return static_cast<int>(it - subset.begin());
}

FiniteSwitch assemble(int x_size, const std::vector<std::vector<int>>& subsets,
                      const FiniteMultiSwitch::S0& s0, const std::vector<FiniteSwitch>& comps) {
  if (x_size < 1) throw std::invalid_argument("multi-switch carrier must be nonempty");
  if (subsets.size() != comps.size()) throw std::invalid_argument("one component switch per subset required");
  long long total = x_size;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto& s = subsets[i];
    if (s.empty()) throw std::invalid_argument("multi-switch subsets must be nonempty");
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("subset lists an element twice");
    for (int x : s)
      if (x < 0 || x >= x_size) throw std::invalid_argument("subset element outside carrier");
    if (comps[i].size() != static_cast<int>(s.size()))
      throw std::invalid_argument("component " + std::to_string(i + 1) + " does not act on its subset");
    total *= static_cast<long long>(s.size());
    if (total > 1 << 15) throw std::length_error("product carrier too large");
  }
  const int size = static_cast<int>(total);
  auto decode = [&](int code) {
    int a = code % x_size;
    code /= x_size;
    std::vector<int> pos(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      int k = static_cast<int>(subsets[i].size());
      pos[i] = code % k;
      code /= k;
    }
    return std::pair{a, pos};
  };
  auto encode = [&](int a, const std::vector<int>& pos) {
    int code = 0;
    for (std::size_t i = subsets.size(); i-- > 0;) code = code * static_cast<int>(subsets[i].size()) + pos[i];
    return code * x_size + a;
  };
  return FiniteSwitch::from_function(size, [&](int A, int B) {
    auto [a, pa] = decode(A);
    auto [b, pb] = decode(B);
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < subsets.size(); ++i) pairs.push_back({subsets[i][pa[i]], subsets[i][pb[i]]});
    auto [l, r] = s0(a, b, pairs);
    if (l < 0 || l >= x_size || r < 0 || r >= x_size) throw std::invalid_argument("S_0 output outside carrier");
    std::vector<int> ql(subsets.size()), qr(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) std::tie(ql[i], qr[i]) = comps[i](pa[i], pb[i]);
    return Pair{encode(l, ql), encode(r, qr)};
  });
}

}  // namespace

FiniteMultiSwitch::FiniteMultiSwitch(int x_size, std::vector<std::vector<int>> subsets, S0 s0,
                                     std::vector<FiniteSwitch> components)
    : x_size_(x_size),
      subsets_(std::move(subsets)),
      components_(std::move(components)),
      assembled_(assemble(x_size_, subsets_, s0, components_)) {}

int FiniteMultiSwitch::encode(int a, const std::vector<int>& xs) const {
  if (xs.size() != subsets_.size()) throw std::invalid_argument("one element per subset required");
  int code = 0;
  for (std::size_t i = subsets_.size(); i-- > 0;)
    code = code * static_cast<int>(subsets_[i].size()) + position_in(subsets_[i], xs[i]);
  return code * x_size_ + a;
}

std::pair<int, std::vector<int>> FiniteMultiSwitch::decode(int code) const {
  int a = code % x_size_;
  code /= x_size_;
  std::vector<int> xs;
  for (const auto& s : subsets_) {
    int k = static_cast<int>(s.size());
    xs.push_back(s[code % k]);
    code /= k;
  }
  return {a, xs};
}

CheckReport check_multiswitch(const FiniteMultiSwitch& s) {
  std::vector<CheckReport> parts{ybe_report("ybe", s.assembled())};
  for (int i = 0; i < s.m(); ++i) parts.push_back(ybe_report("ybe_component_" + std::to_string(i + 1), s.components()[i]));
  return CheckReport::all_of("multiswitch", std::move(parts));
}

VirtualMultiPair biquandle_pair(const FiniteBiquandle& bq, const std::vector<int>& subset) {
  if (!bq.is_trivial_subbiquandle(subset)) throw std::invalid_argument("subset is not a trivial subbiquandle");
  const int k = static_cast<int>(subset.size());
  FiniteMultiSwitch s(
      bq.size(), {subset},
      [&bq](int a, int b, const std::vector<Pair>&) { return Pair{bq.up(b, a), bq.down(a, b)}; }, {twist(k)});
  FiniteMultiSwitch v(
      bq.size(), {subset},
      [&bq](int a, int b, const std::vector<Pair>& xy) {
        auto [x, y] = xy[0];
        return Pair{bq.up_inv(b, x), bq.up(a, y)};
      },
      {twist(k)});
  return {std::move(s), std::move(v)};
}

VirtualMultiPair manturov_pair(const FiniteQuandle& q, const std::vector<int>& subset) {
  if (!q.is_trivial_subquandle(subset)) throw std::invalid_argument("subset is not a trivial subquandle");
  const int k = static_cast<int>(subset.size());
  FiniteMultiSwitch s(
      q.size(), {subset}, [&q](int a, int b, const std::vector<Pair>&) { return Pair{q.op(b, a), a}; }, {twist(k)});
  FiniteMultiSwitch v(
      q.size(), {subset},
      [&q](int a, int b, const std::vector<Pair>& xy) {
        auto [x, y] = xy[0];
        return Pair{q.op_inv(b, x), q.op(a, y)};
      },
      {twist(k)});
  return {std::move(s), std::move(v)};
}

CheckReport check_biquandle_side_conditions(const FiniteBiquandle& bq, const std::vector<int>& subset) {
  CheckReport first{.check = "side_condition_1"};
  CheckReport second{.check = "side_condition_2"};
  for (int a = 0; a < bq.size(); ++a)
    for (int b = 0; b < bq.size(); ++b)
      for (int x : subset) {
        if (first.pass && bq.up(bq.up_inv(b, x), a) != bq.up_inv(bq.up(b, bq.up(a, x)), x)) {
          first.pass = false;
          first.counterexample = {{"a", a}, {"b", b}, {"x", x}};
        }
        if (second.pass && bq.up(bq.down(a, bq.up_inv(b, x)), x) != bq.down(bq.up(a, x), b)) {
          second.pass = false;
          second.counterexample = {{"a", a}, {"b", b}, {"y", x}};
        }
      }
  return CheckReport::all_of("biquandle_side_conditions", {first, second});
}

CheckReport check_biquandle_pair(const FiniteBiquandle& bq, const std::vector<int>& subset) {
  CheckReport side = check_biquandle_side_conditions(bq, subset);
  VirtualMultiPair pair = biquandle_pair(bq, subset);
  return CheckReport::all_of("biquandle_pair", {side, check_virtual_pair(pair.assembled())});
}

// ---- symbolic ----------------------------------------------------------

namespace {

constexpr int kSymUniverse = 3;
const char* const kBasis[] = {"a", "b", "c"};

using ModElem = std::vector<LaurentPoly>;

ModElem scale(const LaurentPoly& c, const ModElem& v) {
  ModElem out;
  for (const auto& e : v) out.push_back(c * e);
  return out;
}

ModElem add(const ModElem& u, const ModElem& v) {
  ModElem out;
  for (std::size_t k = 0; k < u.size(); ++k) out.push_back(u[k] + v[k]);
  return out;
}

std::string format_elem(const ModElem& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += v[k].is_one() ? std::string(kBasis[k]) : "(" + v[k].format() + ")" + kBasis[k];
  }
  return s.empty() ? "0" : s;
}

void check_position(const ModuleState& s, int i) {
  if (i < 0 || i + 1 >= static_cast<int>(s.module.size())) throw std::out_of_range("switch position");
}

}  // namespace

ModuleState ModuleState::generic(int k, bool with_p) {
  if (k < 1 || k > 3) throw std::invalid_argument("generic state supports 1..3 strands");
  Ring R{kSymUniverse};
  ModuleState s;
  for (int i = 0; i < k; ++i) {
    ModElem e(3, R.zero());
    e[i] = R.one();
    s.module.push_back(e);
    s.x.push_back(R.t(i + 1));
    if (with_p) s.p.push_back(R.q(i + 1));
  }
  return s;
}

std::string ModuleState::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < module.size(); ++i) s += (i ? ", " : "") + format_elem(module[i]);
  s += ";";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : " ") + x[i].format();
  if (!p.empty()) {
    s += ";";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : " ") + p[i].format();
  }
  return s + ")";
}

ModuleState apply_s2b(const ModuleState& s, int i) {
  check_position(s, i);
  ModuleState out = s;
  const auto& a = s.module[i];
  const auto& b = s.module[i + 1];
  const auto& x = s.x[i];
  const auto& y = s.x[i + 1];
  out.module[i] = add(scale(LaurentPoly(x.universe(), 1) - y, a), scale(x, b));
  out.module[i + 1] = a;
  std::swap(out.x[i], out.x[i + 1]);
  return out;
}

ModuleState apply_s2b_inverse(const ModuleState& s, int i) {
  check_position(s, i);
  ModuleState out = s;
  const auto& a = s.module[i];
  const auto& b = s.module[i + 1];
  const auto& x = s.x[i];
  const auto& y = s.x[i + 1];
  LaurentPoly yi = y.unit_inverse();
  out.module[i] = b;
  out.module[i + 1] = add(scale(yi, a), scale(yi * (x - LaurentPoly(x.universe(), 1)), b));
  std::swap(out.x[i], out.x[i + 1]);
  return out;
}

ModuleState apply_s3b(const ModuleState& s, int i) {
  ModuleState out = apply_s2b(s, i);
  std::swap(out.p.at(i), out.p.at(i + 1));
  return out;
}

ModuleState apply_v3b(const ModuleState& s, int i) {
  check_position(s, i);
  ModuleState out = s;
  const auto& p = s.p.at(i);
  const auto& q = s.p.at(i + 1);
  out.module[i] = scale(p, s.module[i + 1]);
  out.module[i + 1] = scale(q.unit_inverse(), s.module[i]);
  std::swap(out.x[i], out.x[i + 1]);
  std::swap(out.p[i], out.p[i + 1]);
  return out;
}

CheckReport symbolic_multiswitch_check(SymbolicCheck which) {
  auto compare = [](const std::string& name, const std::string& ln, const ModuleState& l,
                    const std::string& rn, const ModuleState& r) {
    CheckReport c{.check = name, .pass = l == r};
    c.details = {{ln, l.str()}, {rn, r.str()}};
    if (!c.pass) c.counterexample = c.details;
    return c;
  };
  if (which == SymbolicCheck::S2B) {
    ModuleState g2 = ModuleState::generic(2, false);
    ModuleState g3 = ModuleState::generic(3, false);
    auto inverse = CheckReport::all_of(
        "inverse", {compare("left_inverse", "S^-1 S", apply_s2b_inverse(apply_s2b(g2, 0), 0), "id", g2),
                    compare("right_inverse", "S S^-1", apply_s2b(apply_s2b_inverse(g2, 0), 0), "id", g2)});
    ModuleState lhs = apply_s2b(apply_s2b(apply_s2b(g3, 0), 1), 0);
    ModuleState rhs = apply_s2b(apply_s2b(apply_s2b(g3, 1), 0), 1);
    auto report = CheckReport::all_of("S2B", {inverse, compare("ybe", "S1S2S1", lhs, "S2S1S2", rhs)});
    report.details = {{"variables", "x,y,z = t1,t2,t3"}};
    return report;
  }
  ModuleState g2 = ModuleState::generic(2, true);
  ModuleState g3 = ModuleState::generic(3, true);
  auto s = [](const ModuleState& st, int i) { return apply_s3b(st, i); };
  auto v = [](const ModuleState& st, int i) { return apply_v3b(st, i); };
  std::vector<CheckReport> parts;
  parts.push_back(compare("ybe_s", "S1S2S1", s(s(s(g3, 0), 1), 0), "S2S1S2", s(s(s(g3, 1), 0), 1)));
  parts.push_back(compare("v_involutive", "VV", v(v(g2, 0), 0), "id", g2));
  parts.push_back(compare("ybe_v", "V1V2V1", v(v(v(g3, 0), 1), 0), "V2V1V2", v(v(v(g3, 1), 0), 1)));
  parts.push_back(compare("matched", "V2S1V2", v(s(v(g3, 1), 0), 1), "V1S2V1", v(s(v(g3, 0), 1), 0)));
  auto report = CheckReport::all_of("S3B_V3B", std::move(parts));
  report.details = {{"variables", "x,y,z = t1,t2,t3; p,q,r = q1,q2,q3"}};
  return report;
}

// ---- permutation representations ---------------------------------------

std::uint64_t max_states() {
  if (const char* env = std::getenv("BRAIDREP_MAX_STATES")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("BRAIDREP_MAX_STATES must be a positive integer");
  }
  return 1'000'000;
}

PermutationRep::PermutationRep(FiniteSwitch s, std::optional<FiniteSwitch> v, int n)
    : s_(std::move(s)), v_(std::move(v)), n_(n), states_(1) {
  if (n_ < 2) throw std::invalid_argument("braid actions need n >= 2");
  if (v_ && v_->size() != s_.size()) throw std::invalid_argument("virtual pair carriers differ");
  const std::uint64_t bound = max_states();
  for (int k = 0; k < n_; ++k) {
    states_ *= static_cast<std::uint64_t>(s_.size());
    if (states_ > bound)
      throw std::length_error("state space " + std::to_string(s_.size()) + "^" + std::to_string(n_) +
                              " exceeds the bound of " + std::to_string(bound) +
                              " states; use a smaller n or carrier, or raise BRAIDREP_MAX_STATES");
  }
}

std::vector<int> PermutationRep::decode(std::uint64_t state) const {
  std::vector<int> t(n_);
  for (int k = n_; k-- > 0;) {
    t[k] = static_cast<int>(state % s_.size());
    state /= s_.size();
  }
  return t;
}

std::uint64_t PermutationRep::encode(const std::vector<int>& t) const {
  std::uint64_t code = 0;
  for (int x : t) code = code * s_.size() + x;
  return code;
}

void PermutationRep::apply_letter(const BraidLetter& l, std::vector<int>& t) const {
  int i = l.index - 1;
  Pair r;
  if (l.kind == LetterKind::Rho) {
    if (!v_) throw std::invalid_argument("rho letters need a virtual pair");
    r = (*v_)(t[i], t[i + 1]);
  } else {
    r = l.exponent > 0 ? s_(t[i], t[i + 1]) : s_.inverse(t[i], t[i + 1]);
  }
  t[i] = r.first;
  t[i + 1] = r.second;
}

std::vector<int> PermutationRep::apply(const BraidWord& w, std::vector<int> t) const {
  if (w.strands() != n_ || static_cast<int>(t.size()) != n_) throw std::invalid_argument("strand count mismatch");
  for (const auto& l : w.letters()) apply_letter(l, t);
  return t;
}

std::vector<std::uint64_t> PermutationRep::action(const BraidWord& w) const {
  std::vector<std::uint64_t> out(states_);
  for (std::uint64_t st = 0; st < states_; ++st) out[st] = encode(apply(w, decode(st)));
  return out;
}

AuditReport PermutationRep::audit() const {
  auto show = [this](std::uint64_t st) {
    std::string s = "(";
    auto t = decode(st);
    for (int k = 0; k < n_; ++k) s += (k ? "," : "") + std::to_string(t[k]);
    return s + ")";
  };
  return audit_relators(
      v_ ? "permutation(virtual pair)" : "permutation(switch)", n_, v_.has_value(),
      [this](const BraidWord& w) { return action(w); },
      [&](const std::vector<std::uint64_t>& l, const std::vector<std::uint64_t>& r) -> std::string {
        for (std::uint64_t st = 0; st < l.size(); ++st)
          if (l[st] != r[st]) return "state " + show(st) + ": " + show(l[st]) + " vs " + show(r[st]);
        return {};
      });
}

}  // namespace braidrep
