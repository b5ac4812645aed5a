#include "braidrep/group_words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace braidrep {

// ---- universe ----------------------------------------------------------

GroupUniverse::GroupUniverse(std::vector<FactorSpec> factors) : factors_(std::move(factors)) {
  for (int f = 0; f < static_cast<int>(factors_.size()); ++f) {
    if (factors_[f].generators.empty()) throw std::invalid_argument("empty factor");
    for (int p = 0; p < static_cast<int>(factors_[f].generators.size()); ++p) {
      const auto& name = factors_[f].generators[p];
      if (!by_name_.emplace(name, static_cast<int>(gens_.size())).second)
        throw std::invalid_argument("generator " + name + " declared twice");
      gens_.push_back({name, f, p});
    }
  }
}

UniversePtr GroupUniverse::make(std::vector<FactorSpec> factors) {
  return UniversePtr(new GroupUniverse(std::move(factors)));
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string_view::npos ? p : p - start)));
    if (p == std::string_view::npos) return out;
    start = p + 1;
  }
}

bool is_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected integer, got '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("expected integer, got '" + s + "'");
  return v;
}

}  // namespace

UniversePtr GroupUniverse::parse(std::string_view header) {
  std::vector<FactorSpec> factors;
  for (const auto& part : split(header, '*')) {
    if (part.size() < 4 || (part[0] != 'F' && part[0] != 'A') || part[1] != '(' ||
        part.back() != ')')
      throw std::invalid_argument("bad factor '" + part + "', expected F(...) or A(...)");
    FactorSpec factor{part[0] == 'F' ? FactorKind::Free : FactorKind::FreeAbelian, {}};
    for (const auto& fam : split(std::string_view(part).substr(2, part.size() - 3), ';')) {
      auto pieces = split(fam, ',');
      if (!is_name(pieces[0])) throw std::invalid_argument("bad generator name '" + pieces[0] + "'");
      if (pieces.size() == 1) {
        factor.generators.push_back(pieces[0]);
      } else if (pieces.size() == 2) {
        int lo = 1, hi = 0;
        auto dots = pieces[1].find("..");
        if (dots == std::string::npos) {
          hi = to_int(pieces[1]);
        } else {
          lo = to_int(trim(pieces[1].substr(0, dots)));
          hi = to_int(trim(pieces[1].substr(dots + 2)));
        }
        if (hi < lo || lo < 0) throw std::invalid_argument("bad range in '" + fam + "'");
        for (int k = lo; k <= hi; ++k) factor.generators.push_back(pieces[0] + std::to_string(k));
      } else {
        throw std::invalid_argument("bad generator family '" + fam + "'");
      }
    }
    factors.push_back(std::move(factor));
  }
  return make(std::move(factors));
}

int GroupUniverse::id(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end())
    throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return it->second;
}

bool GroupUniverse::has(std::string_view name) const { return by_name_.contains(name); }

std::string GroupUniverse::header() const {
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += " * ";
    s += f.kind == FactorKind::Free ? "F(" : "A(";
    for (std::size_t k = 0; k < f.generators.size(); ++k) {
      if (k) s += "; ";
      s += f.generators[k];
    }
    s += ")";
  }
  return s;
}

// ---- words -------------------------------------------------------------

GroupWord::GroupWord(UniversePtr universe) : universe_(std::move(universe)) {
  if (!universe_) throw std::invalid_argument("null universe");
}

GroupWord GroupWord::generator(UniversePtr universe, int gen, int exp) {
  GroupWord w(std::move(universe));
  if (gen < 0 || gen >= w.universe_->generator_count())
    throw std::out_of_range("generator id out of range");
  if (exp == 0) return w;
  const auto& g = w.universe_->generators()[gen];
  Syllable s{g.factor, {}};
  if (w.universe_->factors()[g.factor].kind == FactorKind::Free) {
    s.data.assign(std::abs(exp), exp > 0 ? g.position + 1 : -(g.position + 1));
  } else {
    s.data.assign(w.universe_->rank(g.factor), 0);
    s.data[g.position] = exp;
  }
  w.append(std::move(s));
  return w;
}

GroupWord GroupWord::generator(UniversePtr universe, std::string_view name, int exp) {
  int id = universe->id(name);
  return generator(std::move(universe), id, exp);
}

GroupWord GroupWord::normalize(UniversePtr universe, const std::vector<Letter>& letters) {
  GroupWord w(universe);
  for (const auto& l : letters) w *= generator(universe, l.gen, l.exp);
  return w;
}

GroupWord gw_normalize(UniversePtr universe, const std::vector<Letter>& letters) {
  return GroupWord::normalize(std::move(universe), letters);
}

GroupWord GroupWord::parse(UniversePtr universe, std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '^')
      ++pos;
    std::string name(text.substr(start, pos - start));
    if (name == "1") continue;  // the identity
    if (!universe->has(name)) throw ParseError("unknown generator '" + name + "'", start);
    int exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      std::size_t es = ++pos;
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      try {
        exp = to_int(std::string(text.substr(es, pos - es)));
      } catch (const std::invalid_argument&) {
        throw ParseError("bad exponent", es);
      }
    }
    letters.push_back({universe->id(name), exp});
  }
  return normalize(std::move(universe), letters);
}

void GroupWord::append(Syllable s) {
  const bool is_free = universe_->factors()[s.factor].kind == FactorKind::Free;
  auto trivial = [&](const Syllable& x) {
    return is_free ? x.data.empty()
                   : std::all_of(x.data.begin(), x.data.end(), [](int e) { return e == 0; });
  };
  if (!syllables_.empty() && syllables_.back().factor == s.factor) {
    Syllable& last = syllables_.back();
    if (is_free) {
      std::size_t k = 0;
      while (k < s.data.size() && !last.data.empty() && last.data.back() == -s.data[k]) {
        last.data.pop_back();
        ++k;
      }
      last.data.insert(last.data.end(), s.data.begin() + k, s.data.end());
    } else {
      for (std::size_t k = 0; k < s.data.size(); ++k) last.data[k] += s.data[k];
    }
    if (trivial(last)) syllables_.pop_back();
    return;
  }
  if (!trivial(s)) syllables_.push_back(std::move(s));
}

std::vector<Letter> GroupWord::letters() const {
  std::vector<Letter> out;
  for (const auto& s : syllables_) {
    const auto& f = universe_->factors()[s.factor];
    int base = universe_->id(f.generators[0]);
    if (f.kind == FactorKind::Free) {
      for (int l : s.data) out.push_back({base + std::abs(l) - 1, l > 0 ? 1 : -1});
    } else {
      for (std::size_t k = 0; k < s.data.size(); ++k)
        if (s.data[k] != 0) out.push_back({base + static_cast<int>(k), s.data[k]});
    }
  }
  return out;
}

std::size_t GroupWord::length() const {
  std::size_t len = 0;
  for (const auto& l : letters()) len += std::abs(l.exp);
  return len;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  if (!(universe_ == o.universe_ || *universe_ == *o.universe_))
    throw std::invalid_argument("group words from different universes");
  GroupWord r = *this;
  // once the boundary stops cancelling, the rest is already in normal form
  std::size_t k = 0;
  while (k < o.syllables_.size()) {
    std::size_t before = r.syllables_.size();
    bool merges = !r.syllables_.empty() && r.syllables_.back().factor == o.syllables_[k].factor;
    r.append(o.syllables_[k]);
    ++k;
    if (!merges || r.syllables_.size() == before) break;
  }
  r.syllables_.insert(r.syllables_.end(), o.syllables_.begin() + k, o.syllables_.end());
  return r;
}

GroupWord GroupWord::inverse() const {
  GroupWord r(universe_);
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    Syllable s = *it;
    if (universe_->factors()[s.factor].kind == FactorKind::Free) {
      std::reverse(s.data.begin(), s.data.end());
    }
    for (int& v : s.data) v = -v;
    r.syllables_.push_back(std::move(s));
  }
  return r;
}

GroupWord GroupWord::pow(int k) const {
  GroupWord base = k < 0 ? inverse() : *this;
  GroupWord r(universe_);
  for (int i = 0; i < std::abs(k); ++i) r *= base;
  return r;
}

std::string GroupWord::str() const {
  auto ls = letters();
  if (ls.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < ls.size(); ++k) {
    if (k) s += ' ';
    // merge consecutive equal free letters into powers for readability
    std::size_t j = k;
    int e = ls[k].exp;
    const auto& g = universe_->generators()[ls[k].gen];
    if (universe_->factors()[g.factor].kind == FactorKind::Free) {
      while (j + 1 < ls.size() && ls[j + 1] == ls[k]) {
        ++j;
        e += ls[k].exp;
      }
    }
    s += g.name;
    if (e != 1) s += "^" + std::to_string(e);
    k = j;
  }
  return s;
}

bool GroupWord::operator==(const GroupWord& o) const {
  return (universe_ == o.universe_ || *universe_ == *o.universe_) && syllables_ == o.syllables_;
}

GroupWord conj(const GroupWord& a, const GroupWord& b) { return b.inverse() * a * b; }
GroupWord conj_inv(const GroupWord& a, const GroupWord& b) { return b.inverse() * a.inverse() * b; }
GroupWord commutator(const GroupWord& a, const GroupWord& b) {
  return a.inverse() * b.inverse() * a * b;
}

// ---- generator maps ----------------------------------------------------

GeneratorMap::GeneratorMap(UniversePtr universe, std::vector<GroupWord> images, Unchecked)
    : universe_(std::move(universe)), images_(std::move(images)) {}

GeneratorMap::GeneratorMap(UniversePtr universe, std::vector<GroupWord> images)
    : GeneratorMap(std::move(universe), std::move(images), Unchecked{}) {
  if (static_cast<int>(images_.size()) != universe_->generator_count())
    throw std::invalid_argument("generator map needs one image per generator");
  for (const auto& im : images_)
    if (!(*im.universe() == *universe_)) throw std::invalid_argument("image from another universe");
  const auto& gens = universe_->generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    if (universe_->factors()[gens[a].factor].kind != FactorKind::FreeAbelian) continue;
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (gens[b].factor != gens[a].factor) continue;
      if (!(images_[a] * images_[b] == images_[b] * images_[a]))
        throw std::invalid_argument("images of commuting generators " + gens[a].name + ", " +
                                    gens[b].name + " do not commute");
    }
  }
}

GeneratorMap GeneratorMap::identity(UniversePtr universe) {
  std::vector<GroupWord> im;
  for (int g = 0; g < universe->generator_count(); ++g)
    im.push_back(GroupWord::generator(universe, g));
  return GeneratorMap(universe, std::move(im), Unchecked{});
}

GeneratorMap GeneratorMap::with_images(UniversePtr universe,
                                       const std::map<std::string, GroupWord>& images) {
  std::vector<GroupWord> im = identity(universe).images_;
  for (const auto& [name, w] : images) im[universe->id(name)] = w;
  return GeneratorMap(universe, std::move(im));
}

GroupWord GeneratorMap::apply(const GroupWord& w) const {
  if (!(*w.universe() == *universe_)) throw std::invalid_argument("word from another universe");
  GroupWord r(universe_);
  for (const auto& l : w.letters()) r *= images_[l.gen].pow(l.exp);
  return r;
}

bool GeneratorMap::is_identity() const { return *this == identity(universe_); }

GroupWord gw_apply(const GeneratorMap& e, const GroupWord& w) { return e.apply(w); }

GeneratorMap gw_compose(const GeneratorMap& e1, const GeneratorMap& e2) {
  if (!(*e1.universe() == *e2.universe()))
    throw std::invalid_argument("composing maps on different universes");
  std::vector<GroupWord> im;
  im.reserve(e1.images().size());
  for (const auto& w : e1.images()) im.push_back(e2.apply(w));
  return GeneratorMap(e1.universe(), std::move(im), GeneratorMap::Unchecked{});
}

// ---- Fox calculus ------------------------------------------------------

namespace {

// factor index and rank of the single free factor a word lives in
std::pair<int, int> free_factor_of(const GroupWord& w) {
  const auto& u = *w.universe();
  int factor = -1;
  for (const auto& s : w.syllables()) {
    if (u.factors()[s.factor].kind != FactorKind::Free)
      throw std::invalid_argument("Fox calculus needs a word in a free factor");
    if (factor >= 0 && factor != s.factor)
      throw std::invalid_argument("Fox calculus needs a word in a single free factor");
    factor = s.factor;
  }
  if (factor < 0) {
    for (int f = 0; f < static_cast<int>(u.factors().size()); ++f)
      if (u.factors()[f].kind == FactorKind::Free) return {f, u.rank(f)};
    throw std::invalid_argument("universe has no free factor");
  }
  return {factor, u.rank(factor)};
}

}  // namespace

LaurentPoly abelianize(const GroupWord& w) {
  auto [factor, n] = free_factor_of(w);
  std::vector<Monomial::Entry> exps;
  for (const auto& s : w.syllables())
    for (int l : s.data) exps.emplace_back(VarId::t(std::abs(l)), l > 0 ? 1 : -1);
  return LaurentPoly::monomial(n, Monomial(std::move(exps)));
}

LaurentPoly fox_derivative_ab(const GroupWord& w, int i) {
  auto [factor, n] = free_factor_of(w);
  if (i < 1 || i > n) throw std::out_of_range("Fox derivative index out of range");
  LaurentPoly result(n);
  Monomial prefix;  // abelianized prefix
  for (const auto& s : w.syllables()) {
    for (int l : s.data) {
      int k = std::abs(l);
      if (l > 0) {
        if (k == i) result += LaurentPoly::monomial(n, prefix);
        prefix = prefix * Monomial::of(VarId::t(k));
      } else {
        prefix = prefix * Monomial::of(VarId::t(k), -1);
        if (k == i) result -= LaurentPoly::monomial(n, prefix);
      }
    }
  }
  return result;
}

// ---- built-in representations -------------------------------------------

std::optional<GroupRepName> group_rep_from_string(std::string_view s) {
  if (s == "ArtinB" || s == "artinb") return GroupRepName::ArtinB;
  if (s == "ArtinVB" || s == "artin" || s == "artinvb") return GroupRepName::ArtinVB;
  if (s == "PhiM" || s == "phim") return GroupRepName::PhiM;
  if (s == "PhiMTilde" || s == "phimtilde") return GroupRepName::PhiMTilde;
  return std::nullopt;
}

std::string to_string(GroupRepName name) {
  switch (name) {
    case GroupRepName::ArtinB: return "ArtinB";
    case GroupRepName::ArtinVB: return "ArtinVB";
    case GroupRepName::PhiM: return "PhiM";
    case GroupRepName::PhiMTilde: return "PhiMTilde";
  }
  return "?";
}

GroupRep::GroupRep(GroupRepName name, int n, UniversePtr universe,
                   std::vector<GeneratorMap> sigma, std::vector<GeneratorMap> sigma_inv,
                   std::vector<GeneratorMap> rho)
    : name_(name),
      n_(n),
      universe_(std::move(universe)),
      sigma_(std::move(sigma)),
      sigma_inv_(std::move(sigma_inv)),
      rho_(std::move(rho)) {}

const GeneratorMap& GroupRep::image(const BraidLetter& l) const {
  if (l.index < 1 || l.index > n_ - 1) throw std::out_of_range("generator index out of range");
  if (l.kind == LetterKind::Rho) {
    if (rho_.empty()) throw std::invalid_argument(to_string(name_) + " has no image for rho");
    return rho_[l.index - 1];
  }
  return l.exponent > 0 ? sigma_[l.index - 1] : sigma_inv_[l.index - 1];
}

GeneratorMap GroupRep::evaluate(const BraidWord& w) const {
  if (w.strands() != n_) throw std::invalid_argument("word strand count differs from representation");
  GeneratorMap acc = GeneratorMap::identity(universe_);
  for (const auto& l : w.letters()) acc = gw_compose(acc, image(l));
  return acc;
}

bool GroupRep::verify_inverse_witnesses() const {
  for (int i = 0; i < n_ - 1; ++i) {
    if (!gw_compose(sigma_[i], sigma_inv_[i]).is_identity()) return false;
    if (!gw_compose(sigma_inv_[i], sigma_[i]).is_identity()) return false;
  }
  for (const auto& r : rho_)
    if (!gw_compose(r, r).is_identity()) return false;
  return true;
}

AuditReport GroupRep::audit() const {
  return audit_relators(
      to_string(name_), n_, is_virtual(), [this](const BraidWord& w) { return evaluate(w); },
      [this](const GeneratorMap& a, const GeneratorMap& b) -> std::string {
        for (int g = 0; g < universe_->generator_count(); ++g)
          if (!(a.image(g) == b.image(g)))
            return universe_->generators()[g].name + ": " + a.image(g).str() + " vs " +
                   b.image(g).str();
        return {};
      });
}

namespace {

std::string nm(const char* family, int k) { return family + std::to_string(k); }

GroupRep make_artin(GroupRepName name, int n) {
  auto u = GroupUniverse::parse("F(x," + std::to_string(n) + ")");
  auto x = [&](int k) { return GroupWord::generator(u, nm("x", k)); };
  std::vector<GeneratorMap> s, si, r;
  for (int i = 1; i < n; ++i) {
    s.push_back(GeneratorMap::with_images(
        u, {{nm("x", i), x(i) * x(i + 1) * x(i).inverse()}, {nm("x", i + 1), x(i)}}));
    si.push_back(GeneratorMap::with_images(
        u, {{nm("x", i), x(i + 1)}, {nm("x", i + 1), conj(x(i), x(i + 1))}}));
    if (name == GroupRepName::ArtinVB)
      r.push_back(GeneratorMap::with_images(u, {{nm("x", i), x(i + 1)}, {nm("x", i + 1), x(i)}}));
  }
  return GroupRep(name, n, u, std::move(s), std::move(si), std::move(r));
}

GroupRep make_phi_m(int n) {
  const std::string ns = std::to_string(n);
  auto u = GroupUniverse::parse("F(x," + ns + ") * A(u," + ns + "; v,0.." + ns + ")");
  auto g = [&](const char* f, int k) { return GroupWord::generator(u, nm(f, k)); };
  std::vector<GeneratorMap> s, si, r;
  for (int i = 1; i < n; ++i) {
    auto xi = g("x", i), xj = g("x", i + 1);
    auto ui = g("u", i), uj = g("u", i + 1), vi = g("v", i), vj = g("v", i + 1), v0 = g("v", 0);
    std::map<std::string, GroupWord> swaps{
        {nm("u", i), uj}, {nm("u", i + 1), ui}, {nm("v", i), vj}, {nm("v", i + 1), vi}};

    auto sigma = swaps;
    sigma.insert_or_assign(nm("x", i), xi * conj(xj, ui) * conj_inv(xi, v0 * uj));
    sigma.insert_or_assign(nm("x", i + 1), conj(xi, v0));
    s.push_back(GeneratorMap::with_images(u, sigma));

    auto sigma_inv = swaps;
    sigma_inv.insert_or_assign(nm("x", i), conj(xj, v0.inverse()));
    sigma_inv.insert_or_assign(nm("x", i + 1), uj * v0 * xj.inverse() * v0.inverse() * xi *
                                                   conj(xj, ui) * uj.inverse());
    si.push_back(GeneratorMap::with_images(u, sigma_inv));

    auto rho = swaps;
    rho.insert_or_assign(nm("x", i), conj(xj, vi.inverse()));
    rho.insert_or_assign(nm("x", i + 1), conj(xi, vj));
    r.push_back(GeneratorMap::with_images(u, rho));
  }
  return GroupRep(GroupRepName::PhiM, n, u, std::move(s), std::move(si), std::move(r));
}

GroupRep make_phi_m_tilde(int n) {
  const std::string ns = std::to_string(n);
  auto u = GroupUniverse::parse("F(x," + ns + ") * A(y," + ns + ")");
  auto g = [&](const char* f, int k) { return GroupWord::generator(u, nm(f, k)); };
  std::vector<GeneratorMap> s, si, r;
  for (int i = 1; i < n; ++i) {
    auto xi = g("x", i), xj = g("x", i + 1), yi = g("y", i), yj = g("y", i + 1);
    std::map<std::string, GroupWord> swaps{{nm("y", i), yj}, {nm("y", i + 1), yi}};

    auto sigma = swaps;
    sigma.insert_or_assign(nm("x", i), xi * xj * xi.inverse());
    sigma.insert_or_assign(nm("x", i + 1), xi);
    s.push_back(GeneratorMap::with_images(u, sigma));

    auto sigma_inv = swaps;
    sigma_inv.insert_or_assign(nm("x", i), xj);
    sigma_inv.insert_or_assign(nm("x", i + 1), conj(xi, xj));
    si.push_back(GeneratorMap::with_images(u, sigma_inv));

    auto rho = swaps;
    rho.insert_or_assign(nm("x", i), yi * xj * yi.inverse());
    rho.insert_or_assign(nm("x", i + 1), conj(xi, yj));
    r.push_back(GeneratorMap::with_images(u, rho));
  }
  return GroupRep(GroupRepName::PhiMTilde, n, u, std::move(s), std::move(si), std::move(r));
}

}  // namespace

GroupRep builtin_group_rep(GroupRepName name, int n) {
  if (n < 2) throw std::invalid_argument("representations need n >= 2");
  switch (name) {
    case GroupRepName::ArtinB:
    case GroupRepName::ArtinVB:
      return make_artin(name, n);
    case GroupRepName::PhiM:
      return make_phi_m(n);
    case GroupRepName::PhiMTilde:
      return make_phi_m_tilde(n);
  }
  throw std::invalid_argument("unknown representation");
}

}  // namespace braidrep
