#include "braidrep/quandle.hpp"

#include <cctype>
#include <stdexcept>

namespace braidrep {

// ---- terms -------------------------------------------------------------

QuandleTerm QuandleTerm::generator(const UniversePtr& universe, std::string_view name) {
  return generator(universe, universe->id(name));
}

QuandleTerm QuandleTerm::generator(const UniversePtr& universe, int gen) {
  if (gen < 0 || gen >= universe->generator_count()) throw std::out_of_range("generator id");
  return QuandleTerm(gen, GroupWord(universe));
}

QuandleTerm QuandleTerm::conjugate(const UniversePtr& universe, int base, const GroupWord& w) {
  const auto& g = universe->generators()[base];
  const auto& factor = universe->factors()[g.factor];
  GroupWord canon = w;
  if (!w.syllables().empty() && w.syllables().front().factor == g.factor) {
    const Syllable& head = w.syllables().front();
    GroupWord lead(universe);
    if (factor.kind == FactorKind::FreeAbelian) {
      // the whole abelian factor centralizes an abelian base
      for (std::size_t k = 0; k < head.data.size(); ++k)
        lead *= GroupWord::generator(universe, base - g.position + static_cast<int>(k), head.data[k]);
    } else {
      int letter = g.position + 1;
      int power = 0;
      for (int l : head.data) {
        if (std::abs(l) != letter) break;
        power += l > 0 ? 1 : -1;
      }
      lead = GroupWord::generator(universe, base, power);
    }
    canon = lead.inverse() * w;
  }
  return QuandleTerm(base, std::move(canon));
}

GroupWord QuandleTerm::element() const {
  return conj(GroupWord::generator(universe(), base_), conjugator_);
}

std::string QuandleTerm::str() const {
  std::string s = universe()->generators()[base_].name;
  for (const auto& l : conjugator_.letters()) {
    const std::string& g = universe()->generators()[l.gen].name;
    for (int k = 0; k < std::abs(l.exp); ++k) s += (l.exp > 0 ? " * " : " *~ ") + g;
  }
  return s;
}

QuandleTerm q_mul(const QuandleTerm& a, const QuandleTerm& b, bool inverse) {
  if (!(*a.universe() == *b.universe())) throw std::invalid_argument("terms from different universes");
  GroupWord e = b.element();
  return QuandleTerm::conjugate(a.universe(), a.base(), a.conjugator() * (inverse ? e.inverse() : e));
}

namespace {

class TermParser {
 public:
  TermParser(const UniversePtr& u, std::string_view text) : u_(u), text_(text) {}

  QuandleTerm parse() {
    QuandleTerm t = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return t;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  QuandleTerm expr() {
    QuandleTerm t = primary();
    for (;;) {
      skip();
      if (pos_ >= text_.size() || text_[pos_] != '*') return t;
      ++pos_;
      bool inv = pos_ < text_.size() && text_[pos_] == '~';
      if (inv) ++pos_;
      t = q_mul(t, primary(), inv);
    }
  }

  QuandleTerm primary() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of term", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      QuandleTerm t = expr();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return t;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) throw ParseError("expected generator", pos_);
    std::string name(text_.substr(start, pos_ - start));
    if (!u_->has(name)) throw ParseError("unknown generator '" + name + "'", start);
    return QuandleTerm::generator(u_, name);
  }

  const UniversePtr& u_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<GroupWord> elements_of(const std::vector<QuandleTerm>& images) {
  std::vector<GroupWord> out;
  out.reserve(images.size());
  for (const auto& t : images) out.push_back(t.element());
  return out;
}

}  // namespace

QuandleTerm QuandleTerm::parse(const UniversePtr& universe, std::string_view text) {
  return TermParser(universe, text).parse();
}

// ---- automorphisms -----------------------------------------------------

QuandleAutoMap::QuandleAutoMap(UniversePtr universe, std::vector<QuandleTerm> images)
    : universe_(universe), images_(std::move(images)), group_map_(universe, elements_of(images_)) {}

QuandleAutoMap QuandleAutoMap::identity(const UniversePtr& universe) {
  std::vector<QuandleTerm> im;
  for (int g = 0; g < universe->generator_count(); ++g) im.push_back(QuandleTerm::generator(universe, g));
  return QuandleAutoMap(universe, std::move(im));
}

QuandleAutoMap QuandleAutoMap::with_images(const UniversePtr& universe,
                                           const std::map<std::string, QuandleTerm>& images) {
  std::vector<QuandleTerm> im = identity(universe).images_;
  for (const auto& [name, t] : images) im[universe->id(name)] = t;
  return QuandleAutoMap(universe, std::move(im));
}

QuandleTerm QuandleAutoMap::apply(const QuandleTerm& t) const {
  const QuandleTerm& b = images_[t.base()];
  return QuandleTerm::conjugate(universe_, b.base(), b.conjugator() * group_map_.apply(t.conjugator()));
}

bool QuandleAutoMap::is_identity() const { return *this == identity(universe_); }

QuandleAutoMap q_compose(const QuandleAutoMap& e1, const QuandleAutoMap& e2) {
  std::vector<QuandleTerm> im;
  im.reserve(e1.images().size());
  for (const auto& t : e1.images()) im.push_back(e2.apply(t));
  return QuandleAutoMap(e1.universe(), std::move(im));
}

// ---- representations ---------------------------------------------------

std::optional<QuandleRepName> quandle_rep_from_string(std::string_view s) {
  if (s == "phi2q" || s == "Phi2Q") return QuandleRepName::Phi2Q;
  if (s == "fqn1" || s == "FreeQuandleN1") return QuandleRepName::FreeQuandleN1;
  return std::nullopt;
}

std::string to_string(QuandleRepName name) {
  return name == QuandleRepName::Phi2Q ? "Phi2Q" : "FreeQuandleN1";
}

QuandleRep::QuandleRep(QuandleRepName name, int n, UniversePtr universe,
                       std::vector<QuandleAutoMap> sigma, std::vector<QuandleAutoMap> sigma_inv,
                       std::vector<QuandleAutoMap> rho)
    : name_(name),
      n_(n),
      universe_(std::move(universe)),
      sigma_(std::move(sigma)),
      sigma_inv_(std::move(sigma_inv)),
      rho_(std::move(rho)) {}

const QuandleAutoMap& QuandleRep::image(const BraidLetter& l) const {
  if (l.index < 1 || l.index > n_ - 1) throw std::out_of_range("generator index out of range");
  if (l.kind == LetterKind::Rho) return rho_[l.index - 1];
  return l.exponent > 0 ? sigma_[l.index - 1] : sigma_inv_[l.index - 1];
}

QuandleAutoMap QuandleRep::evaluate(const BraidWord& w) const {
  if (w.strands() != n_) throw std::invalid_argument("word strand count differs from representation");
  QuandleAutoMap acc = QuandleAutoMap::identity(universe_);
  for (const auto& l : w.letters()) acc = q_compose(acc, image(l));
  return acc;
}

bool QuandleRep::verify_inverse_witnesses() const {
  for (int i = 0; i < n_ - 1; ++i) {
    if (!q_compose(sigma_[i], sigma_inv_[i]).is_identity()) return false;
    if (!q_compose(sigma_inv_[i], sigma_[i]).is_identity()) return false;
    if (!q_compose(rho_[i], rho_[i]).is_identity()) return false;
  }
  return true;
}

AuditReport QuandleRep::audit() const {
  return audit_relators(
      to_string(name_), n_, true, [this](const BraidWord& w) { return evaluate(w); },
      [this](const QuandleAutoMap& a, const QuandleAutoMap& b) -> std::string {
        for (int g = 0; g < universe_->generator_count(); ++g)
          if (!(a.image(g) == b.image(g)))
            return universe_->generators()[g].name + ": " + a.image(g).str() + " vs " +
                   b.image(g).str();
        return {};
      });
}

namespace {

QuandleRep make_quandle_rep(QuandleRepName name, int n) {
  if (n < 2) throw std::invalid_argument("representations need n >= 2");
  const std::string ns = std::to_string(n);
  const bool phi2q = name == QuandleRepName::Phi2Q;
  auto u = GroupUniverse::parse(phi2q ? "F(x," + ns + ") * A(y," + ns + ")" : "F(x," + ns + "; y)");
  auto gen = [&](const std::string& s) { return QuandleTerm::generator(u, s); };
  auto x = [&](int k) { return gen("x" + std::to_string(k)); };
  auto yname = [&](int k) { return phi2q ? "y" + std::to_string(k) : std::string("y"); };
  std::vector<QuandleAutoMap> s, si, r;
  for (int i = 1; i < n; ++i) {
    const std::string xi = "x" + std::to_string(i), xj = "x" + std::to_string(i + 1);
    std::map<std::string, QuandleTerm> swaps;
    if (phi2q) {
      swaps.insert_or_assign(yname(i), gen(yname(i + 1)));
      swaps.insert_or_assign(yname(i + 1), gen(yname(i)));
    }
    auto sigma = swaps;
    sigma.insert_or_assign(xi, q_mul(x(i + 1), x(i)));
    sigma.insert_or_assign(xj, x(i));
    s.push_back(QuandleAutoMap::with_images(u, sigma));

    auto sigma_inv = swaps;
    sigma_inv.insert_or_assign(xi, x(i + 1));
    sigma_inv.insert_or_assign(xj, q_mul(x(i), x(i + 1), true));
    si.push_back(QuandleAutoMap::with_images(u, sigma_inv));

    auto rho = swaps;
    rho.insert_or_assign(xi, q_mul(x(i + 1), gen(yname(i)), true));
    rho.insert_or_assign(xj, q_mul(x(i), gen(yname(i + 1))));
    r.push_back(QuandleAutoMap::with_images(u, rho));
  }
  return QuandleRep(name, n, u, std::move(s), std::move(si), std::move(r));
}

}  // namespace

QuandleRep rep_phi2Q(int n) { return make_quandle_rep(QuandleRepName::Phi2Q, n); }
QuandleRep rep_fq_n_plus_1(int n) { return make_quandle_rep(QuandleRepName::FreeQuandleN1, n); }

// ---- finite tables -----------------------------------------------------

CheckReport check_quandle_axioms(const OperationTable& t) {
  const int n = t.size();
  CheckReport idem{.check = "axiom 1 (idempotence)"};
  for (int a = 0; a < n && idem.pass; ++a)
    if (t(a, a) != a) {
      idem.pass = false;
      idem.counterexample = {{"a", a}, {"a*a", t(a, a)}};
    }
  CheckReport bij{.check = "axiom 2 (right translations bijective)"};
  for (int b = 0; b < n && bij.pass; ++b) {
    std::vector<int> seen(n, -1);
    for (int a = 0; a < n; ++a) {
      int c = t(a, b);
      if (seen[c] >= 0) {
        bij.pass = false;
        bij.counterexample = {{"b", b}, {"a1", seen[c]}, {"a2", a}, {"value", c}};
        break;
      }
      seen[c] = a;
    }
  }
  CheckReport dist{.check = "axiom 3 (right self-distributivity)"};
  for (int a = 0; a < n && dist.pass; ++a)
    for (int b = 0; b < n && dist.pass; ++b)
      for (int c = 0; c < n && dist.pass; ++c)
        if (t(t(a, b), c) != t(t(a, c), t(b, c))) {
          dist.pass = false;
          dist.counterexample = {{"a", a}, {"b", b}, {"c", c}};
        }
  return CheckReport::all_of("quandle_axioms", {idem, bij, dist});
}

}  // namespace braidrep
