#include "braidrep/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace braidrep {

std::string VarId::name() const {
  switch (family) {
    case VarFamily::T:
      return "t" + std::to_string(index);
    case VarFamily::Q:
      return "q" + std::to_string(index);
    case VarFamily::SingleT:
      return "t";
  }
  return "?";
}

UniverseMismatch::UniverseMismatch(int a, int b)
    : std::invalid_argument("incompatible variable universes: n=" + std::to_string(a) +
                            " vs n=" + std::to_string(b)) {}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

// ---- Monomial ------------------------------------------------------------

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (const auto& [v, e] : entries) {
    if (!entries_.empty() && entries_.back().first == v) {
      entries_.back().second += e;
    } else {
      entries_.emplace_back(v, e);
    }
  }
  std::erase_if(entries_, [](const Entry& x) { return x.second == 0; });
}

Monomial Monomial::of(VarId v, int exp) { return Monomial({{v, exp}}); }

int Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : entries_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  // merge of two sorted lists
  Monomial r;
  auto i = entries_.begin();
  auto j = other.entries_.begin();
  while (i != entries_.end() || j != other.entries_.end()) {
    if (j == other.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      r.entries_.push_back(*i++);
    } else if (i == entries_.end() || j->first < i->first) {
      r.entries_.push_back(*j++);
    } else {
      int e = i->second + j->second;
      if (e != 0) r.entries_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& [v, e] : r.entries_) e = -e;
  return r;
}

// ---- LaurentPoly -----------------------------------------------------------

LaurentPoly::LaurentPoly(int universe, const Integer& c) : universe_(universe) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::monomial(int universe, const Monomial& m, const Integer& c) {
  LaurentPoly p(universe);
  for (const auto& [v, e] : m.entries()) p.check_var(v);
  p.add_term(m, c);
  return p;
}

LaurentPoly LaurentPoly::var(int universe, VarId v, int exp) {
  return monomial(universe, Monomial::of(v, exp));
}

void LaurentPoly::check_universe(const LaurentPoly& o) const {
  if (universe_ != o.universe_) throw UniverseMismatch(universe_, o.universe_);
}

void LaurentPoly::check_var(VarId v) const {
  if (v.family == VarFamily::SingleT) return;
  if (v.index < 1 || v.index > universe_)
    throw std::out_of_range("variable " + v.name() + " outside universe n=" +
                            std::to_string(universe_));
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_constant() &&
         terms_.begin()->second == 1;
}

bool LaurentPoly::is_unit() const {
  if (terms_.size() != 1) return false;
  const Integer& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("not a unit: " + format());
  const auto& [m, c] = *terms_.begin();
  return monomial(universe_, m.inverse(), c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_universe(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_universe(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_universe(b);
  LaurentPoly r(a.universe_);
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  LaurentPoly base = *this;
  if (e < 0) {
    base = unit_inverse();
    e = -e;
  }
  LaurentPoly r(universe_, 1);
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return r;
}

LaurentPoly LaurentPoly::specialize(const std::map<VarId, LaurentPoly>& images) const {
  if (images.empty()) return *this;
  for (const auto& [v, img] : images) check_universe(img);
  LaurentPoly r(universe_);
  std::map<std::pair<VarId, int>, LaurentPoly> powers;
  for (const auto& [m, c] : terms_) {
    LaurentPoly term(universe_, c);
    std::vector<Monomial::Entry> kept;
    for (const auto& [v, e] : m.entries()) {
      auto it = images.find(v);
      if (it == images.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      if (e < 0 && !it->second.is_unit())
        throw std::domain_error("cannot substitute non-unit " + it->second.format() +
                                " for inverted variable " + v.name());
      auto key = std::make_pair(v, e);
      auto pit = powers.find(key);
      if (pit == powers.end()) pit = powers.emplace(key, it->second.pow(e)).first;
      term *= pit->second;
    }
    term *= monomial(universe_, Monomial(std::move(kept)));
    r += term;
  }
  return r;
}

LaurentPoly LaurentPoly::permute(const std::vector<int>& perm) const {
  LaurentPoly r(universe_);
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Entry> entries;
    entries.reserve(m.entries().size());
    for (auto [v, e] : m.entries()) {
      if (v.family != VarFamily::SingleT && v.index <= static_cast<int>(perm.size()))
        v.index = perm[v.index - 1];
      entries.emplace_back(v, e);
    }
    r.add_term(Monomial(std::move(entries)), c);
  }
  return r;
}

// ---- text form -------------------------------------------------------------

namespace {

std::string format_monomial(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m.entries()) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

class PolyParser {
 public:
  PolyParser(std::string_view text, int universe) : text_(text), universe_(universe) {}

  LaurentPoly parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    LaurentPoly r = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  LaurentPoly expr() {
    LaurentPoly r = term();
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly r = unary();
    while (accept('*')) r *= unary();
    return r;
  }

  LaurentPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (!at_digit()) throw ParseError("expected integer exponent", pos_);
    long e = 0;
    while (at_digit()) {
      e = e * 10 + (text_[pos_++] - '0');
      if (e > 1'000'000) throw ParseError("exponent too large", start);
    }
    if (neg) e = -e;
    if (e < 0 && !base.is_unit()) throw ParseError("negative power of a non-unit", start);
    return base.pow(static_cast<int>(e));
  }

  LaurentPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    std::size_t start = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly r = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (at_digit()) ++pos_;
      return LaurentPoly(universe_, Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == 't' || c == 'q') {
      ++pos_;
      if (!at_digit()) {
        if (c == 'q') throw ParseError("q requires an index", pos_);
        return LaurentPoly::var(universe_, VarId::single_t());
      }
      int idx = 0;
      while (at_digit()) {
        idx = idx * 10 + (text_[pos_++] - '0');
        if (idx > 100000) throw ParseError("variable index too large", start);
      }
      VarId v = c == 't' ? VarId::t(idx) : VarId::q(idx);
      if (idx < 1 || idx > universe_)
        throw ParseError("variable " + v.name() + " outside universe n=" +
                             std::to_string(universe_),
                         start);
      return LaurentPoly::var(universe_, v);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  int universe_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string LaurentPoly::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c < 0;
    Integer mag = neg ? Integer(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = format_monomial(m);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text, int universe) {
  return PolyParser(text, universe).parse();
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [v, e] : m.entries()) exps[v.name()] = e;
    nlohmann::json coeff;
    if (c.fits_slong_p()) {
      coeff = c.get_si();
    } else {
      coeff = c.get_str();
    }
    terms.push_back({{"coeff", coeff}, {"exps", exps}});
  }
  return {{"terms", terms}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j, int universe) {
  LaurentPoly r(universe);
  for (const auto& term : j.at("terms")) {
    const auto& jc = term.at("coeff");
    Integer c = jc.is_string() ? Integer(jc.get<std::string>()) : Integer(jc.get<long>());
    LaurentPoly t(universe, c);
    for (const auto& [name, e] : term.at("exps").items())
      t *= LaurentPoly::parse(name, universe).pow(e.get<int>());
    r += t;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.format(); }

}  // namespace braidrep
