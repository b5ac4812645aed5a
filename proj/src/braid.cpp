#include "braidrep/braid.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "braidrep/laurent.hpp"

namespace braidrep {

BraidLetter BraidLetter::inverse() const {
  if (kind == LetterKind::Rho) return *this;
  return sigma(index, -exponent);
}

std::string BraidLetter::str() const {
  std::string s = (kind == LetterKind::Sigma ? "s" : "r") + std::to_string(index);
  if (exponent != 1) s += "^" + std::to_string(exponent);
  return s;
}

// ---- Permutation -------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  for (int k = 0; k < n; ++k) im[k] = k + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p = identity(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

bool Permutation::is_identity() const {
  for (int k = 0; k < size(); ++k)
    if (images_[k] != k + 1) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> im(images_.size());
  for (int k = 0; k < size(); ++k) im[k] = next(images_[k]);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int k = 0; k < size(); ++k) im[images_[k] - 1] = k + 1;
  return Permutation(std::move(im));
}

// ---- BraidWord ---------------------------------------------------------

BraidWord::BraidWord(int n, std::vector<BraidLetter> letters)
    : n_(n), letters_(std::move(letters)) {
  if (n_ < 2) throw std::invalid_argument("braid words need n >= 2 strands");
  for (auto& l : letters_) {
    if (l.index < 1 || l.index > n_ - 1)
      throw std::out_of_range("generator index " + std::to_string(l.index) +
                              " invalid for n=" + std::to_string(n_));
    if (l.exponent != 1 && l.exponent != -1)
      throw std::invalid_argument("letter exponent must be +-1");
    if (l.kind == LetterKind::Rho) l.exponent = 1;
  }
}

BraidWord BraidWord::parse(std::string_view text, int n) {
  std::vector<BraidLetter> letters;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](bool allow_sign) {
    std::size_t start = pos;
    bool neg = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected integer", pos);
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos++] - '0');
      if (v > 100000) throw ParseError("integer too large", start);
    }
    return static_cast<int>(neg ? -v : v);
  };
  skip();
  while (pos < text.size()) {
    std::size_t start = pos;
    char c = text[pos];
    if (c == 'e' && (pos + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;  // the empty word
      skip();
      continue;
    }
    if (c != 's' && c != 'r') throw ParseError("expected 's' or 'r'", pos);
    ++pos;
    int idx = read_int(false);
    if (idx < 1 || idx > n - 1) throw ParseError("generator index out of range", start);
    int e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = read_int(true);
    }
    if (c == 'r') {
      if (e % 2 != 0) letters.push_back(BraidLetter::rho(idx));
    } else {
      for (int k = 0; k < std::abs(e); ++k) letters.push_back(BraidLetter::sigma(idx, e > 0 ? 1 : -1));
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected whitespace between letters", pos);
    skip();
  }
  return BraidWord(n, std::move(letters));
}

bool BraidWord::is_classical() const {
  for (const auto& l : letters_)
    if (l.kind == LetterKind::Rho) return false;
  return true;
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
  return BraidWord(n_, std::move(inv));
}

BraidWord BraidWord::reduced() const {
  std::vector<BraidLetter> out;
  for (const auto& l : letters_) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(n_, std::move(out));
}

BraidWord reduce(const BraidWord& w) { return w.reduced(); }

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (o.n_ != n_)
    throw std::invalid_argument("cannot multiply braid words on " + std::to_string(n_) +
                                " and " + std::to_string(o.n_) + " strands");
  std::vector<BraidLetter> all = letters_;
  all.insert(all.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(n_, std::move(all));
}

BraidWord BraidWord::power(int k) const {
  BraidWord base = k < 0 ? inverse() : *this;
  BraidWord r(n_);
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

std::string BraidWord::str() const {
  if (letters_.empty()) return "e";
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty()) s += ' ';
    s += l.str();
  }
  return s;
}

std::string to_string(RelatorTag tag) {
  switch (tag) {
    case RelatorTag::b1: return "b1";
    case RelatorTag::b2: return "b2";
    case RelatorTag::vb3: return "vb3";
    case RelatorTag::vb4: return "vb4";
    case RelatorTag::vb5: return "vb5";
    case RelatorTag::vb6: return "vb6";
    case RelatorTag::vb7: return "vb7";
  }
  return "?";
}

std::vector<Relator> relator_catalog(int n, bool virtual_group) {
  if (n < 2) throw std::invalid_argument("relator catalog needs n >= 2");
  using L = BraidLetter;
  auto w = [n](std::vector<L> ls) { return BraidWord(n, std::move(ls)); };
  std::vector<Relator> out;
  for (int i = 1; i <= n - 2; ++i)
    out.push_back({w({L::sigma(i), L::sigma(i + 1), L::sigma(i)}),
                   w({L::sigma(i + 1), L::sigma(i), L::sigma(i + 1)}), RelatorTag::b1});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      out.push_back({w({L::sigma(i), L::sigma(j)}), w({L::sigma(j), L::sigma(i)}), RelatorTag::b2});
  if (!virtual_group) return out;

  for (int i = 1; i <= n - 2; ++i)
    out.push_back({w({L::rho(i), L::rho(i + 1), L::rho(i)}),
                   w({L::rho(i + 1), L::rho(i), L::rho(i + 1)}), RelatorTag::vb3});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      out.push_back({w({L::rho(i), L::rho(j)}), w({L::rho(j), L::rho(i)}), RelatorTag::vb4});
  for (int i = 1; i <= n - 1; ++i)
    out.push_back({w({L::rho(i), L::rho(i)}), w({}), RelatorTag::vb5});
  for (int i = 1; i <= n - 2; ++i)
    out.push_back({w({L::rho(i + 1), L::sigma(i), L::rho(i + 1)}),
                   w({L::rho(i), L::sigma(i + 1), L::rho(i)}), RelatorTag::vb6});
  // sigma_i rho_j = rho_j sigma_i for every ordered pair with |i-j| >= 2
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) >= 2)
        out.push_back({w({L::sigma(i), L::rho(j)}), w({L::rho(j), L::sigma(i)}), RelatorTag::vb7});
  return out;
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands());
  for (const auto& l : w.letters())
    p = p.then(Permutation::transposition(w.strands(), l.index, l.index + 1));
  return p;
}

BraidWord pure_generator(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw std::out_of_range("pure generator a_{" + std::to_string(i) + "," + std::to_string(j) +
                            "} needs 1 <= i < j <= n");
  std::vector<BraidLetter> ls;
  for (int k = j - 1; k > i; --k) ls.push_back(BraidLetter::sigma(k));
  ls.push_back(BraidLetter::sigma(i));
  ls.push_back(BraidLetter::sigma(i));
  for (int k = i + 1; k <= j - 1; ++k) ls.push_back(BraidLetter::sigma(k, -1));
  return BraidWord(n, std::move(ls));
}

BraidWord lambda_generator(int i, int j) {
  using L = BraidLetter;
  BraidWord l12(3, {L::rho(1), L::sigma(1, -1)});
  if (i == 1 && j == 2) return l12;
  if (i == 1 && j == 3) return BraidWord(3, {L::rho(2)}) * l12 * BraidWord(3, {L::rho(2)});
  if (i == 2 && j == 3) return BraidWord(3, {L::rho(2), L::sigma(2, -1)});
  throw std::invalid_argument("lambda generator defined only for (1,2), (1,3), (2,3)");
}

BraidWord random_braid_word(std::mt19937_64& rng, int n, int length, bool virtual_group) {
  if (n < 2) throw std::invalid_argument("braid words need n >= 2");
  std::uniform_int_distribution<int> index(1, n - 1);
  std::uniform_int_distribution<int> kind(0, virtual_group ? 2 : 1);
  std::vector<BraidLetter> letters;
  for (int k = 0; k < length; ++k) {
    int i = index(rng);
    switch (kind(rng)) {
      case 0: letters.push_back(BraidLetter::sigma(i)); break;
      case 1: letters.push_back(BraidLetter::sigma(i, -1)); break;
      default: letters.push_back(BraidLetter::rho(i)); break;
    }
  }
  return BraidWord(n, std::move(letters));
}

}  // namespace braidrep
