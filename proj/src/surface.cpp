#include "fibtop/surface.hpp"

#include "fibtop/errors.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fibtop {

// ---------------------------------------------------------------------------
// Words

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(Letter{it->gen, -it->exp});
  return w;
}

Word operator*(const Word& a, const Word& b) {
  std::size_t cancel = 0;
  while (cancel < a.length() && cancel < b.length()) {
    const Letter& x = a.letters_[a.length() - 1 - cancel];
    const Letter& y = b.letters_[cancel];
    if (x.gen != y.gen || x.exp != -y.exp) break;
    ++cancel;
  }
  Word w;
  w.letters_.reserve(a.length() + b.length() - 2 * cancel);
  w.letters_.insert(w.letters_.end(), a.letters_.begin(), a.letters_.end() - cancel);
  w.letters_.insert(w.letters_.end(), b.letters_.begin() + cancel, b.letters_.end());
  return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return a.letters_ <=> b.letters_;
}

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("Alphabet: empty generator name");
    if (!seen.insert(n).second) throw std::invalid_argument("Alphabet: duplicate generator " + n);
  }
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<Letter> Alphabet::parse_letters(std::string_view text) const {
  std::vector<Letter> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string name = tok;
    long power = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      std::size_t used = 0;
      try {
        power = std::stol(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (e.empty() || used != e.size() || power == 0)
        throw ParseError("bad exponent in token '" + tok + "'");
    }
    auto idx = index_of(name);
    if (!idx) throw ParseError("unknown generator '" + name + "'");
    const int sign = power > 0 ? 1 : -1;
    for (long k = 0; k < (power > 0 ? power : -power); ++k) out.push_back(Letter{*idx, sign});
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const { return Word(parse_letters(text)); }

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += name(l.gen);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

Word free_reduce(const std::vector<Letter>& letters, const Alphabet& alphabet) {
  for (const Letter& l : letters) {
    if (l.gen >= alphabet.size()) throw std::out_of_range("free_reduce: unknown generator symbol");
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("free_reduce: exponent must be +-1");
  }
  return Word(letters);
}

Word cyclically_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t lo = 0;
  std::size_t hi = l.size();
  while (hi - lo >= 2 && l[lo].gen == l[hi - 1].gen && l[lo].exp == -l[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(l.begin() + static_cast<long>(lo), l.begin() + static_cast<long>(hi)));
}

bool are_conjugate(const Word& u, const Word& v) {
  Word cu = cyclically_reduce(u);
  Word cv = cyclically_reduce(v);
  if (cu.length() != cv.length()) return false;
  if (cu.empty()) return true;
  const auto& a = cu.letters();
  const auto& b = cv.letters();
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = a[(i + shift) % n] == b[i];
    if (same) return true;
  }
  return false;
}

std::vector<Integer> abelianize(const Word& w, std::size_t rank) {
  std::vector<Integer> v(rank, Integer(0));
  for (const Letter& l : w.letters()) v.at(l.gen) += l.exp;
  return v;
}

// ---------------------------------------------------------------------------
// Endomorphisms

FreeEndo FreeEndo::identity(std::size_t rank) {
  std::vector<Word> images;
  images.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) images.push_back(Word::generator(i));
  return FreeEndo(std::move(images));
}

Word apply_endo(const FreeEndo& e, const Word& w) {
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.gen >= e.rank()) throw std::out_of_range("apply_endo: symbol outside the domain");
    out = out * (l.exp > 0 ? e.image(l.gen) : e.image(l.gen).inverse());
  }
  return out;
}

FreeEndo compose(const FreeEndo& outer, const FreeEndo& inner) {
  if (outer.rank() != inner.rank()) throw std::invalid_argument("compose: domain mismatch");
  std::vector<Word> images;
  images.reserve(inner.rank());
  for (const Word& w : inner.images()) images.push_back(apply_endo(outer, w));
  return FreeEndo(std::move(images));
}

IntMatrix abelianize(const FreeEndo& e) {
  IntMatrix m(e.rank(), e.rank(), Integer(0));
  for (std::size_t j = 0; j < e.rank(); ++j) {
    auto v = abelianize(e.image(j), e.rank());
    for (std::size_t i = 0; i < e.rank(); ++i) m(i, j) = v[i];
  }
  return m;
}

// ---------------------------------------------------------------------------
// Surfaces and twists

SurfaceData::SurfaceData(int g) : genus(g) {
  if (g < 1) throw std::invalid_argument("SurfaceData: genus must be >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= g; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  generators = Alphabet(std::move(names));
  std::vector<Letter> rel;
  for (int i = 1; i <= g; ++i) {
    const std::size_t a = a_index(i);
    const std::size_t b = b_index(i);
    rel.insert(rel.end(), {Letter{a, 1}, Letter{b, 1}, Letter{a, -1}, Letter{b, -1}});
  }
  relator = Word(std::move(rel));
}

MappingClass::MappingClass(int g, std::vector<Twist> word) : genus(g), twists(std::move(word)) {
  if (g < 1) throw std::invalid_argument("MappingClass: genus must be >= 1");
  for (const Twist& t : twists) {
    if (t.curve.index < 1 || t.curve.index > g)
      throw std::invalid_argument("MappingClass: curve index " + std::to_string(t.curve.index) +
                                  " exceeds genus " + std::to_string(g));
    if (t.sign != 1 && t.sign != -1) throw std::invalid_argument("MappingClass: sign must be +-1");
  }
}

MappingClass MappingClass::inverse() const {
  std::vector<Twist> w(twists.rbegin(), twists.rend());
  for (Twist& t : w) t.sign = -t.sign;
  return MappingClass(genus, std::move(w));
}

namespace {

void check_curve(Curve c, int sign, int genus) {
  if (c.index < 1 || c.index > genus) throw std::invalid_argument("twist: curve index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("twist: sign must be +-1");
}

}  // namespace

FreeEndo dehn_twist_pi1(Curve c, int sign, const SurfaceData& s) {
  check_curve(c, sign, s.genus);
  FreeEndo id = FreeEndo::identity(s.generators.size());
  std::vector<Word> images = id.images();
  const std::size_t a = SurfaceData::a_index(c.index);
  const std::size_t b = SurfaceData::b_index(c.index);
  const int e = sign * kTwistHandedness;
  if (c.kind == CurveKind::A)
    images[b] = Word({Letter{b, 1}, Letter{a, e}});
  else
    images[a] = Word({Letter{a, 1}, Letter{b, -e}});
  return FreeEndo(std::move(images));
}

IntMatrix dehn_twist_h1(Curve c, int sign, int genus) {
  check_curve(c, sign, genus);
  IntMatrix m = identity_matrix(static_cast<std::size_t>(2 * genus));
  const std::size_t a = SurfaceData::a_index(c.index);
  const std::size_t b = SurfaceData::b_index(c.index);
  const int e = sign * kTwistHandedness;
  if (c.kind == CurveKind::A)
    m(a, b) = e;  // b -> b + e a
  else
    m(b, a) = -e;  // a -> a - e b
  return m;
}

MappingClass family_phi(int genus) {
  if (genus < 1) throw std::invalid_argument("family_phi: genus must be >= 1");
  std::vector<Twist> w;
  for (int i = genus; i >= 2; --i) {
    w.push_back(Twist{Curve{CurveKind::B, i}, 1});
    w.push_back(Twist{Curve{CurveKind::A, i}, -1});
  }
  w.push_back(Twist{Curve{CurveKind::A, 1}, 1});
  return MappingClass(genus, std::move(w));
}

IntMatrix h1_action(const MappingClass& mc) {
  IntMatrix m = identity_matrix(static_cast<std::size_t>(2 * mc.genus));
  for (const Twist& t : mc.twists) m = m * dehn_twist_h1(t.curve, t.sign, mc.genus);
  return m;
}

IntMatrix cohomology_action(const MappingClass& mc) { return h1_action(mc).transposed(); }

FreeEndo mapping_class_endo(const MappingClass& mc) {
  SurfaceData s(mc.genus);
  FreeEndo e = FreeEndo::identity(s.generators.size());
  for (const Twist& t : mc.twists) e = compose(e, dehn_twist_pi1(t.curve, t.sign, s));
  return e;
}

FreeEndo mapping_class_endo_inverse(const MappingClass& mc) {
  return mapping_class_endo(mc.inverse());
}

MappingClass parse_twist_word(std::string_view text, int genus) {
  if (genus < 1) throw ParseError("genus must be >= 1");
  std::vector<Twist> w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string body = tok;
    int sign = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      std::string e = tok.substr(caret + 1);
      if (e == "-1") sign = -1;
      else if (e != "1" && e != "+1") throw ParseError("bad twist exponent in '" + tok + "'");
      body = tok.substr(0, caret);
    }
    if (body.size() < 3 || body[0] != 'T' || (body[1] != 'a' && body[1] != 'b'))
      throw ParseError("bad twist token '" + tok + "'");
    std::string digits = body.substr(2);
    for (char ch : digits)
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad twist token '" + tok + "'");
    int idx = std::stoi(digits);
    if (idx < 1 || idx > genus)
      throw ParseError("twist '" + tok + "' refers to handle " + digits + " but genus is " +
                       std::to_string(genus));
    w.push_back(Twist{Curve{body[1] == 'a' ? CurveKind::A : CurveKind::B, idx}, sign});
  }
  return MappingClass(genus, std::move(w));
}

std::string format_twist_word(const MappingClass& mc) {
  std::string out;
  for (const Twist& t : mc.twists) {
    if (!out.empty()) out += ' ';
    out += t.curve.kind == CurveKind::A ? "Ta" : "Tb";
    out += std::to_string(t.curve.index);
    if (t.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace fibtop
