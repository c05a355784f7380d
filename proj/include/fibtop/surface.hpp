#pragma once

#include "fibtop/exactalg.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace fibtop {

struct Letter {
  std::size_t gen = 0;
  int exp = 1;  // +1 or -1

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in a free group. Every constructor reduces.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  static Word generator(std::size_t gen, int exp = 1) { return Word({Letter{gen, exp}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
  std::vector<Letter> letters_;
};

/// Generator names for parsing and printing words: tokens `x` or `x^-1`.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Tokens as written, without reduction. Throws ParseError.
  std::vector<Letter> parse_letters(std::string_view text) const;
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<std::string> names_;
};

/// Validates generator indices against the alphabet, then reduces.
Word free_reduce(const std::vector<Letter>& letters, const Alphabet& alphabet);

Word cyclically_reduce(const Word& w);
/// Conjugacy in the free group: cyclic reductions agree up to rotation.
bool are_conjugate(const Word& u, const Word& v);

std::vector<Integer> abelianize(const Word& w, std::size_t rank);

/// Endomorphism of a free group given by generator images.
class FreeEndo {
public:
  FreeEndo() = default;
  explicit FreeEndo(std::vector<Word> images) : images_(std::move(images)) {}
  static FreeEndo identity(std::size_t rank);

  std::size_t rank() const { return images_.size(); }
  const Word& image(std::size_t gen) const { return images_.at(gen); }
  const std::vector<Word>& images() const { return images_; }

  friend bool operator==(const FreeEndo&, const FreeEndo&) = default;

private:
  std::vector<Word> images_;
};

/// Substitute images letter by letter; throws std::out_of_range on a letter
/// outside the domain.
Word apply_endo(const FreeEndo& e, const Word& w);
/// (outer o inner)(x) = outer(inner(x)).
FreeEndo compose(const FreeEndo& outer, const FreeEndo& inner);
/// Column j is the exponent-sum vector of the image of generator j.
IntMatrix abelianize(const FreeEndo& e);

/// Closed oriented surface of genus g with pi_1 generators a1, b1, ..., ag, bg
/// and the single relator [a1,b1]...[ag,bg], where [a,b] = a b a^-1 b^-1.
struct SurfaceData {
  int genus = 1;
  Alphabet generators;
  Word relator;

  explicit SurfaceData(int g);

  static std::size_t a_index(int i) { return static_cast<std::size_t>(2 * (i - 1)); }
  static std::size_t b_index(int i) { return static_cast<std::size_t>(2 * (i - 1) + 1); }
};

enum class CurveKind { A, B };

struct Curve {
  CurveKind kind = CurveKind::A;
  int index = 1;  // 1-based handle index

  friend bool operator==(const Curve&, const Curve&) = default;
};

struct Twist {
  Curve curve;
  int sign = 1;

  friend bool operator==(const Twist&, const Twist&) = default;
};

/// A product of twists about the standard curves, stored in written order;
/// the rightmost twist acts first.
struct MappingClass {
  int genus = 1;
  std::vector<Twist> twists;

  MappingClass() = default;
  MappingClass(int g, std::vector<Twist> word);

  MappingClass inverse() const;
  friend bool operator==(const MappingClass&, const MappingClass&) = default;
};

/// Twist handedness. With +1:
///   T_{a_i}: b_i -> b_i a_i        T_{b_i}: a_i -> a_i b_i^-1
/// all other generators fixed. Both formulas fix each commutator [a_i,b_i]
/// exactly, and on H_1 they are x -> x + <c,x> c with <a_i,b_i> = 1.
inline constexpr int kTwistHandedness = +1;

FreeEndo dehn_twist_pi1(Curve c, int sign, const SurfaceData& s);
/// Homology action in the basis (a1, b1, a2, b2, ...); column j is the image
/// of basis vector j.
IntMatrix dehn_twist_h1(Curve c, int sign, int genus);

MappingClass family_phi(int genus);

/// Action on H_1(Sigma) (columns are images).
IntMatrix h1_action(const MappingClass& mc);
/// Pullback on H^1(Sigma) in the dual basis (alpha1, beta1, ...); this is the
/// transpose of the homology action.
IntMatrix cohomology_action(const MappingClass& mc);

FreeEndo mapping_class_endo(const MappingClass& mc);
FreeEndo mapping_class_endo_inverse(const MappingClass& mc);

/// Whitespace-separated `Ta1`, `Tb3^-1`, ...; an empty string is the identity.
MappingClass parse_twist_word(std::string_view text, int genus);
std::string format_twist_word(const MappingClass& mc);

}  // namespace fibtop
