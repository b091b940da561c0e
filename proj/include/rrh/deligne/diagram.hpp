#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rrh/deligne/poly.hpp"

/// Skeletal diagram category of GL_t: words in {V, V*}, admissible
/// matchings, composition with loop factor t, and categorical traces.
namespace rrh::deligne {

enum class Letter { Cov, Contra };

/// An object: a word in V (Cov, printed as a filled dot) and V* (Contra,
/// printed as a hollow dot). The empty word is the unit object.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Accepts the dot glyphs as well as the ASCII stand-ins '*' (Cov) and
  /// 'o' (Contra). Throws DomainError on anything else.
  static Word parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Number of Cov letters minus number of Contra letters.
  int charge() const;
  std::string to_string() const;

  friend Word operator+(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Reversed word with every letter dualized.
Word dual(const Word& w);

/// All words of length exactly n (2^n of them, lexicographic).
std::vector<Word> words_of_length(int n);

/// A perfect matching on the letters of source and target. Source letters
/// occupy positions 0..s-1, target letters s..s+t-1. Edges are stored as
/// (low, high) pairs sorted ascending, so equal matchings compare equal.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<std::pair<int, int>> edges);

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  /// partner()[i] is the position joined to i.
  std::vector<int> partners() const;

  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<std::pair<int, int>> edges_;
};

/// True when every position is matched once, edges inside one word join a
/// Cov letter to a Contra letter, and edges across join equal letters.
bool is_admissible(const Word& source, const Word& target, const Matching& m);

/// Every admissible matching source -> target, in canonical order.
std::vector<Matching> all_matchings(const Word& source, const Word& target);

/// Linear combination of matchings source -> target with coefficients in
/// Q[t]. Zero coefficients are never stored.
class DiagMorphism {
 public:
  DiagMorphism(Word source, Word target);
  /// A single matching with coefficient `coeff`; validates admissibility.
  DiagMorphism(Word source, Word target, Matching m, Poly coeff = Poly(1));

  const Word& source() const { return source_; }
  const Word& target() const { return target_; }
  const std::map<Matching, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Matching& m, const Poly& coeff);

  DiagMorphism& operator+=(const DiagMorphism& rhs);
  DiagMorphism& operator-=(const DiagMorphism& rhs);
  DiagMorphism& operator*=(const Poly& s);

  friend DiagMorphism operator+(DiagMorphism a, const DiagMorphism& b) { return a += b; }
  friend DiagMorphism operator-(DiagMorphism a, const DiagMorphism& b) { return a -= b; }
  friend DiagMorphism operator*(DiagMorphism a, const Poly& s) { return a *= s; }
  friend DiagMorphism operator*(const Poly& s, DiagMorphism a) { return a *= s; }
  friend bool operator==(const DiagMorphism& a, const DiagMorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.terms_ == b.terms_;
  }

  /// The coefficient of the empty matching; meaningful for End(unit).
  Poly scalar() const;

  std::string to_string() const;

 private:
  void require_same_hom(const DiagMorphism& rhs) const;

  Word source_;
  Word target_;
  std::map<Matching, Poly> terms_;
};

DiagMorphism identity(const Word& w);

/// Composite of single matchings g: A -> B then f: B -> C, together with the
/// number of closed loops removed.
std::pair<Matching, int> compose_matchings(const Matching& f, const Matching& g, std::size_t a, std::size_t b,
                                           std::size_t c);

/// f o g for g: A -> B and f: B -> C. CompositionError unless the words agree.
DiagMorphism compose(const DiagMorphism& f, const DiagMorphism& g);

/// f (x) g on concatenated words.
DiagMorphism tensor(const DiagMorphism& f, const DiagMorphism& g);

/// The symmetry u (x) v -> v (x) u.
DiagMorphism swap(const Word& u, const Word& v);

/// The morphism sending letter i of w to position perm[i] of the target.
DiagMorphism permutation(const Word& w, const std::vector<int>& perm);

/// (1/n!) sum over permutations, with signs for the antisymmetrizer. The
/// word must repeat a single letter (DomainError otherwise).
DiagMorphism symmetrizer(const Word& w);
DiagMorphism antisymmetrizer(const Word& w);

/// Unit -> w (x) dual(w) and w (x) dual(w) -> unit by nested arcs.
DiagMorphism coevaluation(const Word& w);
DiagMorphism evaluation(const Word& w);

enum class Nesting { Right, Left };

/// Categorical trace of an idempotent e: w -> w, closing it with nested
/// arcs on the right (w (x) dual(w)) or on the left (dual(w) (x) w).
/// DomainError when e is not an idempotent endomorphism of w.
Poly categorical_dim(const Word& w, const DiagMorphism& e, Nesting nesting = Nesting::Right);

/// Universal dimension (a-2s)(b-2s)(c-2s)/(abc), s = a+b+c.
APComplex vogel_dimension(const APComplex& a, const APComplex& b, const APComplex& c);
mpq_class vogel_dimension(const mpq_class& a, const mpq_class& b, const mpq_class& c);

/// Tally of an exhaustive law check.
struct LawCheck {
  long checked = 0;
  long failed = 0;
  std::vector<std::string> failures;  // first few descriptions
};

/// Unit laws and associativity over all words of length <= max_len and all
/// admissible matchings between them, plus the interchange law and swap^2 =
/// id over words of length <= min(max_len, 2).
LawCheck check_category_laws(int max_len);

}  // namespace rrh::deligne
