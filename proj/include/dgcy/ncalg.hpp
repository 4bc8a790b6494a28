#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dgcy/linalg.hpp"

namespace dgcy {

using Letter = std::uint16_t;

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}
  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
  friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

struct GeneratorSet {
  std::vector<std::string> names;
  std::vector<int> degrees;

  std::size_t size() const { return names.size(); }
  int index_of(std::string_view name) const;  // -1 when absent
  int degree(const Word& w) const;
  void validate() const;  // SchemaError on duplicates, empty names, degrees < 1
};

class NcPoly {
 public:
  using Terms = std::map<Word, Rational>;

  NcPoly() = default;
  static NcPoly unit() { return monomial(Word{}, 1); }
  static NcPoly monomial(const Word& w, const Rational& c = 1);
  static NcPoly generator(Letter g) { return monomial(Word({g})); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Word& w) const;
  void add_term(const Word& w, const Rational& c);

  bool is_homogeneous(const GeneratorSet& g) const;
  // Degree of a nonzero homogeneous polynomial; throws HomogeneityError otherwise.
  int degree(const GeneratorSet& g) const;
  // Homogeneous components keyed by degree.
  std::map<int, NcPoly> components(const GeneratorSet& g) const;

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Rational& c);
  NcPoly operator-() const;
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
  friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }
  // Free concatenation product.
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

 private:
  Terms terms_;
};

// Expression grammar: sums of terms "c*x*y^2", coefficients are integers or p/q,
// "1" denotes the unit word. Throws ParseError / UnknownGenerator.
NcPoly parse_poly(std::string_view text, const GeneratorSet& gens);
std::string to_string(const NcPoly& q, const GeneratorSet& gens);
std::string to_string(const Word& w, const GeneratorSet& gens);

// Deglex comparison under generator order.
bool deglex_less(const Word& a, const Word& b, const GeneratorSet& gens);

struct Presentation {
  GeneratorSet generators;
  std::vector<NcPoly> relations;

  bool is_free() const { return relations.empty(); }
  int max_relation_degree() const;
  void validate() const;  // SchemaError / HomogeneityError
};

struct DegreeBasis {
  int degree = 0;
  std::vector<Word> normal_words;
  std::vector<Word> free_words;
  // Row i: normal coordinates of free word i.
  std::vector<SparseVec> projection;
};

// Degree-truncated normal forms for a presented algebra. Degree data is built on
// demand and cached; the cache is guarded so concurrent readers are safe.
class PresentedAlgebra {
 public:
  explicit PresentedAlgebra(Presentation p);

  const Presentation& presentation() const { return p_; }
  const GeneratorSet& generators() const { return p_.generators; }

  DegreeBasis degree_basis(int n) const;
  std::size_t dim(int n) const;
  const std::vector<Word>& normal_words(int n) const;
  const std::vector<Word>& free_words(int n) const;

  NcPoly reduce(const NcPoly& q) const;
  NcPoly multiply(const NcPoly& a, const NcPoly& b) const;
  bool ideal_contains(const NcPoly& q) const;

  // Coordinates with respect to normal words of degree n.
  SparseVec coords_of_word(const Word& w) const;
  SparseVec coords(const NcPoly& q, int n) const;
  NcPoly from_coords(int n, const SparseVec& v) const;
  SparseVec multiply_coords(int p, const SparseVec& a, int q, const SparseVec& b) const;

 private:
  struct DegreeData {
    std::vector<Word> words;  // deglex
    std::unordered_map<Word, Index, WordHash> index;
    std::vector<std::int64_t> normal_pos;  // -1 for reducible words
    std::vector<Index> normal_to_word;
    std::unordered_map<Index, SparseVec> reduction;  // free index -> normal coordinates
    std::vector<Word> normal_words;
  };
  const DegreeData& data(int n) const;
  std::unique_ptr<DegreeData> build(int n) const;

  Presentation p_;
  std::vector<int> relation_degrees_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<DegreeData>> cache_;
};

// Convenience wrappers building a throwaway engine.
DegreeBasis degree_basis(const Presentation& p, int n);
NcPoly reduce(const Presentation& p, const NcPoly& q);
NcPoly multiply(const Presentation& p, const NcPoly& a, const NcPoly& b);
bool ideal_contains(const Presentation& p, const NcPoly& q);

}  // namespace dgcy
