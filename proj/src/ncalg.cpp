#include "dgcy/ncalg.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "dgcy/errors.hpp"

namespace dgcy {

Word operator*(const Word& a, const Word& b) {
  Word w;
  w.letters.reserve(a.size() + b.size());
  w.letters.insert(w.letters.end(), a.letters.begin(), a.letters.end());
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter l : w.letters) {
    h ^= static_cast<std::size_t>(l) + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------

int GeneratorSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

int GeneratorSet::degree(const Word& w) const {
  int d = 0;
  for (Letter l : w.letters) d += degrees.at(l);
  return d;
}

void GeneratorSet::validate() const {
  if (names.size() != degrees.size()) throw SchemaError("generator names and degrees differ in length");
  if (names.size() > 0xFFFF) throw SchemaError("too many generators");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& n = names[i];
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw SchemaError("invalid generator name '" + n + "'");
    for (char c : n)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw SchemaError("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw SchemaError("duplicate generator '" + n + "'");
    if (degrees[i] < 1) throw SchemaError("generator '" + n + "' must have degree >= 1");
  }
}

// ---------------------------------------------------------------------------

NcPoly NcPoly::monomial(const Word& w, const Rational& c) {
  NcPoly p;
  p.add_term(w, c);
  return p;
}

Rational NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational() : it->second;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool NcPoly::is_homogeneous(const GeneratorSet& g) const {
  if (terms_.empty()) return true;
  int d = g.degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return g.degree(t.first) == d; });
}

int NcPoly::degree(const GeneratorSet& g) const {
  if (terms_.empty()) throw HomogeneityError("zero polynomial has no degree");
  if (!is_homogeneous(g)) throw HomogeneityError("polynomial is not homogeneous");
  return g.degree(terms_.begin()->first);
}

std::map<int, NcPoly> NcPoly::components(const GeneratorSet& g) const {
  std::map<int, NcPoly> out;
  for (const auto& [w, c] : terms_) out[g.degree(w)].add_term(w, c);
  return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

NcPoly NcPoly::operator-() const {
  NcPoly r = *this;
  return r *= Rational(-1);
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const GeneratorSet& gens) : s_(text), gens_(gens) {}

  NcPoly parse() {
    NcPoly result;
    skip_ws();
    if (pos_ == s_.size()) fail("empty expression");
    bool first = true;
    while (true) {
      skip_ws();
      Rational sign = 1;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        if (s_[pos_] == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, word] = term();
      result.add_term(word, sign * coef);
      skip_ws();
      if (pos_ == s_.size()) break;
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, static_cast<int>(pos_) + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string digits() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  std::pair<Rational, Word> term() {
    Rational coef = 1;
    Word w;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) fail("expected a factor");
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = digits();
        std::string den = "1";
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') {
          ++pos_;
          skip_ws();
          den = digits();
          if (den.empty()) fail("expected a denominator");
        }
        try {
          coef *= Rational::parse(num + "/" + den);
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        }
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t b = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string name(s_.substr(b, pos_ - b));
        int g = gens_.index_of(name);
        if (g < 0) throw UnknownGenerator("unknown generator '" + name + "' at column " + std::to_string(b + 1));
        unsigned power = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip_ws();
          std::string e = digits();
          if (e.empty() || e.size() > 4) fail("expected an exponent");
          power = static_cast<unsigned>(std::stoul(e));
        }
        for (unsigned k = 0; k < power; ++k) w.letters.push_back(static_cast<Letter>(g));
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      return {coef, w};
    }
  }

  std::string_view s_;
  const GeneratorSet& gens_;
  std::size_t pos_ = 0;
};

}  // namespace

NcPoly parse_poly(std::string_view text, const GeneratorSet& gens) { return ExprParser(text, gens).parse(); }

std::string to_string(const Word& w, const GeneratorSet& gens) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w.letters[j] == w.letters[i]) ++j;
    if (!out.empty()) out += "*";
    out += gens.names.at(w.letters[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

bool deglex_less(const Word& a, const Word& b, const GeneratorSet& gens) {
  int da = gens.degree(a), db = gens.degree(b);
  if (da != db) return da < db;
  return a.letters < b.letters;
}

std::string to_string(const NcPoly& q, const GeneratorSet& gens) {
  if (q.is_zero()) return "0";
  std::vector<std::pair<Word, Rational>> terms(q.terms().begin(), q.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return deglex_less(a.first, b.first, gens); });
  std::string out;
  for (const auto& [w, c] : terms) {
    Rational a = c;
    if (out.empty()) {
      if (a.sign() < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    if (w.empty()) {
      out += a.str();
    } else {
      if (!a.is_one()) out += a.str() + "*";
      out += to_string(w, gens);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

int Presentation::max_relation_degree() const {
  int d = 0;
  for (const auto& r : relations) d = std::max(d, r.degree(generators));
  return d;
}

void Presentation::validate() const {
  generators.validate();
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const auto& r = relations[i];
    if (r.is_zero()) throw SchemaError("relation " + std::to_string(i + 1) + " is zero");
    if (!r.is_homogeneous(generators))
      throw HomogeneityError("relation '" + to_string(r, generators) + "' is not homogeneous");
    if (r.degree(generators) < 2)
      throw HomogeneityError("relation '" + to_string(r, generators) + "' has degree < 2");
  }
}

PresentedAlgebra::PresentedAlgebra(Presentation p) : p_(std::move(p)) {
  p_.validate();
  for (const auto& r : p_.relations) relation_degrees_.push_back(r.degree(p_.generators));
}

const PresentedAlgebra::DegreeData& PresentedAlgebra::data(int n) const {
  if (n < 0) throw InvariantViolation("negative degree requested");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return *it->second;
  }
  auto built = build(n);
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.emplace(n, std::move(built));
  return *it->second;
}

std::unique_ptr<PresentedAlgebra::DegreeData> PresentedAlgebra::build(int n) const {
  auto d = std::make_unique<DegreeData>();
  const auto& gens = p_.generators;
  if (n == 0) {
    d->words.emplace_back();
  } else {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      int rest = n - gens.degrees[g];
      if (rest < 0) continue;
      for (const Word& w : data(rest).words) {
        Word x;
        x.letters.reserve(w.size() + 1);
        x.letters.push_back(static_cast<Letter>(g));
        x.letters.insert(x.letters.end(), w.letters.begin(), w.letters.end());
        d->words.push_back(std::move(x));
      }
    }
  }
  d->index.reserve(d->words.size());
  for (std::size_t i = 0; i < d->words.size(); ++i) d->index.emplace(d->words[i], static_cast<Index>(i));

  Echelon ideal;
  for (std::size_t r = 0; r < p_.relations.size(); ++r) {
    int rest = n - relation_degrees_[r];
    if (rest < 0) continue;
    for (int k = 0; k <= rest; ++k) {
      const auto& left = data(k).words;
      const auto& right = data(rest - k).words;
      for (const Word& u : left)
        for (const Word& v : right) {
          SparseVec row;
          for (const auto& [w, c] : p_.relations[r].terms()) row.emplace_back(d->index.at(u * w * v), c);
          std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
          ideal.insert(std::move(row));
        }
    }
  }

  d->normal_pos.assign(d->words.size(), -1);
  for (std::size_t i = 0; i < d->words.size(); ++i) {
    if (ideal.has_pivot(static_cast<Index>(i))) continue;
    d->normal_pos[i] = static_cast<std::int64_t>(d->normal_to_word.size());
    d->normal_to_word.push_back(static_cast<Index>(i));
    d->normal_words.push_back(d->words[i]);
  }
  if (ideal.rank() > 0) {
    for (const SparseVec& row : ideal.rref_rows()) {
      SparseVec red;
      for (std::size_t k = 1; k < row.size(); ++k)
        red.emplace_back(static_cast<Index>(d->normal_pos[row[k].first]), -row[k].second);
      d->reduction.emplace(row.front().first, std::move(red));
    }
  }
  return d;
}

DegreeBasis PresentedAlgebra::degree_basis(int n) const {
  const DegreeData& d = data(n);
  DegreeBasis b;
  b.degree = n;
  b.normal_words = d.normal_words;
  b.free_words = d.words;
  b.projection.reserve(d.words.size());
  for (std::size_t i = 0; i < d.words.size(); ++i) b.projection.push_back(coords_of_word(d.words[i]));
  return b;
}

std::size_t PresentedAlgebra::dim(int n) const { return n < 0 ? 0 : data(n).normal_words.size(); }

const std::vector<Word>& PresentedAlgebra::normal_words(int n) const { return data(n).normal_words; }
const std::vector<Word>& PresentedAlgebra::free_words(int n) const { return data(n).words; }

SparseVec PresentedAlgebra::coords_of_word(const Word& w) const {
  const DegreeData& d = data(p_.generators.degree(w));
  Index i = d.index.at(w);
  if (d.normal_pos[i] >= 0) return {{static_cast<Index>(d.normal_pos[i]), Rational(1)}};
  return d.reduction.at(i);
}

SparseVec PresentedAlgebra::coords(const NcPoly& q, int n) const {
  std::map<Index, Rational> acc;
  for (const auto& [w, c] : q.terms()) {
    if (p_.generators.degree(w) != n)
      throw HomogeneityError("term '" + to_string(w, p_.generators) + "' is not of degree " + std::to_string(n));
    for (const auto& [i, a] : coords_of_word(w)) acc[i] += a * c;
  }
  SparseVec v;
  for (auto& [i, a] : acc)
    if (!a.is_zero()) v.emplace_back(i, std::move(a));
  return v;
}

NcPoly PresentedAlgebra::from_coords(int n, const SparseVec& v) const {
  const auto& words = normal_words(n);
  NcPoly q;
  for (const auto& [i, c] : v) q.add_term(words.at(i), c);
  return q;
}

SparseVec PresentedAlgebra::multiply_coords(int p, const SparseVec& a, int q, const SparseVec& b) const {
  if (a.empty() || b.empty()) return {};
  const auto& wa = normal_words(p);
  const auto& wb = normal_words(q);
  std::map<Index, Rational> acc;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      Rational xy = x * y;
      for (const auto& [k, z] : coords_of_word(wa[i] * wb[j])) acc[k] += xy * z;
    }
  SparseVec v;
  for (auto& [i, c] : acc)
    if (!c.is_zero()) v.emplace_back(i, std::move(c));
  return v;
}

NcPoly PresentedAlgebra::reduce(const NcPoly& q) const {
  NcPoly out;
  for (const auto& [w, c] : q.terms()) {
    int n = p_.generators.degree(w);
    const auto& words = normal_words(n);
    for (const auto& [i, a] : coords_of_word(w)) out.add_term(words[i], a * c);
  }
  return out;
}

NcPoly PresentedAlgebra::multiply(const NcPoly& a, const NcPoly& b) const { return reduce(a * b); }

bool PresentedAlgebra::ideal_contains(const NcPoly& q) const { return reduce(q).is_zero(); }

DegreeBasis degree_basis(const Presentation& p, int n) { return PresentedAlgebra(p).degree_basis(n); }
NcPoly reduce(const Presentation& p, const NcPoly& q) { return PresentedAlgebra(p).reduce(q); }
NcPoly multiply(const Presentation& p, const NcPoly& a, const NcPoly& b) { return PresentedAlgebra(p).multiply(a, b); }
bool ideal_contains(const Presentation& p, const NcPoly& q) { return PresentedAlgebra(p).ideal_contains(q); }

}  // namespace dgcy
