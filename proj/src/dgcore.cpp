#include "dgcy/dgcore.hpp"

#include <algorithm>

#include "dgcy/errors.hpp"

namespace dgcy {
namespace {

SparseVec from_map(std::map<Index, Rational>& acc) {
  SparseVec v;
  v.reserve(acc.size());
  for (auto& [i, c] : acc)
    if (!c.is_zero()) v.emplace_back(i, std::move(c));
  return v;
}

}  // namespace

DGAlgebra::DGAlgebra(Presentation p, std::vector<NcPoly> diff_images)
    : alg_(std::make_shared<PresentedAlgebra>(std::move(p))), cache_(std::make_shared<Cache>()) {
  const auto& gens = alg_->generators();
  if (diff_images.size() != gens.size())
    throw SchemaError("expected one differential image per generator");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    NcPoly img = alg_->reduce(diff_images[i]);
    if (!img.is_zero()) {
      if (!img.is_homogeneous(gens))
        throw HomogeneityError("differential of '" + gens.names[i] + "' is not homogeneous");
      if (img.degree(gens) != gens.degrees[i] + 1)
        throw DegreeMismatch("differential of '" + gens.names[i] + "' has degree " +
                             std::to_string(img.degree(gens)) + ", expected " + std::to_string(gens.degrees[i] + 1));
    }
    diff_.push_back(std::move(img));
  }
}

bool DGAlgebra::has_zero_differential() const {
  return std::all_of(diff_.begin(), diff_.end(), [](const NcPoly& q) { return q.is_zero(); });
}

NcPoly DGAlgebra::diff_free(const NcPoly& q) const {
  const auto& gens = generators();
  NcPoly out;
  for (const auto& [w, c] : q.terms()) {
    int prefix_degree = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      Letter l = w.letters[j];
      Rational sign = prefix_degree % 2 == 0 ? c : -c;
      for (const auto& [t, a] : diff_[l].terms()) {
        Word x;
        x.letters.reserve(w.size() + t.size());
        x.letters.insert(x.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(j));
        x.letters.insert(x.letters.end(), t.letters.begin(), t.letters.end());
        x.letters.insert(x.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(j) + 1, w.letters.end());
        out.add_term(x, sign * a);
      }
      prefix_degree += gens.degrees[l];
    }
  }
  return out;
}

NcPoly DGAlgebra::diff(const NcPoly& q) const { return alg_->reduce(diff_free(alg_->reduce(q))); }

const std::vector<SparseVec>& DGAlgebra::diff_table(int n) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->tables.find(n);
    if (it != cache_->tables.end()) return *it->second;
  }
  auto table = std::make_unique<std::vector<SparseVec>>();
  const auto& words = alg_->normal_words(n);
  table->reserve(words.size());
  for (const Word& w : words) {
    std::map<Index, Rational> acc;
    NcPoly d = diff_free(NcPoly::monomial(w));
    for (const auto& [x, c] : d.terms())
      for (const auto& [k, a] : alg_->coords_of_word(x)) acc[k] += a * c;
    table->push_back(from_map(acc));
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->tables.emplace(n, std::move(table));
  return *it->second;
}

void check_well_defined(const DGAlgebra& dg) {
  const auto& gens = dg.generators();
  const auto& alg = dg.algebra();
  for (const auto& r : dg.presentation().relations) {
    NcPoly residue = alg.reduce(dg.diff_free(r));
    if (!residue.is_zero())
      throw IllDefinedDifferential("differential of relation '" + to_string(r, gens) +
                                   "' leaves the ideal; residue " + to_string(residue, gens));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    NcPoly sq = alg.reduce(dg.diff_free(dg.diff_images()[i]));
    if (!sq.is_zero())
      throw IllDefinedDifferential("differential squares to " + to_string(sq, gens) + " on generator '" +
                                   gens.names[i] + "'");
  }
}

// ---------------------------------------------------------------------------

SemiFreeModule SemiFreeModule::rank_one() {
  SemiFreeModule f;
  f.add("1", 0, {});
  return f;
}

std::size_t SemiFreeModule::add(std::string name, int degree, std::vector<std::pair<std::size_t, NcPoly>> d) {
  names.push_back(std::move(name));
  degrees.push_back(degree);
  diff.push_back(std::move(d));
  return names.size() - 1;
}

int SemiFreeModule::max_degree() const {
  return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
}

int SemiFreeModule::min_degree() const {
  return degrees.empty() ? 0 : *std::min_element(degrees.begin(), degrees.end());
}

int SemiFreeModule::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

ModuleComplex::ModuleComplex(const DGAlgebra& dg, SemiFreeModule f) : dg_(dg), f_(std::move(f)) {
  if (f_.degrees.size() != f_.size() || f_.diff.size() != f_.size())
    throw SchemaError("semi-free module fields have inconsistent lengths");
  const auto& gens = dg_.generators();
  coeffs_.resize(f_.size());
  for (std::size_t j = 0; j < f_.size(); ++j) {
    for (const auto& [i, c] : f_.diff[j]) {
      if (i >= f_.size()) throw SchemaError("differential of '" + f_.names[j] + "' names an unknown basis element");
      NcPoly red = dg_.algebra().reduce(c);
      if (red.is_zero()) continue;
      if (!red.is_homogeneous(gens))
        throw DegreeMismatch("coefficient " + to_string(c, gens) + " in the differential of '" + f_.names[j] +
                             "' is not homogeneous");
      int d = red.degree(gens);
      if (d + f_.degrees[i] != f_.degrees[j] + 1)
        throw DegreeMismatch("term " + to_string(c, gens) + "*" + f_.names[i] + " in the differential of '" +
                             f_.names[j] + "' has the wrong degree");
      coeffs_[j].emplace_back(i, d, dg_.algebra().coords(red, d));
    }
  }
}

const std::vector<std::size_t>& ModuleComplex::offsets(int n) const {
  auto it = offsets_.find(n);
  if (it != offsets_.end()) return it->second;
  std::vector<std::size_t> off(f_.size() + 1, 0);
  for (std::size_t j = 0; j < f_.size(); ++j) off[j + 1] = off[j] + dg_.algebra().dim(n - f_.degrees[j]);
  return offsets_.emplace(n, std::move(off)).first->second;
}

std::size_t ModuleComplex::dim(int n) const { return offsets(n).back(); }

std::size_t ModuleComplex::offset(int n, std::size_t j) const { return offsets(n).at(j); }

std::pair<std::size_t, Index> ModuleComplex::locate(int n, Index g) const {
  const auto& off = offsets(n);
  auto it = std::upper_bound(off.begin(), off.end(), static_cast<std::size_t>(g));
  std::size_t j = static_cast<std::size_t>(it - off.begin()) - 1;
  return {j, static_cast<Index>(g - off[j])};
}

std::vector<NcPoly> ModuleComplex::to_components(int n, const SparseVec& v) const {
  std::vector<NcPoly> parts(f_.size());
  for (const auto& [g, c] : v) {
    auto [j, w] = locate(n, g);
    parts[j].add_term(dg_.algebra().normal_words(n - f_.degrees[j]).at(w), c);
  }
  return parts;
}

SparseVec ModuleComplex::from_components(int n, const std::vector<NcPoly>& parts) const {
  if (parts.size() != f_.size()) throw InvariantViolation("component count mismatch");
  SparseVec v;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].is_zero()) continue;
    int m = n - f_.degrees[j];
    if (m < 0) throw DegreeMismatch("component of negative degree");
    for (const auto& [w, c] : dg_.algebra().coords(parts[j], m))
      v.emplace_back(static_cast<Index>(offset(n, j) + w), c);
  }
  return v;
}

const SparseVec& ModuleComplex::image(int n, Index g) const {
  auto& slots = images_[n];
  if (slots.empty()) slots.resize(dim(n));
  auto& slot = slots.at(g);
  if (slot) return *slot;
  auto [j, a] = locate(n, g);
  int m = n - f_.degrees[j];
  std::map<Index, Rational> acc;
  std::size_t base = offset(n + 1, j);
  for (const auto& [t, c] : dg_.diff_table(m)[a]) acc[static_cast<Index>(base + t)] += c;
  SparseVec unit{{a, Rational(1)}};
  for (const auto& [i, dc, cc] : coeffs_[j]) {
    SparseVec prod = dg_.algebra().multiply_coords(m, unit, dc, cc);
    std::size_t bi = offset(n + 1, i);
    for (const auto& [k, c] : prod) {
      if (m % 2 == 0)
        acc[static_cast<Index>(bi + k)] += c;
      else
        acc[static_cast<Index>(bi + k)] -= c;
    }
  }
  slot = from_map(acc);
  return *slot;
}

SparseVec ModuleComplex::differential(int n, const SparseVec& v) const {
  SparseVec out;
  for (const auto& [g, c] : v) sparse_axpy(out, c, image(n, g));
  return out;
}

const Echelon& ModuleComplex::coboundaries(int n) const {
  auto it = coboundaries_.find(n);
  if (it != coboundaries_.end()) return *it->second;
  auto e = std::make_unique<Echelon>();
  std::size_t prev = dim(n - 1);
  for (std::size_t g = 0; g < prev; ++g) e->insert(image(n - 1, static_cast<Index>(g)));
  return *coboundaries_.emplace(n, std::move(e)).first->second;
}

std::size_t ModuleComplex::differential_rank(int n) const {
  Echelon e;
  for (std::size_t g = 0; g < dim(n); ++g) e.insert(image(n, static_cast<Index>(g)));
  return e.rank();
}

ComplexCohomology ModuleComplex::cohomology(int n, bool representatives) const {
  ComplexCohomology res;
  res.degree = n;
  const Echelon& b = coboundaries(n);
  res.coboundary_dim = b.rank();
  // Every class has a unique representative vanishing on the pivots of B^n;
  // those representatives form the kernel of d restricted to the other columns.
  std::vector<Index> unknowns;
  for (std::size_t g = 0; g < dim(n); ++g)
    if (!b.has_pivot(static_cast<Index>(g))) unknowns.push_back(static_cast<Index>(g));
  std::map<Index, SparseVec> equations;
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (const auto& [t, c] : image(n, unknowns[u])) equations[t].emplace_back(static_cast<Index>(u), c);
  Echelon d;
  for (auto& [t, row] : equations) d.insert(std::move(row));
  res.dim = unknowns.size() - d.rank();
  res.cocycle_dim = res.dim + res.coboundary_dim;
  if (representatives && res.dim > 0) {
    Echelon reps;
    for (const SparseVec& k : d.kernel(static_cast<Index>(unknowns.size()))) {
      SparseVec z;
      z.reserve(k.size());
      for (const auto& [u, c] : k) z.emplace_back(unknowns[u], c);
      reps.insert(std::move(z));
    }
    res.representatives = reps.rref_rows();
  }
  return res;
}

// ---------------------------------------------------------------------------

CohomologyResult cohomology(const DGAlgebra& dg, int n) { return DGCohomology(dg).result(n); }

DGCohomology::DGCohomology(const DGAlgebra& dg) : complex_(dg, SemiFreeModule::rank_one()) {}

const CohomologyResult& DGCohomology::result(int n) const {
  auto it = results_.find(n);
  if (it != results_.end()) return it->second;
  ComplexCohomology c = complex_.cohomology(n, true);
  CohomologyResult r;
  r.degree = n;
  r.dim = c.dim;
  r.coboundary_dim = c.coboundary_dim;
  r.cocycle_dim = c.cocycle_dim;
  for (const auto& z : c.representatives) r.representatives.push_back(complex_.to_components(n, z)[0]);
  rep_coords_[n] = std::move(c.representatives);
  return results_.emplace(n, std::move(r)).first->second;
}

bool DGCohomology::is_cocycle(const NcPoly& z, int n) const {
  SparseVec v = complex_.from_components(n, {z});
  return complex_.differential(n, v).empty();
}

bool DGCohomology::is_coboundary(const NcPoly& z, int n) const {
  SparseVec v = complex_.from_components(n, {z});
  return complex_.coboundaries(n).reduce(v).empty();
}

Vec DGCohomology::class_coords(const NcPoly& z, int n) const {
  const auto& res = result(n);
  const auto& reps = rep_coords_.at(n);
  SparseVec r = complex_.coboundaries(n).reduce(complex_.from_components(n, {z}));
  Vec coords(res.dim);
  SparseVec check = r;
  for (std::size_t t = 0; t < reps.size(); ++t) {
    coords[t] = sparse_get(r, reps[t].front().first);
    sparse_axpy(check, -coords[t], reps[t]);
  }
  if (!check.empty()) throw NotACocycle("element of degree " + std::to_string(n) + " is not a cocycle");
  return coords;
}

FiniteGradedAlgebra cohomology_algebra(const DGAlgebra& dg, int cutoff) {
  if (cutoff < 1) throw SchemaError("cutoff must be at least 1");
  DGCohomology h(dg);
  const auto& gens = dg.generators();
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::vector<NcPoly> reps;
  std::vector<std::size_t> first(static_cast<std::size_t>(cutoff) + 2, 0);
  for (int n = 0; n <= cutoff; ++n) {
    first[static_cast<std::size_t>(n)] = names.size();
    for (const auto& z : h.result(n).representatives) {
      names.push_back("[" + to_string(z, gens) + "]");
      degrees.push_back(n);
      reps.push_back(z);
    }
  }
  first[static_cast<std::size_t>(cutoff) + 1] = names.size();
  FiniteGradedAlgebra e = FiniteGradedAlgebra::zero_table(names, degrees, 0);
  e.window = cutoff;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      int d = degrees[i] + degrees[j];
      if (d > cutoff) continue;
      NcPoly prod = dg.algebra().multiply(reps[i], reps[j]);
      Vec c = h.class_coords(prod, d);
      SparseVec& slot = e.product(i, j);
      for (std::size_t t = 0; t < c.size(); ++t)
        if (!c[t].is_zero()) slot.emplace_back(static_cast<Index>(first[static_cast<std::size_t>(d)] + t), c[t]);
    }
  return e;
}

namespace {

NcPoly evaluate_word(const DGAlgebra& dg, const Word& w, const std::vector<NcPoly>& images) {
  NcPoly v = NcPoly::unit();
  for (Letter l : w.letters) v = dg.algebra().multiply(v, images.at(l));
  return v;
}

NcPoly evaluate(const DGAlgebra& dg, const NcPoly& q, const std::vector<NcPoly>& images) {
  NcPoly out;
  for (const auto& [w, c] : q.terms()) out += evaluate_word(dg, w, images) * c;
  return out;
}

}  // namespace

PresentationCheck verify_presentation(const DGAlgebra& dg, const Presentation& candidate,
                                      const std::vector<NcPoly>& images, int cutoff) {
  PresentedAlgebra cand(candidate);
  const auto& cg = cand.generators();
  if (images.size() != cg.size()) throw SchemaError("expected one cocycle per candidate generator");
  DGCohomology h(dg);
  PresentationCheck rep;
  for (int n = 0; n <= cutoff; ++n) rep.dims.push_back(h.result(n).dim);

  for (std::size_t g = 0; g < cg.size(); ++g) {
    const NcPoly& z = dg.algebra().reduce(images[g]);
    if (!z.is_zero() && (!z.is_homogeneous(dg.generators()) || z.degree(dg.generators()) != cg.degrees[g])) {
      rep.failure = "image of '" + cg.names[g] + "' has the wrong degree";
      return rep;
    }
    if (cg.degrees[g] <= cutoff && !h.is_cocycle(z, cg.degrees[g])) {
      rep.failure = "image of '" + cg.names[g] + "' is not a cocycle";
      return rep;
    }
  }
  for (int n = 0; n <= cutoff; ++n) {
    std::size_t cd = cand.dim(n);
    if (cd != rep.dims[static_cast<std::size_t>(n)]) {
      rep.failure = "dimension mismatch";
      rep.mismatch_degree = n;
      rep.candidate_dim = cd;
      rep.cohomology_dim = rep.dims[static_cast<std::size_t>(n)];
      return rep;
    }
  }
  for (const auto& r : candidate.relations) {
    int d = r.degree(cg);
    if (d > cutoff) continue;
    NcPoly v = evaluate(dg, r, images);
    if (!h.is_coboundary(v, d)) {
      rep.failure = "relation '" + to_string(r, cg) + "' does not map to a coboundary";
      return rep;
    }
  }
  for (int n = 0; n <= cutoff; ++n) {
    std::size_t hn = rep.dims[static_cast<std::size_t>(n)];
    if (hn == 0) continue;
    std::vector<Vec> rows;
    for (const Word& w : cand.normal_words(n)) rows.push_back(h.class_coords(evaluate_word(dg, w, images), n));
    if (rref(QMatrix::from_rows(rows, hn)).rank != hn) {
      rep.failure = "induced map is not surjective";
      rep.mismatch_degree = n;
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

}  // namespace dgcy
