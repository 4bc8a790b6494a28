#include "dgcy/semifree.hpp"

#include <algorithm>

#include "dgcy/errors.hpp"

namespace dgcy {
namespace {

SparseVec from_map(std::map<Index, Rational>& acc) {
  SparseVec v;
  for (auto& [i, c] : acc)
    if (!c.is_zero()) v.emplace_back(i, std::move(c));
  return v;
}

int sign_pow(long long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

void check_semifree(const DGAlgebra& dg, const SemiFreeModule& f) {
  const auto& gens = dg.generators();
  const auto& alg = dg.algebra();
  const std::size_t n = f.size();
  if (f.degrees.size() != n || f.diff.size() != n) throw SchemaError("semi-free module fields have inconsistent lengths");
  if (f.augmentation >= n) throw SchemaError("augmentation index out of range");
  if (f.degrees[f.augmentation] != 0) throw SchemaError("augmentation generator must have degree 0");

  std::vector<std::vector<std::pair<std::size_t, NcPoly>>> d(n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, c] : f.diff[j]) {
      NcPoly r = alg.reduce(c);
      if (r.is_zero()) continue;
      if (i >= n) throw SchemaError("differential of '" + f.names[j] + "' names an unknown basis element");
      d[j].emplace_back(i, std::move(r));
    }
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, c] : d[j])
      if (i >= j)
        throw NotTriangular("d(" + f.names[j] + ") involves " + f.names[i] + ", which is not earlier in the basis");
  if (!d[f.augmentation].empty()) throw NotAResolution("augmentation generator must be a cocycle");
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, c] : d[j])
      if (!c.coefficient(Word{}).is_zero())
        throw NotMinimal("coefficient " + to_string(c, gens) + " of " + f.names[i] + " in d(" + f.names[j] +
                         ") has a constant term");
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, c] : d[j])
      if (!c.is_homogeneous(gens) || c.degree(gens) + f.degrees[i] != f.degrees[j] + 1)
        throw DegreeMismatch("term " + to_string(c, gens) + "*" + f.names[i] + " in d(" + f.names[j] +
                             ") does not have degree " + std::to_string(f.degrees[j] + 1));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<NcPoly> acc(n);
    for (const auto& [i, c] : d[j]) {
      acc[i] += dg.diff(c);
      Rational s = sign_pow(c.degree(gens));
      for (const auto& [l, c2] : d[i]) acc[l] += alg.multiply(c, c2) * s;
    }
    for (std::size_t l = 0; l < n; ++l)
      if (!acc[l].is_zero())
        throw DifferentialNotSquareZero("d(d(" + f.names[j] + ")) has coefficient " + to_string(acc[l], gens) +
                                        " on " + f.names[l]);
  }
}

bool check_resolution(const DGAlgebra& dg, const SemiFreeModule& f, int cutoff) {
  ModuleComplex c(dg, f);
  for (int n = std::min(0, f.min_degree()); n <= cutoff; ++n) {
    ComplexCohomology h = c.cohomology(n, n == 0);
    if (n != 0) {
      if (h.dim != 0) return false;
      continue;
    }
    if (h.dim != 1) return false;
    Index unit_slot = static_cast<Index>(c.offset(0, f.augmentation));
    if (sparse_get(h.representatives[0], unit_slot).is_zero()) return false;
  }
  return true;
}

ResolutionResult resolve_trivial_partial(const DGAlgebra& dg, int cutoff, const ResolveOptions& opts) {
  const int max_stages = opts.max_stages < 0 ? 2 * cutoff + 2 : opts.max_stages;
  ResolutionResult res;
  res.module = SemiFreeModule::rank_one();
  auto complex = std::make_unique<ModuleComplex>(dg, res.module);
  for (int n = 1; n <= cutoff; ++n) {
    while (true) {
      ComplexCohomology h = complex->cohomology(n, true);
      if (h.dim == 0) break;
      if (res.stages + 1 > max_stages) {
        res.stop_reason = "stage budget of " + std::to_string(max_stages) + " exhausted in degree " + std::to_string(n);
        return res;
      }
      if (res.module.size() + h.dim > opts.max_generators) {
        res.stop_reason = "generator budget of " + std::to_string(opts.max_generators) + " exhausted in degree " +
                          std::to_string(n);
        return res;
      }
      ++res.stages;
      for (std::size_t t = 0; t < h.representatives.size(); ++t) {
        std::vector<NcPoly> parts = complex->to_components(n, h.representatives[t]);
        std::vector<std::pair<std::size_t, NcPoly>> d;
        for (std::size_t i = 0; i < parts.size(); ++i)
          if (!parts[i].is_zero()) d.emplace_back(i, std::move(parts[i]));
        res.module.add("g" + std::to_string(res.stages) + "_" + std::to_string(t + 1), n - 1, std::move(d));
      }
      complex = std::make_unique<ModuleComplex>(dg, res.module);
    }
  }
  res.complete = true;
  return res;
}

SemiFreeModule resolve_trivial(const DGAlgebra& dg, int cutoff, const ResolveOptions& opts) {
  ResolutionResult r = resolve_trivial_partial(dg, cutoff, opts);
  if (!r.complete) throw CutoffTooSmall("resolution not certified up to degree " + std::to_string(cutoff) + ": " + r.stop_reason);
  return std::move(r.module);
}

bool is_koszul(const SemiFreeModule& f) {
  return std::all_of(f.degrees.begin(), f.degrees.end(), [](int d) { return d == 0; });
}

SmoothnessReport smoothness_report(const DGAlgebra& dg, int cutoff, const ResolveOptions& opts) {
  SmoothnessReport rep;
  int top = 2;
  const auto& gens = dg.generators();
  for (const auto& r : dg.presentation().relations) top = std::max(top, r.degree(gens));
  for (const auto& d : dg.diff_images())
    if (!d.is_zero()) top = std::max(top, d.degree(gens));
  rep.margin = top + 1;
  rep.certified_to = cutoff;
  ResolutionResult r = resolve_trivial_partial(dg, cutoff, opts);
  rep.resolution_complete = r.complete;
  rep.basis_size = r.module.size();
  bool quiet_top = std::all_of(r.module.degrees.begin(), r.module.degrees.end(),
                               [&](int d) { return d + 1 <= cutoff - rep.margin; });
  rep.finite_basis_found = r.complete && quiet_top;
  rep.resolution = std::move(r.module);
  return rep;
}

// ---------------------------------------------------------------------------

HomMap HomMap::zero(std::size_t n, int degree) {
  HomMap f;
  f.degree = degree;
  f.entries.assign(n, std::vector<NcPoly>(n));
  return f;
}

HomMap HomMap::identity(std::size_t n) {
  HomMap f = zero(n, 0);
  for (std::size_t i = 0; i < n; ++i) f.entries[i][i] = NcPoly::unit();
  return f;
}

bool HomMap::is_zero() const {
  for (const auto& row : entries)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

HomComplex::HomComplex(const DGAlgebra& dg, SemiFreeModule f, int cutoff)
    : dg_(dg), f_(std::move(f)), cutoff_(cutoff) {
  const std::size_t n = f_.size();
  const auto& gens = dg_.generators();
  coeffs_.resize(n);
  inverse_.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, c] : f_.diff[j]) {
      NcPoly r = dg_.algebra().reduce(c);
      if (r.is_zero()) continue;
      int d = r.degree(gens);
      SparseVec cc = dg_.algebra().coords(r, d);
      coeffs_[j].emplace_back(i, d, cc);
      inverse_[i].emplace_back(j, d, std::move(cc));
    }
}

const std::vector<std::size_t>& HomComplex::offsets(int k) const {
  auto it = offsets_.find(k);
  if (it != offsets_.end()) return it->second;
  const std::size_t n = f_.size();
  std::vector<std::size_t> off(n * n + 1, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      int m = entry_degree(j, i, k);
      if (m > cutoff_)
        throw WindowExceeded("Hom degree " + std::to_string(k) + " needs algebra degree " + std::to_string(m) +
                             " beyond cutoff " + std::to_string(cutoff_));
      off[j * n + i + 1] = off[j * n + i] + dg_.algebra().dim(m);
    }
  return offsets_.emplace(k, std::move(off)).first->second;
}

std::size_t HomComplex::dim(int k) const { return offsets(k).back(); }

SparseVec HomComplex::to_coords(const HomMap& f) const {
  const std::size_t n = f_.size();
  if (f.entries.size() != n) throw InvariantViolation("map has the wrong number of rows");
  const auto& off = offsets(f.degree);
  SparseVec v;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const NcPoly& e = f.entries[j].at(i);
      if (e.is_zero()) continue;
      int m = entry_degree(j, i, f.degree);
      if (m < 0) throw DegreeMismatch("map entry (" + f_.names[j] + ", " + f_.names[i] + ") must vanish");
      for (const auto& [w, c] : dg_.algebra().coords(e, m)) v.emplace_back(static_cast<Index>(off[j * n + i] + w), c);
    }
  return v;
}

HomMap HomComplex::from_coords(int k, const SparseVec& v) const {
  const std::size_t n = f_.size();
  const auto& off = offsets(k);
  HomMap f = HomMap::zero(n, k);
  for (const auto& [g, c] : v) {
    auto it = std::upper_bound(off.begin(), off.end(), static_cast<std::size_t>(g));
    std::size_t slot = static_cast<std::size_t>(it - off.begin()) - 1;
    std::size_t j = slot / n, i = slot % n;
    const auto& words = dg_.algebra().normal_words(entry_degree(j, i, k));
    f.entries[j][i].add_term(words.at(g - off[slot]), c);
  }
  return f;
}

const SparseVec& HomComplex::image(int k, Index g) const {
  auto& slots = images_[k];
  if (slots.empty()) slots.resize(dim(k));
  auto& slot = slots.at(g);
  if (slot) return *slot;
  const std::size_t n = f_.size();
  const auto& off = offsets(k);
  const auto& off1 = offsets(k + 1);
  auto it = std::upper_bound(off.begin(), off.end(), static_cast<std::size_t>(g));
  std::size_t s = static_cast<std::size_t>(it - off.begin()) - 1;
  std::size_t j0 = s / n, i0 = s % n;
  Index a = static_cast<Index>(g - off[s]);
  int m = entry_degree(j0, i0, k);
  const auto& alg = dg_.algebra();
  SparseVec unit{{a, Rational(1)}};
  std::map<Index, Rational> acc;

  for (const auto& [t, c] : dg_.diff_table(m)[a]) acc[static_cast<Index>(off1[j0 * n + i0] + t)] += c;
  for (const auto& [l, dd, cc] : coeffs_[i0]) {
    Rational sgn = sign_pow(m);
    for (const auto& [t, c] : alg.multiply_coords(m, unit, dd, cc)) acc[static_cast<Index>(off1[j0 * n + l] + t)] += sgn * c;
  }
  for (const auto& [j, dd, cc] : inverse_[j0]) {
    Rational sgn = -sign_pow(k) * sign_pow(static_cast<long long>(k) * dd);
    for (const auto& [t, c] : alg.multiply_coords(dd, cc, m, unit)) acc[static_cast<Index>(off1[j * n + i0] + t)] += sgn * c;
  }
  slot = from_map(acc);
  return *slot;
}

HomMap HomComplex::differential(const HomMap& f) const {
  SparseVec out;
  for (const auto& [g, c] : to_coords(f)) sparse_axpy(out, c, image(f.degree, g));
  return from_coords(f.degree + 1, out);
}

bool HomComplex::is_cocycle(const HomMap& f) const { return differential(f).is_zero(); }

const Echelon& HomComplex::coboundaries(int k) const {
  auto it = coboundaries_.find(k);
  if (it != coboundaries_.end()) return *it->second;
  auto e = std::make_unique<Echelon>();
  std::size_t prev = dim(k - 1);
  for (std::size_t g = 0; g < prev; ++g) e->insert(image(k - 1, static_cast<Index>(g)));
  return *coboundaries_.emplace(k, std::move(e)).first->second;
}

bool HomComplex::is_coboundary(const HomMap& f) const { return coboundaries(f.degree).reduce(to_coords(f)).empty(); }

const HomCohomology& HomComplex::cohomology(int k) const {
  auto it = cohomology_.find(k);
  if (it != cohomology_.end()) return it->second;
  HomCohomology res;
  res.degree = k;
  Echelon b = coboundaries(k);
  SparseVec id;
  if (k == 0) {
    id = to_coords(HomMap::identity(f_.size()));
    if (!b.insert(id)) throw InvariantViolation("identity map is a coboundary");
  }
  std::vector<Index> unknowns;
  for (std::size_t g = 0; g < dim(k); ++g)
    if (!b.has_pivot(static_cast<Index>(g))) unknowns.push_back(static_cast<Index>(g));
  std::map<Index, SparseVec> equations;
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (const auto& [t, c] : image(k, unknowns[u])) equations[t].emplace_back(static_cast<Index>(u), c);
  Echelon d;
  for (auto& [t, row] : equations) d.insert(std::move(row));
  Echelon reps;
  for (const SparseVec& kv : d.kernel(static_cast<Index>(unknowns.size()))) {
    SparseVec z;
    for (const auto& [u, c] : kv) z.emplace_back(unknowns[u], c);
    reps.insert(std::move(z));
  }
  if (k == 0) res.representatives.push_back(HomMap::identity(f_.size()));
  for (const auto& z : reps.rref_rows()) res.representatives.push_back(from_coords(k, z));
  res.dim = res.representatives.size();

  const Echelon& b0 = coboundaries(k);
  QMatrix m(res.dim, dim(k));
  for (std::size_t t = 0; t < res.dim; ++t)
    for (const auto& [g, c] : b0.reduce(to_coords(res.representatives[t]))) m(t, g) = c;
  reduced_reps_[k] = std::move(m);
  return cohomology_.emplace(k, std::move(res)).first->second;
}

Vec HomComplex::class_coords(const HomMap& f) const {
  const HomCohomology& h = cohomology(f.degree);
  SparseVec r = coboundaries(f.degree).reduce(to_coords(f));
  if (h.dim == 0) {
    if (!r.empty()) throw NotACocycle("map of degree " + std::to_string(f.degree) + " is not a cocycle");
    return {};
  }
  Vec x;
  if (!solve_left(reduced_reps_.at(f.degree), sparse_to_dense(r, dim(f.degree)), x))
    throw NotACocycle("map of degree " + std::to_string(f.degree) + " is not a cocycle");
  return x;
}

HomMap HomComplex::compose(const HomMap& g, const HomMap& f) const {
  const std::size_t n = f_.size();
  HomMap out = HomMap::zero(n, f.degree + g.degree);
  const auto& alg = dg_.algebra();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const NcPoly& a = f.entries[j][i];
      if (a.is_zero()) continue;
      Rational s = sign_pow(static_cast<long long>(g.degree) * entry_degree(j, i, f.degree));
      for (std::size_t l = 0; l < n; ++l) {
        const NcPoly& b = g.entries[i][l];
        if (b.is_zero()) continue;
        out.entries[j][l] += alg.multiply(a, b) * s;
      }
    }
  return out;
}

HomMap HomComplex::product(const HomMap& a, const HomMap& b) const {
  HomMap p = compose(b, a);
  if (sign_pow(static_cast<long long>(a.degree) * b.degree) < 0)
    for (auto& row : p.entries)
      for (auto& e : row) e *= Rational(-1);
  return p;
}

HomCohomology hom_cohomology(const DGAlgebra& dg, const SemiFreeModule& f, int k, int cutoff) {
  return HomComplex(dg, f, cutoff).cohomology(k);
}

namespace {

ExtAlgebra assemble(const HomComplex& hom, std::vector<std::string> names, std::vector<HomMap> maps,
                    const std::map<int, QMatrix>& to_basis, const std::map<int, std::vector<std::size_t>>& slots,
                    std::size_t unit) {
  std::vector<int> degrees;
  for (const auto& m : maps) degrees.push_back(m.degree);
  ExtAlgebra ext;
  ext.algebra = FiniteGradedAlgebra::zero_table(std::move(names), degrees, unit);
  int lowest = hom.module().min_degree() - hom.module().max_degree();
  for (std::size_t a = 0; a < maps.size(); ++a)
    for (std::size_t b = 0; b < maps.size(); ++b) {
      int k = degrees[a] + degrees[b];
      if (k < lowest) continue;
      HomMap p = hom.product(maps[a], maps[b]);
      Vec c = hom.class_coords(p);
      if (c.empty()) continue;
      auto tb = to_basis.find(k);
      if (tb == to_basis.end()) throw InvariantViolation("product lands in a degree without basis classes");
      SparseVec& slot = ext.algebra.product(a, b);
      const auto& idx = slots.at(k);
      for (std::size_t t = 0; t < idx.size(); ++t) {
        Rational s;
        for (std::size_t u = 0; u < c.size(); ++u) s += c[u] * tb->second(u, t);
        if (!s.is_zero()) slot.emplace_back(static_cast<Index>(idx[t]), s);
      }
      std::sort(slot.begin(), slot.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }
  ext.cocycle_maps = std::move(maps);
  return ext;
}

}  // namespace

ExtAlgebra ext_algebra(const DGAlgebra& dg, const SemiFreeModule& f, int cutoff) {
  HomComplex hom(dg, f, cutoff);
  std::vector<std::string> names;
  std::vector<HomMap> maps;
  std::map<int, QMatrix> to_basis;
  std::map<int, std::vector<std::size_t>> slots;
  int lowest = f.min_degree() - f.max_degree();
  for (int k = 0; k >= lowest; --k) {
    const HomCohomology& h = hom.cohomology(k);
    if (h.dim == 0) continue;
    to_basis[k] = QMatrix::identity(h.dim);
    for (const auto& r : h.representatives) {
      slots[k].push_back(maps.size());
      names.push_back("e" + std::to_string(maps.size()));
      maps.push_back(r);
    }
  }
  return assemble(hom, std::move(names), std::move(maps), to_basis, slots, 0);
}

ExtAlgebra ext_algebra_in_basis(const DGAlgebra& dg, const SemiFreeModule& f, int cutoff,
                                const std::vector<std::string>& names, const std::vector<HomMap>& basis) {
  if (names.size() != basis.size()) throw SchemaError("basis names and maps differ in length");
  HomComplex hom(dg, f, cutoff);
  std::map<int, std::vector<std::size_t>> slots;
  std::map<int, std::vector<Vec>> rows;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (!hom.is_cocycle(basis[a])) throw NotACocycle("supplied map '" + names[a] + "' is not a cocycle");
    slots[basis[a].degree].push_back(a);
    rows[basis[a].degree].push_back(hom.class_coords(basis[a]));
  }
  int lowest = f.min_degree() - f.max_degree();
  for (int k = 0; k >= lowest; --k) {
    std::size_t h = hom.cohomology(k).dim;
    std::size_t given = slots.count(k) ? slots[k].size() : 0;
    if (h != given)
      throw SchemaError("supplied basis has " + std::to_string(given) + " classes in degree " + std::to_string(k) +
                        ", cohomology has " + std::to_string(h));
  }
  std::map<int, QMatrix> to_basis;
  for (auto& [k, r] : rows) {
    if (hom.cohomology(k).dim == 0) throw SchemaError("supplied map '" + names[slots[k][0]] + "' is a coboundary");
    QMatrix m = QMatrix::from_rows(r, r.size());
    try {
      to_basis[k] = inverse(m);
    } catch (const SingularMatrix&) {
      throw SchemaError("supplied maps of degree " + std::to_string(k) + " are linearly dependent in cohomology");
    }
  }
  std::optional<std::size_t> unit;
  for (std::size_t a : slots[0]) {
    Vec c = hom.class_coords(basis[a]);
    bool is_id = c[0].is_one() && std::all_of(c.begin() + 1, c.end(), [](const Rational& q) { return q.is_zero(); });
    if (is_id) unit = a;
  }
  if (!unit) throw UnitViolation("supplied basis does not contain the class of the identity");
  return assemble(hom, names, basis, to_basis, slots, *unit);
}

}  // namespace dgcy
