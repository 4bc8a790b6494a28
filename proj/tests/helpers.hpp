#pragma once

#include <map>
#include <string>
#include <vector>

#include "dgcy/dgcore.hpp"
#include "dgcy/semifree.hpp"

namespace testing_helpers {

inline dgcy::Presentation pres(const std::vector<std::string>& names, const std::vector<std::string>& rels,
                               std::vector<int> degrees = {}) {
  dgcy::Presentation p;
  p.generators.names = names;
  p.generators.degrees = degrees.empty() ? std::vector<int>(names.size(), 1) : std::move(degrees);
  for (const auto& r : rels) p.relations.push_back(dgcy::parse_poly(r, p.generators));
  return p;
}

inline dgcy::DGAlgebra dg(const std::vector<std::string>& names, const std::vector<std::string>& rels,
                          const std::map<std::string, std::string>& d) {
  dgcy::Presentation p = pres(names, rels);
  std::vector<dgcy::NcPoly> images(names.size());
  for (const auto& [g, e] : d) images.at(static_cast<std::size_t>(p.generators.index_of(g))) = dgcy::parse_poly(e, p.generators);
  return dgcy::DGAlgebra(p, images);
}

inline dgcy::DGAlgebra example1() {
  return dg({"x1", "x2", "x3"}, {}, {{"x1", "x1^2"}, {"x2", "x2*x1"}, {"x3", "x1*x3"}});
}
inline dgcy::DGAlgebra ex3() { return dg({"x1", "x2", "x3"}, {}, {{"x1", "x2*x3"}}); }
inline dgcy::DGAlgebra ex2() {
  return dg({"x1", "x2", "x3"}, {}, {{"x1", "x3^2"}, {"x2", "x1*x3 + x3*x1"}});
}
inline dgcy::DGAlgebra ex5() { return dg({"x1", "x2", "x3"}, {}, {{"x1", "x2*x3 + x3*x2"}}); }
inline dgcy::DGAlgebra downup() {
  return dg({"x", "y"}, {"x^2*y - y*x^2", "x*y^2 - y^2*x"}, {{"x", "y^2"}});
}
inline dgcy::DGAlgebra cubic_as() {
  return dg({"x", "y"}, {"x*y^2 + y*x*y + y^2*x", "y*x^2 + x*y*x + x^2*y"}, {});
}

struct Gen {
  std::string name;
  int degree;
};
using Terms = std::vector<std::pair<std::string, std::string>>;  // (coefficient, basis element)

inline dgcy::SemiFreeModule module(const dgcy::DGAlgebra& a, const std::vector<Gen>& basis,
                                   const std::map<std::string, Terms>& d) {
  dgcy::SemiFreeModule f;
  for (const auto& g : basis) f.add(g.name, g.degree, {});
  for (const auto& [src, terms] : d) {
    auto& row = f.diff.at(static_cast<std::size_t>(f.index_of(src)));
    for (const auto& [c, t] : terms) row.emplace_back(static_cast<std::size_t>(f.index_of(t)), dgcy::parse_poly(c, a.generators()));
  }
  return f;
}

inline dgcy::HomMap hom(const dgcy::DGAlgebra& a, const dgcy::SemiFreeModule& f, int degree,
                        const std::map<std::string, Terms>& m) {
  dgcy::HomMap h = dgcy::HomMap::zero(f.size(), degree);
  for (const auto& [src, terms] : m)
    for (const auto& [c, t] : terms)
      h.entries.at(static_cast<std::size_t>(f.index_of(src))).at(static_cast<std::size_t>(f.index_of(t))) +=
          dgcy::parse_poly(c, a.generators());
  return h;
}

// Reference resolutions for the corpus examples.
inline dgcy::SemiFreeModule example1_resolution(const dgcy::DGAlgebra& a) {
  return module(a, {{"1", 0}, {"Se", 1}}, {{"Se", {{"x2*x3", "1"}}}});
}
inline dgcy::SemiFreeModule ex3_resolution(const dgcy::DGAlgebra& a) {
  return module(a, {{"1", 0}, {"Se_x2", 0}, {"Se_x3", 0}, {"S2e_r", 0}},
                {{"Se_x2", {{"x2", "1"}}}, {"Se_x3", {{"x3", "1"}}}, {"S2e_r", {{"x2", "Se_x3"}, {"x1", "1"}}}});
}
inline dgcy::SemiFreeModule ex2_resolution(const dgcy::DGAlgebra& a) {
  return module(a, {{"1", 0}, {"Se_x3", 0}, {"Se_z", 0}, {"Se_r", 0}},
                {{"Se_x3", {{"x3", "1"}}},
                 {"Se_z", {{"x1", "1"}, {"x3", "Se_x3"}}},
                 {"Se_r", {{"x2", "1"}, {"x1", "Se_x3"}, {"x3", "Se_z"}}}});
}
inline dgcy::SemiFreeModule cubic_as_resolution(const dgcy::DGAlgebra& a) {
  return module(a, {{"1", 0}, {"Se_x", 0}, {"Se_y", 0}, {"S2e_r1", 1}, {"S2e_r2", 1}, {"S3e_w", 1}},
                {{"Se_x", {{"x", "1"}}},
                 {"Se_y", {{"y", "1"}}},
                 {"S2e_r1", {{"x*y + y*x", "Se_y"}, {"y^2", "Se_x"}}},
                 {"S2e_r2", {{"y*x + x*y", "Se_x"}, {"x^2", "Se_y"}}},
                 {"S3e_w", {{"x", "S2e_r1"}, {"y", "S2e_r2"}}}});
}
inline dgcy::SemiFreeModule downup_resolution(const dgcy::DGAlgebra& a) {
  return module(a, {{"1", 0}, {"Se_y", 0}, {"Se_z", 0}, {"Se_x2", 1}, {"Se_t", 1}, {"Se_r", 1}},
                {{"Se_y", {{"y", "1"}}},
                 {"Se_z", {{"x", "1"}, {"y", "Se_y"}}},
                 {"Se_x2", {{"x^2", "1"}}},
                 {"Se_t", {{"x^2", "Se_y"}, {"y", "Se_x2"}}},
                 {"Se_r", {{"y", "Se_t"}, {"x", "Se_x2"}, {"x^2", "Se_z"}}}});
}

}  // namespace testing_helpers
