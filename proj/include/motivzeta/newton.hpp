#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motivzeta/poly.hpp"
#include "motivzeta/zeta.hpp"

namespace motivzeta {

using IVec = std::vector<std::int64_t>;

struct Facet {
  IVec normal;          // primitive, nonnegative
  std::int64_t level;   // min of normal . x over the polyhedron
  std::vector<std::size_t> points;  // support indices on the facet
};

struct NewtonFace {
  std::vector<std::size_t> points;   // support indices, sorted
  int dim = 0;
  std::vector<std::size_t> facets;   // facets containing the face
  Poly poly;                         // f_tau
};

struct NewtonData {
  Poly f;
  std::vector<IVec> support;
  std::vector<Facet> facets;
  std::vector<NewtonFace> faces;     // compact faces only

  std::size_t dim() const { return f.nvars(); }
  std::int64_t m(const IVec& k) const;  // supporting function
  std::vector<IVec> rays(const NewtonFace& t) const;
  // Compact face whose open dual cone contains the strictly positive vector k.
  const NewtonFace& trace(const IVec& k) const;
};

NewtonData build_newton(const Poly& f);

// Sum over lattice points k of the open cone sigma(tau) of L^{-|k|} T^{m(k)}.
RationalZeta cone_generating_function(const NewtonData& nd, const NewtonFace& face);

// Non-degeneracy on every compact face. Brieskorn-shaped input is always
// non-degenerate; otherwise only d <= 2 is decided.
bool check_nondegenerate(const Poly& f);

// Classes [(R*)^d \ f_tau^{-1}(0), f_tau] and [f_tau^{-1}(0) ∩ (R*)^d].
MotClass face_complement_class(const NewtonData& nd, const NewtonFace& face);
ASClass face_zero_class(const NewtonData& nd, const NewtonFace& face);

RationalZeta guibert_zeta(const Poly& f, bool assume_nondegenerate = false);
MilnorFiber milnor_fiber_newton(const Poly& f, bool assume_nondegenerate = false);
// The face-sum formula with signs (-1)^{d - dim tau}, kept for comparison.
MotClass milnor_face_sum(const Poly& f);

}  // namespace motivzeta
