#include "motivzeta/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "motivzeta/errors.hpp"
#include "motivzeta/realroots.hpp"

namespace motivzeta {

namespace {

using i64 = std::int64_t;

i64 dot(const IVec& a, const IVec& b) {
  i64 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

i64 total(const IVec& a) { return std::accumulate(a.begin(), a.end(), i64{0}); }

IVec sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IVec primitive(IVec v) {
  i64 g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// Fraction-free determinant.
BigInt det(std::vector<std::vector<BigInt>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Vector orthogonal to d-1 vectors in Z^d (zero if they are dependent).
IVec orthogonal(const std::vector<IVec>& rows, std::size_t d) {
  IVec n(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<std::vector<BigInt>> m;
    for (const auto& r : rows) {
      std::vector<BigInt> row;
      for (std::size_t c = 0; c < d; ++c)
        if (c != j) row.emplace_back(static_cast<long>(r[c]));
      m.push_back(std::move(row));
    }
    BigInt v = det(std::move(m));
    if (j % 2) v = -v;
    n[j] = v.get_si();
  }
  return n;
}

std::size_t rank(std::vector<IVec> rows) {
  std::vector<std::vector<BigRat>> m;
  for (const auto& r : rows) {
    std::vector<BigRat> q;
    for (auto x : r) q.emplace_back(static_cast<long>(x));
    m.push_back(std::move(q));
  }
  std::size_t rk = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rk < m.size(); ++c) {
    std::size_t p = rk;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rk], m[p]);
    for (std::size_t i = rk + 1; i < m.size(); ++i) {
      BigRat f = m[i][c] / m[rk][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rk][j];
    }
    ++rk;
  }
  return rk;
}

IVec unit_vec(std::size_t d, std::size_t j) {
  IVec e(d, 0);
  e[j] = 1;
  return e;
}

// Calls fn on every size-k subset of {0..n-1}.
template <class Fn>
void subsets(std::size_t n, std::size_t k, Fn fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// ---- cones ----

// Half-open simplicial cone {sum lambda_i r_i}: lambda_i > 0 where strict[i].
struct SimplexCone {
  std::vector<IVec> rays;
  std::vector<bool> strict;
};

// Row ops U with U * R diagonal after column ops; returns U and the diagonal.
void diagonalize(std::vector<std::vector<BigInt>> r, std::vector<std::vector<BigInt>>& U,
                 std::vector<BigInt>& diag) {
  std::size_t t = r.size(), d = r[0].size();
  U.assign(t, std::vector<BigInt>(t, 0));
  for (std::size_t i = 0; i < t; ++i) U[i][i] = 1;
  auto row_swap = [&](std::size_t a, std::size_t b) {
    std::swap(r[a], r[b]);
    std::swap(U[a], U[b]);
  };
  auto row_axpy = [&](std::size_t dst, std::size_t src, const BigInt& q) {  // dst -= q*src
    for (std::size_t j = 0; j < d; ++j) r[dst][j] -= q * r[src][j];
    for (std::size_t j = 0; j < t; ++j) U[dst][j] -= q * U[src][j];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (auto& row : r) std::swap(row[a], row[b]);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (auto& row : r) row[dst] -= q * row[src];
  };
  diag.clear();
  for (std::size_t k = 0; k < t; ++k) {
    while (true) {
      // Smallest nonzero entry of the remaining block goes to (k, k).
      std::size_t bi = t, bj = d;
      for (std::size_t i = k; i < t; ++i)
        for (std::size_t j = k; j < d; ++j)
          if (r[i][j] != 0 && (bi == t || abs(r[i][j]) < abs(r[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == t) throw InvalidGerm("cone generators are linearly dependent");
      row_swap(k, bi);
      col_swap(k, bj);
      bool clean = true;
      for (std::size_t i = k + 1; i < t; ++i) {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), r[i][k].get_mpz_t(), r[k][k].get_mpz_t());
        row_axpy(i, k, q);
        if (r[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < d; ++j) {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), r[k][j].get_mpz_t(), r[k][k].get_mpz_t());
        col_axpy(j, k, q);
        if (r[k][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(r[k][k]));
  }
}

// Lattice points of the half-open parallelepiped, with their coordinates.
struct BoxPoint {
  IVec p;
  std::vector<BigRat> lambda;
};

std::vector<BoxPoint> box_points(const SimplexCone& c) {
  std::size_t t = c.rays.size(), d = c.rays[0].size();
  std::vector<std::vector<BigInt>> R(t, std::vector<BigInt>(d));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < d; ++j) R[i][j] = static_cast<long>(c.rays[i][j]);
  std::vector<std::vector<BigInt>> U;
  std::vector<BigInt> diag;
  diagonalize(R, U, diag);
  std::vector<BoxPoint> out;
  std::vector<BigInt> idx(t, 0);
  while (true) {
    std::vector<BigRat> lambda(t, 0);
    for (std::size_t i = 0; i < t; ++i) {
      BigRat mu(idx[i], diag[i]);
      for (std::size_t j = 0; j < t; ++j) lambda[j] += mu * BigRat(U[i][j]);
    }
    for (std::size_t j = 0; j < t; ++j) {
      lambda[j].canonicalize();
      BigInt fl;
      mpz_fdiv_q(fl.get_mpz_t(), lambda[j].get_num_mpz_t(), lambda[j].get_den_mpz_t());
      lambda[j] -= fl;
      if (lambda[j] == 0 && c.strict[j]) lambda[j] = 1;
    }
    IVec p(d, 0);
    for (std::size_t j = 0; j < d; ++j) {
      BigRat s = 0;
      for (std::size_t i = 0; i < t; ++i) s += lambda[i] * BigRat(R[i][j]);
      if (s.get_den() != 1) throw InvalidGerm("parallelepiped point is not integral");
      p[j] = s.get_num().get_si();
    }
    out.push_back({std::move(p), std::move(lambda)});
    std::size_t i = 0;
    while (i < t && ++idx[i] == diag[i]) idx[i++] = 0;
    if (i == t) break;
  }
  return out;
}

IVec cross(const IVec& a, const IVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

i64 det3(const IVec& a, const IVec& b, const IVec& c) { return dot(a, cross(b, c)); }

// Sign of n . y for y = (sum of rays) + eps e1 + eps^2 e2 + ..., eps -> 0+.
int perturbed_sign(const IVec& n, const IVec& axis) {
  i64 v = dot(n, axis);
  if (v) return v > 0 ? 1 : -1;
  for (auto x : n)
    if (x) return x > 0 ? 1 : -1;
  return 0;
}

// Disjoint half-open simplicial cones covering the relative interior of cone(rays).
std::vector<SimplexCone> decompose_open_cone(std::vector<IVec> rays, std::size_t d) {
  std::size_t t = rank(rays);
  if (rays.size() == t) return {SimplexCone{rays, std::vector<bool>(t, true)}};
  if (d != 3 || t != 3)
    throw UnsupportedDimension("non-simplicial dual cone in dimension " + std::to_string(d));
  std::sort(rays.begin(), rays.end());
  IVec axis(3, 0);
  for (const auto& r : rays)
    for (int j = 0; j < 3; ++j) axis[j] += r[j];
  const IVec r0 = rays[0];
  std::vector<IVec> plus, minus;
  for (std::size_t i = 1; i < rays.size(); ++i)
    (det3(axis, r0, rays[i]) >= 0 ? plus : minus).push_back(rays[i]);
  auto ccw = [&axis](const IVec& a, const IVec& b) { return det3(axis, a, b) > 0; };
  std::sort(plus.begin(), plus.end(), ccw);
  std::sort(minus.begin(), minus.end(), ccw);
  std::vector<IVec> cyc = plus;
  cyc.insert(cyc.end(), minus.begin(), minus.end());
  std::vector<SimplexCone> out;
  for (std::size_t i = 0; i + 1 < cyc.size(); ++i) {
    SimplexCone s{{r0, cyc[i], cyc[i + 1]}, std::vector<bool>(3, true)};
    for (int a = 0; a < 3; ++a) {
      IVec n = cross(s.rays[(a + 1) % 3], s.rays[(a + 2) % 3]);
      if (dot(n, s.rays[a]) < 0)
        for (auto& x : n) x = -x;
      bool boundary = std::all_of(rays.begin(), rays.end(), [&n](const IVec& r) { return dot(n, r) >= 0; });
      s.strict[a] = boundary || perturbed_sign(n, axis) < 0;
    }
    out.push_back(std::move(s));
  }
  return out;
}

Exponent to_exponent(const IVec& v) { return Exponent(v.begin(), v.end()); }

}  // namespace

// ---------------------------------------------------------------------------

std::int64_t NewtonData::m(const IVec& k) const {
  i64 best = dot(k, support[0]);
  for (const auto& p : support) best = std::min(best, dot(k, p));
  return best;
}

std::vector<IVec> NewtonData::rays(const NewtonFace& t) const {
  std::vector<IVec> r;
  for (auto i : t.facets) r.push_back(facets[i].normal);
  return r;
}

const NewtonFace& NewtonData::trace(const IVec& k) const {
  i64 mk = m(k);
  std::vector<std::size_t> pts;
  for (std::size_t i = 0; i < support.size(); ++i)
    if (dot(k, support[i]) == mk) pts.push_back(i);
  for (const auto& f : faces)
    if (f.points == pts) return f;
  throw InvalidGerm("vector has no compact trace face");
}

NewtonData build_newton(const Poly& f) {
  if (f.is_zero()) throw InvalidGerm("the zero polynomial has no Newton polyhedron");
  if (f.constant_term() != 0) throw InvalidGerm("germ has a nonzero constant term");
  NewtonData nd;
  nd.f = f;
  std::size_t d = f.nvars();
  for (const auto& [e, c] : f.terms()) nd.support.emplace_back(e.begin(), e.end());

  // Candidate normals: orthogonal to d-1 directions among edge differences and axes.
  std::set<IVec> pool;
  for (std::size_t i = 0; i < nd.support.size(); ++i)
    for (std::size_t j = i + 1; j < nd.support.size(); ++j) {
      IVec v = primitive(sub(nd.support[j], nd.support[i]));
      IVec w = v;
      for (auto& x : w) x = -x;
      pool.insert(std::max(v, w));
    }
  for (std::size_t j = 0; j < d; ++j) pool.insert(unit_vec(d, j));
  std::vector<IVec> dirs(pool.begin(), pool.end());
  std::set<IVec> normals;
  if (d == 1) {
    normals.insert(IVec{1});
  } else {
    subsets(dirs.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
      std::vector<IVec> rows;
      for (auto i : idx) rows.push_back(dirs[i]);
      IVec n = primitive(orthogonal(rows, d));
      bool pos = std::all_of(n.begin(), n.end(), [](i64 x) { return x >= 0; });
      bool neg = std::all_of(n.begin(), n.end(), [](i64 x) { return x <= 0; });
      if (pos == neg) return;  // zero vector or mixed signs
      if (neg)
        for (auto& x : n) x = -x;
      normals.insert(n);
    });
  }
  for (const auto& n : normals) {
    Facet fc{n, nd.m(n), {}};
    for (std::size_t i = 0; i < nd.support.size(); ++i)
      if (dot(n, nd.support[i]) == fc.level) fc.points.push_back(i);
    std::vector<IVec> span;
    for (auto i : fc.points) span.push_back(sub(nd.support[i], nd.support[fc.points[0]]));
    for (std::size_t j = 0; j < d; ++j)
      if (n[j] == 0) span.push_back(unit_vec(d, j));
    if (rank(span) == d - 1) nd.facets.push_back(std::move(fc));
  }

  // Faces are the nonempty intersections of facets.
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue;
  for (const auto& fc : nd.facets)
    if (seen.insert(fc.points).second) queue.push_back(fc.points);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& fc : nd.facets) {
      std::vector<std::size_t> both;
      std::set_intersection(queue[q].begin(), queue[q].end(), fc.points.begin(), fc.points.end(),
                            std::back_inserter(both));
      if (!both.empty() && seen.insert(both).second) queue.push_back(both);
    }
  for (const auto& pts : seen) {
    NewtonFace face;
    face.points = pts;
    IVec cover(d, 0);
    for (std::size_t i = 0; i < nd.facets.size(); ++i)
      if (std::includes(nd.facets[i].points.begin(), nd.facets[i].points.end(), pts.begin(), pts.end())) {
        face.facets.push_back(i);
        for (std::size_t j = 0; j < d; ++j) cover[j] += nd.facets[i].normal[j];
      }
    if (std::any_of(cover.begin(), cover.end(), [](i64 x) { return x == 0; })) continue;
    std::vector<IVec> span;
    for (auto i : pts) span.push_back(sub(nd.support[i], nd.support[pts[0]]));
    face.dim = static_cast<int>(rank(span));
    std::vector<Exponent> keep;
    for (auto i : pts) keep.push_back(to_exponent(nd.support[i]));
    face.poly = f.restricted(keep);
    nd.faces.push_back(std::move(face));
  }
  std::sort(nd.faces.begin(), nd.faces.end(), [](const NewtonFace& a, const NewtonFace& b) {
    return a.dim != b.dim ? a.dim > b.dim : a.points < b.points;
  });
  return nd;
}

RationalZeta cone_generating_function(const NewtonData& nd, const NewtonFace& face) {
  RationalZeta out;
  for (const auto& sc : decompose_open_cone(nd.rays(face), nd.dim())) {
    std::vector<i64> mr;
    for (const auto& r : sc.rays) mr.push_back(nd.m(r));
    for (const auto& bp : box_points(sc)) {
      SrTerm t;
      i64 lexp = -total(bp.p);
      i64 shift = nd.m(bp.p);
      for (std::size_t i = 0; i < sc.rays.size(); ++i) {
        i64 nu = total(sc.rays[i]);
        if (mr[i] == 0) {
          t.pureL.push_back(nu);
          continue;
        }
        bool full = bp.lambda[i] == 1;
        if (full) {
          lexp += nu;
          shift -= mr[i];
        }
        t.factors.push_back({nu, mr[i], full});
      }
      t.tshift = shift;
      t.coeff = MotClass(ScalarValue::L(lexp));
      out.add(std::move(t));
    }
  }
  return out;
}

bool check_nondegenerate(const Poly& f) {
  if (f.brieskorn_shape()) return true;
  std::size_t d = f.nvars();
  if (d > 2)
    throw UnsupportedDimension("non-degeneracy check needs at most 2 variables, got " +
                               std::to_string(d));
  NewtonData nd = build_newton(f);
  for (const auto& face : nd.faces) {
    if (face.dim != 1) continue;
    // f_tau = x^P0 h(x^delta) with h(s) = sum c_j s^j along the edge.
    IVec p0 = nd.support[face.points.front()];
    IVec p1 = nd.support[face.points.back()];
    IVec step = primitive(sub(p1, p0));
    i64 len = step[0] ? (p1[0] - p0[0]) / step[0] : (p1[1] - p0[1]) / step[1];
    std::vector<BigRat> h(static_cast<std::size_t>(len) + 1, 0);
    for (auto i : face.points) {
      IVec off = sub(nd.support[i], p0);
      i64 j = step[0] ? off[0] / step[0] : off[1] / step[1];
      h[static_cast<std::size_t>(j)] = BigRat(f.terms().at(to_exponent(nd.support[i])));
    }
    QPoly hp(h);
    QPoly g = gcd(hp, hp.derivative());
    if (g.degree() < 1) continue;
    for (auto& r : real_roots(g))
      if (sign_at(r, QPoly::x()) != 0) return false;
  }
  return true;
}

MotClass face_complement_class(const NewtonData& nd, const NewtonFace& face) {
  Poly c = face.poly.compressed();
  std::size_t missing = nd.dim() - c.nvars();
  return MotClass::face(c).scaled(ASClass::torus(static_cast<int>(missing)));
}

ASClass face_zero_class(const NewtonData&, const NewtonFace& face) { return ASClass::poly_zero(face.poly); }

RationalZeta guibert_zeta(const Poly& f, bool assume_nondegenerate) {
  NewtonData nd = build_newton(f);
  if (!assume_nondegenerate && !check_nondegenerate(f))
    throw DegenerateInput("polynomial is degenerate with respect to its Newton polyhedron");
  RationalZeta out;
  const SrFactor X{1, 1, true};
  for (const auto& face : nd.faces) {
    MotClass A = face_complement_class(nd, face);
    ASClass B = face_zero_class(nd, face);
    RationalZeta cone = cone_generating_function(nd, face);
    for (const auto& t : cone.terms()) {
      // Constant 1/(1 - L^{-c}) factors are folded into the coefficient so that
      // contributions from different faces merge.
      ScalarValue pl(1);
      for (auto c : t.pureL) pl /= ScalarValue(1) - ScalarValue::L(-c);
      SrTerm a{convolve(A, t.coeff).scaled(pl), t.tshift, t.factors, {}};
      out.add(a);
      if (!B.is_zero()) {
        SrTerm b{t.coeff.scaled(B).scaled(pl), t.tshift, t.factors, {}};
        b.factors.push_back(X);
        out.add(std::move(b));
      }
    }
  }
  return out;
}

MilnorFiber milnor_fiber_newton(const Poly& f, bool assume_nondegenerate) {
  return milnor_from_limit(guibert_zeta(f, assume_nondegenerate));
}

MotClass milnor_face_sum(const Poly& f) {
  NewtonData nd = build_newton(f);
  MotClass s;
  for (const auto& face : nd.faces) {
    MotClass term = face_complement_class(nd, face) - MotClass(face_zero_class(nd, face));
    if ((nd.dim() - static_cast<std::size_t>(face.dim)) % 2)
      s -= term;
    else
      s += term;
  }
  return -s;
}

}  // namespace motivzeta
