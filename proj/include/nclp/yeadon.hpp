// Copyright 2026 The nclp Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Separating maps T(x) = w B J(x): extraction of the triple (w, B, J),
// splitting J into its multiplicative and anti-multiplicative parts,
// classification, and generated isometries with a known triple.

#ifndef NCLP_YEADON_HPP_
#define NCLP_YEADON_HPP_

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nclp/algebra.hpp"
#include "nclp/config.hpp"
#include "nclp/lp_map.hpp"
#include "nclp/maps.hpp"
#include "nclp/random.hpp"
#include "nclp/schatten.hpp"

namespace nclp {

enum class Verdict { kDirect, kAntiDirect, kMixed, kNotSeparating };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kDirect:
      return "direct";
    case Verdict::kAntiDirect:
      return "anti-direct";
    case Verdict::kMixed:
      return "mixed";
    case Verdict::kNotSeparating:
      return "not-separating";
  }
  return "not-separating";
}

inline Verdict verdict_from_string(std::string_view s) {
  for (Verdict v : {Verdict::kDirect, Verdict::kAntiDirect, Verdict::kMixed, Verdict::kNotSeparating})
    if (to_string(v) == s) return v;
  throw structural_error("unknown verdict '" + std::string(s) + "'");
}

struct Check {
  std::string name;
  double defect = 0.0;
  bool pass = false;
};

struct JordanParts {
  Element e;  // central projection carrying the multiplicative part
  Element f;  // central projection carrying the anti-multiplicative part
  LpMap pi;     // J(.) e
  LpMap sigma;  // J(.) f
  std::vector<Element> central_projections;
};

struct YeadonTriple {
  Element w;
  Element b;
  LpMap j;
  Element e;
  Element f;
  LpMap pi;
  LpMap sigma;
  Verdict verdict = Verdict::kDirect;
};

// A pair x, y with x*y = xy* = 0 but T(x)*T(y) or T(x)T(y)* nonzero.
struct DisjointWitness {
  Element x;
  Element y;
  double violation = 0.0;
};

struct Extraction {
  std::optional<YeadonTriple> triple;  // empty: not separating
  std::vector<Check> checks;
  std::string failure;  // first failing identity
  std::optional<DisjointWitness> witness;
  bool consistent = true;  // falsifier agrees with the verdict of the checks
};

namespace detail {

inline double rel_defect(const Element& a, const Element& b, double scale) {
  return distance(a, b) / std::max(1.0, scale);
}

// Coordinates of a spanning set reduced to an orthonormal basis.
class Span {
 public:
  explicit Span(Eigen::Index dim) : dim_(dim) {}

  // Adds v if it is independent of the current span; returns whether it was.
  bool add(const Vec& v, double tol) {
    Vec r = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& q : basis_) r -= q * q.dot(r);
    if (r.norm() <= tol * std::max(1.0, v.norm())) return false;
    basis_.push_back(r / r.norm());
    return true;
  }

  std::size_t size() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

 private:
  Eigen::Index dim_;
  std::vector<Vec> basis_;
};

// Disjoint pairs among matrix units: E^k_ij and E^l_rs with k != l, or
// k == l, i != r and j != s.
inline std::vector<std::pair<Element, Element>> unit_disjoint_pairs(const Algebra& a) {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t k = 0; k < a.num_blocks(); ++k)
    for (std::size_t l = 0; l < a.num_blocks(); ++l)
      for (int i = 0; i < a.dim(k); ++i)
        for (int j = 0; j < a.dim(k); ++j)
          for (int r = 0; r < a.dim(l); ++r)
            for (int s = 0; s < a.dim(l); ++s) {
              if (k == l && (i == r || j == s)) continue;
              out.emplace_back(Element::unit(a, k, i, j), Element::unit(a, l, r, s));
            }
  return out;
}

// x = P a R, y = Q b S per block with P _|_ Q and R _|_ S of random ranks.
inline std::pair<Element, Element> random_disjoint_pair(const Algebra& alg, Rng& rng) {
  Element x = random_element(alg, rng), y = random_element(alg, rng);
  for (std::size_t k = 0; k < alg.num_blocks(); ++k) {
    const int d = alg.dim(k);
    std::uniform_int_distribution<int> rank(0, d);
    auto split = [&](Mat& p, Mat& q) {
      const Mat u = random_unitary_matrix(d, rng);
      const int r = rank(rng);
      const int r2 = std::uniform_int_distribution<int>(0, d - r)(rng);
      p = u.leftCols(r) * u.leftCols(r).adjoint();
      q = u.middleCols(r, r2) * u.middleCols(r, r2).adjoint();
    };
    Mat p, q, r, s;
    split(p, q);
    split(r, s);
    x.block(k) = p * x.block(k) * r;
    y.block(k) = q * y.block(k) * s;
  }
  return {x, y};
}

inline double disjointness_violation(const LpMap& t, const Element& x, const Element& y) {
  const Element tx = t.apply(x), ty = t.apply(y);
  const double scale = tx.frobenius() * ty.frobenius();
  if (scale == 0.0) return 0.0;
  return std::max((tx.adjoint() * ty).frobenius(), (tx * ty.adjoint()).frobenius()) / scale;
}

inline std::optional<DisjointWitness> falsify(const LpMap& t, const SolverConfig& config, double tol) {
  for (const auto& [x, y] : unit_disjoint_pairs(t.dom())) {
    const double v = disjointness_violation(t, x, y);
    if (v > tol) return DisjointWitness{x, y, v};
  }
  Rng rng(split_seed(config.seed, 3000));
  for (int i = 0; i < config.trials; ++i) {
    auto [x, y] = random_disjoint_pair(t.dom(), rng);
    const double v = disjointness_violation(t, x, y);
    if (v > tol) return DisjointWitness{std::move(x), std::move(y), v};
  }
  return std::nullopt;
}

}  // namespace detail

// The *-algebra generated by J(M), its center and minimal central
// projections; each projection z is assigned to e when x -> J(x) z is
// multiplicative (ties included) and to f when it is only
// anti-multiplicative.
inline JordanParts decompose_jordan(const LpMap& j, double tol = 1e-8, std::uint64_t seed = 1) {
  const Algebra& n = j.cod();
  const Eigen::Index dim = n.coord_dim();
  detail::Span span(dim);
  std::vector<Element> gens;
  for (const Element& x : basis(j.dom())) {
    const Element y = j.apply(x);
    if (span.add(y.coords(), tol)) gens.push_back(y);
  }
  // Close under products; the span grows at most to dim.
  for (std::size_t done = 0; done < gens.size();) {
    const std::size_t current = gens.size();
    for (std::size_t a = 0; a < current; ++a)
      for (std::size_t b = (a < done ? done : 0); b < current; ++b) {
        const Element y = gens[a] * gens[b];
        if (span.add(y.coords(), tol)) gens.push_back(y);
      }
    done = current;
  }

  JordanParts out;
  out.e = Element::zero(n);
  out.f = Element::zero(n);
  if (gens.empty()) {
    out.pi = compose(right_multiplication(out.e), j);
    out.sigma = compose(right_multiplication(out.f), j);
    return out;
  }

  // Center: sum_i c_i d_i commuting with every d_j.
  const std::size_t r = gens.size();
  Mat sys(Eigen::Index(r) * dim, Eigen::Index(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      sys.block(Eigen::Index(k) * dim, Eigen::Index(i), dim, 1) = commutator(gens[i], gens[k]).coords();
  Eigen::JacobiSVD<Mat> svd(sys, Eigen::ComputeFullV);
  const RealVec& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  for (const Element& g : gens) smax = std::max(smax, g.frobenius() * g.frobenius());
  std::vector<Element> center;
  for (Eigen::Index c = 0; c < Eigen::Index(r); ++c) {
    const double s = c < sv.size() ? sv(c) : 0.0;
    if (s > 1e-9 * std::max(1.0, smax)) continue;
    Element z = Element::zero(n);
    for (std::size_t i = 0; i < r; ++i) z += svd.matrixV()(Eigen::Index(i), c) * gens[i];
    center.push_back(std::move(z));
  }

  // A generic self-adjoint central element, shifted to be positive on J(1),
  // separates the minimal central projections.
  const Element unit = j.apply(Element::identity(j.dom()));
  Rng rng(split_seed(seed, 4000));
  std::uniform_real_distribution<double> coef(0.5, 1.5);
  Element h = Element::zero(n);
  for (const Element& z : center) h += coef(rng) * (z + z.adjoint());
  double hn = 0.0;
  for (const auto& be : detail::eigen_blocks(h))
    if (be.values.size() > 0) hn = std::max(hn, be.values.cwiseAbs().maxCoeff());
  h += (2.0 * hn + 1.0) * unit;
  const SpectralData sd = spectral_decomposition(0.5 * (h + h.adjoint()), 1e-7);
  const double zero_cut = 0.5 * (hn + 1.0);
  const auto units = basis(j.dom());
  std::vector<Element> images;
  for (const Element& x : units) images.push_back(j.apply(x));
  double scale = 1.0;
  for (const Element& y : images) scale = std::max(scale, y.frobenius() * y.frobenius());
  for (std::size_t s = 0; s < sd.eigenvalues.size(); ++s) {
    if (std::abs(sd.eigenvalues[s]) < zero_cut) continue;
    const Element& z = sd.projections[s];
    double mult = 0.0, anti = 0.0;
    for (std::size_t a = 0; a < units.size(); ++a)
      for (std::size_t b = 0; b < units.size(); ++b) {
        const Element lhs = j.apply(units[a] * units[b]) * z;
        mult = std::max(mult, distance(lhs, images[a] * images[b] * z) / scale);
        anti = std::max(anti, distance(lhs, images[b] * images[a] * z) / scale);
      }
    if (mult <= tol) {
      out.e += z;
    } else if (anti <= tol) {
      out.f += z;
    } else {
      throw internal_error("decompose_jordan: central block is neither multiplicative nor anti-multiplicative");
    }
    out.central_projections.push_back(z);
  }
  if (!approx_equal(out.e + out.f, unit, 1e-7))
    throw internal_error("decompose_jordan: central projections do not sum to J(1)");
  out.pi = compose(right_multiplication(out.e), j);
  out.sigma = compose(right_multiplication(out.f), j);
  return out;
}

inline Verdict verdict_of(const JordanParts& parts, double tol = 1e-8) {
  if (parts.f.frobenius() <= tol) return Verdict::kDirect;
  if (parts.e.frobenius() <= tol) return Verdict::kAntiDirect;
  return Verdict::kMixed;
}

// (w, B) = polar(T(1)), J = B^+ w* T. The triple is returned only when
// conditions (a)-(c), the Jordan identities, the central decomposition
// and a positivity spot check of w* T on sampled positive elements all
// hold; the disjointness falsifier runs in either case.
inline Extraction extract_triple(const LpMap& t, double p, const SolverConfig& config = {}, double tol = 1e-8) {
  detail::require_map_exponent(p, "extract_triple");
  Extraction out;
  const Algebra& m = t.dom();
  auto record = [&](std::string name, double defect) {
    const bool pass = defect <= tol;
    if (!pass && out.failure.empty()) out.failure = name;
    out.checks.push_back({std::move(name), defect, pass});
    return pass;
  };

  const Element t1 = t.apply(Element::identity(m));
  const bool zero_map = t.is_zero(0.0);
  if (!zero_map && t1.frobenius() <= tol * std::max(1.0, t.matrix().norm())) {
    record("T(1) != 0", 1.0);
  } else {
    const Polar pol = polar(t1);
    const Element bplus = pseudo_inverse(pol.modulus);
    const Element wstar = pol.w.adjoint();
    LpMap j = LpMap::from_function(m, t.cod(), [&](const Element& x) { return bplus * wstar * t.apply(x); });
    const auto units = basis(m);
    std::vector<Element> images;
    for (const Element& x : units) images.push_back(j.apply(x));
    double js = 1.0, ts = 1.0;
    for (const Element& y : images) js = std::max(js, y.frobenius());
    for (const Element& x : units) ts = std::max(ts, t.apply(x).frobenius());
    const Element j1 = j.apply(Element::identity(m));
    const Element sb = support(pol.modulus);

    record("w*w = support(B)", detail::rel_defect(wstar * pol.w, sb, 1.0));
    record("J(1) = support(B)", detail::rel_defect(j1, sb, 1.0));
    double comm = 0.0, fact = 0.0, invol = 0.0, jordan = 0.0;
    for (std::size_t a = 0; a < units.size(); ++a) {
      comm = std::max(comm, commutator(pol.modulus, images[a]).frobenius() / std::max(1.0, pol.modulus.frobenius() * js));
      fact = std::max(fact, detail::rel_defect(pol.w * pol.modulus * images[a], t.apply(units[a]), ts));
      invol = std::max(invol, detail::rel_defect(j.apply(units[a].adjoint()), images[a].adjoint(), js));
      for (std::size_t b = 0; b < units.size(); ++b) {
        const Element lhs = j.apply(units[a] * units[b] + units[b] * units[a]);
        jordan = std::max(jordan, detail::rel_defect(lhs, images[a] * images[b] + images[b] * images[a], js * js));
      }
    }
    record("[B, J(x)] = 0", comm);
    record("T(x) = w B J(x)", fact);
    record("J(x*) = J(x)*", invol);
    record("J(xy + yx) = J(x)J(y) + J(y)J(x)", jordan);

    if (out.failure.empty()) {
      Rng rng(split_seed(config.seed, 5000));
      double neg = 0.0;
      for (int i = 0; i < 16; ++i) {
        const Element y = wstar * t.apply(random_positive(m, rng));
        const auto eig = detail::eigen_blocks(y);
        const double sc = std::max(1.0, detail::max_abs_eigenvalue(eig));
        neg = std::max(neg, (y - y.adjoint()).frobenius() / sc);
        for (const auto& be : eig)
          if (be.values.size() > 0) neg = std::max(neg, -be.values.minCoeff() / sc);
      }
      record("w*T(x) >= 0 on samples", neg);
    }
    if (out.failure.empty()) {
      try {
        JordanParts parts = decompose_jordan(j, tol, config.seed);
        YeadonTriple tr;
        tr.w = pol.w;
        tr.b = pol.modulus;
        tr.j = std::move(j);
        tr.e = parts.e;
        tr.f = parts.f;
        tr.pi = std::move(parts.pi);
        tr.sigma = std::move(parts.sigma);
        tr.verdict = verdict_of(parts);
        out.triple = std::move(tr);
        record("J = pi + sigma with central e, f", 0.0);
      } catch (const internal_error& err) {
        record("J = pi + sigma with central e, f", 1.0);
      }
    }
  }
  out.witness = detail::falsify(t, config, 1e-7);
  out.consistent = out.triple.has_value() != out.witness.has_value();
  return out;
}

inline Verdict classify(const LpMap& t, double p, const SolverConfig& config = {}) {
  const Extraction ex = extract_triple(t, p, config);
  return ex.triple ? ex.triple->verdict : Verdict::kNotSeparating;
}

struct SplitMap {
  LpMap t1;  // T(.) e, triple (e, B e, pi)
  LpMap t2;  // T(.) f, triple (f, B f, sigma)
};

inline SplitMap split_map(const LpMap& t, const YeadonTriple& triple, double tol = 1e-8) {
  const Element j1 = triple.j.apply(Element::identity(t.dom()));
  if (!approx_equal(triple.w, j1, tol))
    throw precondition_error("split_map: w differs from J(1); split the map x -> w* T(x) instead");
  return {compose(right_multiplication(triple.e), t), compose(right_multiplication(triple.f), t)};
}

enum class IsometryMethod { kSample, kYeadon };

// Sample: ||T x||_p = ||x||_p on basis elements and config.trials Gaussian
// elements. Yeadon: tau(B^p J(y)) = tau(y) on a basis, complete for
// separating T since the identity is linear in y.
inline bool is_isometry(const LpMap& t, double p, IsometryMethod method = IsometryMethod::kSample,
                        const SolverConfig& config = {}, double tol = 1e-8) {
  detail::require_map_exponent(p, "is_isometry");
  if (method == IsometryMethod::kSample) {
    auto ok = [&](const Element& x) {
      const double nx = lp_norm(x, p);
      return std::abs(lp_norm(t.apply(x), p) - nx) <= tol * std::max(1.0, nx);
    };
    for (const Element& x : basis(t.dom()))
      if (!ok(x)) return false;
    Rng rng(split_seed(config.seed, 6000));
    for (int i = 0; i < config.trials; ++i)
      if (!ok(random_element(t.dom(), rng))) return false;
    return true;
  }
  const Extraction ex = extract_triple(t, p, config);
  if (!ex.triple) throw precondition_error("is_isometry: map is not separating (" + ex.failure + ")");
  const Element bp = power(ex.triple->b, p);
  for (const Element& y : basis(t.dom())) {
    const cplx lhs = trace(bp * ex.triple->j.apply(y));
    const cplx rhs = trace(y);
    if (std::abs(lhs - rhs) > tol * std::max(1.0, std::abs(rhs))) return false;
  }
  return true;
}

// One building block x -> J_i(x) (x) b_i, with J_i the identity or the
// blockwise transpose. A rank-deficient b_i places the image in a corner.
struct IsometryPart {
  bool anti = false;
  Element b;  // positive
};

struct IsometrySpec {
  Algebra dom;
  std::vector<IsometryPart> parts;
  std::optional<Element> unitary;  // applied on the left in the codomain
  double p = 2.0;
};

struct GeneratedIsometry {
  LpMap map;
  Element w;
  Element b;
  LpMap j;
  Verdict verdict = Verdict::kDirect;
  double rescale = 1.0;  // factor applied to every b_i
};

// T(x) = u (sum_i J_i(x) (x) c b_i) in the direct sum of the dom (x) N_i,
// with c fitted by least squares so that tau(B^p J(y)) = tau(y) on a basis.
inline GeneratedIsometry generate_isometry(const IsometrySpec& spec) {
  detail::require_map_exponent(spec.p, "generate_isometry");
  if (spec.parts.empty()) throw precondition_error("generate_isometry: no components");
  const Algebra& m = spec.dom;
  for (const IsometryPart& part : spec.parts)
    if (!is_positive(part.b, 1e-10)) throw precondition_error("generate_isometry: b must be positive");

  auto assemble = [&](auto&& piece) {
    std::optional<Algebra> cod;
    for (const IsometryPart& part : spec.parts) {
      const Algebra a = tensor(m, part.b.algebra());
      cod = cod ? direct_sum(*cod, a) : a;
    }
    return LpMap::from_function(m, *cod, [&](const Element& x) {
      std::optional<Element> acc;
      for (const IsometryPart& part : spec.parts) {
        const Element y = piece(part, x);
        acc = acc ? direct_sum(*acc, y) : y;
      }
      return *acc;
    });
  };
  auto jx = [&](const IsometryPart& part, const Element& x) {
    std::vector<Mat> blocks;
    for (const Mat& blk : x.blocks()) blocks.push_back(part.anti ? Mat(blk.transpose()) : blk);
    return Element(m, std::move(blocks));
  };
  const LpMap j = assemble([&](const IsometryPart& part, const Element& x) {
    return tensor(jx(part, x), support(part.b));
  });
  const LpMap bmap = assemble([&](const IsometryPart& part, const Element& x) { return tensor(x, part.b); });
  const Element b0 = bmap.apply(Element::identity(m));

  // c^p tau(B0^p J(y)) = tau(y) for every basis y.
  const Element bp = power(b0, spec.p);
  cplx num = 0.0;
  double den = 0.0;
  for (const Element& y : basis(m)) {
    const cplx a = trace(bp * j.apply(y));
    num += std::conj(a) * trace(y);
    den += std::norm(a);
  }
  if (den <= 1e-300) throw precondition_error("generate_isometry: J = 0, no rescaling makes T isometric");
  const double s = num.real() / den;
  if (!(s > 0.0)) throw precondition_error("generate_isometry: infeasible rescaling");
  for (const Element& y : basis(m)) {
    const cplx a = trace(bp * j.apply(y));
    if (std::abs(s * a - trace(y)) > 1e-9 * std::max(1.0, std::abs(trace(y))))
      throw precondition_error("generate_isometry: no uniform rescaling satisfies the trace identity");
  }
  const double c = std::pow(s, 1.0 / spec.p);

  GeneratedIsometry out;
  out.rescale = c;
  out.b = c * b0;
  out.j = j;
  LpMap t = LpMap::from_function(m, j.cod(), [&](const Element& x) { return out.b * j.apply(x); });
  const Element s1 = support(out.b);
  if (spec.unitary) {
    const Element& u = *spec.unitary;
    if (!(u.algebra() == t.cod()) || !approx_equal(u.adjoint() * u, Element::identity(t.cod()), 1e-9))
      throw precondition_error("generate_isometry: codomain unitary is not unitary on the codomain");
    t = compose(LpMap::from_function(t.cod(), t.cod(), [&](const Element& y) { return u * y; }), t);
    out.w = u * s1;
  } else {
    out.w = s1;
  }
  out.map = t;

  bool has_direct = false, has_anti = false;
  bool abelian_block = false, matrix_block = false;
  for (std::size_t k = 0; k < m.num_blocks(); ++k) (m.dim(k) == 1 ? abelian_block : matrix_block) = true;
  for (const IsometryPart& part : spec.parts) {
    if (part.b.frobenius() == 0.0) continue;
    if (!part.anti) has_direct = true;
    if (part.anti && abelian_block) has_direct = true;
    if (part.anti && matrix_block) has_anti = true;
  }
  out.verdict = has_direct && has_anti ? Verdict::kMixed : has_anti ? Verdict::kAntiDirect : Verdict::kDirect;
  return out;
}

struct GateReport {
  Verdict verdict = Verdict::kDirect;
  double s1_2 = 0.0;
  double amp2 = 0.0;
  std::vector<Check> assertions;
  bool pass = false;
};

// For an isometry: direct => both 2-level lower bounds <= 1 + tol; otherwise
// s1_2 > 1 + margin, and amp2 > 1 + margin for p != 2.
inline GateReport theorem_gate(const LpMap& t, double p, const SolverConfig& config = {}, double tol = 1e-2,
                               double margin = 0.05) {
  detail::require_map_exponent(p, "theorem_gate");
  if (!is_isometry(t, p, IsometryMethod::kSample, config, 1e-7))
    throw precondition_error("theorem_gate: map is not an isometry");
  GateReport rep;
  rep.verdict = classify(t, p, config);
  rep.s1_2 = s1_map_norm(t, p, 2, config).value;
  rep.amp2 = amplified_norm(t, p, 2, config).value;
  if (rep.verdict == Verdict::kDirect) {
    rep.assertions.push_back({"direct => s1_2 <= 1 + tol", rep.s1_2 - 1.0, rep.s1_2 <= 1.0 + tol});
    rep.assertions.push_back({"direct => amp2 <= 1 + tol", rep.amp2 - 1.0, rep.amp2 <= 1.0 + tol});
  } else {
    rep.assertions.push_back({"not direct => s1_2 > 1 + margin", rep.s1_2 - 1.0, rep.s1_2 > 1.0 + margin});
    if (p != 2.0)
      rep.assertions.push_back({"not direct, p != 2 => amp2 > 1 + margin", rep.amp2 - 1.0, rep.amp2 > 1.0 + margin});
  }
  rep.pass = true;
  for (const Check& c : rep.assertions) rep.pass = rep.pass && c.pass;
  return rep;
}

}  // namespace nclp

#endif  // NCLP_YEADON_HPP_
