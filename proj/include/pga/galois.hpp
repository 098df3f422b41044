#pragma once

// Invariants and traces of a partial action, the bimodule maps Gamma and
// Gamma' of the context (A^theta, A *_theta G, A, A), Galois coordinates, and
// the four-way comparison between groupoid and isotropy-group statements.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pga/datum.hpp"
#include "pga/error.hpp"
#include "pga/linalg.hpp"
#include "pga/partial_action.hpp"
#include "pga/skew_algebra.hpp"
#include "pga/split_ring.hpp"

namespace pga {

/// Standing hypotheses: d verifies, lies in the GD subcategory, and A is the
/// direct sum of the I_y.
inline void check_hypotheses(const Datum& d) {
  const Report r = verify_datum(d);
  if (!r.ok()) throw Error(ErrorKind::HypothesesNotMet, "datum does not verify: " + r.describe());
  if (!is_gd(d)) {
    throw Error(ErrorKind::HypothesesNotMet, "datum is not in the GD subcategory (C1 fails)");
  }
  Ideal seen;
  for (const Arrow y : d.G().objects()) {
    if (!(seen & d.ideal(y)).empty()) {
      throw Error(ErrorKind::HypothesesNotMet, "A is not the direct sum of the I_y", {d.G().name(y)});
    }
    seen = seen | d.ideal(y);
  }
  if (seen != d.A().all()) throw Error(ErrorKind::HypothesesNotMet, "the I_y do not cover A");
}

/// Res(theta) at tau, gated on the same hypotheses and on Ext(Res(theta)) = theta.
inline Datum datum_of(const PartialAction& theta, const Transversal& tau) {
  Datum d = res(theta, tau);
  check_hypotheses(d);
  if (!(ext(d).iso == theta.iso && ext(d).ideal == theta.ideal)) {
    throw Error(ErrorKind::HypothesesNotMet, "the action is not Ext of its restriction");
  }
  return d;
}

namespace detail {

inline std::vector<Vec> to_vecs(const std::vector<RingElement>& as) {
  std::vector<Vec> out;
  for (const auto& a : as) out.push_back(a.coeffs);
  return out;
}

}  // namespace detail

/// theta_g(a 1_{g^-1})
inline RingElement act(const PartialAction& theta, Arrow g, const RingElement& a) {
  return apply(theta.iso[g], a.restricted(theta.ideal[theta.G().inv(g)]));
}

/// t(a) = sum over g of theta_g(a 1_{g^-1}).
inline RingElement trace(const PartialAction& theta, const RingElement& a) {
  RingElement out = theta.A().zero();
  for (Arrow g = 0; g < theta.G().size(); ++g) out += act(theta, g, a);
  return out;
}

inline bool is_invariant(const PartialAction& theta, const RingElement& a) {
  for (Arrow g = 0; g < theta.G().size(); ++g) {
    if (act(theta, g, a) != a.restricted(theta.ideal[g])) return false;
  }
  return true;
}

/// Echelon basis of {a supported on `carrier` : theta_g(a 1_{g^-1}) = a 1_g
/// for all g}, as the kernel of the stacked maps.
inline std::vector<RingElement> invariants(const PartialAction& theta, Ideal carrier) {
  const SplitRing& A = theta.A();
  const std::uint32_t p = A.p();
  const std::vector<std::size_t> cols = carrier.atoms();
  std::vector<Vec> rows;
  for (Arrow g = 0; g < theta.G().size(); ++g) {
    std::vector<RingElement> images;
    for (const std::size_t a : cols) {
      const RingElement e = A.basis(a);
      images.push_back(act(theta, g, e) - e.restricted(theta.ideal[g]));
    }
    for (std::size_t i = 0; i < A.size(); ++i) {
      Vec row(cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j) row[j] = images[j].coeffs[i];
      rows.push_back(row);
    }
  }
  std::vector<Vec> kernel;
  if (rows.empty()) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      Vec v(cols.size(), 0);
      v[j] = 1;
      kernel.push_back(v);
    }
  } else {
    kernel = nullspace(Matrix::from_rows(p, cols.size(), rows));
  }
  std::vector<RingElement> out;
  for (const Vec& k : span_basis(p, cols.size(), kernel)) {
    RingElement a = A.zero();
    for (std::size_t j = 0; j < cols.size(); ++j) a.coeffs[cols[j]] = k[j];
    out.push_back(a);
  }
  return out;
}

inline std::vector<RingElement> invariants(const PartialAction& theta) {
  return invariants(theta, theta.A().all());
}

/// Carrier of the isotropy action at x: B_x.
inline Ideal group_carrier(const PartialAction& theta, Arrow x) { return theta.ideal[x]; }

namespace detail {

inline bool spans_equal(const SplitRing& A, const std::vector<RingElement>& a,
                        const std::vector<RingElement>& b) {
  const std::uint32_t p = A.p();
  const std::size_t n = A.size();
  const std::vector<Vec> va = to_vecs(a);
  const std::vector<Vec> vb = to_vecs(b);
  const std::size_t da = span_dim(p, n, va);
  if (da != span_dim(p, n, vb)) return false;
  std::vector<Vec> both = va;
  both.insert(both.end(), vb.begin(), vb.end());
  return span_dim(p, n, both) == da;
}

}  // namespace detail

/// t(A) = A^theta, with A replaced by `carrier`.
inline bool trace_onto(const PartialAction& theta, Ideal carrier) {
  std::vector<RingElement> images;
  carrier.for_each([&](std::size_t a) { images.push_back(trace(theta, theta.A().basis(a))); });
  return detail::spans_equal(theta.A(), images, invariants(theta, carrier));
}

inline bool trace_onto(const PartialAction& theta) { return trace_onto(theta, theta.A().all()); }

/// Trace of the isotropy action at x on B_x.
inline bool group_trace_onto(const PartialAction& theta, Arrow x) {
  return trace_onto(restrict_to_isotropy(theta, x), group_carrier(theta, x));
}

/// b = sum over y of gamma_{tau_y}(b_x)
inline RingElement reconstruct_invariant(const Datum& d, const RingElement& bx) {
  RingElement out = d.A().zero();
  for (const Arrow y : d.G().objects()) out += apply(d.gamma(y), bx.restricted(d.ideal(d.base())));
  return out;
}

/// b_x = b 1_x for an invariant b of Ext(d); checks the reconstruction and
/// that b_x is invariant under the group action.
inline RingElement invariant_decompose(const Datum& d, const RingElement& b) {
  check_hypotheses(d);
  const PartialAction theta = ext(d);
  if (!is_invariant(theta, b)) throw Error(ErrorKind::NotInvariant, "element is not invariant");
  const RingElement bx = b.restricted(d.ideal(d.base()));
  if (reconstruct_invariant(d, bx) != b || !is_invariant(d.gamma_x, bx)) {
    throw Error(ErrorKind::InternalInconsistency, "invariant does not decompose over the base");
  }
  return bx;
}

struct TraceEquivalence {
  bool trace_transport = true;  // t(gamma_{tau_z}(b)) = sum_y gamma_{tau_y}(t_x(b)) for atoms b of I_x
  bool trace_split = true;  // t(a) = sum_y gamma_{tau_y}(t_x(c_x)), c_x = sum_z gamma_{tau_z}^-1(a_z)
  bool groupoid_onto = false;
  bool group_onto = false;
  std::vector<std::string> failures;
  bool iff_holds() const { return groupoid_onto == group_onto; }
};

inline TraceEquivalence prop_trace_equiv(const Datum& d) {
  check_hypotheses(d);
  const PartialAction theta = ext(d);
  const Arrow x = d.base();
  const SplitRing& A = d.A();
  TraceEquivalence r;
  const auto group_trace = [&](const RingElement& b) { return trace(d.gamma_x, b); };
  d.ideal(x).for_each([&](std::size_t atom) {
    const RingElement b = A.basis(atom);
    const RingElement rhs = reconstruct_invariant(d, group_trace(b));
    for (const Arrow z : d.G().objects()) {
      if (trace(theta, apply(d.gamma(z), b)) != rhs) {
        r.trace_transport = false;
        r.failures.push_back("trace transport at " + A.atom_name(atom) + ", " + d.G().name(z));
      }
    }
  });
  for (std::size_t atom = 0; atom < A.size(); ++atom) {
    const RingElement a = A.basis(atom);
    RingElement cx = A.zero();
    for (const Arrow z : d.G().objects()) {
      cx += apply(d.gamma(z).inverse(), a.restricted(d.ideal(z)));
    }
    if (trace(theta, a) != reconstruct_invariant(d, group_trace(cx))) {
      r.trace_split = false;
      r.failures.push_back("trace split at " + A.atom_name(atom));
    }
  }
  r.groupoid_onto = trace_onto(theta);
  r.group_onto = trace_onto(d.gamma_x, d.ideal(x));
  return r;
}

/// Gamma(a (x) b) = t(ab)
inline RingElement gamma_map(const PartialAction& theta, const RingElement& a, const RingElement& b) {
  return trace(theta, a * b);
}

/// Gamma'(a (x) b) = sum over g of a theta_g(b 1_{g^-1}) delta_g
inline SkewElement gamma_prime(const SkewAlgebra& R, const RingElement& a, const RingElement& b) {
  const PartialAction& theta = R.action();
  SkewElement out = R.zero();
  for (Arrow g = 0; g < R.G().size(); ++g) out += R.element(a * act(theta, g, b), g);
  return out;
}

/// Pairs (a_i, b_i) with sum_i a_i theta_g(b_i 1_{g^-1}) = delta_{y,g} 1_y.
struct GaloisCertificate {
  std::vector<std::pair<RingElement, RingElement>> pairs;
};

/// Checks the defining identity at every arrow; returns failing arrow names.
inline std::vector<std::string> verify_certificate(const PartialAction& theta, const GaloisCertificate& c,
                                                   Ideal carrier) {
  std::vector<std::string> bad;
  const Groupoid& G = theta.G();
  for (Arrow g = 0; g < G.size(); ++g) {
    RingElement sum = theta.A().zero();
    for (const auto& [a, b] : c.pairs) sum += a * act(theta, g, b);
    const RingElement want = G.is_object(g) ? theta.A().idem(theta.ideal[g] & carrier) : theta.A().zero();
    if (sum != want) bad.push_back(G.name(g));
  }
  return bad;
}

inline std::vector<std::string> verify_certificate(const PartialAction& theta, const GaloisCertificate& c) {
  return verify_certificate(theta, c, theta.A().all());
}

/// Solves sum_{a,b} c_ab Gamma'(e_a, e_b) = 1_R over atoms of `carrier`.
inline std::optional<GaloisCertificate> galois_coordinates(const SkewAlgebra& R, Ideal carrier) {
  const SplitRing& A = R.A();
  const std::vector<std::size_t> atoms = carrier.atoms();
  std::vector<Vec> cols;
  std::vector<std::pair<std::size_t, std::size_t>> index;
  for (const std::size_t a : atoms) {
    for (const std::size_t b : atoms) {
      cols.push_back(gamma_prime(R, A.basis(a), A.basis(b)).coeffs);
      index.emplace_back(a, b);
    }
  }
  if (cols.empty()) return R.dim() == 0 ? std::optional<GaloisCertificate>(GaloisCertificate{}) : std::nullopt;
  const auto sol = solve(Matrix::from_cols(R.p(), R.dim(), cols), R.unit().coeffs);
  if (!sol) return std::nullopt;
  GaloisCertificate c;
  for (std::size_t k = 0; k < sol->size(); ++k) {
    if ((*sol)[k] == 0) continue;
    c.pairs.emplace_back(A.basis(index[k].first).scaled((*sol)[k]), A.basis(index[k].second));
  }
  return c;
}

inline std::optional<GaloisCertificate> galois_coordinates(const SkewAlgebra& R) {
  return galois_coordinates(R, R.A().all());
}

/// Surjectivity of Gamma and Gamma' for one context, by span over pure
/// tensors of atoms.
struct ContextStrictness {
  std::size_t invariant_dim = 0;
  std::size_t gamma_image = 0;
  std::size_t skew_dim = 0;
  std::size_t gamma_prime_image = 0;
  bool gamma_onto() const { return gamma_image == invariant_dim; }
  bool gamma_prime_onto() const { return gamma_prime_image == skew_dim; }
  bool strict() const { return gamma_onto() && gamma_prime_onto(); }
};

inline ContextStrictness context_strictness(const PartialAction& theta, const SkewAlgebra& R, Ideal carrier) {
  ContextStrictness s;
  const SplitRing& A = theta.A();
  const std::vector<RingElement> inv = invariants(theta, carrier);
  s.invariant_dim = inv.size();
  std::vector<Vec> gam;
  std::vector<Vec> gp;
  carrier.for_each([&](std::size_t a) {
    carrier.for_each([&](std::size_t b) {
      const RingElement t = gamma_map(theta, A.basis(a), A.basis(b));
      if (!is_invariant(theta, t)) {
        throw Error(ErrorKind::InternalInconsistency, "Gamma leaves the invariants",
                    {A.atom_name(a), A.atom_name(b)});
      }
      gam.push_back(t.coeffs);
      gp.push_back(gamma_prime(R, A.basis(a), A.basis(b)).coeffs);
    });
  });
  s.gamma_image = span_dim(A.p(), A.size(), gam);
  s.skew_dim = R.dim();
  s.gamma_prime_image = span_dim(R.p(), R.dim(), gp);
  return s;
}

struct MoritaStrictness {
  ContextStrictness groupoid;
  ContextStrictness group;
  bool agree() const { return groupoid.strict() == group.strict(); }
};

inline MoritaStrictness morita_strictness(const Datum& d) {
  check_hypotheses(d);
  const PartialAction theta = ext(d);
  const Arrow x = d.base();
  const PartialAction theta_x = restrict_to_isotropy(theta, x);
  MoritaStrictness m;
  m.groupoid = context_strictness(theta, build_skew(theta), theta.A().all());
  m.group = context_strictness(theta_x, build_skew(theta_x), theta.ideal[x]);
  return m;
}

struct EquivalenceReport {
  bool galois_and_trace = false;        // (i)
  bool groupoid_context_strict = false;  // (ii)
  bool group_context_strict = false;     // (iii)
  bool group_galois_and_trace = false;   // (iv)
  bool agree() const {
    return galois_and_trace == groupoid_context_strict &&
           groupoid_context_strict == group_context_strict &&
           group_context_strict == group_galois_and_trace;
  }
};

/// The four statements, each computed on its own: no leg reuses another
/// leg's result. Does not throw on disagreement.
inline EquivalenceReport compute_equivalence(const Datum& d) {
  check_hypotheses(d);
  const PartialAction theta = ext(d);
  const Arrow x = d.base();
  const PartialAction theta_x = restrict_to_isotropy(theta, x);
  const Ideal Bx = theta.ideal[x];
  const SkewAlgebra R = build_skew(theta);
  const SkewAlgebra S = build_skew(theta_x);
  EquivalenceReport e;
  {
    const auto cert = galois_coordinates(R);
    e.galois_and_trace = cert && verify_certificate(theta, *cert).empty() && trace_onto(theta);
  }
  e.groupoid_context_strict = context_strictness(theta, R, theta.A().all()).strict();
  e.group_context_strict = context_strictness(theta_x, S, Bx).strict();
  {
    const auto cert = galois_coordinates(S, Bx);
    e.group_galois_and_trace =
        cert && verify_certificate(theta_x, *cert, Bx).empty() && trace_onto(theta_x, Bx);
  }
  return e;
}

/// As compute_equivalence; a disagreement raises InternalInconsistency.
inline EquivalenceReport equivalence_report(const Datum& d) {
  const EquivalenceReport e = compute_equivalence(d);
  if (!e.agree()) {
    throw Error(ErrorKind::InternalInconsistency, "the four equivalent statements disagree");
  }
  return e;
}

inline TraceEquivalence prop_trace_equiv(const PartialAction& theta, const Transversal& tau) {
  return prop_trace_equiv(datum_of(theta, tau));
}

inline MoritaStrictness morita_strictness(const PartialAction& theta, const Transversal& tau) {
  return morita_strictness(datum_of(theta, tau));
}

inline EquivalenceReport equivalence_report(const PartialAction& theta, const Transversal& tau) {
  return equivalence_report(datum_of(theta, tau));
}

}  // namespace pga
