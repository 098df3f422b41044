#pragma once

// The partial skew groupoid ring A *_theta G as a finite F_p-algebra with
// basis a delta_g (a an atom of B_g), its corners at an object x and the
// Morita context between R and S = B_x *_theta(x) G(x).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pga/error.hpp"
#include "pga/groupoid.hpp"
#include "pga/linalg.hpp"
#include "pga/partial_action.hpp"
#include "pga/report.hpp"
#include "pga/split_ring.hpp"

namespace pga {

/// Coordinates over the basis of a SkewAlgebra.
struct SkewElement {
  std::uint32_t p = 2;
  Vec coeffs;

  bool is_zero() const {
    for (const auto c : coeffs) {
      if (c != 0) return false;
    }
    return true;
  }
  SkewElement& operator+=(const SkewElement& o) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = (coeffs[i] + o.coeffs[i]) % p;
    return *this;
  }
  SkewElement& operator-=(const SkewElement& o) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = (coeffs[i] + p - o.coeffs[i]) % p;
    return *this;
  }
  SkewElement scaled(std::uint32_t k) const {
    SkewElement r = *this;
    for (auto& c : r.coeffs) c = static_cast<std::uint32_t>(std::uint64_t{c} * (k % p) % p);
    return r;
  }
  friend SkewElement operator+(SkewElement a, const SkewElement& b) { return a += b; }
  friend SkewElement operator-(SkewElement a, const SkewElement& b) { return a -= b; }
  friend bool operator==(const SkewElement&, const SkewElement&) = default;
};

class SkewAlgebra {
 public:
  struct BasisPair {
    Arrow g;
    std::size_t atom;
    friend bool operator==(const BasisPair&, const BasisPair&) = default;
  };
  /// Product of two basis vectors: coeff times basis vector `index`.
  struct Entry {
    std::size_t index = 0;
    std::uint32_t coeff = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  /// theta must be a unital partial action with pairwise disjoint B_y.
  explicit SkewAlgebra(PartialAction theta) : theta_(std::move(theta)) {
    const Report r = verify_partial_action(theta_);
    if (!r.ok()) throw Error(ErrorKind::ShapeMismatch, "not a partial action: " + r.describe());
    if (!is_unital(theta_)) throw Error(ErrorKind::NotUnital, "partial action is not unital");
    const Groupoid& G = theta_.G();
    Ideal seen;
    for (const Arrow y : G.objects()) {
      if (!(seen & theta_.ideal[y]).empty()) {
        throw Error(ErrorKind::RingNotDirectSum, "the ideals B_y are not independent", {G.name(y)});
      }
      seen = seen | theta_.ideal[y];
    }
    index_.assign(G.size() * kMaxAtoms, kAbsent);
    for (Arrow g = 0; g < G.size(); ++g) {
      theta_.ideal[g].for_each([&](std::size_t a) {
        index_[g * kMaxAtoms + a] = basis_.size();
        basis_.push_back({g, a});
      });
    }
    const std::size_t n = basis_.size();
    table_.assign(n * n, Entry{});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) table_[i * n + j] = compute(basis_[i], basis_[j]);
    }
  }

  const PartialAction& action() const { return theta_; }
  const Groupoid& G() const { return theta_.G(); }
  const SplitRing& A() const { return theta_.A(); }
  std::uint32_t p() const { return theta_.A().p(); }
  std::size_t dim() const { return basis_.size(); }
  const BasisPair& basis(std::size_t i) const { return basis_.at(i); }
  const std::vector<BasisPair>& basis() const { return basis_; }

  std::optional<std::size_t> index_of(Arrow g, std::size_t atom) const {
    if (g >= G().size() || atom >= kMaxAtoms) return std::nullopt;
    const std::size_t i = index_[g * kMaxAtoms + atom];
    if (i == kAbsent) return std::nullopt;
    return i;
  }

  Entry product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  /// Overwrites one structure constant; for mutation tests.
  void set_product(std::size_t i, std::size_t j, Entry e) { table_[i * dim() + j] = e; }

  SkewElement zero() const { return {p(), Vec(dim(), 0)}; }
  SkewElement unit_vector(std::size_t i) const {
    SkewElement e = zero();
    e.coeffs.at(i) = 1;
    return e;
  }
  /// b delta_g; b must lie in B_g.
  SkewElement element(const RingElement& b, Arrow g) const {
    if (!b.support().subset_of(theta_.ideal[g])) {
      throw Error(ErrorKind::OutsideDomain, "coefficient is outside B_g", {G().name(g)});
    }
    SkewElement e = zero();
    b.support().for_each([&](std::size_t a) { e.coeffs[*index_of(g, a)] = b.coeffs[a]; });
    return e;
  }
  /// 1_R = sum over objects y of 1_y delta_y.
  SkewElement unit() const {
    SkewElement e = zero();
    for (const Arrow y : G().objects()) e += element(A().idem(theta_.ideal[y]), y);
    return e;
  }
  /// 1_y delta_y for one object.
  SkewElement object_unit(Arrow y) const { return element(A().idem(theta_.ideal[y]), y); }

  SkewElement mul(const SkewElement& u, const SkewElement& v) const {
    SkewElement out = zero();
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
      if (u.coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (v.coeffs[j] == 0) continue;
        const Entry e = table_[i * n + j];
        if (e.coeff == 0) continue;
        const std::uint64_t c = std::uint64_t{u.coeffs[i]} * v.coeffs[j] % p() * e.coeff % p();
        out.coeffs[e.index] = static_cast<std::uint32_t>((out.coeffs[e.index] + c) % p());
      }
    }
    return out;
  }

  std::string basis_name(std::size_t i) const {
    return A().atom_name(basis_[i].atom) + "d[" + G().name(basis_[i].g) + "]";
  }
  std::string format(const SkewElement& e) const {
    std::string s;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (e.coeffs[i] == 0) continue;
      if (!s.empty()) s += " + ";
      if (e.coeffs[i] != 1) s += std::to_string(e.coeffs[i]) + "*";
      s += basis_name(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  // (a delta_g)(b delta_h) = a theta_g(b 1_{g^-1}) delta_gh when s(g) = t(h).
  Entry compute(const BasisPair& u, const BasisPair& v) const {
    const Groupoid& G = theta_.G();
    if (!G.composable(u.g, v.g)) return {};
    if (!theta_.ideal[G.inv(u.g)].contains(v.atom)) return {};
    if (theta_.iso[u.g](v.atom) != u.atom) return {};
    const Arrow gh = G.compose(u.g, v.g);
    const auto k = index_of(gh, u.atom);
    if (!k) {
      throw Error(ErrorKind::InternalInconsistency, "product leaves B_gh",
                  {G.name(u.g), G.name(v.g), theta_.A().atom_name(u.atom)});
    }
    return {*k, 1};
  }

  PartialAction theta_;
  std::vector<BasisPair> basis_;
  std::vector<std::size_t> index_;
  std::vector<Entry> table_;
};

inline SkewAlgebra build_skew(const PartialAction& theta) { return SkewAlgebra(theta); }

inline Report unit_check(const SkewAlgebra& R, VerifyMode mode = VerifyMode::First) {
  Report r{{}, mode};
  const SkewElement one = R.unit();
  for (std::size_t i = 0; i < R.dim() && !r.done(); ++i) {
    const SkewElement e = R.unit_vector(i);
    if (R.mul(one, e) != e) r.add("left-unit", {R.basis_name(i)});
    if (R.mul(e, one) != e) r.add("right-unit", {R.basis_name(i)});
  }
  return r;
}

/// (uv)w = u(vw) on all basis triples.
inline Report assoc_check(const SkewAlgebra& R, VerifyMode mode = VerifyMode::First) {
  Report r{{}, mode};
  const std::size_t n = R.dim();
  const std::uint32_t p = R.p();
  for (std::size_t i = 0; i < n && !r.done(); ++i) {
    for (std::size_t j = 0; j < n && !r.done(); ++j) {
      const auto ij = R.product(i, j);
      for (std::size_t k = 0; k < n && !r.done(); ++k) {
        const auto jk = R.product(j, k);
        SkewAlgebra::Entry left{}, right{};
        if (ij.coeff != 0) {
          const auto e = R.product(ij.index, k);
          left = {e.index, static_cast<std::uint32_t>(std::uint64_t{ij.coeff} * e.coeff % p)};
        }
        if (jk.coeff != 0) {
          const auto e = R.product(i, jk.index);
          right = {e.index, static_cast<std::uint32_t>(std::uint64_t{jk.coeff} * e.coeff % p)};
        }
        const bool same = left.coeff == right.coeff && (left.coeff == 0 || left.index == right.index);
        if (!same) r.add("associativity", {R.basis_name(i), R.basis_name(j), R.basis_name(k)});
      }
    }
  }
  return r;
}

/// A subspace of R spanned by the listed basis vectors.
struct CornerModule {
  std::string tag;
  std::vector<std::size_t> basis;
};

struct Corners {
  Arrow x = kNoArrow;
  CornerModule U;   // R 1_S
  CornerModule V;   // 1_S R
  CornerModule S;   // 1_S R 1_S
  bool U_closed_form = false;  // U = span{(g,a) : s(g) = x}
  bool V_closed_form = false;  // V = span{(g,a) : t(g) = x}
  bool S_closed_form = false;  // S' = span{(g,a) : g in G(x)}
  bool R1SR_is_R = false;
};

namespace detail {

// Basis indices of the span of a set of monomials.
inline std::vector<std::size_t> monomial_support(const std::vector<SkewElement>& vs) {
  std::vector<std::size_t> out;
  if (vs.empty()) return out;
  for (std::size_t i = 0; i < vs.front().coeffs.size(); ++i) {
    for (const auto& v : vs) {
      if (v.coeffs[i] != 0) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

inline std::vector<Vec> coords(const std::vector<SkewElement>& vs) {
  std::vector<Vec> out;
  for (const auto& v : vs) out.push_back(v.coeffs);
  return out;
}

}  // namespace detail

/// U, V and S' computed from products with 1_S = 1_x delta_x, then compared
/// with the closed forms; R 1_S R = R by span of triple products.
inline Corners corners(const SkewAlgebra& R, Arrow x) {
  const Groupoid& G = R.G();
  if (!G.is_object(x)) throw Error(ErrorKind::UnknownObject, "not an object", {G.name(x)});
  Corners c;
  c.x = x;
  const SkewElement oneS = R.object_unit(x);
  std::vector<SkewElement> u, v, s;
  for (std::size_t i = 0; i < R.dim(); ++i) {
    const SkewElement e = R.unit_vector(i);
    const SkewElement ue = R.mul(e, oneS);
    const SkewElement ve = R.mul(oneS, e);
    u.push_back(ue);
    v.push_back(ve);
    s.push_back(R.mul(ve, oneS));
  }
  const std::uint32_t p = R.p();
  const auto spanned = [&](const std::vector<SkewElement>& vs, const char* tag) {
    CornerModule m{tag, {}};
    m.basis = detail::monomial_support(vs);
    if (span_dim(p, R.dim(), detail::coords(vs)) != m.basis.size()) {
      throw Error(ErrorKind::InternalInconsistency, "corner is not spanned by basis vectors");
    }
    return m;
  };
  c.U = spanned(u, "U");
  c.V = spanned(v, "V");
  c.S = spanned(s, "S'");
  std::vector<std::size_t> cu, cv, cs;
  for (std::size_t i = 0; i < R.dim(); ++i) {
    const Arrow g = R.basis(i).g;
    if (G.src(g) == x) cu.push_back(i);
    if (G.tgt(g) == x) cv.push_back(i);
    if (G.src(g) == x && G.tgt(g) == x) cs.push_back(i);
  }
  c.U_closed_form = c.U.basis == cu;
  c.V_closed_form = c.V.basis == cv;
  c.S_closed_form = c.S.basis == cs;
  std::vector<Vec> triple;
  for (const std::size_t i : c.U.basis) {
    for (std::size_t j = 0; j < R.dim(); ++j) {
      triple.push_back(R.mul(R.unit_vector(i), R.unit_vector(j)).coeffs);
    }
  }
  c.R1SR_is_R = span_dim(p, R.dim(), triple) == R.dim();
  return c;
}

/// Compares S' = 1_S R 1_S with S = build_skew of the isotropy action under
/// (l, a) <-> (l, a), both as bases and as multiplication tables.
inline bool corner_matches_group_skew(const SkewAlgebra& R, const Corners& c, const SkewAlgebra& S,
                                      const Subgroupoid& loops) {
  if (c.S.basis.size() != S.dim()) return false;
  std::vector<std::size_t> to_S(R.dim(), S.dim());
  for (const std::size_t i : c.S.basis) {
    const auto& b = R.basis(i);
    const auto j = S.index_of(loops.from_parent.at(b.g), b.atom);
    if (!j) return false;
    to_S[i] = *j;
  }
  for (const std::size_t i : c.S.basis) {
    for (const std::size_t k : c.S.basis) {
      const auto e = R.product(i, k);
      const auto f = S.product(to_S[i], to_S[k]);
      if (e.coeff != f.coeff) return false;
      if (e.coeff != 0 && to_S[e.index] != f.index) return false;
    }
  }
  return true;
}

struct MoritaContextReport {
  Report associativity;
  std::size_t dim_R = 0;
  std::size_t dim_S = 0;
  std::size_t mu_image = 0;  // dim span{uv}
  std::size_t nu_image = 0;  // dim span{vu}
  bool mu_onto() const { return mu_image == dim_R; }
  bool nu_onto() const { return nu_image == dim_S; }
  bool strict() const { return associativity.ok() && mu_onto() && nu_onto(); }
};

/// Context (R, S', U, V, mu, nu) with mu(u (x) v) = uv and nu(v (x) u) = vu:
/// mu(u (x) v)u' = u nu(v (x) u') and nu(v (x) u)v' = v mu(u (x) v') on all
/// basis triples, and surjectivity by span of products.
inline MoritaContextReport skew_morita_check(const SkewAlgebra& R, const Corners& c,
                                             VerifyMode mode = VerifyMode::First) {
  MoritaContextReport out;
  out.associativity.mode = mode;
  out.dim_R = R.dim();
  out.dim_S = c.S.basis.size();
  const auto e = [&](std::size_t i) { return R.unit_vector(i); };
  for (const std::size_t u : c.U.basis) {
    for (const std::size_t v : c.V.basis) {
      for (const std::size_t w : c.U.basis) {
        if (R.mul(R.mul(e(u), e(v)), e(w)) != R.mul(e(u), R.mul(e(v), e(w)))) {
          out.associativity.add("context-U", {R.basis_name(u), R.basis_name(v), R.basis_name(w)});
        }
      }
    }
  }
  for (const std::size_t v : c.V.basis) {
    for (const std::size_t u : c.U.basis) {
      for (const std::size_t w : c.V.basis) {
        if (R.mul(R.mul(e(v), e(u)), e(w)) != R.mul(e(v), R.mul(e(u), e(w)))) {
          out.associativity.add("context-V", {R.basis_name(v), R.basis_name(u), R.basis_name(w)});
        }
      }
    }
  }
  std::vector<Vec> uv, vu;
  for (const std::size_t u : c.U.basis) {
    for (const std::size_t v : c.V.basis) {
      uv.push_back(R.mul(e(u), e(v)).coeffs);
      vu.push_back(R.mul(e(v), e(u)).coeffs);
    }
  }
  out.mu_image = span_dim(R.p(), R.dim(), uv);
  out.nu_image = span_dim(R.p(), R.dim(), vu);
  return out;
}

}  // namespace pga
