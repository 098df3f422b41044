#pragma once

// The ring model: A = F_p^n with coordinatewise operations. The minimal
// idempotents e_1..e_n ("atoms") are orthogonal and sum to 1, every ideal is
// A·1_S for an atom subset S, and every ring isomorphism between ideals
// permutes atoms. All maps below are therefore stored as atom data.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pga/error.hpp"

namespace pga {

inline constexpr std::size_t kMaxAtoms = 64;

inline bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// An ideal of the split ring, i.e. a set of atoms.
struct Ideal {
  std::uint64_t mask = 0;

  static Ideal of(std::initializer_list<std::size_t> atoms) {
    Ideal I;
    for (const auto a : atoms) I.mask |= std::uint64_t{1} << a;
    return I;
  }
  static Ideal first(std::size_t n) {
    return {n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  bool contains(std::size_t a) const { return (mask >> a) & 1U; }
  bool subset_of(Ideal o) const { return (mask & ~o.mask) == 0; }
  bool empty() const { return mask == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask)); }

  Ideal operator&(Ideal o) const { return {mask & o.mask}; }
  Ideal operator|(Ideal o) const { return {mask | o.mask}; }
  Ideal operator-(Ideal o) const { return {mask & ~o.mask}; }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      f(static_cast<std::size_t>(std::countr_zero(m)));
    }
  }
  std::vector<std::size_t> atoms() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t a) { out.push_back(a); });
    return out;
  }

  friend bool operator==(Ideal, Ideal) = default;
};

inline Ideal intersect(Ideal I, Ideal J) { return I & J; }

/// Element of F_p^n as a dense coefficient vector.
struct RingElement {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> coeffs;

  std::size_t size() const { return coeffs.size(); }
  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](auto c) { return c == 0; });
  }
  Ideal support() const {
    Ideal I;
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
      if (coeffs[a] != 0) I.mask |= std::uint64_t{1} << a;
    }
    return I;
  }
  RingElement& operator+=(const RingElement& o) {
    for (std::size_t a = 0; a < coeffs.size(); ++a) coeffs[a] = (coeffs[a] + o.coeffs[a]) % p;
    return *this;
  }
  RingElement& operator-=(const RingElement& o) {
    for (std::size_t a = 0; a < coeffs.size(); ++a) coeffs[a] = (coeffs[a] + p - o.coeffs[a]) % p;
    return *this;
  }
  RingElement& operator*=(const RingElement& o) {
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
      coeffs[a] = static_cast<std::uint32_t>(std::uint64_t{coeffs[a]} * o.coeffs[a] % p);
    }
    return *this;
  }
  RingElement scaled(std::uint32_t k) const {
    RingElement r = *this;
    for (auto& c : r.coeffs) c = static_cast<std::uint32_t>(std::uint64_t{c} * (k % p) % p);
    return r;
  }
  /// a·1_I
  RingElement restricted(Ideal I) const {
    RingElement r = *this;
    for (std::size_t a = 0; a < r.coeffs.size(); ++a) {
      if (!I.contains(a)) r.coeffs[a] = 0;
    }
    return r;
  }

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

class SplitRing {
 public:
  SplitRing(std::uint32_t p, std::vector<std::string> atoms) : p_(p), atoms_(std::move(atoms)) {
    if (!is_prime(p_)) {
      throw Error(ErrorKind::InvalidRing, "modulus " + std::to_string(p_) + " is not prime");
    }
    if (atoms_.empty() || atoms_.size() > kMaxAtoms) {
      throw Error(ErrorKind::InvalidRing, "atom count must be in 1.." + std::to_string(kMaxAtoms));
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (atoms_[i] == atoms_[j]) {
          throw Error(ErrorKind::InvalidRing, "duplicate atom '" + atoms_[i] + "'", {atoms_[i]});
        }
      }
    }
  }

  /// Ring with atoms e1..en.
  static SplitRing numbered(std::uint32_t p, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
    return SplitRing(p, std::move(names));
  }

  std::uint32_t p() const noexcept { return p_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::string& atom_name(std::size_t a) const { return atoms_.at(a); }
  std::optional<std::size_t> atom_index(std::string_view name) const {
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
      if (atoms_[a] == name) return a;
    }
    return std::nullopt;
  }
  std::size_t atom(std::string_view name) const {
    if (auto a = atom_index(name)) return *a;
    throw Error(ErrorKind::UnresolvedReference, "unknown atom '" + std::string(name) + "'",
                {std::string(name)});
  }

  Ideal all() const { return Ideal::first(atoms_.size()); }
  Ideal ideal(std::initializer_list<std::string_view> names) const {
    Ideal I;
    for (const auto n : names) I.mask |= std::uint64_t{1} << atom(n);
    return I;
  }

  RingElement zero() const { return {p_, std::vector<std::uint32_t>(atoms_.size(), 0)}; }
  RingElement one() const { return idem(all()); }
  RingElement basis(std::size_t a) const {
    RingElement r = zero();
    r.coeffs.at(a) = 1;
    return r;
  }
  /// 1_I = sum of the atoms of I; a central idempotent.
  RingElement idem(Ideal I) const {
    RingElement r = zero();
    I.for_each([&](std::size_t a) { r.coeffs[a] = 1; });
    return r;
  }
  RingElement element(std::vector<std::uint32_t> coeffs) const {
    if (coeffs.size() != atoms_.size()) {
      throw Error(ErrorKind::ShapeMismatch, "coefficient vector has the wrong length");
    }
    for (auto& c : coeffs) c %= p_;
    return {p_, std::move(coeffs)};
  }

  std::string format(const RingElement& r) const {
    std::string s;
    for (std::size_t a = 0; a < r.coeffs.size(); ++a) {
      if (r.coeffs[a] == 0) continue;
      if (!s.empty()) s += " + ";
      if (r.coeffs[a] != 1) s += std::to_string(r.coeffs[a]) + "*";
      s += atoms_[a];
    }
    return s.empty() ? "0" : s;
  }
  std::string format(Ideal I) const {
    std::string s = "[";
    bool first = true;
    I.for_each([&](std::size_t a) {
      if (!first) s += ",";
      s += atoms_[a];
      first = false;
    });
    return s + "]";
  }

  friend bool operator==(const SplitRing&, const SplitRing&) = default;

 private:
  std::uint32_t p_;
  std::vector<std::string> atoms_;
};

using RingPtr = std::shared_ptr<const SplitRing>;

inline RingElement idem(const SplitRing& A, Ideal I) { return A.idem(I); }

/// Ring isomorphism between two ideals, given by a bijection of their atoms.
class PartialRingIso {
 public:
  static constexpr std::uint8_t kUnset = 0xFF;

  PartialRingIso() { to_.fill(kUnset); }

  static PartialRingIso identity(Ideal I) {
    PartialRingIso f;
    f.dom_ = f.cod_ = I;
    I.for_each([&](std::size_t a) { f.to_[a] = static_cast<std::uint8_t>(a); });
    return f;
  }

  /// Throws ShapeMismatch unless the pairs form a bijection.
  static PartialRingIso from_pairs(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    PartialRingIso f;
    for (const auto& [a, b] : pairs) {
      if (a >= kMaxAtoms || b >= kMaxAtoms || f.dom_.contains(a) || f.cod_.contains(b)) {
        throw Error(ErrorKind::ShapeMismatch, "atom map is not a bijection");
      }
      f.dom_.mask |= std::uint64_t{1} << a;
      f.cod_.mask |= std::uint64_t{1} << b;
      f.to_[a] = static_cast<std::uint8_t>(b);
    }
    return f;
  }

  /// Restriction of a total atom permutation to `dom`.
  static PartialRingIso from_permutation(const std::vector<std::size_t>& perm, Ideal dom) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    dom.for_each([&](std::size_t a) { pairs.emplace_back(a, perm.at(a)); });
    return from_pairs(pairs);
  }

  Ideal dom() const { return dom_; }
  Ideal cod() const { return cod_; }
  bool empty() const { return dom_.empty(); }

  std::size_t operator()(std::size_t a) const {
    if (!dom_.contains(a)) {
      throw Error(ErrorKind::OutsideDomain, "atom " + std::to_string(a) + " is outside the domain");
    }
    return to_[a];
  }

  /// f(I ∩ dom f)
  Ideal image(Ideal I) const {
    Ideal out;
    (I & dom_).for_each([&](std::size_t a) { out.mask |= std::uint64_t{1} << to_[a]; });
    return out;
  }
  /// f^{-1}(I ∩ cod f)
  Ideal preimage(Ideal I) const {
    Ideal out;
    dom_.for_each([&](std::size_t a) {
      if (I.contains(to_[a])) out.mask |= std::uint64_t{1} << a;
    });
    return out;
  }

  PartialRingIso inverse() const {
    PartialRingIso g;
    g.dom_ = cod_;
    g.cod_ = dom_;
    dom_.for_each([&](std::size_t a) { g.to_[to_[a]] = static_cast<std::uint8_t>(a); });
    return g;
  }

  bool is_identity() const {
    bool ok = dom_ == cod_;
    dom_.for_each([&](std::size_t a) { ok = ok && to_[a] == a; });
    return ok;
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    dom_.for_each([&](std::size_t a) { out.emplace_back(a, to_[a]); });
    return out;
  }

  friend bool operator==(const PartialRingIso&, const PartialRingIso&) = default;

 private:
  Ideal dom_;
  Ideal cod_;
  std::array<std::uint8_t, kMaxAtoms> to_{};
};

/// f(a); a must be supported on dom f.
inline RingElement apply(const PartialRingIso& f, const RingElement& a) {
  if (!a.support().subset_of(f.dom())) {
    throw Error(ErrorKind::OutsideDomain, "element has support outside the domain");
  }
  RingElement out{a.p, std::vector<std::uint32_t>(a.size(), 0)};
  f.dom().for_each([&](std::size_t i) { out.coeffs.at(f(i)) = a.coeffs[i]; });
  return out;
}

/// f2 ∘ f1 in the inverse semigroup of partial bijections:
/// f1^{-1}(dom f2 ∩ cod f1) -> f2(dom f2 ∩ cod f1).
inline PartialRingIso compose_partial(const PartialRingIso& f2, const PartialRingIso& f1) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  f1.dom().for_each([&](std::size_t a) {
    const std::size_t b = f1(a);
    if (f2.dom().contains(b)) pairs.emplace_back(a, f2(b));
  });
  return PartialRingIso::from_pairs(pairs);
}

inline PartialRingIso compose_partial(const PartialRingIso& f3, const PartialRingIso& f2,
                                      const PartialRingIso& f1) {
  return compose_partial(f3, compose_partial(f2, f1));
}

inline Ideal image(const PartialRingIso& f, Ideal I) { return f.image(I); }

/// f restricted to I; I must be contained in dom f.
inline PartialRingIso restrict(const PartialRingIso& f, Ideal I) {
  if (!I.subset_of(f.dom())) {
    throw Error(ErrorKind::NotSubIdeal, "restriction to an ideal outside the domain");
  }
  return compose_partial(f, PartialRingIso::identity(I));
}

/// `g` extends `f`: dom f ⊆ dom g and they agree there.
inline bool extends(const PartialRingIso& g, const PartialRingIso& f) {
  if (!f.dom().subset_of(g.dom())) return false;
  bool ok = true;
  f.dom().for_each([&](std::size_t a) { ok = ok && g(a) == f(a); });
  return ok;
}

/// Ring homomorphism out of an ideal. Atom a goes to the idempotent 1_{S_a};
/// the S_a are pairwise disjoint. Every ring map between split rings has
/// this shape, so families of these model morphisms of actions and datums.
class RingHom {
 public:
  RingHom() { images_.fill(0); }

  static RingHom zero(Ideal dom) {
    RingHom f;
    f.dom_ = dom;
    return f;
  }
  static RingHom identity(Ideal dom) { return from_iso(PartialRingIso::identity(dom)); }
  static RingHom from_iso(const PartialRingIso& iso) {
    RingHom f;
    f.dom_ = iso.dom();
    iso.dom().for_each([&](std::size_t a) { f.images_[a] = std::uint64_t{1} << iso(a); });
    return f;
  }
  static RingHom from_images(Ideal dom, const std::vector<std::pair<std::size_t, Ideal>>& images) {
    RingHom f;
    f.dom_ = dom;
    for (const auto& [a, S] : images) {
      if (!dom.contains(a)) throw Error(ErrorKind::OutsideDomain, "image given off the domain");
      f.images_[a] = S.mask;
    }
    return f;
  }

  Ideal dom() const { return dom_; }
  Ideal image_of_atom(std::size_t a) const { return {dom_.contains(a) ? images_[a] : 0}; }
  Ideal image(Ideal I) const {
    Ideal out;
    (I & dom_).for_each([&](std::size_t a) { out.mask |= images_[a]; });
    return out;
  }
  /// Multiplicativity: images of distinct atoms are orthogonal.
  bool well_defined() const {
    std::uint64_t seen = 0;
    bool ok = true;
    dom_.for_each([&](std::size_t a) {
      ok = ok && (seen & images_[a]) == 0;
      seen |= images_[a];
    });
    return ok;
  }
  RingElement apply(const RingElement& x) const {
    if (!x.support().subset_of(dom_)) {
      throw Error(ErrorKind::OutsideDomain, "element has support outside the domain");
    }
    RingElement out{x.p, std::vector<std::uint32_t>(x.size(), 0)};
    dom_.for_each([&](std::size_t a) {
      Ideal{images_[a]}.for_each([&](std::size_t b) { out.coeffs.at(b) = (out.coeffs[b] + x.coeffs[a]) % x.p; });
    });
    return out;
  }

  friend bool operator==(const RingHom&, const RingHom&) = default;

 private:
  Ideal dom_;
  std::array<std::uint64_t, kMaxAtoms> images_{};
};

/// f2 ∘ f1; requires image(f1) ⊆ dom(f2).
inline RingHom compose(const RingHom& f2, const RingHom& f1) {
  if (!f1.image(f1.dom()).subset_of(f2.dom())) {
    throw Error(ErrorKind::NotSubIdeal, "composite of ring maps is not defined");
  }
  std::vector<std::pair<std::size_t, Ideal>> images;
  f1.dom().for_each([&](std::size_t a) { images.emplace_back(a, f2.image(f1.image_of_atom(a))); });
  return RingHom::from_images(f1.dom(), images);
}

}  // namespace pga
