#pragma once

// Finite groupoids stored as dense composition tables. Objects are identified
// with their identity arrows, so an "object" below is always an Arrow id whose
// source and target are itself.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pga/error.hpp"

namespace pga {

using Arrow = std::uint32_t;
inline constexpr Arrow kNoArrow = std::numeric_limits<Arrow>::max();

/// Unvalidated groupoid description, as read from a scenario file or built
/// programmatically. Identity arrows are implicit (one per object, named like
/// the object) and products involving an identity may be omitted.
struct RawGroupoid {
  struct ArrowDecl {
    std::string name;
    std::string src;
    std::string tgt;
  };
  struct Product {
    std::string left;
    std::string right;
    std::string result;
  };

  std::vector<std::string> objects;
  std::vector<ArrowDecl> arrows;
  std::vector<Product> products;
};

class Groupoid;
Groupoid validate_groupoid(const RawGroupoid& raw);

class Groupoid {
 public:
  Groupoid() = default;

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<Arrow>& objects() const noexcept { return objects_; }
  bool is_object(Arrow g) const { return object_index_[g] != kNoArrow; }
  std::size_t object_index(Arrow x) const {
    if (x >= size() || !is_object(x)) {
      throw Error(ErrorKind::UnknownObject, "arrow is not an object",
                  {x < size() ? names_[x] : std::to_string(x)});
    }
    return object_index_[x];
  }

  Arrow src(Arrow g) const { return src_[g]; }
  Arrow tgt(Arrow g) const { return tgt_[g]; }
  Arrow inv(Arrow g) const { return inv_[g]; }

  bool composable(Arrow g, Arrow h) const { return src_[g] == tgt_[h]; }

  /// gh (apply h first). Throws when s(g) != t(h).
  Arrow compose(Arrow g, Arrow h) const {
    const Arrow gh = table_[g * size() + h];
    if (gh == kNoArrow) {
      throw Error(ErrorKind::BadCompositionDomain, "arrows are not composable",
                  {names_[g], names_[h]});
    }
    return gh;
  }
  Arrow compose(Arrow g, Arrow h, Arrow k) const {
    return compose(g, compose(h, k));
  }

  /// G(x, y): arrows with source x and target y, in id order.
  std::vector<Arrow> hom(Arrow x, Arrow y) const {
    std::vector<Arrow> out;
    for (Arrow g = 0; g < size(); ++g) {
      if (src_[g] == x && tgt_[g] == y) out.push_back(g);
    }
    return out;
  }

  const std::string& name(Arrow g) const { return names_[g]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Arrow> find(std::string_view name) const {
    const auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Arrow at(std::string_view name) const {
    if (auto g = find(name)) return *g;
    throw Error(ErrorKind::UnknownObject, "no arrow named '" + std::string(name) + "'",
                {std::string(name)});
  }

  bool connected() const {
    for (const Arrow x : objects_) {
      for (const Arrow y : objects_) {
        if (hom(x, y).empty()) return false;
      }
    }
    return true;
  }

  /// Turns the table back into raw form (identity products omitted).
  RawGroupoid to_raw() const {
    RawGroupoid raw;
    for (const Arrow x : objects_) raw.objects.push_back(names_[x]);
    for (Arrow g = 0; g < size(); ++g) {
      if (!is_object(g)) raw.arrows.push_back({names_[g], names_[src_[g]], names_[tgt_[g]]});
    }
    for (Arrow g = 0; g < size(); ++g) {
      for (Arrow h = 0; h < size(); ++h) {
        if (is_object(g) || is_object(h) || !composable(g, h)) continue;
        raw.products.push_back({names_[g], names_[h], names_[compose(g, h)]});
      }
    }
    return raw;
  }

  friend bool operator==(const Groupoid& a, const Groupoid& b) {
    return a.names_ == b.names_ && a.src_ == b.src_ && a.tgt_ == b.tgt_ &&
           a.table_ == b.table_;
  }

  /// Builds a groupoid from already-consistent tables. Only inverses and the
  /// object list are derived; no axioms are checked.
  static Groupoid from_tables(std::vector<std::string> names, std::vector<Arrow> src,
                              std::vector<Arrow> tgt, std::vector<Arrow> table) {
    Groupoid G;
    G.names_ = std::move(names);
    G.src_ = std::move(src);
    G.tgt_ = std::move(tgt);
    G.table_ = std::move(table);
    const std::size_t n = G.names_.size();
    G.object_index_.assign(n, kNoArrow);
    for (Arrow g = 0; g < n; ++g) {
      G.index_.emplace(G.names_[g], g);
      if (G.src_[g] == g && G.tgt_[g] == g) {
        G.object_index_[g] = static_cast<Arrow>(G.objects_.size());
        G.objects_.push_back(g);
      }
    }
    G.inv_.assign(n, kNoArrow);
    for (Arrow g = 0; g < n; ++g) {
      for (Arrow h = 0; h < n; ++h) {
        if (G.table_[g * n + h] == G.tgt_[g] && G.table_[h * n + g] == G.src_[g]) {
          G.inv_[g] = h;
          break;
        }
      }
    }
    return G;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Arrow> src_;
  std::vector<Arrow> tgt_;
  std::vector<Arrow> inv_;
  std::vector<Arrow> table_;
  std::vector<Arrow> objects_;
  std::vector<Arrow> object_index_;
  std::map<std::string, Arrow> index_;
};

using GroupoidPtr = std::shared_ptr<const Groupoid>;

inline Groupoid validate_groupoid(const RawGroupoid& raw) {
  if (raw.objects.empty()) {
    throw Error(ErrorKind::EmptyObjectSet, "a groupoid needs at least one object");
  }
  std::vector<std::string> names = raw.objects;
  for (const auto& a : raw.arrows) names.push_back(a.name);
  std::map<std::string, Arrow> index;
  for (Arrow g = 0; g < names.size(); ++g) {
    if (!index.emplace(names[g], g).second) {
      throw Error(ErrorKind::ShapeMismatch, "duplicate arrow name '" + names[g] + "'",
                  {names[g]});
    }
  }
  const auto object_of = [&](const std::string& name) -> Arrow {
    const auto it = index.find(name);
    if (it == index.end() || it->second >= raw.objects.size()) {
      throw Error(ErrorKind::UnknownObject, "'" + name + "' is not an object", {name});
    }
    return it->second;
  };
  const auto arrow_of = [&](const std::string& name) -> Arrow {
    const auto it = index.find(name);
    if (it == index.end()) {
      throw Error(ErrorKind::UnknownObject, "no arrow named '" + name + "'", {name});
    }
    return it->second;
  };

  const std::size_t n = names.size();
  std::vector<Arrow> src(n), tgt(n);
  for (Arrow x = 0; x < raw.objects.size(); ++x) src[x] = tgt[x] = x;
  for (std::size_t i = 0; i < raw.arrows.size(); ++i) {
    const Arrow g = static_cast<Arrow>(raw.objects.size() + i);
    src[g] = object_of(raw.arrows[i].src);
    tgt[g] = object_of(raw.arrows[i].tgt);
  }

  std::vector<Arrow> table(n * n, kNoArrow);
  const auto is_identity = [&](Arrow g) { return g < raw.objects.size(); };
  // Identity rows first so explicit products can be checked against them.
  for (Arrow g = 0; g < n; ++g) {
    table[g * n + src[g]] = g;
    table[tgt[g] * n + g] = g;
  }
  for (const auto& p : raw.products) {
    const Arrow g = arrow_of(p.left);
    const Arrow h = arrow_of(p.right);
    const Arrow gh = arrow_of(p.result);
    if (src[g] != tgt[h] || src[gh] != src[h] || tgt[gh] != tgt[g]) {
      throw Error(ErrorKind::BadCompositionDomain,
                  "product " + p.left + "*" + p.right + " = " + p.result +
                      " violates the source/target rules",
                  {p.left, p.right});
    }
    Arrow& slot = table[g * n + h];
    if (is_identity(g) || is_identity(h)) {
      if (slot != gh) {
        const Arrow x = is_identity(g) ? g : h;
        throw Error(ErrorKind::MissingIdentity,
                    "identity '" + names[x] + "' is not neutral", {names[x]});
      }
      continue;
    }
    if (slot != kNoArrow && slot != gh) {
      throw Error(ErrorKind::BadCompositionDomain,
                  "conflicting products for " + p.left + "*" + p.right, {p.left, p.right});
    }
    slot = gh;
  }
  for (Arrow g = 0; g < n; ++g) {
    for (Arrow h = 0; h < n; ++h) {
      if (src[g] == tgt[h] && table[g * n + h] == kNoArrow) {
        throw Error(ErrorKind::BadCompositionDomain,
                    "missing product " + names[g] + "*" + names[h], {names[g], names[h]});
      }
    }
  }

  for (Arrow g = 0; g < n; ++g) {
    bool found = false;
    for (Arrow h = 0; h < n && !found; ++h) {
      found = src[g] == tgt[h] && src[h] == tgt[g] && table[g * n + h] == tgt[g] &&
              table[h * n + g] == src[g];
    }
    if (!found) {
      throw Error(ErrorKind::BadInverse, "arrow '" + names[g] + "' has no inverse",
                  {names[g]});
    }
  }

  for (Arrow g = 0; g < n; ++g) {
    for (Arrow h = 0; h < n; ++h) {
      if (src[g] != tgt[h]) continue;
      const Arrow gh = table[g * n + h];
      for (Arrow k = 0; k < n; ++k) {
        if (src[h] != tgt[k]) continue;
        if (table[gh * n + k] != table[g * n + table[h * n + k]]) {
          throw Error(ErrorKind::NonAssociative,
                      "(" + names[g] + names[h] + ")" + names[k] + " != " + names[g] +
                          "(" + names[h] + names[k] + ")",
                      {names[g], names[h], names[k]});
        }
      }
    }
  }
  return Groupoid::from_tables(std::move(names), std::move(src), std::move(tgt),
                               std::move(table));
}

/// A full subgroupoid together with its arrow embedding into the parent.
struct Subgroupoid {
  Groupoid groupoid;
  std::vector<Arrow> to_parent;
  std::vector<Arrow> from_parent;  // kNoArrow where the parent arrow is absent
};

/// Subgroupoid on the given arrows, which must be closed under composition
/// and inverses and contain the identities they touch.
inline Subgroupoid induced_subgroupoid(const Groupoid& G, std::vector<Arrow> arrows) {
  std::sort(arrows.begin(), arrows.end());
  Subgroupoid sub;
  sub.to_parent = arrows;
  sub.from_parent.assign(G.size(), kNoArrow);
  for (Arrow i = 0; i < arrows.size(); ++i) sub.from_parent[arrows[i]] = i;
  const std::size_t n = arrows.size();
  std::vector<std::string> names(n);
  std::vector<Arrow> src(n), tgt(n), table(n * n, kNoArrow);
  for (Arrow i = 0; i < n; ++i) {
    names[i] = G.name(arrows[i]);
    src[i] = sub.from_parent[G.src(arrows[i])];
    tgt[i] = sub.from_parent[G.tgt(arrows[i])];
  }
  for (Arrow i = 0; i < n; ++i) {
    for (Arrow j = 0; j < n; ++j) {
      if (G.composable(arrows[i], arrows[j])) {
        table[i * n + j] = sub.from_parent[G.compose(arrows[i], arrows[j])];
      }
    }
  }
  sub.groupoid = Groupoid::from_tables(std::move(names), std::move(src), std::move(tgt),
                                       std::move(table));
  return sub;
}

struct Component {
  std::vector<Arrow> objects;  // parent object ids
  Subgroupoid sub;
};

/// Partition of the objects by "G(x,y) nonempty", with the full subgroupoid
/// of each class. Components are ordered by their smallest object.
inline std::vector<Component> connected_components(const Groupoid& G) {
  std::vector<Arrow> label(G.size(), kNoArrow);
  std::vector<Component> out;
  for (const Arrow x : G.objects()) {
    if (label[x] != kNoArrow) continue;
    Component c;
    for (const Arrow y : G.objects()) {
      if (!G.hom(x, y).empty()) {
        label[y] = static_cast<Arrow>(out.size());
        c.objects.push_back(y);
      }
    }
    std::vector<Arrow> arrows;
    for (Arrow g = 0; g < G.size(); ++g) {
      if (label[G.src(g)] == out.size()) arrows.push_back(g);
    }
    c.sub = induced_subgroupoid(G, std::move(arrows));
    out.push_back(std::move(c));
  }
  return out;
}

/// Isotropy group G(x) as a one-object groupoid.
inline Subgroupoid isotropy(const Groupoid& G, Arrow x) {
  G.object_index(x);
  return induced_subgroupoid(G, G.hom(x, x));
}

/// One chosen arrow tau_y in G(x, y) per object y, with tau_x = x.
/// `pick` is indexed by arrow id and holds kNoArrow off the objects.
struct Transversal {
  Arrow base = kNoArrow;
  std::vector<Arrow> pick;

  Arrow at(Arrow y) const { return pick.at(y); }
  friend bool operator==(const Transversal&, const Transversal&) = default;
};

/// Every transversal for x, lexicographic in (object id, arrow id).
inline std::vector<Transversal> transversals(const Groupoid& G, Arrow x) {
  G.object_index(x);
  if (!G.connected()) {
    throw Error(ErrorKind::NotConnected, "transversals need a connected groupoid");
  }
  std::vector<Arrow> others;
  std::vector<std::vector<Arrow>> choices;
  for (const Arrow y : G.objects()) {
    if (y == x) continue;
    others.push_back(y);
    choices.push_back(G.hom(x, y));
  }
  std::vector<Transversal> out;
  std::vector<std::size_t> digit(others.size(), 0);
  while (true) {
    Transversal t{x, std::vector<Arrow>(G.size(), kNoArrow)};
    t.pick[x] = x;
    for (std::size_t i = 0; i < others.size(); ++i) t.pick[others[i]] = choices[i][digit[i]];
    out.push_back(std::move(t));
    std::size_t i = others.size();
    while (true) {
      if (i == 0) return out;
      --i;
      if (++digit[i] < choices[i].size()) break;
      digit[i] = 0;
    }
  }
}

inline Transversal first_transversal(const Groupoid& G, Arrow x) {
  return transversals(G, x).front();
}

/// g_x = tau_{t(g)}^{-1} g tau_{s(g)}, an element of G(x).
inline Arrow corner(const Groupoid& G, Arrow g, const Transversal& tau) {
  return G.compose(G.inv(tau.at(G.tgt(g))), g, tau.at(G.src(g)));
}

/// Image of g under G -> G0^2 x G(x).
struct SplitArrow {
  Arrow src;
  Arrow tgt;
  Arrow loop;
  friend bool operator==(const SplitArrow&, const SplitArrow&) = default;
};

inline SplitArrow psi_split(const Groupoid& G, Arrow g, const Transversal& tau) {
  return {G.src(g), G.tgt(g), corner(G, g, tau)};
}

/// Inverse of psi_split: ((y, z), h) -> tau_z h tau_y^{-1}.
inline Arrow psi_merge(const Groupoid& G, const SplitArrow& s, const Transversal& tau) {
  return G.compose(tau.at(s.tgt), s.loop, G.inv(tau.at(s.src)));
}

/// Coarse groupoid Y^2: arrow (y,z) has source y and target z.
inline Groupoid build_coarse(const std::vector<std::string>& objects) {
  if (objects.empty()) {
    throw Error(ErrorKind::EmptyObjectSet, "coarse groupoid over an empty set");
  }
  RawGroupoid raw;
  raw.objects = objects;
  const auto pair = [&](std::size_t y, std::size_t z) {
    return y == z ? objects[y] : "(" + objects[y] + "," + objects[z] + ")";
  };
  const std::size_t m = objects.size();
  for (std::size_t y = 0; y < m; ++y) {
    for (std::size_t z = 0; z < m; ++z) {
      if (y != z) raw.arrows.push_back({pair(y, z), objects[y], objects[z]});
    }
  }
  for (std::size_t y = 0; y < m; ++y) {
    for (std::size_t z = 0; z < m; ++z) {
      for (std::size_t w = 0; w < m; ++w) {
        if (y == z || z == w) continue;
        raw.products.push_back({pair(z, w), pair(y, z), pair(y, w)});
      }
    }
  }
  return validate_groupoid(raw);
}

/// Gamma^m_H: objects 1..m, arrows (i,g,j) with s = j, t = i and
/// (i,g,j)(j,h,l) = (i,gh,l). `group` must be a one-object groupoid.
inline Groupoid build_gamma(std::size_t m, const Groupoid& group) {
  if (m == 0) throw Error(ErrorKind::EmptyObjectSet, "Gamma^0 has no objects");
  if (group.objects().size() != 1) {
    throw Error(ErrorKind::ShapeMismatch, "build_gamma needs a one-object groupoid");
  }
  const Arrow e = group.objects().front();
  RawGroupoid raw;
  for (std::size_t i = 1; i <= m; ++i) raw.objects.push_back(std::to_string(i));
  const auto name = [&](std::size_t i, Arrow g, std::size_t j) {
    if (i == j && g == e) return std::to_string(i);
    return "(" + std::to_string(i) + "," + group.name(g) + "," + std::to_string(j) + ")";
  };
  for (std::size_t i = 1; i <= m; ++i) {
    for (Arrow g = 0; g < group.size(); ++g) {
      for (std::size_t j = 1; j <= m; ++j) {
        if (i == j && g == e) continue;
        raw.arrows.push_back({name(i, g, j), std::to_string(j), std::to_string(i)});
      }
    }
  }
  for (std::size_t i = 1; i <= m; ++i) {
    for (Arrow g = 0; g < group.size(); ++g) {
      for (std::size_t j = 1; j <= m; ++j) {
        for (Arrow h = 0; h < group.size(); ++h) {
          for (std::size_t l = 1; l <= m; ++l) {
            raw.products.push_back(
                {name(i, g, j), name(j, h, l), name(i, group.compose(g, h), l)});
          }
        }
      }
    }
  }
  return validate_groupoid(raw);
}

/// Cyclic group Z_n as a one-object groupoid with arrows e, c, c^2, ...
inline Groupoid cyclic_group(std::size_t n) {
  const auto name = [](std::size_t k) {
    return k == 0 ? std::string("e") : k == 1 ? std::string("c") : "c^" + std::to_string(k);
  };
  RawGroupoid raw;
  raw.objects = {"e"};
  for (std::size_t k = 1; k < n; ++k) raw.arrows.push_back({name(k), "e", "e"});
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = 1; b < n; ++b) raw.products.push_back({name(a), name(b), name((a + b) % n)});
  }
  return validate_groupoid(raw);
}

/// Symmetric group on k letters; arrows are named by one-line notation
/// ("123" is the identity, object "e").
inline Groupoid symmetric_group(std::size_t k) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const auto name = [&](const std::vector<std::size_t>& q) {
    if (std::is_sorted(q.begin(), q.end())) return std::string("e");
    std::string s;
    for (const auto v : q) s += static_cast<char>('1' + v);
    return s;
  };
  RawGroupoid raw;
  raw.objects = {"e"};
  for (std::size_t i = 1; i < perms.size(); ++i) raw.arrows.push_back({name(perms[i]), "e", "e"});
  for (std::size_t i = 1; i < perms.size(); ++i) {
    for (std::size_t j = 1; j < perms.size(); ++j) {
      std::vector<std::size_t> c(k);
      for (std::size_t t = 0; t < k; ++t) c[t] = perms[i][perms[j][t]];
      raw.products.push_back({name(perms[i]), name(perms[j]), name(c)});
    }
  }
  return validate_groupoid(raw);
}

}  // namespace pga
