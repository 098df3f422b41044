#pragma once

// Plain-text scenario files: named stanzas for a groupoid, a split ring, and
// optionally a partial action, a datum and a globalization package.
//
//   # comment
//   groupoid
//     object x
//     arrow g x x
//     product g g x          # g after g
//   end
//   ring 3
//     atoms e1 e2
//   end
//   action
//     map x e1->e1 e2->e2    # one line per arrow; the ideal is the range
//   end
//   datum x
//     tau y l                # one line per object other than the base
//     ideal x e1
//     gamma x e1->e1         # gamma_{tau_y}, one line per object
//     loop g e1->e1          # one line per loop at the base
//   end
//   globalization
//     atoms b1 b2 b3
//     embed e1 b1            # one line per atom of A
//     J x b1 b2
//     tilde-tau x b1->b1 b2->b2
//     tilde-loop g b1->b2 b2->b1
//   end
//   check verify ext
//
// Atom maps are whitespace-separated a->b pairs.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pga/datum.hpp"
#include "pga/error.hpp"
#include "pga/globalization.hpp"
#include "pga/groupoid.hpp"
#include "pga/partial_action.hpp"
#include "pga/split_ring.hpp"

namespace pga {

struct Scenario {
  GroupoidPtr groupoid;
  RingPtr ring;
  std::optional<PartialAction> action;
  std::optional<Datum> datum;
  std::optional<GlobalizationData> globalization;
  std::vector<std::string> checks;
};

inline bool same_globalization(const GlobalizationData& a, const GlobalizationData& b) {
  return a.datum == b.datum && *a.B == *b.B && a.embed == b.embed && a.J == b.J &&
         a.tilde_x.ideal == b.tilde_x.ideal && a.tilde_x.iso == b.tilde_x.iso && a.tilde_tau == b.tilde_tau;
}

inline bool operator==(const Scenario& a, const Scenario& b) {
  if (!(*a.groupoid == *b.groupoid) || !(*a.ring == *b.ring) || a.checks != b.checks) return false;
  if (a.action.has_value() != b.action.has_value() || (a.action && !(*a.action == *b.action))) return false;
  if (a.datum.has_value() != b.datum.has_value() || (a.datum && !(*a.datum == *b.datum))) return false;
  if (a.globalization.has_value() != b.globalization.has_value()) return false;
  return !a.globalization || same_globalization(*a.globalization, *b.globalization);
}

namespace detail {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t col;
};

inline std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view row = text.substr(pos, eol - pos);
    if (const auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < row.size()) {
      while (i < row.size() && (row[i] == ' ' || row[i] == '\t' || row[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < row.size() && row[i] != ' ' && row[i] != '\t' && row[i] != '\r') ++i;
      if (i > start) toks.push_back({std::string(row.substr(start, i - start)), line, start + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (eol == text.size()) break;
    pos = eol + 1;
    ++line;
  }
  return lines;
}

[[noreturn]] inline void fail(const Token& t, const std::string& msg) {
  throw ParseError(ErrorKind::ParseError, t.line, t.col, msg);
}

[[noreturn]] inline void unresolved(const Token& t, std::size_t offset, const std::string& msg) {
  throw ParseError(ErrorKind::UnresolvedReference, t.line, t.col + offset, msg);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

  Scenario run() {
    if (lines_.empty()) throw ParseError(ErrorKind::ParseError, 1, 1, "empty scenario");
    Scenario s;
    while (i_ < lines_.size()) {
      const auto& head = lines_[i_];
      const std::string& kw = head[0].text;
      if (kw == "groupoid") {
        expect_args(head, 0);
        if (s.groupoid) fail(head[0], "second groupoid stanza");
        s.groupoid = parse_groupoid();
      } else if (kw == "ring") {
        expect_args(head, 1);
        if (s.ring) fail(head[0], "second ring stanza");
        s.ring = parse_ring(head[1]);
      } else if (kw == "action") {
        expect_args(head, 0);
        require(s, head[0]);
        if (s.action) fail(head[0], "second action stanza");
        s.action = parse_action(s);
      } else if (kw == "datum") {
        expect_args(head, 1);
        require(s, head[0]);
        if (s.datum) fail(head[0], "second datum stanza");
        s.datum = parse_datum(s, head[1]);
      } else if (kw == "globalization") {
        expect_args(head, 0);
        require(s, head[0]);
        if (!s.datum) fail(head[0], "globalization needs a datum stanza before it");
        if (s.globalization) fail(head[0], "second globalization stanza");
        s.globalization = parse_globalization(s);
      } else if (kw == "check") {
        if (head.size() < 2) fail(head[0], "check needs at least one name");
        for (std::size_t k = 1; k < head.size(); ++k) s.checks.push_back(head[k].text);
        ++i_;
      } else {
        fail(head[0], "unknown stanza '" + kw + "'");
      }
    }
    if (!s.groupoid) throw ParseError(ErrorKind::ParseError, 1, 1, "no groupoid stanza");
    if (!s.ring) throw ParseError(ErrorKind::ParseError, 1, 1, "no ring stanza");
    return s;
  }

 private:
  static void expect_args(const std::vector<Token>& line, std::size_t n) {
    if (line.size() != n + 1) {
      fail(line[0], "'" + line[0].text + "' takes " + std::to_string(n) + " argument(s)");
    }
  }

  static void require(const Scenario& s, const Token& at) {
    if (!s.groupoid || !s.ring) fail(at, "'" + at.text + "' needs the groupoid and ring stanzas first");
  }

  // Lines of the current stanza up to its `end`, advancing past it.
  std::vector<const std::vector<Token>*> body(const Token*& end_tok) {
    const Token& open = lines_[i_][0];
    std::vector<const std::vector<Token>*> out;
    ++i_;
    while (i_ < lines_.size()) {
      if (lines_[i_][0].text == "end") {
        expect_args(lines_[i_], 0);
        end_tok = &lines_[i_][0];
        ++i_;
        return out;
      }
      out.push_back(&lines_[i_]);
      ++i_;
    }
    fail(open, "stanza '" + open.text + "' is not closed by 'end'");
  }

  GroupoidPtr parse_groupoid() {
    const Token* end = nullptr;
    RawGroupoid raw;
    for (const auto* line : body(end)) {
      const auto& l = *line;
      const std::string& kw = l[0].text;
      if (kw == "object") {
        expect_args(l, 1);
        raw.objects.push_back(l[1].text);
      } else if (kw == "arrow") {
        expect_args(l, 3);
        raw.arrows.push_back({l[1].text, l[2].text, l[3].text});
      } else if (kw == "product") {
        expect_args(l, 3);
        raw.products.push_back({l[1].text, l[2].text, l[3].text});
      } else {
        fail(l[0], "unknown groupoid line '" + kw + "'");
      }
    }
    try {
      return std::make_shared<const Groupoid>(validate_groupoid(raw));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.kind(), end->line, end->col, e.what());
    }
  }

  static std::uint32_t parse_uint(const Token& t) {
    std::uint32_t v = 0;
    if (t.text.empty() || t.text.size() > 9) fail(t, "expected a number");
    for (const char c : t.text) {
      if (c < '0' || c > '9') fail(t, "expected a number");
      v = v * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return v;
  }

  RingPtr parse_ring(const Token& p_tok) {
    const std::uint32_t p = parse_uint(p_tok);
    const Token* end = nullptr;
    std::vector<std::string> atoms;
    for (const auto* line : body(end)) {
      const auto& l = *line;
      if (l[0].text != "atoms") fail(l[0], "unknown ring line '" + l[0].text + "'");
      for (std::size_t k = 1; k < l.size(); ++k) atoms.push_back(l[k].text);
    }
    try {
      return std::make_shared<const SplitRing>(p, atoms);
    } catch (const Error& e) {
      throw ParseError(e.kind(), p_tok.line, p_tok.col, e.what());
    }
  }

  static Arrow arrow_ref(const Groupoid& G, const Token& t) {
    if (auto g = G.find(t.text)) return *g;
    unresolved(t, 0, "unknown arrow '" + t.text + "'");
  }

  static Arrow object_ref(const Groupoid& G, const Token& t) {
    const Arrow g = arrow_ref(G, t);
    if (!G.is_object(g)) fail(t, "'" + t.text + "' is not an object");
    return g;
  }

  static std::size_t atom_ref(const SplitRing& A, const Token& t, std::string_view name, std::size_t offset) {
    if (auto a = A.atom_index(name)) return *a;
    unresolved(t, offset, "unknown atom '" + std::string(name) + "'");
  }

  static Ideal atoms_of(const SplitRing& A, const std::vector<Token>& l, std::size_t from) {
    Ideal I;
    for (std::size_t k = from; k < l.size(); ++k) {
      const std::size_t a = atom_ref(A, l[k], l[k].text, 0);
      if (I.contains(a)) fail(l[k], "atom listed twice");
      I.mask |= std::uint64_t{1} << a;
    }
    return I;
  }

  // a->b pairs from l[from..] with a in `src` and b in `dst`.
  static PartialRingIso map_of(const SplitRing& src, const SplitRing& dst, const std::vector<Token>& l,
                               std::size_t from) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    Ideal dom, cod;
    for (std::size_t k = from; k < l.size(); ++k) {
      const Token& t = l[k];
      const auto arrow = t.text.find("->");
      if (arrow == std::string::npos || arrow == 0 || arrow + 2 == t.text.size()) {
        fail(t, "expected an atom pair a->b");
      }
      const std::size_t a = atom_ref(src, t, std::string_view(t.text).substr(0, arrow), 0);
      const std::size_t b = atom_ref(dst, t, std::string_view(t.text).substr(arrow + 2), arrow + 2);
      if (dom.contains(a) || cod.contains(b)) fail(t, "atom map is not a bijection");
      dom.mask |= std::uint64_t{1} << a;
      cod.mask |= std::uint64_t{1} << b;
      pairs.emplace_back(a, b);
    }
    return PartialRingIso::from_pairs(pairs);
  }

  PartialAction parse_action(const Scenario& s) {
    const Groupoid& G = *s.groupoid;
    const Token* end = nullptr;
    PartialAction a{s.groupoid, s.ring, std::vector<Ideal>(G.size()), std::vector<PartialRingIso>(G.size())};
    std::vector<char> seen(G.size(), 0);
    for (const auto* line : body(end)) {
      const auto& l = *line;
      if (l[0].text != "map" || l.size() < 2) fail(l[0], "expected 'map <arrow> a->b ...'");
      const Arrow g = arrow_ref(G, l[1]);
      if (seen[g]) fail(l[1], "second map for arrow '" + l[1].text + "'");
      seen[g] = 1;
      a.iso[g] = map_of(*s.ring, *s.ring, l, 2);
      a.ideal[g] = a.iso[g].cod();
    }
    for (Arrow g = 0; g < G.size(); ++g) {
      if (!seen[g]) fail(*end, "no map for arrow '" + G.name(g) + "'");
    }
    return a;
  }

  Datum parse_datum(const Scenario& s, const Token& base_tok) {
    const Groupoid& G = *s.groupoid;
    const SplitRing& A = *s.ring;
    const Arrow x = object_ref(G, base_tok);
    const Token* end = nullptr;
    const auto lines = body(end);
    Transversal tau{x, std::vector<Arrow>(G.size(), kNoArrow)};
    tau.pick[x] = x;
    for (const auto* line : lines) {
      const auto& l = *line;
      if (l[0].text != "tau") continue;
      expect_args(l, 2);
      const Arrow y = object_ref(G, l[1]);
      const Arrow t = arrow_ref(G, l[2]);
      if (y == x) fail(l[1], "tau of the base is the base itself");
      if (tau.pick[y] != kNoArrow) fail(l[1], "second tau for '" + l[1].text + "'");
      if (G.src(t) != x || G.tgt(t) != y) fail(l[2], "'" + l[2].text + "' is not an arrow from the base");
      tau.pick[y] = t;
    }
    for (const Arrow y : G.objects()) {
      if (tau.pick[y] == kNoArrow) fail(*end, "no tau for object '" + G.name(y) + "'");
    }
    if (!G.connected()) fail(base_tok, "a datum needs a connected groupoid");
    Datum d = make_datum(s.groupoid, s.ring, tau);
    std::vector<char> has_ideal(G.objects().size(), 0), has_gamma(G.objects().size(), 0);
    std::vector<char> has_loop(d.loops->groupoid.size(), 0);
    for (const auto* line : lines) {
      const auto& l = *line;
      const std::string& kw = l[0].text;
      if (kw == "tau") continue;
      if (l.size() < 2) fail(l[0], "'" + kw + "' needs a name");
      if (kw == "ideal" || kw == "gamma") {
        const std::size_t k = d.pos(object_ref(G, l[1]));
        auto& seen = kw == "ideal" ? has_ideal : has_gamma;
        if (seen[k]) fail(l[1], "second " + kw + " for '" + l[1].text + "'");
        seen[k] = 1;
        if (kw == "ideal") {
          d.I[k] = atoms_of(A, l, 2);
        } else {
          d.gamma_tau[k] = map_of(A, A, l, 2);
        }
      } else if (kw == "loop") {
        const Arrow h = arrow_ref(G, l[1]);
        const Arrow j = d.loops->from_parent[h];
        if (j == kNoArrow) fail(l[1], "'" + l[1].text + "' is not a loop at the base");
        if (has_loop[j]) fail(l[1], "second loop line for '" + l[1].text + "'");
        has_loop[j] = 1;
        d.gamma_x.iso[j] = map_of(A, A, l, 2);
        d.gamma_x.ideal[j] = d.gamma_x.iso[j].cod();
      } else {
        fail(l[0], "unknown datum line '" + kw + "'");
      }
    }
    for (const Arrow y : G.objects()) {
      if (!has_ideal[d.pos(y)]) fail(*end, "no ideal for object '" + G.name(y) + "'");
      if (!has_gamma[d.pos(y)]) fail(*end, "no gamma for object '" + G.name(y) + "'");
    }
    for (Arrow j = 0; j < has_loop.size(); ++j) {
      if (!has_loop[j]) fail(*end, "no loop line for '" + G.name(d.loops->to_parent[j]) + "'");
    }
    return d;
  }

  GlobalizationData parse_globalization(const Scenario& s) {
    const Datum& d = *s.datum;
    const Groupoid& G = d.G();
    const SplitRing& A = d.A();
    const Token* end = nullptr;
    const auto lines = body(end);
    std::vector<std::string> b_atoms;
    for (const auto* line : lines) {
      if ((*line)[0].text != "atoms") continue;
      for (std::size_t k = 1; k < line->size(); ++k) b_atoms.push_back((*line)[k].text);
    }
    RingPtr B;
    try {
      B = std::make_shared<const SplitRing>(A.p(), b_atoms);
    } catch (const Error& e) {
      throw ParseError(e.kind(), end->line, end->col, e.what());
    }
    GlobalizationData gd{d, B, std::vector<std::size_t>(A.size(), kNoAtom), {}, {}, {}};
    gd.J.assign(G.objects().size(), Ideal{});
    gd.tilde_tau.assign(G.objects().size(), PartialRingIso{});
    gd.tilde_x = PartialAction{d.gamma_x.groupoid, B, {}, {}};
    gd.tilde_x.ideal.assign(d.loops->groupoid.size(), Ideal{});
    gd.tilde_x.iso.assign(d.loops->groupoid.size(), PartialRingIso{});
    std::vector<char> has_J(G.objects().size(), 0), has_tau(G.objects().size(), 0);
    std::vector<char> has_loop(d.loops->groupoid.size(), 0);
    for (const auto* line : lines) {
      const auto& l = *line;
      const std::string& kw = l[0].text;
      if (kw == "atoms") continue;
      if (kw == "embed") {
        expect_args(l, 2);
        const std::size_t a = atom_ref(A, l[1], l[1].text, 0);
        if (gd.embed[a] != kNoAtom) fail(l[1], "second embed for '" + l[1].text + "'");
        gd.embed[a] = atom_ref(*B, l[2], l[2].text, 0);
      } else if (kw == "J" || kw == "tilde-tau") {
        if (l.size() < 2) fail(l[0], "'" + kw + "' needs an object");
        const std::size_t k = d.pos(object_ref(G, l[1]));
        auto& seen = kw == "J" ? has_J : has_tau;
        if (seen[k]) fail(l[1], "second " + kw + " for '" + l[1].text + "'");
        seen[k] = 1;
        if (kw == "J") {
          gd.J[k] = atoms_of(*B, l, 2);
        } else {
          gd.tilde_tau[k] = map_of(*B, *B, l, 2);
        }
      } else if (kw == "tilde-loop") {
        if (l.size() < 2) fail(l[0], "'tilde-loop' needs a loop");
        const Arrow h = arrow_ref(G, l[1]);
        const Arrow j = d.loops->from_parent[h];
        if (j == kNoArrow) fail(l[1], "'" + l[1].text + "' is not a loop at the base");
        if (has_loop[j]) fail(l[1], "second tilde-loop for '" + l[1].text + "'");
        has_loop[j] = 1;
        gd.tilde_x.iso[j] = map_of(*B, *B, l, 2);
        gd.tilde_x.ideal[j] = gd.tilde_x.iso[j].cod();
      } else {
        fail(l[0], "unknown globalization line '" + kw + "'");
      }
    }
    for (std::size_t a = 0; a < A.size(); ++a) {
      if (gd.embed[a] == kNoAtom) fail(*end, "no embed for atom '" + A.atom_name(a) + "'");
    }
    for (const Arrow y : G.objects()) {
      if (!has_J[d.pos(y)]) fail(*end, "no J for object '" + G.name(y) + "'");
      if (!has_tau[d.pos(y)]) fail(*end, "no tilde-tau for object '" + G.name(y) + "'");
    }
    for (Arrow j = 0; j < has_loop.size(); ++j) {
      if (!has_loop[j]) fail(*end, "no tilde-loop for '" + G.name(d.loops->to_parent[j]) + "'");
    }
    return gd;
  }

  std::vector<std::vector<Token>> lines_;
  std::size_t i_ = 0;
};

inline std::string map_text(const SplitRing& src, const SplitRing& dst, const PartialRingIso& f) {
  std::string s;
  for (const auto& [a, b] : f.pairs()) s += " " + src.atom_name(a) + "->" + dst.atom_name(b);
  return s;
}

inline std::string atoms_text(const SplitRing& A, Ideal I) {
  std::string s;
  I.for_each([&](std::size_t a) { s += " " + A.atom_name(a); });
  return s;
}

}  // namespace detail

inline Scenario parse_scenario(std::string_view text) { return detail::Parser(text).run(); }

/// The `action` stanza for a, named over its own ring.
inline std::string action_stanza(const PartialAction& a) {
  std::string out = "action\n";
  for (Arrow g = 0; g < a.G().size(); ++g) out += "  map " + a.G().name(g) + detail::map_text(a.A(), a.A(), a.iso[g]) + "\n";
  return out + "end\n";
}

inline std::string datum_stanza(const Datum& d) {
  const Groupoid& G = d.G();
  const SplitRing& A = d.A();
  std::string out = "datum " + G.name(d.base()) + "\n";
  for (const Arrow y : G.objects()) {
    if (y != d.base()) out += "  tau " + G.name(y) + " " + G.name(d.tau.at(y)) + "\n";
  }
  for (const Arrow y : G.objects()) out += "  ideal " + G.name(y) + detail::atoms_text(A, d.ideal(y)) + "\n";
  for (const Arrow y : G.objects()) out += "  gamma " + G.name(y) + detail::map_text(A, A, d.gamma(y)) + "\n";
  for (Arrow j = 0; j < d.loops->groupoid.size(); ++j) {
    out += "  loop " + G.name(d.loops->to_parent[j]) + detail::map_text(A, A, d.gamma_x.iso[j]) + "\n";
  }
  return out + "end\n";
}

/// Text that parse_scenario reads back to an equal Scenario when the
/// groupoid lists its objects first.
inline std::string serialize_scenario(const Scenario& s) {
  std::ostringstream out;
  const Groupoid& G = *s.groupoid;
  const SplitRing& A = *s.ring;
  const RawGroupoid raw = G.to_raw();
  out << "groupoid\n";
  for (const auto& o : raw.objects) out << "  object " << o << "\n";
  for (const auto& a : raw.arrows) out << "  arrow " << a.name << " " << a.src << " " << a.tgt << "\n";
  for (const auto& p : raw.products) out << "  product " << p.left << " " << p.right << " " << p.result << "\n";
  out << "end\n";
  out << "ring " << A.p() << "\n  atoms";
  for (const auto& a : A.atoms()) out << " " << a;
  out << "\nend\n";
  if (s.action) out << action_stanza(*s.action);
  if (s.datum) out << datum_stanza(*s.datum);
  if (s.globalization) {
    const GlobalizationData& gd = *s.globalization;
    const Datum& d = gd.datum;
    const SplitRing& B = *gd.B;
    out << "globalization\n  atoms";
    for (const auto& b : B.atoms()) out << " " << b;
    out << "\n";
    for (std::size_t a = 0; a < A.size(); ++a) out << "  embed " << A.atom_name(a) << " " << B.atom_name(gd.embed[a]) << "\n";
    for (const Arrow y : G.objects()) out << "  J " << G.name(y) << detail::atoms_text(B, gd.J[d.pos(y)]) << "\n";
    for (const Arrow y : G.objects()) {
      out << "  tilde-tau " << G.name(y) << detail::map_text(B, B, gd.tilde_tau[d.pos(y)]) << "\n";
    }
    for (Arrow j = 0; j < d.loops->groupoid.size(); ++j) {
      out << "  tilde-loop " << G.name(d.loops->to_parent[j]) << detail::map_text(B, B, gd.tilde_x.iso[j]) << "\n";
    }
    out << "end\n";
  }
  if (!s.checks.empty()) {
    out << "check";
    for (const auto& c : s.checks) out << " " << c;
    out << "\n";
  }
  return out.str();
}

}  // namespace pga
