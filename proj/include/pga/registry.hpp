#pragma once

// Named built-in scenarios. Each one is checked by its module's verifier
// when loaded.

#include <string>
#include <string_view>
#include <vector>

#include "pga/datum.hpp"
#include "pga/error.hpp"
#include "pga/fixtures.hpp"
#include "pga/globalization.hpp"
#include "pga/scenario.hpp"

namespace pga {

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"FX-HEX", "FX-B2", "FX-GAMMA", "FX-DAT", "FX-GLOB"};
  return names;
}

namespace detail {

inline void require_ok(const Report& r, std::string_view fixture) {
  if (!r.ok()) {
    throw Error(ErrorKind::InternalInconsistency,
                "fixture " + std::string(fixture) + " fails its verifier: " + r.first()->rule);
  }
}

}  // namespace detail

/// Throws UnresolvedReference for an unknown name.
inline Scenario fixture_scenario(std::string_view name, std::uint32_t p = 3) {
  Scenario s;
  if (name == "FX-HEX") {
    s.groupoid = fx_hex();
    s.ring = std::make_shared<const SplitRing>(SplitRing::numbered(p, 1));
  } else if (name == "FX-B2" || name == "FX-GAMMA") {
    PartialAction a = name == "FX-B2" ? fx_b2(p) : fx_gamma(p);
    detail::require_ok(verify_partial_action(a), name);
    s.groupoid = a.groupoid;
    s.ring = a.ring;
    s.action = std::move(a);
  } else if (name == "FX-DAT") {
    Datum d = fx_dat(p);
    detail::require_ok(verify_datum(d), name);
    s.groupoid = d.groupoid;
    s.ring = d.ring;
    s.datum = std::move(d);
  } else if (name == "FX-GLOB") {
    GlobalizationData gd = fx_glob(p);
    detail::require_ok(verify_datum(gd.datum), name);
    build_globalization(gd);
    s.groupoid = gd.datum.groupoid;
    s.ring = gd.datum.ring;
    s.datum = gd.datum;
    s.globalization = std::move(gd);
  } else {
    throw Error(ErrorKind::UnresolvedReference, "unknown fixture '" + std::string(name) + "'",
                {std::string(name)});
  }
  return s;
}

}  // namespace pga
