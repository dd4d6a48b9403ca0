#pragma once

#include <string>

#include "skewlab/brace.hpp"
#include "skewlab/group.hpp"
#include "skewlab/theorems.hpp"

namespace skewlab::io {

/// Group document: a `name` line, an `order` line, then one table row per
/// element, `#` comments and blank lines allowed anywhere.  Serialization is
/// byte-stable and parse(serialize(g)) reproduces order, table, and name.
std::string serialize_group(const FiniteGroup& g);
FiniteGroup parse_group(const std::string& document);

/// Brace document: `brace`, `name`, `provenance`, `order`, then the additive
/// and multiplicative tables under `add` / `mul` markers.
std::string serialize_brace(const SkewBrace& b);
SkewBrace parse_brace(const std::string& document);

/// Canonical sweep report document (JSON, fixed key order, no timings, so
/// bytes are identical across reruns and worker counts).
std::string serialize_report(const SweepReport& r);
SweepReport parse_report(const std::string& document);

/// Per-order rows plus a total row.
std::string report_to_csv(const SweepReport& r);
/// Table for humans.  Wall-clock columns are opt-in so that the default
/// rendering stays byte-identical across reruns and worker counts.
std::string report_to_human(const SweepReport& r, bool timings = false);

}  // namespace skewlab::io
