// io.hpp
// Spec mini-language parsers (families, rotations, regions, groups, set
// generators), the set file format, and JSON serialization for reports and
// certificates. All machine formats are documented in FORMATS.md.

#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "sumsets/averaging.hpp"
#include "sumsets/finitegroup.hpp"
#include "sumsets/kronecker.hpp"
#include "sumsets/windowset.hpp"

namespace sumsets {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Spec mini-languages
// ---------------------------------------------------------------------------

// "interval" | "power:1.5" | "genpoly:sqrt2*n^4-pi*n^2" |
// "explicit:1,2,3" | "file:<path>" (newline-separated integers).
SequenceFamily parse_family_spec(const std::string& spec);

// "torus:d=1,alpha=sqrt2" | "torus:d=2,alpha=sqrt2,sqrt3". Components are
// named constants (flagged irrational) or decimal literals (flagged
// rational); fractional parts are taken at full precision.
TorusRotation parse_rotation_spec(const std::string& spec);

// "box:a1,b1[,a2,b2,...]" with one (a,b) pair per axis; unions joined by
// '|'. Endpoints are named constants or decimals; a > b wraps around.
TorusRegion parse_region_spec(const std::string& spec, int dimension);

// Set generator over [lo,hi]:
//   "gen:<kind>"                    example sets (squares, primes, ...)
//   "family:<family spec>;n=<j>"    support of the family's first j values
//   "all" | "empty"
//   "explicit:1,2,3"
//   "mod:<q>;r=0,1"                 residue classes
//   "file:<path>"                   set file (window intersected with [lo,hi])
WindowSet parse_set_spec(const std::string& spec, std::int64_t lo,
                         std::int64_t hi);

// ---------------------------------------------------------------------------
// Set files: "#window lo hi" header, then lines of single integers or
// "run start len".
// ---------------------------------------------------------------------------
WindowSet read_set_file(const std::string& path);
void write_set_file(const WindowSet& s, const std::string& path);

// ---------------------------------------------------------------------------
// JSON serialization. Rationals are {"num":..,"den":..} (strings when the
// values exceed int64); reals are decimal strings with a precision_bits
// sibling so nothing is silently coerced to a float.
// ---------------------------------------------------------------------------
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json real_json(const Real& x);

Json to_json(const DensityEstimate& d);
Json to_json(const SyndeticReport& r);
Json to_json(const PwsScanReport& r);
Json to_json(const SteinhausReport& r);
Json to_json(const SequenceDensity& d);
Json to_json(const EntryGapReport& r);
Json to_json(const ConvolutionComparisonReport& r);

Json certificate_json(const BlockerCertificate& cert);
BlockerCertificate certificate_from_json(const Json& j);

// Profile rows as CSV: "j,theta_argmax,max_abs" header + one row per j.
std::string profile_csv(const std::vector<ProfileRow>& rows);

}  // namespace sumsets
