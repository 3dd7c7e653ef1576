#pragma once
// Wire formats. JSON is the canonical, parseable representation for
// problems, families, index reports, and sampling results; CSV and the
// aligned table are render-only views of reports. Exact values serialize as
// numerator/denominator string pairs so no precision is lost to JSON number
// types, with decimal renderings alongside at the report's precision.

#include <string>

#include "pidx/family.hpp"
#include "pidx/indices.hpp"
#include "pidx/instances.hpp"
#include "pidx/sampling.hpp"

namespace pidx {

enum class ReportFormat { json, csv, table };
const char* to_string(ReportFormat format);

// Problem files: {"kind": ..., "name"?: ...} plus kind-specific fields --
// threshold: quota, weights; dominating_set / vertex_cover: n, edges;
// hitting_set: n, sets; monotone_family: n, minimal_sets. Structural errors
// name the offending field; JSON syntax errors name the line.
Problem parse_problem(const std::string& text);
std::string render_problem(const Problem& problem);

// Families render as the bare JSON array of member arrays in canonical order,
// e.g. [[3],[1,4],[2,4]]. parse accepts that bare form (ground size inferred
// as the largest label, kind msp) or a wrapped object
// {"n": ..., "kind": ..., "members": [...]} for a lossless round-trip.
std::string render_family(const MinimalFamily& family);
MinimalFamily parse_family(const std::string& text);

std::string render_report(const IndexReport& report, ReportFormat format);
// JSON reports only; inverse of render_report(report, json).
IndexReport parse_report(const std::string& text);

// Sampling results as one JSON object (estimates, half-widths, sample count,
// seed) -- reproducible byte-for-byte from the same seed.
std::string render_sample(const SampleEstimate& estimate,
                          const std::string& index_name,
                          const SampleConfig& config);

}  // namespace pidx
