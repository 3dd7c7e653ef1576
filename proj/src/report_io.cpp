#include "pidx/report_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace pidx {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail_parse(const std::string& text,
                             const nlohmann::json::parse_error& e) {
  // nlohmann reports a byte offset; turn it into a line number.
  std::size_t line = 1;
  const std::size_t upto = std::min(text.size(), e.byte);
  for (std::size_t i = 0; i + 1 < upto; ++i) {
    if (text[i] == '\n') ++line;
  }
  throw ParseError("line " + std::to_string(line) + ": " + e.what());
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_parse(text, e);
  }
}

[[noreturn]] void fail_field(const std::string& field, const std::string& why) {
  throw ParseError("field \"" + field + "\": " + why);
}

const Json& require_field(const Json& obj, const std::string& field) {
  const auto it = obj.find(field);
  if (it == obj.end()) fail_field(field, "missing");
  return *it;
}

std::string read_string(const Json& value, const std::string& field) {
  if (!value.is_string()) fail_field(field, "must be a string");
  return value.get<std::string>();
}

int read_int(const Json& value, const std::string& field, long long lo,
             long long hi) {
  if (!value.is_number_integer()) fail_field(field, "must be an integer");
  const long long v = value.get<long long>();
  if (v < lo || v > hi) {
    fail_field(field, "must be between " + std::to_string(lo) + " and " +
                          std::to_string(hi));
  }
  return static_cast<int>(v);
}

std::uint64_t read_u64(const Json& value, const std::string& field) {
  // nlohmann stores non-negative integer literals as unsigned numbers.
  if (!value.is_number_unsigned()) {
    fail_field(field, "must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

SubsetMask read_label_set(const Json& value, const std::string& field) {
  if (!value.is_array()) fail_field(field, "must be an array of labels");
  SubsetMask mask;
  for (const Json& item : value) {
    const int label = read_int(item, field, 1, 63);
    if (mask.contains(label)) {
      fail_field(field, "duplicate label " + std::to_string(label));
    }
    mask = mask.with(label);
  }
  return mask;
}

std::vector<SubsetMask> read_set_list(const Json& value,
                                      const std::string& field) {
  if (!value.is_array()) fail_field(field, "must be an array of sets");
  std::vector<SubsetMask> out;
  for (const Json& item : value) out.push_back(read_label_set(item, field));
  return out;
}

Json labels_json(SubsetMask s) {
  Json arr = Json::array();
  for (Element e : s) arr.push_back(e);
  return arr;
}

Json members_json(const std::vector<SubsetMask>& members) {
  Json arr = Json::array();
  for (SubsetMask s : members) arr.push_back(labels_json(s));
  return arr;
}

Json rational_json(const Rational& r) {
  return Json{{"num", boost::multiprecision::numerator(r).str()},
              {"den", boost::multiprecision::denominator(r).str()}};
}

Rational read_rational(const Json& value, const std::string& field) {
  if (!value.is_object() || !value.contains("num") || !value.contains("den")) {
    fail_field(field, "must be an object with \"num\" and \"den\" strings");
  }
  try {
    const BigInt num(value["num"].get<std::string>());
    const BigInt den(value["den"].get<std::string>());
    if (den == 0) fail_field(field, "zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    fail_field(field, "malformed rational");
  }
}

constexpr IndexKind kAllIndexKinds[] = {
    IndexKind::shapley, IndexKind::banzhaf_raw, IndexKind::banzhaf_frac,
    IndexKind::banzhaf_norm, IndexKind::deegan_packel};

}  // namespace

const char* to_string(ReportFormat format) {
  switch (format) {
    case ReportFormat::json: return "json";
    case ReportFormat::csv: return "csv";
    case ReportFormat::table: return "table";
  }
  return "unknown";
}

Problem parse_problem(const std::string& text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("problem file must be a JSON object");
  const std::string kind = read_string(require_field(doc, "kind"), "kind");

  Problem problem;
  if (doc.contains("name")) {
    problem.name = read_string(doc["name"], "name");
  }

  if (kind == "threshold") {
    problem.kind = ProblemKind::threshold;
    ThresholdSpec spec;
    const Json& weights = require_field(doc, "weights");
    if (!weights.is_array() || weights.empty()) {
      fail_field("weights", "must be a nonempty array");
    }
    for (const Json& w : weights) spec.weights.push_back(read_u64(w, "weights"));
    spec.quota = read_u64(require_field(doc, "quota"), "quota");
    spec.validate();
    problem.spec = std::move(spec);
  } else if (kind == "dominating_set" || kind == "vertex_cover") {
    problem.kind = kind == "dominating_set" ? ProblemKind::dominating_set
                                            : ProblemKind::vertex_cover;
    GraphSpec spec;
    spec.vertex_count = read_int(require_field(doc, "n"), "n", 1, 63);
    const Json& edges = require_field(doc, "edges");
    if (!edges.is_array()) fail_field("edges", "must be an array of pairs");
    for (const Json& edge : edges) {
      if (!edge.is_array() || edge.size() != 2) {
        fail_field("edges", "each edge must be a pair of vertex labels");
      }
      spec.edges.emplace_back(read_int(edge[0], "edges", 1, 63),
                              read_int(edge[1], "edges", 1, 63));
    }
    spec.validate();
    if (problem.kind == ProblemKind::vertex_cover && spec.edges.empty()) {
      fail_field("edges", "vertex cover needs at least one edge");
    }
    problem.spec = std::move(spec);
  } else if (kind == "hitting_set") {
    problem.kind = ProblemKind::hitting_set;
    SetFamilySpec spec;
    spec.ground_size = read_int(require_field(doc, "n"), "n", 1, 63);
    spec.sets = read_set_list(require_field(doc, "sets"), "sets");
    spec.validate();
    problem.spec = std::move(spec);
  } else if (kind == "monotone_family") {
    problem.kind = ProblemKind::monotone_family;
    ExplicitFamilySpec spec;
    spec.ground_size = read_int(require_field(doc, "n"), "n", 1, 63);
    spec.minimal_sets =
        read_set_list(require_field(doc, "minimal_sets"), "minimal_sets");
    spec.validate();
    problem.spec = std::move(spec);
  } else {
    fail_field("kind", "unknown problem kind \"" + kind + "\"");
  }
  return problem;
}

std::string render_problem(const Problem& problem) {
  Json doc;
  doc["kind"] = to_string(problem.kind);
  if (problem.name) doc["name"] = *problem.name;
  switch (problem.kind) {
    case ProblemKind::threshold: {
      const auto& spec = std::get<ThresholdSpec>(problem.spec);
      doc["quota"] = spec.quota;
      doc["weights"] = spec.weights;
      break;
    }
    case ProblemKind::dominating_set:
    case ProblemKind::vertex_cover: {
      const auto& spec = std::get<GraphSpec>(problem.spec);
      doc["n"] = spec.vertex_count;
      Json edges = Json::array();
      for (auto [a, b] : spec.edges) edges.push_back(Json::array({a, b}));
      doc["edges"] = std::move(edges);
      break;
    }
    case ProblemKind::hitting_set: {
      const auto& spec = std::get<SetFamilySpec>(problem.spec);
      doc["n"] = spec.ground_size;
      doc["sets"] = members_json(spec.sets);
      break;
    }
    case ProblemKind::monotone_family: {
      const auto& spec = std::get<ExplicitFamilySpec>(problem.spec);
      doc["n"] = spec.ground_size;
      doc["minimal_sets"] = members_json(spec.minimal_sets);
      break;
    }
  }
  return doc.dump();
}

std::string render_family(const MinimalFamily& family) {
  return members_json(family.members()).dump();
}

namespace {

void require_proper_family(const std::vector<SubsetMask>& members) {
  if (members.empty()) {
    throw ParseError("family must have at least one member");
  }
  for (SubsetMask s : members) {
    if (s.empty()) fail_field("members", "must not contain the empty set");
  }
}

}  // namespace

MinimalFamily parse_family(const std::string& text) {
  const Json doc = parse_json(text);
  if (doc.is_array()) {
    // Bare form: ground size inferred as the largest label present.
    const std::vector<SubsetMask> members = read_set_list(doc, "members");
    require_proper_family(members);
    int ground_size = 1;
    for (SubsetMask s : members) {
      for (Element e : s) ground_size = std::max(ground_size, e);
    }
    return MinimalFamily(ground_size, FamilyKind::msp, members);
  }
  if (!doc.is_object()) {
    throw ParseError("family must be a JSON array or a wrapped object");
  }
  const int ground_size = read_int(require_field(doc, "n"), "n", 1, 63);
  FamilyKind kind = FamilyKind::msp;
  if (doc.contains("kind")) {
    const std::string name = read_string(doc["kind"], "kind");
    if (name == "msp") {
      kind = FamilyKind::msp;
    } else if (name == "mbp") {
      kind = FamilyKind::mbp;
    } else {
      fail_field("kind", "must be \"msp\" or \"mbp\"");
    }
  }
  std::vector<SubsetMask> members =
      read_set_list(require_field(doc, "members"), "members");
  require_proper_family(members);
  return MinimalFamily(ground_size, kind, std::move(members));
}

namespace {

std::vector<std::string> column_decimals(const std::vector<Rational>& values,
                                         int precision) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Rational& v : values) out.push_back(decimal_string(v, precision));
  return out;
}

std::string render_report_json(const IndexReport& report) {
  Json doc;
  doc["n"] = report.ground_size;
  doc["method"] = to_string(report.method);
  doc["problem"] = report.provenance;
  doc["precision"] = report.precision;
  Json indices = Json::object();
  for (IndexKind kind : kAllIndexKinds) {
    const auto& column = report.column(kind);
    if (column) {
      Json exact = Json::array();
      for (const Rational& v : *column) exact.push_back(rational_json(v));
      indices[to_string(kind)] =
          Json{{"exact", std::move(exact)},
               {"decimal", column_decimals(*column, report.precision)}};
    } else if (std::find(report.unavailable.begin(), report.unavailable.end(),
                         kind) != report.unavailable.end()) {
      indices[to_string(kind)] = nullptr;  // requested but not computable
    }
  }
  doc["indices"] = std::move(indices);
  return doc.dump();
}

std::string render_report_csv(const IndexReport& report) {
  std::ostringstream out;
  out << "index";
  for (int e = 1; e <= report.ground_size; ++e) out << ',' << e;
  out << '\n';
  for (IndexKind kind : kAllIndexKinds) {
    const auto& column = report.column(kind);
    if (column) {
      out << to_string(kind);
      for (const std::string& cell :
           column_decimals(*column, report.precision)) {
        out << ',' << cell;
      }
      out << '\n';
    } else if (std::find(report.unavailable.begin(), report.unavailable.end(),
                         kind) != report.unavailable.end()) {
      out << to_string(kind);
      for (int e = 0; e < report.ground_size; ++e) out << ",n/a";
      out << '\n';
    }
  }
  return out.str();
}

std::string render_report_table(const IndexReport& report) {
  // Rows are indices, columns are elements.
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"index"});
  for (int e = 1; e <= report.ground_size; ++e) {
    rows.front().push_back(std::to_string(e));
  }
  for (IndexKind kind : kAllIndexKinds) {
    const auto& column = report.column(kind);
    if (column) {
      std::vector<std::string> row{to_string(kind)};
      for (std::string& cell : column_decimals(*column, report.precision)) {
        row.push_back(std::move(cell));
      }
      rows.push_back(std::move(row));
    } else if (std::find(report.unavailable.begin(), report.unavailable.end(),
                         kind) != report.unavailable.end()) {
      std::vector<std::string> row{to_string(kind)};
      for (int e = 0; e < report.ground_size; ++e) row.push_back("n/a");
      rows.push_back(std::move(row));
    }
  }
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << row[c];
      if (c + 1 < row.size()) {
        out << std::string(widths[c] - row[c].size(), ' ');
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string render_report(const IndexReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: return render_report_json(report);
    case ReportFormat::csv: return render_report_csv(report);
    case ReportFormat::table: return render_report_table(report);
  }
  throw Error("unreachable report format");
}

IndexReport parse_report(const std::string& text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("report must be a JSON object");
  IndexReport report;
  report.ground_size = read_int(require_field(doc, "n"), "n", 1, 63);
  const std::string method =
      read_string(require_field(doc, "method"), "method");
  const auto parsed_method = compute_method_from_string(method);
  if (!parsed_method) fail_field("method", "unknown method \"" + method + "\"");
  report.method = *parsed_method;
  report.provenance = read_string(require_field(doc, "problem"), "problem");
  report.precision = read_int(require_field(doc, "precision"), "precision", 0, 18);
  const Json& indices = require_field(doc, "indices");
  if (!indices.is_object()) fail_field("indices", "must be an object");
  for (const auto& [key, value] : indices.items()) {
    const auto kind = index_kind_from_string(key);
    if (!kind) fail_field("indices", "unknown index \"" + key + "\"");
    if (value.is_null()) {
      report.unavailable.push_back(*kind);
      continue;
    }
    const Json& exact = require_field(value, "exact");
    if (!exact.is_array() ||
        exact.size() != static_cast<std::size_t>(report.ground_size)) {
      fail_field("exact", "must list one rational per element");
    }
    std::vector<Rational> column;
    for (const Json& item : exact) column.push_back(read_rational(item, "exact"));
    switch (*kind) {
      case IndexKind::shapley: report.shapley = std::move(column); break;
      case IndexKind::banzhaf_raw: report.banzhaf_raw = std::move(column); break;
      case IndexKind::banzhaf_frac: report.banzhaf_frac = std::move(column); break;
      case IndexKind::banzhaf_norm: report.banzhaf_norm = std::move(column); break;
      case IndexKind::deegan_packel:
        report.deegan_packel = std::move(column);
        break;
    }
  }
  return report;
}

std::string render_sample(const SampleEstimate& estimate,
                          const std::string& index_name,
                          const SampleConfig& config) {
  Json doc;
  doc["index"] = index_name;
  doc["n"] = estimate.estimate.size();
  doc["epsilon"] = config.epsilon;
  doc["delta"] = config.delta;
  doc["rng_seed"] = estimate.rng_seed;
  doc["max_samples"] = config.max_samples;
  doc["samples_used"] = estimate.samples_used;
  doc["estimate"] = estimate.estimate;
  doc["half_width"] = estimate.half_width;
  return doc.dump();
}

}  // namespace pidx
