#include "xmodcat/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "xmodcat/errors.hpp"

namespace xmodcat {

using ordered_json = nlohmann::ordered_json;

namespace {

int line_of_byte(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

std::vector<std::vector<int>> int_table(const ordered_json& j, const std::string& field) {
  if (!j.is_array())
    fail_invalid("ShapeError", "field '" + field + "' must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array())
      fail_invalid("ShapeError", "field '" + field + "' must be an array of arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        fail_invalid("ShapeError", "field '" + field + "' must contain integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<int> int_array(const ordered_json& j, const std::string& field) {
  if (!j.is_array())
    fail_invalid("ShapeError", "field '" + field + "' must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      fail_invalid("ShapeError", "field '" + field + "' must contain integers");
    out.push_back(v.get<int>());
  }
  return out;
}

// round-trips through %.15g so emitted numbers carry 15 significant digits
double sig15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

ordered_json complex_pair(cplx z) {
  return ordered_json::array({sig15(z.real()), sig15(z.imag())});
}

ordered_json document_json(const XModDocument& doc) {
  ordered_json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["x1"] = ordered_json{{"table", doc.x1_table}};
  j["x2"] = ordered_json{{"table", doc.x2_table}};
  j["action"] = doc.action;
  j["boundary"] = doc.boundary;
  return j;
}

std::string hash_string(const std::string& raw) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(raw.data(), raw.size())));
  return buf;
}

ordered_json gx_json(const GroupGX& gx) {
  ordered_json j;
  j["order"] = gx.group.order;
  j["table"] = gx.group.table;
  ordered_json labels = ordered_json::array();
  for (int i = 0; i < gx.group.order; ++i) {
    auto [chi, c] = gx.label(i);
    labels.push_back(ordered_json::array({chi, c}));
  }
  j["labels"] = labels;
  return j;
}

ordered_json report_body(const std::string& raw_text, std::uint64_t seed, double tol) {
  XModDocument doc = parse_document(raw_text);
  XPtr x = build_crossed_module(doc);
  CategoryBundle b = build_bundle(x, seed);
  VerificationSuite suite = run_invariant_suite(b, seed, tol);

  ordered_json j;
  j["tool"] = ordered_json{{"name", kToolName}, {"version", kToolVersion}};
  j["input"] = ordered_json{{"name", doc.name},
                            {"hash", hash_string(raw_text)},
                            {"seed", seed},
                            {"tolerance", sig15(tol)}};
  j["category"] = ordered_json{{"x1_order", x->x1.order},
                               {"x2_order", x->x2.order},
                               {"kernel_order", static_cast<int>(x->sub.k_elements.size())},
                               {"image_order", static_cast<int>(x->sub.i_elements.size())},
                               {"coker_order", x->sub.coker.group.order},
                               {"abs_x", x->sub.abs_x},
                               {"d", x->sub.d}};

  ordered_json simples = ordered_json::array();
  for (int p = 0; p < b.table.size(); ++p) {
    simples.push_back(ordered_json{{"index", p},
                                   {"orbit_rep", b.table.labels[p].orbit_rep},
                                   {"char", b.table.labels[p].chi},
                                   {"dim", b.table.dims[p]},
                                   {"twist", complex_pair(b.table.twists[p])}});
  }
  j["simples"] = simples;

  ordered_json srows = ordered_json::array();
  for (int p = 0; p < b.table.size(); ++p) {
    ordered_json row = ordered_json::array();
    for (int q = 0; q < b.table.size(); ++q) row.push_back(complex_pair(b.md.s(p, q)));
    srows.push_back(row);
  }
  j["s_matrix"] = srows;

  ordered_json fusion = ordered_json::array();
  for (int p = 0; p < b.table.size(); ++p)
    for (int q = 0; q < b.table.size(); ++q)
      for (int r = 0; r < b.table.size(); ++r)
        if (b.md.fusion[p][q][r] != 0)
          fusion.push_back(ordered_json::array({p, q, r, b.md.fusion[p][q][r]}));
  j["fusion"] = fusion;

  j["transparent"] = b.md.transparent;
  j["transparent_indices"] = transparent_simples(b.md);
  j["gx"] = gx_json(b.gx);

  XBarResult xb = quotient_xbar(*x);
  j["xbar"] = document_json(document_from_crossed_module(
      xb.xbar, doc.name.empty() ? "xbar" : doc.name + "_xbar"));

  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : suite.checks) {
    ordered_json cj;
    cj["check"] = c.name;
    cj["pass"] = c.pass;
    cj["residual"] = sig15(c.residual);
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["verification"] = checks;
  j["all_pass"] = suite.all_pass;
  j["modular"] = suite.modular;
  return j;
}

}  // namespace

XModDocument parse_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_invalid("SyntaxError",
                 "line " + std::to_string(line_of_byte(text, e.byte)) + ": " + e.what(),
                 {line_of_byte(text, e.byte)});
  }
  if (!j.is_object()) fail_invalid("ShapeError", "document must be a JSON object");
  XModDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail_invalid("ShapeError", "field 'name' must be a string");
    doc.name = j["name"].get<std::string>();
  }
  for (const char* grp : {"x1", "x2"}) {
    if (!j.contains(grp) || !j[grp].is_object() || !j[grp].contains("table"))
      fail_invalid("ShapeError", std::string("field '") + grp + ".table' is required");
  }
  doc.x1_table = int_table(j["x1"]["table"], "x1.table");
  doc.x2_table = int_table(j["x2"]["table"], "x2.table");
  if (!j.contains("action")) fail_invalid("ShapeError", "field 'action' is required");
  doc.action = int_table(j["action"], "action");
  if (!j.contains("boundary")) fail_invalid("ShapeError", "field 'boundary' is required");
  doc.boundary = int_array(j["boundary"], "boundary");

  std::size_t n1 = doc.x1_table.size(), n2 = doc.x2_table.size();
  for (const auto& row : doc.x1_table)
    if (row.size() != n1) fail_invalid("ShapeError", "field 'x1.table' must be square");
  for (const auto& row : doc.x2_table)
    if (row.size() != n2) fail_invalid("ShapeError", "field 'x2.table' must be square");
  if (doc.action.size() != n1)
    fail_invalid("ShapeError", "field 'action' must have one row per x1 element");
  for (const auto& row : doc.action)
    if (row.size() != n2)
      fail_invalid("ShapeError", "field 'action' rows must have one entry per x2 element");
  if (doc.boundary.size() != n2)
    fail_invalid("ShapeError", "field 'boundary' must have one entry per x2 element");
  return doc;
}

std::string serialize_document(const XModDocument& doc) {
  return document_json(doc).dump(2) + "\n";
}

XPtr build_crossed_module(const XModDocument& doc) {
  FiniteGroup x1 = group_from_table(doc.x1_table);
  FiniteGroup x2 = group_from_table(doc.x2_table);
  GroupAction mu = make_action(x1, x2.order, doc.action);
  GroupHom bd = make_hom(x2, x1, doc.boundary);
  return make_xptr(crossed_module(std::move(x1), std::move(x2), std::move(mu), std::move(bd)));
}

XModDocument document_from_crossed_module(const CrossedModule& x, const std::string& name) {
  XModDocument doc;
  doc.name = name;
  doc.x1_table = x.x1.table;
  doc.x2_table = x.x2.table;
  doc.action = x.mu.perm;
  doc.boundary = x.boundary.map;
  return doc;
}

std::string data_report(const std::string& raw_text, std::uint64_t seed, double tol) {
  return report_body(raw_text, seed, tol).dump(2) + "\n";
}

std::string gx_report(const std::string& raw_text, std::uint64_t seed) {
  XModDocument doc = parse_document(raw_text);
  XPtr x = build_crossed_module(doc);
  GroupGX gx = group_gx(*x, seed);
  ordered_json j;
  j["tool"] = ordered_json{{"name", kToolName}, {"version", kToolVersion}};
  j["input"] = ordered_json{{"name", doc.name}, {"hash", hash_string(raw_text)}, {"seed", seed}};
  j["gx"] = gx_json(gx);
  return j.dump(2) + "\n";
}

std::string modularize_report(const std::string& raw_text, std::uint64_t seed, double tol) {
  XModDocument doc = parse_document(raw_text);
  XPtr x = build_crossed_module(doc);
  XBarResult xb = quotient_xbar(*x);
  XModDocument xbar_doc = document_from_crossed_module(
      xb.xbar, doc.name.empty() ? "xbar" : doc.name + "_xbar");
  std::string xbar_text = serialize_document(xbar_doc);

  ModularizationReport mr = verify_modularization(x, seed, tol);

  ordered_json j;
  j["tool"] = ordered_json{{"name", kToolName}, {"version", kToolVersion}};
  j["input"] = ordered_json{{"name", doc.name},
                            {"hash", hash_string(raw_text)},
                            {"seed", seed},
                            {"tolerance", sig15(tol)}};
  j["xbar"] = document_json(xbar_doc);
  j["xbar_report"] = report_body(xbar_text, seed, tol);
  ordered_json match;
  match["found"] = mr.match.found;
  if (mr.match.found) {
    match["permutation"] = mr.match.perm;
    match["residual_s"] = sig15(mr.match.resid_s);
    match["residual_twists"] = sig15(mr.match.resid_twists);
  }
  j["double_match"] = match;
  j["legs"] = ordered_json{{"xbar_modular", mr.xbar_modular},
                           {"det_s_abs", sig15(mr.det_s_abs)},
                           {"match_found", mr.match.found},
                           {"verlinde_residual", sig15(mr.verlinde)},
                           {"n_simples", mr.n_simples},
                           {"sum_d2", mr.sum_d2},
                           {"counts_ok", mr.counts_ok}};
  j["pass"] = mr.pass();
  return j.dump(2) + "\n";
}

}  // namespace xmodcat
