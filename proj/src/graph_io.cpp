#include "artin/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace artin {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  if (!j.is_object()) throw std::invalid_argument("spec must be a JSON object");
  return j;
}

std::vector<std::array<int, 3>> edge_list(const json& j, bool allow_pairs) {
  std::vector<std::array<int, 3>> edges;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3)
      throw std::invalid_argument("each edge must be [s, t] or [s, t, m]");
    int m = (e.size() == 3) ? e[2].get<int>() : (allow_pairs ? 1 : 2);
    edges.push_back({e[0].get<int>(), e[1].get<int>(), m});
  }
  return edges;
}

}  // namespace

CoxeterGraph parse_graph_spec_json(const std::string& json_text) {
  json j = parse(json_text);
  std::string type = j.at("type").get<std::string>();
  if (type == "A") return CoxeterGraph::type_a(j.at("rank").get<int>());
  if (type == "D") return CoxeterGraph::type_d(j.at("rank").get<int>());
  if (type == "I2") return CoxeterGraph::dihedral(j.at("label").get<int>());
  if (type == "custom") {
    if (!j.contains("edges")) throw std::invalid_argument("custom graph requires an edge list");
    return CoxeterGraph::custom(j.at("rank").get<int>(), edge_list(j.at("edges"), false));
  }
  throw std::invalid_argument("unknown graph type: " + type);
}

std::string graph_spec_json(const CoxeterGraph& g) {
  json j;
  switch (g.kind()) {
    case GraphKind::A:
      j = {{"type", "A"}, {"rank", g.rank()}};
      break;
    case GraphKind::D:
      j = {{"type", "D"}, {"rank", g.rank()}};
      break;
    case GraphKind::I2:
      j = {{"type", "I2"}, {"label", g.dihedral_label()}};
      break;
    case GraphKind::Custom: {
      json edges = json::array();
      for (const auto& e : g.edges()) edges.push_back({e[0], e[1], e[2]});
      j = {{"type", "custom"}, {"rank", g.rank()}, {"edges", edges}};
      break;
    }
  }
  return j.dump();
}

CurveGraph parse_curve_spec_json(const std::string& json_text) {
  json j = parse(json_text);
  std::string type = j.at("type").get<std::string>();
  if (type == "A") return CurveGraph::chain(j.at("rank").get<int>());
  if (type == "D") return CurveGraph::d_shape(j.at("rank").get<int>());
  if (type == "custom")
    return CurveGraph::from_edges(j.at("rank").get<int>(), edge_list(j.at("edges"), true));
  throw std::invalid_argument("unknown curve graph type: " + type);
}

std::string curve_spec_json(const CurveGraph& cg) {
  json edges = json::array();
  for (const auto& e : cg.edges()) edges.push_back({e[0], e[1], e[2]});
  json j = {{"type", "custom"}, {"rank", cg.curve_count()}, {"edges", edges}};
  return j.dump();
}

std::string load_spec_text(const std::string& arg) {
  auto pos = arg.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && arg[pos] == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open spec file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

json labels_json(const std::vector<std::pair<std::string, std::string>>& labels) {
  json j = json::object();
  for (const auto& [from, to] : labels) j[from] = to;
  return j;
}

json table_json(const VerdictTable& t) {
  json rows = json::array();
  for (const VerdictRow& r : t.rows)
    rows.push_back(
        {{"n", r.n}, {"relation_holds", r.relation_holds}, {"expected", r.expected}, {"agree", r.agree}});
  return json{{"theorem", t.theorem}, {"k", t.k},
              {"period", t.period},   {"n_max", t.n_max},
              {"rows", rows},         {"all_agree", t.all_agree},
              {"wall_ms", t.wall_ms}, {"labels", labels_json(t.labels)}};
}

json folding_json(const FoldingReport& r) {
  return json{{"source", json::parse(graph_spec_json(r.source))},
              {"h", r.h},
              {"x", r.x.str()},
              {"y", r.y.str()},
              {"relation_at_h", r.relation_at_h},
              {"divisibility", r.divisibility},
              {"first_shorter_relation",
               r.first_shorter_relation ? json(*r.first_shorter_relation) : json(nullptr)}};
}

}  // namespace

std::string to_json_string(const VerdictTable& t) { return table_json(t).dump(2); }

std::string to_json_string(const FoldingReport& r) { return folding_json(r).dump(2); }

std::string to_json_string(const FoldCheck& r) {
  return json{{"table", table_json(r.table)}, {"folding", folding_json(r.folding)},
              {"passed", r.passed()}}
      .dump(2);
}

std::string to_json_string(const ConjectureReport& r) {
  json entries = json::array();
  for (const ConjectureEntry& e : r.entries) {
    json sigma = json::array();
    for (int i : e.sigma) sigma.push_back(i);
    entries.push_back({{"sigma", sigma}, {"all_agree", e.table.all_agree}});
  }
  return json{{"k", r.k},
              {"period", r.period},
              {"within_verified_range", r.within_verified_range},
              {"permutations", entries},
              {"all_pass", r.all_pass},
              {"wall_ms", r.wall_ms}}
      .dump(2);
}

std::string to_json_string(const ClaimsReport& r) {
  json rows = json::array();
  for (const ClaimRow& row : r.rows)
    rows.push_back({{"claim", row.claim},
                    {"index", row.index},
                    {"relation_length", row.relation_length},
                    {"lhs", row.lhs},
                    {"rhs", row.rhs},
                    {"agree", row.agree}});
  return json{{"parity", r.parity},       {"k", r.k},
              {"rows", rows},             {"all_agree", r.all_agree},
              {"wall_ms", r.wall_ms},     {"labels", labels_json(r.labels)}}
      .dump(2);
}

std::string to_json_string(const CorollaryReport& r) {
  json rows = json::array();
  for (const CorollaryRow& row : r.rows)
    rows.push_back({{"repetitions", row.repetitions},
                    {"equal", row.equal},
                    {"expected", row.expected},
                    {"agree", row.agree}});
  return json{{"rows", rows}, {"all_agree", r.all_agree}, {"wall_ms", r.wall_ms}}.dump(2);
}

std::string surface_json(const CurveGraph& cg, const SurfaceType& st) {
  return json{{"graph", json::parse(curve_spec_json(cg))},
              {"genus", st.genus},
              {"boundary", st.boundary},
              {"chi", st.euler}}
      .dump(2);
}

std::string normal_form_json(const PositiveWord& w, const NormalForm& nf) {
  json factors = json::array();
  for (const CoxeterElement& f : nf.factors()) {
    std::string fw;
    for (int s : reduced_word(f)) fw += (fw.empty() ? "" : " ") + std::to_string(s);
    factors.push_back(fw);
  }
  return json{{"graph", json::parse(graph_spec_json(w.graph()))},
              {"word", w.str()},
              {"letters", w.size()},
              {"factors", factors}}
      .dump(2);
}

}  // namespace artin
