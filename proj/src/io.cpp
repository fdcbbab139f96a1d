#include "clusterbench/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "clusterbench/error.hpp"
#include "clusterbench/expression.hpp"

namespace clusterbench {

namespace {

std::size_t vertex_label(const Json& v, std::size_t n, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer vertex label");
  auto k = v.get<long long>();
  if (k < 1 || static_cast<std::size_t>(k) > n)
    throw ParseError(std::string(what) + " " + std::to_string(k) + " is not a vertex");
  return static_cast<std::size_t>(k - 1);
}

std::vector<std::size_t> labels(const Json& j, const char* key) {
  std::vector<std::size_t> out;
  if (!j.contains(key)) return out;
  const Json& arr = j.at(key);
  if (!arr.is_array()) throw ParseError(std::string(key) + " must be an array");
  for (const auto& v : arr) {
    if (!v.is_number_integer() || v.get<long long>() < 1)
      throw ParseError(std::string(key) + " entries must be positive integers");
    out.push_back(static_cast<std::size_t>(v.get<long long>() - 1));
  }
  return out;
}

Json one_based(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (std::size_t x : v) a.push_back(x + 1);
  return a;
}

}  // namespace

Json quiver_to_json(const IceQuiver& q) {
  Json j;
  j["type"] = "ice_quiver";
  Json vertices = Json::array();
  for (std::size_t v = 0; v < q.size(); ++v) vertices.push_back(Json{{"id", v + 1}, {"frozen", q.is_frozen(v)}});
  j["vertices"] = std::move(vertices);
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back(Json::array({a.source + 1, a.target + 1, a.multiplicity}));
  j["arrows"] = std::move(arrows);
  return j;
}

std::string quiver_to_string(const IceQuiver& q) { return quiver_to_json(q).dump(); }

IceQuiver quiver_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("quiver must be a JSON object");
  if (!j.contains("type") || j.at("type") != "ice_quiver") throw ParseError("expected \"type\":\"ice_quiver\"");
  if (!j.contains("vertices") || !j.at("vertices").is_array()) throw ParseError("missing vertices array");
  const Json& vs = j.at("vertices");
  const std::size_t n = vs.size();
  std::vector<int> seen(n, 0);
  std::vector<std::size_t> frozen;
  for (const auto& v : vs) {
    if (!v.is_object() || !v.contains("id")) throw ParseError("vertex entries need an id");
    std::size_t id = vertex_label(v.at("id"), n, "vertex id");
    if (seen[id]++) throw ParseError("duplicate vertex id " + std::to_string(id + 1));
    bool is_frozen = false;
    if (v.contains("frozen")) {
      if (!v.at("frozen").is_boolean()) throw ParseError("frozen must be a boolean");
      is_frozen = v.at("frozen").get<bool>();
    }
    if (is_frozen) frozen.push_back(id);
  }
  std::vector<Arrow> arrows;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  if (j.contains("arrows")) {
    if (!j.at("arrows").is_array()) throw ParseError("arrows must be an array");
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 3) throw ParseError("arrows are [source, target, multiplicity]");
      std::size_t s = vertex_label(a[0], n, "arrow source");
      std::size_t t = vertex_label(a[1], n, "arrow target");
      if (!a[2].is_number_integer() || a[2].get<long long>() < 1)
        throw ParseError("arrow multiplicity must be a positive integer");
      if (s == t) throw ParseError("loop at vertex " + std::to_string(s + 1));
      if (!pairs.emplace(std::min(s, t), std::max(s, t)).second)
        throw ParseError("repeated arrows or 2-cycle between " + std::to_string(s + 1) + " and " +
                         std::to_string(t + 1));
      arrows.push_back({s, t, static_cast<int>(a[2].get<long long>())});
    }
  }
  return IceQuiver::from_arrows(n, frozen, arrows);
}

IceQuiver parse_quiver(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return quiver_from_json(j);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path.string());
  out << text;
}

IceQuiver read_quiver_file(const std::filesystem::path& path) { return parse_quiver(read_text_file(path)); }

void write_quiver_file(const std::filesystem::path& path, const IceQuiver& q) {
  write_text_file(path, quiver_to_string(q) + "\n");
}

ReductionScript script_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("reduction script must be a JSON object");
  if (j.contains("steps")) {
    if (!j.at("steps").is_array()) throw ParseError("steps must be an array");
    std::vector<ReductionScript::Step> steps;
    for (const auto& s : j.at("steps")) {
      if (!s.is_object() || !s.contains("op") || !s.contains("vertex") || !s.at("op").is_string())
        throw ParseError("steps need op and vertex");
      auto op = s.at("op").get<std::string>();
      ReductionScript::Phase phase;
      if (op == "mutate") phase = ReductionScript::Phase::mutate;
      else if (op == "freeze") phase = ReductionScript::Phase::freeze;
      else if (op == "delete") phase = ReductionScript::Phase::remove;
      else throw ParseError("unknown step op " + op);
      const Json& v = s.at("vertex");
      if (!v.is_number_integer() || v.get<long long>() < 1) throw ParseError("step vertex must be positive");
      steps.push_back({phase, static_cast<std::size_t>(v.get<long long>() - 1)});
    }
    return ReductionScript::from_steps(steps);
  }
  ReductionScript s;
  s.mutations = labels(j, "mutations");
  s.freezes = labels(j, "freezes");
  s.deletions = labels(j, "deletions");
  return s;
}

Json script_to_json(const ReductionScript& s) {
  Json j;
  j["mutations"] = one_based(s.mutations);
  j["freezes"] = one_based(s.freezes);
  j["deletions"] = one_based(s.deletions);
  return j;
}

Json seed_to_json(const Seed& s) {
  Json j;
  j["type"] = "seed";
  j["quiver"] = quiver_to_json(s.quiver);
  Json cluster = Json::array();
  for (const auto& f : s.cluster) cluster.push_back(f.to_string());
  j["cluster"] = std::move(cluster);
  j["provenance"] = one_based(s.provenance);
  return j;
}

Seed seed_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type")) throw ParseError("seed must be a JSON object with a type");
  if (j.at("type") == "ice_quiver") return initial_seed(quiver_from_json(j));
  if (j.at("type") != "seed") throw ParseError("expected \"type\":\"seed\"");
  if (!j.contains("quiver")) throw ParseError("seed needs a quiver");
  Seed s;
  s.quiver = quiver_from_json(j.at("quiver"));
  if (!j.contains("cluster") || !j.at("cluster").is_array() || j.at("cluster").size() != s.quiver.size())
    throw ParseError("seed needs one cluster expression per vertex");
  for (const auto& e : j.at("cluster")) {
    if (!e.is_string()) throw ParseError("cluster entries must be expression strings");
    s.cluster.push_back(parse_expression(e.get<std::string>(), s.quiver.size()));
  }
  s.provenance = labels(j, "provenance");
  return s;
}

}  // namespace clusterbench
