#include "plog/frame_io.hpp"

#include <fstream>
#include <sstream>

namespace plog {

using nlohmann::json;

namespace {

std::string escape_pointer(const std::string& token) {
  std::string out;
  for (char c : token) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

const json& require(const json& j, const char* key, const std::string& at) {
  auto it = j.find(key);
  if (it == j.end()) throw FrameFormatError(std::string("missing key \"") + key + "\"", at + "/" + key);
  return *it;
}

World known_world(const json& j, const std::set<World>& worlds, const std::string& at) {
  if (!j.is_string()) throw FrameFormatError("world must be a string", at);
  World w = j.get<std::string>();
  if (!worlds.count(w)) throw FrameFormatError("unknown world \"" + w + "\"", at);
  return w;
}

bool valid_variable(const std::string& name) {
  try {
    Formula f = parse_formula(name);
    return f.op() == Op::Var && f.name() == name;
  } catch (const SyntaxError&) {
    return false;
  }
}

}  // namespace

FrameFile frame_from_json(const json& j) {
  if (!j.is_object()) throw FrameFormatError("frame must be an object", "");
  const json& jn = require(j, "n", "");
  if (!jn.is_number_unsigned()) throw FrameFormatError("\"n\" must be a natural number", "/n");
  const auto n = jn.get<unsigned>();

  const json& jw = require(j, "worlds", "");
  if (!jw.is_array()) throw FrameFormatError("\"worlds\" must be an array", "/worlds");
  std::vector<World> worlds;
  std::set<World> known;
  for (std::size_t i = 0; i < jw.size(); ++i) {
    const std::string at = "/worlds/" + std::to_string(i);
    if (!jw[i].is_string()) throw FrameFormatError("world must be a string", at);
    if (!known.insert(jw[i].get<std::string>()).second) throw FrameFormatError("duplicate world", at);
    worlds.push_back(jw[i].get<std::string>());
  }

  const json& jr = require(j, "rel", "");
  if (!jr.is_object()) throw FrameFormatError("\"rel\" must be an object", "/rel");
  std::vector<std::vector<Edge>> rel(n);
  for (const auto& [key, pairs] : jr.items()) {
    const std::string at = "/rel/" + escape_pointer(key);
    unsigned k = 0;
    std::size_t used = 0;
    try {
      k = static_cast<unsigned>(std::stoul(key, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != key.size() || k >= n) throw FrameFormatError("relation key must be an index below n", at);
    if (!pairs.is_array()) throw FrameFormatError("relation must be an array of pairs", at);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string pat = at + "/" + std::to_string(i);
      const json& p = pairs[i];
      if (!p.is_array() || p.size() != 2) throw FrameFormatError("edge must be a pair of worlds", pat);
      rel[k].emplace_back(known_world(p[0], known, pat + "/0"), known_world(p[1], known, pat + "/1"));
    }
  }

  FrameFile out;
  if (auto it = j.find("val"); it != j.end()) {
    if (!it->is_object()) throw FrameFormatError("\"val\" must be an object", "/val");
    for (const auto& [name, ws] : it->items()) {
      const std::string at = "/val/" + escape_pointer(name);
      if (!valid_variable(name)) throw FrameFormatError("invalid variable name", at);
      if (!ws.is_array()) throw FrameFormatError("valuation must be an array of worlds", at);
      auto& set = out.valuation[name];
      for (std::size_t i = 0; i < ws.size(); ++i) set.insert(known_world(ws[i], known, at + "/" + std::to_string(i)));
    }
  }
  if (auto it = j.find("root"); it != j.end()) out.root = known_world(*it, known, "/root");
  out.frame = FiniteFrame(n, std::move(worlds), rel);
  return out;
}

json frame_to_json(const FrameFile& f) {
  json j;
  j["n"] = f.frame.n();
  j["worlds"] = f.frame.worlds();
  json rel = json::object();
  for (unsigned k = 0; k < f.frame.n(); ++k) {
    json pairs = json::array();
    for (const auto& [u, v] : f.frame.edges(k)) pairs.push_back({u, v});
    rel[std::to_string(k)] = std::move(pairs);
  }
  j["rel"] = std::move(rel);
  json val = json::object();
  for (const auto& [p, ws] : f.valuation) val[p] = std::vector<World>(ws.begin(), ws.end());
  j["val"] = std::move(val);
  if (f.root) j["root"] = *f.root;
  return j;
}

FrameFile load_frame(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FrameFormatError(std::string("invalid JSON: ") + e.what(), "");
  }
  return frame_from_json(j);
}

void save_frame(const std::string& path, const FrameFile& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << frame_to_json(f).dump(2) << "\n";
}

std::string dot_export(const FrameFile& f) {
  auto quote = [](const std::string& s) { return json(s).dump(); };
  std::ostringstream os;
  os << "digraph frame {\n  rankdir=LR;\n";
  for (const World& w : f.frame.worlds()) {
    std::string label = w;
    for (const auto& [p, ws] : f.valuation)
      if (ws.count(w)) label += " " + p;
    os << "  " << quote(w) << " [label=" << quote(label);
    if (f.root && *f.root == w) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (unsigned k = 0; k < f.frame.n(); ++k)
    for (const auto& [u, v] : f.frame.edges(k))
      os << "  " << quote(u) << " -> " << quote(v) << " [label=\"" << k << "\"];\n";
  os << "}\n";
  return os.str();
}

FrameFile countermodel_file(const Countermodel& cm) { return FrameFile{materialize(cm.shape), cm.valuation, cm.world}; }

namespace {

json node_to_json(const ProjectionNode& node) {
  static const char* const kNames[] = {"singleton", "shift", "sum"};
  json j;
  j["case"] = kNames[static_cast<int>(node.kind)];
  j["shape"] = render_shape(node.shape);
  j["iota"] = ord_render(node.iota);
  if (!node.offsets.empty()) {
    json offs = json::array();
    for (const Ordinal& o : node.offsets) offs.push_back(ord_render(o));
    j["offsets"] = std::move(offs);
  }
  if (!node.parts.empty()) {
    json parts = json::array();
    for (const ProjectionNode& p : node.parts) parts.push_back(node_to_json(p));
    j["parts"] = std::move(parts);
  }
  return j;
}

}  // namespace

json projection_to_json(const ProjectionSpec& ps) {
  json j;
  j["iota"] = ord_render(ps.iota);
  json defs = json::object();
  for (const auto& [w, f] : ps.defs) defs[w] = render_formula(f);
  j["defs"] = std::move(defs);
  j["case_tree"] = node_to_json(ps.tree);
  return j;
}

}  // namespace plog
