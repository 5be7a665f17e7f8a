#include "cli.hpp"

#include "plog/formula.hpp"
#include "plog/frame_io.hpp"
#include "plog/ignatiev.hpp"
#include "plog/jline.hpp"
#include "plog/kripke.hpp"
#include "plog/ordinal.hpp"
#include "plog/projection.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>

namespace plog::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::uint64_t cap = 0;
  bool cap_given = false;

  std::string formula;
  std::string logic = "glp3";
  unsigned n = 0;
  bool n_given = false;
  std::string dot_path;
  std::string model_path;

  std::string ordinal;
  std::string worm_direction;
  std::string worm_value;

  std::string shape;
  std::string frame_path;
  std::size_t max_size = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t default_cap() {
  const char* env = std::getenv("PLOG_CAP");
  if (!env || !*env) return kDefaultCap;
  std::string s(env);
  if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError("PLOG_CAP must be a positive integer");
  std::uint64_t v = std::stoull(s);
  if (v == 0) throw UsageError("PLOG_CAP must be a positive integer");
  return v;
}

json envelope(const std::string& status) {
  json j;
  j["status"] = status;
  j["witness"] = nullptr;
  j["countermodel"] = nullptr;
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string valuation_text(const Valuation& v) {
  std::string s;
  for (const auto& [p, ws] : v) {
    if (!s.empty()) s += " ";
    s += p + "={";
    bool first = true;
    for (const World& w : ws) {
      if (!first) s += ",";
      s += w;
      first = false;
    }
    s += "}";
  }
  return s.empty() ? "-" : s;
}

int status_code(Status s) {
  switch (s) {
    case Status::Theorem: return kSuccess;
    case Status::Refuted: return kRefuted;
    case Status::Inconclusive: return kInconclusive;
  }
  return kUsage;
}

int cmd_parse(const Options& o, std::ostream& out) {
  Formula f = parse_formula(o.formula);
  if (o.json) {
    json j = envelope("ok");
    j["formula"] = render_formula(f);
    j["signature"] = modal_signature(f);
    j["modal_count"] = modal_count(f);
    j["closed"] = f.is_closed();
    out << j.dump() << "\n";
  } else {
    out << render_formula(f) << "\n";
  }
  return kSuccess;
}

int cmd_decide(const Options& o, std::ostream& out) {
  Formula f = parse_formula(o.formula);
  if (o.logic == "glp-closed") {
    if (!f.is_closed()) throw UsageError("glp-closed needs a formula without variables");
    ClosedVerdict v = glp_closed_decide(f);
    if (o.json) {
      json j = envelope(to_string(v.status));
      if (v.witness) j["witness"] = render_point(*v.witness);
      out << j.dump() << "\n";
    } else {
      out << to_string(v.status) << "\n";
      if (v.witness) out << "witness: " << render_point(*v.witness) << "\n";
    }
    return status_code(v.status);
  }

  Verdict v;
  if (o.logic == "glp3") {
    if (o.n_given) throw UsageError("--n applies to --logic jlin only");
    v = glp3_decide(f, o.cap);
  } else {
    const unsigned n = o.n_given ? o.n : std::max(1u, modal_signature(f));
    if (n < std::max(1u, modal_signature(f))) throw UsageError("--n is below the modal signature of the formula");
    v = jlin_satisfy(f, n, o.cap);
  }
  std::optional<FrameFile> model;
  if (v.countermodel) model = countermodel_file(*v.countermodel);
  if (model && !o.model_path.empty()) save_frame(o.model_path, *model);
  if (model && !o.dot_path.empty()) write_file(o.dot_path, dot_export(*model));

  if (o.json) {
    json j = envelope(to_string(v.status));
    if (v.countermodel) {
      j["witness"] = v.countermodel->world;
      json cm = frame_to_json(*model);
      cm["shape"] = render_shape(v.countermodel->shape);
      j["countermodel"] = std::move(cm);
    }
    j["bound"] = v.bound_used;
    j["searched_worlds"] = v.searched_worlds;
    out << j.dump() << "\n";
  } else {
    out << to_string(v.status) << "\n";
    if (v.countermodel) {
      out << "shape: " << render_shape(v.countermodel->shape) << "\n";
      out << "world: " << v.countermodel->world << "\n";
      out << "valuation: " << valuation_text(v.countermodel->valuation) << "\n";
    }
    out << "bound: " << v.bound_used << "\n";
    if (v.status == Status::Inconclusive) out << "searched up to " << v.searched_worlds << " worlds\n";
  }
  return status_code(v.status);
}

int cmd_truthset(const Options& o, std::ostream& out) {
  Formula f = parse_formula(o.formula);
  if (!f.is_closed()) throw UsageError("truthset needs a formula without variables");
  CellSet s = closed_truthset(f);
  if (o.json) {
    json j = envelope("ok");
    json cells = json::array();
    for (const Cell& c : s.cells()) cells.push_back(render_cell(c));
    j["cells"] = std::move(cells);
    if (auto p = s.first_point()) j["witness"] = render_point(*p);
    out << j.dump() << "\n";
  } else {
    out << render_cellset(s) << "\n";
  }
  return kSuccess;
}

int cmd_axis_formula(const Options& o, std::ostream& out) {
  Formula f = axis_defining_formula(ord_parse(o.ordinal));
  if (o.json) {
    json j = envelope("ok");
    j["formula"] = render_formula(f);
    out << j.dump() << "\n";
  } else {
    out << render_formula(f) << "\n";
  }
  return kSuccess;
}

int cmd_worm(const Options& o, std::ostream& out) {
  std::string result;
  if (o.worm_direction == "to-ordinal") {
    result = ord_render(worm_ordinal(Worm::from_formula(parse_formula(o.worm_value))));
  } else if (o.worm_direction == "from-ordinal") {
    result = render_formula(ordinal_worm(ord_parse(o.worm_value)).to_formula());
  } else {
    throw UsageError("worm direction must be to-ordinal or from-ordinal");
  }
  if (o.json) {
    json j = envelope("ok");
    j["result"] = result;
    out << j.dump() << "\n";
  } else {
    out << result << "\n";
  }
  return kSuccess;
}

int cmd_project(const Options& o, std::ostream& out) {
  if (o.shape.empty() == o.frame_path.empty()) throw UsageError("project needs exactly one of --shape or --frame");
  JLineShape shape;
  Valuation val;
  std::map<World, World> display;  // tuple name -> name shown
  if (!o.frame_path.empty()) {
    FrameFile file = load_frame(o.frame_path);
    auto match = shape_of_frame(file.frame);
    if (!match) throw UsageError("frame is not a hereditarily linear J-frame");
    shape = match->shape;
    for (const auto& [w, t] : match->tuples) display[tuple_name(t)] = w;
    for (const auto& [p, ws] : file.valuation)
      for (const World& w : ws) val[p].insert(tuple_name(match->tuples.at(w)));
  } else {
    shape = parse_shape(o.shape);
    for (const auto& t : world_tuples(shape)) display[tuple_name(t)] = tuple_name(t);
  }
  ProjectionSpec ps = build_projection(shape);
  std::optional<Formula> witness;
  if (!o.formula.empty()) witness = closed_substitution_witness(ps, val, parse_formula(o.formula));

  if (o.json) {
    json j = envelope("ok");
    json p = projection_to_json(ps);
    json defs = json::object();
    for (const auto& [w, f] : ps.defs) defs[display.at(w)] = render_formula(f);
    p["defs"] = std::move(defs);
    j["projection"] = std::move(p);
    if (witness) j["witness"] = render_formula(*witness);
    out << j.dump() << "\n";
  } else {
    out << "iota: " << ord_render(ps.iota) << "\n";
    for (const auto& t : world_tuples(shape)) {
      const World name = tuple_name(t);
      out << "def " << display.at(name) << ": " << render_formula(ps.defs.at(name)) << "\n";
    }
    if (witness) out << "substitution: " << render_formula(*witness) << "\n";
  }
  return kSuccess;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.n == 0) throw UsageError("--n must be positive");
  json shapes = json::array();
  for_each_jline(o.n, o.max_size, [&](const JLineShape& s) {
    if (o.json)
      shapes.push_back(render_shape(s));
    else
      out << render_shape(s) << "\n";
    return true;
  });
  if (o.json) {
    json j = envelope("ok");
    j["shapes"] = std::move(shapes);
    out << j.dump() << "\n";
  }
  return kSuccess;
}

int cmd_check_frame(const Options& o, std::ostream& out) {
  FrameFile file = load_frame(o.frame_path);
  const FiniteFrame& fr = file.frame;
  std::vector<FrameReport> reports{check_j_frame(fr), check_stratified(fr)};
  const bool j_frame = reports.front().holds;
  if (j_frame) reports.push_back(check_hl_direct(fr));
  reports.push_back(check_hl_planes(fr));
  std::optional<World> root;
  if (j_frame) root = find_root(fr);
  const bool all = std::all_of(reports.begin(), reports.end(), [](const FrameReport& r) { return r.holds; });

  if (o.json) {
    json j = envelope(all ? "valid" : "invalid");
    json rs = json::array();
    for (const auto& r : reports) {
      json e;
      e["property"] = r.property;
      e["holds"] = r.holds;
      e["witness"] = r.witness;
      e["detail"] = r.detail;
      rs.push_back(std::move(e));
    }
    j["reports"] = std::move(rs);
    j["root"] = root ? json(*root) : json(nullptr);
    out << j.dump() << "\n";
  } else {
    for (const auto& r : reports) {
      out << r.property << ": " << (r.holds ? "holds" : "fails");
      if (!r.holds) {
        out << " (";
        for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? ", " : "") << r.witness[i];
        out << ") " << r.detail;
      }
      out << "\n";
    }
    if (!j_frame) out << "hereditarily-linear: skipped (not a J-frame)\n";
    out << "root: " << (root ? *root : std::string("none")) << "\n";
  }
  return all ? kSuccess : kRefuted;
}

int cmd_cover_k(const Options& o, std::ostream& out) {
  if (!o.n_given) throw UsageError("cover-k needs --n");
  unsigned k = cover_k(parse_formula(o.formula), o.n);
  if (o.json) {
    json j = envelope("ok");
    j["k"] = k;
    out << j.dump() << "\n";
  } else {
    out << k << "\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Decision procedures for polymodal provability logics", "plog"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Print a JSON object instead of text");
  app.add_option("--cap", o.cap, "Largest model size searched (default 5000 or PLOG_CAP)")->check(CLI::PositiveNumber);

  auto* parse = app.add_subcommand("parse", "Parse and print a formula in canonical form");
  parse->add_option("formula", o.formula)->required();

  auto* decide = app.add_subcommand("decide", "Decide a formula");
  decide->add_option("formula", o.formula)->required();
  decide->add_option("--logic", o.logic)->check(CLI::IsMember({"glp3", "jlin", "glp-closed"}));
  decide->add_option("--n", o.n, "Number of modalities (jlin)");
  decide->add_option("--dot", o.dot_path, "Write the countermodel as DOT");
  decide->add_option("--model", o.model_path, "Write the countermodel as frame JSON");

  auto* truthset = app.add_subcommand("truthset", "Truth set of a closed formula in Ignatiev's frame");
  truthset->add_option("formula", o.formula)->required();

  auto* axis = app.add_subcommand("axis-formula", "Closed formula defining an axis point");
  axis->add_option("ordinal", o.ordinal)->required();

  auto* worm = app.add_subcommand("worm", "Convert between worms and ordinals");
  worm->add_option("direction", o.worm_direction)->required()->check(CLI::IsMember({"to-ordinal", "from-ordinal"}));
  worm->add_option("value", o.worm_value)->required();

  auto* project = app.add_subcommand("project", "Projection of Ignatiev's frame onto a J-line");
  project->add_option("formula", o.formula, "Formula to turn into a closed substitution");
  project->add_option("--shape", o.shape, "J-line shape, e.g. [[..][.]]");
  project->add_option("--frame", o.frame_path, "Frame JSON of a J-line, with valuation");

  auto* enumerate = app.add_subcommand("enumerate", "List J-line shapes");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--max-size", o.max_size)->required();

  auto* check = app.add_subcommand("check-frame", "Check structural properties of a frame");
  check->add_option("frame", o.frame_path)->required();

  auto* cover = app.add_subcommand("cover-k", "Least k with <n-1>^k T -> <0>f provable");
  cover->add_option("formula", o.formula)->required();
  cover->add_option("--n", o.n)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    o.n_given = decide->count("--n") > 0 || cover->count("--n") > 0;
    o.cap_given = app.count("--cap") > 0;
    if (!o.cap_given) o.cap = default_cap();
    if (*parse) return cmd_parse(o, out);
    if (*decide) return cmd_decide(o, out);
    if (*truthset) return cmd_truthset(o, out);
    if (*axis) return cmd_axis_formula(o, out);
    if (*worm) return cmd_worm(o, out);
    if (*project) return cmd_project(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*check) return cmd_check_frame(o, out);
    if (*cover) return cmd_cover_k(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace plog::cli
