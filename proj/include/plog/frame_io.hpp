// JSON and DOT serialization for frames, countermodels and projections.
#pragma once

#include "plog/jline.hpp"
#include "plog/kripke.hpp"
#include "plog/projection.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace plog {

/// A frame file: {"n", "worlds", "rel": {"0": [[u,v],...]}, "val": {"p": [...]}, "root"}.
/// "val" and "root" are optional.
struct FrameFile {
  FiniteFrame frame;
  Valuation valuation;
  std::optional<World> root;

  friend bool operator==(const FrameFile&, const FrameFile&) = default;
};

/// Schema violation; pointer() is a JSON pointer to the offending value.
class FrameFormatError : public std::runtime_error {
 public:
  FrameFormatError(const std::string& what, std::string pointer)
      : std::runtime_error(what + " at " + (pointer.empty() ? "/" : pointer)), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

FrameFile frame_from_json(const nlohmann::json& j);
nlohmann::json frame_to_json(const FrameFile& f);

/// Throws FrameFormatError, or std::runtime_error when the file is unreadable.
FrameFile load_frame(const std::string& path);
void save_frame(const std::string& path, const FrameFile& f);

/// One edge per related pair, labelled with the relation index. The root,
/// if given, is drawn double-circled; worlds list their true variables.
std::string dot_export(const FrameFile& f);

FrameFile countermodel_file(const Countermodel& cm);

/// {"iota", "defs": {world: formula}, "case_tree": {...}}.
nlohmann::json projection_to_json(const ProjectionSpec& ps);

}  // namespace plog
