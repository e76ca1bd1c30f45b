#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperspace/geometry.hpp"
#include "hyperspace/metric.hpp"
#include "hyperspace/paths.hpp"
#include "hyperspace/verify.hpp"

namespace hyperspace::io {

using json = nlohmann::json;

/// A document that is not valid JSON or does not match the expected schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Set-description documents: {"dim": n, "set": node} where node is one of
//   {"type": "points", "coords": [[...], ...]}
//   {"type": "box", "lo": [...], "hi": [...]}
//   {"type": "segment", "p": [...], "q": [...]}
//   {"type": "union", "parts": [node, ...]}
//   {"type": "box_boundary", "lo": [...], "hi": [...]}   (2D, four segments)

CompactSet parse_set_node(const json& node, std::size_t dim);
CompactSet parse_set_document(const json& doc);
json set_node(const CompactSet& set);
json set_document(const CompactSet& set);

// Path-description documents mirror the constructors:
//   {"dim": n, "kind": "translation", "set": node, "v": [...]}
//   {"dim": n, "kind": "point_to_box", "a": [...], "m": [...], "M": [...]}
//   {"dim": n, "kind": "set_to_box", "set": node, "m": [...], "M": [...]}
//   {"dim": n, "kind": "connect", "from": node, "to": node}
//   {"kind": "reverse", "path": doc}
//   {"kind": "concat", "paths": [doc, ...]}
// Nested documents inherit "dim" from their parent. set_to_box and connect
// accept an optional "segment_pieces".
HyperPath parse_path_document(const json& doc);

json read_json_file(const std::filesystem::path& file);
void write_json_file(const std::filesystem::path& file, const json& doc);
CompactSet read_set_file(const std::filesystem::path& file);
HyperPath read_path_file(const std::filesystem::path& file);

struct Frame {
  double t = 0.0;
  PathSample sample;
};

/// `count` uniformly spaced frames, the first at t = 0 and the last at t = 1.
std::vector<Frame> sample_frames(const HyperPath& path, std::size_t count);

/// {"header": {dim, kind, lipschitz, frame_count, max_err},
///  "frames": [{"t", "err", "dim", "set"}, ...]}. Each frame object is also a
/// valid set-description document.
json frame_stream(const HyperPath& path, const std::vector<Frame>& frames);

json to_json(const DistanceResult& result);
json to_json(const verify::SuiteReport& report);

}  // namespace hyperspace::io
