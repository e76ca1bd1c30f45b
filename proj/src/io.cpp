#include "hyperspace/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace hyperspace::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw FormatError(msg); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) fail("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

Point parse_point(const json& arr, std::size_t dim, const char* what) {
  if (!arr.is_array()) fail(std::string(what) + ": expected an array of numbers");
  if (arr.size() != dim) {
    fail(std::string(what) + ": expected " + std::to_string(dim) + " coordinates, got " +
         std::to_string(arr.size()));
  }
  std::vector<double> c;
  c.reserve(dim);
  for (const auto& x : arr) {
    if (!x.is_number()) fail(std::string(what) + ": coordinates must be numbers");
    const double v = x.get<double>();
    if (!std::isfinite(v)) fail(std::string(what) + ": coordinates must be finite");
    c.push_back(v);
  }
  return Point(std::move(c));
}

std::size_t parse_dim(const json& doc) {
  const json& d = field(doc, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) fail("\"dim\" must be a positive integer");
  return d.get<std::size_t>();
}

json point_json(const Point& p) { return json(std::vector<double>(p.coords().begin(), p.coords().end())); }

// Any GeometryError raised while building values from a document is a schema
// problem from the caller's point of view.
template <typename Fn>
auto as_format_error(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const GeometryError& e) {
    throw FormatError(e.what());
  }
}

std::size_t inherited_dim(const json& doc, std::size_t parent) {
  if (doc.is_object() && doc.contains("dim")) return parse_dim(doc);
  if (parent == 0) fail("path document needs \"dim\"");
  return parent;
}

PathOptions parse_options(const json& doc) {
  PathOptions options;
  if (doc.contains("segment_pieces")) {
    const json& p = doc.at("segment_pieces");
    if (!p.is_number_integer() || p.get<long long>() < 1) {
      fail("\"segment_pieces\" must be a positive integer");
    }
    options.segment_pieces = p.get<std::size_t>();
  }
  return options;
}

HyperPath parse_path(const json& doc, std::size_t parent_dim) {
  const json& kind_field = field(doc, "kind");
  if (!kind_field.is_string()) fail("\"kind\" must be a string");
  const std::string kind = kind_field.get<std::string>();

  if (kind == "reverse" || kind == "reversed") {
    return reverse(parse_path(field(doc, "path"), inherited_dim(doc, parent_dim)));
  }
  if (kind == "concat" || kind == "concatenation") {
    const std::size_t dim = inherited_dim(doc, parent_dim);
    const json& list = field(doc, "paths");
    if (!list.is_array() || list.empty()) fail("\"paths\" must be a non-empty array");
    std::vector<HyperPath> legs;
    for (const auto& leg : list) legs.push_back(parse_path(leg, dim));
    return concat(legs);
  }

  const std::size_t dim = inherited_dim(doc, parent_dim);
  if (kind == "translation") {
    return translation_path(parse_set_node(field(doc, "set"), dim),
                            parse_point(field(doc, "v"), dim, "v"));
  }
  if (kind == "point_to_box") {
    return point_to_box_path(parse_point(field(doc, "a"), dim, "a"),
                             parse_point(field(doc, "m"), dim, "m"),
                             parse_point(field(doc, "M"), dim, "M"));
  }
  if (kind == "set_to_box") {
    return set_to_box_path(parse_set_node(field(doc, "set"), dim),
                           parse_point(field(doc, "m"), dim, "m"),
                           parse_point(field(doc, "M"), dim, "M"), parse_options(doc));
  }
  if (kind == "connect") {
    return connect(parse_set_node(field(doc, "from"), dim), parse_set_node(field(doc, "to"), dim),
                   parse_options(doc));
  }
  fail("unknown path kind \"" + kind + "\"");
}

}  // namespace

CompactSet parse_set_node(const json& node, std::size_t dim) {
  const json& type_field = field(node, "type");
  if (!type_field.is_string()) fail("\"type\" must be a string");
  const std::string type = type_field.get<std::string>();
  return as_format_error([&]() -> CompactSet {
    if (type == "points") {
      const json& coords = field(node, "coords");
      if (!coords.is_array() || coords.empty()) fail("\"coords\" must be a non-empty array");
      std::vector<Point> pts;
      for (const auto& c : coords) pts.push_back(parse_point(c, dim, "coords"));
      return CompactSet::points(std::move(pts));
    }
    if (type == "box") {
      return CompactSet::box(canonical_box(parse_point(field(node, "lo"), dim, "lo"),
                                           parse_point(field(node, "hi"), dim, "hi")));
    }
    if (type == "segment") {
      return CompactSet::segment(Segment(parse_point(field(node, "p"), dim, "p"),
                                         parse_point(field(node, "q"), dim, "q")));
    }
    if (type == "union") {
      const json& parts = field(node, "parts");
      if (!parts.is_array() || parts.empty()) fail("\"parts\" must be a non-empty array");
      std::vector<CompactSet> out;
      for (const auto& p : parts) out.push_back(parse_set_node(p, dim));
      return CompactSet::union_of(std::move(out));
    }
    if (type == "box_boundary") {
      if (dim != 2) fail("box_boundary is only available in two dimensions");
      return CompactSet::box_boundary(canonical_box(parse_point(field(node, "lo"), dim, "lo"),
                                                    parse_point(field(node, "hi"), dim, "hi")));
    }
    fail("unknown set type \"" + type + "\"");
  });
}

CompactSet parse_set_document(const json& doc) {
  return parse_set_node(field(doc, "set"), parse_dim(doc));
}

json set_node(const CompactSet& set) {
  return std::visit(
      [](const auto& node) -> json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, FiniteSet>) {
          json coords = json::array();
          for (const auto& p : node.points) coords.push_back(point_json(p));
          return {{"type", "points"}, {"coords", std::move(coords)}};
        } else if constexpr (std::is_same_v<T, AxisBox>) {
          return {{"type", "box"}, {"lo", point_json(node.lo())}, {"hi", point_json(node.hi())}};
        } else if constexpr (std::is_same_v<T, Segment>) {
          return {{"type", "segment"}, {"p", point_json(node.p)}, {"q", point_json(node.q)}};
        } else {
          json parts = json::array();
          for (const auto& part : node.parts) parts.push_back(set_node(part));
          return {{"type", "union"}, {"parts", std::move(parts)}};
        }
      },
      set.node());
}

json set_document(const CompactSet& set) {
  return {{"dim", set.dim()}, {"set", set_node(set)}};
}

HyperPath parse_path_document(const json& doc) {
  return as_format_error([&] { return parse_path(doc, 0); });
}

json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw FormatError("cannot open " + file.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(file.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& file, const json& doc) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << doc.dump(2) << '\n';
}

CompactSet read_set_file(const std::filesystem::path& file) {
  const json doc = read_json_file(file);
  try {
    return parse_set_document(doc);
  } catch (const FormatError& e) {
    throw FormatError(file.string() + ": " + e.what());
  }
}

HyperPath read_path_file(const std::filesystem::path& file) {
  const json doc = read_json_file(file);
  try {
    return parse_path_document(doc);
  } catch (const FormatError& e) {
    throw FormatError(file.string() + ": " + e.what());
  }
}

std::vector<Frame> sample_frames(const HyperPath& path, std::size_t count) {
  if (count < 2) throw GeometryError("a frame stream needs at least two frames");
  std::vector<Frame> frames;
  frames.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t =
        i + 1 == count ? 1.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    frames.push_back({t, path.sample(t)});
  }
  return frames;
}

json frame_stream(const HyperPath& path, const std::vector<Frame>& frames) {
  json out;
  out["header"] = {{"dim", path.dim()},
                   {"kind", std::string(to_string(path.kind()))},
                   {"lipschitz", path.lipschitz()},
                   {"frame_count", frames.size()},
                   {"max_err", path.max_err()}};
  json list = json::array();
  for (const auto& f : frames) {
    list.push_back({{"t", f.t},
                    {"err", f.sample.err},
                    {"dim", f.sample.set.dim()},
                    {"set", set_node(f.sample.set)}});
  }
  out["frames"] = std::move(list);
  return out;
}

json to_json(const DistanceResult& result) {
  return {{"value", result.value}, {"err", result.err}};
}

json to_json(const verify::SuiteReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"seed", f.seed},
                        {"case", f.case_index},
                        {"description", f.description},
                        {"observed", f.observed},
                        {"bound", f.bound}});
  }
  return {{"suite", report.suite},
          {"cases_run", report.cases_run},
          {"skipped", report.skipped},
          {"passed", report.passed()},
          {"failures", std::move(failures)},
          {"elapsed_seconds", report.elapsed_seconds}};
}

}  // namespace hyperspace::io
