#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hyperspace/geometry.hpp"
#include "hyperspace/io.hpp"

namespace hyperspace::svg {

/// Draws a 2D set inside the given world-space view: boxes as stroke-only
/// rectangles, segments as lines, points as 2px dots, with a "t = ..." label.
std::string render(const CompactSet& set, const AxisBox& view, double t);

/// Smallest box holding every frame, so all frames share one viewBox.
AxisBox common_view(const std::vector<io::Frame>& frames);

/// Writes frame_0000.svg, frame_0001.svg, ... into dir and returns the paths.
std::vector<std::filesystem::path> write_frames(const std::vector<io::Frame>& frames,
                                                const std::filesystem::path& dir);

}  // namespace hyperspace::svg
