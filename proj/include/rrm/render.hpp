#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace rrm::io {

/// Line plot of one or more curve CSVs (first column on x, second on y).
/// A third "stderr" column is drawn as a ±3 SE band.
void render_svg(const std::vector<std::filesystem::path>& inputs, const std::filesystem::path& output,
                const std::string& title = {});

}  // namespace rrm::io
