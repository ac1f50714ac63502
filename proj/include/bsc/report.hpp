#pragma once

// Text reports, polygon vertex tables and SVG plots. All output is a pure
// function of its input so reports can be compared byte for byte.

#include "bsc/checker.hpp"
#include "bsc/isocrystal.hpp"

#include <string>
#include <vector>

namespace bsc {

std::string render_filtration(const Filtration& fil);
std::string render_verdict(const Verdict& v);
std::string render_report(const std::vector<Verdict>& verdicts);

std::string polygon_table(const std::string& id, const Polygon& newton, const Polygon& hodge);
std::string polygon_svg(const std::string& id, const Polygon& newton, const Polygon& hodge);

}  // namespace bsc
