#pragma once

#include "copgeo/measure_report.hpp"
#include "json.hpp"

namespace copgeo::detail {

nlohmann::ordered_json report_json(const MeasureReport& report);

std::string shortest(double v);

}  // namespace copgeo::detail
