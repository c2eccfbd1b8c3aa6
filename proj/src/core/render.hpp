#pragma once

#include <string>

#include "core/blocksys.hpp"
#include "core/fieldfacts.hpp"
#include "core/primitivity.hpp"
#include "core/trapdoor.hpp"

namespace primanal {

enum class ReportFormat { Text, Json };

std::string render_primitivity(const PrimitivityReport& rep, ReportFormat fmt);
std::string render_find_blocks(const CipherSpec& spec, const FindBlocksOutcome& out,
                               ReportFormat fmt);
std::string render_trapdoor_demo(const TrapdoorDemoReport& rep, ReportFormat fmt);
std::string render_field_appendix(const AppendixReport& rep, ReportFormat fmt);

}  // namespace primanal
