#pragma once

#include <filesystem>

namespace nrenergy {

/// Directory holding the bundled base graphs and default cost table.
///
/// Resolution order: $NRENERGY_DATA_DIR, the installed share directory, the source tree.
std::filesystem::path default_data_dir();

/// Cost table used when none is given: $NRENERGY_COST_TABLE, else default_cost_table.csv in default_data_dir().
std::filesystem::path default_cost_table_path();

} // namespace nrenergy
