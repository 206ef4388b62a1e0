#include "nrenergy/data_paths.hpp"

#include <cstdlib>

namespace nrenergy {

std::filesystem::path default_data_dir()
{
  if (const char* env = std::getenv("NRENERGY_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  const std::filesystem::path installed = NRENERGY_INSTALL_DATA_DIR;
  if (std::filesystem::exists(installed / "base_graph_1.txt")) {
    return installed;
  }
  return NRENERGY_SOURCE_DATA_DIR;
}

std::filesystem::path default_cost_table_path()
{
  if (const char* env = std::getenv("NRENERGY_COST_TABLE"); env != nullptr && *env != '\0') {
    return env;
  }
  return default_data_dir() / "default_cost_table.csv";
}

} // namespace nrenergy
