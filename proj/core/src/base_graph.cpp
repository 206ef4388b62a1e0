#include "nrenergy/base_graph.hpp"
#include "nrenergy/data_paths.hpp"
#include "nrenergy/errors.hpp"

#include <fmt/format.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace nrenergy {

base_graph_spec base_graph_dimensions(unsigned id)
{
  switch (id) {
    case 1:
      return {.id = 1, .rows = 46, .cols = 68, .nonnull = 0, .info_cols = 22};
    case 2:
      return {.id = 2, .rows = 42, .cols = 52, .nonnull = 0, .info_cols = 10};
    default:
      throw domain_error(fmt::format("unknown base graph {}", id));
  }
}

base_graph_spec parse_base_graph(std::istream& in, unsigned id, std::string_view source_name)
{
  base_graph_spec spec = base_graph_dimensions(id);

  std::set<std::pair<unsigned, unsigned>> seen;
  std::string                             line;
  std::size_t                             line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    std::istringstream fields(line);
    long               row = -1, col = -1, shift = -1;
    std::string        extra;
    if (!(fields >> row >> col >> shift) || (fields >> extra)) {
      throw parse_error(source_name, line_no, "expected 'row col shift'");
    }
    if (row < 0 || col < 0 || shift < 0 || row >= static_cast<long>(spec.rows) ||
        col >= static_cast<long>(spec.cols)) {
      throw parse_error(source_name, line_no, fmt::format("entry ({}, {}) outside the base graph", row, col));
    }
    if (!seen.emplace(static_cast<unsigned>(row), static_cast<unsigned>(col)).second) {
      throw parse_error(source_name, line_no, fmt::format("duplicate entry ({}, {})", row, col));
    }
  }
  if (seen.empty()) {
    throw parse_error(source_name, line_no, "base graph has no entries");
  }
  spec.nonnull = static_cast<unsigned>(seen.size());
  return spec;
}

namespace {

base_graph_spec load_graph(const std::filesystem::path& path, unsigned id)
{
  std::ifstream in(path);
  if (!in) {
    throw io_error(fmt::format("cannot open base graph file '{}'", path.string()));
  }
  return parse_base_graph(in, id, path.string());
}

} // namespace

base_graph_catalog base_graph_catalog::load(const std::filesystem::path& data_dir)
{
  base_graph_catalog catalog;
  catalog.bg1_ = load_graph(data_dir / "base_graph_1.txt", 1);
  catalog.bg2_ = load_graph(data_dir / "base_graph_2.txt", 2);
  return catalog;
}

const base_graph_catalog& base_graph_catalog::bundled()
{
  static const base_graph_catalog catalog = load(default_data_dir());
  return catalog;
}

const base_graph_spec& base_graph_catalog::graph(unsigned id) const
{
  if (id == 1) {
    return bg1_;
  }
  if (id == 2) {
    return bg2_;
  }
  throw domain_error(fmt::format("unknown base graph {}", id));
}

unsigned base_graph_id_for(std::uint64_t tb_size, unsigned code_rate_x1024)
{
  // Rate comparisons in integers: R <= 2/3 <=> 3 num <= 2048, R <= 1/4 <=> 4 num <= 1024.
  const bool low_rate      = 4U * code_rate_x1024 <= 1024U;
  const bool moderate_rate = 3U * code_rate_x1024 <= 2048U;
  if (tb_size <= 292 || (tb_size <= 3824 && moderate_rate) || low_rate) {
    return 2;
  }
  return 1;
}

base_graph_spec
select_base_graph(std::uint64_t tb_size, unsigned code_rate_x1024, const base_graph_catalog& catalog)
{
  if (tb_size == 0) {
    throw domain_error("base graph selection needs a non-empty transport block");
  }
  return catalog.graph(base_graph_id_for(tb_size, code_rate_x1024));
}

} // namespace nrenergy
