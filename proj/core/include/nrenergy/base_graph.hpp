#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>

namespace nrenergy {

/// Shape summary of an NR LDPC base graph.
struct base_graph_spec {
  unsigned id        = 0;
  unsigned rows      = 0;
  unsigned cols      = 0;
  unsigned nonnull   = 0; ///< number of non-null (shifted identity) entries
  unsigned info_cols = 0; ///< systematic columns; K = info_cols * Z

  bool operator==(const base_graph_spec&) const = default;
};

/// Fixed dimensions of base graph 1 or 2, with nonnull left at zero.
base_graph_spec base_graph_dimensions(unsigned id);

/// Parses a descriptor with one "row col shift" line per non-null entry. Blank lines and '#' comments
/// are ignored. Entries outside the graph or repeated (row, col) pairs are rejected.
base_graph_spec parse_base_graph(std::istream& in, unsigned id, std::string_view source_name);

/// Both NR base graphs, loaded once from a data directory.
class base_graph_catalog
{
public:
  /// Reads base_graph_1.txt and base_graph_2.txt from \p data_dir. Throws io_error when a file is missing.
  static base_graph_catalog load(const std::filesystem::path& data_dir);

  /// Catalog built from the bundled data directory, loaded on first use.
  static const base_graph_catalog& bundled();

  const base_graph_spec& graph(unsigned id) const;

private:
  base_graph_spec bg1_;
  base_graph_spec bg2_;
};

/// Base graph choice from the transport block size and code rate (rate = code_rate_x1024 / 1024):
/// BG2 when A <= 292, or A <= 3824 with rate <= 2/3, or rate <= 1/4; BG1 otherwise.
unsigned base_graph_id_for(std::uint64_t tb_size, unsigned code_rate_x1024);

/// Selects and returns the spec of the base graph used for \p tb_size bits. Throws domain_error when tb_size is 0.
base_graph_spec
select_base_graph(std::uint64_t tb_size, unsigned code_rate_x1024, const base_graph_catalog& catalog);

} // namespace nrenergy
