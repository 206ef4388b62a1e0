#pragma once

#include "nrenergy/block.hpp"
#include "nrenergy/opcount.hpp"
#include "nrenergy/scenario.hpp"
#include "nrenergy/tally.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

namespace nrenergy {

/// Exact cycle quantities. Table entries are decimal reciprocal throughputs, so sums stay exact.
using rational = boost::multiprecision::cpp_rational;

enum class operand_location : std::uint8_t { reg, mmx, xmm, memory };

/// "register", "mmx", "xmm", "memory".
std::string_view                to_string(operand_location loc);
std::optional<operand_location> parse_operand_location(std::string_view text);

/// Scalars live in registers, logical/integer vectors in MMX registers, double vectors in XMM registers,
/// structs in memory.
constexpr operand_location assign_location(data_class cls)
{
  switch (cls) {
    case data_class::logical_scalar:
    case data_class::int_scalar:
    case data_class::double_scalar:
      return operand_location::reg;
    case data_class::logical_vector:
    case data_class::int_vector:
      return operand_location::mmx;
    case data_class::double_vector:
      return operand_location::xmm;
    case data_class::structure:
      return operand_location::memory;
  }
  return operand_location::memory;
}

struct cost_entry {
  std::uint64_t micro_ops = 0;
  rational      cycles;

  bool operator==(const cost_entry&) const = default;
};

/// Micro-op and cycle cost per (operation, data class, operand location).
///
/// FLOP is never stored: it is costed as one ADD plus one MUL of the same data class.
class instruction_cost_table
{
public:
  using key = std::tuple<op_kind, data_class, operand_location>;

  /// Throws domain_error for a duplicate key or a FLOP key.
  void insert(op_kind kind, data_class cls, operand_location loc, cost_entry entry);

  const cost_entry* find(op_kind kind, data_class cls, operand_location loc) const;

  /// Entry at the location assigned to \p cls. Throws coverage_error naming the key when absent.
  const cost_entry& resolve(op_kind kind, data_class cls) const;

  std::size_t size() const { return entries_.size(); }

  const std::map<key, cost_entry>& entries() const { return entries_; }

  /// Table with one micro-op and one cycle for every non-FLOP kind at every assigned location.
  static instruction_cost_table uniform();

  std::string source;
  std::string date;

private:
  std::map<key, cost_entry> entries_;
};

/// Parses the delimited cost-table format: header "op_kind,data_class,operand_location,micro_ops,cycles",
/// '#' comments ("# source: ..." and "# date: ..." set the metadata), cycles as a non-negative decimal.
instruction_cost_table parse_cost_table(std::istream& in, std::string_view source_name);
instruction_cost_table load_cost_table(const std::filesystem::path& path);

struct cycle_cost {
  std::uint64_t micro_ops = 0;
  rational      cycles;

  cycle_cost& operator+=(const cycle_cost& other)
  {
    micro_ops += other.micro_ops;
    cycles += other.cycles;
    return *this;
  }

  bool operator==(const cycle_cost&) const = default;
};

/// Sums count * entry over the tally, expanding each FLOP into ADD + MUL.
cycle_cost cycles_for(const operation_tally& tally, const instruction_cost_table& table);

/// Joules per cycle: kappa * f^2.
double energy_per_cycle(double kappa, double clock_hz);

struct energy_params {
  double kappa    = 1e-25;
  double clock_hz = 2.1e9;

  double epsilon() const { return energy_per_cycle(kappa, clock_hz); }
};

struct block_cost {
  std::uint64_t micro_ops = 0;
  rational      cycles;
  double        energy_j = 0.0;
  /// Empty when no bits were transmitted.
  std::optional<double> cycles_per_bit;
};

struct energy_report {
  per_block<block_cost> blocks;
  block_cost            total;
  std::uint64_t         bits_transmitted = 0;
  energy_params         energy;
  double                epsilon_j_per_cycle = 0.0;
  std::string           table_source;
  std::string           table_date;
  std::optional<scenario> echo;
};

energy_report
build_report(const pipeline_tallies& tallies, const instruction_cost_table& table, const energy_params& energy);

/// Converts an exact cycle count to double.
double to_double(const rational& value);

/// Exact decimal text of \p value when its denominator divides a power of ten, else 6 significant digits.
std::string to_decimal_string(const rational& value);

} // namespace nrenergy
