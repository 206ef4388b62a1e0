#include "nrenergy/block.hpp"
#include "nrenergy/errors.hpp"
#include "nrenergy/tally.hpp"

#include <fmt/format.h>

namespace nrenergy {

namespace {

constexpr std::array<std::string_view, num_op_kinds> op_kind_names = {
    "ADD", "MUL", "DIV", "XOR", "AND", "SHIFT", "CMP", "LOOKUP", "SET", "LOG", "FLOP"};

constexpr std::array<std::string_view, num_data_classes> data_class_names = {
    "logical_scalar", "logical_vector", "int_scalar", "int_vector", "double_scalar", "double_vector", "struct"};

constexpr std::array<std::string_view, num_blocks> block_names = {"A", "B", "C", "D", "E", "F", "G", "H"};

} // namespace

std::string_view to_string(error_code code)
{
  switch (code) {
    case error_code::config:
      return "NRE_CONFIG";
    case error_code::parse:
      return "NRE_PARSE";
    case error_code::domain:
      return "NRE_DOMAIN";
    case error_code::coverage:
      return "NRE_COVERAGE";
    case error_code::io:
      return "NRE_IO";
    case error_code::empty_report:
      return "NRE_EMPTY_REPORT";
    case error_code::usage:
      return "NRE_USAGE";
  }
  return "NRE_UNKNOWN";
}

parse_error::parse_error(std::string_view source, std::size_t line, std::string_view what) :
  error(error_code::parse, fmt::format("{}:{}: {}", source, line, what)), line_(line)
{
}

std::string_view to_string(op_kind kind)
{
  return op_kind_names[static_cast<std::size_t>(kind)];
}

std::string_view to_string(data_class cls)
{
  return data_class_names[static_cast<std::size_t>(cls)];
}

std::optional<op_kind> parse_op_kind(std::string_view text)
{
  for (std::size_t i = 0; i != op_kind_names.size(); ++i) {
    if (op_kind_names[i] == text) {
      return static_cast<op_kind>(i);
    }
  }
  return std::nullopt;
}

std::optional<data_class> parse_data_class(std::string_view text)
{
  for (std::size_t i = 0; i != data_class_names.size(); ++i) {
    if (data_class_names[i] == text) {
      return static_cast<data_class>(i);
    }
  }
  return std::nullopt;
}

std::string_view to_string(block_id block)
{
  return block_names[static_cast<std::size_t>(block)];
}

std::string_view to_string(link_side side)
{
  return side == link_side::base_station ? "BS" : "UE";
}

std::optional<block_id> parse_block_id(std::string_view text)
{
  for (std::size_t i = 0; i != block_names.size(); ++i) {
    if (block_names[i] == text) {
      return static_cast<block_id>(i);
    }
  }
  return std::nullopt;
}

std::uint64_t operation_tally::count(op_kind kind) const
{
  std::uint64_t sum = 0;
  for (data_class cls : all_data_classes) {
    sum += count(kind, cls);
  }
  return sum;
}

std::uint64_t operation_tally::total() const
{
  std::uint64_t sum = 0;
  for (std::uint64_t n : counts_) {
    sum += n;
  }
  return sum;
}

std::uint64_t operation_tally::total_expanded() const
{
  return total() + count(op_kind::flop);
}

operation_tally& operation_tally::operator+=(const operation_tally& other)
{
  for (std::size_t i = 0; i != counts_.size(); ++i) {
    counts_[i] += other.counts_[i];
  }
  return *this;
}

operation_tally& operation_tally::operator*=(std::uint64_t factor)
{
  for (std::uint64_t& n : counts_) {
    n *= factor;
  }
  return *this;
}

} // namespace nrenergy
