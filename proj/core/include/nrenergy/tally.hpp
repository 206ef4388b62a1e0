#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace nrenergy {

/// Operation kinds emitted by the counters. A flop is an addition plus a multiplication and is only
/// expanded when costed.
enum class op_kind : std::uint8_t {
  add,
  mul,
  div,
  bit_xor,
  bit_and,
  shift,
  cmp,
  lookup,
  set,
  log,
  flop,
};

inline constexpr std::size_t num_op_kinds = 11;

/// The seven operand data types seen in operator reports.
enum class data_class : std::uint8_t {
  logical_scalar,
  logical_vector,
  int_scalar,
  int_vector,
  double_scalar,
  double_vector,
  structure,
};

inline constexpr std::size_t num_data_classes = 7;

inline constexpr std::array<op_kind, num_op_kinds> all_op_kinds = {op_kind::add,
                                                                   op_kind::mul,
                                                                   op_kind::div,
                                                                   op_kind::bit_xor,
                                                                   op_kind::bit_and,
                                                                   op_kind::shift,
                                                                   op_kind::cmp,
                                                                   op_kind::lookup,
                                                                   op_kind::set,
                                                                   op_kind::log,
                                                                   op_kind::flop};

inline constexpr std::array<data_class, num_data_classes> all_data_classes = {data_class::logical_scalar,
                                                                              data_class::logical_vector,
                                                                              data_class::int_scalar,
                                                                              data_class::int_vector,
                                                                              data_class::double_scalar,
                                                                              data_class::double_vector,
                                                                              data_class::structure};

/// Upper-case names: "ADD", "XOR", "FLOP", ...
std::string_view to_string(op_kind kind);
/// Names as used in files: "logical_scalar", ..., "struct".
std::string_view to_string(data_class cls);

std::optional<op_kind>    parse_op_kind(std::string_view text);
std::optional<data_class> parse_data_class(std::string_view text);

constexpr bool is_vector(data_class cls)
{
  return cls == data_class::logical_vector || cls == data_class::int_vector || cls == data_class::double_vector;
}

/// Non-negative operation counts keyed by (operation kind, data class).
///
/// Tallies form a commutative monoid under +, with the default-constructed tally as identity.
class operation_tally
{
public:
  operation_tally() = default;

  operation_tally& add(op_kind kind, data_class cls, std::uint64_t n)
  {
    counts_[index(kind, cls)] += n;
    return *this;
  }

  std::uint64_t count(op_kind kind, data_class cls) const { return counts_[index(kind, cls)]; }

  /// Sum over all data classes.
  std::uint64_t count(op_kind kind) const;

  /// Sum of all raw counts, a flop counting as one.
  std::uint64_t total() const;

  /// Sum of all counts after flop expansion (a flop counts as two).
  std::uint64_t total_expanded() const;

  bool empty() const { return total() == 0; }

  operation_tally& operator+=(const operation_tally& other);
  operation_tally& operator*=(std::uint64_t factor);

  friend operation_tally operator+(operation_tally lhs, const operation_tally& rhs) { return lhs += rhs; }
  friend operation_tally operator*(operation_tally lhs, std::uint64_t factor) { return lhs *= factor; }

  bool operator==(const operation_tally&) const = default;

  /// Visits every non-zero entry in (op_kind, data_class) enumeration order.
  template <typename Fn>
  void for_each(Fn&& fn) const
  {
    for (op_kind kind : all_op_kinds) {
      for (data_class cls : all_data_classes) {
        if (std::uint64_t n = count(kind, cls); n != 0) {
          fn(kind, cls, n);
        }
      }
    }
  }

private:
  static constexpr std::size_t index(op_kind kind, data_class cls)
  {
    return static_cast<std::size_t>(kind) * num_data_classes + static_cast<std::size_t>(cls);
  }

  std::array<std::uint64_t, num_op_kinds * num_data_classes> counts_{};
};

} // namespace nrenergy
