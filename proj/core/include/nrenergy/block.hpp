#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace nrenergy {

/// Processing blocks of the downlink chain. A-D run at the base station, E-H at the UE.
///
/// A: CRC attachment, segmentation, LDPC encoding, rate matching
/// B: scrambling, modulation, layer mapping
/// C: antenna port mapping (precoding)
/// D: OFDM modulation
/// E: OFDM demodulation
/// F: channel estimation and equalization
/// G: layer demapping, demodulation, descrambling
/// H: rate recovery, LDPC decoding, desegmentation, CRC check
enum class block_id : std::uint8_t { A, B, C, D, E, F, G, H };

inline constexpr std::size_t num_blocks = 8;

inline constexpr std::array<block_id, num_blocks> all_blocks = {
    block_id::A, block_id::B, block_id::C, block_id::D, block_id::E, block_id::F, block_id::G, block_id::H};

enum class link_side : std::uint8_t { base_station, user_equipment };

constexpr link_side side_of(block_id block)
{
  return static_cast<std::uint8_t>(block) < 4 ? link_side::base_station : link_side::user_equipment;
}

/// "A".."H".
std::string_view to_string(block_id block);
/// "BS" or "UE".
std::string_view to_string(link_side side);

std::optional<block_id> parse_block_id(std::string_view text);

/// Fixed-size container indexed by block.
template <typename T>
class per_block
{
public:
  T&       operator[](block_id block) { return values_[static_cast<std::size_t>(block)]; }
  const T& operator[](block_id block) const { return values_[static_cast<std::size_t>(block)]; }

  auto begin() { return values_.begin(); }
  auto end() { return values_.end(); }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  bool operator==(const per_block&) const = default;

private:
  std::array<T, num_blocks> values_{};
};

} // namespace nrenergy
