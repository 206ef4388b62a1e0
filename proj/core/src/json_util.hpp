#pragma once

// Strict readers over nlohmann::json used by every configuration parser.

#include "nrenergy/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace nrenergy::detail {

using json = nlohmann::json;

inline json parse_json(std::string_view text, std::string_view source_name)
{
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw config_error(fmt::format("{}: invalid JSON: {}", source_name, e.what()));
  }
}

inline std::string read_text_file(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw io_error(fmt::format("cannot open '{}'", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Read-only view of a JSON object that rejects keys outside an allowed set.
class object_reader
{
public:
  object_reader(const json& node, std::string context, std::initializer_list<std::string_view> allowed) :
    node_(node), context_(std::move(context))
  {
    if (!node_.is_object()) {
      throw config_error(fmt::format("{}: expected an object", context_));
    }
    for (const auto& item : node_.items()) {
      if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
        throw config_error(fmt::format("{}: unknown key '{}'", context_, item.key()));
      }
    }
  }

  bool has(std::string_view key) const { return node_.contains(std::string(key)); }

  const json& at(std::string_view key) const
  {
    if (!has(key)) {
      throw config_error(fmt::format("{}: missing key '{}'", context_, key));
    }
    return node_.at(std::string(key));
  }

  std::string field(std::string_view key) const { return fmt::format("{}.{}", context_, key); }

  std::uint64_t get_uint(std::string_view key) const
  {
    const json& v = at(key);
    if (v.is_number_unsigned()) {
      return v.get<std::uint64_t>();
    }
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
      return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    throw config_error(fmt::format("{}: must be a non-negative integer", field(key)));
  }

  unsigned get_unsigned(std::string_view key) const
  {
    std::uint64_t v = get_uint(key);
    if (v > 0xffffffffULL) {
      throw config_error(fmt::format("{}: value too large", field(key)));
    }
    return static_cast<unsigned>(v);
  }

  double get_double(std::string_view key) const
  {
    const json& v = at(key);
    if (!v.is_number()) {
      throw config_error(fmt::format("{}: must be a number", field(key)));
    }
    double d = v.get<double>();
    if (!std::isfinite(d)) {
      throw config_error(fmt::format("{}: must be finite", field(key)));
    }
    return d;
  }

  bool get_bool(std::string_view key) const
  {
    const json& v = at(key);
    if (!v.is_boolean()) {
      throw config_error(fmt::format("{}: must be true or false", field(key)));
    }
    return v.get<bool>();
  }

  std::string get_string(std::string_view key) const
  {
    const json& v = at(key);
    if (!v.is_string()) {
      throw config_error(fmt::format("{}: must be a string", field(key)));
    }
    return v.get<std::string>();
  }

  template <typename T>
  void read_unsigned(std::string_view key, T& out) const
  {
    if (has(key)) {
      out = get_unsigned(key);
    }
  }

  void read_double(std::string_view key, double& out) const
  {
    if (has(key)) {
      out = get_double(key);
    }
  }

  const std::string& context() const { return context_; }

private:
  const json& node_;
  std::string context_;
};

} // namespace nrenergy::detail
