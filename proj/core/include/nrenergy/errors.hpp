#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nrenergy {

/// Machine-greppable category attached to every failure raised by the library.
enum class error_code {
  config,
  parse,
  domain,
  coverage,
  io,
  empty_report,
  usage,
};

/// Stable prefix printed by the CLI, e.g. "NRE_CONFIG".
std::string_view to_string(error_code code);

class error : public std::runtime_error
{
public:
  error(error_code code, const std::string& message) : std::runtime_error(message), code_(code) {}

  error_code code() const noexcept { return code_; }

private:
  error_code code_;
};

/// Invalid or inconsistent scenario/parameter configuration.
class config_error : public error
{
public:
  explicit config_error(const std::string& message) : error(error_code::config, message) {}
};

/// Malformed input text. The message carries the source name and line number.
class parse_error : public error
{
public:
  parse_error(std::string_view source, std::size_t line, std::string_view what);

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A formula precondition was violated.
class domain_error : public error
{
public:
  explicit domain_error(const std::string& message) : error(error_code::domain, message) {}
};

/// A cost-table lookup found no entry for the requested key.
class coverage_error : public error
{
public:
  explicit coverage_error(const std::string& message) : error(error_code::coverage, message) {}
};

class io_error : public error
{
public:
  explicit io_error(const std::string& message) : error(error_code::io, message) {}
};

} // namespace nrenergy
