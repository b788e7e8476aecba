#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace egz {

/// Instance file: a decimal n, then 2n - 1 whitespace-separated signed 64-bit integers.
struct Instance {
  std::uint64_t n = 0;
  std::vector<std::int64_t> values;
};

/// Throws InputError on malformed text or a wrong element count.
Instance parse_instance(std::istream& in);
void write_instance(std::ostream& out, const Instance& inst);

/// Reads a certificate as printed by `solve`: either a line of 1-based
/// indices or the flat JSON object. Returns 0-based indices.
std::vector<std::uint32_t> parse_certificate_indices(std::istream& in);

/// Space-separated 1-based indices.
std::string format_indices(std::span<const std::uint32_t> zero_based);

/// Whitespace/comma separated signed integers.
std::vector<std::int64_t> parse_integer_list(const std::string& text);

}  // namespace egz
