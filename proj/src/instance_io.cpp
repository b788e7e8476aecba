#include "egz/instance_io.hpp"

#include "egz/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace egz {
namespace {

std::int64_t parse_int64(const std::string& tok) {
  std::int64_t v = 0;
  const char* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw InputError("not a 64-bit integer: '" + tok + "'");
  return v;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) throw InputError("empty instance: missing n");
  const std::int64_t n = parse_int64(tok);
  if (n < 1) throw InputError("n must be positive");
  Instance inst;
  inst.n = static_cast<std::uint64_t>(n);
  const std::uint64_t want = 2 * inst.n - 1;
  inst.values.reserve(want);
  while (in >> tok) {
    if (inst.values.size() == want) throw InputError("more than 2n-1 values");
    inst.values.push_back(parse_int64(tok));
  }
  if (inst.values.size() != want) {
    throw InputError("expected " + std::to_string(want) + " values, got " +
                     std::to_string(inst.values.size()));
  }
  return inst;
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << inst.n << '\n';
  for (std::size_t i = 0; i < inst.values.size(); ++i) {
    out << inst.values[i] << (i + 1 == inst.values.size() ? '\n' : ' ');
  }
}

std::vector<std::uint32_t> parse_certificate_indices(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::vector<std::int64_t> one_based;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      const auto j = nlohmann::json::parse(text);
      one_based = j.at("indices").get<std::vector<std::int64_t>>();
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("bad certificate JSON: ") + e.what());
    }
  } else {
    one_based = parse_integer_list(text);
  }
  std::vector<std::uint32_t> out;
  out.reserve(one_based.size());
  for (const std::int64_t i : one_based) {
    if (i < 1 || i > std::int64_t{0xffffffff}) {
      throw InputError("certificate index " + std::to_string(i) + " is not a 1-based index");
    }
    out.push_back(static_cast<std::uint32_t>(i - 1));
  }
  return out;
}

std::string format_indices(std::span<const std::uint32_t> zero_based) {
  std::string out;
  for (std::size_t i = 0; i < zero_based.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(std::uint64_t{zero_based[i]} + 1);
  }
  return out;
}

std::vector<std::int64_t> parse_integer_list(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<std::int64_t> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_int64(tok));
  return out;
}

}  // namespace egz
