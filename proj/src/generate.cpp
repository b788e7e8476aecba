#include "egz/generate.hpp"

#include "egz/errors.hpp"

#include <algorithm>
#include <random>

namespace egz {
namespace {

// std::uniform_int_distribution is implementation-defined; this is not.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  // [threshold, 2^64) has a length divisible by bound.
  const std::uint64_t threshold = (std::uint64_t{0} - bound) % bound;
  std::uint64_t x = rng();
  while (x < threshold) x = rng();
  return x % bound;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(rng, i)]);
}

constexpr std::int64_t kSpan = std::int64_t{1} << 40;

std::int64_t uniform_value(std::mt19937_64& rng) {
  return static_cast<std::int64_t>(below(rng, 2 * kSpan + 1)) - kSpan;
}

// A value in residue class r mod n, spread over a few thousand multiples of n.
std::int64_t in_class(std::mt19937_64& rng, std::uint64_t r, std::uint64_t n) {
  const std::int64_t k = static_cast<std::int64_t>(below(rng, 2001)) - 1000;
  return static_cast<std::int64_t>(r) + k * static_cast<std::int64_t>(n);
}

}  // namespace

std::optional<Distribution> parse_distribution(std::string_view name) {
  if (name == "uniform") return Distribution::Uniform;
  if (name == "adversarial-few-residues") return Distribution::AdversarialFewResidues;
  if (name == "single-residue-heavy") return Distribution::SingleResidueHeavy;
  return std::nullopt;
}

const char* to_string(Distribution d) {
  switch (d) {
    case Distribution::Uniform: return "uniform";
    case Distribution::AdversarialFewResidues: return "adversarial-few-residues";
    case Distribution::SingleResidueHeavy: return "single-residue-heavy";
  }
  return "?";
}

Instance generate_instance(std::uint64_t n, std::uint64_t seed, Distribution dist) {
  if (n < 1) throw InputError("n must be positive");
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.n = n;
  const std::uint64_t len = 2 * n - 1;
  inst.values.reserve(len);
  switch (dist) {
    case Distribution::Uniform:
      for (std::uint64_t i = 0; i < len; ++i) inst.values.push_back(uniform_value(rng));
      break;
    case Distribution::AdversarialFewResidues: {
      const std::uint64_t k = std::min<std::uint64_t>(3, n);
      std::vector<std::uint64_t> classes(k);
      for (auto& c : classes) c = below(rng, n);
      for (std::uint64_t i = 0; i < len; ++i) {
        inst.values.push_back(in_class(rng, classes[below(rng, k)], n));
      }
      break;
    }
    case Distribution::SingleResidueHeavy: {
      const std::uint64_t r = below(rng, n);
      for (std::uint64_t i = 0; i < n; ++i) inst.values.push_back(in_class(rng, r, n));
      for (std::uint64_t i = n; i < len; ++i) inst.values.push_back(uniform_value(rng));
      shuffle(inst.values, rng);
      break;
    }
  }
  return inst;
}

std::vector<Residue> generate_differences(std::uint64_t p, std::uint64_t seed, Distribution dist) {
  if (p < 2) throw InputError("p must be at least 2");
  std::mt19937_64 rng(seed);
  std::vector<Residue> d(p - 1);
  auto nonzero = [&] { return 1 + below(rng, p - 1); };
  switch (dist) {
    case Distribution::Uniform:
      for (auto& x : d) x = nonzero();
      break;
    case Distribution::AdversarialFewResidues: {
      const Residue classes[3] = {nonzero(), nonzero(), nonzero()};
      for (auto& x : d) x = classes[below(rng, 3)];
      break;
    }
    case Distribution::SingleResidueHeavy: {
      const Residue heavy = nonzero();
      for (auto& x : d) x = below(rng, 10) == 0 ? nonzero() : heavy;
      break;
    }
  }
  return d;
}

}  // namespace egz
