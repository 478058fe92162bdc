#include "sumprod/random.hpp"

#include <algorithm>
#include <set>

#include "sumprod/errors.hpp"

namespace sumprod {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CounterRng::result_type CounterRng::at(std::uint64_t index) const {
  std::uint64_t key = splitmix64(seed_ ^ splitmix64(stream_ + 0x632be59bd9b4e019ULL));
  return splitmix64(key ^ splitmix64(index));
}

std::uint64_t CounterRng::uniform(std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform draw with empty range");
  const std::uint64_t limit = max() - (max() % bound + 1) % bound;
  for (;;) {
    std::uint64_t x = (*this)();
    if (x <= limit) return x % bound;
  }
}

double CounterRng::unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

std::vector<std::uint64_t> CounterRng::subset(std::uint64_t n, std::uint64_t d) {
  if (d > n) throw DomainError("subset larger than ground set");
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = n - d; j < n; ++j) {
    std::uint64_t t = uniform(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace sumprod
