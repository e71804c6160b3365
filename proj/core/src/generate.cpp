#include <stdexcept>

#include "locality/trace.hpp"

namespace locality {

Trace generate(Pattern pattern, std::size_t m, std::size_t reps) {
  if (m == 0 || reps == 0) throw std::invalid_argument("generate: m and reps must be >= 1");
  std::vector<DataId> ids;
  ids.reserve(m * reps);
  const auto count = static_cast<DataId>(m);
  switch (pattern) {
    case Pattern::Cyclic:
      for (std::size_t r = 0; r < reps; ++r)
        for (DataId e = 1; e <= count; ++e) ids.push_back(e);
      break;
    case Pattern::Sawtooth:
      for (std::size_t r = 0; r < reps; ++r) {
        if (r % 2 == 0) {
          for (DataId e = 1; e <= count; ++e) ids.push_back(e);
        } else {
          for (DataId e = count; e >= 1; --e) ids.push_back(e);
        }
      }
      break;
    case Pattern::Fused:
      for (DataId e = 1; e <= count; ++e)
        for (std::size_t r = 0; r < reps; ++r) ids.push_back(e);
      break;
  }
  return Trace(std::move(ids));
}

}  // namespace locality
