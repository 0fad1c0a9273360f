#include "lgb/instance.hpp"

#include <stdexcept>
#include <string>

#include "lgb/checked.hpp"

namespace lgb {

void InstanceSpec::validate() const {
  if (n < 1) throw std::invalid_argument("instance: n must be >= 1");
  if (m < 1) throw std::invalid_argument("instance: m must be >= 1");
  if (static_cast<int>(degrees.size()) != m)
    throw std::invalid_argument("instance: expected " + std::to_string(m) +
                                " degrees, got " + std::to_string(degrees.size()));
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("instance: every degree must be >= 1");
}

std::int64_t InstanceSpec::macaulay_bound() const {
  std::int64_t b = 1;
  for (int d : degrees) b = checked::add(b, d - 1);
  return b;
}

}  // namespace lgb
