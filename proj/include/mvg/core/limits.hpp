#pragma once

#include <cstddef>

namespace mvg {

// Desk-scale size caps shared by all constructions.
struct Limits {
  std::size_t group = 4096;   // |G|, field order q
  std::size_t action = 20000; // |A|
  std::size_t graph = 4096;   // vertex count

  static Limits uniform(std::size_t cap) { return {cap, cap, cap}; }
};

}  // namespace mvg
