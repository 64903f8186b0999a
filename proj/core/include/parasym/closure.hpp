#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace parasym {

/// Subgroup generated by `generators` in a finite group, found by
/// breadth-first right multiplication. Elements are returned in discovery
/// order, identity first, so the result is deterministic.
template <typename T, typename Multiply, typename Hash = std::hash<T>>
std::vector<T> subgroup_closure(const std::vector<T>& generators, const T& identity,
                                Multiply multiply, Hash hash = Hash{}) {
  std::vector<T> elements{identity};
  std::unordered_map<T, std::size_t, Hash> seen(16, hash);
  seen.emplace(identity, 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const T& gen : generators) {
      T next = multiply(elements[head], gen);
      if (seen.emplace(next, elements.size()).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

}  // namespace parasym
