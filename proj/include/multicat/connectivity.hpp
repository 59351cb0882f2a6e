#ifndef MULTICAT_CONNECTIVITY_HPP
#define MULTICAT_CONNECTIVITY_HPP

#include <optional>

#include "multicat/category.hpp"

namespace mcat {

struct ComponentPartition {
  std::vector<std::vector<int>> blocks;   // ordered by least member
  std::vector<int> representative;        // per block, least object index
  std::vector<int> block_of;              // object -> block index
  int count() const { return static_cast<int>(blocks.size()); }
};

ComponentPartition connected_components(const FinCategory& c);

std::vector<int> initial_objects(const FinCategory& c);
std::vector<int> terminal_objects(const FinCategory& c);

struct MultiInitialFamily {
  std::vector<int> members;                       // one object per component, component order
  std::vector<std::pair<int, int>> witness;       // object -> (member position, unique arrow member->object)
};

struct AbsentComponent {
  int block = -1;                 // failing block index (first in canonical order)
  std::vector<int> block_objects; // its objects
};

struct MultiInitialResult {
  std::optional<MultiInitialFamily> family;
  std::optional<AbsentComponent> absent;
  bool ok() const { return family.has_value(); }
};

MultiInitialResult multi_initial_family(const FinCategory& c);
MultiInitialResult multi_terminal_family(const FinCategory& c); // dual

bool is_weakly_initial(const FinCategory& c, const std::vector<int>& members);

} // namespace mcat

#endif
