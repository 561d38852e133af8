#pragma once

#include <string>
#include <vector>

namespace rholie {

/// Finitely generated abelian grading group Z^free_rank x Z/m_1 x ... x Z/m_t.
/// A degree is one coordinate per generator; torsion coordinates are kept in
/// their canonical representatives [0, m).
struct GradingGroup {
  int free_rank = 0;
  std::vector<long> torsion_orders;

  int coord_count() const {
    return free_rank + static_cast<int>(torsion_orders.size());
  }
};

struct Degree {
  std::vector<long> c;

  bool operator==(const Degree&) const = default;
  bool operator<(const Degree& o) const { return c < o.c; }
};

void validate_group(const GradingGroup& g);  // throws InputError

Degree canonical_degree(const GradingGroup& g, Degree d);
Degree zero_degree(const GradingGroup& g);
Degree add_degrees(const GradingGroup& g, const Degree& a, const Degree& b);
Degree negate_degree(const GradingGroup& g, const Degree& a);

bool is_zero_degree(const Degree& d);

std::string degree_to_string(const Degree& d);

}  // namespace rholie
