#include "rholie/grading.hpp"

#include "rholie/error.hpp"

#include <sstream>

namespace rholie {

void validate_group(const GradingGroup& g) {
  if (g.free_rank < 0) throw InputError("group free_rank must be >= 0");
  for (long m : g.torsion_orders)
    if (m < 2) throw InputError("torsion orders must be >= 2");
}

Degree canonical_degree(const GradingGroup& g, Degree d) {
  if (static_cast<int>(d.c.size()) != g.coord_count())
    throw InputError("degree has wrong number of coordinates");
  for (size_t t = 0; t < g.torsion_orders.size(); ++t) {
    long m = g.torsion_orders[t];
    long& x = d.c[g.free_rank + t];
    x %= m;
    if (x < 0) x += m;
  }
  return d;
}

Degree zero_degree(const GradingGroup& g) {
  Degree d;
  d.c.assign(g.coord_count(), 0);
  return d;
}

Degree add_degrees(const GradingGroup& g, const Degree& a, const Degree& b) {
  Degree r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return canonical_degree(g, r);
}

Degree negate_degree(const GradingGroup& g, const Degree& a) {
  Degree r = a;
  for (auto& x : r.c) x = -x;
  return canonical_degree(g, r);
}

bool is_zero_degree(const Degree& d) {
  for (long x : d.c)
    if (x != 0) return false;
  return true;
}

std::string degree_to_string(const Degree& d) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < d.c.size(); ++i) {
    if (i) os << ',';
    os << d.c[i];
  }
  os << ')';
  return os.str();
}

}  // namespace rholie
