#include "rholie/bicharacter.hpp"

#include "rholie/error.hpp"

#include <sstream>

namespace rholie {

std::string status_to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "error";
  }
}

CheckReport validate_bicharacter(const GradingGroup& g, const Mat& q) {
  const int s = g.coord_count();
  if (q.rows() != s || q.cols() != s)
    throw InputError("bicharacter matrix must be " + std::to_string(s) + "x" +
                     std::to_string(s));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (rat_is_zero(q(i, j)))
        throw InputError("bicharacter entries must be nonzero");

  auto torsion_order = [&](int i) -> long {
    return i < g.free_rank ? 0 : g.torsion_orders[i - g.free_rank];
  };

  // Torsion conditions are reported before inversion at each (i, j) so that a
  // diagonal entry violating both laws is blamed on the torsion power first.
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      if (long m = torsion_order(i); m != 0 && rat_pow(q(i, j), m) != 1) {
        std::ostringstream os;
        os << "q(" << i << "," << j << ")^" << m << " != 1";
        return fail_report("bicharacter", "torsion-power",
                           Witness{{i, j}, rat_to_string(rat_pow(q(i, j), m)),
                                   "1", os.str()});
      }
      if (long m = torsion_order(j); m != 0 && rat_pow(q(i, j), m) != 1) {
        std::ostringstream os;
        os << "q(" << i << "," << j << ")^" << m << " != 1";
        return fail_report("bicharacter", "torsion-power",
                           Witness{{i, j}, rat_to_string(rat_pow(q(i, j), m)),
                                   "1", os.str()});
      }
      if (j >= i && q(i, j) * q(j, i) != 1) {
        return fail_report(
            "bicharacter", "inversion",
            Witness{{i, j}, rat_to_string(q(i, j) * q(j, i)), "1",
                    "q(i,j)*q(j,i) != 1"});
      }
    }
  }
  return pass_report("bicharacter", "two-cycle-laws",
                     std::to_string(s) + " generators");
}

Rat rho_eval(const Bicharacter& b, const Degree& a, const Degree& c) {
  Rat acc = 1;
  const int s = static_cast<int>(a.c.size());
  for (int i = 0; i < s; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < s; ++j) {
      if (c.c[j] == 0) continue;
      acc *= rat_pow(b.q(i, j),
                     static_cast<long long>(a.c[i]) * static_cast<long long>(c.c[j]));
    }
  }
  return acc;
}

}  // namespace rholie
