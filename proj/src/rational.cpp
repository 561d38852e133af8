#include "rholie/rational.hpp"

#include "rholie/types.hpp"

#include <cctype>
#include <sstream>

namespace rholie {

std::optional<Rat> rat_from_string(const std::string& s) {
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char ch : t)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string num = s, den;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!digits(den)) return std::nullopt;
  }
  std::string mag = num;
  if (!mag.empty() && mag[0] == '-') mag = mag.substr(1);
  if (!digits(mag)) return std::nullopt;

  mpz_class n(num, 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(den, 10);
  if (d == 0) return std::nullopt;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat rat_pow(const Rat& r, long long e) {
  bool invert = e < 0;
  unsigned long long n = invert ? -(unsigned long long)e : (unsigned long long)e;
  Rat base = r, acc = 1;
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  if (invert) acc = Rat(1) / acc;
  return acc;
}

std::string format_vec(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << rat_to_string(v[i]);
  }
  os << ')';
  return os.str();
}

std::string format_mat(const Mat& m) {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r) os << "; ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << rat_to_string(m(r, c));
    }
  }
  os << ']';
  return os.str();
}

std::string format_tuple(const std::vector<int>& t) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << ", ";
    os << t[i];
  }
  os << ')';
  return os.str();
}

}  // namespace rholie
