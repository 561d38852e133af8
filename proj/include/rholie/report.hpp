#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rholie {

enum class Status { pass, fail, error };

/// Location of the first failing instance of a check: the basis tuple it was
/// evaluated on plus both sides of the violated identity, formatted exactly.
struct Witness {
  std::vector<int> tuple;
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct CheckReport {
  std::string check;     // machine name of the check, e.g. "fundamental-identity"
  Status status = Status::pass;
  std::string identity;  // label of the identity or law being verified
  std::optional<Witness> witness;
  std::string detail;

  bool pass() const { return status == Status::pass; }
};

inline CheckReport pass_report(std::string check, std::string identity,
                               std::string detail = "") {
  return CheckReport{std::move(check), Status::pass, std::move(identity),
                     std::nullopt, std::move(detail)};
}

inline CheckReport fail_report(std::string check, std::string identity,
                               Witness w, std::string detail = "") {
  return CheckReport{std::move(check), Status::fail, std::move(identity),
                     std::move(w), std::move(detail)};
}

inline CheckReport error_report(std::string check, std::string identity,
                                std::string detail) {
  return CheckReport{std::move(check), Status::error, std::move(identity),
                     std::nullopt, std::move(detail)};
}

std::string status_to_string(Status s);

}  // namespace rholie
