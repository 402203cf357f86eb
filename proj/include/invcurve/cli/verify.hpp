#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invcurve/groups/groups.hpp"
#include "invcurve/ideals/ideals.hpp"
#include "invcurve/invariants/invariants.hpp"

namespace invcurve::cli {

enum class Status { Pass, Fail, Inconclusive };
const char* status_name(Status s);

struct CheckOutcome {
  std::string name;
  Status status = Status::Inconclusive;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  std::uint64_t budget = ideals::kDefaultBudget;
  bool deep = false;
  unsigned threads = 1;
};

// Check families: degrees, invariance, zero-locus, nonsingular, transversal,
// x-squared, jacobian, wiman-sextic.
std::vector<std::string> default_checks(groups::GroupId g, inv::Coords c);
bool known_check(const std::string& name);

// Runs the requested families; each family may expand to several outcomes
// (nonsingular gives one per invariant). Order of the result follows the request.
std::vector<CheckOutcome> verify(groups::GroupId g, inv::Coords c, const std::vector<std::string>& checks,
                                 const VerifyOptions& options);

}  // namespace invcurve::cli
