#pragma once

#include <string>
#include <vector>

#include "klazar/json_io.hpp"

namespace klazar {

struct VerificationReport {
  std::string check;
  int min_n = 1;
  int max_n = 0;
  bool passed = true;
  Json counterexample;             // null unless failed
  std::vector<std::string> notes;  // known misprints and similar remarks
  double elapsed_ms = 0;

  Json to_json() const;
  std::string to_text() const;
};

struct CheckInfo {
  std::string name;
  int default_max_n;
  int guard_max_n;  // larger sizes need --force
  std::string summary;
};

const std::vector<CheckInfo>& verification_checks();
const CheckInfo& check_info(const std::string& name);

/// Runs the named property for every size up to max_n. Throws
/// std::invalid_argument for an unknown name.
VerificationReport run_check(const std::string& name, int max_n);

}  // namespace klazar
