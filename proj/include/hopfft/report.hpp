#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hopfft {

// One verified equation or property. `deviation` is the largest entrywise
// distance between the two sides under the numeric embedding; exact rings
// report 0 on success and the true mismatch magnitude on failure.
struct CheckLine {
  std::string name;
  bool passed = false;
  double deviation = 0.0;
  std::string detail;
};

struct CheckReport {
  std::string subject;
  std::vector<CheckLine> lines;

  bool all_passed() const;
  double max_deviation() const;
  CheckLine& add(std::string name, bool passed, double deviation = 0.0,
                 std::string detail = "");
  void merge(const CheckReport& other, const std::string& prefix = "");
  const CheckLine* find(const std::string& name) const;

  std::string to_text() const;
  nlohmann::json to_json() const;
};

}  // namespace hopfft
