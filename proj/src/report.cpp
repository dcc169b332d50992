#include "hopfft/report.hpp"

#include <algorithm>
#include <sstream>

namespace hopfft {

bool CheckReport::all_passed() const {
  return std::all_of(lines.begin(), lines.end(),
                     [](const CheckLine& l) { return l.passed; });
}

double CheckReport::max_deviation() const {
  double m = 0.0;
  for (const auto& l : lines) m = std::max(m, l.deviation);
  return m;
}

CheckLine& CheckReport::add(std::string name, bool passed, double deviation,
                            std::string detail) {
  lines.push_back(CheckLine{std::move(name), passed, deviation, std::move(detail)});
  return lines.back();
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& l : other.lines) {
    lines.push_back(l);
    if (!prefix.empty()) lines.back().name = prefix + l.name;
  }
}

const CheckLine* CheckReport::find(const std::string& name) const {
  for (const auto& l : lines)
    if (l.name == name) return &l;
  return nullptr;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  if (!subject.empty()) os << subject << "\n";
  for (const auto& l : lines) {
    os << "  [" << (l.passed ? "ok" : "FAIL") << "] " << l.name;
    if (l.deviation != 0.0) os << " (deviation " << l.deviation << ")";
    if (!l.detail.empty()) os << ": " << l.detail;
    os << "\n";
  }
  return os.str();
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& l : lines) {
    nlohmann::json entry;
    entry["name"] = l.name;
    entry["passed"] = l.passed;
    entry["deviation"] = l.deviation;
    if (!l.detail.empty()) entry["detail"] = l.detail;
    arr.push_back(entry);
  }
  nlohmann::json out;
  out["subject"] = subject;
  out["passed"] = all_passed();
  out["checks"] = arr;
  return out;
}

}  // namespace hopfft
