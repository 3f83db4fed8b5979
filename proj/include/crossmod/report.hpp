#pragma once

// Human-readable summaries of constructed objects: orders, axiom status,
// strategy and enumeration statistics, one "key: value" line each.

#include <string>
#include <utility>
#include <vector>

#include "crossmod/induced.hpp"

namespace crossmod {

class Report {
 public:
  void add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, long long value) { add(std::move(key), std::to_string(value)); }
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

std::string describe_group(const Group& g);
std::string pass_fail(bool ok);

void describe(Report& r, const std::string& prefix, const PreCrossedModule& x);
void describe(Report& r, const std::string& prefix, const TwoCrossedModule& x);
void describe(Report& r, const EnumerationSummary& s);

}  // namespace crossmod
