#pragma once

// Validation reports: a list of failed checks, each with a witness tuple.

#include <string>
#include <vector>

namespace gxcat {

struct Failure {
  std::string check;
  std::string detail;
  std::vector<std::string> witness;
};

struct Report {
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  void add(std::string check, std::string detail, std::vector<std::string> witness = {}) {
    failures.push_back({std::move(check), std::move(detail), std::move(witness)});
  }
  void merge(const Report& other) { failures.insert(failures.end(), other.failures.begin(), other.failures.end()); }
  bool has(const std::string& check) const {
    for (const auto& f : failures)
      if (f.check == check) return true;
    return false;
  }
};

}  // namespace gxcat
