#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sk {

// Domain error: `stage` is the operation that failed, `kind` a stable tag.
class Error : public std::runtime_error {
 public:
  Error(std::string stage, std::string kind, const std::string& detail)
      : std::runtime_error(detail), stage_(std::move(stage)), kind_(std::move(kind)) {}
  const std::string& stage() const { return stage_; }
  const std::string& kind() const { return kind_; }

 private:
  std::string stage_, kind_;
};

// Carries a vertex subset violating the flow feasibility condition.
class NoSolution : public Error {
 public:
  NoSolution(std::string stage, const std::string& detail, std::vector<int> subset)
      : Error(std::move(stage), "NoSolution", detail), subset(std::move(subset)) {}
  std::vector<int> subset;
};

// Carries a cycle (dart list) shorter than d plus the flow certificate.
class GirthTooSmall : public Error {
 public:
  GirthTooSmall(std::string stage, const std::string& detail, std::vector<int> cycle,
                std::vector<int> subset)
      : Error(std::move(stage), "GirthTooSmall", detail),
        cycle(std::move(cycle)), subset(std::move(subset)) {}
  std::vector<int> cycle, subset;
};

}  // namespace sk
