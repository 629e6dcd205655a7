#pragma once

#include <functional>
#include <string>
#include <vector>

namespace meander {

struct VerifyOptions {
  bool slow = false;  // AMK(13), AMK(15), AML(14), AML(16)
  int jobs = 1;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;  // one line per check
  double seconds = 0;
};

constexpr int kCriteria = 10;
CriterionResult run_criterion(int id, const VerifyOptions& opt);
std::vector<CriterionResult> verify_all(const VerifyOptions& opt,
                                        const std::function<void(const CriterionResult&)>& on_done = {});

}  // namespace meander
