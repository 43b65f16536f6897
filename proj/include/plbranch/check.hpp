#pragma once

#include <string>
#include <string_view>

namespace plbranch {

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string_view to_string(CheckStatus s);

/// One named, gated assertion. For NotApplicable the detail names the
/// violated hypothesis.
struct Check {
  std::string name;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

inline Check make_check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

inline Check not_applicable(std::string name, std::string why) {
  return {std::move(name), CheckStatus::NotApplicable, std::move(why)};
}

}  // namespace plbranch
