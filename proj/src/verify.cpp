#include "miscube/verify.hpp"

#include <stdexcept>

namespace miscube {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core",       "peeling",      "labeling",
                                              "projection", "isoperimetry", "containers"};
  return names;
}

std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opts) {
  using Fn = SuiteReport (*)(const VerifyOptions&);
  static const Fn fns[] = {verify_core,       verify_peeling,      verify_labeling,
                           verify_projection, verify_isoperimetry, verify_containers};
  std::vector<SuiteReport> out;
  if (name == "all") {
    for (Fn fn : fns) out.push_back(fn(opts));
    return out;
  }
  const auto& names = suite_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) {
      out.push_back(fns[i](opts));
      return out;
    }
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace miscube
