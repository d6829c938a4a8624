#include "coprod/report.hpp"

namespace coprod {

void CheckReport::record_failure(std::string what, Json witness) {
  ++trials;
  failures.push_back({std::move(what), std::move(witness)});
}

void CheckReport::absorb(const CheckReport& other) {
  trials += other.trials;
  passed += other.passed;
  not_applicable += other.not_applicable;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

Json CheckReport::to_json(std::size_t max_failures) const {
  Json out;
  out["name"] = name;
  out["pass"] = ok();
  out["trials"] = trials;
  out["passed"] = passed;
  out["not_applicable"] = not_applicable;
  out["failure_count"] = failures.size();
  Json list = Json::array();
  for (const auto& f : failures) {
    if (list.size() == max_failures) break;
    list.push_back(Json{{"what", f.what}, {"witness", f.witness}});
  }
  out["failures"] = std::move(list);
  return out;
}

}  // namespace coprod
