#include <sstream>

#include "coxom/verify.hpp"

namespace coxom::verify {

bool ScenarioReport::pass() const {
  if (contaminated) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

Check& ScenarioReport::add(std::string name, bool ok, std::string detail, json certificate) {
  checks.push_back({std::move(name), ok, std::move(detail), std::move(certificate)});
  return checks.back();
}

const Check* ScenarioReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

json ScenarioReport::to_json() const {
  json cs = json::array();
  for (const auto& c : checks) {
    json j{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    if (!c.certificate.is_null()) j["certificate"] = c.certificate;
    cs.push_back(std::move(j));
  }
  json out{{"scenario", scenario}, {"parameters", parameters}, {"pass", pass()}, {"contaminated", contaminated},
           {"checks", std::move(cs)}};
  if (!note.empty()) out["note"] = note;
  if (wall_time) out["wall_time_seconds"] = *wall_time;
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string ScenarioReport::csv(bool header) const {
  std::ostringstream os;
  if (header) os << "scenario,check,pass,detail\n";
  for (const auto& c : checks)
    os << csv_field(scenario) << ',' << csv_field(c.name) << ',' << (c.pass ? "true" : "false") << ','
       << csv_field(c.detail) << '\n';
  if (contaminated) os << csv_field(scenario) << ",contamination,false," << csv_field(note) << '\n';
  return os.str();
}

}  // namespace coxom::verify
