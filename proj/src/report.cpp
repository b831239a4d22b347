#include "homq/report.hpp"

#include <algorithm>

namespace homq {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "unknown";
}

bool Report::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == Status::fail; });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Status Report::status(const std::string& name) const {
  const Check* c = find(name);
  if (!c) throw std::out_of_range("no check named " + name);
  return c->status;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto c : other.checks) {
    if (!prefix.empty()) c.name = prefix + "/" + c.name;
    checks.push_back(std::move(c));
  }
}

void Report::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) {
    if (a.name != b.name) return a.name < b.name;
    std::string wa = a.witness ? a.witness->dump() : "";
    std::string wb = b.witness ? b.witness->dump() : "";
    return wa < wb;
  });
}

json Report::to_json(bool timings) const {
  json out = json::object();
  out["status"] = passed() ? "pass" : "fail";
  json arr = json::array();
  for (const auto& c : checks) {
    json j = json::object();
    j["name"] = c.name;
    j["status"] = status_name(c.status);
    j["witness"] = c.witness ? *c.witness : json(nullptr);
    j["degree"] = c.degree;
    j["cases"] = c.cases;
    if (!c.note.empty()) j["note"] = c.note;
    if (timings) j["wall_time"] = c.wall_time;
    arr.push_back(std::move(j));
  }
  out["checks"] = std::move(arr);
  return out;
}

}  // namespace homq
