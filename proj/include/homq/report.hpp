#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace homq {

using json = nlohmann::ordered_json;

enum class Status { pass, fail, skipped };

std::string status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::pass;
  std::optional<json> witness;  // first counterexample, when failing
  int degree = 0;
  double wall_time = 0.0;  // seconds
  long cases = 0;          // number of tuples examined
  std::string note;
};

struct Report {
  std::vector<Check> checks;

  bool passed() const;  // no check failed
  const Check* find(const std::string& name) const;
  Status status(const std::string& name) const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void merge(const Report& other, const std::string& prefix = "");
  // order by name, then witness text
  void sort();
  json to_json(bool timings = false) const;
};

// Accumulates a single check; stops recording witnesses after the first.
class CheckBuilder {
 public:
  CheckBuilder(std::string name, int degree)
      : start_(std::chrono::steady_clock::now()) {
    check_.name = std::move(name);
    check_.degree = degree;
  }

  void count(long n = 1) { check_.cases += n; }
  void fail(json witness) {
    if (check_.status != Status::fail) {
      check_.status = Status::fail;
      check_.witness = std::move(witness);
    }
  }
  bool failed() const { return check_.status == Status::fail; }
  void skip(std::string why) {
    check_.status = Status::skipped;
    check_.note = std::move(why);
  }
  void note(std::string n) { check_.note = std::move(n); }

  Check finish() {
    check_.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return check_;
  }

 private:
  Check check_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace homq
