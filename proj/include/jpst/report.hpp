#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "json.hpp"

namespace jpst {

struct Check {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> witnesses;

  void pass() { ++instances; }
  void fail(const std::string& witness);
  // Records one instance; returns ok unchanged.
  bool expect(bool ok, const std::string& witness);
  bool passed() const { return failures == 0; }
};

class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  Check& check(const std::string& name);
  const Check* find(const std::string& name) const;
  const std::deque<Check>& checks() const { return checks_; }
  const std::string& title() const { return title_; }
  bool passed() const;
  std::uint64_t instances() const;
  std::string first_failure() const;
  void merge(const Report& other, const std::string& prefix = {});

  nlohmann::json& data() { return data_; }
  const nlohmann::json& data() const { return data_; }
  nlohmann::json to_json() const;

 private:
  std::string title_;
  std::deque<Check> checks_;  // stable references
  nlohmann::json data_ = nlohmann::json::object();
};

}  // namespace jpst
