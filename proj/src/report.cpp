#include "jpst/report.hpp"

namespace jpst {

namespace {
constexpr std::size_t kMaxWitnesses = 8;
}

void Check::fail(const std::string& witness) {
  ++instances;
  ++failures;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness);
}

bool Check::expect(bool ok, const std::string& witness) {
  if (ok)
    pass();
  else
    fail(witness);
  return ok;
}

Check& Report::check(const std::string& name) {
  for (auto& c : checks_)
    if (c.name == name) return c;
  Check c;
  c.name = name;
  checks_.push_back(std::move(c));
  return checks_.back();
}

const Check* Report::find(const std::string& name) const {
  for (auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::passed() const {
  for (auto& c : checks_)
    if (!c.passed()) return false;
  return true;
}

std::uint64_t Report::instances() const {
  std::uint64_t n = 0;
  for (auto& c : checks_) n += c.instances;
  return n;
}

std::string Report::first_failure() const {
  for (auto& c : checks_)
    if (!c.passed())
      return c.name + (c.witnesses.empty() ? std::string() : ": " + c.witnesses.front());
  return {};
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto& c : other.checks_) {
    Check& mine = check(prefix + c.name);
    mine.instances += c.instances;
    mine.failures += c.failures;
    for (auto& w : c.witnesses)
      if (mine.witnesses.size() < kMaxWitnesses) mine.witnesses.push_back(w);
  }
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["title"] = title_;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (auto& c : checks_) {
    j["checks"].push_back({{"name", c.name},
                           {"instances", c.instances},
                           {"failures", c.failures},
                           {"witnesses", c.witnesses}});
  }
  if (!data_.empty()) j["data"] = data_;
  return j;
}

}  // namespace jpst
