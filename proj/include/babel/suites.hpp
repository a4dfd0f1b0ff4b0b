#pragma once

// Seeded property suites. Each sample draws from its own stream derived from
// (seed, property, index), so reports do not depend on the shard count.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "babel/hlf.hpp"
#include "babel/rootsystem.hpp"
#include "babel/serialize.hpp"

namespace babel {

struct SuiteConfig {
  uint64_t seed = 1;
  int samples = 0;  // 0 uses each property's default count
  uint32_t q = 5;
  Precision precision{};
  RootType phi = RootType::A1;  // used by suites that take a single datum
  int n = 2;
  int threads = 1;
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  int checked = 0;
  int failed = 0;
  std::vector<Json> counterexamples;  // the first few, in sample order
  Json witness;                       // constructive evidence, when the property has one
  std::string note;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<PropertyResult> properties;
  bool ok() const;
};

Json to_json(const SuiteConfig& c);
Json to_json(const PropertyResult& r);
Json to_json(const SuiteReport& r);

const std::vector<std::string>& suite_names();
// Throws Error(UnknownSuite).
SuiteReport suite_run(const SuiteConfig& config, const std::string& name);

// Runs sample(i) for i in [0, count) on `threads` workers at the caller's working
// precision. A returned payload is a counterexample; an Error escaping a sample is
// recorded as one too.
PropertyResult run_property(const std::string& name, int count, int threads,
                            const std::function<std::optional<Json>(int)>& sample);

}  // namespace babel
