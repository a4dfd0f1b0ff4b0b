#include <gtest/gtest.h>

#include "babel/suites.hpp"

using namespace babel;

namespace {

SuiteConfig config(uint64_t seed, int samples, int threads) {
  SuiteConfig c;
  c.seed = seed;
  c.samples = samples;
  c.threads = threads;
  return c;
}

}  // namespace

TEST(Suites, SameConfigSameReport) {
  for (const char* name : {"metric", "sigma", "retraction", "residue"}) {
    Json a = to_json(suite_run(config(3, 40, 1), name));
    Json b = to_json(suite_run(config(3, 40, 1), name));
    EXPECT_EQ(a, b) << name;
  }
}

TEST(Suites, ThreadCountDoesNotChangeReport) {
  for (const char* name : {"parallelogram", "bruhat", "cellprod"}) {
    SuiteReport a = suite_run(config(5, 30, 1), name);
    SuiteReport b = suite_run(config(5, 30, 4), name);
    ASSERT_EQ(a.properties.size(), b.properties.size());
    for (size_t i = 0; i < a.properties.size(); ++i)
      EXPECT_EQ(to_json(a.properties[i]), to_json(b.properties[i])) << name << " " << a.properties[i].name;
  }
}

TEST(Suites, SeedChangesSamples) {
  Json a = to_json(suite_run(config(1, 20, 1), "cellprod"));
  Json b = to_json(suite_run(config(2, 20, 1), "cellprod"));
  EXPECT_NE(a, b);
}

TEST(Suites, UnknownSuite) {
  try {
    suite_run(SuiteConfig{}, "nonexistent");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownSuite);
  }
}

TEST(Suites, RunPropertyRecordsFailuresInOrder) {
  PropertyResult r = run_property("odd", 50, 4, [](int i) -> std::optional<Json> {
    if (i % 2) return Json{{"i", i}};
    if (i == 10) throw Error(Errc::PrecisionExhausted, "x");
    return std::nullopt;
  });
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.checked, 50);
  EXPECT_EQ(r.failed, 26);
  ASSERT_EQ(r.counterexamples.size(), 5u);
  EXPECT_EQ(r.counterexamples[0]["i"], 1);
  EXPECT_EQ(r.counterexamples[4]["i"], 9);
  EXPECT_EQ(r.counterexamples[4].value("error", ""), "");
}

TEST(Suites, FastSuitesPass) {
  for (const char* name : {"presentation", "metric", "sigma", "retraction", "residue", "enclosure",
                           "circumcenter", "fixer"}) {
    SuiteReport r = suite_run(config(9, 30, 2), name);
    EXPECT_TRUE(r.ok()) << to_json(r).dump(2);
  }
}
