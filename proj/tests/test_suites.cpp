#include <gtest/gtest.h>

#include <map>

#include "duo/suites.hpp"

using namespace duo;

namespace {

struct SuiteCase {
  std::string suite;
  Preset preset;
};

std::string case_name(const testing::TestParamInfo<SuiteCase>& info) {
  static const std::map<std::string, std::string> labels = {{"coherence", "foundation"},
                                                            {"lemma45", "phi_psi"},
                                                            {"lemma46", "theta"},
                                                            {"figure1", "antipode_pasting"},
                                                            {"transform", "transform"}};
  std::string s = labels.at(info.param.suite) + "_" + preset_name(info.param.preset);
  for (auto& c : s)
    if (c == '-') c = '_';
  return s;
}

std::vector<SuiteCase> all_cases() {
  std::vector<SuiteCase> out;
  for (const auto& s : suite_names())
    for (Preset p : {Preset::SpanDiagonal, Preset::Commutative, Preset::Weak}) out.push_back({s, p});
  return out;
}

}  // namespace

class Suites : public testing::TestWithParam<SuiteCase> {};

TEST_P(Suites, PassOnSeededInstances) {
  const auto& c = GetParam();
  SuiteResult r = c.preset == Preset::SpanDiagonal ? run_suite<SpanBackend>(c.suite, c.preset, 6, 1)
                                                   : run_suite<GVecBackend>(c.suite, c.preset, 6, 1);
  EXPECT_GT(r.instances, 0u);
  EXPECT_GT(r.checks, 0u);
  for (const auto& f : r.failures) ADD_FAILURE() << f;
}

INSTANTIATE_TEST_SUITE_P(AllBackends, Suites, testing::ValuesIn(all_cases()), case_name);

TEST(SuitesMeta, UnknownSuiteIsRejected) {
  EXPECT_THROW(run_suite<SpanBackend>("nope", Preset::SpanDiagonal, 1, 0), ValidationError);
}
