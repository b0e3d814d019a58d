#include <gtest/gtest.h>

#include "liechains/report.hpp"

using namespace liechains;

namespace {

struct PipelineCase {
  int p, q;
};

void PrintTo(const PipelineCase& c, std::ostream* os) { *os << "(" << c.p << "," << c.q << ")"; }

class Pipeline : public ::testing::TestWithParam<PipelineCase> {
 protected:
  Signature sig() const { return Signature(GetParam().p, GetParam().q); }
};

}  // namespace

// Psi from the pair, then normality and curvature type, then S from Psi,
// then the cone from S: every stage feeds the next.
TEST_P(Pipeline, FromPairToCone) {
  const Signature s = sig();
  const ExtensionPair pair(s);

  const Cochain2 phi = psi_cochain(pair);
  EXPECT_TRUE(is_normal(phi));
  const CurvatureReport curv = curvature_report(phi);
  EXPECT_TRUE(curv.nonzero && curv.torsion_free && curv.regular);
  EXPECT_EQ(curv.homogeneities, std::set<int>{3});

  Sampler rng(100 + static_cast<std::uint64_t>(s.p * 10 + s.q));
  const STensorEval ev(s);
  for (int t = 0; t < 20; ++t) {
    const MatR x = rng.matrix(s.n(), 2), y = rng.matrix(s.n(), 2), z = rng.matrix(s.n(), 2);
    ASSERT_EQ(s_tensor(ev, x, y, z), s_tensor_pipeline(pair, x, y, z) * Rat(2));
  }
  const ConeReport cone = reconstruct_cone(ev, mixed_samples(s, 100, rng));
  EXPECT_EQ(cone.misclassified, 0u);
}

TEST_P(Pipeline, ChainsThroughRandomPoints) {
  const Signature s = sig();
  Sampler rng(200);
  for (int k = 0; k < 5; ++k) {
    const MatR g = rng.group_element(s);
    const auto rows = emit_trajectory(s, g, -2, 2, 9);
    ASSERT_EQ(rows.size(), 9u);
    const ModelPoint start = act(g, origin(s));
    EXPECT_EQ(chain_eval(s, g, 0), start);
    EXPECT_TRUE(is_transverse(velocity_class(s, g, SoElement::e(s), 1)));
  }
}

TEST_P(Pipeline, FullReportPasses) {
  SuiteConfig cfg;
  cfg.sig = sig();
  cfg.seed = 3;
  cfg.trials = 10;
  const Report r = run(cfg);
  ASSERT_EQ(r.suites.size(), kSuiteNames.size());
  for (const auto& suite : r.suites)
    for (const auto& c : suite.checks) EXPECT_TRUE(c.pass) << suite.suite << "/" << c.name << ": " << c.witness;
}

INSTANTIATE_TEST_SUITE_P(Signatures, Pipeline,
                         ::testing::Values(PipelineCase{2, 1}, PipelineCase{3, 0}, PipelineCase{2, 2}, PipelineCase{1, 2},
                                           PipelineCase{3, 1}),
                         [](const auto& info) {
                           return "p" + std::to_string(info.param.p) + "q" + std::to_string(info.param.q);
                         });

TEST(PipelineSeeds, ReportPassesAcrossSeeds) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    SuiteConfig cfg;
    cfg.sig = Signature(2, 1);
    cfg.seed = seed;
    cfg.trials = 10;
    EXPECT_TRUE(run(cfg).all_pass()) << "seed " << seed;
  }
}
