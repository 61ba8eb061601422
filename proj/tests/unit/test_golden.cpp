#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "qotto/config.hpp"
#include "qotto/sweep.hpp"

// Reference sweeps stored under tests/golden. Regenerate with
//   qotto sweep --config configs/figures.conf --section <name> --steps 4000
// after an intentional numerical change.

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void expect_close(const std::optional<double>& a, const std::optional<double>& b,
                  const char* what, std::size_t row) {
  ASSERT_EQ(a.has_value(), b.has_value()) << what << " row " << row;
  if (a) EXPECT_NEAR(*a, *b, 1e-10) << what << " row " << row;
}

class Golden : public ::testing::TestWithParam<const char*> {};

TEST_P(Golden, MatchesStoredSweep) {
  const std::string name = GetParam();
  const auto golden = qotto::parse_csv(slurp(std::string(QOTTO_GOLDEN_DIR) + "/" + name + ".csv"));
  ASSERT_FALSE(golden.empty());

  const auto file = qotto::load_config(QOTTO_CONFIG_DIR "/figures.conf");
  auto settings = qotto::section_settings(file, name);
  settings["steps"] = "4000";
  const auto spec = qotto::sweep_spec_from(settings, name);
  const auto fresh = qotto::run_sweep(spec);

  ASSERT_EQ(fresh.size(), golden.size());
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    const auto& a = fresh[i];
    const auto& b = golden[i];
    EXPECT_EQ(a.axis_value, b.axis_value);
    EXPECT_EQ(a.error, b.error);
    expect_close(a.xi, b.xi, "xi", i);
    expect_close(a.eta, b.eta, "eta", i);
    expect_close(a.work, b.work, "work", i);
    expect_close(a.delta_eta_vs_g0, b.delta_eta_vs_g0, "delta_eta", i);
    expect_close(a.c_exp, b.c_exp, "c_exp", i);
    expect_close(a.c_comp, b.c_comp, "c_comp", i);
  }
}

INSTANTIATE_TEST_SUITE_P(Figures, Golden,
                         ::testing::Values("fig2-g0.2", "fig3-tau100-g0.2", "fig4-g0.2"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s)
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           return s;
                         });

}  // namespace
