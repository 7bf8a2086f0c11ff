#include <fstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "descpoly/descent.hpp"
#include "descpoly/eulerian.hpp"

using namespace descpoly;

namespace {

nlohmann::json load(const std::string& name) {
  std::ifstream in(std::string(DESCPOLY_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  return nlohmann::json::parse(in);
}

std::vector<std::string> decimal(const IntPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

}  // namespace

TEST(Golden, PTable) {
  auto doc = load("pk_table.json");
  ASSERT_EQ(doc["rows"].size(), 9u);
  for (const auto& row : doc["rows"]) {
    auto k = row["k"].get<std::size_t>();
    EXPECT_EQ(decimal(p_poly(k).poly), row["coefficients"].get<std::vector<std::string>>()) << "k=" << k;
    if (k >= 1) {
      EXPECT_EQ(decimal(p_poly_via_stretch(k).poly), row["coefficients"].get<std::vector<std::string>>());
      EXPECT_EQ(decimal(p_poly_via_duplication(k).poly), row["coefficients"].get<std::vector<std::string>>());
    }
  }
}

TEST(Golden, PPTable) {
  auto doc = load("pp_table.json");
  ASSERT_EQ(doc["rows"].size(), 9u);
  for (const auto& row : doc["rows"]) {
    auto k = row["k"].get<std::size_t>();
    auto expected = row["coefficients"].get<std::vector<std::string>>();
    EXPECT_EQ(decimal(pp_poly_formula(k)), expected) << "k=" << k;
    EXPECT_EQ(decimal(stretch(p_poly(k))), expected) << "k=" << k;
  }
}

TEST(Golden, AbIdentityCorner) {
  auto doc = load("ab_identity_corner.json");
  auto residual = ab_identity_residual(doc["a"].get<long>(), doc["b"].get<long>());
  EXPECT_EQ(decimal(residual), doc["residual"].get<std::vector<std::string>>());
}
