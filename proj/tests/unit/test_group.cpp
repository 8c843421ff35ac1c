#include <gtest/gtest.h>

#include "rankone/error.hpp"
#include "rankone/group.hpp"

using namespace rankone;

TEST(Group, FamiliesAndRho) {
  const auto so = parse_group("so:3");
  EXPECT_EQ(so.n1(), 2);
  EXPECT_EQ(so.n2(), 0);
  EXPECT_EQ(so.rho(), 1.0);
  EXPECT_EQ(so.rho_prime(), 1.0);
  EXPECT_FALSE(so.rho_prime_assumed());
  const auto su = parse_group("su:3");
  EXPECT_EQ(su.n1(), 4);
  EXPECT_EQ(su.n2(), 1);
  EXPECT_EQ(su.rho(), 3.0);
  const auto sp = parse_group("sp:2");
  EXPECT_EQ(sp.n1(), 4);
  EXPECT_EQ(sp.n2(), 3);
  const auto f4 = parse_group("f4");
  EXPECT_EQ(f4.n1(), 8);
  EXPECT_EQ(f4.n2(), 7);
  EXPECT_EQ(f4.rho(), 11.0);
  const auto custom = parse_group("custom:5,2");
  EXPECT_EQ(custom.alpha(), 3.0);
  EXPECT_EQ(custom.beta(), 0.5);
}

TEST(Group, RhoPrime) {
  EXPECT_EQ(parse_group("su:2", 0.5).rho_prime(), 0.5);
  EXPECT_THROW(parse_group("su:2", 5.0), ValidationError);
  EXPECT_EQ(make_group(GroupFamily::su, 2).with_rho_prime(1.0).rho_prime(), 1.0);
}

TEST(Group, ParseErrors) {
  for (const char* bad : {"", "so", "so:1", "so:x", "xx:3", "f4:2", "custom:3", "custom:0,1", "su:2junk"}) {
    EXPECT_THROW(parse_group(bad), ValidationError) << bad;
  }
}

TEST(SpectralParam, ParseAndValidate) {
  const auto g = make_group(GroupFamily::so, 3);
  EXPECT_EQ(parse_param("trivial"), SpectralParam::trivial());
  EXPECT_EQ(parse_param("c:0.5"), SpectralParam::complementary(0.5));
  EXPECT_EQ(parse_param("p:2"), SpectralParam::principal(2.0));
  EXPECT_EQ(parse_param("p:2").s(g), std::complex<double>(0.0, 2.0));
  EXPECT_EQ(SpectralParam::trivial().re_s(g), 1.0);
  EXPECT_EQ(parse_param(SpectralParam::complementary(0.25).to_string()), SpectralParam::complementary(0.25));
  EXPECT_THROW(parse_param("c:-1"), ValidationError);
  EXPECT_THROW(parse_param("q:1"), ValidationError);
  EXPECT_THROW(SpectralParam::complementary(1.2).validate(g), ValidationError);
  EXPECT_NO_THROW(SpectralParam::complementary(1.0).validate(g));
}
