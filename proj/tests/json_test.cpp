#include <bivar/json_io.hpp>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace bivar {
namespace {

const Poly x1 = Poly::x1();
const Poly x2 = Poly::x2();

TEST(Json, Scalars) {
  EXPECT_EQ(to_json(Scalar(3, 6)), Json("1/2"));
  EXPECT_EQ(to_json(Scalar(-4)), Json("-4"));
  EXPECT_EQ(scalar_from_json(Json("6/4")), Scalar(3, 2));
  EXPECT_EQ(scalar_from_json(Json(7)), 7);
  EXPECT_THROW(scalar_from_json(Json("1/0")), InputError);
  EXPECT_THROW(scalar_from_json(Json("0.5")), InputError);
  EXPECT_THROW(scalar_from_json(Json(0.5)), InputError);
}

TEST(Json, NodeSetFormat) {
  NodeSet y({{0, 0}, {Scalar(1, 2), Scalar(1, 3)}});
  Json j = to_json(y);
  EXPECT_EQ(j.dump(), R"({"nodes":[["0","0"],["1/2","1/3"]]})");
  EXPECT_EQ(nodeset_from_json(j).points(), y.points());
  EXPECT_THROW(nodeset_from_json(parse_json_text(R"({"points":[]})")), InputError);
  EXPECT_THROW(nodeset_from_json(parse_json_text(R"({"nodes":[["1"]]})")), InputError);
  EXPECT_THROW(nodeset_from_json(parse_json_text(R"({"nodes":[["1","1"],["1","1"]]})")), DomainError);
}

TEST(Json, PolynomialTermsInCanonicalOrder) {
  Poly p = x1 * x1 * Scalar(1, 2) - x2 * x1 + 3;
  EXPECT_EQ(to_json(p).dump(),
            R"([{"e1":0,"e2":0,"coeff":"3"},{"e1":2,"e2":0,"coeff":"1/2"},{"e1":1,"e2":1,"coeff":"-1"}])");
  EXPECT_EQ(poly_from_json(to_json(p)), p);
  EXPECT_THROW(poly_from_json(parse_json_text(R"([{"e1":-1,"e2":0,"coeff":"1"}])")), InputError);
}

TEST(Json, ErrorPathsNameTheField) {
  try {
    br_steps_from_json(parse_json_text(R"({"steps":[{"line":["0","1","0"],"points":[["0","x"]]}]})"));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("$.steps[0].points[0][1]"), std::string::npos);
  }
  EXPECT_THROW(parse_json_text("{nodes: }"), InputError);
}

TEST(Json, RoundTrips) {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Poly p = testing::random_poly(rng, 4);
    EXPECT_EQ(poly_from_json(parse_json_text(to_json(p).dump())), p);
  }
  HBasis h{1, {x1 * x1 - x1, x1 * x2, x2 * x2 - x2}, HBasisOrigin::ErrorMonomials};
  auto h2 = hbasis_from_json(parse_json_text(to_json(h).dump()));
  EXPECT_EQ(h2.elements, h.elements);
  EXPECT_EQ(h2.origin, h.origin);
  auto s = syzygy_matrix(h);
  EXPECT_EQ(syzygy_from_json(parse_json_text(to_json(s).dump())), s);

  auto spec = random_natural_lattice(rng, 3, true);
  auto back = natural_spec_from_json(parse_json_text(to_json(spec).dump()));
  EXPECT_EQ(back.lines, spec.lines);
  EXPECT_EQ(back.extension, spec.extension);
  auto gpl = random_gpl(rng, 2);
  EXPECT_EQ(gpl_spec_from_json(to_json(gpl)).pencils, gpl.pencils);

  auto chain = random_br_chain(rng, 3);
  auto again = br_chain(br_steps_from_json(br_steps_to_json(chain.steps)));
  EXPECT_EQ(again.result.polys, chain.result.polys);
}

TEST(Json, SweepReport) {
  auto r = gasca_maeztu_sweep(2, 3, 1);
  Json j = to_json(r);
  EXPECT_EQ(j["violations"].size(), 0u);
  EXPECT_EQ(j["degrees"][1]["trials"], 3);
  EXPECT_EQ(j.dump(), to_json(gasca_maeztu_sweep(2, 3, 1, 3)).dump());
}

}  // namespace
}  // namespace bivar
