#include <doctest.h>

#include "vmdg/config.hpp"

using namespace vmdg;

TEST_CASE("empty config yields the documented defaults") {
  const RunConfig c = parse_config("");
  CHECK(c.scenario == "weibel-choice1");
  CHECK(c.n_x == 40);
  CHECK(c.n_v1 == 40);
  CHECK(c.n_v2 == 40);
  CHECK(c.degree == 2);
  CHECK(c.family == BasisFamily::PType);
  CHECK(c.flux == FluxKind::Upwind);
  CHECK(c.step.cfl == 0.19);
  CHECK(c.weibel.delta == 0.5);
  CHECK(c.weibel.k0 == 0.2);
}

TEST_CASE("comments and simple overrides") {
  const RunConfig c = parse_config(
      "# a comment\n"
      "flux = central\n"
      "mesh = 20   # all three counts\n"
      "degree = 1\n");
  CHECK(c.flux == FluxKind::Central);
  CHECK(c.n_x == 20);
  CHECK(c.n_v2 == 20);
  CHECK(c.degree == 1);
}

TEST_CASE("the paper's stable alternating pairing parses") {
  const RunConfig c = parse_config("cfl = 0.12\nflux = alternating\n");
  CHECK(c.flux == FluxKind::AlternatingEPlusBMinus);
  CHECK(c.step.cfl == 0.12);
}

TEST_CASE("scenario presets fill unspecified parameters") {
  const RunConfig c = parse_config("scenario = weibel-choice2\n");
  CHECK(c.weibel.delta == doctest::Approx(1.0 / 6.0));
  CHECK(c.weibel.v01 == 0.5);
  CHECK(c.weibel.v02 == 0.1);
  const RunConfig o = parse_config("scenario = weibel-choice2\nv01 = 0.7\n");
  CHECK(o.weibel.v01 == 0.7);
  CHECK(o.weibel.v02 == 0.1);
}

TEST_CASE("errors carry line numbers") {
  using doctest::Contains;
  CHECK_THROWS_WITH_AS(parse_config("nx = 20\nbogus_key = 3\n"),
                       Contains("line 2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config("nx = twenty\n"), Contains("line 1"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config("scenario = weibel-choice9\n"),
                       Contains("unknown scenario"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config("nx 20\n"), Contains("key = value"),
                       std::invalid_argument);
}

TEST_CASE("serialize/parse round trip is lossless") {
  RunConfig c;
  c.scenario = "weibel-choice2";
  c.weibel = weibel_choice2();
  c.weibel.b = 0.002;
  c.n_x = 24;
  c.n_v1 = 16;
  c.n_v2 = 32;
  c.degree = 3;
  c.family = BasisFamily::QType;
  c.flux = FluxKind::AlternatingEPlusBMinus;
  c.step.cfl = 0.12;
  c.step.fixed_dt = 0.00125;
  c.t_end = 7.5;
  c.diag_every = 4;
  c.snapshot_times = {1.0, 2.5};
  c.slice_x = {0.05 * 3.141592653589793};
  c.slice_res = 100;
  c.output_dir = "elsewhere";
  c.threads = 2;
  const RunConfig r = parse_config(serialize_config(c));
  CHECK(serialize_config(r) == serialize_config(c));
  CHECK(r.weibel.b == c.weibel.b);
  CHECK(r.step.fixed_dt.has_value());
  CHECK(*r.step.fixed_dt == *c.step.fixed_dt);
  CHECK(r.snapshot_times == c.snapshot_times);
  CHECK(r.family == BasisFamily::QType);
}
