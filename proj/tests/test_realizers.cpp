#include <doctest.h>

#include "extreal/realizers.hpp"

using namespace extreal;

namespace {
const Bounds kB{};
void dump(const VerifyReport& rep) {
  for (const auto& i : rep.instances) {
    INFO(rep.case_name << ": " << i.description << " -> " << tri_name(i.state.v));
    CHECK(i.ok());
  }
}
}  // namespace

TEST_CASE("id realizer case") {
  VerifyReport rep = verify_id_case(kB);
  REQUIRE(rep.instances.size() == 4);
  dump(rep);
}

TEST_CASE("o realizer case") {
  VerifyReport rep = verify_o_case(kB);
  REQUIRE(!rep.instances.empty());
  dump(rep);
  // the truncated instance is reported, never refuted
  CHECK(!rep.instances[0].state.refuted());
}

TEST_CASE("fun realizer case") {
  VerifyReport rep = verify_fun_case(kB);
  REQUIRE(rep.instances.size() == 3);
  dump(rep);
}

TEST_CASE("sum realizer case") {
  VerifyReport rep = verify_sum_case(kB);
  REQUIRE(rep.instances.size() == 2);
  dump(rep);
}

TEST_CASE("prod realizer case") {
  VerifyReport rep = verify_prod_case(kB);
  REQUIRE(rep.instances.size() == 2);
  dump(rep);
}

TEST_CASE("w realizer case") {
  VerifyReport rep = verify_w_case(kB);
  REQUIRE(rep.instances.size() == 2);
  dump(rep);
}

TEST_CASE("ac realizer case") {
  VerifyReport rep = verify_ac_case(kB);
  dump(rep);
}

TEST_CASE("rdc realizer case") {
  VerifyReport rep = verify_rdc_case(kB);
  dump(rep);
}
