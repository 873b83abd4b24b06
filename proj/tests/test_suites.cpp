#include "doctest.h"

#include "gpw/constructions.hpp"
#include "gpw/error.hpp"
#include "gpw/io.hpp"
#include "gpw/suites.hpp"

using namespace gpw;

TEST_CASE("unknown suites are usage errors") {
  CHECK_THROWS_AS(run_suite("no-such-suite"), UsageError);
  CHECK(suite_names().size() == 9);
}

TEST_CASE("reports are sorted and json output is deterministic") {
  auto a = run_suite("radical");
  auto b = run_suite("radical");
  REQUIRE_FALSE(a.empty());
  for (std::size_t i = 1; i < a.size(); ++i)
    CHECK(a[i - 1].id < a[i].id);
  CHECK(report_json("radical", a, false).dump() ==
        report_json("radical", b, false).dump());
  auto j = report_json("radical", a, false);
  CHECK(j["suite"] == "radical");
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["claims"].size() == a.size());
  CHECK_FALSE(j["claims"][0].contains("runtime_ms"));
  CHECK(report_json("radical", a, true)["claims"][0].contains("runtime_ms"));
  CHECK_FALSE(has_failures(a));
}

TEST_CASE("a failing verdict replays through its reproducer") {
  auto Qh = quaternions();
  Qh.set_name("quaternion");
  auto g = parse_polynomial("[x1@(0,1),x2@(1,0)]", Qh.group());
  auto v = is_graded_identity(Qh, g);
  REQUIRE_FALSE(v.holds);
  auto r = make_reproducer(Qh, g, v);
  CHECK(r.algebra == "quaternion");
  auto A = resolve_algebra(r.algebra);
  auto replay = is_graded_identity(A, parse_polynomial(r.polynomial, A.group()));
  CHECK_FALSE(replay.holds);
  CHECK(describe(A, *replay.witness) == r.witness);
}

TEST_CASE("text report marks failures with a reproduce line") {
  ClaimReport ok{"a/ok", ClaimStatus::pass, "fine", 0, std::nullopt};
  ClaimReport bad{"a/bad", ClaimStatus::fail, "broken", 0,
                  Reproducer{"pauli-m2", "", "x1@(1,0) x1@(1,0)", false, "w"}};
  auto text = report_text({bad, ok}, false);
  CHECK(text.find("FAIL  a/bad") != std::string::npos);
  CHECK(text.find("PASS  a/ok") != std::string::npos);
  CHECK(text.find("gpw check pauli-m2") != std::string::npos);
  CHECK(has_failures({bad, ok}));
  CHECK(to_string(ClaimStatus::out_of_scope) == "out-of-scope");
}
