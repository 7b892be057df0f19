#include <doctest.h>

#include "oracles.hpp"

using namespace ellk3;

TEST_CASE("every embedded table verifies") {
  for (const GoldenTable& t : golden_tables()) {
    TableResult r = verify_table(t.id);
    for (const RowResult& row : r.rows) {
      if (row.status == RowResult::Status::Fail) {
        std::string all;
        for (const std::string& d : row.diffs) all += d + "; ";
        FAIL_CHECK(t.id << " / " << row.label << ": " << all);
      }
    }
    CHECK(r.pass());
    CHECK(r.checked() > 0);
  }
}

TEST_CASE("verification is deterministic") {
  Json a = to_json(verify_table("char5-family"));
  Json b = to_json(verify_table("char5-family"));
  a.erase("seconds");
  b.erase("seconds");
  CHECK(a == b);
}

TEST_CASE("unknown tables are rejected") { CHECK_THROWS_AS(golden_table("nope"), Error); }
