#include <doctest.h>

#include <chrono>

#include "o2est/ledger.hpp"
#include "o2est/matrix.hpp"

using namespace o2est;

TEST_CASE("every catalog entry passes, in under a second") {
  auto t0 = std::chrono::steady_clock::now();
  auto entries = verify_all_entries();
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  CHECK(entries.size() >= 15);
  for (const auto& e : entries) {
    INFO(e.id, ": ", e.note);
    CHECK(e.status != LedgerEntry::Status::Fail);
    CHECK(e.slack.lo() >= 0);
  }
  CHECK(ms < 1000.0);
}

TEST_CASE("telescoped Lemma 5.6 coefficient is exactly 132132") {
  LedgerEntry e = verify_entry("L5.6-telescope");
  CHECK(e.lhs.is_point());
  CHECK(e.lhs.lo() == Rational(132132));
  CHECK(e.rhs.lo() == Rational(133000));
}

TEST_CASE("composition constant is exactly 825000 <= 840000") {
  LedgerEntry e = verify_entry("T6.9-composition");
  CHECK(e.lhs.is_point());
  CHECK(e.lhs.lo() == Rational(825000));
  CHECK(e.status == LedgerEntry::Status::Pass);
}

TEST_CASE("Corollary 6.8 gives 27.5 <= 28") {
  LedgerEntry e = verify_entry("C6.8");
  CHECK(e.lhs.lo() == Rational(55, 2));
  CHECK(e.status == LedgerEntry::Status::Pass);
}

TEST_CASE("Remark 5.11 headline number 29440 <= 30000") {
  LedgerEntry e = verify_entry("R5.11");
  CHECK(e.status == LedgerEntry::Status::Pass);
  // worst case over the sweep is the 320*92 comparison
  CHECK(e.lhs.hi() <= Rational(29440));
}

TEST_CASE("rearranger aggregate 3*sqrt2 + 4 + sqrt6 <= 11 with real slack") {
  LedgerEntry e = verify_entry("L1.12-aggregate");
  CHECK(e.status == LedgerEntry::Status::Pass);
  CHECK(e.slack.lo_d() > 0.3);
  CHECK(e.slack.lo_d() < 0.4);
}

TEST_CASE("quadform maximum is 25/4, attained on the bc edge") {
  LedgerEntry e = verify_entry("L6.5-quadform");
  CHECK(e.status == LedgerEntry::Status::Pass);
  CHECK(e.lhs.lo() == Rational(25, 4));
}

TEST_CASE("xi chain is conditional with the n >= 49 threshold") {
  LedgerEntry e = verify_entry("L6.5-xi-chain");
  CHECK(e.status == LedgerEntry::Status::Conditional);
  CHECK(e.note.find("n=49") != std::string::npos);
}

TEST_CASE("partition accumulation closes at exactly 10r") {
  LedgerEntry e = verify_entry("L5.4-partition");
  CHECK(e.status == LedgerEntry::Status::Pass);
  CHECK(e.slack.is_point());
  CHECK(e.slack.lo() == 0);
}

TEST_CASE("unknown id raises input error") {
  CHECK_THROWS_AS(verify_entry("no-such-entry"), InputError);
}

TEST_CASE("monotonicity: refining the pi enclosure never flips pass to fail") {
  auto coarse = verify_all_entries(/*refined_pi=*/false);
  auto fine = verify_all_entries(/*refined_pi=*/true);
  REQUIRE(coarse.size() == fine.size());
  for (size_t i = 0; i < coarse.size(); ++i) {
    if (coarse[i].status != LedgerEntry::Status::Fail)
      CHECK(fine[i].status != LedgerEntry::Status::Fail);
    // slack can only improve with a tighter enclosure
    CHECK(fine[i].slack.lo() >= coarse[i].slack.lo());
  }
}
