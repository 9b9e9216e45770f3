#include "napkin/optimality.hpp"

#include "napkin/exact_engine.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace napkin {
namespace {

using K = IntervalKind;

Dyadic q(long num, unsigned two_power) { return Dyadic::ratio(num, two_power); }

RawConfig to_raw(const TableState& table) {
  RawConfig c;
  c.n = table.size();
  for (std::uint32_t i = 0; i < c.n; ++i) {
    if (table.occupied(i)) c.seats |= 1u << i;
    if (table.napkin(i)) c.napkins |= 1u << i;
  }
  return c;
}

TEST(OptimalIntervalValues, SmallValues) {
  const auto t = optimal_interval_values(10);
  EXPECT_EQ(t.max_length(), 10u);
  EXPECT_EQ(t.value(K::Asymmetric, 6), q(41, 5));
  EXPECT_EQ(t.value(K::Inner, 3), Dyadic(1));
  EXPECT_EQ(t.value(K::Outer, 4), q(1, 1));
  EXPECT_EQ(t.value(K::Inner, 1), Dyadic(1));
  EXPECT_EQ(t.value(K::Outer, 0), Dyadic(0));
}

// Brute force over every label at every length, independent of the DP's
// prefix-sum bookkeeping.
TEST(OptimalIntervalValues, MatchesDirectMaximisation) {
  const std::uint32_t max = 40;
  std::vector<mpq_class> i(max + 1), o(max + 1), a(max + 1);
  auto v = [&](const Interval& x) -> mpq_class {
    switch (x.kind) {
      case K::Inner: return i[x.length];
      case K::Outer: return o[x.length];
      case K::Asymmetric: return a[x.length];
    }
    return 0;
  };
  for (std::uint32_t n = 1; n <= max; ++n) {
    for (K kind : kAllKinds) {
      mpq_class best = -1;
      for (Label m : valid_labels({kind, n})) {
        mpq_class value = 0;
        for (const auto& outcome : split({kind, n}, m).outcomes) {
          mpq_class sum = outcome.napkinless ? 1 : 0;
          for (const auto& p : outcome.pieces) sum += v(p);
          value += sum * outcome.probability.to_rational();
        }
        if (value > best) best = value;
      }
      (kind == K::Inner ? i : kind == K::Outer ? o : a)[n] = best;
    }
  }
  const auto t = optimal_interval_values(max);
  for (std::uint32_t n = 1; n <= max; ++n) {
    EXPECT_EQ(t.inner[n].to_rational(), i[n]) << n;
    EXPECT_EQ(t.outer[n].to_rational(), o[n]) << n;
    EXPECT_EQ(t.asymmetric[n].to_rational(), a[n]) << n;
  }
}

TEST(OptimalIntervalValues, ChosenLabelsAttainTheOptimum) {
  const auto t = optimal_interval_values(30);
  const IntervallicStrategy greedy("greedy", [&t](K kind, std::uint32_t n) -> Label {
    switch (kind) {
      case K::Inner: return t.inner_label[n];
      case K::Outer: return t.outer_label[n];
      case K::Asymmetric: return t.asymmetric_label[n];
    }
    return 0;
  });
  EXPECT_TRUE(verify_against(greedy, t).ok());
}

TEST(VerifyAgainst, LongTrapSettingIsOptimal) {
  const Report r = verify_against(long_trap_setting(), 7, true);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.records().size(), 21u);
  for (const auto& rec : r.records()) EXPECT_EQ(rec.lhs, rec.rhs) << rec.check << " " << rec.n;
  EXPECT_TRUE(verify_against(long_trap_setting(), 300).ok());
}

TEST(VerifyAgainst, EndpointOnlyDivergesAtInnerFour) {
  const Report r = verify_against(endpoint_only(), 20);
  ASSERT_FALSE(r.ok());
  const auto f = r.first_failure();
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->check, "optimum-inner");
  EXPECT_EQ(f->n, 4u);
  EXPECT_EQ(f->lhs, Dyadic(1));
  EXPECT_EQ(f->rhs, q(5, 2));
}

TEST(VerifyAgainst, NapkinShunningIsNotOptimal) {
  EXPECT_FALSE(verify_against(napkin_shunning(), 20).ok());
}

TEST(Inequalities, HoldUpToOneHundred) {
  const Report r = verify_inequalities(100);
  EXPECT_TRUE(r.ok());
  for (const char* check : {"psi-bound", "inner-split-bound", "outer-split-bound", "asymmetric-split-bound",
                            "inner-monotone", "inner-dominates-asymmetric", "asymmetric-dominates-outer",
                            "asymmetric-monotone"}) {
    ASSERT_TRUE(r.counts().contains(check)) << check;
    EXPECT_GT(r.counts().at(check).first, 0u) << check;
    EXPECT_EQ(r.counts().at(check).second, 0u) << check;
  }
}

TEST(Inequalities, InnerSplitRecordAtSevenThree) {
  const Report r = verify_inequalities(7, true);
  bool found = false;
  for (const auto& rec : r.records()) {
    if (rec.check == "inner-split-bound" && rec.n == 7 && rec.m == 3u) {
      found = true;
      EXPECT_EQ(rec.lhs, q(29, 4));
      EXPECT_EQ(rec.rhs, q(7, 2));
      EXPECT_TRUE(rec.pass);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_THROW(verify_inequalities(2), std::invalid_argument);
}

TEST(Report, JsonLinesRoundTrip) {
  const Report r = verify_inequalities(6, true);
  ASSERT_FALSE(r.records().empty());
  std::ostringstream os;
  write_json_lines(os, r.records());
  std::istringstream in(os.str());
  std::string line;
  std::size_t k = 0;
  while (std::getline(in, line)) {
    const CheckRecord back = parse_json_line(line);
    const CheckRecord& orig = r.records()[k++];
    EXPECT_EQ(back.check, orig.check);
    EXPECT_EQ(back.n, orig.n);
    EXPECT_EQ(back.m, orig.m);
    EXPECT_EQ(back.lhs, orig.lhs);
    EXPECT_EQ(back.rhs, orig.rhs);
    EXPECT_EQ(back.pass, orig.pass);
  }
  EXPECT_EQ(k, r.records().size());
}

TEST(RawTables, SmallOptima) {
  EXPECT_EQ(raw_table_optimum(2), Dyadic(0));
  EXPECT_EQ(raw_table_optimum(3), q(1, 1));
  EXPECT_EQ(raw_table_optimum(4), q(3, 2));
  EXPECT_EQ(raw_table_optimum(7), q(41, 5));
  EXPECT_THROW(raw_table_optimum(1), std::out_of_range);
  EXPECT_THROW(raw_table_optimum(RawTableSolver::kMaxSeats + 1), std::out_of_range);
}

TEST(RawTables, NeverBelowLongTrapSettingEnumeration) {
  for (std::uint32_t n = 2; n <= 8; ++n) {
    EXPECT_GE(raw_table_optimum(n), testing::enumerate_table(long_trap_setting(), n)) << n;
  }
}

TEST(RawTables, EmbeddedIntervalsHaveIntervalOptimum) {
  const auto t = optimal_interval_values(9);
  for (K kind : kAllKinds) {
    for (std::uint32_t n = 1; n <= 9; ++n) {
      RawTableSolver solver(n + 1);
      EXPECT_EQ(solver.value(to_raw(testing::embed({kind, n}))), t.value(kind, n)) << to_string(Interval{kind, n});
      if (kind == K::Asymmetric) {
        EXPECT_EQ(solver.value(to_raw(testing::embed({kind, n}, true))), t.value(kind, n));
      }
    }
  }
}

RawConfig random_config(std::uint32_t n, std::mt19937_64& rng) {
  RawConfig c;
  c.n = n;
  c.seats = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
  for (std::uint32_t k = 0; k < n; ++k) {
    const bool touched = (c.seats >> k & 1) || (c.seats >> ((k + 1) % n) & 1);
    if (!touched || rng() % 2) c.napkins |= 1u << k;
  }
  return c;
}

TEST(RawTables, SymmetryReductionIsSound) {
  std::mt19937_64 rng(5);
  for (std::uint32_t n = 2; n <= 7; ++n) {
    RawTableSolver plain(n, false), reduced(n, true);
    for (int trial = 0; trial < 60; ++trial) {
      const RawConfig c = random_config(n, rng);
      ASSERT_TRUE(c.valid());
      const Dyadic v = plain.value(c);
      for (std::uint32_t r = 0; r < n; ++r) {
        for (bool reflect : {false, true}) {
          const RawConfig t = c.transformed(r, reflect);
          ASSERT_TRUE(t.valid());
          EXPECT_EQ(reduced.value(t), v) << "n=" << n;
          EXPECT_EQ(plain.value(t), v) << "n=" << n;
        }
      }
    }
    EXPECT_LE(reduced.memo_size(), plain.memo_size());
  }
}

TEST(RawTables, TransformsComposeToIdentity) {
  std::mt19937_64 rng(11);
  const RawConfig c = random_config(9, rng);
  EXPECT_EQ(c.transformed(0, false), c);
  EXPECT_EQ(c.transformed(0, true).transformed(0, true), c);
  EXPECT_EQ(c.transformed(4, false).transformed(5, false), c);
}

TEST(RawTables, VerifyRecordsCompareWithLongTrapSetting) {
  const Report r = verify_raw_tables(7, true);
  EXPECT_TRUE(r.ok());
  ASSERT_EQ(r.records().size(), 6u);
  for (const auto& rec : r.records()) {
    EXPECT_EQ(rec.check, "raw-table-optimum");
    EXPECT_EQ(rec.rhs, expected_table(long_trap_setting(), rec.n));
  }
}

}  // namespace
}  // namespace napkin
