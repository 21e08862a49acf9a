#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "syncaut/decisions.hpp"
#include "syncaut/dfa_io.hpp"
#include "syncaut/error.hpp"
#include "syncaut/reset_complexity.hpp"
#include "syncaut/sync_analysis.hpp"

using namespace syncaut;
using namespace syncaut::testing;

namespace {

std::vector<State> relabel(const std::vector<State>& table, const std::vector<State>& perm, std::size_t letters) {
  std::vector<State> out(table.size());
  for (State q = 0; q < perm.size(); ++q)
    for (Letter a = 0; a < letters; ++a) out[perm[q] * letters + a] = perm[table[q * letters + a]];
  return out;
}

/// Number of relabeling orbits, by Burnside's lemma over brute-forced fixed points.
std::uint64_t orbit_count(std::size_t m, std::size_t k) {
  std::vector<State> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t fixed = 0;
  std::uint64_t perms = 0;
  do {
    ++perms;
    std::vector<State> table(m * k, 0);
    for (;;) {
      if (relabel(table, perm, k) == table) ++fixed;
      std::size_t i = 0;
      while (i < table.size() && ++table[i] == m) table[i++] = 0;
      if (i == table.size()) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return fixed / perms;
}

/// Every letter is a reset letter.
Dfa all_reset() { return Dfa({"u", "v"}, ab(), {0, 1, 0, 1}); }

}  // namespace

TEST_CASE("rc is 1 exactly for a single state") {
  CHECK(rc_is_1(one_state(ab())));
  CHECK_FALSE(rc_is_1(gadget_b()));
  CHECK_FALSE(rc_is_1(build_gadget_A(normalize_instance(nonempty_instance()))));
  CHECK_THROWS_AS(rc_is_1(permutation_dfa()), Error);
}

TEST_CASE("rc is 2") {
  CHECK(rc_is_2(merge_and_swap()));
  CHECK_FALSE(rc_is_2(gadget_b()));
  CHECK_FALSE(rc_is_2(one_state(ab())));
  CHECK(rc_is_2(all_reset()));
  CHECK_THROWS_AS(rc_is_2(permutation_dfa()), Error);
  const auto search = rc_upper_search(merge_and_swap(), 2);
  CHECK(search.exact);
  CHECK(search.rc_upper == std::size_t{2});
}

TEST_CASE("search on gadget B") {
  const auto exact = rc_upper_search(gadget_b(), 3);
  CHECK(exact.exact);
  CHECK(exact.rc_lower == 3);
  CHECK(exact.rc_upper == std::size_t{3});
  CHECK(exact.method == RcMethod::exhaustive);
  REQUIRE(exact.witness_msa);
  CHECK(exact.witness_msa->num_states() == 3);
  CHECK(syn_equality(*exact.witness_msa, gadget_b()).holds());
  REQUIRE(exact.levels.size() == 3);
  CHECK(exact.levels[0].exhausted);
  CHECK(exact.levels[1].exhausted);
  CHECK(exact.levels[1].raw_tables == 1024);
  CHECK_NOTHROW(validate_report(exact, gadget_b()));

  const auto bound = rc_upper_search(gadget_b(), 2);
  CHECK_FALSE(bound.exact);
  CHECK(bound.rc_lower == 3);
  CHECK_FALSE(bound.rc_upper);
  CHECK_FALSE(bound.witness_msa);
  CHECK(bound.method == RcMethod::bound_only);
}

TEST_CASE("search budget") {
  Limits small;
  small.enumeration_budget = 1000;
  try {
    (void)rc_upper_search(gadget_b(), 2, small);
    FAIL("expected a cap error");
  } catch (const CapExceeded& e) {
    CHECK(e.required() == 1025);
    CHECK(e.cap() == 1000);
  }
  CHECK_THROWS_AS(rc_upper_search(permutation_dfa(), 2), Error);
}

TEST_CASE("search falls back to the input at its own size") {
  Limits small;
  small.enumeration_budget = 1025;
  const auto r = rc_upper_search(gadget_b(), 3, small);
  CHECK(r.exact);
  CHECK(r.rc_upper == std::size_t{3});
  REQUIRE(r.witness_msa);
  CHECK(*r.witness_msa == gadget_b());
  CHECK(r.levels.size() == 2);
}

TEST_CASE("canonical enumeration counts relabeling orbits") {
  for (const auto& [m, k] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}}) {
    std::uint64_t canonical = 0;
    std::vector<State> previous;
    const auto raw = for_each_canonical_table(m, k, [&](std::span<const State> t) {
      std::vector<State> table(t.begin(), t.end());
      CHECK(previous < table);
      previous = std::move(table);
      ++canonical;
      return true;
    });
    CHECK(raw == raw_table_count(m, k));
    CHECK(canonical == orbit_count(m, k));
  }
  CHECK(raw_table_count(3, 5) == 14348907);
  CHECK(raw_table_count(40, 40) == UINT64_MAX);
}

TEST_CASE("canonical enumeration stops on request") {
  std::uint64_t seen = 0;
  (void)for_each_canonical_table(3, 2, [&](std::span<const State>) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("every table has its canonical form enumerated") {
  std::mt19937_64 rng(71);
  for (const auto& [m, k] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {3, 3}, {4, 2}}) {
    std::set<std::vector<State>> enumerated;
    (void)for_each_canonical_table(m, k, [&](std::span<const State> t) {
      enumerated.emplace(t.begin(), t.end());
      return true;
    });
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<State> table(m * k);
      for (auto& t : table) t = static_cast<State>(rng() % m);
      const auto canon = canonical_form(table, m, k);
      CHECK(is_canonical_table(canon, m, k));
      CHECK(enumerated.count(canon) == 1);
      std::vector<State> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(relabel(table, perm, k), m, k) == canon);
    }
  }
}

TEST_CASE("polynomial rc = 2 test agrees with the search on all small automata") {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    (void)for_each_canonical_table(n, 2, [&](std::span<const State> t) {
      const Dfa d = table_to_dfa(t, n, ab());
      if (!oracle::is_synchronizing(d)) return true;
      ++checked;
      const auto search = rc_upper_search(d, 2);
      const bool searched_two = search.exact && search.rc_upper == std::size_t{2};
      if (rc_is_2(d) != searched_two) FAIL_CHECK("disagreement on\n" << serialize_dfa(d));
      return true;
    });
  }
  CHECK(checked > 1000);
}

TEST_CASE("report orchestration") {
  const auto one = rc_report(one_state(ab()), 3);
  CHECK(one.exact);
  CHECK(one.rc_upper == std::size_t{1});
  CHECK(one.method == RcMethod::polynomial_1);
  CHECK(one.sc == std::size_t{1});
  CHECK(to_string(one.method) == "polynomial-1");

  const auto two = rc_report(merge_and_swap(), 3);
  CHECK(two.method == RcMethod::polynomial_2);
  CHECK(two.rc_upper == std::size_t{2});
  REQUIRE(two.witness_msa);
  CHECK(syn_equality(*two.witness_msa, merge_and_swap()).holds());

  const auto b = rc_report(gadget_b(), 3);
  CHECK(b.exact);
  CHECK(b.rc_upper == std::size_t{3});
  CHECK(b.sc == std::size_t{3});
  CHECK(b.method == RcMethod::exhaustive);

  const auto bound = rc_report(gadget_b(), 2);
  CHECK(bound.method == RcMethod::bound_only);
  CHECK(bound.rc_lower == 3);
  CHECK(to_string(bound.method) == "bound-only");
}

TEST_CASE("rc never exceeds sc") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    const Dfa d = random_sync_dfa(rng, 4, 2);
    const auto r = rc_report(d, 4);
    CHECK(r.exact);
    REQUIRE(r.sc);
    CHECK(*r.rc_upper <= *r.sc);
    CHECK(*r.rc_upper <= d.num_states());
    REQUIRE(r.witness_msa);
    CHECK(is_synchronizing(*r.witness_msa));
    CHECK(syn_equality(*r.witness_msa, d).holds());
  }
}

TEST_CASE("report validation catches inconsistencies") {
  auto r = rc_report(gadget_b(), 3);
  auto bad = r;
  bad.rc_lower = 4;
  CHECK_THROWS_AS(validate_report(bad, gadget_b()), std::logic_error);
  bad = r;
  bad.witness_msa = one_state(gadget_b().alphabet());
  CHECK_THROWS_AS(validate_report(bad, gadget_b()), std::logic_error);
  bad = r;
  bad.sc = 2;
  CHECK_THROWS_AS(validate_report(bad, gadget_b()), std::logic_error);
  bad = r;
  bad.witness_msa = permutation_dfa();
  bad.rc_upper = bad.rc_lower = 2;
  CHECK_THROWS_AS(validate_report(bad, merge_and_swap()), std::logic_error);
  bad.witness_msa = merge_and_swap();
  CHECK_NOTHROW(validate_report(bad, merge_and_swap()));
}

TEST_CASE("search matches an unfiltered scan of all candidates") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 1 + rng() % 3;
    const Dfa d = random_sync_dfa(rng, 2 + rng() % 4, k);
    std::optional<std::pair<std::size_t, std::vector<State>>> least;
    for (std::size_t m = 1; m <= 3 && !least; ++m) {
      (void)for_each_canonical_table(m, k, [&](std::span<const State> t) {
        const Dfa candidate = table_to_dfa(t, m, d.alphabet());
        if (oracle::is_synchronizing(candidate) && syn_equality(candidate, d).holds()) {
          least.emplace(m, std::vector<State>(t.begin(), t.end()));
          return false;
        }
        return true;
      });
    }
    const auto r = rc_upper_search(d, 3);
    if (least) {
      CHECK(r.exact);
      CHECK(r.rc_upper == least->first);
      REQUIRE(r.witness_msa);
      if (least->first < d.num_states()) CHECK(r.witness_msa->table() == least->second);
    } else {
      CHECK_FALSE(r.exact);
      CHECK(r.rc_lower == 4);
    }
  }
}
