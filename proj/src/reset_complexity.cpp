#include "syncaut/reset_complexity.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "syncaut/decisions.hpp"
#include "syncaut/error.hpp"
#include "syncaut/state_set.hpp"
#include "syncaut/sync_analysis.hpp"

namespace syncaut {
namespace {

constexpr std::size_t max_candidate_states = 16;
// Words up to this many are tested on every candidate before the exact check.
constexpr std::size_t sample_word_budget = 4096;

void require_synchronizing(const Dfa& d) {
  if (!is_synchronizing(d)) throw Error("automaton is not synchronizing");
}

std::vector<std::vector<State>> all_permutations(std::size_t m) {
  std::vector<State> p(m);
  std::iota(p.begin(), p.end(), State{0});
  std::vector<std::vector<State>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Reset-ness of d on every word up to a fixed length, in breadth-first
/// order, for rejecting candidates before the exact equality test.
class SampleFilter {
 public:
  SampleFilter(const Dfa& d, std::size_t word_budget) {
    const std::size_t k = d.num_letters();
    std::vector<StateSet> images{StateSet::full(d.num_states())};
    parent_.push_back(0);
    letter_.push_back(0);
    reset_.push_back(d.num_states() == 1);
    std::size_t level_begin = 0;
    while (images.size() + (images.size() - level_begin) * k <= word_budget) {
      const std::size_t level_end = images.size();
      if (level_begin == level_end) break;
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (Letter a = 0; a < k; ++a) {
          images.push_back(image(d, images[i], a));
          parent_.push_back(static_cast<std::uint32_t>(i));
          letter_.push_back(a);
          reset_.push_back(images.back().is_singleton());
        }
      }
      level_begin = level_end;
    }
  }

  bool agrees(std::span<const State> table, std::size_t letters, std::vector<std::uint32_t>& scratch) const {
    const std::size_t m = table.size() / letters;
    scratch.resize(parent_.size());
    scratch[0] = (std::uint32_t{1} << m) - 1;
    if ((m == 1) != static_cast<bool>(reset_[0])) return false;
    for (std::size_t i = 1; i < parent_.size(); ++i) {
      std::uint32_t from = scratch[parent_[i]];
      std::uint32_t to = 0;
      for (; from != 0; from &= from - 1) to |= std::uint32_t{1} << table[std::countr_zero(from) * letters + letter_[i]];
      scratch[i] = to;
      if ((std::popcount(to) == 1) != static_cast<bool>(reset_[i])) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<Letter> letter_;
  std::vector<char> reset_;
};

bool table_synchronizing(std::span<const State> table, std::size_t letters, std::vector<char>& seen) {
  const std::size_t m = table.size() / letters;
  if (m == 1) return true;
  seen.assign(std::size_t{1} << m, 0);
  std::vector<std::uint32_t> queue{(std::uint32_t{1} << m) - 1};
  seen[queue[0]] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (Letter a = 0; a < letters; ++a) {
      std::uint32_t to = 0;
      for (std::uint32_t from = queue[h]; from != 0; from &= from - 1)
        to |= std::uint32_t{1} << table[std::countr_zero(from) * letters + a];
      if (std::popcount(to) == 1) return true;
      if (!seen[to]) {
        seen[to] = 1;
        queue.push_back(to);
      }
    }
  }
  return false;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

/// Searches one candidate size. Returns the least witness table, if any.
std::optional<std::vector<State>> search_level(const Dfa& d, std::size_t m, const SampleFilter& filter,
                                               const Limits& limits, RcLevel& level) {
  const std::size_t k = d.num_letters();
  level.states = m;
  std::optional<std::vector<State>> found;
  std::vector<std::uint32_t> scratch;
  std::vector<char> seen;
  level.raw_tables = for_each_canonical_table(m, k, [&](std::span<const State> table) {
    ++level.canonical;
    if (!table_synchronizing(table, k, seen)) return true;
    ++level.synchronizing;
    if (!filter.agrees(table, k, scratch)) return true;
    ++level.full_checks;
    if (!syn_equality(table_to_dfa(table, m, d.alphabet()), d, limits).holds()) return true;
    found.emplace(table.begin(), table.end());
    return false;
  });
  level.exhausted = !found.has_value();
  return found;
}

}  // namespace

std::string to_string(RcMethod method) {
  switch (method) {
    case RcMethod::polynomial_1: return "polynomial-1";
    case RcMethod::polynomial_2: return "polynomial-2";
    case RcMethod::exhaustive: return "exhaustive";
    case RcMethod::bound_only: return "bound-only";
  }
  return "unknown";
}

bool rc_is_1(const Dfa& d) {
  require_synchronizing(d);
  return d.num_states() == 1;
}

bool rc_is_2(const Dfa& d) {
  require_synchronizing(d);
  if (d.num_states() == 1) return false;
  const auto gamma = reset_letters(d);
  std::vector<Letter> kept;
  for (Letter a = 0; a < d.num_letters(); ++a)
    if (std::find(gamma.begin(), gamma.end(), a) == gamma.end()) kept.push_back(a);
  if (kept.empty()) return true;

  std::vector<std::string> letters;
  for (Letter a : kept) letters.push_back(d.alphabet().letter(a));
  std::vector<State> table;
  for (State q = 0; q < d.num_states(); ++q)
    for (Letter a : kept) table.push_back(d.next(q, a));
  return !is_synchronizing(Dfa(d.state_names(), Alphabet(std::move(letters)), std::move(table)));
}

std::uint64_t raw_table_count(std::size_t states, std::size_t letters) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < states * letters; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / states) return std::numeric_limits<std::uint64_t>::max();
    count *= states;
  }
  return count;
}

bool is_canonical_table(std::span<const State> table, std::size_t states, std::size_t letters) {
  static thread_local std::size_t cached_m = 0;
  static thread_local std::vector<std::vector<State>> perms, inverses;
  if (cached_m != states) {
    perms = all_permutations(states);
    inverses.clear();
    for (const auto& p : perms) {
      std::vector<State> inv(states);
      for (State q = 0; q < states; ++q) inv[p[q]] = q;
      inverses.push_back(std::move(inv));
    }
    cached_m = states;
  }
  // perms[0] is the identity.
  for (std::size_t i = 1; i < perms.size(); ++i) {
    const auto& p = perms[i];
    const auto& inv = inverses[i];
    for (State q = 0; q < states; ++q) {
      const State src = inv[q];
      bool decided = false;
      for (Letter a = 0; a < letters; ++a) {
        const State relabeled = p[table[src * letters + a]];
        const State original = table[q * letters + a];
        if (relabeled < original) return false;
        if (relabeled > original) {
          decided = true;
          break;
        }
      }
      if (decided) break;
    }
  }
  return true;
}

std::vector<State> canonical_form(std::span<const State> table, std::size_t states, std::size_t letters) {
  std::vector<State> best(table.begin(), table.end());
  std::vector<State> candidate(table.size());
  for (const auto& p : all_permutations(states)) {
    for (State q = 0; q < states; ++q)
      for (Letter a = 0; a < letters; ++a) candidate[p[q] * letters + a] = p[table[q * letters + a]];
    if (candidate < best) best = candidate;
  }
  return best;
}

std::uint64_t for_each_canonical_table(std::size_t states, std::size_t letters,
                                       const std::function<bool(std::span<const State>)>& visit) {
  if (states == 0 || states > max_candidate_states) throw Error("unsupported candidate size");
  std::vector<State> table(states * letters, 0);
  std::uint64_t raw = 0;
  for (;;) {
    ++raw;
    if (is_canonical_table(table, states, letters) && !visit(table)) return raw;
    // Odometer step; the last entry is the least significant digit.
    std::size_t i = table.size();
    while (i > 0 && table[i - 1] + 1 == states) table[--i] = 0;
    if (i == 0) return raw;
    ++table[i - 1];
  }
}

Dfa table_to_dfa(std::span<const State> table, std::size_t states, const Alphabet& alphabet) {
  std::vector<std::string> names;
  for (std::size_t q = 0; q < states; ++q) names.push_back(std::to_string(q));
  return Dfa(std::move(names), alphabet, std::vector<State>(table.begin(), table.end()));
}

RcReport rc_upper_search(const Dfa& d, std::size_t limit, const Limits& limits) {
  require_synchronizing(d);
  const std::size_t n = d.num_states();
  const std::size_t k = d.num_letters();
  const std::size_t required_levels = std::min(limit, n - 1);

  std::uint64_t required = 0;
  for (std::size_t m = 1; m <= required_levels; ++m) required = saturating_add(required, raw_table_count(m, k));
  if (required > limits.enumeration_budget || required_levels > max_candidate_states)
    throw CapExceeded("reset-complexity enumeration", limits.enumeration_budget, required);

  RcReport report;
  report.input_size = n;
  const SampleFilter filter(d, sample_word_budget);

  auto finish_exact = [&](std::size_t rc, Dfa witness) {
    report.rc_lower = rc;
    report.rc_upper = rc;
    report.exact = true;
    report.witness_msa = std::move(witness);
    report.method = RcMethod::exhaustive;
    return report;
  };

  for (std::size_t m = 1; m <= required_levels; ++m) {
    RcLevel level;
    auto hit = search_level(d, m, filter, limits, level);
    report.levels.push_back(level);
    if (hit) return finish_exact(m, table_to_dfa(*hit, m, d.alphabet()));
  }

  if (limit < n) {
    report.rc_lower = limit + 1;
    report.method = RcMethod::bound_only;
    return report;
  }

  // Nothing smaller than the input exists, so rc = |Q|.
  const std::uint64_t top = raw_table_count(n, k);
  if (n <= max_candidate_states && top <= limits.enumeration_budget - required) {
    RcLevel level;
    auto hit = search_level(d, n, filter, limits, level);
    report.levels.push_back(level);
    if (!hit) throw std::logic_error("input automaton missing from its own size class");
    return finish_exact(n, table_to_dfa(*hit, n, d.alphabet()));
  }
  return finish_exact(n, d);
}

RcReport rc_report(const Dfa& d, std::size_t limit, const Limits& limits) {
  require_synchronizing(d);
  RcReport report;
  try {
    report.sc = state_complexity(d, limits);
  } catch (const CapExceeded&) {
    report.sc.reset();
  }
  const std::size_t k = d.num_letters();

  if (rc_is_1(d)) {
    report.input_size = d.num_states();
    report.rc_lower = 1;
    report.rc_upper = 1;
    report.exact = true;
    report.witness_msa = table_to_dfa(std::vector<State>(k, 0), 1, d.alphabet());
    report.method = RcMethod::polynomial_1;
  } else if (rc_is_2(d)) {
    // Reset letters collapse both states; every other letter acts as the identity.
    const auto gamma = reset_letters(d);
    std::vector<State> table(2 * k);
    for (Letter a = 0; a < k; ++a) {
      const bool reset = std::find(gamma.begin(), gamma.end(), a) != gamma.end();
      table[a] = 0;
      table[k + a] = reset ? 0 : 1;
    }
    report.input_size = d.num_states();
    report.rc_lower = 2;
    report.rc_upper = 2;
    report.exact = true;
    report.witness_msa = table_to_dfa(table, 2, d.alphabet());
    report.method = RcMethod::polynomial_2;
  } else {
    auto sc = report.sc;
    report = rc_upper_search(d, limit, limits);
    report.sc = sc;
    if (!report.exact) report.rc_lower = std::max<std::size_t>(report.rc_lower, 3);
  }
  validate_report(report, d, limits);
  return report;
}

void validate_report(const RcReport& report, const Dfa& input, const Limits& limits) {
  auto fail = [](const std::string& what) { throw std::logic_error("reset-complexity report: " + what); };
  if (report.rc_upper && report.rc_lower > *report.rc_upper) fail("lower bound above upper bound");
  if (report.exact && (!report.rc_upper || report.rc_lower != *report.rc_upper)) fail("exact without matching bounds");
  if (report.witness_msa) {
    const Dfa& w = *report.witness_msa;
    if (!report.rc_upper || w.num_states() != *report.rc_upper) fail("witness size differs from upper bound");
    if (!is_synchronizing(w)) fail("witness is not synchronizing");
    if (!syn_equality(w, input, limits).holds()) fail("witness has a different reset-word language");
  }
  if (report.sc && report.exact && *report.rc_upper > *report.sc) fail("rc exceeds sc");
}

}  // namespace syncaut
