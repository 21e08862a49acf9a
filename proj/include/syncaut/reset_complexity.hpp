#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syncaut/dfa.hpp"
#include "syncaut/limits.hpp"

namespace syncaut {

enum class RcMethod { polynomial_1, polynomial_2, exhaustive, bound_only };

std::string to_string(RcMethod method);

/// Counters for one candidate size of the exhaustive search.
struct RcLevel {
  std::size_t states = 0;
  std::uint64_t raw_tables = 0;     ///< m^(m*k) tables visited by the odometer
  std::uint64_t canonical = 0;      ///< tables that are least in their relabeling orbit
  std::uint64_t synchronizing = 0;  ///< canonical tables that are synchronizing
  std::uint64_t full_checks = 0;    ///< candidates that reached the exact equality test
  bool exhausted = false;           ///< every canonical table was examined
};

struct RcReport {
  std::size_t input_size = 0;
  std::size_t rc_lower = 1;
  std::optional<std::size_t> rc_upper;
  bool exact = false;
  std::optional<Dfa> witness_msa;
  std::optional<std::size_t> sc;
  RcMethod method = RcMethod::bound_only;
  std::vector<RcLevel> levels;
};

/// rc = 1 iff the automaton has a single state. Throws Error if `d` is not
/// synchronizing.
bool rc_is_1(const Dfa& d);

/// rc = 2 iff rc != 1 and deleting the reset letters leaves a
/// non-synchronizing automaton. An empty residual alphabet with two or more
/// states counts as non-synchronizing. Throws Error if `d` is not
/// synchronizing.
bool rc_is_2(const Dfa& d);

/// Smallest synchronizing automaton over the same alphabet whose reset words
/// are those of `d`, searched for m = 1..limit states over transition tables
/// up to state relabeling. The first hit (fewest states, then
/// lexicographically least table) is returned as an exact result. Sizes below
/// |Q| must fit in `limits.enumeration_budget` or CapExceeded is thrown with
/// the required count; at size |Q| the input itself serves as witness when
/// the table space does not fit. Without a hit, rc_lower = limit + 1.
RcReport rc_upper_search(const Dfa& d, std::size_t limit, const Limits& limits = {});

/// Polynomial tests first, then the exhaustive search; attaches the state
/// complexity when it fits the subset cap.
RcReport rc_report(const Dfa& d, std::size_t limit, const Limits& limits = {});

/// Re-checks the report invariants against `input`; throws std::logic_error
/// on a violation.
void validate_report(const RcReport& report, const Dfa& input, const Limits& limits = {});

/// m^(m*k), saturating at UINT64_MAX.
std::uint64_t raw_table_count(std::size_t states, std::size_t letters);

/// True iff `table` is lexicographically least among all its relabelings.
bool is_canonical_table(std::span<const State> table, std::size_t states, std::size_t letters);

/// The least relabeling of `table`.
std::vector<State> canonical_form(std::span<const State> table, std::size_t states, std::size_t letters);

/// Calls `visit` on every canonical table in increasing lexicographic order
/// until it returns false. Returns the number of raw tables stepped over.
std::uint64_t for_each_canonical_table(std::size_t states, std::size_t letters,
                                       const std::function<bool(std::span<const State>)>& visit);

/// Automaton with states "0".."m-1" and the given row-major table.
Dfa table_to_dfa(std::span<const State> table, std::size_t states, const Alphabet& alphabet);

}  // namespace syncaut
