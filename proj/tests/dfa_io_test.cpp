#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "syncaut/dfa_io.hpp"
#include "syncaut/error.hpp"

using namespace syncaut;
using namespace syncaut::testing;

namespace {

const char* const gadget_b_text = R"(# automaton B over {a,b}
alphabet: a b x y z
states: p1 p2 s
p1 a p1
p1 b p1
p1 x p1
p1 y s
p1 z p2
p2 a s
p2 b s
p2 x s
p2 y s
p2 z s
s a s
s b s
s x s
s y s
s z s
)";

std::size_t parse_error_line(const std::string& text) {
  try {
    (void)parse_dfa(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a parse error");
  return 0;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("parses gadget B") {
  const Dfa d = parse_dfa(gadget_b_text);
  CHECK(d.num_states() == 3);
  CHECK(d.num_letters() == 5);
  CHECK_FALSE(d.is_acceptor());
  CHECK(d == gadget_b());
}

TEST_CASE("smallest complete automaton") {
  const Dfa d = parse_dfa("alphabet: a\nstates: q\nq a q\n");
  CHECK(d.num_states() == 1);
  CHECK(d.next(0, 0) == 0);
}

TEST_CASE("missing transition names state and letter") {
  const std::string text = "alphabet: a b\nstates: q0 q1\nq0 a q1\nq1 a q0\nq1 b q1\n";
  try {
    (void)parse_dfa(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("q0") != std::string::npos);
    CHECK(msg.find("b") != std::string::npos);
    CHECK(msg.find("missing") != std::string::npos);
    CHECK(e.line() == 5);
  }
}

TEST_CASE("errors carry the offending line") {
  CHECK(parse_error_line("alphabet: a\nstates: q\nq a q\nq a q\n") == 4);
  CHECK(parse_error_line("alphabet: a\nstates: q\nr a q\n") == 3);
  CHECK(parse_error_line("alphabet: a\nstates: q\nq a r\n") == 3);
  CHECK(parse_error_line("alphabet: a\nstates: q\nq c q\n") == 3);
  CHECK(parse_error_line("alphabet: a\nstates: q q\n") == 2);
  CHECK(parse_error_line("alphabet: a a\nstates: q\n") == 1);
  CHECK(parse_error_line("alphabet: a\nalphabet: b\n") == 2);
  CHECK(parse_error_line("alphabet: a\nstates: q\ninitial: r\nq a q\n") == 3);
  CHECK(parse_error_line("alphabet: a\nstates: q\nfinal: r\nq a q\n") == 3);
  CHECK(parse_error_line("alphabet: a\nstates: q\nq a q\nfinal: q\n") == 4);
  CHECK(parse_error_line("alphabet: a\nstates: q\nq a\n") == 3);
  CHECK(parse_error_line("alphabet: a\nq a q\n") == 2);
  CHECK(parse_error_line("colour: red\n") == 1);
}

TEST_CASE("comments and blank lines are ignored") {
  const Dfa d = parse_dfa("\n# header\nalphabet: a b   # letters\n\nstates: q\ninitial: q\nfinal:\nq a q\n  q b q  # loop\n");
  CHECK(d.num_letters() == 2);
  CHECK(d.is_acceptor());
  CHECK(d.finals().empty());
}

TEST_CASE("serializes in state then letter order") {
  const std::string one = serialize_dfa(one_state(Alphabet({"a"})));
  CHECK(one == "alphabet: a\nstates: q\nq a q\n");
  CHECK(count_lines(one) == 3);

  const std::string b = serialize_dfa(gadget_b());
  std::istringstream in(b);
  std::size_t transitions = 0;
  for (std::string line; std::getline(in, line);)
    if (line.find(':') == std::string::npos) ++transitions;
  CHECK(transitions == 15);
  CHECK(b.find("p1 a p1\np1 b p1\np1 x p1\np1 y s\np1 z p2\n") != std::string::npos);
}

TEST_CASE("serialize and parse round-trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Dfa d = random_dfa(rng, 1 + rng() % 6, 1 + rng() % 4);
    if (trial % 2 == 0) {
      std::vector<State> finals;
      for (State q = 0; q < d.num_states(); ++q)
        if (rng() % 2) finals.push_back(q);
      d = with_acceptance(d, static_cast<State>(rng() % d.num_states()), finals);
    }
    CHECK(parse_dfa(serialize_dfa(d)) == d);
  }
  CHECK(parse_dfa(serialize_dfa(witness_i())) == witness_i());
}

TEST_CASE("file errors name the path") {
  const auto dir = std::filesystem::temp_directory_path() / "syncaut_dfa_io_test";
  std::filesystem::create_directories(dir);
  const auto bad = dir / "bad.dfa";
  {
    std::ofstream out(bad);
    out << "alphabet: a\nstates: q\n";
  }
  try {
    (void)read_dfa_file(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("bad.dfa:2") != std::string::npos);
  }
  CHECK_THROWS_AS(read_dfa_file(dir / "absent.dfa"), Error);

  write_dfa_file(dir / "b.dfa", gadget_b());
  CHECK(read_dfa_file(dir / "b.dfa") == gadget_b());
  std::filesystem::remove_all(dir);
}
