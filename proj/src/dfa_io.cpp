#include "syncaut/dfa_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "syncaut/error.hpp"

namespace syncaut {
namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

struct Header {
  std::optional<std::vector<std::string>> alphabet;
  std::optional<std::vector<std::string>> states;
  std::optional<std::string> initial;
  std::size_t initial_line = 0;
  std::optional<std::vector<std::string>> finals;
  std::size_t finals_line = 0;
};

void check_unique(const std::vector<std::string>& toks, std::size_t line, const char* what) {
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (!is_valid_token(toks[i])) throw ParseError(line, std::string("invalid ") + what + " token '" + toks[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (toks[i] == toks[j])
        throw ParseError(line, std::string("duplicate ") + what + " '" + toks[i] + "'");
  }
}

}  // namespace

Dfa parse_dfa(std::string_view text) {
  Header header;
  std::optional<DfaBuilder> builder;
  std::size_t line_no = 0;

  auto start_transitions = [&](std::size_t line) {
    if (!header.alphabet) throw ParseError(line, "missing 'alphabet:' line before transitions");
    if (!header.states) throw ParseError(line, "missing 'states:' line before transitions");
    builder.emplace(Alphabet(*header.alphabet));
    for (const auto& s : *header.states) builder->add_state(s);
  };

  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto colon = line.find(':');
    if (colon != std::string_view::npos) {
      if (builder) throw ParseError(line_no, "header line after transitions");
      const auto keys = split_ws(line.substr(0, colon));
      const auto values = split_ws(line.substr(colon + 1));
      const std::string key = keys.size() == 1 ? keys[0] : std::string();
      if (key == "alphabet") {
        if (header.alphabet) throw ParseError(line_no, "duplicate 'alphabet:' line");
        if (values.empty()) throw ParseError(line_no, "alphabet must declare at least one letter");
        check_unique(values, line_no, "letter");
        header.alphabet = values;
      } else if (key == "states") {
        if (header.states) throw ParseError(line_no, "duplicate 'states:' line");
        if (values.empty()) throw ParseError(line_no, "states must declare at least one state");
        check_unique(values, line_no, "state");
        header.states = values;
      } else if (key == "initial") {
        if (header.initial) throw ParseError(line_no, "duplicate 'initial:' line");
        if (values.size() != 1) throw ParseError(line_no, "'initial:' takes exactly one state");
        header.initial = values[0];
        header.initial_line = line_no;
      } else if (key == "final") {
        if (header.finals) throw ParseError(line_no, "duplicate 'final:' line");
        check_unique(values, line_no, "final state");
        header.finals = values;
        header.finals_line = line_no;
      } else {
        throw ParseError(line_no, "unknown header '" + std::string(line.substr(0, colon)) + "'");
      }
      continue;
    }
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 3) throw ParseError(line_no, "transition line must read '<state> <letter> <state>'");
    if (!builder) start_transitions(line_no);
    if (!builder->has_state(toks[0])) throw ParseError(line_no, "unknown state '" + toks[0] + "'");
    const State from = builder->require_state(toks[0]);
    const auto letter = builder->alphabet().find(toks[1]);
    if (!letter) throw ParseError(line_no, "unknown letter '" + toks[1] + "'");
    if (!builder->has_state(toks[2])) throw ParseError(line_no, "unknown state '" + toks[2] + "'");
    if (builder->is_set(from, *letter))
      throw ParseError(line_no, "duplicate transition (" + toks[0] + ", " + toks[1] + ")");
    builder->set(from, *letter, builder->require_state(toks[2]));
  }

  const std::size_t last = line_no == 0 ? 1 : line_no;
  if (!builder) start_transitions(last);
  const auto& letters = *header.alphabet;
  const auto& states = *header.states;
  for (State q = 0; q < states.size(); ++q)
    for (Letter a = 0; a < letters.size(); ++a)
      if (!builder->is_set(q, a))
        throw ParseError(last, "missing transition (" + states[q] + ", " + letters[a] + ")");

  if (header.initial) {
    if (!builder->has_state(*header.initial))
      throw ParseError(header.initial_line, "unknown state '" + *header.initial + "'");
    builder->set_initial(*header.initial);
  }
  if (header.finals) {
    for (const auto& f : *header.finals) {
      if (!builder->has_state(f)) throw ParseError(header.finals_line, "unknown state '" + f + "'");
      builder->add_final(f);
    }
  }
  return builder->build();
}

std::string serialize_dfa(const Dfa& d) {
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& l : d.alphabet().letters()) out << ' ' << l;
  out << "\nstates:";
  for (const auto& s : d.state_names()) out << ' ' << s;
  out << '\n';
  if (d.initial()) out << "initial: " << d.state_name(*d.initial()) << '\n';
  const auto finals = d.finals();
  if (d.initial() || !finals.empty()) {
    out << "final:";
    for (State f : finals) out << ' ' << d.state_name(f);
    out << '\n';
  }
  for (State q = 0; q < d.num_states(); ++q)
    for (Letter a = 0; a < d.num_letters(); ++a)
      out << d.state_name(q) << ' ' << d.alphabet().letter(a) << ' ' << d.state_name(d.next(q, a)) << '\n';
  return out.str();
}

Dfa read_dfa_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_dfa(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), path.string());
  }
}

void write_dfa_file(const std::filesystem::path& path, const Dfa& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << serialize_dfa(d);
}

}  // namespace syncaut
