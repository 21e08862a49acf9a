#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "syncaut/decisions.hpp"
#include "syncaut/dfa_io.hpp"
#include "syncaut/error.hpp"
#include "syncaut/gadgets.hpp"
#include "syncaut/language_ops.hpp"
#include "syncaut/reset_complexity.hpp"
#include "syncaut/sync_analysis.hpp"

namespace syncaut::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Result {
  int exit_code = exit_holds;
  Json payload = Json::object();
  std::vector<std::string> lines;
  std::optional<std::size_t> nodes_expanded;
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

Json word_json(const Word& w) { return Json(w); }

void emit_automaton(Result& r, const Dfa& d, const std::string& output) {
  r.payload["states"] = d.num_states();
  r.payload["transitions"] = d.num_states() * d.num_letters();
  if (output.empty()) {
    r.payload["automaton"] = serialize_dfa(d);
    r.lines.push_back(serialize_dfa(d));
  } else {
    write_dfa_file(output, d);
    r.payload["output"] = output;
    r.lines.push_back("wrote " + std::to_string(d.num_states()) + " states to " + output);
  }
}

const char* side(Separation s) { return s == Separation::reset_for_first_only ? "first" : "second"; }

Result decision_result(const DecisionOutcome& o, const char* yes, const char* no) {
  Result r;
  r.exit_code = o.holds() ? exit_holds : exit_fails;
  r.payload["verdict"] = o.holds() ? yes : no;
  r.lines.push_back(o.holds() ? yes : no);
  if (o.witness) {
    r.payload["witness"] = word_json(*o.witness);
    r.payload["witness_reset_for"] = side(*o.direction);
    r.lines.push_back("witness: " + to_string(*o.witness) + " (reset for the " + side(*o.direction) + " automaton only)");
  }
  r.nodes_expanded = o.nodes_expanded;
  return r;
}

Json optional_count(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  Word w = split_ws(text);
  if (w.size() == 1 && !alphabet.contains(w[0])) {
    const auto& ls = alphabet.letters();
    const bool single_chars = std::all_of(ls.begin(), ls.end(), [](const std::string& l) { return l.size() == 1; });
    if (single_chars) {
      const std::string joined = w[0];
      w.clear();
      for (char c : joined) w.emplace_back(1, c);
    }
  }
  for (const auto& t : w) alphabet.require(t);
  return w;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synchronizing automata toolkit: reset words, reset-word languages and reset complexity", "syncaut"};
  app.fallthrough();
  app.require_subcommand(1);

  bool json = false;
  bool timing = false;
  Limits limits;
  app.add_flag("--json", json, "Print a JSON object instead of text");
  app.add_flag("--timing", timing, "Include stats.elapsed_ms in the output");
  app.add_option("--subset-cap", limits.subset_cap, "Maximum subset states in subset constructions");
  app.add_option("--pair-cap", limits.pair_cap, "Maximum image pairs in inclusion searches");
  app.add_option("--budget", limits.enumeration_budget, "Maximum raw tables enumerated by the rc search");

  std::string file_a;
  std::string file_b;
  std::string output;
  std::string word_text;
  std::string sigma_text;
  std::string order_text;
  std::string letters_text = "x y z";
  std::string manifest;
  std::vector<std::string> files;
  bool no_word = false;
  std::size_t max_states = 3;

  auto* check = app.add_subcommand("check", "Synchronization verdict and shortest reset word");
  check->add_option("file", file_a, "Automaton file")->required();
  check->add_flag("--no-word", no_word, "Skip the shortest reset word search");

  auto* member = app.add_subcommand("member", "Is a word a reset word?");
  member->add_option("file", file_a)->required();
  member->add_option("--word", word_text, "Letters separated by spaces")->required();

  auto* synlang = app.add_subcommand("synlang", "Minimal acceptor of the reset-word language");
  synlang->add_option("file", file_a)->required();
  synlang->add_option("-o,--output", output);

  auto* sc = app.add_subcommand("sc", "State complexity of the reset-word language");
  sc->add_option("file", file_a)->required();

  auto* ideal = app.add_subcommand("ideal", "Is the accepted language a two-sided ideal?");
  ideal->add_option("file", file_a)->required();

  auto* equal = app.add_subcommand("equal", "Do two automata have the same reset words?");
  auto* include = app.add_subcommand("include", "Are the reset words of A reset words of B?");
  auto* strict = app.add_subcommand("strict", "Is Syn(A) a proper subset of Syn(B)?");
  for (auto* sub : {equal, include, strict}) {
    sub->add_option("a", file_a)->required();
    sub->add_option("b", file_b)->required();
  }

  auto* rc = app.add_subcommand("rc", "Reset complexity of the reset-word language");
  rc->add_option("file", file_a)->required();
  rc->add_option("--max", max_states, "Largest candidate size to search")->capture_default_str();
  rc->add_option("-o,--output", output, "Write the minimal synchronizing automaton here");

  auto* intersect = app.add_subcommand("intersect", "Is the intersection of the accepted languages nonempty?");
  intersect->add_option("files", files)->required();

  auto* gen = app.add_subcommand("gen", "Generate reduction automata");
  gen->require_subcommand(1);
  auto* gen_a = gen->add_subcommand("gadget-a", "Automaton encoding an intersection instance");
  gen_a->add_option("files", files, "Component acceptors");
  gen_a->add_option("--manifest", manifest, "File listing component paths");
  gen_a->add_option("--letters", letters_text, "Names of the three added letters")->capture_default_str();
  auto* gen_b = gen->add_subcommand("gadget-b", "Three-state automaton synchronized by the witness ideal");
  auto* gen_i = gen->add_subcommand("witness-i", "Acceptor of the witness ideal");
  for (auto* sub : {gen_b, gen_i}) {
    sub->add_option("--sigma", sigma_text, "Base letters")->required();
    sub->add_option("--letters", letters_text, "Names of the three added letters")->capture_default_str();
  }
  auto* gen_bin = gen->add_subcommand("binarize", "Encode a unique-sink automaton over {mu, lambda}");
  gen_bin->add_option("file", file_a)->required();
  gen_bin->add_option("--order", order_text, "Letter order d1 .. dk (default: alphabet order)");
  auto* gen_prod = gen->add_subcommand("product", "Full product automaton");
  gen_prod->add_option("a", file_a)->required();
  gen_prod->add_option("b", file_b)->required();
  for (auto* sub : {gen_a, gen_b, gen_i, gen_bin, gen_prod}) sub->add_option("-o,--output", output);

  auto report_error = [&](const std::string& message) {
    if (json) {
      Json j;
      j["verdict"] = "error";
      j["error"] = message;
      out << j.dump(2) << '\n';
    } else {
      err << "error: " << message << '\n';
    }
    return exit_error;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return report_error(e.what());
  }

  auto letters = [&] {
    const auto t = split_ws(letters_text);
    if (t.size() != 3) throw Error("--letters needs exactly three names");
    return GadgetLetters{t[0], t[1], t[2]};
  };

  const auto started = std::chrono::steady_clock::now();
  Result r;
  try {
    if (*check) {
      const Dfa d = read_dfa_file(file_a);
      const bool sync = is_synchronizing(d);
      r.exit_code = sync ? exit_holds : exit_fails;
      r.payload["verdict"] = sync ? "synchronizing" : "not synchronizing";
      r.lines.push_back(sync ? "synchronizing" : "not synchronizing");
      if (sync && !no_word) {
        const SyncReport rep = shortest_reset_word(d, limits);
        r.payload["witness"] = word_json(*rep.shortest_reset);
        r.payload["length"] = *rep.shortest_length;
        r.nodes_expanded = rep.nodes_expanded;
        r.lines.push_back("shortest reset word: " + to_string(*rep.shortest_reset) + " (length " +
                          std::to_string(*rep.shortest_length) + ")");
      }
    } else if (*member) {
      const Dfa d = read_dfa_file(file_a);
      const Word w = parse_word(word_text, d.alphabet());
      const bool reset = is_reset_word(d, w);
      r.exit_code = reset ? exit_holds : exit_fails;
      r.payload["verdict"] = reset ? "reset" : "not reset";
      r.payload["witness"] = word_json(w);
      r.lines.push_back(to_string(w) + (reset ? " is a reset word" : " is not a reset word"));
    } else if (*synlang) {
      const Dfa acc = syn_language_dfa(read_dfa_file(file_a), limits);
      r.payload["verdict"] = "generated";
      emit_automaton(r, acc, output);
    } else if (*sc) {
      const std::size_t value = state_complexity(read_dfa_file(file_a), limits);
      r.payload["verdict"] = "computed";
      r.payload["sc"] = value;
      r.lines.push_back("sc = " + std::to_string(value));
    } else if (*ideal) {
      const IdealCheck c = check_ideal(read_dfa_file(file_a), limits);
      r.exit_code = c.ideal ? exit_holds : exit_fails;
      r.payload["verdict"] = c.ideal ? "ideal" : "not ideal";
      r.lines.push_back(c.ideal ? "ideal" : "not ideal");
      if (c.witness) {
        r.payload["witness"] = word_json(*c.witness);
        r.lines.push_back("witness: " + to_string(*c.witness));
      }
    } else if (*equal) {
      r = decision_result(syn_equality(read_dfa_file(file_a), read_dfa_file(file_b), limits), "equal", "not equal");
    } else if (*include) {
      r = decision_result(syn_inclusion(read_dfa_file(file_a), read_dfa_file(file_b), limits), "included",
                          "not included");
    } else if (*strict) {
      r = decision_result(syn_strict_inclusion(read_dfa_file(file_a), read_dfa_file(file_b), limits), "strict",
                          "not strict");
    } else if (*rc) {
      const Dfa d = read_dfa_file(file_a);
      const RcReport rep = rc_report(d, max_states, limits);
      const bool within = rep.rc_upper && *rep.rc_upper <= max_states;
      r.exit_code = within ? exit_holds : exit_fails;
      r.payload["verdict"] = rep.exact ? "exact" : "bound-only";
      r.payload["rc_lower"] = rep.rc_lower;
      r.payload["rc_upper"] = optional_count(rep.rc_upper);
      r.payload["sc"] = optional_count(rep.sc);
      r.payload["method"] = to_string(rep.method);
      Json levels = Json::array();
      for (const auto& l : rep.levels) {
        levels.push_back({{"states", l.states},
                          {"raw_tables", l.raw_tables},
                          {"canonical", l.canonical},
                          {"synchronizing", l.synchronizing},
                          {"full_checks", l.full_checks},
                          {"exhausted", l.exhausted}});
      }
      r.payload["levels"] = levels;
      if (rep.exact) {
        r.lines.push_back("rc = " + std::to_string(rep.rc_lower) + " (exact, " + to_string(rep.method) + ")");
      } else {
        r.lines.push_back("rc >= " + std::to_string(rep.rc_lower) + " (" + to_string(rep.method) + ")");
      }
      if (rep.sc) r.lines.push_back("sc = " + std::to_string(*rep.sc));
      if (rep.witness_msa && !output.empty()) {
        write_dfa_file(output, *rep.witness_msa);
        r.payload["output"] = output;
      }
    } else if (*intersect) {
      std::vector<Dfa> ds;
      for (const auto& f : files) ds.push_back(read_dfa_file(f));
      const auto w = intersection_nonempty(ReductionInstance(std::move(ds)), limits);
      r.exit_code = w ? exit_holds : exit_fails;
      r.payload["verdict"] = w ? "nonempty" : "empty";
      r.lines.push_back(w ? "nonempty" : "empty");
      if (w) {
        r.payload["witness"] = word_json(*w);
        r.lines.push_back("witness: " + to_string(*w));
      }
    } else if (*gen) {
      r.payload["verdict"] = "generated";
      if (*gen_a) {
        std::vector<std::string> paths = files;
        if (!manifest.empty())
          for (const auto& p : read_manifest(manifest)) paths.push_back(p.string());
        if (paths.empty()) throw Error("gadget-a needs component files or --manifest");
        std::vector<Dfa> ds;
        for (const auto& f : paths) ds.push_back(read_dfa_file(f));
        emit_automaton(r, build_gadget_A(normalize_instance(ReductionInstance(std::move(ds))), letters()), output);
      } else if (*gen_b || *gen_i) {
        const Alphabet sigma(split_ws(sigma_text));
        emit_automaton(r, *gen_b ? build_gadget_B(sigma, letters()) : build_witness_I(sigma, letters()), output);
      } else if (*gen_bin) {
        const Dfa d = read_dfa_file(file_a);
        const LetterOrder order(order_text.empty() ? d.alphabet().letters() : split_ws(order_text));
        emit_automaton(r, binarize(d, order), output);
      } else if (*gen_prod) {
        emit_automaton(r, product_sync(read_dfa_file(file_a), read_dfa_file(file_b)), output);
      }
    }
  } catch (const Error& e) {
    return report_error(e.what());
  }

  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
  if (r.nodes_expanded || timing) {
    Json stats = Json::object();
    if (r.nodes_expanded) stats["nodes_expanded"] = *r.nodes_expanded;
    if (timing) stats["elapsed_ms"] = elapsed;
    r.payload["stats"] = stats;
  }
  if (json) {
    out << r.payload.dump(2) << '\n';
  } else {
    for (const auto& line : r.lines) {
      out << line;
      if (line.empty() || line.back() != '\n') out << '\n';
    }
    if (r.nodes_expanded) out << "nodes expanded: " << *r.nodes_expanded << '\n';
    if (timing) out << "elapsed: " << elapsed << " ms\n";
  }
  return r.exit_code;
}

}  // namespace syncaut::cli
