#include "fg/cli.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fg/algext.hpp"
#include "fg/errors.hpp"
#include "fg/io.hpp"
#include "fg/lattice.hpp"
#include "fg/properties.hpp"
#include "fg/whitehead.hpp"

namespace fg::cli {

namespace {

struct SubgroupSpec {
  std::string gens;        // comma-separated words
  std::string words_file;  // one word per line, # comments
  std::string graph_file;  // structured JSON record
};

void add_subgroup_options(CLI::App* cmd, SubgroupSpec& s,
                          const std::string& suffix,
                          const std::string& what) {
  auto* g = cmd->add_option("--gens" + suffix, s.gens,
                            "comma-separated generators of " + what);
  auto* f = cmd->add_option("--file" + suffix, s.words_file,
                            "file with one generator per line for " + what);
  auto* j = cmd->add_option("--graph" + suffix, s.graph_file,
                            "JSON graph record file for " + what);
  g->excludes(f)->excludes(j);
  f->excludes(j);
}

std::vector<Word> parse_gens(const std::string& text, int rank) {
  std::vector<Word> words;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    Word w = parse_word(item, rank);
    if (!w.empty()) words.push_back(w);
  }
  return words;
}

StallingsGraph load_subgroup(const SubgroupSpec& s, int rank) {
  if (!s.graph_file.empty()) {
    std::ifstream in(s.graph_file);
    if (!in) throw ParseError("cannot open " + s.graph_file);
    std::stringstream buf;
    buf << in.rdbuf();
    StallingsGraph g = graph_from_json(buf.str());
    if (rank > 0 && g.rank() != rank) {
      throw ParseError("graph record rank " + std::to_string(g.rank()) +
                       " conflicts with --rank " + std::to_string(rank));
    }
    return g;
  }
  if (rank <= 0) throw ParseError("--rank is required");
  if (!s.words_file.empty()) {
    std::ifstream in(s.words_file);
    if (!in) throw ParseError("cannot open " + s.words_file);
    std::vector<Word> words;
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      Word w = parse_word(line, rank);
      if (!w.empty()) words.push_back(w);
    }
    return StallingsGraph::build(rank, words);
  }
  return StallingsGraph::build(rank, parse_gens(s.gens, rank));
}

std::string basis_string(const StallingsGraph& g) {
  std::vector<Word> basis = g.basis();
  if (basis.empty()) return "(trivial)";
  std::string s;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) s += ", ";
    s += to_string(basis[i]);
  }
  return s;
}

void print_graph(std::ostream& out, const StallingsGraph& g, bool json) {
  if (json) {
    out << graph_to_json(g) << "\n";
    return;
  }
  out << "rank " << g.subgroup_rank() << ", " << g.vertex_count()
      << " vertices, " << g.edge_count() << " edges, index ";
  if (auto idx = g.index()) {
    out << *idx;
  } else {
    out << "infinite";
  }
  out << "\n";
  out << "basis: " << basis_string(g) << "\n";
  for (const Edge& e : g.edges()) {
    out << e.source << " -" << static_cast<char>('a' + e.gen) << "-> "
        << e.target << "\n";
  }
}

void print_set(std::ostream& out, const SubgroupSet& set, bool json) {
  if (json) {
    out << "[\n";
    bool first = true;
    for (const StallingsGraph& g : set) {
      if (!first) out << ",\n";
      first = false;
      out << graph_to_json(g);
    }
    out << "\n]\n";
    return;
  }
  out << set.size() << " subgroup" << (set.size() == 1 ? "" : "s") << "\n";
  for (const StallingsGraph& g : set) {
    out << "rank " << g.subgroup_rank() << ": " << basis_string(g) << "\n";
  }
}

PropertyPredicate parse_property(const std::string& prop) {
  if (prop == "pure") return PropertyPredicate::pure();
  if (prop == "malnormal") return PropertyPredicate::malnormal();
  if (prop == "ealg") return PropertyPredicate::ealg_closed();
  if (prop.rfind("p-pure:", 0) == 0) {
    int p = 0;
    try {
      p = std::stoi(prop.substr(7));
    } catch (const std::exception&) {
      throw ParseError("bad p-pure parameter in --prop " + prop);
    }
    return PropertyPredicate::p_pure(p);
  }
  throw ParseError("unknown property: " + prop);
}

int conjecture_explore(std::ostream& out, const StallingsGraph& h,
                       int samples, int move_length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& moves = enumerate_whitehead(h.rank());
  std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);

  SubgroupSet intersection = fringe(h);
  for (int s = 0; s < samples; ++s) {
    std::vector<WhiteheadAutomorphism> seq;
    for (int i = 0; i < move_length; ++i) seq.push_back(moves[pick(rng)]);
    SubgroupSet other = fringe_in_basis(h, seq);
    SubgroupSet narrowed;
    for (const StallingsGraph& g : intersection) {
      if (other.contains(g)) narrowed.insert(g);
    }
    intersection = narrowed;
  }

  SubgroupSet ae = algebraic_extensions(h);
  out << "fringe size: " << fringe(h).size() << "\n";
  out << "intersection over " << samples << " sampled bases:\n";
  print_set(out, intersection, false);
  out << "algebraic extensions:\n";
  print_set(out, ae, false);

  bool contained = true;
  for (const StallingsGraph& g : ae) {
    if (!intersection.contains(g)) contained = false;
  }
  if (!contained) {
    out << "ERROR: AE(H) not contained in the intersection\n";
    throw InternalInconsistency(
        "conjecture explorer: AE(H) escaped the basis-fringe intersection");
  }
  out << "AE(H) is contained in the intersection\n";
  bool proper = intersection.size() > ae.size();
  out << (proper ? "inclusion is proper for these samples\n"
                 : "intersection equals AE(H) for these samples\n");
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finitely generated subgroups of free groups"};
  app.require_subcommand(1);

  int rank = 0;
  bool json = false;
  SubgroupSpec first, second;
  std::string word_text, prop_text;
  int samples = 10, move_length = 3;
  std::uint64_t seed = 1;

  int exit_code = 0;

  auto subgroup_cmd = [&](const std::string& name, const std::string& desc,
                          bool with_second = false) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("--rank", rank, "ambient free group rank");
    cmd->add_flag("--json", json, "emit structured graph records");
    add_subgroup_options(cmd, first, "", "the subgroup");
    if (with_second) {
      add_subgroup_options(cmd, second, "2", "the second subgroup");
    }
    return cmd;
  };

  auto h = [&] { return load_subgroup(first, rank); };
  auto k = [&] { return load_subgroup(second, rank); };

  subgroup_cmd("fold", "fold generators or a graph record into a "
                       "Stallings graph")
      ->callback([&] { print_graph(out, h(), json); });

  CLI::App* member = subgroup_cmd("member", "test membership of a word");
  member->add_option("--word", word_text, "the word")->required();
  member->callback([&] {
    bool in = h().contains(parse_word(word_text, rank));
    out << (in ? "true" : "false") << "\n";
    exit_code = in ? 0 : 1;
  });

  subgroup_cmd("rank", "rank of the subgroup")->callback([&] {
    out << h().subgroup_rank() << "\n";
  });

  subgroup_cmd("basis", "free basis of the subgroup")->callback([&] {
    for (const Word& w : h().basis()) out << to_string(w) << "\n";
  });

  CLI::App* express = subgroup_cmd("express",
                                   "rewrite a member over the basis");
  express->add_option("--word", word_text, "the word")->required();
  express->callback([&] {
    StallingsGraph g = h();
    out << to_string(g.express(parse_word(word_text, rank))) << "\n";
  });

  subgroup_cmd("index", "index of the subgroup")->callback([&] {
    if (auto idx = h().index()) {
      out << *idx << "\n";
    } else {
      out << "infinite\n";
    }
  });

  subgroup_cmd("leq", "test containment of the first subgroup in the "
                      "second", true)
      ->callback([&] {
        bool le = leq(h(), k()).has_value();
        out << (le ? "true" : "false") << "\n";
        exit_code = le ? 0 : 1;
      });

  subgroup_cmd("intersect", "intersection of two subgroups", true)
      ->callback([&] { print_graph(out, intersect(h(), k()), json); });

  subgroup_cmd("join", "join of two subgroups", true)->callback([&] {
    print_graph(out, join(h(), k()), json);
  });

  subgroup_cmd("fringe", "all principal overgroups")->callback([&] {
    print_set(out, fringe(h()), json);
  });

  subgroup_cmd("takahasi", "the principal overgroup through which the "
                           "second subgroup factors", true)
      ->callback([&] { print_graph(out, takahasi_factor(h(), k()), json); });

  subgroup_cmd("ae", "algebraic extensions")->callback([&] {
    print_set(out, algebraic_extensions(h()), json);
  });

  subgroup_cmd("algclosure", "algebraic closure of the first subgroup "
                             "inside the second", true)
      ->callback([&] { print_graph(out, algebraic_closure(h(), k()), json); });

  CLI::App* closure = subgroup_cmd("closure", "closure under a property");
  closure
      ->add_option("--prop", prop_text,
                   "pure | p-pure:<p> | malnormal | ealg")
      ->required();
  closure->callback([&] {
    StallingsGraph g = h();
    if (prop_text == "ealg") {
      print_graph(out, ealg_closure(g), json);
    } else {
      print_graph(out, property_closure(g, parse_property(prop_text)), json);
    }
  });

  CLI::App* is = subgroup_cmd("is", "test a subgroup property", true);
  is->add_option("--prop", prop_text,
                 "pure | p-pure:<p> | malnormal | compressed | ealg-closed "
                 "| free-factor | primitive | algebraic")
      ->required();
  is->add_option("--word", word_text, "the word, for primitive");
  is->callback([&] {
    bool result;
    if (prop_text == "compressed") {
      result = is_compressed(h());
    } else if (prop_text == "ealg-closed") {
      result = is_ealg_closed(h());
    } else if (prop_text == "free-factor") {
      result = is_free_factor(h(), k());
    } else if (prop_text == "algebraic") {
      result = is_algebraic(h(), k());
    } else if (prop_text == "primitive") {
      if (word_text.empty()) throw ParseError("primitive needs --word");
      result = is_primitive(parse_word(word_text, rank), h());
    } else {
      result = satisfies(h(), parse_property(prop_text));
    }
    out << (result ? "true" : "false") << "\n";
    exit_code = result ? 0 : 1;
  });

  CLI::App* explore = subgroup_cmd("conjecture-explore",
                                   "sample basis changes and intersect "
                                   "the resulting fringes");
  explore->add_option("--samples", samples, "number of sampled sequences");
  explore->add_option("--move-length", move_length,
                      "moves per sampled sequence");
  explore->add_option("--seed", seed, "RNG seed");
  explore->callback(
      [&] { exit_code = conjecture_explore(out, h(), samples, move_length,
                                           seed); });

  subgroup_cmd("dot", "DOT export of the Stallings graph")->callback([&] {
    out << graph_to_dot(h());
  });

  try {
    // CLI11 consumes the argument vector in reverse order
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace fg::cli
