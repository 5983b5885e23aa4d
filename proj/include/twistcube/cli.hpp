// Copyright 2026 The twistcube authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line surface: generation/export, hom enumeration, sort
// tables, embedding checks and the verification suites.  Output is
// byte-identical across runs for fixed flags.  Exit codes: 0 success,
// 1 verification failure, 2 usage error, 3 budget exceeded.

#ifndef TWISTCUBE_CLI_HPP_
#define TWISTCUBE_CLI_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "categories.hpp"
#include "exports.hpp"
#include "graph.hpp"
#include "pospace.hpp"
#include "shapes.hpp"
#include "verify.hpp"
#include "words.hpp"

namespace twistcube {
namespace cli {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

namespace detail {

inline std::optional<ShapeKind> parse_family(const std::string& name) {
  if (name == "simplex") return ShapeKind::simplex;
  if (name == "cube") return ShapeKind::cube;
  if (name == "twisted") return ShapeKind::twisted;
  if (name == "twisted-sorted") return ShapeKind::twisted_sorted;
  return std::nullopt;
}

struct GenOptions {
  std::string family;
  std::string flavor = "face";
  int dim = 0;
  std::string format = "json";
  bool recursive = false;
  bool highlight_hamiltonian = false;
};

inline int run_gen(const GenOptions& opt, std::ostream& out,
                   std::ostream& err) {
  const auto kind = parse_family(opt.family);
  if (!kind) {
    err << "unknown family: " << opt.family << "\n";
    return kExitUsage;
  }
  const Flavor flavor =
      opt.flavor == "reflexive" ? Flavor::reflexive : Flavor::face;
  const ShapeFamily family{*kind, flavor, opt.dim};
  const Graph g = opt.recursive ? recursive_graph(family) : shape_graph(family);
  if (opt.format == "json") {
    if (opt.highlight_hamiltonian) {
      err << "--highlight-hamiltonian needs --format dot\n";
      return kExitUsage;
    }
    out << graph_to_json(g) << "\n";
    return kExitOk;
  }
  std::optional<GraphPath> highlight;
  if (opt.highlight_hamiltonian) {
    if (*kind != ShapeKind::twisted || flavor != Flavor::face) {
      err << "--highlight-hamiltonian applies to the twisted face family\n";
      return kExitUsage;
    }
    highlight = twisted_hamiltonian(opt.dim);
  }
  out << graph_to_dot(g, highlight);
  return kExitOk;
}

struct HomsOptions {
  std::string cat;
  int src = 0;
  int dst = 0;
  bool list = false;
};

inline int run_homs(const HomsOptions& opt, std::ostream& out,
                    std::ostream& err) {
  const auto cat = category_from_name(opt.cat);
  if (!cat) {
    err << "unknown category: " << opt.cat << "\n";
    return kExitUsage;
  }
  const auto homs = hom_set(*cat, opt.src, opt.dst);
  if (opt.list) {
    for (const auto& f : homs) out << render_morphism(f) << "\n";
  } else {
    out << homs.size() << "\n";
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string suite = "all";
  int max_dim = 4;
  int max_obj = 3;
  std::uint64_t seed = 12345;
};

inline int run_verify(const VerifyOptions& opt, std::ostream& out) {
  SuiteOptions suite_opts;
  suite_opts.max_dim = opt.max_dim;
  suite_opts.max_obj = opt.max_obj;
  suite_opts.seed = opt.seed;
  const auto results = run_suite(opt.suite, suite_opts);
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    out << r.suite << "\t" << r.check << "\t" << (r.pass ? "pass" : "fail")
        << "\t" << r.witness << "\n";
  }
  return all_pass ? kExitOk : kExitVerificationFailure;
}

struct EmbedOptions {
  std::string family;
  int dim = 0;
  bool check = false;
  bool table = false;
};

inline int run_embed(const EmbedOptions& opt, std::ostream& out,
                     std::ostream& err) {
  RankKind kind;
  ShapeKind shape;
  if (opt.family == "cube") {
    kind = RankKind::standard;
    shape = ShapeKind::cube;
  } else if (opt.family == "twisted") {
    kind = RankKind::twisted;
    shape = ShapeKind::twisted;
  } else {
    err << "embed: family must be cube or twisted\n";
    return kExitUsage;
  }
  const RankedSpace space = kind == RankKind::standard
                                ? cube_pospace(opt.dim)
                                : twisted_pospace(opt.dim);
  if (opt.table) {
    for (const auto& b : BinaryWord::all(opt.dim)) {
      out << b.str() << "\t"
          << rational_str(rank(kind, emb(kind, b))) << "\n";
    }
    if (!opt.check) return kExitOk;
  }
  const auto report =
      can_embed(shape_graph({shape, Flavor::face, opt.dim}), space,
                [kind](const std::string& label) {
                  return emb(kind, BinaryWord::parse(label));
                });
  if (report.pass) {
    out << "pass\n";
    return kExitOk;
  }
  out << "fail\t" << report.reason;
  if (report.witness) {
    out << "\t<" << report.witness->first << ", " << report.witness->second
        << ">";
  }
  out << "\n";
  return kExitVerificationFailure;
}

}  // namespace detail

//! Parses and runs one invocation; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"twisted cube combinatorics kernel"};
  app.require_subcommand(1);

  detail::GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a family graph");
  gen_cmd->add_option("--family", gen.family,
                      "simplex|cube|twisted|twisted-sorted")
      ->required();
  gen_cmd->add_option("--flavor", gen.flavor, "face|reflexive")
      ->check(CLI::IsMember({"face", "reflexive"}));
  gen_cmd->add_option("--dim", gen.dim, "dimension")->required();
  gen_cmd->add_option("--format", gen.format, "json|dot")
      ->check(CLI::IsMember({"json", "dot"}));
  gen_cmd->add_flag("--recursive", gen.recursive,
                    "build by the family iterator");
  gen_cmd->add_flag("--highlight-hamiltonian", gen.highlight_hamiltonian,
                    "mark the Hamiltonian path in DOT output");

  detail::HomsOptions homs;
  auto* homs_cmd = app.add_subcommand("homs", "enumerate a hom-set");
  homs_cmd
      ->add_option("--cat", homs.cat,
                   "one of: simplex_semi_bin simplex_semi_comb "
                   "simplex_full_comb cube_semi_comb simplex_semi_graph "
                   "simplex_full_graph cube_semi_graph twisted_semi_graph "
                   "twisted_full_graph twisted_dim_graph")
      ->required();
  homs_cmd->add_option("--src", homs.src, "source object")->required();
  homs_cmd->add_option("--dst", homs.dst, "target object")->required();
  bool count_flag = false;
  homs_cmd->add_flag("--count", count_flag, "print the count (default)");
  homs_cmd->add_flag("--list", homs.list, "print one morphism per line");

  detail::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "run property suites");
  verify_cmd->add_option("--suite", verify.suite,
                         "graph|words|shapes|categories|pospace|all");
  verify_cmd->add_option("--max-dim", verify.max_dim, "dimension ceiling");
  verify_cmd->add_option("--max-obj", verify.max_obj,
                         "object ceiling for categories");
  verify_cmd->add_option("--seed", verify.seed, "seed for sampled checks");

  int sort_dim = 0;
  auto* sort_cmd =
      app.add_subcommand("sort-table", "Hamiltonian sort table as TSV");
  sort_cmd->add_option("--dim", sort_dim, "dimension")->required();

  detail::EmbedOptions embed;
  auto* embed_cmd =
      app.add_subcommand("embed", "check the pospace corner embedding");
  embed_cmd->add_option("--family", embed.family, "cube|twisted")->required();
  embed_cmd->add_option("--dim", embed.dim, "dimension")->required();
  embed_cmd->add_flag("--check", embed.check, "run the embedding check");
  embed_cmd->add_flag("--table", embed.table, "emit corner/rank TSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return detail::run_gen(gen, out, err);
    if (homs_cmd->parsed()) return detail::run_homs(homs, out, err);
    if (verify_cmd->parsed()) return detail::run_verify(verify, out);
    if (sort_cmd->parsed()) {
      out << sort_table(sort_dim);
      return kExitOk;
    }
    if (embed_cmd->parsed()) return detail::run_embed(embed, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cli
}  // namespace twistcube

#endif  // TWISTCUBE_CLI_HPP_
