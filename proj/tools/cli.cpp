#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "ashg/cis.hpp"
#include "ashg/gadgets.hpp"
#include "ashg/io.hpp"
#include "ashg/stability.hpp"

namespace ashg::cli {

namespace {

struct Sink {
  std::ostream& out;
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) out << text;
    else write_text_file(path, text);
  }
};

std::string join_indices(const std::vector<std::size_t>& xs) {
  std::string s;
  for (auto x : xs) s += ' ' + std::to_string(x);
  return s;
}

struct WeightsArg {
  std::string list;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* w = cmd->add_option("-w,--weights", list, "Comma-separated positive integers");
    auto* f = cmd->add_option("--weights-file", file, "One integer per line");
    w->excludes(f);
    f->excludes(w);
  }

  gadgets::PartitionInstance load() const {
    if (!file.empty()) return gadgets::parse_weights(read_text_file(file));
    return gadgets::parse_weights(list);
  }
};

std::string describe_move(const Game& game, const DeviationMove& m) {
  std::string s = "move " + game.label(m.player) + " -> ";
  s += m.to ? format_coalition(game, *m.to) : std::string("empty");
  return s + "\n";
}

std::string describe_witness(const Game& game, const StabilityVerdict& verdict) {
  return std::visit(
      [&](const auto& w) -> std::string {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, DeviationMove>) {
          return describe_move(game, w);
        } else if constexpr (std::is_same_v<W, BlockingWitness>) {
          return "blocking " + format_coalition(game, w.coalition) + "\n";
        } else if constexpr (std::is_same_v<W, Partition>) {
          return "pareto-dominating:\n" + serialize_partition(game, w);
        } else {
          return "stable\n";
        }
      },
      verdict.witness);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stability tools for additively separable hedonic games", "ashg"};
  app.require_subcommand(1);

  int status = kOk;
  int threads = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a game file")->require_subcommand(1);
  std::string gen_out, gen_partition_out, e3c_spec;
  WeightsArg gen_weights;
  auto* gen_six = gen->add_subcommand("example6", "Six-player game with an empty core");
  auto* gen_e3c = gen->add_subcommand("e3c", "Game reduced from an exact-cover instance");
  auto* gen_part = gen->add_subcommand("partition", "Game reduced from a PARTITION instance");
  for (auto* c : {gen_six, gen_e3c, gen_part})
    c->add_option("-o,--out", gen_out, "Game file (default: standard output)");
  gen_e3c->add_option("--spec", e3c_spec, "E3C spec file")->required();
  gen_weights.attach(gen_part);
  gen_part->add_option("--partition-out", gen_partition_out,
                       "Grand-coalition partition file (default: <out>.partition)");

  gen_six->callback([&] {
    Sink{out, gen_out}.write(serialize_game(gadgets::example_six_player()));
  });
  gen_e3c->callback([&] {
    const auto inst = gadgets::parse_e3c(read_text_file(e3c_spec));
    inst.validate();
    Sink{out, gen_out}.write(serialize_game(gadgets::reduce_e3c(inst).game));
  });
  gen_part->callback([&] {
    const auto g = gadgets::reduce_partition(gen_weights.load());
    Sink{out, gen_out}.write(serialize_game(g.gadget.game));
    std::string ppath = gen_partition_out;
    if (ppath.empty() && !gen_out.empty()) ppath = gen_out + ".partition";
    if (!ppath.empty()) write_text_file(ppath, serialize_partition(g.gadget.game, g.grand));
  });

  // solve-cis
  auto* solve = app.add_subcommand("solve-cis", "Compute a contractually individually stable partition");
  std::string solve_game, solve_out, trace_out, order = "lowest";
  std::optional<std::uint64_t> seed;
  solve->add_option("game", solve_game, "Game file")->required();
  auto* order_opt = solve->add_option("--order", order, "Player pick order")
                        ->check(CLI::IsMember({"lowest"}));
  solve->add_option("--seed", seed, "Pick players in a seeded random order")->excludes(order_opt);
  solve->add_option("--trace", trace_out, "Write the construction trace to this file");
  solve->add_option("-o,--out", solve_out, "Partition file (default: standard output)");
  solve->callback([&] {
    const Game game = parse_game(read_text_file(solve_game));
    const auto policy = seed ? OrderPolicy::seeded(*seed) : OrderPolicy::lowest_index();
    const auto result = compute_cis(game, policy);
    if (auto dev = find_cis_deviation(game, result.partition)) {
      err << "constructed partition is not contractually individually stable: "
          << describe_move(game, *dev);
      status = kError;
      return;
    }
    Sink{out, solve_out}.write(serialize_partition(game, result.partition));
    if (!trace_out.empty()) write_text_file(trace_out, serialize_trace(game, result.trace));
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a partition against a stability concept");
  std::string verify_game, verify_partition, concept_name;
  SearchOptions options;
  verify_cmd->add_option("game", verify_game, "Game file")->required();
  verify_cmd->add_option("partition", verify_partition, "Partition file")->required();
  verify_cmd->add_option("-c,--concept", concept_name, "ns|is|cis|core|strict-core|csc|pareto|ir")
      ->required()
      ->check(CLI::IsMember({"ns", "is", "cis", "core", "strict-core", "csc", "pareto", "ir"}));
  verify_cmd->add_option("--subset-cap", options.subset_cap, "Largest game for coalition search");
  verify_cmd->add_option("--partition-cap", options.partition_cap, "Largest game for partition search");
  verify_cmd->add_option("--threads", threads, "Worker threads (0: all)");
  verify_cmd->callback([&] {
    const Game game = parse_game(read_text_file(verify_game));
    const Partition partition = parse_partition(game, read_text_file(verify_partition));
    options.threads = threads;
    const auto verdict = verify(game, partition, *parse_concept(concept_name), options);
    out << describe_witness(game, verdict);
    status = verdict.stable() ? kOk : kNegative;
  });

  // search
  auto* search = app.add_subcommand("search", "Search all partitions for a (strict) core stable one");
  std::string search_game, search_concept = "core";
  std::size_t cap = 12;
  search->add_option("game", search_game, "Game file")->required();
  search->add_option("-c,--concept", search_concept, "core|strict-core")
      ->check(CLI::IsMember({"core", "strict-core"}));
  search->add_option("--cap", cap, "Largest game to enumerate");
  search->add_option("--threads", threads, "Worker threads (0: all)");
  search->callback([&] {
    const Game game = parse_game(read_text_file(search_game));
    SearchOptions opts;
    opts.partition_cap = cap;
    opts.threads = threads;
    const auto variant = search_concept == "core" ? CoreVariant::core : CoreVariant::strict_core;
    if (auto p = core_exists(game, variant, opts)) {
      out << serialize_partition(game, *p);
    } else {
      out << "none\n";
      status = kNegative;
    }
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force source-problem oracles")->require_subcommand(1);
  std::string oracle_spec;
  WeightsArg oracle_weights;
  auto* oracle_e3c = oracle->add_subcommand("e3c", "Exact cover by 3-sets");
  oracle_e3c->add_option("--spec", oracle_spec, "E3C spec file")->required();
  auto* oracle_part = oracle->add_subcommand("partition", "Equal-sum split of weights");
  oracle_weights.attach(oracle_part);
  oracle_e3c->callback([&] {
    const auto inst = gadgets::parse_e3c(read_text_file(oracle_spec));
    inst.validate();
    if (auto cover = gadgets::solve_e3c(inst)) {
      out << "cover:" << join_indices(*cover) << "\n";
    } else {
      out << "none\n";
      status = kNegative;
    }
  });
  oracle_part->callback([&] {
    const auto inst = oracle_weights.load();
    inst.validate();
    if (auto side = gadgets::solve_partition(inst)) {
      out << "A1:" << join_indices(*side) << "\n";
    } else {
      out << "none\n";
      status = kNegative;
    }
  });

  std::vector<std::string> argv_storage{"ashg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return status;
}

}  // namespace ashg::cli
