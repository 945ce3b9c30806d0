#pragma once

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "interscal/box_geometry.hpp"
#include "interscal/embedding.hpp"
#include "interscal/io.hpp"
#include "interscal/quality.hpp"
#include "interscal/tops_pca.hpp"

namespace interscal {

enum class Subcommand { Distances, Embed, Pca, Stress, Plot, Gen };
enum class GenKind { Table, Dissim };

/// Everything run_cli needs; parse_args fills one of these from argv.
/// plot_a/plot_b are 1-based, matching what users type.
struct RunConfig {
  Subcommand command = Subcommand::Embed;
  std::string input;
  std::string output;     // empty -> stdout
  std::string embedding;  // stress: path of the embedding CSV
  std::string svg;        // embed: optional rectangle plot path
  std::size_t dims = 2;
  SelfMode self_mode = SelfMode::PairwiseZero;
  bool standardize = false;
  std::size_t plot_a = 1;
  std::size_t plot_b = 2;
  OutputFormat format = OutputFormat::Csv;
  std::uint64_t seed = 12345;
  GenKind gen_kind = GenKind::Table;
  std::size_t gen_objects = 6;
  std::size_t gen_vars = 3;
};

namespace detail {

inline void deliver(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    write_file(path, text);
  }
}

inline IntervalTable require_table(
    std::variant<IntervalTable, IntervalDissimMatrix>&& parsed,
    const char* verb) {
  if (auto* t = std::get_if<IntervalTable>(&parsed)) return std::move(*t);
  throw InvalidInput(std::string(verb) +
                     " expects a feature table ('object,' header)");
}

inline IntervalDissimMatrix require_dissim(
    std::variant<IntervalTable, IntervalDissimMatrix>&& parsed,
    const char* verb) {
  if (auto* d = std::get_if<IntervalDissimMatrix>(&parsed)) {
    return std::move(*d);
  }
  throw InvalidInput(std::string(verb) +
                     " expects a dissimilarity matrix ('dissim,' header)");
}

inline IntervalTable random_table(std::uint64_t seed, std::size_t m,
                                  std::size_t n) {
  if (m == 0 || n == 0) throw InvalidInput("gen needs objects >= 1, vars >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> center(-5.0, 5.0);
  std::uniform_real_distribution<double> halfwidth(0.0, 1.0);
  std::vector<Box> rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Interval> coords;
    coords.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double c = center(rng);
      const double h = halfwidth(rng);
      coords.emplace_back(c - h, c + h);
    }
    rows.emplace_back(std::move(coords));
  }
  return IntervalTable(std::move(rows), {});
}

inline void run_gen(const RunConfig& cfg) {
  const IntervalTable table =
      random_table(cfg.seed, cfg.gen_objects, cfg.gen_vars);
  if (cfg.gen_kind == GenKind::Table) {
    deliver(cfg.output, write_interval_table(table));
    return;
  }
  IntervalDissimMatrix d = interval_distance_matrix(table);
  if (cfg.self_mode == SelfMode::PairwiseZero) {
    std::vector<std::vector<Interval>> entries = d.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      entries[i][i] = Interval(0.0, 0.0);
    }
    d = IntervalDissimMatrix(SelfMode::PairwiseZero, std::move(entries),
                             d.labels());
  }
  deliver(cfg.output, write_dissim_matrix(d));
}

}  // namespace detail

/// Executes one subcommand. Returns 0 on success (warnings allowed on
/// stderr), 1 on validation/processing errors, 2 on file-system errors.
/// Output is a pure function of the config and input file contents.
inline int run_cli(const RunConfig& cfg) {
  try {
    switch (cfg.command) {
      case Subcommand::Distances: {
        const IntervalTable table = detail::require_table(
            parse_interval_csv(read_file(cfg.input), cfg.self_mode),
            "distances");
        detail::deliver(cfg.output, write_dissim_matrix(
                                        interval_distance_matrix(table)));
        break;
      }
      case Subcommand::Embed: {
        const IntervalDissimMatrix delta = detail::require_dissim(
            parse_interval_csv(read_file(cfg.input), cfg.self_mode), "embed");
        const IntervalEmbedding e = embed(delta, cfg.dims);
        if (e.rank_deficient) {
          std::fprintf(stderr,
                       "warning: positive rank %zu below requested %zu "
                       "dimensions; trailing coordinates are zero\n",
                       e.positive_rank, cfg.dims);
        }
        detail::deliver(cfg.output, emit_embedding(e, cfg.format));
        if (!cfg.svg.empty()) {
          write_file(cfg.svg,
                     plot_rectangles(e, cfg.plot_a - 1, cfg.plot_b - 1));
        }
        break;
      }
      case Subcommand::Pca: {
        const IntervalTable table = detail::require_table(
            parse_interval_csv(read_file(cfg.input), cfg.self_mode), "pca");
        const TopsPcaResult r = tops_pca(table, cfg.dims, cfg.standardize);
        if (r.positive_rank < cfg.dims) {
          std::fprintf(stderr,
                       "warning: positive rank %zu below requested %zu "
                       "components\n",
                       r.positive_rank, cfg.dims);
        }
        detail::deliver(cfg.output, emit_pca(r, cfg.format));
        break;
      }
      case Subcommand::Stress: {
        const IntervalDissimMatrix delta = detail::require_dissim(
            parse_interval_csv(read_file(cfg.input), cfg.self_mode), "stress");
        const EmbeddingFile file = parse_embedding_csv(read_file(cfg.embedding));
        const StressReport report =
            embedding_stress(delta, file.as_embedding());
        detail::deliver(cfg.output,
                        emit_stress(report, delta.labels(), cfg.format));
        break;
      }
      case Subcommand::Plot: {
        const EmbeddingFile file = parse_embedding_csv(read_file(cfg.input));
        detail::deliver(cfg.output,
                        plot_rectangles(file.interval_coords, file.labels,
                                        cfg.plot_a - 1, cfg.plot_b - 1));
        break;
      }
      case Subcommand::Gen:
        detail::run_gen(cfg);
        break;
    }
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

/// Parses argv into a RunConfig and dispatches. Returns the process exit
/// code; CLI11 usage errors map to 1, --help to 0.
inline int cli_main(int argc, char** argv) {
  CLI::App app{"interval-valued multidimensional scaling toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string self_mode = "pairwise";
  std::string format = "csv";
  std::string plot_dims = "1,2";
  std::string kind = "table";

  const auto add_io = [&](CLI::App* sub, bool input_required) {
    sub->add_option("--input", cfg.input, "input CSV path")
        ->required(input_required);
    sub->add_option("--output", cfg.output, "output path (default: stdout)");
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  const auto add_self_mode = [&](CLI::App* sub) {
    sub->add_option("--self-mode", self_mode,
                    "diagonal convention when the file does not state one")
        ->check(CLI::IsMember({"pairwise", "feature"}));
  };

  CLI::App* distances = app.add_subcommand(
      "distances", "interval distance matrix of a feature table");
  add_io(distances, true);

  CLI::App* embed_cmd = app.add_subcommand(
      "embed", "scale a dissimilarity matrix into interval coordinates");
  add_io(embed_cmd, true);
  embed_cmd->add_option("--dims", cfg.dims, "embedding dimensions")
      ->check(CLI::PositiveNumber);
  add_self_mode(embed_cmd);
  add_format(embed_cmd);
  embed_cmd->add_option("--svg", cfg.svg, "also write a rectangle plot here");
  embed_cmd->add_option("--plot-dims", plot_dims,
                        "1-based dimension pair for --svg, e.g. 1,2");

  CLI::App* pca = app.add_subcommand(
      "pca", "vertex-matrix principal components of a feature table");
  add_io(pca, true);
  pca->add_option("--dims", cfg.dims, "number of components")
      ->check(CLI::PositiveNumber);
  pca->add_flag("--standardize", cfg.standardize,
                "scale vertex columns to unit variance");
  add_format(pca);

  CLI::App* stress = app.add_subcommand(
      "stress", "stress of an embedding against its dissimilarity matrix");
  add_io(stress, true);
  stress->add_option("--embedding", cfg.embedding, "embedding CSV path")
      ->required();
  add_self_mode(stress);
  add_format(stress);

  CLI::App* plot =
      app.add_subcommand("plot", "SVG rectangle plot of an embedding CSV");
  add_io(plot, true);
  plot->add_option("--plot-dims", plot_dims,
                   "1-based dimension pair, e.g. 1,2");

  CLI::App* gen = app.add_subcommand(
      "gen", "deterministic random test data (table or dissimilarity)");
  add_io(gen, false);
  gen->add_option("--kind", kind, "what to generate")
      ->check(CLI::IsMember({"table", "dissim"}));
  gen->add_option("--objects", cfg.gen_objects, "object count")
      ->check(CLI::PositiveNumber);
  gen->add_option("--vars", cfg.gen_vars, "variable count")
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", cfg.seed, "RNG seed");
  add_self_mode(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  cfg.self_mode = self_mode == "feature" ? SelfMode::FeatureDerived
                                         : SelfMode::PairwiseZero;
  cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  cfg.gen_kind = kind == "dissim" ? GenKind::Dissim : GenKind::Table;
  const std::size_t comma = plot_dims.find(',');
  if (comma == std::string::npos) {
    std::fprintf(stderr, "error: --plot-dims wants two 1-based numbers a,b\n");
    return 1;
  }
  cfg.plot_a = std::strtoull(plot_dims.c_str(), nullptr, 10);
  cfg.plot_b = std::strtoull(plot_dims.c_str() + comma + 1, nullptr, 10);
  if (cfg.plot_a == 0 || cfg.plot_b == 0) {
    std::fprintf(stderr, "error: --plot-dims entries are 1-based\n");
    return 1;
  }

  if (distances->parsed()) cfg.command = Subcommand::Distances;
  if (embed_cmd->parsed()) cfg.command = Subcommand::Embed;
  if (pca->parsed()) cfg.command = Subcommand::Pca;
  if (stress->parsed()) cfg.command = Subcommand::Stress;
  if (plot->parsed()) cfg.command = Subcommand::Plot;
  if (gen->parsed()) cfg.command = Subcommand::Gen;

  return run_cli(cfg);
}

}  // namespace interscal
