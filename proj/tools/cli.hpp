#pragma once

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "critplanar/critplanar.hpp"

namespace critplanar::cli {

// Exit statuses are part of the command-line contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;     // not critical / no coloring / nonplanar
inline constexpr int kExitInput = 2;        // syntax, I/O, decode, usage
inline constexpr int kExitConstruction = 3; // operator precondition violated
inline constexpr int kExitSizeGuard = 4;

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooLarge: return kExitSizeGuard;
    case ErrorCode::ArityError:
    case ErrorCode::EvenOperandCount:
    case ErrorCode::InvalidFacePath:
    case ErrorCode::IdentificationCollision:
    case ErrorCode::CrossEdgeExists:
    case ErrorCode::EdgeAbsent:
    case ErrorCode::SelfLoopWouldForm:
      return kExitConstruction;
    default: return kExitInput;
  }
}

/// One resolved input: a graph plus composition metadata when it came from a recipe.
struct LoadedInput {
  ComposedGraph composed;
  bool from_recipe = false;
};

/// A path to .g6/.el/.recipe when the file exists, otherwise an inline recipe.
inline LoadedInput load_input(const std::string& source, bool unsafe_even) {
  namespace fs = std::filesystem;
  RecipeOptions parse_opts{unsafe_even};
  EvalOptions eval_opts;
  eval_opts.ring.allow_even = unsafe_even;
  std::error_code ec;
  const fs::path path(source);
  if (fs::is_regular_file(path, ec)) {
    if (path.extension() == ".recipe") {
      eval_opts.base_dir = path.parent_path().empty() ? fs::path(".") : path.parent_path();
      return {evaluate_recipe(parse_recipe(read_text_file(path), parse_opts), eval_opts), true};
    }
    LoadedInput in;
    in.composed.graph = read_graph_file(path);
    in.composed.operand_maps.push_back(VertexMap::identity(in.composed.graph.vertex_count()));
    return in;
  }
  return {evaluate_recipe(parse_recipe(source, parse_opts), eval_opts), true};
}

inline std::string render(const ComposedGraph& c, GraphFormat format, bool with_metadata) {
  switch (format) {
    case GraphFormat::Graph6: return encode_graph6(c.graph) + "\n";
    case GraphFormat::EdgeList: return encode_edge_list(c.graph);
    case GraphFormat::Dot: return export_dot(c.graph, with_metadata ? &c : nullptr);
  }
  return {};
}

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) out << text;
  else write_text_file(out_path, text);
}

inline GraphFormat choose_format(const std::string& flag, const std::string& out_path) {
  if (!flag.empty()) return parse_format(flag);
  if (!out_path.empty())
    if (auto f = format_for_path(out_path)) return *f;
  return GraphFormat::Graph6;
}

/// "v=c,v=c,..." -> partial coloring.
inline PartialColoring parse_fix(const std::string& text) {
  PartialColoring fixed;
  std::stringstream list(text);
  std::string entry;
  while (std::getline(list, entry, ',')) {
    entry.erase(std::remove_if(entry.begin(), entry.end(), [](unsigned char ch) { return std::isspace(ch); }),
                entry.end());
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    auto is_number = [](const std::string& s) {
      return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
    };
    if (eq == std::string::npos || !is_number(entry.substr(0, eq)) || !is_number(entry.substr(eq + 1)))
      throw Error(ErrorCode::SyntaxError, "bad --fix entry '" + entry + "' (expected vertex=color)");
    const auto v = static_cast<VertexId>(std::stol(entry.substr(0, eq)));
    const auto c = static_cast<Color>(std::stol(entry.substr(eq + 1)));
    if (!fixed.assigned.emplace(v, c).second)
      throw Error(ErrorCode::SyntaxError, "vertex " + std::to_string(v) + " fixed twice");
  }
  return fixed;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build 4-critical planar graphs by composition and verify them by exhaustive search",
               "critplanar"};
  app.require_subcommand(1);

  std::string input, out_path, format_flag, fix, family_name;
  int k = 4;
  bool unsafe_even = false;
  bool show_rotation = false;
  std::size_t max_n = SolverOptions{}.max_vertices;
  unsigned jobs = 0;

  auto* construct = app.add_subcommand("construct", "Evaluate a recipe and write the composed graph");
  construct->add_option("recipe", input, "Inline recipe or .recipe file")->required();
  construct->add_option("--out", out_path, "Output file (default: standard output)");
  construct->add_option("--format", format_flag, "g6, el or dot")->check(CLI::IsMember({"g6", "el", "dot"}));
  construct->add_flag("--unsafe-even", unsafe_even, "Allow rings with an even operand count");

  auto* verify = app.add_subcommand("verify", "Check k-criticality and write a report");
  verify->add_option("input", input, "Graph file (.g6/.el), .recipe file or inline recipe")->required();
  verify->add_option("--k", k, "Target chromatic number")->check(CLI::Range(2, 64));
  verify->add_option("--out", out_path, "Report file (default: standard output)");
  verify->add_option("--max-n", max_n, "Solver size guard");
  verify->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  verify->add_flag("--unsafe-even", unsafe_even, "Allow rings with an even operand count");

  auto* family = app.add_subcommand("family", "Emit a member of a named graph family");
  family->add_option("name", family_name, "Family name (k4ring)")->required();
  family->add_option("--k", k, "Family parameter")->check(CLI::Range(1, 1000));
  family->add_option("--out", out_path, "Output file (default: standard output)");
  family->add_option("--format", format_flag, "g6, el or dot")->check(CLI::IsMember({"g6", "el", "dot"}));

  auto* color = app.add_subcommand("color", "Find a proper k-coloring");
  color->add_option("input", input, "Graph file, .recipe file or inline recipe")->required();
  color->add_option("--k", k, "Number of colors")->check(CLI::Range(1, 64));
  color->add_option("--fix", fix, "Pinned colors, e.g. 0=0,3=1");
  color->add_option("--max-n", max_n, "Solver size guard");
  color->add_flag("--unsafe-even", unsafe_even, "Allow rings with an even operand count");

  auto* planar = app.add_subcommand("planar", "Test planarity");
  planar->add_option("input", input, "Graph file, .recipe file or inline recipe")->required();
  planar->add_flag("--rotation", show_rotation, "Print the rotation system of the embedding");
  planar->add_flag("--unsafe-even", unsafe_even, "Allow rings with an even operand count");

  auto* xport = app.add_subcommand("export", "Transcode a graph");
  xport->add_option("input", input, "Graph file, .recipe file or inline recipe")->required();
  xport->add_option("--format", format_flag, "g6, el or dot")->check(CLI::IsMember({"g6", "el", "dot"}));
  xport->add_option("--out", out_path, "Output file (default: standard output)");
  xport->add_flag("--unsafe-even", unsafe_even, "Allow rings with an even operand count");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (construct->parsed()) {
      const auto in = load_input(input, unsafe_even);
      const auto& g = in.composed.graph;
      err << "n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
      for (const auto& w : in.composed.warnings) err << "warning: " << w << "\n";
      emit(render(in.composed, choose_format(format_flag, out_path), true), out_path, out);
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto in = load_input(input, unsafe_even);
      VerifyOptions opts;
      opts.solver.max_vertices = max_n;
      opts.jobs = jobs;
      const auto report = verify_k_critical(in.composed.graph, k, opts);
      emit(serialize_report(report), out_path, out);
      err << "n=" << in.composed.graph.vertex_count() << " m=" << in.composed.graph.edge_count()
          << " chromatic=" << (report.chromatic_exceeds_bound ? ">" + std::to_string(report.k + 1)
                                                              : std::to_string(report.chromatic))
          << " planar=" << (report.planar ? "true" : "false")
          << " failing_edges=" << report.failing_edges.size()
          << " is_k_critical=" << (report.is_k_critical ? "true" : "false") << "\n";
      return report.is_k_critical ? kExitOk : kExitNegative;
    }

    if (family->parsed()) {
      if (family_name != "k4ring") {
        err << "error: unknown family '" << family_name << "' (known: k4ring)\n";
        return kExitInput;
      }
      const auto c = k4_ring_family(k);
      err << "n=" << c.graph.vertex_count() << " m=" << c.graph.edge_count() << "\n";
      emit(render(c, choose_format(format_flag, out_path), true), out_path, out);
      return kExitOk;
    }

    if (color->parsed()) {
      const auto fixed = parse_fix(fix);
      const auto in = load_input(input, unsafe_even);
      SolverOptions opts;
      opts.max_vertices = max_n;
      const auto coloring = find_k_coloring(in.composed.graph, k, fixed, opts);
      if (!coloring) {
        out << "none\n";
        return kExitNegative;
      }
      for (std::size_t v = 0; v < coloring->colors.size(); ++v) out << (v ? " " : "") << coloring->colors[v];
      out << "\n";
      return kExitOk;
    }

    if (planar->parsed()) {
      const auto in = load_input(input, unsafe_even);
      const auto result = planarity_test(in.composed.graph);
      out << (result.planar ? "planar" : "nonplanar") << "\n";
      if (result.planar && show_rotation) {
        const auto& rot = *result.embedding;
        for (std::size_t v = 0; v < rot.order.size(); ++v) {
          out << v << ":";
          for (VertexId w : rot.order[v]) out << " " << w;
          out << "\n";
        }
      }
      return result.planar ? kExitOk : kExitNegative;
    }

    if (xport->parsed()) {
      const auto in = load_input(input, unsafe_even);
      emit(render(in.composed, choose_format(format_flag, out_path), in.from_recipe), out_path, out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace critplanar::cli
