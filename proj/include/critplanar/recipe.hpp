#pragma once

#include <cctype>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "critplanar/constructions.hpp"
#include "critplanar/formats.hpp"
#include "critplanar/graph6.hpp"

namespace critplanar {

// Recipe grammar (whitespace between tokens is ignored):
//
//   expr  := "K4" | "W5" | "g6:" GRAPH6 | "file:" PATH | call
//   call  := "ring(" item ("," item)+ ")" | "g3(" item "," item ")"
//          | "g4(" item "," item ")"      | "hajos(" edged "," edged ")"
//   item  := expr "@(" INT "," INT "," INT ")"
//   edged := expr "@[" INT "," INT "]"        first endpoint is identified

enum class RecipeOp { Ring, G3, G4, Hajos };

struct RecipeLeaf {
  enum class Kind { K4, W5, Graph6, File };
  Kind kind = Kind::K4;
  /// graph6 text or file path; empty for named seeds.
  std::string payload;

  friend bool operator==(const RecipeLeaf&, const RecipeLeaf&) = default;
};

struct RecipeArg;

struct RecipeCall {
  RecipeOp op = RecipeOp::Ring;
  std::vector<RecipeArg> args;

  friend bool operator==(const RecipeCall&, const RecipeCall&);
};

struct RecipeExpr {
  std::variant<RecipeLeaf, RecipeCall> node;

  friend bool operator==(const RecipeExpr&, const RecipeExpr&) = default;
};

struct RecipeArg {
  RecipeExpr expr;
  /// FacePath for ring/g3/g4 items, JoinEdge for hajos operands.
  std::variant<FacePath, JoinEdge> handle;

  friend bool operator==(const RecipeArg& a, const RecipeArg& b) {
    if (!(a.expr == b.expr) || a.handle.index() != b.handle.index()) return false;
    if (const auto* p = std::get_if<FacePath>(&a.handle)) return *p == std::get<FacePath>(b.handle);
    const auto& x = std::get<JoinEdge>(a.handle);
    const auto& y = std::get<JoinEdge>(b.handle);
    return x.identified == y.identified && x.joined == y.joined;
  }
};

inline bool operator==(const RecipeCall& a, const RecipeCall& b) { return a.op == b.op && a.args == b.args; }

struct RecipeOptions {
  /// Accept rings with an even operand count.
  bool allow_even_ring = false;
};

namespace detail {

inline constexpr std::string_view op_name(RecipeOp op) {
  switch (op) {
    case RecipeOp::Ring: return "ring";
    case RecipeOp::G3: return "g3";
    case RecipeOp::G4: return "g4";
    case RecipeOp::Hajos: return "hajos";
  }
  return "?";
}

class RecipeParser {
 public:
  RecipeParser(std::string_view text, const RecipeOptions& opts) : text_(text), opts_(opts) {}

  RecipeExpr parse() {
    RecipeExpr expr = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "' after expression");
    return expr;
  }

 private:
  [[noreturn]] void fail(const std::string& what, ErrorCode code = ErrorCode::SyntaxError) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char ch) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  void expect(char ch) {
    skip_space();
    if (pos_ >= text_.size()) fail(std::string("expected '") + ch + "' but input ended");
    if (text_[pos_] != ch) fail(std::string("expected '") + ch + "', found '" + text_[pos_] + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) {
      if (pos_ >= text_.size()) fail("expected a graph expression but input ended");
      fail("expected a graph expression, found '" + std::string(1, text_[pos_]) + "'");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  VertexId integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a vertex index");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("vertex index too large");
    }
    return static_cast<VertexId>(std::stol(std::string(text_.substr(start, pos_ - start))));
  }

  RecipeExpr parse_expr() {
    skip_space();
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (pos_ < text_.size() && text_[pos_] == ':' && (name == "g6" || name == "file")) {
      ++pos_;
      return name == "g6" ? RecipeExpr{graph6_leaf()} : RecipeExpr{file_leaf()};
    }
    if (name == "K4") return RecipeExpr{RecipeLeaf{RecipeLeaf::Kind::K4, ""}};
    if (name == "W5") return RecipeExpr{RecipeLeaf{RecipeLeaf::Kind::W5, ""}};
    if (peek('(')) {
      if (name == "ring") return RecipeExpr{call(RecipeOp::Ring, start)};
      if (name == "g3") return RecipeExpr{call(RecipeOp::G3, start)};
      if (name == "g4") return RecipeExpr{call(RecipeOp::G4, start)};
      if (name == "hajos") return RecipeExpr{call(RecipeOp::Hajos, start)};
      pos_ = start;
      fail("unknown operator '" + name + "'");
    }
    pos_ = start;
    fail("unknown base graph '" + name + "'", ErrorCode::UnknownBase);
  }

  RecipeLeaf graph6_leaf() {
    const std::string_view rest = text_.substr(pos_);
    std::size_t length = 0;
    try {
      length = graph6_record_length(rest);
    } catch (const Error& e) {
      fail(std::string("bad graph6 literal: ") + e.what());
    }
    if (length > rest.size()) fail("graph6 literal truncated");
    for (std::size_t i = 0; i < length; ++i)
      if (!graph6_char(rest[i])) {
        pos_ += i;
        fail("invalid graph6 byte");
      }
    pos_ += length;
    return {RecipeLeaf::Kind::Graph6, std::string(rest.substr(0, length))};
  }

  static bool graph6_char(char ch) { return detail::graph6_char(ch); }

  RecipeLeaf file_leaf() {
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '@' || ch == ',' || ch == ')' || std::isspace(static_cast<unsigned char>(ch))) break;
      ++pos_;
    }
    if (start == pos_) fail("expected a file path");
    return {RecipeLeaf::Kind::File, std::string(text_.substr(start, pos_ - start))};
  }

  RecipeCall call(RecipeOp op, std::size_t start) {
    expect('(');
    RecipeCall c{op, {}};
    for (;;) {
      c.args.push_back(op == RecipeOp::Hajos ? edged() : item());
      if (!peek(',')) break;
      expect(',');
    }
    expect(')');
    const std::size_t count = c.args.size();
    const std::size_t end = pos_;
    pos_ = start;
    if (op == RecipeOp::Ring) {
      if (count < 2) fail("ring needs at least three operands", ErrorCode::ArityError);
      if (count % 2 == 0 && !opts_.allow_even_ring)
        fail("odd operand count required, ring has " + std::to_string(count), ErrorCode::ArityError);
    } else if (count != 2) {
      fail(std::string(op_name(op)) + " takes exactly two operands, got " + std::to_string(count),
           ErrorCode::ArityError);
    }
    pos_ = end;
    return c;
  }

  RecipeArg item() {
    RecipeExpr expr = parse_expr();
    expect('@');
    expect('(');
    FacePath p;
    p.a = integer();
    expect(',');
    p.b = integer();
    expect(',');
    p.c = integer();
    expect(')');
    return {std::move(expr), p};
  }

  RecipeArg edged() {
    RecipeExpr expr = parse_expr();
    expect('@');
    expect('[');
    JoinEdge e;
    e.identified = integer();
    expect(',');
    e.joined = integer();
    expect(']');
    return {std::move(expr), e};
  }

  std::string_view text_;
  RecipeOptions opts_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RecipeExpr parse_recipe(std::string_view text, const RecipeOptions& opts = {}) {
  return detail::RecipeParser(text, opts).parse();
}

/// Canonical form: no whitespace, operands in order.
inline std::string print_recipe(const RecipeExpr& expr) {
  if (const auto* leaf = std::get_if<RecipeLeaf>(&expr.node)) {
    switch (leaf->kind) {
      case RecipeLeaf::Kind::K4: return "K4";
      case RecipeLeaf::Kind::W5: return "W5";
      case RecipeLeaf::Kind::Graph6: return "g6:" + leaf->payload;
      case RecipeLeaf::Kind::File: return "file:" + leaf->payload;
    }
  }
  const auto& call = std::get<RecipeCall>(expr.node);
  std::string out(detail::op_name(call.op));
  out += '(';
  for (std::size_t i = 0; i < call.args.size(); ++i) {
    if (i) out += ',';
    const auto& arg = call.args[i];
    out += print_recipe(arg.expr);
    if (const auto* p = std::get_if<FacePath>(&arg.handle)) {
      out += "@" + to_string(*p);
    } else {
      const auto& e = std::get<JoinEdge>(arg.handle);
      out += "@[" + std::to_string(e.identified) + "," + std::to_string(e.joined) + "]";
    }
  }
  out += ')';
  return out;
}

struct EvalOptions {
  RingOptions ring;
  /// Directory that relative file: paths resolve against.
  std::filesystem::path base_dir = ".";
};

/// Builds the graph a recipe describes. Leaves come back as a trivial
/// composition (identity map, no apex); warnings from nested operators propagate.
inline ComposedGraph evaluate_recipe(const RecipeExpr& expr, const EvalOptions& opts = {}) {
  if (const auto* leaf = std::get_if<RecipeLeaf>(&expr.node)) {
    ComposedGraph out;
    switch (leaf->kind) {
      case RecipeLeaf::Kind::K4: out.graph = catalog_k4(); break;
      case RecipeLeaf::Kind::W5: out.graph = catalog_w5(); break;
      case RecipeLeaf::Kind::Graph6: out.graph = decode_graph6(leaf->payload); break;
      case RecipeLeaf::Kind::File: {
        std::filesystem::path path(leaf->payload);
        if (path.is_relative()) path = opts.base_dir / path;
        out.graph = read_graph_file(path);
        break;
      }
    }
    out.operand_maps.push_back(VertexMap::identity(out.graph.vertex_count()));
    return out;
  }

  const auto& call = std::get<RecipeCall>(expr.node);
  std::vector<ComposedGraph> parts;
  std::vector<std::string> inherited;
  for (std::size_t i = 0; i < call.args.size(); ++i) {
    parts.push_back(evaluate_recipe(call.args[i].expr, opts));
    for (const auto& w : parts.back().warnings) inherited.push_back("operand " + std::to_string(i) + ": " + w);
  }
  auto path_of = [&](std::size_t i) { return std::get<FacePath>(call.args[i].handle); };
  auto edge_of = [&](std::size_t i) { return std::get<JoinEdge>(call.args[i].handle); };

  ComposedGraph out;
  switch (call.op) {
    case RecipeOp::Ring: {
      std::vector<Operand> operands;
      for (std::size_t i = 0; i < parts.size(); ++i) operands.push_back({parts[i].graph, path_of(i)});
      out = ring_compose(operands, opts.ring);
      break;
    }
    case RecipeOp::G3: out = g3_compose(parts[0].graph, path_of(0), parts[1].graph, path_of(1)); break;
    case RecipeOp::G4: out = g4_compose(parts[0].graph, path_of(0), parts[1].graph, path_of(1)); break;
    case RecipeOp::Hajos: out = hajos_join(parts[0].graph, edge_of(0), parts[1].graph, edge_of(1)); break;
  }
  out.warnings.insert(out.warnings.begin(), inherited.begin(), inherited.end());
  return out;
}

}  // namespace critplanar
