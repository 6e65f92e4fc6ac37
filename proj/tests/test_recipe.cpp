#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "critplanar/formats.hpp"
#include "critplanar/recipe.hpp"

using namespace critplanar;

namespace {

Error error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error thrown";
  return Error(ErrorCode::IoError, "none");
}

RecipeExpr random_recipe(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 6 : 2);
  const int choice = pick(rng);
  if (choice == 0) return {RecipeLeaf{RecipeLeaf::Kind::K4, ""}};
  if (choice == 1) return {RecipeLeaf{RecipeLeaf::Kind::W5, ""}};
  if (choice == 2) return {RecipeLeaf{RecipeLeaf::Kind::Graph6, "Ehfw"}};
  RecipeCall call;
  std::uniform_int_distribution<int> vid(0, 9);
  auto path = [&] { return FacePath{vid(rng), vid(rng), vid(rng)}; };
  switch (choice) {
    case 3: {
      call.op = RecipeOp::Ring;
      const int m = 3 + 2 * std::uniform_int_distribution<int>(0, 1)(rng);
      for (int i = 0; i < m; ++i) call.args.push_back({random_recipe(rng, depth - 1), path()});
      break;
    }
    case 4:
    case 5:
      call.op = choice == 4 ? RecipeOp::G3 : RecipeOp::G4;
      for (int i = 0; i < 2; ++i) call.args.push_back({random_recipe(rng, depth - 1), path()});
      break;
    default:
      call.op = RecipeOp::Hajos;
      for (int i = 0; i < 2; ++i) call.args.push_back({random_recipe(rng, depth - 1), JoinEdge{vid(rng), vid(rng)}});
  }
  return {std::move(call)};
}

}  // namespace

TEST(RecipeParse, Ring) {
  const auto expr = parse_recipe("ring(K4@(0,1,2), K4@(0,1,2), K4@(0,1,2))");
  const auto* call = std::get_if<RecipeCall>(&expr.node);
  ASSERT_NE(call, nullptr);
  EXPECT_EQ(call->op, RecipeOp::Ring);
  ASSERT_EQ(call->args.size(), 3u);
  for (const auto& a : call->args) {
    EXPECT_EQ(std::get<RecipeLeaf>(a.expr.node).kind, RecipeLeaf::Kind::K4);
    EXPECT_EQ(std::get<FacePath>(a.handle), (FacePath{0, 1, 2}));
  }
}

TEST(RecipeParse, G4AndHajos) {
  const auto g4 = std::get<RecipeCall>(parse_recipe("g4(K4@(0,1,2), W5@(0,1,2))").node);
  EXPECT_EQ(g4.op, RecipeOp::G4);
  EXPECT_EQ(std::get<RecipeLeaf>(g4.args[1].expr.node).kind, RecipeLeaf::Kind::W5);

  const auto hj = std::get<RecipeCall>(parse_recipe("hajos(K4@[0,1],K4@[2,3])").node);
  EXPECT_EQ(hj.op, RecipeOp::Hajos);
  EXPECT_EQ(std::get<JoinEdge>(hj.args[1].handle).identified, 2);
  EXPECT_EQ(std::get<JoinEdge>(hj.args[1].handle).joined, 3);
}

TEST(RecipeParse, Nested) {
  const auto expr = parse_recipe("ring(g3(K4@(0,1,2),K4@(0,1,2))@(0,1,3), K4@(0,1,2), W5@(5,0,1))");
  const auto& call = std::get<RecipeCall>(expr.node);
  EXPECT_EQ(std::get<RecipeCall>(call.args[0].expr.node).op, RecipeOp::G3);
}

TEST(RecipeParse, Graph6LiteralWithSpecialBytes) {
  // '@' and '`' are ordinary graph6 data bytes; the literal length comes from its header
  const auto expr = parse_recipe("ring(g6:IvI`WIDQO@(0,1,2),K4@(0,1,2),g6:D~{@(0,1,2))");
  const auto& call = std::get<RecipeCall>(expr.node);
  EXPECT_EQ(std::get<RecipeLeaf>(call.args[0].expr.node).payload, "IvI`WIDQO");
  EXPECT_EQ(std::get<RecipeLeaf>(call.args[2].expr.node).payload, "D~{");
  EXPECT_EQ(std::get<RecipeLeaf>(parse_recipe("g6:@").node).payload, "@");
}

TEST(RecipeParse, EvenRingArity) {
  const auto e = error_of([] { parse_recipe("ring(K4@(0,1,2),K4@(0,1,2),K4@(0,1,2),K4@(0,1,2))"); });
  EXPECT_EQ(e.code(), ErrorCode::ArityError);
  EXPECT_NE(std::string(e.what()).find("odd operand count required"), std::string::npos);
  EXPECT_NE(std::string(e.what()).find("line 1, column 1"), std::string::npos);

  RecipeOptions unsafe;
  unsafe.allow_even_ring = true;
  EXPECT_NO_THROW(parse_recipe("ring(K4@(0,1,2),K4@(0,1,2),K4@(0,1,2),K4@(0,1,2))", unsafe));
  EXPECT_EQ(error_of([] { parse_recipe("g3(K4@(0,1,2))"); }).code(), ErrorCode::ArityError);
  EXPECT_EQ(error_of([] { parse_recipe("g4(K4@(0,1,2),K4@(0,1,2),K4@(0,1,2))"); }).code(), ErrorCode::ArityError);
}

TEST(RecipeParse, Errors) {
  EXPECT_EQ(error_of([] { parse_recipe("K5"); }).code(), ErrorCode::UnknownBase);
  EXPECT_EQ(error_of([] { parse_recipe("glue(K4@(0,1,2),K4@(0,1,2))"); }).code(), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of([] { parse_recipe(""); }).code(), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of([] { parse_recipe("K4 K4"); }).code(), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of([] { parse_recipe("g3(K4@(0,1),K4@(0,1,2))"); }).code(), ErrorCode::SyntaxError);
  EXPECT_EQ(error_of([] { parse_recipe("hajos(K4@(0,1,2),K4@(0,1,2))"); }).code(), ErrorCode::SyntaxError);

  const auto e = error_of([] { parse_recipe("ring(K4@(0,1,2),\n  K4@(0,1;2))"); });
  EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
  EXPECT_NE(std::string(e.what()).find("line 2, column 10"), std::string::npos) << e.what();
}

TEST(RecipePrint, CanonicalForm) {
  EXPECT_EQ(print_recipe(parse_recipe(" g4 ( K4 @ ( 0 , 1 , 2 ) ,\n W5@(0,1,2) ) ")), "g4(K4@(0,1,2),W5@(0,1,2))");
  EXPECT_EQ(print_recipe(parse_recipe("hajos(K4@[0,1], g6:C~@[1,0])")), "hajos(K4@[0,1],g6:C~@[1,0])");
}

TEST(RecipePrint, RoundTripProperty) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const auto expr = random_recipe(rng, 3);
    const auto text = print_recipe(expr);
    EXPECT_EQ(parse_recipe(text), expr) << text;
    EXPECT_EQ(print_recipe(parse_recipe(text)), text);
  }
}

TEST(RecipeEval, MatchesDirectCalls) {
  EXPECT_EQ(evaluate_recipe(parse_recipe("ring(K4@(0,1,2),K4@(0,1,2),K4@(0,1,2))")).graph, k4_ring_family(1).graph);
  EXPECT_EQ(evaluate_recipe(parse_recipe("g4(K4@(0,1,2),W5@(0,1,2))")).graph,
            g4_compose(catalog_k4(), {0, 1, 2}, catalog_w5(), {0, 1, 2}).graph);
  EXPECT_EQ(evaluate_recipe(parse_recipe("hajos(K4@[0,1],K4@[0,1])")).graph,
            hajos_join(catalog_k4(), {0, 1}, catalog_k4(), {0, 1}).graph);
  const auto inner = g3_compose(catalog_k4(), {0, 1, 2}, catalog_k4(), {0, 1, 2}).graph;
  EXPECT_EQ(evaluate_recipe(parse_recipe("g3(g3(K4@(0,1,2),K4@(0,1,2))@(0,1,3),W5@(0,1,2))")).graph,
            g3_compose(inner, {0, 1, 3}, catalog_w5(), {0, 1, 2}).graph);
  EXPECT_EQ(evaluate_recipe(parse_recipe("g6:Ehfw")).graph, catalog_w5());
}

TEST(RecipeEval, ConstructionErrorsSurface) {
  EXPECT_EQ(error_of([] { evaluate_recipe(parse_recipe("g3(K4@(0,0,1),K4@(0,1,2))")); }).code(),
            ErrorCode::InvalidFacePath);
  EXPECT_EQ(error_of([] { evaluate_recipe(parse_recipe("hajos(W5@[0,2],K4@[0,1])")); }).code(), ErrorCode::EdgeAbsent);
  EXPECT_EQ(error_of([] { evaluate_recipe(parse_recipe("g6:Bx")); }).code(), ErrorCode::DecodeError);
}

TEST(RecipeEval, NestedWarningsArePrefixed) {
  const auto c = evaluate_recipe(parse_recipe("g4(ring(K4@(0,1,2),K4@(0,1,2),W5@(0,5,2))@(0,1,3),K4@(0,1,2))"));
  ASSERT_FALSE(c.warnings.empty());
  EXPECT_EQ(c.warnings[0].rfind("operand 0: operand 2", 0), 0u) << c.warnings[0];
}

TEST(RecipeEval, FileLeaves) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "critplanar_recipe_test";
  fs::create_directories(dir);
  write_text_file(dir / "w5.g6", "Ehfw\n");
  write_text_file(dir / "k4.el", encode_edge_list(catalog_k4()));
  EvalOptions opts;
  opts.base_dir = dir;
  const auto c = evaluate_recipe(parse_recipe("g4(file:k4.el@(0,1,2),file:w5.g6@(0,1,2))"), opts);
  EXPECT_EQ(c.graph, g4_compose(catalog_k4(), {0, 1, 2}, catalog_w5(), {0, 1, 2}).graph);
  EXPECT_EQ(error_of([&] { evaluate_recipe(parse_recipe("file:missing.g6"), opts); }).code(), ErrorCode::IoError);
  fs::remove_all(dir);
}
