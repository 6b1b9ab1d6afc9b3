// Command-line front end: seed/lifting/fan file I/O, mutation, lifting,
// membership, homogenization, valuations, the toric and diagonal
// compactification pipelines, and DOT export.
//
// Exit codes: 0 success, 1 domain check failed, 2 parse/IO error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "clift/clift.hpp"

namespace {

clift::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw clift::ParseError("cannot open file: " + path);
  clift::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw clift::ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return j;
}

std::vector<clift::VertexId> split_sequence(const std::string& s) {
  std::vector<clift::VertexId> steps;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) steps.push_back(item);
  }
  return steps;
}

void emit(const clift::json& j) { std::cout << clift::canonical_dump(j) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  using namespace clift;
  CLI::App app{"exact cluster-algebra engine: mutation, minimal monomial "
               "lifting, membership, and Cox-ring pipelines"};
  app.require_subcommand(1);

  std::string seed_path, nu_path, fan_path, expr, vertex, seq, fixture_name;
  size_t cap = 0;
  bool dot = false, assert_flag = false, dump = false;

  auto* validate = app.add_subcommand("validate", "check a seed and print a symmetrizer");
  validate->add_option("seed", seed_path)->required();

  auto* mutate = app.add_subcommand("mutate", "apply a mutation sequence");
  mutate->add_option("seed", seed_path)->required();
  mutate->add_option("--seq", seq, "comma-separated vertex ids")->required();

  auto* lift = app.add_subcommand("lift", "minimal monomial lifting");
  lift->add_option("seed", seed_path)->required();
  lift->add_option("--nu", nu_path, "lifting data JSON")->required();

  auto* explore = app.add_subcommand("explore", "exchange graph closure");
  explore->add_option("seed", seed_path)->required();
  explore->add_option("--cap", cap, "node cap")->required();
  explore->add_flag("--dot", dot, "emit DOT instead of JSON");

  auto* check = app.add_subcommand("check-upper", "upper-bound membership");
  check->add_option("seed", seed_path)->required();
  check->add_option("--expr", expr)->required();
  check->add_flag("--assert", assert_flag, "exit 1 when not a member");

  auto* homog = app.add_subcommand("homogenize", "homogenize a base polynomial");
  homog->add_option("lifted", seed_path, "lifted seed JSON (output of lift)")->required();
  homog->add_option("--expr", expr)->required();

  auto* val = app.add_subcommand("valuation", "cluster valuation at a frozen vertex");
  val->add_option("lifted", seed_path)->required();
  val->add_option("--expr", expr)->required();
  val->add_option("--vertex", vertex)->required();

  auto* toric = app.add_subcommand("toric", "Cox ring of a smooth toric variety");
  toric->add_option("fan", fan_path)->required();

  auto* diag = app.add_subcommand("diag-compactify", "diagonal partial compactification lift");
  diag->add_option("seed", seed_path)->required();

  auto* exdot = app.add_subcommand("export-dot", "valued quiver in DOT");
  exdot->add_option("seed", seed_path)->required();

  auto* fixture = app.add_subcommand("fixture", "load a registered fixture");
  fixture->add_option("name", fixture_name)->required();
  fixture->add_flag("--dump", dump, "dump the full fixture instead of its seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      Seed s = seed_from_json(read_json_file(seed_path));
      auto d = validate_seed(s);
      json out = json::object();
      for (const auto& [v, c] : d) out[v] = std::stoll(c.str());
      emit({{"symmetrizer", out}});
    } else if (*mutate) {
      Seed s = seed_from_json(read_json_file(seed_path));
      MutationSequence ms{split_sequence(seq)};
      emit(seed_to_json(s.apply(ms)));
    } else if (*lift) {
      Seed s = seed_from_json(read_json_file(seed_path));
      LiftingData d = lifting_data_from_json(read_json_file(nu_path));
      emit(lifted_seed_to_json(lift_seed(s, d)));
    } else if (*explore) {
      Seed s = seed_from_json(read_json_file(seed_path));
      ExchangeGraph g = explore_exchange_graph(s, cap);
      if (dot)
        std::cout << export_dot(g);
      else
        emit(graph_to_json(g));
    } else if (*check) {
      Seed s = seed_from_json(read_json_file(seed_path));
      RationalFunction f = parse_expression(expr);
      UpperBoundResult r = upper_bound_membership(f, s);
      emit({{"member", r.member}, {"exact", r.exact}});
      if (assert_flag && !r.member) return 1;
    } else if (*homog) {
      LiftedSeed L = lifted_seed_from_json(read_json_file(seed_path));
      RationalFunction f = parse_expression(expr);
      if (!f.is_polynomial() || !f.denominator().is_one())
        throw InvalidConfiguration("homogenize expects a polynomial expression");
      Homogenization h = homogenize(f.numerator(), L);
      json n = json::object();
      for (const auto& [l, c] : h.n.coords()) n[l] = c;
      emit({{"n", n}, {"ftilde", h.ftilde.to_string()}});
    } else if (*val) {
      LiftedSeed L = lifted_seed_from_json(read_json_file(seed_path));
      RationalFunction f = parse_expression(expr);
      auto v = cluster_valuation(f, L.seed, vertex);
      json out;
      if (v)
        out = {{"valuation", *v}};
      else
        out = {{"valuation", "infinity"}};
      emit(out);
    } else if (*toric) {
      FanInput fan = fan_from_json(read_json_file(fan_path));
      ToricResult r = toric_lift(fan);
      json degrees = json::object();
      for (const auto& [v, d] : r.degrees) {
        json row = json::object();
        for (const auto& [l, c] : d.coords()) row[l] = c;
        degrees[v] = row;
      }
      emit({{"lifted", lifted_seed_to_json(r.lifted)},
            {"variable_count", r.variable_count},
            {"degrees", degrees},
            {"note", r.note}});
    } else if (*diag) {
      Seed s = seed_from_json(read_json_file(seed_path));
      emit(lifted_seed_to_json(diagonal_compactification_lift(s)));
    } else if (*exdot) {
      Seed s = seed_from_json(read_json_file(seed_path));
      std::cout << export_dot(s);
    } else if (*fixture) {
      Fixture f = load_fixture(fixture_name);
      if (dump)
        emit(fixture_to_json(f));
      else
        emit(seed_to_json(f.seed));
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
