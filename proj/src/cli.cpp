#include "soclelab/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "soclelab/io.hpp"
#include "soclelab/lr.hpp"
#include "soclelab/socle.hpp"
#include "soclelab/superchar.hpp"
#include "soclelab/verify.hpp"
#include "soclelab/window.hpp"
#include "soclelab/zuckerman.hpp"

namespace soclelab {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Partition arg_partition(const std::string& s) {
  try {
    return Partition::parse(s);
  } catch (const std::exception& e) {
    throw UsageError("bad partition '" + s + "': " + e.what());
  }
}

Weight arg_weight(const std::string& s) {
  try {
    return Weight::parse(s);
  } catch (const std::exception& e) {
    throw UsageError("bad weight '" + s + "': " + e.what());
  }
}

GrothVec load_groth(const std::string& path) {
  if (path == "-") return read_groth(std::cin);
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return read_groth(f);
}

SuperPoly load_superpoly(const std::string& path) {
  if (path == "-") return read_superpoly(std::cin);
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return read_superpoly(f);
}

void print_decomp(std::ostream& out, const SemisimpleDecomp& decomp) {
  for (const auto& [pair, mult] : decomp)
    out << "lambda=" << pair.first.str() << " mu=" << pair.second.str()
        << " mult=" << mult.get_str() << "\n";
}

void print_layers(std::ostream& out, const std::vector<SemisimpleDecomp>& layers,
                  bool as_json, const json& extra) {
  if (as_json) {
    json j = json::parse(decomp_layers_json(layers));
    j.update(extra);
    out << j.dump() << "\n";
    return;
  }
  for (size_t k = 0; k < layers.size(); ++k) {
    out << "layer " << k << ":\n";
    print_decomp(out, layers[k]);
  }
}

json basis_json(const std::vector<GrothVec>& basis) {
  json vectors = json::array();
  for (const auto& v : basis) {
    json terms = json::array();
    for (const auto& [l, c] : v.terms())
      terms.push_back({{"a", l.a}, {"b", l.b}, {"coeff", c.get_str()}});
    vectors.push_back(std::move(terms));
  }
  return vectors;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact socle, branching and supercharacter computations"};
  app.require_subcommand(1);
  std::function<int()> action;

  // ---- coefficient commands ----
  std::string s_lambda, s_mu, s_nu;
  std::vector<std::string> s_shapes;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient of lambda in mu*nu");
  lr->add_option("lambda", s_lambda)->required();
  lr->add_option("mu", s_mu)->required();
  lr->add_option("nu", s_nu)->required();
  lr->callback([&] {
    action = [&]() -> int {
      out << lr_coeff(arg_partition(s_lambda), arg_partition(s_mu), arg_partition(s_nu))
          << "\n";
      return 0;
    };
  });

  auto* mlr = app.add_subcommand(
      "multi-lr", "Iterated coefficient of lambda in gamma_1*...*gamma_r*lambda_prime");
  mlr->add_option("lambda", s_lambda)->required();
  mlr->add_option("shapes", s_shapes, "gammas followed by lambda_prime")
      ->required()
      ->expected(-1);
  mlr->callback([&] {
    action = [&]() -> int {
      std::vector<Partition> gammas;
      for (size_t i = 0; i + 1 < s_shapes.size(); ++i)
        gammas.push_back(arg_partition(s_shapes[i]));
      out << multi_lr(arg_partition(s_lambda), gammas, arg_partition(s_shapes.back()))
          << "\n";
      return 0;
    };
  });

  // ---- socle filtration commands ----
  int blocks = 1, rank_m = 0, rank_n = 0;
  bool as_json = false;
  auto* socle = app.add_subcommand("socle", "Socle layers of the injective hull");
  socle->add_option("--lambda", s_lambda)->required();
  socle->add_option("--mu", s_mu)->required();
  socle->add_option("--blocks", blocks, "number of diagonal blocks")->required();
  socle->add_flag("--json", as_json);
  socle->callback([&] {
    action = [&]() -> int {
      auto layers = socle_layers_injective(arg_partition(s_lambda), arg_partition(s_mu), blocks);
      print_layers(out, layers, as_json,
                   {{"lambda", s_lambda}, {"mu", s_mu}, {"blocks", blocks}});
      return 0;
    };
  });

  auto* jh = app.add_subcommand("jh", "Jordan-Hoelder multiplicities of the injective hull");
  jh->add_option("--lambda", s_lambda)->required();
  jh->add_option("--mu", s_mu)->required();
  jh->add_option("--blocks", blocks)->required();
  jh->add_flag("--json", as_json);
  jh->callback([&] {
    action = [&]() -> int {
      auto decomp = jh_injective(arg_partition(s_lambda), arg_partition(s_mu), blocks);
      if (as_json) {
        json summands = json::array();
        for (const auto& [pair, mult] : decomp)
          summands.push_back({{"lambda", pair.first.str()},
                              {"mu", pair.second.str()},
                              {"mult", mult.get_str()}});
        out << json{{"summands", summands}}.dump() << "\n";
      } else {
        print_decomp(out, decomp);
      }
      return 0;
    };
  });

  auto* sk = app.add_subcommand("socle-k", "Socle layers of the big injective over (m,n)");
  sk->add_option("m", rank_m)->required();
  sk->add_option("n", rank_n)->required();
  sk->add_flag("--json", as_json);
  sk->callback([&] {
    action = [&]() -> int {
      print_layers(out, socle_layers_K(rank_m, rank_n), as_json,
                   {{"m", rank_m}, {"n", rank_n}});
      return 0;
    };
  });

  auto* sj = app.add_subcommand("socle-j", "Socle layers of the wedge summand over (m,n)");
  sj->add_option("m", rank_m)->required();
  sj->add_option("n", rank_n)->required();
  sj->add_flag("--json", as_json);
  sj->callback([&] {
    action = [&]() -> int {
      print_layers(out, socle_layers_J(rank_m, rank_n), as_json,
                   {{"m", rank_m}, {"n", rank_n}});
      return 0;
    };
  });

  // ---- vector commands ----
  std::string gen, file;
  int gen_i = 0, pos_i = 1, pos_j = 1;
  auto* act = app.add_subcommand("act", "Apply a Chevalley generator to a vector file");
  act->add_option("generator", gen)->required()->check(CLI::IsMember({"e", "f"}));
  act->add_option("i", gen_i, "generator index")->required();
  act->add_option("--file", file, "vector file, '-' for stdin")->required();
  act->callback([&] {
    action = [&]() -> int {
      GrothVec v = load_groth(file);
      write_groth(out, gen == "e" ? apply_e(gen_i, v) : apply_f(gen_i, v));
      return 0;
    };
  });

  auto* gm = app.add_subcommand("gamma", "Signed place-permutation sum of a vector file");
  gm->add_option("--file", file)->required();
  gm->callback([&] {
    action = [&]() -> int {
      write_groth(out, dot_antisymmetrize(load_groth(file)));
      return 0;
    };
  });

  auto* io = app.add_subcommand("iota", "Embed a wedge-basis vector into the standard basis");
  io->add_option("--file", file)->required();
  io->callback([&] {
    action = [&]() -> int {
      write_groth(out, iota_kac(load_groth(file)));
      return 0;
    };
  });

  auto* ct = app.add_subcommand("contract", "Pairing contraction of positions (i, j)");
  ct->add_option("i", pos_i)->required();
  ct->add_option("j", pos_j)->required();
  ct->add_option("--file", file)->required();
  ct->callback([&] {
    action = [&]() -> int {
      write_groth(out, contraction(pos_i, pos_j, load_groth(file)));
      return 0;
    };
  });

  // ---- window commands ----
  int win_lo = 0, win_hi = 0, split_q = 0;
  auto* sw = app.add_subcommand("socle-window",
                                "Basis of the joint contraction kernel on a window");
  sw->add_option("m", rank_m)->required();
  sw->add_option("n", rank_n)->required();
  sw->add_option("lo", win_lo)->required();
  sw->add_option("hi", win_hi)->required();
  sw->add_flag("--json", as_json);
  sw->callback([&] {
    action = [&]() -> int {
      auto basis = socle_T_window(rank_m, rank_n, Window{win_lo, win_hi});
      if (as_json) {
        out << json{{"m", rank_m},
                    {"n", rank_n},
                    {"basis", "verma"},
                    {"dim", basis.size()},
                    {"vectors", basis_json(basis)}}
                   .dump()
            << "\n";
      } else {
        out << "dim " << basis.size() << "\n";
      }
      return 0;
    };
  });

  auto* ac = app.add_subcommand("appendix-check",
                                "Window socle inside the traceless low-block image");
  ac->add_option("m", rank_m)->required();
  ac->add_option("n", rank_n)->required();
  ac->add_option("lo", win_lo)->required();
  ac->add_option("hi", win_hi)->required();
  ac->add_option("q", split_q, "first high entry value")->required();
  ac->callback([&] {
    action = [&]() -> int {
      out << (appendix_inclusion_check(rank_m, rank_n, Window{win_lo, win_hi}, split_q)
                  ? "true"
                  : "false")
          << "\n";
      return 0;
    };
  });

  // ---- weight and polynomial commands ----
  std::string s_weight;
  auto* at = app.add_subcommand("atyp", "Degree of atypicality of a weight");
  at->add_option("weight", s_weight, "\"a1,..,am|b1,..,bn\"")->required();
  at->callback([&] {
    action = [&]() -> int {
      out << atypicality(arg_weight(s_weight)) << "\n";
      return 0;
    };
  });

  auto* ss = app.add_subcommand("superschur", "Supersymmetric Schur polynomial");
  ss->add_option("lambda", s_lambda)->required();
  ss->add_option("m", rank_m)->required();
  ss->add_option("n", rank_n)->required();
  ss->callback([&] {
    action = [&]() -> int {
      write_superpoly(out, super_schur(arg_partition(s_lambda), rank_m, rank_n));
      return 0;
    };
  });

  auto* ks = app.add_subcommand("kac-sch", "Supercharacter of the standard induced module");
  ks->add_option("weight", s_weight)->required();
  ks->add_option("m", rank_m)->required();
  ks->add_option("n", rank_n)->required();
  ks->callback([&] {
    action = [&]() -> int {
      write_superpoly(out, kac_supercharacter(arg_weight(s_weight), rank_m, rank_n));
      return 0;
    };
  });

  int power = 1;
  auto* ds = app.add_subcommand("ds", "Evaluation substituting a paired variable");
  ds->add_option("--file", file, "polynomial file, '-' for stdin")->required();
  ds->add_option("--power", power, "number of substitutions");
  ds->callback([&] {
    action = [&]() -> int {
      write_superpoly(out, ds_power(load_superpoly(file), power));
      return 0;
    };
  });

  // ---- verification ----
  VerifyOptions vopt;
  std::string suite;
  auto* vf = app.add_subcommand("verify", "Run an invariant suite");
  vf->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"relations", "gamma", "ds", "appendix", "all"}));
  vf->add_option("--seed", vopt.seed);
  vf->add_option("--size", vopt.size)->check(CLI::PositiveNumber);
  vf->callback([&] {
    action = [&]() -> int { return verify_suite(suite, vopt, out) ? 0 : 1; };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace soclelab
