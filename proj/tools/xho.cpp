// Command-line surface over the library: subdivision, functors, homotopy
// and collapse searches, homology, certificates, and the paper regression
// suite. Exit codes: 0 success / positive verdict, 1 negative verdict,
// 2 unknown or budget exhausted, 3 input error.

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "xho/collapse.hpp"
#include "xho/graph.hpp"
#include "xho/homology.hpp"
#include "xho/homotopy.hpp"
#include "xho/io.hpp"
#include "xho/model.hpp"
#include "xho/parallel.hpp"
#include "xho/subdivision.hpp"
#include "xho/verify.hpp"

namespace {

using namespace xho;
using nlohmann::json;

enum ExitCode { kOk = 0, kNegative = 1, kUnknown = 2, kInputError = 3 };

struct Options {
  std::string format = "text";
  std::int64_t budget = default_budget_steps();
  bool serial = false;
};

void emit_complex(const Complex& k, const Options& opt) {
  if (opt.format == "json")
    std::cout << io::complex_json(k).dump(2) << "\n";
  else
    io::write_complex(std::cout, k);
}

void emit_graph(const Graph& g, const Options& opt) {
  if (opt.format == "json")
    std::cout << io::graph_json(g).dump(2) << "\n";
  else
    io::write_graph(std::cout, g);
}

int run_verify_paper(const Options&) {
  bool all = true;
  auto emit = [&](const verify::CheckResult& r) {
    std::printf("[%s] %-36s (%.2f s) %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.seconds, r.note.c_str());
    std::fflush(stdout);
    all = all && r.pass;
  };
  verify::run_paper_suite(emit);
  return all ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial homotopy toolkit for simplicial complexes and graphs"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", opt.budget, "search budget in steps");
  app.add_flag("--serial", opt.serial, "disable the OpenMP kernels");

  std::string in1, in2, in3, in4, map1, map2, map3, map4;
  int n = 0, k = -1, n_max = 2;

  auto* c_sd = app.add_subcommand("sd", "barycentric subdivision of a complex");
  c_sd->add_option("complex", in1)->required();
  auto* c_sd2 = app.add_subcommand("sd2", "double barycentric subdivision");
  c_sd2->add_option("complex", in1)->required();
  auto* c_clique = app.add_subcommand("clique", "clique complex of a reflexive graph");
  c_clique->add_option("graph", in1)->required();
  auto* c_skel = app.add_subcommand("skeleton", "1-skeleton of a complex as a graph");
  c_skel->add_option("complex", in1)->required();
  auto* c_flag = app.add_subcommand("flag", "test whether a complex is flag");
  c_flag->add_option("complex", in1)->required();
  auto* c_prod = app.add_subcommand("product", "categorical product of two complexes");
  c_prod->add_option("left", in1)->required();
  c_prod->add_option("right", in2)->required();
  auto* c_exp = app.add_subcommand("exp", "exponential complex L^K (arguments: L K)");
  c_exp->add_option("base", in1)->required();
  c_exp->add_option("exponent", in2)->required();
  auto* c_push = app.add_subcommand("pushout", "pushout of complexes along a mono");
  c_push->add_option("K", in1)->required();
  c_push->add_option("L", in2)->required();
  c_push->add_option("A", in3)->required();
  c_push->add_option("i_map", map1, "injective map K -> L")->required();
  c_push->add_option("u_map", map2, "map K -> A")->required();
  auto* c_core = app.add_subcommand("core", "strong-collapse core of a complex");
  c_core->add_option("complex", in1)->required();
  auto* c_coll = app.add_subcommand("collapses-to", "strong collapse search L onto K");
  c_coll->add_option("L", in1)->required();
  c_coll->add_option("K", in2)->required();
  auto* c_ndr = app.add_subcommand("ndr", "strong NDR witness search for (L, K)");
  c_ndr->add_option("L", in1)->required();
  c_ndr->add_option("K", in2)->required();
  auto* c_homot = app.add_subcommand("homotopic", "x-homotopy search between maps");
  c_homot->add_option("K", in1)->required();
  c_homot->add_option("L", in2)->required();
  c_homot->add_option("f_map", map1)->required();
  c_homot->add_option("g_map", map2)->required();
  auto* c_retract = app.add_subcommand("retract", "deformation retract search of L onto K");
  c_retract->add_option("L", in1)->required();
  c_retract->add_option("K", in2)->required();
  auto* c_homol = app.add_subcommand("homology", "integral homology of a complex");
  c_homol->add_option("complex", in1)->required();
  auto* c_homc = app.add_subcommand("hom-complex", "Hom complex of loop graphs G, H");
  c_homc->add_option("G", in1)->required();
  c_homc->add_option("H", in2)->required();
  auto* c_gen = app.add_subcommand("gen-cofib", "generating (trivial) cofibration");
  c_gen->add_option("n", n)->required();
  c_gen->add_option("k", k, "horn index; omit for the boundary inclusion");
  auto* c_lift = app.add_subcommand("lift", "solve a lifting problem");
  c_lift->add_option("A", in1)->required();
  c_lift->add_option("B", in2)->required();
  c_lift->add_option("X", in3)->required();
  c_lift->add_option("Y", in4)->required();
  c_lift->add_option("i_map", map1)->required();
  c_lift->add_option("p_map", map2)->required();
  c_lift->add_option("top_map", map3)->required();
  c_lift->add_option("bottom_map", map4)->required();
  auto* c_fib = app.add_subcommand("trivial-fibration", "lifting checks against boundary generators");
  c_fib->add_option("X", in1)->required();
  c_fib->add_option("Y", in2)->required();
  c_fib->add_option("p_map", map1)->required();
  c_fib->add_option("--n-max", n_max, "largest generator dimension");
  auto* c_verify = app.add_subcommand("verify-paper", "run the full regression suite");

  CLI11_PARSE(app, argc, argv);
  par::set_enabled(!opt.serial);

  try {
    if (*c_sd) {
      emit_complex(sd(io::parse_complex_file(in1)).complex.base, opt);
      return kOk;
    }
    if (*c_sd2) {
      emit_complex(sd2(io::parse_complex_file(in1)).complex(), opt);
      return kOk;
    }
    if (*c_clique) {
      emit_complex(clique_complex(io::parse_graph_file(in1)), opt);
      return kOk;
    }
    if (*c_skel) {
      emit_graph(skeleton1(io::parse_complex_file(in1)), opt);
      return kOk;
    }
    if (*c_flag) {
      bool flag = is_flag(io::parse_complex_file(in1));
      if (opt.format == "json") {
        json j{{"schema", io::kSchemaVersion}, {"flag", flag}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (flag ? "flag" : "not-flag") << "\n";
      }
      return flag ? kOk : kNegative;
    }
    if (*c_prod) {
      emit_complex(product(io::parse_complex_file(in1), io::parse_complex_file(in2)), opt);
      return kOk;
    }
    if (*c_exp) {
      Complex l = io::parse_complex_file(in1);
      Complex kk = io::parse_complex_file(in2);
      emit_complex(exponential(l, kk, std::max<std::int64_t>(opt.budget, 1000000)).complex,
                   opt);
      return kOk;
    }
    if (*c_push) {
      Complex kk = io::parse_complex_file(in1);
      Complex l = io::parse_complex_file(in2);
      Complex a = io::parse_complex_file(in3);
      VertexMap i = io::parse_vertex_map_file(map1, kk, l);
      VertexMap u = io::parse_vertex_map_file(map2, kk, a);
      PushoutResult po = pushout_mono(i, u);
      if (opt.format == "json") {
        json j = io::complex_json(po.complex);
        json v = json::object(), f = json::object();
        for (int x = 0; x < l.vertex_count(); ++x)
          v[l.label(x)] = po.complex.label(po.from_left(x));
        for (int x = 0; x < a.vertex_count(); ++x)
          f[a.label(x)] = po.complex.label(po.from_right(x));
        j["from_left"] = std::move(v);
        j["from_right"] = std::move(f);
        std::cout << j.dump(2) << "\n";
      } else {
        io::write_complex(std::cout, po.complex);
      }
      return kOk;
    }
    if (*c_core) {
      auto [c, seq] = core(io::parse_complex_file(in1));
      if (opt.format == "json") {
        json j = io::complex_json(c);
        j["steps"] = io::collapse_json(seq)["steps"];
        std::cout << j.dump(2) << "\n";
      } else {
        io::write_complex(std::cout, c);
        for (const auto& [del, dom] : seq.steps)
          std::cout << "# removed " << del << " (dominated by " << dom << ")\n";
      }
      return kOk;
    }
    if (*c_coll) {
      Complex l = io::parse_complex_file(in1);
      Complex kk = io::parse_complex_file(in2);
      auto res = collapses_to(l, kk, opt.budget);
      if (res.is_found()) {
        std::cout << io::collapse_json(*res.value).dump(2) << "\n";
        return kOk;
      }
      std::cout << (res.is_no() ? "no\n" : "unknown\n");
      return res.is_no() ? kNegative : kUnknown;
    }
    if (*c_ndr) {
      Complex l = io::parse_complex_file(in1);
      Complex kk = io::parse_complex_file(in2);
      auto res = ndr_witness(l, kk, opt.budget);
      if (res.is_found()) {
        std::cout << io::ndr_json(*res.value).dump(2) << "\n";
        return kOk;
      }
      std::cout << (res.is_no() ? "no\n" : "unknown\n");
      return res.is_no() ? kNegative : kUnknown;
    }
    if (*c_homot) {
      Complex kk = io::parse_complex_file(in1);
      Complex l = io::parse_complex_file(in2);
      VertexMap f = io::parse_vertex_map_file(map1, kk, l);
      VertexMap g = io::parse_vertex_map_file(map2, kk, l);
      auto res = x_homotopic(f, g, opt.budget);
      if (res.is_found()) {
        std::cout << io::chain_json(*res.value).dump(2) << "\n";
        return kOk;
      }
      std::cout << (res.is_no() ? "no\n" : "unknown\n");
      return res.is_no() ? kNegative : kUnknown;
    }
    if (*c_retract) {
      Complex l = io::parse_complex_file(in1);
      Complex kk = io::parse_complex_file(in2);
      auto res = find_deformation_retract(l, kk, opt.budget);
      if (res.is_found()) {
        std::cout << io::retraction_json(*res.value).dump(2) << "\n";
        return kOk;
      }
      std::cout << (res.is_no() ? "no\n" : "unknown\n");
      return res.is_no() ? kNegative : kUnknown;
    }
    if (*c_homol) {
      Complex kk = io::parse_complex_file(in1);
      HomologyResult h = homology(kk);
      if (opt.format == "json") {
        std::cout << io::homology_json(h).dump(2) << "\n";
      } else {
        std::cout << "betti:";
        for (int b : h.betti) std::cout << " " << b;
        std::cout << "\n";
        for (std::size_t d = 0; d < h.torsion.size(); ++d) {
          if (h.torsion[d].empty()) continue;
          std::cout << "torsion[" << d << "]:";
          for (long long t : h.torsion[d]) std::cout << " " << t;
          std::cout << "\n";
        }
      }
      return kOk;
    }
    if (*c_homc) {
      Graph g = io::parse_graph_file(in1);
      Graph h = io::parse_graph_file(in2);
      Complex hom = hom_complex(g, h, std::max<std::int64_t>(opt.budget, 1000000));
      if (opt.format == "json") {
        json j = io::complex_json(hom);
        j["components"] = components(hom);
        j["homology"] = io::homology_json(homology(hom));
        std::cout << j.dump(2) << "\n";
      } else {
        io::write_complex(std::cout, hom);
        std::cout << "# components: " << components(hom) << "\n";
      }
      return kOk;
    }
    if (*c_gen) {
      Inclusion gen = k < 0 ? gen_cofibration(n) : gen_trivial_cofibration(n, k);
      if (opt.format == "json") {
        json j{{"schema", io::kSchemaVersion},
               {"source", io::complex_json(gen.source)},
               {"target", io::complex_json(gen.target)}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "# source\n";
        io::write_complex(std::cout, gen.source);
        std::cout << "# target\n";
        io::write_complex(std::cout, gen.target);
        std::cout << "# inclusion\n";
        io::write_vertex_map(std::cout, gen.map);
      }
      return kOk;
    }
    if (*c_lift) {
      Complex a = io::parse_complex_file(in1);
      Complex b = io::parse_complex_file(in2);
      Complex x = io::parse_complex_file(in3);
      Complex y = io::parse_complex_file(in4);
      LiftingProblem lp{io::parse_vertex_map_file(map1, a, b),
                        io::parse_vertex_map_file(map2, x, y),
                        io::parse_vertex_map_file(map3, a, x),
                        io::parse_vertex_map_file(map4, b, y)};
      auto res = solve_lifting(lp, opt.budget);
      if (res.is_found()) {
        io::write_vertex_map(std::cout, *res.value);
        return kOk;
      }
      std::cout << (res.is_no() ? "no\n" : "unknown\n");
      return res.is_no() ? kNegative : kUnknown;
    }
    if (*c_fib) {
      Complex x = io::parse_complex_file(in1);
      Complex y = io::parse_complex_file(in2);
      VertexMap p = io::parse_vertex_map_file(map1, x, y);
      FibrationReport rep = is_trivial_fibration_up_to(p, n_max, 600, opt.budget);
      json j{{"schema", io::kSchemaVersion},
             {"n_max", rep.n_max},
             {"squares_checked", rep.squares_checked},
             {"verdict", rep.verdict == Status::Found  ? "true"
                         : rep.verdict == Status::No   ? "false"
                                                       : "unknown"}};
      std::cout << j.dump(2) << "\n";
      return rep.verdict == Status::Found ? kOk
             : rep.verdict == Status::No  ? kNegative
                                          : kUnknown;
    }
    if (*c_verify) return run_verify_paper(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kUnknown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
