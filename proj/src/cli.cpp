#include "cvd/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cvd/generators.hpp"
#include "cvd/io.hpp"
#include "cvd/kernel.hpp"
#include "cvd/solvers.hpp"

namespace cvd {

namespace {

std::string format_set(const VertexList& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

/// Minimum-size solution, lexicographically smallest when unannotated.
std::optional<VertexList> minimum_solution(const AnnotatedInstance& inst) {
  if (inst.labels.empty()) return exact_cvd(inst.graph, inst.k);
  for (int b = 0; b <= inst.k; ++b) {
    AnnotatedInstance probe = inst;
    probe.k = b;
    if (auto s = annotated_cvd(probe)) {
      normalize(*s);
      return s;
    }
  }
  return std::nullopt;
}

KernelOptions options_for(bool no_bootstrap, bool tight_kappa, const std::string& provider) {
  KernelOptions opt;
  opt.bootstrap = !no_bootstrap;
  opt.tight_kappa = tight_kappa;
  opt.provider = provider == "exact" ? exact_provider() : greedy_provider();
  return opt;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial kernel and solvers for Chordal Vertex Deletion", "cvd"};
  app.require_subcommand(1);

  std::string in_path, out_path, trace_path, provider = "greedy";
  bool no_bootstrap = false, tight_kappa = false, exact = false, greedy = false;

  auto* kern = app.add_subcommand("kernelize", "Reduce an instance to an equivalent kernel");
  kern->add_option("input", in_path, "Instance file")->required();
  kern->add_option("-o,--output", out_path, "Kernel output file")->required();
  kern->add_flag("--no-bootstrap", no_bootstrap, "Skip the second pipeline run");
  kern->add_option("--trace", trace_path, "Write the rule trace as JSON");
  kern->add_flag("--tight-kappa", tight_kappa, "Use the largest bag as the path bag bound");
  kern->add_option("--provider", provider, "Approximate solution provider")->check(CLI::IsMember({"greedy", "exact"}));

  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("input", in_path, "Instance file")->required();
  auto* fx = solve->add_flag("--exact", exact, "Exact minimum solution (default)");
  solve->add_flag("--greedy", greedy, "Greedy hole hitting")->excludes(fx);

  std::string verify_in, verify_out;
  auto* verify = app.add_subcommand("verify", "Check that a kernel is equivalent to its input");
  verify->add_option("input", verify_in, "Original instance")->required();
  verify->add_option("kernel", verify_out, "Kernel instance")->required();

  auto* stats = app.add_subcommand("stats", "Kernelize and print a JSON run report");
  stats->add_option("input", in_path, "Instance file")->required();
  stats->add_flag("--no-bootstrap", no_bootstrap, "Skip the second pipeline run");
  stats->add_flag("--tight-kappa", tight_kappa, "Use the largest bag as the path bag bound");
  stats->add_option("--provider", provider, "Approximate solution provider")->check(CLI::IsMember({"greedy", "exact"}));

  GeneratorSpec spec;
  auto* gen = app.add_subcommand("generate", "Write a generated instance");
  gen->add_option("generator", spec.name, "gnp | planted-chordal-plus-noise | long-clique-path | flower")
      ->required()
      ->check(CLI::IsMember(generator_names()));
  gen->add_option("--seed", spec.seed, "Random seed");
  gen->add_option("-n", spec.n, "Vertex count (gnp, planted)");
  gen->add_option("-p", spec.p, "Edge probability (gnp)");
  gen->add_option("-k", spec.k, "Budget written to the header");
  gen->add_option("--holes", spec.holes, "Noise vertices (planted)");
  gen->add_option("--bags", spec.bags, "Bag count (long-clique-path)");
  gen->add_option("--bagsize", spec.bagsize, "Bag size (long-clique-path)");
  gen->add_option("--extra", spec.extra, "Hole-closing vertices (long-clique-path)");
  gen->add_option("--petals", spec.petals, "Petal count (flower)");
  gen->add_option("-o,--output", out_path, "Output file (stdout if omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (kern->parsed() || stats->parsed()) {
      AnnotatedInstance input = read_instance_file(in_path);
      auto t0 = std::chrono::steady_clock::now();
      KernelOutcome res = kernelize(input, options_for(no_bootstrap, tight_kappa, provider));
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      if (stats->parsed()) {
        out << run_report(input, res, ms).dump(2) << '\n';
        return kExitOk;
      }
      write_instance_file(out_path, write_instance(res.instance, {std::string("kernel ") + to_string(res.verdict)}));
      if (!trace_path.empty()) {
        nlohmann::json j{{"verdict", to_string(res.verdict)}, {"ops", trace_to_json(res.trace)}};
        write_instance_file(trace_path, j.dump(2) + "\n");
      }
      out << to_string(res.verdict) << ' ' << res.instance.graph.num_vertices() << ' '
          << res.instance.graph.num_edges() << ' ' << res.instance.k << '\n';
      return res.verdict == Verdict::No ? kExitNo : kExitOk;
    }
    if (solve->parsed()) {
      AnnotatedInstance inst = read_instance_file(in_path);
      if (greedy) {
        VertexList s = greedy_solution(inst.graph);
        for (const Edge& e : inst.edges_with(EdgeLabel::Mandatory))
          if (!contains(s, e.first) && !contains(s, e.second)) s = set_union(s, VertexList{e.first});
        out << format_set(s) << '\n';
        if (static_cast<int>(s.size()) > inst.k) err << "note: greedy solution exceeds k = " << inst.k << '\n';
        return kExitOk;
      }
      auto s = minimum_solution(inst);
      if (!s) {
        out << "NO\n";
        return kExitNo;
      }
      out << format_set(*s) << '\n';
      return kExitOk;
    }
    if (verify->parsed()) {
      AnnotatedInstance a = read_instance_file(verify_in);
      AnnotatedInstance b = read_instance_file(verify_out);
      if (a.graph.num_vertices() <= kVerifyOracleLimit && b.graph.num_vertices() <= kVerifyOracleLimit) {
        bool ya = annotated_cvd(a).has_value(), yb = annotated_cvd(b).has_value();
        out << (ya == yb ? "equivalent" : "not equivalent") << " (" << (ya ? "yes" : "no") << '/'
            << (yb ? "yes" : "no") << ")\n";
        return ya == yb ? kExitOk : kExitNo;
      }
      // Too large for the oracle: check the kernel is what the pipeline produces.
      KernelOutcome res = kernelize(a);
      bool same = compact(res.instance) == b && b.k <= a.k;
      out << (same ? "invariants hold" : "invariants violated") << " (oracle skipped above "
          << kVerifyOracleLimit << " vertices)\n";
      return same ? kExitOk : kExitNo;
    }
    if (gen->parsed()) {
      Generated g = generate(spec);
      std::string text = write_instance(g.instance, g.comments);
      if (out_path.empty()) out << text;
      else write_instance_file(out_path, text);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cvd
