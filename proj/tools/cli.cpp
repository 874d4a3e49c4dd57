#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "instance_spec.hpp"
#include "locham/errors.hpp"
#include "locham/exact.hpp"
#include "locham/greedy.hpp"
#include "locham/instances.hpp"
#include "locham/qc_map.hpp"
#include "locham/sampler.hpp"
#include "verify.hpp"

namespace locham::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string instance;
};

struct OutputOptions {
  std::string format = "json";
  std::string out_path;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "Hamiltonian file (text or JSON); '-' or omitted reads stdin");
  cmd->add_option("--instance", in.instance, "Inline generator spec, e.g. heisenberg:cycle=4,periodic");
}

void add_output(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", out.out_path, "Write output to this path instead of stdout");
}

Hamiltonian load(const InputOptions& opt, std::istream& in) {
  if (!opt.path.empty() && !opt.instance.empty()) {
    throw UsageError("give either an input file or --instance, not both");
  }
  if (!opt.instance.empty()) return build_instance(opt.instance);
  std::string text;
  if (opt.path.empty() || opt.path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(opt.path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + opt.path);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  return read_hamiltonian(text);
}

std::string human(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Flat "key: value" rendering of a report, 6 significant digits.
void render_text(const json& j, std::ostream& os, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const json& v = it.value();
    if (v.is_object()) {
      render_text(v, os, key);
    } else if (v.is_array()) {
      if (!v.empty() && v.front().is_object()) {
        for (std::size_t i = 0; i < v.size(); ++i) render_text(v[i], os, key + "[" + std::to_string(i) + "]");
      } else {
        os << key << ":";
        for (const auto& e : v) os << ' ' << (e.is_number_float() ? human(e.get<double>()) : e.dump());
        os << '\n';
      }
    } else if (v.is_number_float()) {
      os << key << ": " << human(v.get<double>()) << '\n';
    } else if (v.is_string()) {
      os << key << ": " << v.get<std::string>() << '\n';
    } else {
      os << key << ": " << v.dump() << '\n';
    }
  }
}

void emit(const json& j, const OutputOptions& opt, std::ostream& out) {
  std::ostringstream body;
  if (opt.format == "text") {
    render_text(j, body);
  } else {
    body << j.dump(2) << '\n';
  }
  if (opt.out_path.empty()) {
    out << body.str();
  } else {
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + opt.out_path);
    file << body.str();
  }
}

json map_report(const Hamiltonian& h) {
  const BooleanPolynomial f = hamiltonian_to_poly(h);
  const HamiltonianStats st = h.stats();
  const InfluenceReport inf = influence_report(h);
  return {{"n", h.n_qubits()},
          {"m", st.m},
          {"k", st.k},
          {"ell_q", st.ell_q},
          {"ell_c", f.max_variable_degree()},
          {"d", f.degree()},
          {"offset", h.offset()},
          {"l1", st.l1},
          {"l2sq", st.l2sq},
          {"variance", variance(f)},
          {"W", total_weight(f)},
          {"i_max", inf.i_max},
          {"influences", inf.influences}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Product-state bounds on extremal eigenvalues of local qubit Hamiltonians", "locham"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a named instance in the text format");
  gen->require_subcommand(1);
  std::string gen_out;
  gen->add_option("--out", gen_out, "Write to this path instead of stdout");

  auto* gen_heis = gen->add_subcommand("heisenberg", "Antiferromagnetic Heisenberg model on a lattice");
  std::uint32_t cycle = 0;
  std::string grid, triangular;
  bool periodic = false;
  auto* cycle_opt = gen_heis->add_option("--cycle", cycle, "Cycle length");
  auto* grid_opt = gen_heis->add_option("--grid", grid, "Square lattice WxH");
  auto* tri_opt = gen_heis->add_option("--triangular", triangular, "Triangular lattice WxH");
  cycle_opt->excludes(grid_opt)->excludes(tri_opt);
  grid_opt->excludes(tri_opt);
  gen_heis->add_flag("--periodic", periodic, "Periodic boundary conditions");

  auto* gen_reg = gen->add_subcommand("signed-regular", "Random +-1 ZZ couplings on a random r-regular graph");
  std::uint32_t reg_n = 0, reg_r = 0;
  std::uint64_t reg_seed = 0;
  gen_reg->add_option("--n", reg_n)->required();
  gen_reg->add_option("--r", reg_r)->required();
  gen_reg->add_option("--seed", reg_seed)->required();

  auto* gen_cz = gen->add_subcommand("complete-zz", "Sum of Z_i Z_j over all pairs");
  std::uint32_t cz_n = 0;
  gen_cz->add_option("--n", cz_n)->required();

  auto* gen_rand = gen->add_subcommand("random", "m distinct random Pauli strings of weight <= k");
  std::uint32_t rnd_n = 0, rnd_k = 0;
  std::size_t rnd_m = 0;
  std::uint64_t rnd_seed = 0;
  std::string rnd_coef = "uniform";
  gen_rand->add_option("--n", rnd_n)->required();
  gen_rand->add_option("--m", rnd_m)->required();
  gen_rand->add_option("--k", rnd_k)->required();
  gen_rand->add_option("--seed", rnd_seed)->required();
  gen_rand->add_option("--coef", rnd_coef)->check(CLI::IsMember({"uniform", "pm1"}));

  for (auto* sub : {gen_heis, gen_reg, gen_cz, gen_rand}) sub->fallthrough();

  // map
  auto* map = app.add_subcommand("map", "Polynomial statistics of f_H");
  InputOptions map_in;
  OutputOptions map_out;
  add_input(map, map_in);
  add_output(map, map_out);

  // greedy
  auto* greedy = app.add_subcommand("greedy", "Greedy product-state energy bound");
  InputOptions greedy_in;
  OutputOptions greedy_out;
  bool want_min = false, want_max = false, trace = false;
  add_input(greedy, greedy_in);
  add_output(greedy, greedy_out);
  auto* min_flag = greedy->add_flag("--min", want_min, "Bound the ground-state energy (default)");
  auto* max_flag = greedy->add_flag("--max", want_max, "Bound the top eigenvalue");
  min_flag->excludes(max_flag);
  greedy->add_flag("--trace", trace, "Print one line per substitution round to stderr");

  // sample
  auto* sample = app.add_subcommand("sample", "Random product-state lower bound on the operator norm");
  InputOptions sample_in;
  OutputOptions sample_out;
  std::size_t n_samples = 0;
  std::uint64_t sample_seed = 0;
  unsigned workers = 1;
  add_input(sample, sample_in);
  add_output(sample, sample_out);
  sample->add_option("--n-samples", n_samples, "Number of samples (default 3^k * 1000)");
  sample->add_option("--seed", sample_seed, "Random seed")->required();
  sample->add_option("--workers", workers, "Worker threads; output does not depend on it")
      ->check(CLI::PositiveNumber);

  // exact
  auto* exact = app.add_subcommand("exact", "Extremal eigenvalues by matrix-free Lanczos");
  InputOptions exact_in;
  OutputOptions exact_out;
  EigenOptions eig;
  add_input(exact, exact_in);
  add_output(exact, exact_out);
  exact->add_option("--tol", eig.tol, "Residual tolerance relative to l1")->check(CLI::PositiveNumber);
  exact->add_option("--max-n", eig.max_qubits, "Largest qubit count to attempt");

  // verify
  auto* verify = app.add_subcommand("verify", "Run every cross-check on one instance");
  InputOptions verify_in;
  OutputOptions verify_out;
  VerifyOptions vopt;
  add_input(verify, verify_in);
  add_output(verify, verify_out);
  verify->add_option("--seed", vopt.seed, "Seed for random test points and samples")->required();
  verify->add_option("--samples", vopt.n_samples, "Sampler draws for the norm sandwich");

  std::vector<const char*> argv{"locham"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (gen->parsed()) {
      Hamiltonian h;
      if (gen_heis->parsed()) {
        LatticeSpec lattice;
        lattice.periodic = periodic;
        auto dims = [](const std::string& s) {
          const auto x = s.find('x');
          if (x == std::string::npos) throw UsageError("expected WxH, got '" + s + "'");
          return std::pair<std::uint32_t, std::uint32_t>(std::stoul(s.substr(0, x)), std::stoul(s.substr(x + 1)));
        };
        if (*cycle_opt) {
          lattice.kind = LatticeSpec::Kind::Cycle;
          lattice.width = cycle;
        } else if (*grid_opt) {
          lattice.kind = LatticeSpec::Kind::Grid2d;
          std::tie(lattice.width, lattice.height) = dims(grid);
        } else if (*tri_opt) {
          lattice.kind = LatticeSpec::Kind::Triangular;
          std::tie(lattice.width, lattice.height) = dims(triangular);
        } else {
          throw UsageError("heisenberg needs --cycle, --grid or --triangular");
        }
        h = heisenberg_afm(lattice);
      } else if (gen_reg->parsed()) {
        h = random_signed_regular_zz(reg_n, reg_r, reg_seed);
      } else if (gen_cz->parsed()) {
        h = complete_zz(cz_n);
      } else {
        h = random_klocal(rnd_n, rnd_m, rnd_k, rnd_seed,
                          rnd_coef == "pm1" ? CoefDistribution::PlusMinusOne : CoefDistribution::Uniform);
      }
      const std::string text = serialize_hamiltonian(h);
      if (gen_out.empty()) {
        out << text;
      } else {
        std::ofstream file(gen_out, std::ios::binary);
        if (!file) throw UsageError("cannot write " + gen_out);
        file << text;
      }
      return kSuccess;
    }

    if (map->parsed()) {
      const Hamiltonian h = load(map_in, in);
      json report = map_report(h);
      if (h.empty()) {
        err << "warning: Hamiltonian has no non-identity terms\n";
        report["warning"] = "no non-identity terms";
      }
      emit(report, map_out, out);
      return kSuccess;
    }

    if (greedy->parsed()) {
      const Hamiltonian h = load(greedy_in, in);
      const Direction dir = want_max ? Direction::Max : Direction::Min;
      const EnergyCertificate cert = energy_bound(h, dir);
      if (trace) {
        for (const auto& r : cert.greedy.rounds) {
          err << "round " << r.index << " S={";
          for (std::size_t i = 0; i < r.chosen.size(); ++i) err << (i ? "," : "") << r.chosen[i];
          err << "} M=" << human(r.max_coeff) << " y=(";
          for (std::size_t i = 0; i < r.sub_assignment.size(); ++i) {
            err << (i ? "," : "") << (r.sub_assignment[i] > 0 ? "+" : "-");
          }
          err << ") const " << human(r.constant_before) << " -> " << human(r.constant_after) << " W "
              << human(r.weight_before) << " -> " << human(r.weight_after) << '\n';
        }
      }
      const BooleanPolynomial f = hamiltonian_to_poly(h.traceless_part());
      const auto problem = audit_certificate(dir == Direction::Min ? -f : f, cert.greedy);
      json report = to_json(cert);
      report["audit"] = problem ? json(*problem) : json("ok");
      emit(report, greedy_out, out);
      if (problem || !cert.two_local_floor_holds) {
        err << "certificate audit failed: " << (problem ? *problem : "2-local floor violated") << '\n';
        return kVerificationFailed;
      }
      return kSuccess;
    }

    if (sample->parsed()) {
      const Hamiltonian h = load(sample_in, in);
      const std::size_t count = n_samples ? n_samples : default_sample_count(h);
      emit(to_json(sample_norm_bound(h, count, sample_seed, workers)), sample_out, out);
      return kSuccess;
    }

    if (exact->parsed()) {
      const Hamiltonian h = load(exact_in, in);
      emit(to_json(extremal_eigs(h, eig)), exact_out, out);
      return kSuccess;
    }

    if (verify->parsed()) {
      const Hamiltonian h = load(verify_in, in);
      const VerifyReport report = verify_instance(h, vopt);
      emit(to_json(report), verify_out, out);
      if (auto failure = report.first_failure()) {
        err << "verification failed: " << failure->name << ": " << failure->detail << '\n';
        return kVerificationFailed;
      }
      return kSuccess;
    }
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace locham::cli
