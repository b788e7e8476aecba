// egz: command-line front end for the zero-sum solvers.

#include "egz/bench.hpp"
#include "egz/egz.hpp"
#include "egz/errors.hpp"
#include "egz/generate.hpp"
#include "egz/instance_io.hpp"
#include "egz/oracle.hpp"
#include "egz/prime_target.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr std::uint64_t kAuditLimit = 2000;

egz::Instance read_instance(const std::string& path) {
  if (path.empty() || path == "-") return egz::parse_instance(std::cin);
  std::ifstream in(path);
  if (!in) throw egz::InputError("cannot open " + path);
  return egz::parse_instance(in);
}

egz::PrimeTargetOptions audit_options(bool requested, std::uint64_t n) {
  if (requested && n > kAuditLimit) {
    std::cerr << "warning: --debug-audit ignored for n > " << kAuditLimit << "\n";
    return {};
  }
  return {requested};
}

void print_certificate(const egz::Certificate& cert, bool json) {
  if (json) {
    std::vector<std::uint64_t> one_based;
    one_based.reserve(cert.indices.size());
    for (const auto i : cert.indices) one_based.push_back(std::uint64_t{i} + 1);
    const nlohmann::json j = {{"n", cert.modulus}, {"indices", one_based}, {"sum_mod_n", 0}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << egz::format_indices(cert.indices) << '\n';
  }
}

void require_verified(const egz::Instance& inst, const egz::Certificate& cert) {
  const egz::VerifyResult v = egz::verify_certificate(inst.n, inst.values, cert);
  if (!v) throw egz::InvariantViolation(std::string("self-check failed: ") + egz::to_string(v.reason));
}

std::vector<egz::Residue> to_residues(const std::vector<std::int64_t>& xs, std::uint64_t p) {
  std::vector<egz::Residue> out;
  out.reserve(xs.size());
  for (const auto x : xs) out.push_back(egz::mod_reduce(x, p));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-sum subsequence solver: n of 2n-1 integers with sum divisible by n"};
  app.require_subcommand(1);

  // solve
  std::string solve_path;
  bool solve_json = false, solve_verify = false, solve_audit = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance file (n, then 2n-1 integers)");
  solve->add_option("input", solve_path, "Instance path, '-' or omitted for stdin");
  solve->add_flag("--json", solve_json, "Print a JSON object");
  solve->add_flag("--verify", solve_verify, "Check the certificate before printing");
  solve->add_flag("--debug-audit", solve_audit, "Audit solver state after every transition (n <= 2000)");

  // verify
  std::string verify_instance, verify_cert;
  auto* verify = app.add_subcommand("verify", "Check a certificate against an instance");
  verify->add_option("instance", verify_instance, "Instance path")->required();
  verify->add_option("certificate", verify_cert, "Certificate path (solve output), '-' for stdin")
      ->required();

  // gen
  std::uint64_t gen_n = 0, gen_seed = 1;
  std::string gen_dist = "uniform";
  auto* gen = app.add_subcommand("gen", "Generate a deterministic instance on stdout");
  gen->add_option("--n", gen_n, "Modulus n")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--dist", gen_dist, "uniform | adversarial-few-residues | single-residue-heavy");

  // bench
  std::vector<std::uint64_t> bench_sizes;
  std::uint64_t bench_seeds = 1, bench_seed = 1;
  std::string bench_dist = "uniform", bench_mode = "egz", bench_csv;
  auto* bench = app.add_subcommand("bench", "Time solves and dump instrumentation counters as CSV");
  bench->add_option("--sizes", bench_sizes, "Sizes (primes in prime-target mode)")
      ->required()
      ->delimiter(',');
  bench->add_option("--seeds", bench_seeds, "Seeds per size");
  bench->add_option("--seed", bench_seed, "First seed");
  bench->add_option("--dist", bench_dist, "Instance distribution");
  bench->add_option("--mode", bench_mode, "egz | prime-target");
  bench->add_option("--csv", bench_csv, "Write CSV here instead of stdout");

  // prime-target
  std::uint64_t pt_p = 0;
  std::int64_t pt_tau = 0;
  std::string pt_d;
  bool pt_verify = false, pt_audit = false;
  auto* pt = app.add_subcommand("prime-target", "Subset of p-1 nonzero residues summing to tau mod p");
  pt->add_option("--p", pt_p, "Prime modulus")->required();
  pt->add_option("--tau", pt_tau, "Target residue")->required();
  pt->add_option("--d", pt_d, "The p-1 differences, space or comma separated")->required();
  pt->add_flag("--verify", pt_verify, "Recompute the subset sum");
  pt->add_flag("--debug-audit", pt_audit, "Audit solver state after every transition");

  // prime-egz
  std::string pe_path;
  bool pe_json = false, pe_verify = false, pe_audit = false;
  auto* pe = app.add_subcommand("prime-egz", "Solve an instance whose n is prime");
  pe->add_option("input", pe_path, "Instance path, '-' or omitted for stdin");
  pe->add_flag("--json", pe_json, "Print a JSON object");
  pe->add_flag("--verify", pe_verify, "Check the certificate before printing");
  pe->add_flag("--debug-audit", pe_audit, "Audit solver state after every transition");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference answers");
  oracle->require_subcommand(1);
  std::uint64_t os_p = 0;
  std::int64_t os_tau = 0;
  std::string os_d;
  auto* os = oracle->add_subcommand("subset-sum", "Subset of d summing to tau mod p");
  os->add_option("--p", os_p, "Modulus")->required()->check(CLI::PositiveNumber);
  os->add_option("--tau", os_tau, "Target")->required();
  os->add_option("--d", os_d, "Values")->required();
  std::string oe_path;
  auto* oe = oracle->add_subcommand("egz", "Zero-sum n-subset by dynamic programming (n <= 12)");
  oe->add_option("input", oe_path, "Instance path, '-' or omitted for stdin");
  std::uint64_t ss_p = 0;
  std::vector<std::string> ss_aps;
  auto* ss = oracle->add_subcommand("sumset", "Sumset of progressions AP(v, l) in Z_p");
  ss->add_option("--p", ss_p, "Modulus")->required()->check(CLI::PositiveNumber);
  ss->add_option("--ap", ss_aps, "Progression as v:l (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve) {
      const egz::Instance inst = read_instance(solve_path);
      egz::EgzSolver solver(audit_options(solve_audit, inst.n));
      const egz::Certificate cert = solver.solve(inst.n, inst.values);
      if (solve_verify) require_verified(inst, cert);
      print_certificate(cert, solve_json);
    } else if (*verify) {
      const egz::Instance inst = read_instance(verify_instance);
      egz::Certificate cert;
      cert.modulus = inst.n;
      if (verify_cert == "-") {
        cert.indices = egz::parse_certificate_indices(std::cin);
      } else {
        std::ifstream in(verify_cert);
        if (!in) throw egz::InputError("cannot open " + verify_cert);
        cert.indices = egz::parse_certificate_indices(in);
      }
      const egz::VerifyResult v = egz::verify_certificate(inst.n, inst.values, cert);
      std::cout << (v ? "valid" : std::string("invalid: ") + egz::to_string(v.reason)) << '\n';
      return v ? kExitOk : kExitRejected;
    } else if (*gen) {
      const auto dist = egz::parse_distribution(gen_dist);
      if (!dist) throw egz::InputError("unknown distribution " + gen_dist);
      egz::write_instance(std::cout, egz::generate_instance(gen_n, gen_seed, *dist));
    } else if (*bench) {
      const auto dist = egz::parse_distribution(bench_dist);
      if (!dist) throw egz::InputError("unknown distribution " + bench_dist);
      egz::BenchMode mode;
      if (bench_mode == "egz") {
        mode = egz::BenchMode::Egz;
      } else if (bench_mode == "prime-target") {
        mode = egz::BenchMode::PrimeTarget;
      } else {
        throw egz::InputError("unknown bench mode " + bench_mode);
      }
      std::unique_ptr<std::ofstream> file;
      if (!bench_csv.empty()) {
        file = std::make_unique<std::ofstream>(bench_csv);
        if (!*file) throw egz::InputError("cannot write " + bench_csv);
      }
      std::ostream& out = file ? *file : std::cout;
      out << egz::bench_csv_header() << '\n';
      for (const std::uint64_t n : bench_sizes) {
        for (std::uint64_t s = 0; s < bench_seeds; ++s) {
          out << egz::to_csv_row(egz::bench_one(mode, n, bench_seed + s, *dist)) << '\n';
        }
      }
    } else if (*pt) {
      const auto raw = egz::parse_integer_list(pt_d);
      for (const auto x : raw) {
        if (pt_p > 0 && egz::mod_reduce(x, pt_p) == 0) throw egz::InputError("zero difference");
      }
      const auto d = to_residues(raw, pt_p);
      const egz::Residue tau = egz::mod_reduce(pt_tau, pt_p);
      egz::PrimeTargetSolver solver(audit_options(pt_audit, pt_p));
      const egz::TargetSolution sol = solver.solve(pt_p, d, tau);
      if (pt_verify) {
        egz::Residue sum = 0;
        for (const auto j : sol.indices) sum = egz::add_mod(sum, d[j], pt_p);
        if (sum != tau) throw egz::InvariantViolation("subset sum does not reach tau");
      }
      std::cout << egz::format_indices(sol.indices) << '\n';
    } else if (*pe) {
      const egz::Instance inst = read_instance(pe_path);
      if (!egz::is_prime_trial(inst.n)) throw egz::InputError("prime-egz needs a prime n");
      const auto residues = to_residues(inst.values, inst.n);
      egz::PrimeEgzSolver solver(audit_options(pe_audit, inst.n));
      egz::Certificate cert = solver.solve(inst.n, residues);
      if (pe_verify) require_verified(inst, cert);
      print_certificate(cert, pe_json);
    } else if (*os) {
      const auto d = to_residues(egz::parse_integer_list(os_d), os_p);
      const auto sol = egz::oracle::brute_subset_sum(os_p, d, egz::mod_reduce(os_tau, os_p));
      if (!sol) {
        std::cout << "none\n";
        return kExitRejected;
      }
      std::cout << egz::format_indices(*sol) << '\n';
    } else if (*oe) {
      const egz::Instance inst = read_instance(oe_path);
      if (inst.n > 12) throw egz::InputError("oracle egz is limited to n <= 12");
      const auto sol = egz::oracle::brute_egz(inst.n, inst.values);
      if (!sol) {
        std::cout << "none\n";
        return kExitRejected;
      }
      std::cout << egz::format_indices(*sol) << '\n';
    } else if (*ss) {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> aps;
      for (const std::string& spec : ss_aps) {
        const auto colon = spec.find(':');
        if (colon == std::string::npos) throw egz::InputError("progression must be v:l, got " + spec);
        const auto v = egz::parse_integer_list(spec.substr(0, colon));
        const auto l = egz::parse_integer_list(spec.substr(colon + 1));
        if (v.size() != 1 || l.size() != 1 || l[0] < 0) throw egz::InputError("bad progression " + spec);
        aps.emplace_back(egz::mod_reduce(v[0], ss_p), static_cast<std::uint64_t>(l[0]));
      }
      const auto set = egz::oracle::brute_sumset(ss_p, aps);
      std::string line;
      for (const auto r : set) line += (line.empty() ? "" : " ") + std::to_string(r);
      std::cout << line << '\n';
    }
  } catch (const egz::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const egz::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::bad_alloc&) {
    std::cerr << "input error: instance too large for available memory\n";
    return kExitInput;
  }
  return kExitOk;
}
