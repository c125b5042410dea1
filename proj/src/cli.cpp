#include "kronroot/cli.hpp"

#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "kronroot/matrix_io.hpp"
#include "kronroot/roots.hpp"

namespace kronroot::cli {
namespace {

struct Options {
  std::string input;
  std::string second;
  std::string out;
  std::string mode = "r";
  Index m = 0;
  Index n = 0;
  std::uint32_t k = 2;
  std::uint32_t j = 1;
  double tol = kDefaultTol;
  bool sum_filter = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void emit(const Matrix& M, const Options& opts, std::ostream& out) {
  if (opts.out.empty()) {
    write_matrix(out, M);
  } else {
    write_matrix_file(opts.out, M);
  }
}

void require_tol_usage(const Matrix& M, const CLI::Option* tol_flag) {
  if (tol_flag->count() > 0 && M.field().is_exact()) {
    throw UsageError("--tol only applies to real and complex matrices");
  }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

int cmd_kron(const Options& opts, std::ostream& out) {
  emit(kron(read_matrix_file(opts.input), read_matrix_file(opts.second)), opts, out);
  return kExitYes;
}

int cmd_power(const Options& opts, std::ostream& out) {
  emit(kron_power(read_matrix_file(opts.input), opts.k), opts, out);
  return kExitYes;
}

int cmd_rearrange(const Options& opts, const CLI::Option* k_flag, std::ostream& out) {
  const Matrix M = read_matrix_file(opts.input);
  const Shape shape{opts.m, opts.n, opts.k};
  if (opts.mode == "r") {
    if (k_flag->count() > 0 && opts.k != 2) throw UsageError("--mode r requires --k 2");
    emit(rearrange_r(M, opts.m, opts.n), opts, out);
  } else if (opts.mode == "j") {
    emit(rearrange_j(M, shape, opts.j), opts, out);
  } else {
    if (char_divides(M.field(), opts.k)) {
      throw UsageError("characteristic " + std::to_string(M.field().characteristic()) +
                       " divides k = " + std::to_string(opts.k) +
                       "; the summed rearrangement is degenerate");
    }
    emit(rearrange_sum(M, shape), opts, out);
  }
  return kExitYes;
}

int cmd_root(const Options& opts, const CLI::Option* tol_flag, std::ostream& out) {
  const Matrix M = read_matrix_file(opts.input);
  require_tol_usage(M, tol_flag);
  const Shape shape{opts.m, opts.n, opts.k};

  RootOutcome outcome;
  std::string certificate;
  if (opts.k == 2 && !opts.sum_filter) {
    outcome = square_root(M, opts.m, opts.n, opts.tol);
    const auto cert = check_square(M, opts.m, opts.n, opts.tol);
    certificate = " symmetric=" + bool_text(cert.symmetric) + " rank=" + std::to_string(cert.rank) +
                  " trace=" + cert.trace.to_string();
  } else {
    outcome = kth_root(M, shape, KthRootOptions{opts.tol, opts.sum_filter});
    if (!char_divides(M.field(), opts.k)) {
      certificate = " sum_rank=" + std::to_string(check_sum_rank(M, shape, opts.tol).rank);
    }
  }

  out << to_string(outcome.status);
  if (outcome.root) out << " ambiguity=" << to_string(outcome.ambiguity);
  out << certificate << '\n';
  if (outcome.root) emit(*outcome.root, opts, out);

  const bool affirmative =
      outcome.status == RootStatus::Found || outcome.status == RootStatus::ZeroMatrix;
  return affirmative ? kExitYes : kExitNo;
}

int cmd_check(const Options& opts, const CLI::Option* tol_flag, std::ostream& out) {
  const Matrix M = read_matrix_file(opts.input);
  require_tol_usage(M, tol_flag);
  const Shape shape{opts.m, opts.n, opts.k};
  const bool obstructed = char_divides(M.field(), opts.k);

  std::string symmetric = "n/a";
  std::string trace_text = "n/a";
  std::string sum_rank = "n/a";
  Index r = 0;
  bool holds = false;
  if (!obstructed) {
    const auto report = check_sum_rank(M, shape, opts.tol);
    sum_rank = std::to_string(report.rank);
    holds = report.rank_one;
  }
  if (opts.k == 2) {
    const auto cert = check_square(M, opts.m, opts.n, opts.tol);
    symmetric = bool_text(cert.symmetric);
    trace_text = cert.trace.to_string();
    r = cert.rank;
    holds = cert.symmetric && cert.rank == 1;
  } else {
    r = rank(rearrange_j(M, shape, 1), opts.tol);
    if (obstructed) holds = r == 1;
  }

  out << "symmetric=" << symmetric << " rank=" << r << " sum_rank=" << sum_rank
      << " trace=" << trace_text << '\n';
  return holds ? kExitYes : kExitNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kronecker products, rearrangements and Kronecker roots", "kronroot"};
  app.require_subcommand(1);
  Options opts;

  auto add_shape = [&opts](CLI::App* sub) {
    sub->add_option("--m", opts.m, "factor row count")->required()->check(CLI::PositiveNumber);
    sub->add_option("--n", opts.n, "factor column count")->required()->check(CLI::PositiveNumber);
    return sub->add_option("--k", opts.k, "Kronecker order")->check(CLI::Range(1, 64));
  };

  auto* kron_cmd = app.add_subcommand("kron", "Kronecker product of two matrix files");
  kron_cmd->add_option("a", opts.input)->required();
  kron_cmd->add_option("b", opts.second)->required();
  kron_cmd->add_option("--out", opts.out, "output file (default: stdout)");

  auto* power_cmd = app.add_subcommand("power", "k-th Kronecker power of a matrix file");
  power_cmd->add_option("a", opts.input)->required();
  power_cmd->add_option("--k", opts.k, "Kronecker order")->required()->check(CLI::Range(1, 64));
  power_cmd->add_option("--out", opts.out, "output file (default: stdout)");

  auto* rearrange_cmd = app.add_subcommand("rearrange", "apply R, R^(j) or the summed rearrangement");
  rearrange_cmd->add_option("matrix", opts.input)->required();
  auto* rearrange_k = add_shape(rearrange_cmd);
  rearrange_cmd->add_option("--mode", opts.mode, "r | j | sum")
      ->check(CLI::IsMember({"r", "j", "sum"}));
  rearrange_cmd->add_option("--j", opts.j, "factor position for --mode j")->check(CLI::Range(1, 64));
  rearrange_cmd->add_option("--out", opts.out, "output file (default: stdout)");

  auto* root_cmd = app.add_subcommand("root", "extract a Kronecker k-th root");
  root_cmd->add_option("matrix", opts.input)->required();
  add_shape(root_cmd);
  auto* root_tol = root_cmd->add_option("--tol", opts.tol, "relative tolerance (floating fields)")
                       ->check(CLI::NonNegativeNumber);
  root_cmd->add_flag("--sum-filter", opts.sum_filter,
                     "reject unless the summed rearrangement has rank one");
  root_cmd->add_option("--out", opts.out, "root output file (default: stdout)");

  auto* check_cmd = app.add_subcommand("check", "report the rank-one characterization");
  check_cmd->add_option("matrix", opts.input)->required();
  add_shape(check_cmd);
  auto* check_tol = check_cmd->add_option("--tol", opts.tol, "relative tolerance (floating fields)")
                        ->check(CLI::NonNegativeNumber);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("kronroot");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "kronroot: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (kron_cmd->parsed()) return cmd_kron(opts, out);
    if (power_cmd->parsed()) return cmd_power(opts, out);
    if (rearrange_cmd->parsed()) return cmd_rearrange(opts, rearrange_k, out);
    if (root_cmd->parsed()) return cmd_root(opts, root_tol, out);
    if (check_cmd->parsed()) return cmd_check(opts, check_tol, out);
  } catch (const std::exception& e) {
    err << "kronroot: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kronroot::cli
