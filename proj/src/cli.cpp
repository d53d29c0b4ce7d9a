#include "hurwitz/cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hurwitz/cutjoin.hpp"
#include "hurwitz/eo.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/quasipoly.hpp"
#include "hurwitz/verify.hpp"
#include "hurwitz/xibasis.hpp"

namespace hurwitz {
namespace {

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw BadInput("not an integer: '" + s + "'");
  return v;
}

// "2", "1,3" or "1..3".
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = parse_int(text.substr(0, dots)), hi = parse_int(text.substr(dots + 2));
    if (lo > hi) throw BadInput("empty range '" + text + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) out.push_back(parse_int(part));
  if (out.empty()) throw BadInput("empty list");
  return out;
}

int single(const std::string& text, const char* flag) {
  const auto v = parse_range(text);
  if (v.size() != 1) throw BadInput(std::string(flag) + " takes a single value here");
  return v.front();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoFailure("cannot open '" + path + "' for writing");
  f << content;
  f.close();
  if (!f) throw IoFailure("write to '" + path + "' failed");
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FitResidualNonzero:
    case ErrorKind::InterpolationUnstable:
    case ErrorKind::NoConvergence:
    case ErrorKind::CollapsedToIdentity:
    case ErrorKind::Degenerate:
    case ErrorKind::NearPole:
      return kExitVerifyFailed;
    default:
      return kExitBadInput;
  }
}

struct Options {
  std::string a = "2", g = "0", n = "1", mu, format = "text", output, method = "principal";
  bool normalized = false;
  int samples = 5, max_degree = 5, max_m = 3, max_genus = 1, order = 12, k_max = 3, mu_max = 6;
  double tol = 1e-6;
  std::uint64_t seed = 7;
  EOConfig eo;
};

void add_eo_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--quad-points", o.eo.quad_points, "trapezoid nodes per circle");
  cmd->add_option("--radius-factor", o.eo.radius_factor, "circle radius as a fraction of the clearance");
  cmd->add_option("--newton-tol", o.eo.newton_tol, "relative residual accepted by the involution solver");
  cmd->add_option("--newton-max-iter", o.eo.newton_max_iter, "Newton iteration cap");
  cmd->add_option("--min-separation", o.eo.min_separation, "minimum point spacing relative to a^(-1/a)");
  cmd->add_option("--method", o.method, "principal or nested")->check(CLI::IsMember({"principal", "nested"}));
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int emit_report(const VerificationReport& rep, const Options& o, std::ostream& out) {
  const std::string text = dump(rep.to_json());
  if (o.output.empty())
    out << text;
  else
    write_file(o.output, text);
  return rep.pass ? kExitOk : kExitVerifyFailed;
}

int run_compute(const Options& o, std::ostream& out) {
  const int a = single(o.a, "--a"), g = single(o.g, "--genus");
  if (o.mu.empty()) throw BadInput("--mu is required");
  const MuTuple mu = MuTuple::parse(o.mu);
  const Rational v = o.normalized ? hurwitz_normalized(a, g, mu) : hurwitz_raw(a, g, mu);
  if (o.format == "json") {
    out << dump({{"schema_version", 1},
                 {"kind", "hurwitz_number"},
                 {"a", a},
                 {"genus", g},
                 {"mu", mu.parts()},
                 {"normalized", o.normalized},
                 {"value", to_string(v)}});
  } else {
    out << to_string(v) << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& suite, Options o, std::ostream& out) {
  o.eo.method = o.method == "nested" ? EOMethod::Nested : EOMethod::PrincipalParts;
  if (suite == "oracle") return emit_report(verify_oracle(parse_range(o.a), o.max_degree, o.max_m, o.max_genus), o, out);
  if (suite == "series") return emit_report(verify_series(parse_range(o.a), o.order), o, out);

  // The remaining suites take one (a, g, n) or loop over ranges of each.
  VerificationReport all;
  all.suite = suite;
  const auto as = parse_range(o.a);
  const auto gs = suite == "residues" ? std::vector<int>{0} : parse_range(o.g);
  const auto ns = suite == "residues" ? std::vector<int>{1} : parse_range(o.n);
  const bool many = as.size() * gs.size() * ns.size() > 1;
  for (int a : as)
    for (int g : gs)
      for (int n : ns) {
        VerificationReport r;
        if (suite == "fit")
          r = verify_fit(a, g, n);
        else if (suite == "string")
          r = check_string(a, g, n);
        else if (suite == "dilaton")
          r = check_dilaton(a, g, n);
        else if (suite == "theorem1")
          r = verify_theorem1(a, g, n, o.samples, o.tol, o.seed, o.eo);
        else if (suite == "eo-properties")
          r = check_eo_properties(a, g, n, o.samples, o.seed, o.eo);
        else if (suite == "residues")
          r = verify_residues(a, o.k_max, o.tol);
        else
          throw BadInput("unknown suite '" + suite + "'");
        if (!many) return emit_report(r, o, out);
        all.params["runs"].push_back(r.params);
        std::string tag = "a=" + std::to_string(a);
        if (suite != "residues") tag += " g=" + std::to_string(g) + " n=" + std::to_string(n);
        all.merge(r, tag + ": ");
      }
  return emit_report(all, o, out);
}

int run_export(const std::string& target, const Options& o) {
  if (o.output.empty()) throw BadInput("export needs -o PATH");
  const int a = single(o.a, "--a"), g = single(o.g, "--g"), n = single(o.n, "--n");
  if (target == "table") {
    if (o.mu_max < 1) throw BadInput("--mu-max must be positive");
    std::string csv;
    for (int i = 1; i <= n; ++i) csv += "mu" + std::to_string(i) + ",";
    csv += "value\n";
    for (const auto& [mu, v] : series_coefficients(a, g, n, o.mu_max)) {
      for (int m : mu) csv += std::to_string(m) + ",";
      csv += to_string(v) + "\n";
    }
    write_file(o.output, csv);
  } else if (target == "xi") {
    write_file(o.output, dump(fit_F(a, g, n).to_json()));
  } else if (target == "q") {
    write_file(o.output, dump(extract_Q(a, g, n).to_json()));
  } else if (target == "brackets") {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [idx, v] : hodge_brackets(fit_F(a, g, n)))
      entries.push_back({{"r", idx.first}, {"k", idx.second}, {"value", to_string(v)}});
    write_file(o.output, dump({{"schema_version", 1},
                               {"kind", "hodge_brackets"},
                               {"a", a},
                               {"g", g},
                               {"n", n},
                               {"entries", entries}}));
  } else {
    throw BadInput("unknown export target '" + target + "'");
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbifold Hurwitz numbers: exact tables, quasi-polynomials and the numeric recursion"};
  app.require_subcommand(1);
  Options o;
  std::string suite, target;

  auto* compute = app.add_subcommand("compute", "print H_{g;mu} exactly");
  compute->add_option("--a", o.a, "order of the orbifold point")->required();
  compute->add_option("--genus,--g", o.g, "genus");
  compute->add_option("--mu", o.mu, "comma-separated ramification, e.g. 3,1")->required();
  compute->add_flag("--normalized", o.normalized, "H |Aut mu| / m! instead of the raw count");
  compute->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite and print a JSON report");
  verify->add_option("suite", suite, "oracle|series|fit|string|dilaton|theorem1|residues|eo-properties")
      ->required()
      ->check(CLI::IsMember({"oracle", "series", "fit", "string", "dilaton", "theorem1", "residues", "eo-properties"}));
  verify->add_option("--a", o.a, "value, list (1,3) or range (1..3)");
  verify->add_option("--g,--genus", o.g, "genus; list or range");
  verify->add_option("--n", o.n, "number of points; list or range");
  verify->add_option("--samples", o.samples);
  verify->add_option("--tol", o.tol);
  verify->add_option("--seed", o.seed, "mt19937_64 seed for sample tuples");
  verify->add_option("--max-degree", o.max_degree, "oracle: largest |mu|");
  verify->add_option("--max-m", o.max_m, "oracle: largest number of simple branch points");
  verify->add_option("--max-genus", o.max_genus, "oracle: largest genus");
  verify->add_option("--order", o.order, "series: truncation order");
  verify->add_option("--k-max", o.k_max, "residues: largest k");
  verify->add_option("-o,--output", o.output, "write the report here instead of stdout");
  add_eo_flags(verify, o);

  auto* exp = app.add_subcommand("export", "write tables and expansions to a file");
  exp->add_option("target", target, "table|xi|q|brackets")
      ->required()
      ->check(CLI::IsMember({"table", "xi", "q", "brackets"}));
  exp->add_option("--a", o.a)->required();
  exp->add_option("--g,--genus", o.g);
  exp->add_option("--n", o.n);
  exp->add_option("--mu-max", o.mu_max, "table: largest part");
  exp->add_option("-o,--output", o.output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadInput;
  }

  try {
    if (*compute) return run_compute(o, out);
    if (*verify) return run_verify(suite, o, out);
    return run_export(target, o);
  } catch (const BadInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_for(e.kind());
  }
}

}  // namespace hurwitz
