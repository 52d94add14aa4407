// qjensen: command-line front end.
//
//   qjensen jensen --fn f.json [--r R] [--n 48] [--tol 1e-6] [--format json|csv|text] [--out P]
//   qjensen zeros --fn f.json [--format json|text]
//   qjensen verify-ops --suite crf|...|all [--seed 7] [--count 20] [--h H] [--format ...]
//   qjensen corpus [--manifest corpus/manifest.json] [--n 48] [--tol 1e-6] [--format ...]
//
// Exit codes: 0 ok, 1 tolerance failure, 2 hypothesis violation, 3 input error.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "qjensen/error.hpp"
#include "qjensen/io.hpp"
#include "qjensen/jensen.hpp"
#include "qjensen/suites.hpp"
#include "qjensen/zeros_poles.hpp"

using namespace qjensen;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitInput = 3;

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::HypothesisViolation:
    case ErrorKind::ZeroOnBoundary:
    case ErrorKind::PoleOnBoundary:
    case ErrorKind::ZeroAtOrigin:
    case ErrorKind::PoleAtOrigin:
    case ErrorKind::PoleOutsideRegion:
    case ErrorKind::NonFiniteIntegrand:
      return kExitHypothesis;
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidDenominator:
    case ErrorKind::ZeroDenominator:
    case ErrorKind::DegreeCapExceeded:
    case ErrorKind::ZeroPolynomial:
      return kExitInput;
    default:
      return kExitTolerance;
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + out);
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

std::string quaternion_text(const Quaternion& q) {
  std::ostringstream s;
  s.precision(12);
  s << q;
  return s.str();
}

ordered_json quaternion_json(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

struct JensenOptions {
  std::string fn;
  double r = 0.0;
  int n = 0;
  double tol = 1e-6;
  std::string format = "text";
  std::string out;
};

struct JensenRun {
  JensenReport report;
  std::string name;
  int escalated_from = 0;
};

JensenRun run_jensen(const FunctionSpec& spec, double r_flag, int n_flag) {
  const double r = r_flag > 0.0 ? r_flag : spec.r.value_or(0.0);
  if (!(r > 0.0)) throw Error(ErrorKind::InvalidArgument, spec.source + ": no radius (use --r)");
  int n = n_flag > 0 ? n_flag : spec.n.value_or(48);
  JensenRun run;
  run.name = spec.name;
  const int wanted = recommended_order(spec.f, r, n);
  if (wanted > n) {
    run.escalated_from = n;
    n = wanted;
  }
  run.report = jensen_check(spec.f, r, n);
  if (run.escalated_from > 0) {
    run.report.notes.push_back("zero or pole sphere close to the boundary: quadrature order raised from " +
                               std::to_string(run.escalated_from));
  }
  return run;
}

int cmd_jensen(const JensenOptions& o) {
  const FunctionSpec spec = load_function(o.fn);
  const JensenRun run = run_jensen(spec, o.r, o.n);
  if (run.escalated_from > 0) {
    std::cerr << "warning: zero or pole near the boundary sphere; using n = " << run.report.n << '\n';
  }
  if (o.format == "json") {
    emit(to_json(run.report), o.out);
  } else if (o.format == "csv") {
    emit(csv_header() + '\n' + to_csv_row(run.name, run.report), o.out);
  } else {
    emit(to_text(run.report), o.out);
  }
  return std::abs(run.report.residual) <= o.tol ? kExitOk : kExitTolerance;
}

int cmd_zeros(const std::string& fn, const std::string& format, const std::string& out) {
  const FunctionSpec spec = load_function(fn);
  const std::vector<ZeroRecord> zeros =
      spec.f.num().degree() > 0 ? classify_zeros(spec.f) : std::vector<ZeroRecord>{};
  const PoleStructure poles = pole_structure(spec.f);

  if (format == "json") {
    ordered_json j;
    j["name"] = spec.name;
    ordered_json zs = ordered_json::array();
    for (const ZeroRecord& z : zeros) {
      zs.push_back({{"kind", to_string(z.kind)},
                    {"point", quaternion_json(z.representative)},
                    {"alpha", z.alpha},
                    {"beta", z.beta},
                    {"total_multiplicity", z.total_multiplicity}});
    }
    ordered_json ps = ordered_json::array();
    for (const PoleRecord& p : poles.poles) {
      ordered_json e = {{"kind", to_string(p.kind)},
                        {"point", quaternion_json(p.representative)},
                        {"alpha", p.alpha},
                        {"beta", p.beta},
                        {"order", p.order},
                        {"spherical_order", p.spherical_order}};
      if (p.exceptional_point) {
        e["exceptional_point"] = quaternion_json(*p.exceptional_point);
        e["exceptional_order"] = p.exceptional_order;
        e["isolated_multiplicity"] = p.isolated_multiplicity;
      }
      ps.push_back(e);
    }
    j["zeros"] = zs;
    j["poles"] = ps;
    j["s1"] = poles.s1;
    j["s2"] = poles.s2;
    j["s"] = poles.s;
    emit(j.dump(2), out);
    return kExitOk;
  }

  std::ostringstream s;
  s << spec.name << '\n';
  for (const ZeroRecord& z : zeros) {
    s << "zero " << to_string(z.kind) << ' ' << quaternion_text(z.representative)
      << " total multiplicity " << z.total_multiplicity << '\n';
  }
  for (const PoleRecord& p : poles.poles) {
    s << "pole " << to_string(p.kind) << ' ' << quaternion_text(p.representative) << " order "
      << p.order;
    if (p.kind != PoleKind::Real) s << " spherical order " << p.spherical_order;
    if (p.exceptional_point) {
      s << "; exceptional point " << quaternion_text(*p.exceptional_point) << " order "
        << p.exceptional_order << " isolated multiplicity " << p.isolated_multiplicity;
    }
    s << '\n';
  }
  if (!poles.poles.empty()) s << "s1 " << poles.s1 << " s2 " << poles.s2 << " s " << poles.s << '\n';
  emit(s.str(), out);
  return kExitOk;
}

int cmd_verify_ops(const std::string& suite, std::uint64_t seed, int count, double h,
                   const std::string& format, const std::string& out) {
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool pass = true;
  std::string text;
  ordered_json arr = ordered_json::array();
  for (const std::string& name : names) {
    const SuiteResult res =
        run_suite(name, seed, count, h > 0.0 ? std::optional<double>(h) : std::nullopt);
    pass = pass && res.pass();
    if (format == "json") {
      arr.push_back(ordered_json::parse(to_json(res)));
    } else if (format == "csv") {
      std::string csv = to_csv(res);
      if (!text.empty()) csv = csv.substr(csv.find('\n') + 1);  // one header
      text += csv;
    } else {
      text += to_text(res);
    }
  }
  if (format == "json") text = (names.size() == 1 ? arr[0] : arr).dump(2);
  emit(text, out);
  return pass ? kExitOk : kExitTolerance;
}

unsigned worker_count(std::size_t jobs) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("JENSEN_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, static_cast<unsigned>(cap));
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

struct CorpusResult {
  std::string group;
  std::string name;
  std::optional<JensenRun> run;
  std::string error;
  int code = kExitOk;
};

int cmd_corpus(const std::string& manifest, int n, double tol, const std::string& format,
               const std::string& out) {
  const std::vector<CorpusEntry> entries = load_manifest(manifest);
  std::vector<CorpusResult> results(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      CorpusResult& res = results[i];
      res.group = entries[i].group;
      res.name = entries[i].file.stem().string();
      try {
        const FunctionSpec spec = load_function(entries[i].file);
        res.name = spec.name;
        res.run = run_jensen(spec, 0.0, n);
        res.code = std::abs(res.run->report.residual) <= tol ? kExitOk : kExitTolerance;
      } catch (const Error& e) {
        res.error = e.what();
        res.code = exit_code(e);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < worker_count(entries.size()); ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  int code = kExitOk;
  std::ostringstream s;
  ordered_json arr = ordered_json::array();
  if (format == "csv") s << "group," << csv_header() << ",status\n";
  for (const CorpusResult& res : results) {
    code = std::max(code, res.code);
    const std::string status = res.code == kExitOk ? "ok" : res.run ? "tolerance" : res.error;
    if (format == "json") {
      ordered_json j = {{"group", res.group}, {"name", res.name}, {"status", status}};
      if (res.run) j["report"] = ordered_json::parse(to_json(res.run->report));
      arr.push_back(j);
    } else if (format == "csv") {
      if (res.run) {
        s << res.group << ',' << to_csv_row(res.name, res.run->report) << ',' << status << '\n';
      } else {
        s << res.group << ',' << res.name << ",,,,,,,,,,,,,\"" << status << "\"\n";
      }
    } else {
      s << (res.code == kExitOk ? "ok   " : "FAIL ") << res.group << '/' << res.name;
      if (res.run) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "  r=%g n=%d residual=%.3e", res.run->report.r,
                      res.run->report.n, res.run->report.residual);
        s << buf;
      } else {
        s << "  " << res.error;
      }
      s << '\n';
    }
  }
  emit(format == "json" ? arr.dump(2) : s.str(), out);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic Jensen formula verification"};
  app.require_subcommand(1);

  JensenOptions jo;
  auto* jensen = app.add_subcommand("jensen", "check the Jensen formula for one function");
  jensen->add_option("--fn", jo.fn, "function file (JSON)")->required();
  jensen->add_option("--r", jo.r, "radius (default: from the file)");
  jensen->add_option("--n", jo.n, "quadrature order (default: from the file, else 48)");
  jensen->add_option("--tol", jo.tol, "residual tolerance");
  jensen->add_option("--format", jo.format)->check(CLI::IsMember({"json", "csv", "text"}));
  jensen->add_option("--out", jo.out, "output file (default: stdout)");

  std::string zfn, zformat = "text", zout;
  auto* zeros = app.add_subcommand("zeros", "classify zeros and poles");
  zeros->add_option("--fn", zfn, "function file (JSON)")->required();
  zeros->add_option("--format", zformat)->check(CLI::IsMember({"json", "text"}));
  zeros->add_option("--out", zout);

  std::string suite = "all", vformat = "text", vout;
  std::uint64_t seed = 7;
  int count = 20;
  double h = 0.0;
  auto* verify = app.add_subcommand("verify-ops", "finite-difference identity suites");
  verify->set_help_flag("--help", "print this help message and exit");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", suite)->check(CLI::IsMember(choices));
  verify->add_option("--seed", seed);
  verify->add_option("--count", count, "samples per suite")->check(CLI::PositiveNumber);
  verify->add_option("--h", h, "override the terminal step");
  verify->add_option("--format", vformat)->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--out", vout);

  std::string manifest = "corpus/manifest.json", cformat = "text", cout_path;
  int cn = 0;
  double ctol = 1e-6;
  auto* corpus = app.add_subcommand("corpus", "run the Jensen check over a corpus manifest");
  corpus->add_option("--manifest", manifest);
  corpus->add_option("--n", cn, "quadrature order (default: per file, else 48)");
  corpus->add_option("--tol", ctol);
  corpus->add_option("--format", cformat)->check(CLI::IsMember({"json", "csv", "text"}));
  corpus->add_option("--out", cout_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*jensen) return cmd_jensen(jo);
    if (*zeros) return cmd_zeros(zfn, zformat, zout);
    if (*verify) return cmd_verify_ops(suite, seed, count, h, vformat, vout);
    if (*corpus) return cmd_corpus(manifest, cn, ctol, cformat, cout_path);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
