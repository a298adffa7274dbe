#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mknf/errors.hpp"
#include "mknf/golden.hpp"
#include "mknf/textio.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEngine = 1;  // NonConvergence / TooLarge
constexpr int kExitParse = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mknf::ParseError("cannot read '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string kb_path;
  std::string filter = "singletons";
  std::string format = "text";
  std::string t_list;
  std::string p_list;
  bool legacy = false;
  int cap = 12;
};

mknf::PhiConfig make_config(const Options& opt) {
  auto f = mknf::FilterStrategy::parse(opt.filter);
  if (!f) throw mknf::ParseError("unknown filter '" + opt.filter + "'", 0, 0);
  if (f->kind == mknf::FilterStrategy::Kind::BoundedSubsets && f->bound < 0)
    throw mknf::ParseError("subsets:K requires K >= 0", 0, 0);
  return {*f, opt.legacy};
}

mknf::ReportFormat make_format(const Options& opt) {
  if (opt.format == "text") return mknf::ReportFormat::Text;
  if (opt.format == "json") return mknf::ReportFormat::Json;
  throw mknf::ParseError("unknown format '" + opt.format + "'", 0, 0);
}

int run(const std::string& cmd, const Options& opt) {
  using namespace mknf;
  if (cmd == "selftest") {
    auto results = golden::run_selftest();
    bool all = true;
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) std::cout << " — " << r.detail;
      std::cout << "\n";
      all = all && r.pass;
    }
    std::cout << (all ? "selftest: ok\n" : "selftest: FAILED\n");
    return all ? kExitOk : kExitEngine;
  }

  KnowledgeBase kb = parse_kb(slurp(opt.kb_path));
  PhiConfig cfg = make_config(opt);
  ReportFormat fmt = make_format(opt);
  PhiOperator phi(kb, cfg);

  if (cmd == "lfp" || cmd == "trace") {
    RunReport r = run_lfp(phi);
    std::cout << print_report(kb, r, fmt, cmd == "trace");
    return kExitOk;
  }
  if (cmd == "enumerate") {
    EnumReport r = run_enumerate(phi, opt.cap);
    std::cout << print_report(kb, r, fmt);
    return kExitOk;
  }
  if (cmd == "check") {
    AtomSet t = parse_atom_list(kb, opt.t_list);
    AtomSet p = parse_atom_list(kb, opt.p_list);
    ModelVerdict v = check_model(phi, t, p);
    std::cout << print_check(kb, t, p, v, fmt);
    return kExitOk;
  }
  throw ParseError("unknown command '" + cmd + "'", 0, 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable-fixpoint engine for ground hybrid knowledge bases"};
  app.require_subcommand(1);

  Options opt;
  std::string cmd;

  auto add_common = [&](CLI::App* sub, bool needs_kb) {
    if (needs_kb) sub->add_option("kb", opt.kb_path, "knowledge base file")->required();
    sub->add_option("--filter", opt.filter,
                    "extraction filter: none|empty|singletons|subsets:K|powerset");
    sub->add_flag("--legacy", opt.legacy, "baseline mode without recurrent extraction");
    sub->add_option("--format", opt.format, "text|json");
  };

  add_common(app.add_subcommand("lfp", "compute the least stable fixpoint"), true);
  add_common(app.add_subcommand("trace", "least stable fixpoint with inner iteration logs"),
             true);
  auto* en = app.add_subcommand("enumerate", "enumerate all stable fixpoints");
  add_common(en, true);
  en->add_option("--cap", opt.cap, "maximum signature size for enumeration");
  auto* ck = app.add_subcommand("check", "check one approximation");
  add_common(ck, true);
  ck->add_option("--T", opt.t_list, "comma-separated true atoms")->required();
  ck->add_option("--P", opt.p_list, "comma-separated possibly-true atoms")->required();
  app.add_subcommand("selftest", "run the built-in golden corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, opt);
  } catch (const mknf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const mknf::NonConvergence& e) {
    std::cerr << "fixpoint stage failed: " << e.what() << "\n";
    return kExitEngine;
  } catch (const mknf::TooLarge& e) {
    std::cerr << "enumeration stage refused: " << e.what() << "\n";
    return kExitEngine;
  } catch (const mknf::SignatureTooLarge& e) {
    std::cerr << "oracle stage refused: " << e.what() << "\n";
    return kExitEngine;
  }
}
