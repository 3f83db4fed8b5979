// Command-line front end: load text-format workspaces, run a construction,
// write the result in the same format plus a report.
//
// Exit codes: 0 ok, 1 usage, 2 validation failure, 3 undecided at the coset
// limit, 4 parse or reference error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "crossmod/induced.hpp"
#include "crossmod/report.hpp"
#include "crossmod/textformat.hpp"

using namespace crossmod;

namespace {

enum Exit { kOk = 0, kUsage = 1, kValidation = 2, kUndecided = 3, kParse = 4 };

struct Common {
  std::vector<std::string> files;
  std::string out, report, name = "result";
};

struct Options {
  Common common;
  std::string xmod, x2mod, hom, theta, morphism, left, right, precrossed, presentation_out;
  std::string strategy = "auto";
  std::string kind = "induced";
  int coset_limit = 100000;
  bool compare = false;
};

Strategy parse_strategy(const std::string& s) {
  static const std::map<std::string, Strategy> names{
      {"auto", Strategy::Auto}, {"epi", Strategy::Epi}, {"mono", Strategy::Mono}, {"general", Strategy::GeneralTC}};
  return names.at(s);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o), ws_(parse_files(o.common.files)) {}

  int emit(int code) {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", std::chrono::duration<double>(elapsed).count());
    report_.add("time", buf);
    const std::string text = out_.empty() ? std::string() : out_.serialize();
    if (o_.common.report.empty()) std::cout << report_.str();
    else write_file(o_.common.report, report_.str());
    if (!out_.empty()) {
      if (o_.common.out.empty()) std::cout << '\n' << text;
      else write_file(o_.common.out, text);
    }
    return code;
  }

  int check() {
    for (const auto& n : ws_.names()) {
      switch (ws_.kind(n)) {
        case BlockKind::PreCrossed:
        case BlockKind::XMod: describe(report_, n + " ", ws_.precrossed(n)); break;
        case BlockKind::X2Mod: describe(report_, n + " ", ws_.x2mod(n)); break;
        case BlockKind::Group: report_.add(n, describe_group(ws_.group(n))); break;
        default: report_.add(n, std::string(to_string(ws_.kind(n))) + " valid"); break;
      }
    }
    report_.add("objects", static_cast<long long>(ws_.names().size()));
    return emit(kOk);
  }

  int pullback() {
    const CrossedModule n = ws_.xmod(o_.xmod);
    const PullbackXModResult r = pullback_xmod(n, ws_.hom(o_.hom));
    describe(report_, "", r.module);
    out_.add_xmod(o_.common.name, r.module);
    out_.add_xmorphism(o_.common.name + "_proj", r.proj_to_N);
    return emit(kOk);
  }

  int pullback2() {
    const PullbackX2Result r = pullback_x2mod(ws_.x2mod(o_.x2mod), ws_.hom(o_.hom));
    describe(report_, "", r.module);
    out_.add_x2mod(o_.common.name, r.module);
    out_.add_x2morphism(o_.common.name + "_proj", r.proj);
    return emit(kOk);
  }

  InducedOptions induced_options() const {
    InducedOptions opts;
    opts.strategy = parse_strategy(o_.strategy);
    opts.coset_limit = o_.coset_limit;
    opts.compare_relators = o_.compare;
    return opts;
  }

  template <class R>
  int finish_induced(const R& r) {
    report_.add("strategy", to_string(r.strategy_used));
    report_.add("status", to_string(r.status));
    describe(report_, r.summary);
    if (!o_.presentation_out.empty() || !r.decided()) {
      Workspace pw;
      pw.add_presentation(o_.common.name + "_presentation", r.presentation);
      if (!o_.presentation_out.empty()) write_file(o_.presentation_out, pw.serialize());
      else out_.add_presentation(o_.common.name + "_presentation", r.presentation);
    }
    return emit(r.decided() ? kOk : kUndecided);
  }

  int induce() {
    const CrossedModule m = ws_.xmod(o_.xmod);
    const InducedXModResult r = induced_xmod(m, ws_.hom(o_.hom), induced_options());
    if (r.decided()) {
      describe(report_, "", *r.module);
      out_.add_xmod(o_.common.name, *r.module);
      out_.add_xmorphism(o_.common.name + "_canonical", *r.canonical);
    }
    return finish_induced(r);
  }

  int induce2() {
    const XModMorphism& theta = ws_.xmorphism(o_.theta);
    const TwoCrossedModule& x = ws_.x2mod(o_.x2mod);
    const InducedX2Result r = induced_x2mod(theta, x, induced_options());
    if (r.decided()) {
      describe(report_, "", *r.module);
      out_.add_x2mod(o_.common.name, *r.module);
      out_.add_x2morphism(o_.common.name + "_canonical", *r.canonical);
    }
    if (o_.compare && r.decided()) {
      InducedOptions std_opts = induced_options();
      std_opts.compare_relators = false;
      const InducedX2Result s = induced_x2mod(theta, x, std_opts);
      report_.add("standard relators order",
                  s.decided() ? std::to_string(s.module->L()->order()) : std::string("undecided"));
      report_.add("variant relators order", std::to_string(r.module->L()->order()));
    }
    return finish_induced(r);
  }

  int pushout2() {
    const X2Morphism& left = ws_.x2morphism(o_.left);
    const InducedX2Result r = o_.right.empty() ? cokernel_x2(left, induced_options())
                                               : pushout_x2(left, ws_.x2morphism(o_.right), induced_options());
    if (r.decided()) {
      describe(report_, "", *r.module);
      std::string orders;
      for (int k : r.component_orders) orders += (orders.empty() ? "" : ", ") + std::to_string(k);
      report_.add("induced component orders", orders);
      out_.add_x2mod(o_.common.name, *r.module);
      for (std::size_t i = 0; i < r.injections.size(); ++i)
        out_.add_x2morphism(o_.common.name + "_in" + std::to_string(i + 1), r.injections[i]);
    }
    return finish_induced(r);
  }

  int peiffer() {
    const TwoCrossedModule x = from_precrossed_peiffer(ws_.precrossed(o_.precrossed));
    describe(report_, "", x);
    out_.add_x2mod(o_.common.name, x);
    return emit(kOk);
  }

  int reflect() {
    const CrossedModule x = reflect_to_xmod(ws_.x2mod(o_.x2mod));
    describe(report_, "", x);
    out_.add_xmod(o_.common.name, x);
    return emit(kOk);
  }

  int universal() {
    const XModMorphism& h = ws_.xmorphism(o_.morphism);
    if (o_.kind == "pullback") {
      const PullbackXModResult pb = pullback_xmod(CrossedModule::from(h.dst()), h.eta());
      const Factorization f = pullback_xmod_universal(CrossedModule::from(h.src()), h, pb);
      return finish_universal(f, pb.module.M());
    }
    const InducedXModResult r = induced_xmod(CrossedModule::from(h.src()), h.eta(), induced_options());
    if (!r.decided()) return finish_induced(r);
    return finish_universal(induced_xmod_universal(r, h), r.module->M());
  }

  int universal2() {
    const X2Morphism& f = ws_.x2morphism(o_.morphism);
    if (o_.kind == "pullback") {
      const PullbackX2Result pb = pullback_x2mod(f.dst(), f.f0());
      return finish_universal(pullback_x2_universal(f.src(), f, pb), pb.module.M());
    }
    const XModMorphism theta = XModMorphism::make(f.f1(), f.f0(), f.src().base(), f.dst().base());
    const InducedX2Result r = induced_x2mod(theta, f.src(), induced_options());
    if (!r.decided()) return finish_induced(r);
    return finish_universal(induced_x2_universal(r, f), r.module->L());
  }

 private:
  int finish_universal(const Factorization& f, const Group& through) {
    report_.add("construction", o_.kind);
    report_.add("factorization", "exists");
    report_.add("through", describe_group(through));
    report_.add("uniqueness", f.uniqueness_checked ? "unique among " + std::to_string(f.candidates) + " candidate"
                                                   : std::string("not checked (above the enumeration bound)"));
    out_.add_hom(o_.common.name, f.map);
    if (f.top) out_.add_hom(o_.common.name + "_top", *f.top);
    return emit(kOk);
  }

  const Options& o_;
  Workspace ws_;
  Workspace out_;
  Report report_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::UnresolvedReference:
    case ErrorKind::UndeclaredSymbol: return kParse;
    case ErrorKind::UndecidedAtLimit: return kUndecided;
    default: return kValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossed modules and 2-crossed modules over finite groups"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("files", o.common.files, "Input files in the workspace text format")->required();
    sub->add_option("--out", o.common.out, "Write constructed objects here (default: stdout)");
    sub->add_option("--report", o.common.report, "Write the report here (default: stdout)");
    sub->add_option("--name", o.common.name, "Name of the constructed object")->check([](const std::string& s) {
      return s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')
                 ? std::string("names start with a letter or '_'")
                 : std::string();
    });
  };
  const auto induced_flags = [&](CLI::App* sub) {
    sub->add_option("--strategy", o.strategy, "auto, epi, mono or general")
        ->check(CLI::IsMember({"auto", "epi", "mono", "general"}));
    sub->add_option("--coset-limit", o.coset_limit, "Maximum number of active cosets")->check(CLI::PositiveNumber);
    sub->add_option("--presentation", o.presentation_out, "Export the enumerated presentation to this file");
  };

  auto* check = app.add_subcommand("check", "Validate every object and summarize");
  common(check);
  auto* pb = app.add_subcommand("pullback", "Pullback crossed module along a hom into the base");
  common(pb);
  pb->add_option("--xmod", o.xmod)->required();
  pb->add_option("--hom", o.hom)->required();
  auto* pb2 = app.add_subcommand("pullback2", "Pullback 2-crossed module along a hom into the base");
  common(pb2);
  pb2->add_option("--x2mod", o.x2mod)->required();
  pb2->add_option("--hom", o.hom)->required();
  auto* ind = app.add_subcommand("induce", "Induced crossed module along a hom out of the base");
  common(ind);
  induced_flags(ind);
  ind->add_option("--xmod", o.xmod)->required();
  ind->add_option("--hom", o.hom)->required();
  auto* ind2 = app.add_subcommand("induce2", "Induced 2-crossed module along a pre-crossed morphism");
  common(ind2);
  induced_flags(ind2);
  ind2->add_option("--x2mod", o.x2mod)->required();
  ind2->add_option("--theta", o.theta, "xmorphism out of the base of the 2-crossed module")->required();
  ind2->add_flag("--compare-relators", o.compare, "Use the alternative second PL3 relator and compare orders");
  auto* po = app.add_subcommand("pushout2", "Push-out of 2-crossed modules (cokernel without --right)");
  common(po);
  induced_flags(po);
  po->add_option("--left", o.left)->required();
  po->add_option("--right", o.right);
  auto* pf = app.add_subcommand("peiffer", "2-crossed module from the Peiffer subgroup of a pre-crossed module");
  common(pf);
  pf->add_option("--precrossed", o.precrossed)->required();
  auto* rf = app.add_subcommand("reflect", "Reflect a 2-crossed module to a crossed module");
  common(rf);
  rf->add_option("--x2mod", o.x2mod)->required();
  auto* un = app.add_subcommand("universal", "Factor an xmorphism through the induced or pullback module");
  common(un);
  induced_flags(un);
  un->add_option("--morphism", o.morphism)->required();
  un->add_option("--kind", o.kind)->check(CLI::IsMember({"induced", "pullback"}));
  auto* un2 = app.add_subcommand("universal2", "Factor an x2morphism through the induced or pullback module");
  common(un2);
  induced_flags(un2);
  un2->add_option("--morphism", o.morphism)->required();
  un2->add_option("--kind", o.kind)->check(CLI::IsMember({"induced", "pullback"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Runner run(o);
    if (*check) return run.check();
    if (*pb) return run.pullback();
    if (*pb2) return run.pullback2();
    if (*ind) return run.induce();
    if (*ind2) return run.induce2();
    if (*po) return run.pushout2();
    if (*pf) return run.peiffer();
    if (*rf) return run.reflect();
    if (*un) return run.universal();
    if (*un2) return run.universal2();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kUsage;
}
