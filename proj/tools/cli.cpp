#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliques/cliques.hpp"

namespace cliques::cli {
namespace {

struct Options {
  // shared
  std::string magma;
  std::string out_path;
  std::optional<std::uint64_t> guard;
  unsigned workers = default_workers();
  // compose / basis / tree
  std::string lhs, rhs, in_path;
  int pos = 1;
  std::string basis = "fund";
  std::string from = "fund";
  std::string to = "fund";
  // dims / enumerate / span
  std::string family;
  std::optional<int> max;  // dims default 5, verify default 3
  int arity = 2;
  std::string format = "text";
  bool count_only = false;
  // hilbert
  std::int64_t m = 2;
  int terms = 5;
  bool dual = false;
  // verify
  std::string suite = "all";
  std::size_t samples = 1000;
  std::uint64_t seed = 20160512;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) fail(ErrorKind::invalid_argument, "cannot write '" + path + "'");
  f << text;
}

MagmaPtr magma_or_null(const std::string& name) { return name.empty() ? nullptr : builtin_magma(name); }

MagmaPtr required_magma(const std::string& name) {
  require(!name.empty(), ErrorKind::invalid_argument, "--magma is required here");
  return builtin_magma(name);
}

std::uint64_t resolve_guard(const Options& o, std::ostream& err, const std::string& what, const Integer& estimate) {
  if (!o.guard) return kDefaultEnumerationGuard;
  err << "# resource estimate: " << what << " = " << estimate.get_str() << " (guard " << *o.guard << ")\n";
  return *o.guard;
}

Basis basis_flag(const std::string& name) { return parse_basis(name); }

/// A bare clique read in basis `b` (the JSON carries no tag of its own).
LinComb read_combination(const Json& j, const MagmaPtr& magma, Basis b) {
  LinComb f = lincomb_from_json(j, magma);
  if (j.contains("terms")) return f;
  LinComb out(f.magma_ptr(), f.arity(), b);
  for (const auto& [p, c] : f.terms()) out.add(p, c);
  return out;
}

int do_compose(const Options& o, std::ostream& out, std::ostream& err) {
  err << "# compose magma=" << (o.magma.empty() ? "(from input)" : o.magma) << " basis=" << o.basis
      << " pos=" << o.pos << " lhs=" << o.lhs << " rhs=" << o.rhs << "\n";
  const MagmaPtr magma = magma_or_null(o.magma);
  const Json lj = parse_json_text(read_file(o.lhs));
  const Json rj = parse_json_text(read_file(o.rhs));
  const Basis b = basis_flag(o.basis);
  if (b == Basis::fundamental && lj.is_object() && rj.is_object() && !lj.contains("terms") && !rj.contains("terms")) {
    const Clique p = clique_from_json(lj, magma);
    const Clique q = clique_from_json(rj, magma);
    emit(clique_json(compose(p, o.pos, q)).dump() + "\n", o.out_path, out);
    return kOk;
  }
  const LinComb f = read_combination(lj, magma, b);
  const LinComb g = read_combination(rj, magma, b);
  require(f.basis() == b && g.basis() == b, ErrorKind::basis_mismatch,
          "inputs are not in the " + o.basis + " basis");
  emit(lincomb_json(basis_compose(f, o.pos, g)).dump() + "\n", o.out_path, out);
  return kOk;
}

int do_basis(const Options& o, std::ostream& out, std::ostream& err) {
  err << "# basis magma=" << (o.magma.empty() ? "(from input)" : o.magma) << " from=" << o.from << " to=" << o.to
      << " in=" << o.in_path << "\n";
  const Json j = parse_json_text(read_file(o.in_path));
  const LinComb f = read_combination(j, magma_or_null(o.magma), basis_flag(o.from));
  emit(lincomb_json(to_basis(f, basis_flag(o.to))).dump() + "\n", o.out_path, out);
  return kOk;
}

int do_dims(const Options& o, std::ostream& out, std::ostream& err) {
  const OperadFamily fam = parse_family(o.family);
  const MagmaPtr magma = builtin_magma(o.magma.empty() ? "D0" : o.magma);
  const int max = o.max.value_or(5);
  require(max >= 1 && max <= 12, ErrorKind::invalid_argument, "--max must be in 1..12");
  const auto arcs = static_cast<unsigned long>(arc_count(max));
  const std::uint64_t guard =
      resolve_guard(o, err, "solid-arc supports at arity " + std::to_string(max), ipow(Integer(2), arcs));
  const DimensionTable t = dimension_table(fam, magma, max, guard);
  std::ostringstream hdr;
  hdr << "# dims family=" << t.family << " magma=" << t.magma << " max=" << max
      << " expected=" << (t.citation.empty() ? "none" : t.citation) << "\n";
  if (o.format == "csv") {
    err << hdr.str();
    emit(table_csv(t), o.out_path, out);
  } else if (o.format == "json") {
    err << hdr.str();
    emit(table_json(t).dump() + "\n", o.out_path, out);
  } else {
    std::string text = hdr.str() + table_csv(t);
    text += t.has_expected() ? std::string("match: ") + (t.verdict() ? "true" : "false") + "\n"
                             : "match: unchecked (no registered sequence)\n";
    emit(text, o.out_path, out);
  }
  return t.verdict() ? kOk : kVerdictFalse;
}

int do_hilbert(const Options& o, std::ostream& out) {
  require(o.terms >= 1, ErrorKind::invalid_argument, "--terms must be >= 1");
  const Series s = o.dual ? nc_dual_hilbert(o.m, o.terms) : nc_hilbert(o.m, o.terms);
  std::ostringstream text;
  text << "# hilbert m=" << o.m << " terms=" << o.terms << " dual=" << (o.dual ? "true" : "false") << "\n";
  for (int n = 1; n <= o.terms; ++n) text << (n > 1 ? " " : "") << s[n].get_str();
  text << "\n";
  emit(text.str(), o.out_path, out);
  return kOk;
}

int do_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const MagmaPtr magma = required_magma(o.magma);
  err << "# enumerate magma=" << magma->name() << " arity=" << o.arity
      << " family=" << (o.family.empty() ? "all" : o.family) << (o.count_only ? " count" : " stream") << "\n";
  require(magma->is_finite(), ErrorKind::invalid_argument, "cannot enumerate cliques over an infinite magma");
  const std::uint64_t guard =
      resolve_guard(o, err, "clique space at arity " + std::to_string(o.arity), space_size(magma->size(), o.arity));
  std::optional<OperadFamily> fam;
  if (!o.family.empty()) {
    fam = parse_family(o.family);
    require_admissible(*fam, *magma);
  }
  if (o.count_only) {
    const std::uint64_t n = enumerate_count(magma, o.arity, fam ? &*fam : nullptr, guard);
    emit(std::to_string(n) + "\n", o.out_path, out);
    return kOk;
  }
  std::ostringstream text;
  for_each_clique(
      magma, o.arity,
      [&](const Clique& p) {
        if (!fam || fam->contains(p)) text << clique_json(p).dump() << "\n";
      },
      guard);
  emit(text.str(), o.out_path, out);
  return kOk;
}

int do_span(const Options& o, std::ostream& out, std::ostream& err) {
  const MagmaPtr magma = builtin_magma(o.magma.empty() ? "D0" : o.magma);
  require(magma->is_finite(), ErrorKind::invalid_argument, "span needs a finite magma");
  Integer products = 0;
  for (int a = 2; a <= o.arity - 1; ++a)
    products += space_size(magma->size(), a) * space_size(magma->size(), o.arity + 1 - a) * a;
  const std::uint64_t guard = resolve_guard(o, err, "compositions into arity " + std::to_string(o.arity), products);
  const SpanResult r = generating_span(magma, o.arity, guard);
  std::ostringstream text;
  text << "# span magma=" << magma->name() << " arity=" << o.arity << "\n"
       << "span_dim: " << r.span_dim << "\n"
       << "generators: " << r.generator_count << "\n"
       << "total: " << r.total << "\n"
       << "minimal: " << (r.minimal ? "true" : "false") << "\n"
       << "verdict: " << (r.verdict ? "true" : "false") << "\n";
  emit(text.str(), o.out_path, out);
  return r.verdict ? kOk : kVerdictFalse;
}

int do_tree(const Options& o, std::ostream& out, std::ostream& err) {
  err << "# tree magma=" << (o.magma.empty() ? "(from input)" : o.magma) << " in=" << o.in_path << "\n";
  const Json j = parse_json_text(read_file(o.in_path));
  require(j.is_object(), ErrorKind::parse, "expected a JSON object");
  if (j.contains("size")) {
    const Clique p = clique_from_json(j, magma_or_null(o.magma));
    emit(tree_json(to_dual_tree(p)).dump() + "\n", o.out_path, out);
  } else {
    require(!o.magma.empty(), ErrorKind::invalid_argument, "tree JSON names no magma; pass --magma");
    const DualTree t = tree_from_json(j, builtin_magma(o.magma));
    emit(clique_json(from_dual_tree(t)).dump() + "\n", o.out_path, out);
  }
  return kOk;
}

// ---- verify ----

const std::vector<std::string>& suites() {
  static const std::vector<std::string> s = {"axioms", "ideal",  "cyclic",         "basic",     "presentation",
                                             "koszul", "bases", "reconstruction", "bijection", "all"};
  return s;
}

struct VerifyRun {
  std::ostringstream body;
  std::vector<std::string> discovered;
  bool ok = true;

  void add(const Report& r) {
    body << format_report(r);
    ok = ok && r.verdict();
  }
  void skip(const std::string& suite, const std::string& why) { body << "[" << suite << "] skipped: " << why << "\n"; }
};

void verify_ideals(const Options& o, const MagmaPtr& magma, int max, VerifyRun& run) {
  std::vector<std::string> names;
  if (!o.family.empty()) names = {o.family};
  else names = {"NC", "Bub", "Acy", "Nes", "Deg:1", "Deg:2", "Whi"};
  const auto props = check_properties(*magma);
  for (const auto& name : names) {
    const OperadFamily fam = parse_family(name);
    if (!fam.admissible(props)) {
      if (!o.family.empty()) require_admissible(fam, *magma);
      run.skip("ideal", fam.label() + " is not admissible over " + magma->name());
      continue;
    }
    if (fam.kind == FamilyKind::suboperad) {
      run.add(verify_suboperad(fam, magma, max, o.workers));
      continue;
    }
    if (fam.kind == FamilyKind::quotient_of_suboperad) run.add(verify_suboperad(fam, magma, max, o.workers));
    run.add(verify_ideal(fam, magma, max, o.workers));
    run.add(verify_projection_compatibility(fam, magma, max, o.workers));
  }
}

int do_verify(const Options& o, std::ostream& out) {
  const MagmaPtr magma = builtin_magma(o.magma.empty() ? "D0" : o.magma);
  const int max = o.max.value_or(3);
  require(max >= 1, ErrorKind::invalid_argument, "--max must be >= 1");
  const bool all = o.suite == "all";
  auto want = [&](const char* s) { return all || o.suite == s; };
  const bool finite = magma->is_finite();
  VerifyRun run;
  auto finite_only = [&](const char* s) {
    if (finite) return true;
    if (!all) fail(ErrorKind::invalid_argument, std::string(s) + " needs a finite magma");
    run.skip(s, "magma " + magma->name() + " is infinite");
    return false;
  };

  if (want("axioms")) {
    AxiomOptions ax;
    ax.max_arity = max;
    ax.samples = o.samples;
    ax.seed = o.seed;
    ax.workers = o.workers;
    run.add(verify_operad_axioms(magma, ax));
  }
  if (want("ideal") && finite_only("ideal")) verify_ideals(o, magma, max, run);
  if (want("cyclic") && finite_only("cyclic")) {
    const CyclicResult c = check_cyclic(magma, max, max + 1, o.workers);
    run.add(c.report);
    run.discovered.push_back("cyclic law=" + (c.law ? c.law->name : std::string("none")));
  }
  if (want("basic") && finite_only("basic")) run.add(check_basic(magma, max, o.workers).report);
  if (want("presentation") && finite_only("presentation")) {
    const PresentationResult p = verify_presentation(magma, max + 2);
    run.add(p.report);
    run.discovered.push_back("normal-form orientation=" +
                             (p.orientation ? std::string(orientation_name(*p.orientation)) : std::string("none")));
  }
  if (want("koszul") && finite_only("koszul")) {
    if (all && magma->size() > 3) run.skip("koszul", "limited to magmas of size <= 3");
    else run.add(verify_koszul_duality(magma));
  }
  if (want("bases")) {
    BasesOptions bo;
    bo.max_arity = std::min(max, 3);
    bo.samples = std::min<std::size_t>(o.samples, 500);
    bo.seed = o.seed;
    run.add(verify_bases(magma, bo));
  }
  if (want("reconstruction")) run.add(reconstruction_checks(o.workers));
  if (want("bijection") && finite_only("bijection")) run.add(verify_bijection(magma, max + 1, max, o.workers));

  out << "# verify suite=" << o.suite << " magma=" << magma->name() << " max=" << max << " seed=" << o.seed
      << " samples=" << o.samples << "\n";
  out << "# conventions: rotation x->x-1 (x>=2), 1->n+1; dual-tree leaves left to right, depth first; "
         "degree counts the base\n";
  for (const auto& d : run.discovered) out << "# discovered: " << d << "\n";
  out << run.body.str();
  out << "verdict: " << (run.ok ? "true" : "false") << "\n";
  return run.ok ? kOk : kVerdictFalse;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse: return kParse;
    case ErrorKind::unknown_name: return kUnknownName;
    case ErrorKind::guard: return kGuard;
    case ErrorKind::admissibility: return kAdmissibility;
    default: return kOther;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Decorated-clique operads: composition, enumeration, series and verification"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_guard = [&](CLI::App* c) {
    c->add_option("--guard", o.guard, "raise the enumeration guard (prints a resource estimate first)");
  };
  auto basis_check = CLI::IsMember({"fund", "H", "K"});

  auto* compose = app.add_subcommand("compose", "partial composition of two cliques or combinations");
  compose->add_option("--magma", o.magma, "magma name (defaults to the one in the JSON)");
  compose->add_option("--lhs", o.lhs, "left operand JSON file")->required();
  compose->add_option("--rhs", o.rhs, "right operand JSON file")->required();
  compose->add_option("--pos", o.pos, "position i of the composition")->required();
  compose->add_option("--basis", o.basis, "fund, H or K")->check(basis_check);
  compose->add_option("--out", o.out_path, "write the result here instead of stdout");

  auto* dims = app.add_subcommand("dims", "dimension table of a family against its expected sequence");
  dims->add_option("--family", o.family, "family, e.g. Mot, Deg:2, Cro:1")->required();
  dims->add_option("--magma", o.magma, "magma name (default D0)");
  dims->add_option("--max", o.max, "largest arity (default 5)");
  dims->add_option("--format", o.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  dims->add_option("--out", o.out_path);
  add_guard(dims);

  auto* hilbert = app.add_subcommand("hilbert", "coefficients of the NC Hilbert series or its dual");
  hilbert->add_option("--m", o.m, "magma size")->required();
  hilbert->add_option("--terms", o.terms, "number of coefficients from arity 1 (default 5)");
  hilbert->add_flag("--dual", o.dual, "use the dual series");
  hilbert->add_option("--out", o.out_path);

  auto* basis = app.add_subcommand("basis", "convert a combination between fund, H and K");
  basis->add_option("--magma", o.magma);
  basis->add_option("--in", o.in_path, "input JSON file")->required();
  basis->add_option("--from", o.from, "basis of a bare clique input")->check(basis_check);
  basis->add_option("--to", o.to, "target basis")->required()->check(basis_check);
  basis->add_option("--out", o.out_path);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", o.suite, "which suite")->check(CLI::IsMember(suites()));
  verify->add_option("--magma", o.magma, "magma name (default D0)");
  verify->add_option("--max", o.max, "largest arity (default 3)");
  verify->add_option("--family", o.family, "restrict the ideal suite to one family");
  verify->add_option("--samples", o.samples, "random samples for infinite magmas and basis round trips");
  verify->add_option("--seed", o.seed);
  verify->add_option("--workers", o.workers, "worker threads (default: CLIQUES_WORKERS or 1)");

  auto* enumerate = app.add_subcommand("enumerate", "stream or count cliques of one arity");
  enumerate->add_option("--magma", o.magma)->required();
  enumerate->add_option("--arity", o.arity)->required();
  enumerate->add_option("--family", o.family, "keep only members of this family");
  enumerate->add_flag("--count", o.count_only, "print only the count");
  enumerate->add_option("--out", o.out_path);
  add_guard(enumerate);

  auto* span = app.add_subcommand("span", "span of compositions against the minimal generating set");
  span->add_option("--magma", o.magma, "magma name (default D0)");
  span->add_option("--arity", o.arity)->required();
  span->add_option("--out", o.out_path);
  add_guard(span);

  auto* tree = app.add_subcommand("tree", "convert a noncrossing clique to its dual tree or back");
  tree->add_option("--magma", o.magma, "required when the input is a tree");
  tree->add_option("--in", o.in_path)->required();
  tree->add_option("--out", o.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*compose) return do_compose(o, out, err);
    if (*dims) return do_dims(o, out, err);
    if (*hilbert) return do_hilbert(o, out);
    if (*basis) return do_basis(o, out, err);
    if (*verify) return do_verify(o, out);
    if (*enumerate) return do_enumerate(o, out, err);
    if (*span) return do_span(o, out, err);
    if (*tree) return do_tree(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kOther;
  }
  return kUsage;
}

}  // namespace cliques::cli
