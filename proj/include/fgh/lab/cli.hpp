#pragma once

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fgh/factorization.hpp"
#include "fgh/heights.hpp"
#include "fgh/lab/corpus.hpp"
#include "fgh/lab/expr.hpp"
#include "fgh/lab/group_file.hpp"
#include "fgh/lab/report.hpp"
#include "fgh/lab/verify.hpp"
#include "fgh/normal.hpp"
#include "fgh/radicals.hpp"

namespace fgh::lab {

namespace cli_detail {

inline std::vector<std::size_t> parse_primes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6) {
      throw InvalidParameter("bad prime list: " + text);
    }
    std::size_t p = std::stoul(tok);
    if (!is_prime(p)) throw InvalidPrime(p);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  if (out.empty()) throw InvalidParameter("empty prime list");
  return out;
}

inline SubjectSource source_for(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return file_source(spec.substr(5));
  return builtin_source(spec);
}

/// Short label for a subgroup: 1, C<n>, V4 or the parent's name when whole.
inline std::string label(const Subgroup& h) {
  const Group& G = h.parent();
  if (h.is_trivial()) return "1";
  if (h.order() == G.order()) return G.name();
  for (Elem x : h.elements()) {
    if (G.element_order(x) == h.order()) return "C" + std::to_string(h.order());
  }
  if (h.order() == 4) return "V4";
  return "[" + std::to_string(h.order()) + "]";
}

inline std::string describe(const Subgroup& h) { return label(h) + " " + h.key_string(); }

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string factor_text(const FactorKind& f) {
  if (f.tag == FactorTag::elementary_abelian) {
    return std::to_string(f.order) + " (abelian, p=" + std::to_string(*f.prime) + ")";
  }
  return std::to_string(f.order) + " (nonabelian)";
}

struct Common {
  std::string group = "S3";
  std::string primes = "2,3,5,7";
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t lattice_cap = kDefaultLatticeCap;
};

inline int cmd_info(const Common& c, std::ostream& out) {
  const Subject s = source_for(c.group).load(c.order_cap);
  const Group& G = *s.group;
  const auto primes = parse_primes(c.primes);
  CalculusOptions calc;
  calc.lattice_cap = c.lattice_cap;
  const HeightReport r = named_heights(G, primes, calc);
  out << "group = " << G.name() << '\n';
  out << "order = " << G.order() << '\n';
  out << "degree = " << G.degree() << '\n';
  out << "conjugacy classes = " << G.conjugacy_classes().size() << '\n';
  out << "normal subgroups = " << normal_subgroups(G).size() << '\n';
  const ChiefSeries cs = chief_series(G);
  out << "chief factors =";
  for (std::size_t i = 0; i < cs.factor_kinds.size(); ++i) {
    out << (i ? ", " : " ") << factor_text(cs.factor_kinds[i]);
  }
  out << '\n';
  out << "soluble = " << yes_no(is_soluble(G)) << '\n';
  out << "nilpotent = " << yes_no(is_nilpotent(G)) << '\n';
  out << "quasinilpotent = " << yes_no(is_quasinilpotent(G)) << '\n';
  out << "simple = " << yes_no(is_simple(G)) << '\n';
  out << "Fit = " << describe(fitting(G)) << '\n';
  out << "F* = " << describe(generalized_fitting(G)) << '\n';
  out << "Soc = " << describe(socle(G)) << '\n';
  out << "Rsol = " << describe(soluble_radical(G)) << '\n';
  if (G.order() <= c.lattice_cap) out << "Phi = " << describe(frattini(G, c.lattice_cap)) << '\n';
  out << "h = " << r.h.to_string() << '\n';
  out << "h* = " << r.h_star.to_string() << '\n';
  for (const auto& [p, l] : r.lambda) out << "lambda_" << p << " = " << l << '\n';
  out << "h~ = " << (r.h_tilde ? r.h_tilde->to_string() : std::string("skipped (lattice cap)")) << '\n';
  return 0;
}

inline int cmd_series(const Common& c, const std::string& expr, std::size_t max_steps, std::ostream& out) {
  const Subject s = source_for(c.group).load(c.order_cap);
  const Group& G = *s.group;
  CalculusOptions calc;
  calc.lattice_cap = c.lattice_cap;
  const Functorial f = parse_functorial_expr(expr, calc);
  const GammaSeries gs = gamma_series(f, G, max_steps);
  std::string flags;
  for (auto [on, name] : {std::pair{f.flags().f1, "F1"}, {f.flags().f2, "F2"}, {f.flags().f3, "F3"}}) {
    if (on) flags += flags.empty() ? name : std::string(",") + name;
  }
  out << "group = " << G.name() << '\n';
  out << "functorial = " << f.name() << '\n';
  out << "flags = " << (flags.empty() ? "none" : flags) << '\n';
  out << "value = " << describe(f(G)) << '\n';
  for (std::size_t i = 0; i < gs.terms.size(); ++i) {
    out << "term " << i << " = " << describe(gs.terms[i]) << '\n';
  }
  out << "complete = " << yes_no(gs.complete) << '\n';
  out << "height = " << gs.height.to_string() << '\n';
  return 0;
}

inline int cmd_factorize(const Common& c, bool mutually, bool totally, std::ostream& out) {
  const Subject s = source_for(c.group).load(c.order_cap);
  const Group& G = *s.group;
  const FactorizationMode mode = totally    ? FactorizationMode::totally
                                 : mutually ? FactorizationMode::mutually
                                            : FactorizationMode::all;
  const auto records = find_factorizations(G, mode, c.lattice_cap);
  out << "group = " << G.name() << '\n';
  out << "factorizations = " << records.size() << '\n';
  for (const auto& r : records) {
    out << "(" << label(r.a) << ", " << label(r.b) << ") A=" << r.a.key_string()
        << " B=" << r.b.key_string() << " mutually=" << yes_no(r.mutually_permutable)
        << " totally=" << yes_no(r.totally_permutable);
    if (r.witness) {
      out << " witness=" << r.witness->x.key_string() << "," << r.witness->y.key_string();
    }
    out << '\n';
  }
  return 0;
}

inline int cmd_corpus(const Common& c, std::ostream& out) {
  std::size_t shown = 0;
  for (const auto& e : corpus_entries()) {
    if (e.order > c.order_cap) continue;
    out << e.name << ' ' << e.order << '\n';
    ++shown;
  }
  out << shown << " groups\n";
  return 0;
}

struct VerifyArgs {
  std::string theorem = "all";
  std::string report;
  std::size_t jobs = 1;
  std::vector<std::string> mutations;
  bool group_given = false;
};

inline int cmd_verify(const Common& c, const VerifyArgs& v, std::ostream& out) {
  LabOptions opts;
  opts.order_cap = c.order_cap;
  opts.lattice_cap = c.lattice_cap;
  opts.primes = parse_primes(c.primes);
  for (const auto& m : v.mutations) {
    if (m == "tighten-thm1.2.1") {
      opts.tighten_thm121 = true;
    } else if (m == "corrupt-inneriser") {
      opts.inneriser = InneriserMode::corrupted;
    } else {
      throw InvalidParameter("unknown mutation: " + m);
    }
  }
  const auto theorems = resolve_theorems(v.theorem);
  std::vector<SubjectSource> sources;
  if (v.group_given) {
    sources.push_back(source_for(c.group));
  } else {
    sources = corpus_sources();
  }
  const auto verdicts = verify(theorems, sources, opts, v.jobs);
  if (v.report.empty()) {
    emit_report(verdicts, out);
  } else {
    std::ofstream f(v.report);
    if (!f) throw Error("cannot write report: " + v.report);
    emit_report(verdicts, f);
    const Tally t = tally(verdicts);
    out << t.pass << " pass / " << t.fail << " fail / " << t.skipped << " skipped\n";
  }
  return tally(verdicts).fail == 0 ? 0 : 1;
}

}  // namespace cli_detail

/// Entry point of the fgh tool. `args` excludes the program name. Returns the
/// process exit code: 0 success, 1 failing verdicts, 2 usage or input errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Finite group heights, functorials and permutable factorizations"};
  app.name("fgh");
  app.require_subcommand(1);

  Common c;
  auto add_common = [&c](CLI::App* sub, bool with_group) {
    if (with_group) sub->add_option("--group", c.group, "builtin name (S4, A5xC2, SL(2,5), C2wrC3) or file:PATH");
    sub->add_option("--primes", c.primes, "comma-separated primes");
    sub->add_option("--order-cap", c.order_cap, "largest group order to enumerate")->check(CLI::Range(1, 65535));
    sub->add_option("--lattice-cap", c.lattice_cap, "largest order for full subgroup lattices")->check(CLI::PositiveNumber);
  };

  auto* info = app.add_subcommand("info", "structure and heights of one group");
  add_common(info, true);

  std::string expr = "Fstar";
  std::size_t max_steps = kDefaultMaxSteps;
  auto* series = app.add_subcommand("series", "gamma-series of a functorial expression");
  add_common(series, true);
  series->add_option("--functorial", expr, "expression, e.g. Rp[2]*Fstar*Rp[2]");
  series->add_option("--max-steps", max_steps, "step budget")->check(CLI::PositiveNumber);

  bool mutually = false, totally = false;
  auto* factorize = app.add_subcommand("factorize", "factorizations G = AB");
  add_common(factorize, true);
  auto* mflag = factorize->add_flag("--mutually", mutually, "only mutually permutable products");
  factorize->add_flag("--totally", totally, "only totally permutable products")->excludes(mflag);

  VerifyArgs v;
  auto* verify_cmd = app.add_subcommand("verify", "check theorems over the corpus or one group");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--theorem", v.theorem, "theorem id, comma list, or all");
  verify_cmd->add_option("--report", v.report, "write the report to PATH instead of stdout");
  verify_cmd->add_option("--jobs", v.jobs, "worker threads")->check(CLI::Range(1, 256));
  verify_cmd->add_option("--mutate", v.mutations, "test hooks: tighten-thm1.2.1, corrupt-inneriser");

  auto* corpus = app.add_subcommand("corpus", "list the default corpus");
  add_common(corpus, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*info) return cmd_info(c, out);
    if (*series) return cmd_series(c, expr, max_steps, out);
    if (*factorize) return cmd_factorize(c, mutually, totally, out);
    if (*verify_cmd) {
      v.group_given = verify_cmd->count("--group") > 0;
      return cmd_verify(c, v, out);
    }
    if (*corpus) return cmd_corpus(c, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace fgh::lab
