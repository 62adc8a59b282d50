#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fgh/factorization.hpp"
#include "fgh/functorial.hpp"
#include "fgh/heights.hpp"
#include "fgh/lab/corpus.hpp"
#include "fgh/lab/group_file.hpp"
#include "fgh/lab/oracles.hpp"
#include "fgh/lab/report.hpp"
#include "fgh/lattice.hpp"
#include "fgh/normal.hpp"
#include "fgh/quotient.hpp"
#include "fgh/radicals.hpp"
#include "fgh/series.hpp"
#include "fgh/subgroup_ops.hpp"

namespace fgh::lab {

struct LabOptions {
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t lattice_cap = kDefaultLatticeCap;
  std::vector<std::size_t> primes{2, 3, 5, 7};
  /// Largest order for the alternating-series search.
  std::size_t series_oracle_cap = 400;
  /// Subnormal pairs examined per group by the join suites.
  std::size_t join_pair_budget = 400;
  /// Test hook: drop the "+1" from the upper bound of thm1.2.1.
  bool tighten_thm121 = false;
  /// Test hook: F* computed with a corrupted inneriser.
  InneriserMode inneriser = InneriserMode::standard;

  CalculusOptions calculus() const { return {lattice_cap, inneriser}; }
};

/// A group under test; factor_degrees is nonempty for direct products.
struct Subject {
  GroupPtr group;
  std::vector<std::size_t> factor_degrees;
};

/// Where a subject comes from: a builtin name or a group file.
struct SubjectSource {
  std::string name;
  std::size_t order = 0;  // 0 when unknown before building
  std::function<Subject(std::size_t order_cap)> load;
};

inline SubjectSource builtin_source(const std::string& name, std::size_t order = 0) {
  return {name, order, [name](std::size_t cap) {
            BuiltGroup b = build_named(name, cap);
            return Subject{std::move(b.group), std::move(b.factor_degrees)};
          }};
}

inline SubjectSource file_source(const std::string& path) {
  return {"file:" + path, 0,
          [path](std::size_t cap) { return Subject{load_group_file(path, cap), {}}; }};
}

inline std::vector<SubjectSource> corpus_sources() {
  std::vector<SubjectSource> out;
  for (const auto& e : corpus_entries()) out.push_back(builtin_source(e.name, e.order));
  return out;
}

namespace detail {

// ---------------------------------------------------------------------------
// per-group caches

class InducedCache {
 public:
  const InducedGroup& get(const Subgroup& h) {
    std::lock_guard lock(mutex_);
    auto it = map_.find(h.mask());
    if (it == map_.end()) it = map_.emplace(h.mask(), std::make_unique<InducedGroup>(h)).first;
    return *it->second;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<ElementMask, std::unique_ptr<InducedGroup>, ElementMaskHash> map_;
};

/// The subgroup H of G as a group, built once per (G, H).
inline const Group& as_group(const Subgroup& h) {
  if (h.order() == h.parent().order()) return h.parent();
  const auto& cache = h.parent().memo<std::shared_ptr<InducedCache>>(
      "lab:induced", [] { return std::make_shared<InducedCache>(); });
  return cache->get(h).group();
}

inline const std::vector<FactorizationRecord>& mutual_factorizations(const Group& g,
                                                                     std::size_t lattice_cap) {
  return g.memo<std::vector<FactorizationRecord>>("lab:mutual", [&g, lattice_cap] {
    return find_factorizations(g, FactorizationMode::mutually, lattice_cap);
  });
}

inline bool is_nontrivial(const FactorizationRecord& r) {
  const std::size_t n = r.a.parent().order();
  return r.a.order() < n && r.b.order() < n;
}

struct SubnormalJoin {
  Subgroup a, b, join;
};

/// Pairs of incomparable nontrivial subnormal subgroups with their joins. When
/// there are more candidate pairs than the budget, every k-th pair is taken.
inline const std::vector<SubnormalJoin>& subnormal_joins(const Group& g, const LabOptions& opts) {
  return g.memo<std::vector<SubnormalJoin>>("lab:joins", [&g, &opts] {
    std::vector<Subgroup> sub;
    for (const auto& h : all_subgroups(g, opts.lattice_cap)) {
      if (!h.is_trivial() && is_subnormal(h)) sub.push_back(h);
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < sub.size(); ++i) {
      for (std::size_t j = i + 1; j < sub.size(); ++j) {
        if (!sub[i].is_subgroup_of(sub[j]) && !sub[j].is_subgroup_of(sub[i])) pairs.emplace_back(i, j);
      }
    }
    const std::size_t budget = std::max<std::size_t>(opts.join_pair_budget, 1);
    const std::size_t stride = (pairs.size() + budget - 1) / budget;
    std::vector<SubnormalJoin> out;
    for (std::size_t k = 0; k < pairs.size(); k += std::max<std::size_t>(stride, 1)) {
      const auto& [i, j] = pairs[k];
      out.push_back({sub[i], sub[j], join(sub[i], sub[j])});
    }
    return out;
  });
}

// ---------------------------------------------------------------------------
// heights

inline Height hstar(const Group& g, const LabOptions& o) {
  return generalized_fitting_height(g, o.calculus());
}
inline std::size_t lambda(const Group& g, std::size_t p, const LabOptions& o) {
  return non_p_soluble_length(g, p, o.calculus());
}
inline Height htilde(const Group& g, const LabOptions& o) {
  return non_frattini_length(g, o.calculus());
}
inline Height fbar_height(const Group& g, std::size_t p, const LabOptions& o) {
  return gamma_height(fbar(p, o.calculus()), g);
}
inline bool in_hp(const Group& g, std::size_t p, const LabOptions& o) {
  return fbar(p, o.calculus())(g).order() == g.order();
}
inline bool quasinilpotent(const Group& g, const LabOptions& o) {
  return builtin_functorial(Atom::Fstar, 0, o.calculus())(g).order() == g.order();
}

inline std::string pair_witness(const Subgroup& a, const Subgroup& b) {
  return "A=" + a.key_string() + ",B=" + b.key_string();
}

/// Accumulates instances and the first failure of one suite on one group.
class Outcome {
 public:
  void count(std::size_t k = 1) { instances_ += k; }
  void check(bool ok, const std::function<std::string()>& witness) {
    if (!ok && !witness_) witness_ = witness();
  }
  bool failed() const noexcept { return witness_.has_value(); }
  std::size_t instances() const noexcept { return instances_; }

  Verdict finish(const std::string& theorem, const Group& g, const Detail& extra) const {
    Detail d;
    d.add("instances", instances_).append(extra);
    if (witness_) d.add("witness", *witness_);
    return {theorem, g.name(), witness_ ? Status::fail : Status::pass, d.str()};
  }

 private:
  std::size_t instances_ = 0;
  std::optional<std::string> witness_;
};

inline Verdict skipped(const std::string& theorem, const Group& g, const std::string& reason) {
  return {theorem, g.name(), Status::skipped, Detail().add("reason", reason).str()};
}

// ---------------------------------------------------------------------------
// suites

using Suite = Verdict (*)(const std::string&, const Subject&, const LabOptions&);

inline Verdict thm_1_2_1(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (G.order() > o.lattice_cap) return skipped(id, G, "lattice_cap");
  const Height hg = hstar(G, o);
  Outcome out;
  std::size_t nontrivial = 0;
  std::optional<Height> least_max;
  for (const auto& r : mutual_factorizations(G, o.lattice_cap)) {
    const Height m = max(hstar(as_group(r.a), o), hstar(as_group(r.b), o));
    const Height upper = o.tighten_thm121 ? m : m + Height(1);
    out.count();
    if (is_nontrivial(r)) {
      ++nontrivial;
      if (!least_max || m < *least_max) least_max = m;
    }
    out.check(m <= hg && hg <= upper, [&] {
      return pair_witness(r.a, r.b) + " max=" + m.to_string() + " hstar=" + hg.to_string();
    });
  }
  Detail d;
  d.add("nontrivial", nontrivial).add("hstar", hg.to_string());
  d.add("max", least_max ? least_max->to_string() : std::string("-"));
  return out.finish(id, G, d);
}

inline Verdict thm_1_2_2(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (G.order() > o.lattice_cap) return skipped(id, G, "lattice_cap");
  Outcome out;
  Detail d;
  for (std::size_t p : o.primes) {
    const std::size_t lg = lambda(G, p, o);
    for (const auto& r : mutual_factorizations(G, o.lattice_cap)) {
      const std::size_t m = std::max(lambda(as_group(r.a), p, o), lambda(as_group(r.b), p, o));
      out.count();
      out.check(m == lg, [&] {
        return pair_witness(r.a, r.b) + " p=" + std::to_string(p) + " max=" + std::to_string(m) +
               " lambda=" + std::to_string(lg);
      });
    }
    d.add("lambda" + std::to_string(p), lg);
  }
  return out.finish(id, G, d);
}

inline Verdict cor_1_3(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (G.order() > o.lattice_cap) return skipped(id, G, "lattice_cap");
  if (!is_soluble(G)) return skipped(id, G, "not_soluble");
  const Height hg = fitting_height(G);
  Outcome out;
  for (const auto& r : mutual_factorizations(G, o.lattice_cap)) {
    const Height m = max(fitting_height(as_group(r.a)), fitting_height(as_group(r.b)));
    out.count();
    out.check(m <= hg && hg <= m + Height(1), [&] {
      return pair_witness(r.a, r.b) + " max=" + m.to_string() + " h=" + hg.to_string();
    });
  }
  return out.finish(id, G, Detail().add("h", hg.to_string()));
}

/// Factor K_i of a direct product: elements moving only the points of block i.
inline std::vector<Subgroup> direct_factors(const Subject& s) {
  const Group& G = *s.group;
  std::vector<Subgroup> out;
  std::size_t lo = 0;
  for (std::size_t deg : s.factor_degrees) {
    ElementMask m(G.order());
    for (std::size_t x = 0; x < G.order(); ++x) {
      const Permutation p = G.permutation(static_cast<Elem>(x));
      bool inside = true;
      for (std::size_t pt = 0; pt < p.degree() && inside; ++pt) {
        if ((pt < lo || pt >= lo + deg) && p.raw()[pt] != pt) inside = false;
      }
      if (inside) m.set(x);
    }
    out.push_back(Subgroup::from_mask(G, std::move(m)));
    lo += deg;
  }
  return out;
}

inline Verdict lem_2_2(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (s.factor_degrees.size() < 2) return skipped(id, G, "not_a_direct_product");
  const auto factors = direct_factors(s);
  std::size_t prod = 1;
  for (const auto& f : factors) prod *= f.order();
  if (prod != G.order()) throw Error("direct factors do not multiply to the group order");
  const CalculusOptions calc = o.calculus();
  const std::vector<Functorial> gammas{builtin_functorial(Atom::Fit), builtin_functorial(Atom::Fstar, 0, calc),
                                       builtin_functorial(Atom::Rp, 2, calc), builtin_functorial(Atom::Soc)};
  Outcome out;
  for (const auto& gamma : gammas) {
    Subgroup expected = Subgroup::trivial(G);
    for (const auto& f : factors) {
      const InducedGroup sub(f);
      expected = join(expected, sub.lift(gamma(sub.group())));
    }
    out.count();
    out.check(gamma(G) == expected, [&] {
      return gamma.name() + " |gamma(G)|=" + std::to_string(gamma(G).order()) +
             " |product|=" + std::to_string(expected.order());
    });
  }
  // heights of direct products are the maxima over the factors
  Height hmax(0), fmax(0);
  for (const auto& f : factors) {
    hmax = max(hmax, hstar(as_group(f), o));
    fmax = max(fmax, fbar_height(as_group(f), 2, o));
  }
  out.count(2);
  out.check(hstar(G, o) == hmax, [&] { return "hstar=" + hstar(G, o).to_string() + " max=" + hmax.to_string(); });
  out.check(fbar_height(G, 2, o) == fmax, [&] { return "fbar2 height mismatch"; });
  return out.finish(id, G, Detail().add("factors", factors.size()));
}

inline Verdict lem_2_5(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  const CalculusOptions calc = o.calculus();
  const std::vector<Functorial> gammas{builtin_functorial(Atom::Fstar, 0, calc), fbar(2, calc)};
  Outcome out;
  for (const auto& n : normal_subgroups(G)) {
    if (n.is_trivial() || n.order() == G.order()) continue;
    const Group& N = as_group(n);
    const Quotient q(G, n);
    for (const auto& gamma : gammas) {
      const Height hg = gamma_height(gamma, G);
      const Height hn = gamma_height(gamma, N);
      const Height hq = gamma_height(gamma, q.group());
      out.count();
      out.check(hq <= hg && hg <= hn + hq && hn <= hg, [&] {
        return gamma.name() + " N=" + n.key_string() + " h(G)=" + hg.to_string() +
               " h(N)=" + hn.to_string() + " h(G/N)=" + hq.to_string();
      });
    }
  }
  return out.finish(id, G, Detail());
}

inline Verdict lem_2_6(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (G.order() > o.series_oracle_cap) return skipped(id, G, "oracle_cap");
  if (is_soluble(G)) return skipped(id, G, "soluble");
  Outcome out;
  Detail d;
  for (std::size_t p : o.primes) {
    const std::size_t series = lambda(G, p, o);
    const std::size_t brute = shortest_alternating_length(G, p);
    out.count();
    out.check(series == brute, [&] {
      return "p=" + std::to_string(p) + " series=" + std::to_string(series) +
             " search=" + std::to_string(brute);
    });
    d.add("lambda" + std::to_string(p), series);
  }
  return out.finish(id, G, d);
}

inline Verdict thm_2_8(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (G.order() > o.lattice_cap) return skipped(id, G, "lattice_cap");
  Outcome out;
  for (const auto& j : subnormal_joins(G, o)) {
    const Group& A = as_group(j.a);
    const Group& B = as_group(j.b);
    const Group& J = as_group(j.join);
    const Height hs = max(hstar(A, o), hstar(B, o));
    const Height fb = max(fbar_height(A, 2, o), fbar_height(B, 2, o));
    out.count();
    out.check(hstar(J, o) == hs && fbar_height(J, 2, o) == fb, [&] {
      return pair_witness(j.a, j.b) + " hstar(join)=" + hstar(J, o).to_string() + " max=" + hs.to_string();
    });
    for (std::size_t p : o.primes) {
      const std::size_t lm = std::max(lambda(A, p, o), lambda(B, p, o));
      out.check(lambda(J, p, o) == lm, [&] {
        return pair_witness(j.a, j.b) + " p=" + std::to_string(p) + " lambda(join)=" +
               std::to_string(lambda(J, p, o)) + " max=" + std::to_string(lm);
      });
    }
  }
  return out.finish(id, G, Detail());
}

inline Verdict lem_3_3(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (G.is_trivial()) return skipped(id, G, "trivial");
  const CalculusOptions calc = o.calculus();
  Outcome out;
  const Subgroup r = residual(ResidualClass::quasinilpotent, G, 0, calc);
  const Height hg = hstar(G, o), hr = hstar(as_group(r), o);
  out.count();
  out.check(hr + Height(1) == hg, [&] {
    return "quasinilpotent residual " + r.key_string() + " h*=" + hr.to_string() + " h*(G)=" + hg.to_string();
  });
  for (std::size_t p : o.primes) {
    const Subgroup rp = residual(ResidualClass::h_p, G, p, calc);
    const Height fg = fbar_height(G, p, o), fr = fbar_height(as_group(rp), p, o);
    out.count();
    out.check(fr + Height(1) == fg, [&] {
      return "H_" + std::to_string(p) + " residual " + rp.key_string() + " height=" + fr.to_string() +
             " height(G)=" + fg.to_string();
    });
  }
  return out.finish(id, G, Detail().add("hstar", hg.to_string()).add("residual_order", r.order()));
}

inline Verdict lem_3_4(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (G.is_trivial()) return skipped(id, G, "trivial");
  const CalculusOptions calc = o.calculus();
  const std::size_t h = hstar(G, o).value();
  Outcome out;
  // iterated residual: R_0 = G, R_{n} = quasinilpotent residual of R_{n-1}
  Subgroup iterated = Subgroup::whole(G);
  for (std::size_t n = 1; n <= h; ++n) {
    const InducedGroup inner(iterated);
    iterated = inner.lift(residual(ResidualClass::quasinilpotent, inner.group(), 0, calc));
    const Subgroup direct = residual(ResidualClass::nstar_power, G, n, calc);
    out.count();
    out.check(direct == iterated, [&] {
      return "n=" + std::to_string(n) + " class residual " + direct.key_string() +
             " iterated residual " + iterated.key_string();
    });
  }
  out.check(iterated.is_trivial(), [&] { return "iterated residual nontrivial after h* steps"; });
  return out.finish(id, G, Detail().add("hstar", h));
}

inline Verdict lem_3_6(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (G.order() > o.lattice_cap) return skipped(id, G, "lattice_cap");
  if (G.is_trivial()) return skipped(id, G, "trivial");
  const auto& records = mutual_factorizations(G, o.lattice_cap);
  const auto minimal = minimal_normal_subgroups(G);
  // (1) is spot-checked modulo the first minimal normal subgroup
  std::optional<Quotient> q;
  std::optional<FactorizationSearch> qsearch;
  if (minimal.front().order() < G.order()) {
    q.emplace(G, minimal.front());
    qsearch.emplace(q->group(), o.lattice_cap);
  }
  Outcome out;
  for (const auto& r : records) {
    out.count();
    for (const auto& n : minimal) {
      for (const Subgroup* x : {&r.a, &r.b}) {
        const std::size_t k = intersection(n, *x).order();
        out.check(k == 1 || k == n.order(), [&] {
          return "(2) " + pair_witness(r.a, r.b) + " N=" + n.key_string();
        });
      }
    }
    if (!r.a.is_trivial() && !r.b.is_trivial()) {
      out.check(!subgroup_core(r.a).is_trivial() || !subgroup_core(r.b).is_trivial(),
                [&] { return "(4) " + pair_witness(r.a, r.b); });
    }
    out.check(is_subnormal(derived_subgroup(r.a)) && is_subnormal(derived_subgroup(r.b)),
              [&] { return "(5) " + pair_witness(r.a, r.b); });
    if (q) {
      const auto img = qsearch->classify(qsearch->index_of(q->image(r.a)), qsearch->index_of(q->image(r.b)));
      out.check(img.mutually_permutable, [&] { return "(1) " + pair_witness(r.a, r.b); });
    }
  }
  return out.finish(id, G, Detail().add("minimal_normal", minimal.size()));
}

inline Verdict lem_4_2(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (G.is_trivial()) return skipped(id, G, "trivial");
  const CalculusOptions calc = o.calculus();
  const Functorial fstar = builtin_functorial(Atom::Fstar, 0, calc);
  const GammaSeries gs = gamma_series(fstar, G);
  const std::size_t h = gs.height.value();
  auto term = [](const GammaSeries& series, std::size_t k) -> const Subgroup& {
    return series.terms[std::min(k, series.terms.size() - 1)];
  };
  Outcome out;
  for (const auto& n : minimal_normal_subgroups(G)) {
    const Subgroup inner = inneriser(n, Subgroup::trivial(G));
    const std::size_t c = inner.order() == G.order() ? 0 : hstar(Quotient(G, inner).group(), o).value();
    const Quotient q(G, n);
    const GammaSeries qs = gamma_series(fstar, q.group());
    for (std::size_t k = c + 1; k <= h; ++k) {
      out.count();
      out.check(q.preimage(term(qs, k)) == term(gs, k), [&] {
        return "N=" + n.key_string() + " k=" + std::to_string(k);
      });
    }
  }
  return out.finish(id, G, Detail().add("hstar", h));
}

inline Verdict lem_4_3(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (G.order() > o.lattice_cap) return skipped(id, G, "lattice_cap");
  Outcome out;
  const Height hg = hstar(G, o);
  for (const auto& r : mutual_factorizations(G, o.lattice_cap)) {
    if (!quasinilpotent(as_group(r.a), o) || !quasinilpotent(as_group(r.b), o)) continue;
    out.count();
    out.check(hg <= Height(2), [&] { return pair_witness(r.a, r.b) + " hstar=" + hg.to_string(); });
  }
  return out.finish(id, G, Detail().add("hstar", hg.to_string()));
}

inline Verdict lem_5_1(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (G.order() > o.lattice_cap) return skipped(id, G, "lattice_cap");
  Outcome out;
  for (std::size_t p : o.primes) {
    const bool g_in = in_hp(G, p, o);
    for (const auto& r : mutual_factorizations(G, o.lattice_cap)) {
      if (!in_hp(as_group(r.a), p, o) || !in_hp(as_group(r.b), p, o)) continue;
      out.count();
      out.check(g_in, [&] { return pair_witness(r.a, r.b) + " p=" + std::to_string(p); });
    }
  }
  return out.finish(id, G, Detail());
}

inline Verdict thm_6_3(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (G.order() > o.lattice_cap) return skipped(id, G, "lattice_cap");
  const Height ht = htilde(G, o), hs = hstar(G, o);
  Outcome out;
  out.count();
  out.check(ht <= hs && hs <= ht + ht, [&] { return "htilde=" + ht.to_string() + " hstar=" + hs.to_string(); });
  return out.finish(id, G, Detail().add("htilde", ht.to_string()).add("hstar", hs.to_string()).add("twice_htilde", (ht + ht).to_string()));
}

inline Verdict prop_6_4(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (G.order() > o.lattice_cap) return skipped(id, G, "lattice_cap");
  Outcome out;
  for (const auto& j : subnormal_joins(G, o)) {
    const Height m = max(htilde(as_group(j.a), o), htilde(as_group(j.b), o));
    const Height hj = htilde(as_group(j.join), o);
    out.count();
    out.check(hj <= m, [&] { return pair_witness(j.a, j.b) + " htilde(join)=" + hj.to_string() + " max=" + m.to_string(); });
  }
  return out.finish(id, G, Detail());
}

inline Verdict thm_6_6(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (G.order() > o.lattice_cap) return skipped(id, G, "lattice_cap");
  const Height hg = htilde(G, o);
  Outcome out;
  for (const auto& r : mutual_factorizations(G, o.lattice_cap)) {
    if (!r.totally_permutable) continue;
    const Height m = max(htilde(as_group(r.a), o), htilde(as_group(r.b), o));
    out.count();
    out.check(m - 1 <= hg && hg <= m + Height(1), [&] {
      return pair_witness(r.a, r.b) + " max=" + m.to_string() + " htilde=" + hg.to_string();
    });
  }
  return out.finish(id, G, Detail().add("htilde", hg.to_string()));
}

inline Verdict ex_6_5(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  if (G.order() > o.lattice_cap) return skipped(id, G, "lattice_cap");
  const Height hg = htilde(G, o);
  std::size_t found = 0, examined = 0;
  std::string first;
  for (const auto& n : normal_subgroups(G)) {
    if (n.is_trivial() || n.order() == G.order()) continue;
    ++examined;
    const Height hn = htilde(as_group(n), o);
    if (hg < hn) {
      if (!found) first = n.key_string() + " htilde(N)=" + hn.to_string();
      ++found;
    }
  }
  Detail d;
  d.add("instances", examined).add("htilde", hg.to_string()).add("found", found);
  if (found) d.add("first", first);
  return {id, G.name(), Status::pass, d.str()};
}

inline Verdict fstar_oracle(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  const Subgroup computed = generalized_fitting(G, o.inneriser);
  const Subgroup reversed = generalized_fitting(G, o.inneriser, TieBreak::largest_first);
  const Subgroup oracle = largest_normal_quasinilpotent(G);
  Outcome out;
  out.count();
  out.check(computed == oracle, [&] {
    return "inneriser " + computed.key_string() + " oracle " + oracle.key_string();
  });
  out.check(computed == reversed, [&] { return "chief series dependence " + reversed.key_string(); });
  return out.finish(id, G, Detail().add("order", oracle.order()));
}

inline Verdict property_suite(const std::string& id, const Subject& s, const LabOptions& o) {
  const Group& G = *s.group;
  const CalculusOptions calc = o.calculus();
  std::vector<Functorial> gammas{builtin_functorial(Atom::Z),
                                 builtin_functorial(Atom::Fit),
                                 builtin_functorial(Atom::Op, 2),
                                 builtin_functorial(Atom::Soc),
                                 builtin_functorial(Atom::Rsol),
                                 builtin_functorial(Atom::Rp, 2, calc),
                                 builtin_functorial(Atom::Fstar, 0, calc),
                                 fbar(2, calc)};
  const bool with_lattice = G.order() <= o.lattice_cap;
  std::optional<Functorial> phi;
  if (with_lattice) {
    phi = builtin_functorial(Atom::Phi, 0, calc);
    gammas.push_back(*phi);
    gammas.push_back(ftilde(calc));
  }
  Outcome out;
  std::optional<std::string> phi_f3;
  for (const auto& gamma : gammas) {
    out.count();
    out.check(!gamma.guarantees_progress() || G.is_trivial() || !gamma(G).is_trivial(),
              [&] { return gamma.name() + " trivial on a nontrivial group"; });
    out.check(is_normal(gamma(G)), [&] { return gamma.name() + " value not normal"; });
  }
  for (const auto& n : normal_subgroups(G)) {
    const InducedGroup sub(n);
    std::optional<Quotient> q;
    if (!n.is_trivial()) q.emplace(G, n);
    for (const auto& gamma : gammas) {
      const PropertyFlags f = gamma.flags();
      const Subgroup value = gamma(G);
      const Subgroup inside = sub.lift(gamma(sub.group()));
      if (f.f1 && q) {
        out.check(q->image(value).is_subgroup_of(gamma(q->group())),
                  [&] { return gamma.name() + " F1 N=" + n.key_string(); });
      }
      if (f.f2) {
        out.check(inside.is_subgroup_of(value), [&] { return gamma.name() + " F2 N=" + n.key_string(); });
      }
      const bool f3 = (value.mask() & n.mask()).is_subset_of(inside.mask());
      if (f.f3) {
        out.check(f3, [&] { return gamma.name() + " F3 N=" + n.key_string(); });
      } else if (phi && gamma.name() == phi->name() && !f3 && !phi_f3) {
        phi_f3 = n.key_string();
      }
    }
  }
  Detail d;
  d.add("functorials", gammas.size());
  if (with_lattice) d.add("phi_f3", phi_f3 ? "fail N=" + *phi_f3 : std::string("pass"));
  return out.finish(id, G, d);
}

struct SuiteEntry {
  const char* id;
  Suite run;
};

inline const std::vector<SuiteEntry>& suites() {
  static const std::vector<SuiteEntry> all{
      {"cor1.3", cor_1_3},   {"ex6.5", ex_6_5},     {"fstar", fstar_oracle}, {"lem2.2", lem_2_2},
      {"lem2.5", lem_2_5},   {"lem2.6", lem_2_6},   {"lem3.3", lem_3_3},     {"lem3.4", lem_3_4},
      {"lem3.6", lem_3_6},   {"lem4.2", lem_4_2},   {"lem4.3", lem_4_3},     {"lem5.1", lem_5_1},
      {"prop6.4", prop_6_4}, {"props", property_suite}, {"thm1.2.1", thm_1_2_1}, {"thm1.2.2", thm_1_2_2},
      {"thm2.8", thm_2_8},   {"thm6.3", thm_6_3},   {"thm6.6", thm_6_6},
  };
  return all;
}

}  // namespace detail

/// Every theorem id understood by verify, sorted.
inline std::vector<std::string> theorem_ids() {
  std::vector<std::string> out;
  for (const auto& s : detail::suites()) out.emplace_back(s.id);
  return out;
}

/// Resolves "all" or a comma-separated list of ids.
inline std::vector<std::string> resolve_theorems(const std::string& spec) {
  if (spec == "all") return theorem_ids();
  std::vector<std::string> out;
  const auto known = theorem_ids();
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string::npos) end = spec.size();
    std::string id = spec.substr(start, end - start);
    if (std::find(known.begin(), known.end(), id) == known.end()) throw UnknownTheorem(id);
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    start = end + 1;
  }
  return out;
}

/// Runs one theorem on one subject. Exceptions become fail verdicts.
inline Verdict verify_one(const std::string& id, const Subject& s, const LabOptions& opts) {
  for (const auto& suite : detail::suites()) {
    if (id != suite.id) continue;
    try {
      return suite.run(id, s, opts);
    } catch (const std::exception& e) {
      return {id, s.group->name(), Status::fail, Detail().add("error", e.what()).str()};
    }
  }
  throw UnknownTheorem(id);
}

/// Runs the theorems over the subjects on `jobs` worker threads. Each worker
/// takes whole groups; the result is sorted by (theorem, group) and does not
/// depend on the schedule.
inline std::vector<Verdict> verify(const std::vector<std::string>& theorems,
                                   const std::vector<SubjectSource>& sources,
                                   const LabOptions& opts, std::size_t jobs = 1) {
  for (const auto& id : theorems) {
    const auto known = theorem_ids();
    if (std::find(known.begin(), known.end(), id) == known.end()) throw UnknownTheorem(id);
  }
  std::vector<std::vector<Verdict>> per_source(sources.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto work = [&] {
    for (std::size_t i = next++; i < sources.size(); i = next++) {
      const SubjectSource& src = sources[i];
      auto& out = per_source[i];
      if (src.order > opts.order_cap) {
        for (const auto& id : theorems) {
          out.push_back({id, src.name, Status::skipped, Detail().add("reason", "order_cap").str()});
        }
        continue;
      }
      std::optional<Subject> subject;
      try {
        subject = src.load(opts.order_cap);
      } catch (const OrderCapExceeded&) {
        for (const auto& id : theorems) {
          out.push_back({id, src.name, Status::skipped, Detail().add("reason", "order_cap").str()});
        }
        continue;
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        continue;
      }
      for (const auto& id : theorems) out.push_back(verify_one(id, *subject, opts));
    }
  };
  jobs = std::max<std::size_t>(jobs, 1);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<Verdict> merged;
  for (auto& v : per_source) std::move(v.begin(), v.end(), std::back_inserter(merged));
  std::stable_sort(merged.begin(), merged.end(), verdict_less);
  return merged;
}

}  // namespace fgh::lab
