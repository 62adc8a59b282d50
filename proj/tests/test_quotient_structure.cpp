#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "fgh/lab/corpus.hpp"
#include "fgh/normal.hpp"
#include "fgh/number.hpp"
#include "fgh/quotient.hpp"
#include "fgh/radicals.hpp"
#include "oracles.hpp"

using namespace fgh;

namespace {

Permutation cyc(std::size_t degree, std::vector<std::vector<std::size_t>> cycles) {
  return Permutation::from_cycles(degree, cycles);
}

std::set<oracle::PermSet> as_sets(const std::vector<Subgroup>& hs) {
  std::set<oracle::PermSet> out;
  for (const auto& h : hs) out.insert(oracle::to_set(h));
  return out;
}

std::vector<std::size_t> orders(const std::vector<Subgroup>& hs) {
  std::vector<std::size_t> out;
  for (const auto& h : hs) out.push_back(h.order());
  return out;
}

std::multiset<std::size_t> factor_orders(const ChiefSeries& cs) {
  std::multiset<std::size_t> out;
  for (const auto& f : cs.factor_kinds) out.insert(f.order);
  return out;
}

const std::vector<std::string> kSample{"C6", "D6", "S4", "A5", "Q8", "SL(2,3)", "C2xS3", "D4xC3", "S5", "C2wrC3", "C3wrC2"};

}  // namespace

TEST(NormalSubgroups, Examples) {
  EXPECT_EQ(orders(normal_subgroups(*lab::symmetric(4))), (std::vector<std::size_t>{1, 4, 12, 24}));
  EXPECT_EQ(normal_subgroups(*lab::cyclic(6)).size(), 4U);
  EXPECT_EQ(orders(normal_subgroups(*lab::alternating(5))), (std::vector<std::size_t>{1, 60}));
}

TEST(NormalSubgroups, MatchLatticeFilterOracle) {
  for (const auto& name : kSample) {
    if (name == "S5") continue;
    const GroupPtr g = lab::build_group(name);
    EXPECT_EQ(as_sets(normal_subgroups(*g)), oracle::normal_subgroups(oracle::to_set(*g))) << name;
  }
}

TEST(MinimalNormal, Examples) {
  const auto s4 = minimal_normal_subgroups(*lab::symmetric(4));
  ASSERT_EQ(s4.size(), 1U);
  EXPECT_EQ(s4[0].order(), 4U);

  const GroupPtr aa = lab::build_group("A5xA5");
  const auto mins = minimal_normal_subgroups(*aa);
  ASSERT_EQ(mins.size(), 2U);
  for (const auto& m : mins) {
    EXPECT_EQ(m.order(), 60U);
    for (Elem x : m.elements()) {
      const Permutation p = aa->permutation(x);
      bool low = false, high = false;
      for (std::size_t i = 1; i <= 10; ++i) {
        if (p.image(i) != i) (i <= 5 ? low : high) = true;
      }
      EXPECT_FALSE(low && high);
    }
  }
  EXPECT_TRUE(intersection(mins[0], mins[1]).is_trivial());

  const auto c7 = minimal_normal_subgroups(*lab::cyclic(7));
  ASSERT_EQ(c7.size(), 1U);
  EXPECT_EQ(c7[0].order(), 7U);
}

TEST(ChiefSeries, Examples) {
  EXPECT_EQ(orders(chief_series(*lab::symmetric(4)).terms), (std::vector<std::size_t>{1, 4, 12, 24}));
  EXPECT_EQ(orders(chief_series(*lab::alternating(5)).terms), (std::vector<std::size_t>{1, 60}));
  EXPECT_EQ(orders(chief_series(*lab::cyclic(6)).terms), (std::vector<std::size_t>{1, 2, 6}));
  EXPECT_EQ(orders(chief_series(*lab::cyclic(6), TieBreak::largest_first).terms),
            (std::vector<std::size_t>{1, 3, 6}));
}

TEST(ChiefSeries, FactorKindsAreExclusive) {
  for (const auto& name : kSample) {
    const GroupPtr g = lab::build_group(name);
    const ChiefSeries cs = chief_series(*g);
    ASSERT_EQ(cs.terms.size(), cs.factor_kinds.size() + 1);
    for (std::size_t i = 0; i < cs.length(); ++i) {
      const Section sec(cs.terms[i + 1], cs.terms[i]);
      const bool central = center(sec.group()).order() > 1;
      const auto& kind = cs.factor_kinds[i];
      if (central) {
        EXPECT_EQ(kind.tag, FactorTag::elementary_abelian) << name;
        ASSERT_TRUE(kind.prime.has_value());
        EXPECT_TRUE(is_prime_power_of(kind.order, *kind.prime));
        EXPECT_TRUE(is_abelian(Subgroup::whole(sec.group())));
      } else {
        EXPECT_EQ(kind.tag, FactorTag::nonabelian_semisimple) << name;
        EXPECT_FALSE(kind.prime.has_value());
      }
      EXPECT_TRUE(is_normal(cs.terms[i + 1]));
      EXPECT_TRUE(minimal_normal_over(*g, cs.terms[i]).size() >= 1);
    }
  }
}

TEST(ChiefSeries, TieBreaksAgreeOnFactorOrders) {
  for (const auto& name : kSample) {
    const GroupPtr g = lab::build_group(name);
    EXPECT_EQ(factor_orders(chief_series(*g)), factor_orders(chief_series(*g, TieBreak::largest_first))) << name;
  }
}

TEST(Quotient, Examples) {
  const GroupPtr s4 = lab::symmetric(4);
  const Subgroup v4 = subgroup_of(*s4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})});
  const Quotient q(*s4, v4);
  EXPECT_EQ(q.group().order(), 6U);
  EXPECT_FALSE(is_abelian(Subgroup::whole(q.group())));
  EXPECT_EQ(signature(q.group()), signature(*lab::symmetric(3)));

  const GroupPtr d5 = lab::dihedral(5);
  const Quotient by_one(*d5, Subgroup::trivial(*d5));
  EXPECT_EQ(signature(by_one.group()), signature(*d5));
  const Quotient by_all(*d5, Subgroup::whole(*d5));
  EXPECT_EQ(by_all.group().order(), 1U);
}

TEST(Quotient, RejectsNonNormalKernel) {
  const GroupPtr s3 = lab::symmetric(3);
  EXPECT_THROW(Quotient(*s3, subgroup_of(*s3, {cyc(3, {{1, 2}})})), NotNormal);
}

TEST(Quotient, ImageIsAHomomorphism) {
  const GroupPtr g = lab::build_group("SL(2,3)");
  for (const auto& n : normal_subgroups(*g)) {
    const Quotient q(*g, n);
    for (std::size_t a = 0; a < g->order(); a += 3) {
      for (std::size_t b = 0; b < g->order(); b += 5) {
        const Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
        EXPECT_EQ(q.image(g->mul(x, y)), q.group().mul(q.image(x), q.image(y)));
      }
    }
    EXPECT_EQ(q.group().order() * n.order(), g->order());
  }
}

TEST(Quotient, PreimageOfImageRoundTrips) {
  for (const std::string name : {"S4", "D6", "C2xS3", "SL(2,3)"}) {
    const GroupPtr g = lab::build_group(name);
    const auto subs = oracle::lattice(oracle::to_set(*g));
    for (const auto& n : normal_subgroups(*g)) {
      const Quotient q(*g, n);
      for (const auto& s : subs) {
        const Subgroup h = subgroup_of(*g, std::vector<Permutation>(s.begin(), s.end()));
        const Subgroup img = q.image(h);
        EXPECT_EQ(q.preimage(img), join(h, n)) << name;
        EXPECT_EQ(q.image(q.preimage(img)), img) << name;
      }
    }
  }
}

TEST(InducedGroup, LiftAndRestrict) {
  const GroupPtr s4 = lab::symmetric(4);
  const Subgroup a4 = derived_subgroup(*s4);
  const InducedGroup ind(a4);
  EXPECT_EQ(ind.group().order(), 12U);
  EXPECT_EQ(signature(ind.group()), signature(*lab::alternating(4)));
  for (const auto& n : normal_subgroups(ind.group())) {
    const Subgroup up = ind.lift(n);
    EXPECT_TRUE(up.is_subgroup_of(a4));
    EXPECT_EQ(ind.restrict(up), n);
  }
}

TEST(ClassPredicates, Examples) {
  EXPECT_TRUE(class_predicate(GroupClass::p_soluble, *lab::alternating(5), 7));
  EXPECT_FALSE(class_predicate(GroupClass::p_soluble, *lab::alternating(5), 2));
  EXPECT_TRUE(class_predicate(GroupClass::quasinilpotent, *lab::alternating(5)));
  EXPECT_FALSE(class_predicate(GroupClass::nilpotent, *lab::symmetric(3)));
  EXPECT_TRUE(class_predicate(GroupClass::quasinilpotent, *lab::special_linear2(5)));
  EXPECT_FALSE(class_predicate(GroupClass::quasinilpotent, *lab::symmetric(5)));
  EXPECT_TRUE(class_predicate(GroupClass::nilpotent, *lab::quaternion8()));
  EXPECT_TRUE(class_predicate(GroupClass::soluble, *lab::symmetric(4)));
  EXPECT_FALSE(class_predicate(GroupClass::soluble, *lab::special_linear2(5)));
  EXPECT_TRUE(class_predicate(GroupClass::simple, *lab::projective_special_linear2(7)));
  EXPECT_FALSE(class_predicate(GroupClass::simple, *lab::special_linear2(5)));
  EXPECT_TRUE(class_predicate(GroupClass::perfect, *lab::special_linear2(5)));
  EXPECT_FALSE(class_predicate(GroupClass::perfect, *lab::symmetric(5)));
}

TEST(ClassPredicates, PSolubleForPrimesNotDividingOrder) {
  for (const auto& name : lab::base_group_names()) {
    const GroupPtr g = lab::build_group(name);
    for (std::size_t p : {2, 3, 5, 7, 11, 13}) {
      if (g->order() % p == 0) continue;
      EXPECT_TRUE(is_p_soluble(*g, p)) << name << " p=" << p;
    }
  }
}

TEST(Subnormal, Examples) {
  const GroupPtr s3 = lab::symmetric(3);
  EXPECT_TRUE(is_subnormal(subgroup_of(*s3, {cyc(3, {{1, 2, 3}})})));
  EXPECT_FALSE(is_subnormal(subgroup_of(*s3, {cyc(3, {{1, 2}})})));
  const GroupPtr s4 = lab::symmetric(4);
  EXPECT_TRUE(is_subnormal(subgroup_of(*s4, {cyc(4, {{1, 2}, {3, 4}})})));
  EXPECT_FALSE(is_subnormal(subgroup_of(*s4, {cyc(4, {{1, 2}})})));
}

TEST(Subnormal, ImpliedByNormalAndByExplicitChains) {
  const GroupPtr g = lab::build_group("D4xC2");
  for (const auto& s : oracle::lattice(oracle::to_set(*g))) {
    EXPECT_TRUE(is_subnormal(subgroup_of(*g, std::vector<Permutation>(s.begin(), s.end()))));
  }
  const GroupPtr s4 = lab::symmetric(4);
  std::size_t subnormal = 0;
  for (const auto& s : oracle::lattice(oracle::to_set(*s4))) {
    const Subgroup h = subgroup_of(*s4, std::vector<Permutation>(s.begin(), s.end()));
    if (is_normal(h)) {
      EXPECT_TRUE(is_subnormal(h));
    }
    subnormal += is_subnormal(h) ? 1 : 0;
  }
  EXPECT_EQ(subnormal, 7U);
  const Subgroup a4 = subgroup_of(*s4, {cyc(4, {{1, 2, 3}}), cyc(4, {{2, 3, 4}})});
  const Subgroup v4 = subgroup_of(*s4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})});
  const Subgroup c2 = subgroup_of(*s4, {cyc(4, {{1, 3}, {2, 4}})});
  EXPECT_TRUE(is_normal_in(v4, a4));
  EXPECT_TRUE(is_normal_in(c2, v4));
  EXPECT_FALSE(is_normal(c2));
  EXPECT_TRUE(is_subnormal(c2));
}

TEST(Inneriser, Examples) {
  const GroupPtr s4 = lab::symmetric(4);
  const Subgroup one = Subgroup::trivial(*s4);
  const Subgroup v4 = subgroup_of(*s4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})});
  const Subgroup a4 = derived_subgroup(*s4);
  const Subgroup all = Subgroup::whole(*s4);
  EXPECT_EQ(inneriser(v4, one), v4);
  EXPECT_EQ(inneriser(a4, v4), a4);
  EXPECT_EQ(inneriser(all, a4), all);
}

TEST(Inneriser, IsSectionTimesCentralizerOfSection) {
  const GroupPtr g = lab::build_group("SL(2,3)");
  const ChiefSeries cs = chief_series(*g);
  for (std::size_t i = 0; i < cs.length(); ++i) {
    const Subgroup& h = cs.terms[i + 1];
    const Subgroup& k = cs.terms[i];
    std::set<Elem> expected;
    for (std::size_t x = 0; x < g->order(); ++x) {
      for (Elem y : h.elements()) {
        bool acts_like_y = true;
        for (Elem z : h.elements()) {
          const Elem via_x = g->conj(z, static_cast<Elem>(x));
          const Elem via_y = g->conj(z, y);
          if (!k.contains(g->mul(via_x, g->inv(via_y)))) {
            acts_like_y = false;
            break;
          }
        }
        if (acts_like_y) {
          expected.insert(static_cast<Elem>(x));
          break;
        }
      }
    }
    const Subgroup inn = inneriser(h, k);
    EXPECT_EQ(std::set<Elem>(inn.elements().begin(), inn.elements().end()), expected);
  }
}
