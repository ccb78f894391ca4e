// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "hgl/bounds.hpp"
#include "hgl/catalog.hpp"
#include "hgl/constructions.hpp"
#include "hgl/hgs.hpp"
#include "hgl/iso_aut.hpp"
#include "hgl/lie_tables.hpp"
#include "hgl/matrix_groups.hpp"
#include "hgl/structure.hpp"
#include "support/oracles.hpp"
#include "support/small_groups.hpp"

using namespace hgl;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a failed expectation without stopping the criterion.
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no runtime requirement
  std::function<void(Outcome&)> run;
};

using Named = std::vector<std::pair<std::string, PermGroup>>;

HgsCount count(const std::string& gamma_name, const PermGroup& gamma, const std::string& g_name, const PermGroup& g) {
  return count_hgs(gamma, g, {}, gamma_name, g_name);
}

Named order27_types() {
  return {{"C27", build_group("C27")},
          {"C9xC3", build_group("C9xC3")},
          {"E(3,3)", build_group("E(3,3)")},
          {"Heis(3)", small_groups::heisenberg27()},
          {"C9:C3", small_groups::metacyclic27()}};
}

struct Instance {
  std::string gamma, g;
  PermGroup pg_gamma, pg_g;
};

// The count-hgs instances of criteria 1 to 4.
std::vector<Instance> counted_instances() {
  std::vector<Instance> v;
  auto add = [&](const std::string& a, const PermGroup& pa, const std::string& b, const PermGroup& pb) {
    v.push_back({a, b, pa, pb});
  };
  add("C9", build_group("C9"), "C9", build_group("C9"));
  add("C9", build_group("C9"), "C3xC3", build_group("C3xC3"));
  add("C25", build_group("C25"), "C25", build_group("C25"));
  for (const auto& [n, g] : order27_types()) add("C27", build_group("C27"), n, g);
  add("A5", build_group("A5"), "A5", build_group("A5"));
  for (const char* a : {"C6", "S3"})
    for (const char* b : {"C6", "S3"}) add(a, build_group(a), b, build_group(b));
  add("E(5,2)", build_group("E(5,2)"), "E(5,2)", build_group("E(5,2)"));
  return v;
}

void criterion1(Outcome& o) {
  auto c27 = build_group("C27");
  std::vector<std::tuple<std::string, PermGroup, std::string, PermGroup, std::uint64_t>> cases{
      {"C9", build_group("C9"), "C9", build_group("C9"), 3},
      {"C9", build_group("C9"), "C3xC3", build_group("C3xC3"), 0},
      {"C25", build_group("C25"), "C25", build_group("C25"), 5}};
  for (const auto& [n, g] : order27_types()) cases.emplace_back("C27", c27, n, g, n == "C27" ? 9 : 0);
  auto types = order27_types();
  for (std::size_t i = 0; i < types.size(); ++i) {
    o.expect(types[i].second.order() == 27, types[i].first + " has order 27");
    for (std::size_t j = 0; j < i; ++j)
      o.expect(!are_isomorphic(types[i].second, types[j].second), types[i].first + " !~ " + types[j].first);
  }
  for (const auto& [a, pa, b, pb, want] : cases) {
    auto r = count(a, pa, b, pb);
    o.detail << a << "/" << b << "=" << r.count << " ";
    o.expect(r.complete && r.count == want, a + " on " + b + " expected " + std::to_string(want));
  }
}

void criterion2(Outcome& o) {
  auto r = count_hgs(parse_spec("A5"), parse_spec("A5"));
  o.detail << "count=" << r.count << " complete=" << r.complete << " nodes=" << r.nodes;
  o.expect(r.count == 2, "count == 2");
  o.expect(r.complete, "complete");
}

// |Aut Gamma| * #{regular N ~ Gamma in the brute lattice} / |Aut G|.
Rational lattice_crosscheck(const PermGroup& gamma, const PermGroup& g) {
  auto elems = index_group(g)->elements();
  std::uint64_t n_iso = 0;
  for (const auto& s : oracle::lattice_regular_subgroups(elems))
    if (are_isomorphic(PermGroup::generated_by(elems.size(), s), gamma)) ++n_iso;
  auto aut_gamma = oracle::brute_automorphisms(oracle::table_in_order(index_group(gamma)->elements())).size();
  auto aut_g = oracle::brute_automorphisms(oracle::table_in_order(elems)).size();
  return Rational(BigInt(aut_gamma) * n_iso, BigInt(aut_g));
}

void criterion3(Outcome& o) {
  for (const char* a : {"C6", "S3"})
    for (const char* b : {"C6", "S3"}) {
      auto ga = build_group(a), gb = build_group(b);
      auto r = count(a, ga, b, gb);
      auto brute = oracle::brute_hgs_count(ga.generators(), index_group(gb)->elements());
      auto lattice = lattice_crosscheck(ga, gb);
      o.detail << a << "/" << b << "=" << r.count << " ";
      o.expect(r.complete && r.count >= 1, std::string(a) + " on " + b + " >= 1");
      o.expect(r.count == brute, std::string(a) + " on " + b + " equals the brute embedding count");
      o.expect(Rational(r.count) == lattice, std::string(a) + " on " + b + " equals the lattice count");
    }
}

void criterion4(Outcome& o) {
  auto r = count_hgs(parse_spec("E(5,2)"), parse_spec("E(5,2)"));
  o.detail << "count=" << r.count << " (bound 5^1*4 = 20)";
  o.expect(r.complete, "complete");
  o.expect(r.count >= 20, "count >= 20");
}

void criterion5(Outcome& o) {
  Named groups;
  for (const char* s : {"C2",     "C3",     "C4",     "C5",        "C6",    "C7",       "C8",   "C9",
                        "C10",    "C11",    "C12",    "C13",       "C14",   "C15",      "C16",  "E(2,2)",
                        "E(2,3)", "E(2,4)", "E(3,2)", "C2xC4",     "C2xC6", "C2xC8",    "C4xC4", "C2xC2xC4",
                        "D8",     "D16",    "D8xC2"})
    groups.emplace_back(s, build_group(s));
  groups.emplace_back("Q8", small_groups::quaternion8());
  std::uint64_t embeddings = 0, checks = 0, failures = 0;
  StructureOptions so;
  so.composition_factors = false;
  for (const auto& [name, g] : groups) {
    o.expect(structure_report(g, so).is_nilpotent, name + " nilpotent");
    auto hol = Holomorph::of(index_group(g));
    auto e = enumerate_regular_subgroups(*hol);
    o.expect(e.complete, name + " enumeration complete");
    embeddings += e.records.size();
    const auto primes = prime_divisors(static_cast<std::uint64_t>(g.order()));
    for (const auto& rec : e.records) {
      bool soluble = structure_report(rec.subgroup, so).is_soluble;
      failures += !soluble;
      auto beta = inclusion_embedding(*hol, rec.subgroup);
      for (auto p : primes) {
        auto w = delta_p(*hol, beta, p);
        ++checks;
        if (!w.ok() || w.expected_order != static_cast<std::uint64_t>(g.order()) / p_part(static_cast<std::uint64_t>(g.order()), p))
          ++failures;
      }
    }
  }
  o.detail << groups.size() << " groups, " << embeddings << " regular subgroups, " << checks << " Delta_p checks, "
           << failures << " failures";
  o.expect(failures == 0, "zero failures");
}

void criterion6(Outcome& o) {
  Named groups;
  for (const char* s : {"C2", "C3", "C4", "E(2,2)", "C5", "C6", "S3", "C7", "C8", "C2xC4", "E(2,3)", "D8", "C9",
                        "E(3,2)", "C10", "D10", "C11", "C12", "C2xC6", "D12", "A4"})
    groups.emplace_back(s, build_group(s));
  groups.emplace_back("Q8", small_groups::quaternion8());
  groups.emplace_back("Dic12", small_groups::dicyclic12());
  std::size_t mismatches = 0, total = 0;
  for (const auto& [name, g] : groups) {
    auto c = index_group(g);
    auto e = enumerate_regular_subgroups(*Holomorph::of(c));
    std::set<std::vector<Permutation>> got;
    for (const auto& r : e.records) got.insert(r.elements);
    bool same = e.complete && got.size() == e.records.size() && got == oracle::lattice_regular_subgroups(c->elements());
    mismatches += !same;
    total += got.size();
    o.expect(same, name + " matches the lattice oracle");
  }
  o.detail << groups.size() << " groups (" << total << " regular subgroups) ";
  std::size_t inst = 0;
  for (const auto& in : counted_instances()) {
    auto r = count(in.gamma, in.pg_gamma, in.g, in.pg_g);
    auto orbit = aut_orbit_crosscheck(in.pg_gamma, in.pg_g);
    ++inst;
    o.expect(r.complete && orbit == Rational(r.count), in.gamma + " on " + in.g + " crosscheck");
  }
  o.detail << inst << " crosschecked instances";
}

void criterion7(Outcome& o) {
  const std::uint64_t sym[] = {3, 4, 6, 9, 12, 18};
  for (unsigned m = 3; m <= 8; ++m) {
    auto a = max_abelian_order(build_group("S" + std::to_string(m))).a_value;
    o.detail << "S" << m << "=" << a << " ";
    o.expect(a == sym[m - 3], "a(S" + std::to_string(m) + ")");
  }
  for (auto [s, want] : std::vector<std::pair<std::string, std::uint64_t>>{{"A5", 5}, {"PSL(2,7)", 7}, {"PSL(2,8)", 9}}) {
    auto a = max_abelian_order(build_group(s)).a_value;
    o.detail << s << "=" << a << " ";
    o.expect(a == want, "a(" + s + ")");
  }
}

void criterion8(Outcome& o) {
  for (const char* s : {"A5", "A6", "A7", "PSL(2,7)", "PSL(2,8)", "PSL(2,11)", "PSL(2,13)"}) {
    auto k = known_aut_group(parse_spec(s));
    o.expect(k.aut.order() % k.inner.order() == 0 && k.inner.order() == spec_order(parse_spec(s)),
             std::string(s) + " catalog Aut");
    auto r = check_a_ineq(k.inner, k.aut);
    o.detail << s << ":" << r.a_t << "," << r.a_aut << " ";
    o.expect(r.pass, std::string(s) + " 3(a(T)a(AutT))^3 < |T|^3");
  }
}

void criterion9(Outcome& o) {
  auto u = lie_datum(LieFamily::A2, 4, 2);
  auto g = su42_plane_group();
  o.expect(u.order_g == 25920 && u.d == 1 && u.order_t == g.order(), "|PSU4(2)| table order matches the plane group");
  std::vector<LieFamily> classical, exceptional;
  for (LieFamily f : all_lie_families()) (is_classical(f) ? classical : exceptional).push_back(f);
  auto c = sweep_ineq3(classical, 8, 64);
  auto e = sweep_ineq3(exceptional, 0, 64);
  o.expect(c.all_pass(), "classical sweep");
  o.expect(e.all_pass(), "exceptional sweep");
  std::size_t psl2 = 0, helper = 0;
  for (std::uint64_t q = 2; q <= 1024; ++q) {
    std::uint64_t p;
    unsigned k;
    if (!prime_power(q, p, k)) continue;
    ++helper;
    o.expect(helper_bound(q), "e^3 <= q^2/2 at q = " + std::to_string(q));
    if (q < 4) continue;
    ++psl2;
    o.expect(psl2_bound_check(q).pass(), "psl2 check at q = " + std::to_string(q));
  }
  for (unsigned n = 5; n <= 64; ++n) o.expect(alt_bound_check(n), "alt check at n = " + std::to_string(n));
  o.detail << c.rows.size() << " classical rows, " << e.rows.size() << " exceptional rows, " << psl2 << " PSL2 q, "
           << helper << " helper q, 60 alternating n";
}

void criterion10(Outcome& o) {
  o.expect(isotropic_planes().size() == 27, "27 isotropic planes");
  auto [a, b] = su42_witness_matrices();
  o.expect(su42_contains(a) && su42_contains(b), "A, B in SU4(2)");
  o.expect(a.pow(9).is_identity() && b.pow(3).is_identity() && !a.pow(3).is_identity(), "A^9 = B^3 = I != A^3");
  o.expect(b * a == a.pow(4) * b, "BA = A^4 B");
  auto j = PermGroup::from_generators({action_on_planes(a), action_on_planes(b)});
  o.expect(j.order() == 27 && j.degree() == 27 && j.is_regular(), "<A,B> regular of order 27");
  auto pair = guralnick_case_builder(GuralnickCase::E).pair;
  o.expect(pair.g.order() == 25920, "plane group order");
  auto emb = untangle_embedding(pair);
  o.detail << "source order " << emb.report.source_order << ", pairs " << emb.report.pairs_checked;
  o.expect(emb.report.ok() && emb.report.source_order == 25920, "H x J regular in Hol(PSU4(2))");
}

void criterion11(Outcome& o) {
  struct Case {
    std::string which;
    std::string factor;
  };
  for (const Case& c : {Case{"i", "A5"}, Case{"ii", "PSL(2,7)"}, Case{"iii", "PSL(2,7)"}}) {
    auto r = sol_insol_verify(c.which, 7);
    o.expect(r.embedding.report.ok(), c.which + " embedding");
    o.expect(r.gamma_soluble, c.which + " Gamma soluble");
    o.expect(r.g_nonabelian_factors == std::vector<std::string>{c.factor}, c.which + " G factor " + c.factor);
    o.expect(r.factors_differ, c.which + " factors differ");
    o.expect(r.ok(), c.which + " report");
    if (c.which == "ii") o.expect(are_isomorphic(r.pair.h, build_group("S4")).has_value(), "ii H ~ S4");
    if (c.which == "iii") {
      o.expect(are_isomorphic(r.pair.h, build_group("F21")).has_value(), "iii H ~ F21");
      o.expect(are_isomorphic(r.pair.j, build_group("D8")).has_value(), "iii J ~ D8");
    }
    o.detail << c.which << ":" << r.embedding.report.source_order << " ";
  }
}

void criterion12(Outcome& o) {
  auto a6 = build_group("A6");
  auto c = find_complement(a6, a6.stabilizer(0));
  o.detail << "complement search nodes " << c.nodes;
  o.expect(c.complete && !c.j, "no regular order-6 subgroup of A6");
  for (std::uint64_t n : {6, 10}) {
    bool rejected = false;
    try {
      an_gen_embedding(n);
    } catch (const DomainError&) {
      rejected = true;
    }
    o.expect(rejected, "an-gen rejects n = " + std::to_string(n));
  }
}

void criterion13(Outcome& o) {
  auto r = an_gen_embedding(8);
  o.detail << "A7 x C2^" << r.e << " source order " << r.embedding.report.source_order;
  o.expect(r.embedding.report.ok(), "embedding verified");
  o.expect(r.embedding.report.source_order == 20160 && r.pair.h.order() == 2520 && r.pair.j.order() == 8,
           "orders 20160 = 2520 * 8");
  o.expect(r.e == 3 && r.m == 1, "C2^3 translations");
  for (const auto& p : r.parity) o.expect(p.ok, "parity of " + p.element);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cyclic prime-power counts", 300, criterion1},
      {2, "A5 on A5 has exactly two structures", 900, criterion2},
      {3, "degree 6 abelian and nonabelian types", 0, criterion3},
      {4, "elementary abelian lower bound", 600, criterion4},
      {5, "Delta_p Hall property", 0, criterion5},
      {6, "lattice oracle and crosscheck equivalence", 0, criterion6},
      {7, "a(G) table", 0, criterion7},
      {8, "a-inequality spot checks", 1800, criterion8},
      {9, "Lie-type sweeps", 0, criterion9},
      {10, "PSU(4,2) construction", 300, criterion10},
      {11, "soluble Gamma with insoluble type", 0, criterion11},
      {12, "negative controls", 0, criterion12},
      {13, "A7 x C2^3 in Hol(A8)", 600, criterion13},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) o.expect(false, "runtime limit " + std::to_string(c.limit_s) + " s");
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << std::fixed
              << std::setprecision(2) << secs << " s) " << o.detail.str() << std::endl;
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - failures << "/" << criteria.size() << std::endl;
  return failures;
}
