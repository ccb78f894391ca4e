#include "hgl/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "hgl/bounds.hpp"
#include "hgl/catalog.hpp"
#include "hgl/constructions.hpp"
#include "hgl/hgs.hpp"
#include "hgl/iso_aut.hpp"
#include "hgl/lie_tables.hpp"
#include "hgl/matrix_groups.hpp"
#include "hgl/structure.hpp"

namespace hgl::cli {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

struct Globals {
  std::string cache_dir;
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  bool text = false;
};

struct Outcome {
  json result = json::object();
  bool complete = true;
  ExitCode status = kPass;
  std::string reason;
};

struct Command {
  CLI::App* app = nullptr;
  /// Canonical inputs, read after parsing; the cache key is derived from them.
  std::function<json()> inputs;
  std::function<Outcome(const json&)> exec;
};

const char* status_name(ExitCode c) {
  switch (c) {
    case kPass: return "pass";
    case kFail: return "fail";
    case kUsage: return "usage";
    case kBudget: return "budget";
  }
  return "?";
}

json num(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::uint64_t{1} << 53)) return static_cast<std::uint64_t>(v);
  return to_string(v);
}

std::string canonical_spec(const std::string& text) { return parse_spec(text).to_string(); }

json cycles(const std::vector<Permutation>& gens) {
  json a = json::array();
  for (const auto& g : gens) a.push_back(g.to_cycles());
  return a;
}

json report_json(const EmbeddingReport& r) {
  return {{"homomorphism", r.homomorphism}, {"regular", r.regular},           {"injective", r.injective},
          {"pairs_checked", r.pairs_checked}, {"exhaustive_pairs", r.exhaustive_pairs}, {"source_order", r.source_order},
          {"verified", r.ok()}};
}

json factor_names(const StructureReport& s) {
  json a = json::array();
  for (const auto& f : s.composition_factors) a.push_back(f.name);
  return a;
}

RegularSearchOptions search_options(const json& in, const Globals& g) {
  RegularSearchOptions o;
  o.budget = in.at("budget").get<std::uint64_t>();
  o.threads = g.threads;
  return o;
}

VerifyOptions verify_options(const json& in) {
  VerifyOptions v;
  v.seed = in.at("seed").get<std::uint64_t>();
  return v;
}

// Small isomorphism-type candidates of a given order drawn from the catalog.
std::vector<std::pair<std::string, PermGroup>> type_candidates(std::uint64_t n) {
  std::vector<std::string> names{"C" + std::to_string(n)};
  std::uint64_t p;
  unsigned e;
  if (prime_power(n, p, e) && e >= 2) names.push_back("E(" + std::to_string(p) + "," + std::to_string(e) + ")");
  for (std::uint64_t a = 2; a * a <= n; ++a)
    if (n % a == 0 && (n / a) % a == 0) names.push_back("C" + std::to_string(a) + "xC" + std::to_string(n / a));
  if (n % 4 == 0 && n > 4) names.push_back("C2xC2xC" + std::to_string(n / 4));
  if (n >= 6 && n % 2 == 0) names.push_back("D" + std::to_string(n));
  if (n % 6 == 0 && n > 6) names.push_back("S3xC" + std::to_string(n / 6));
  if (n % 8 == 0 && n > 8) names.push_back("D8xC" + std::to_string(n / 8));
  if (n == 12) names.push_back("A4");
  if (n == 24) names.insert(names.end(), {"S4", "A4xC2"});
  if (n == 21 || n == 55) names.push_back("F" + std::to_string(n));
  if (n == 60) names.push_back("A5");
  if (n == 36) names.push_back("S3xS3");
  std::vector<std::pair<std::string, PermGroup>> out;
  for (const auto& s : names) {
    auto spec = parse_spec(s);
    if (spec_order(spec) == n) out.emplace_back(spec.to_string(), build_group(spec));
  }
  return out;
}

// "stabilizer[:k]", "sylow:p", "gens:(..);(..)", or a catalog spec naming the expected type.
struct SubgroupRequest {
  std::string kind;
  std::string arg;
};

SubgroupRequest parse_request(const std::string& text) {
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "stabilizer" || head == "sylow" || head == "gens" || head == "search") return {head, arg};
  return {"type", canonical_spec(text)};
}

PermGroup subgroup_from(const PermGroup& g, const SubgroupRequest& r) {
  if (r.kind == "stabilizer") return g.stabilizer(r.arg.empty() ? 0 : static_cast<Point>(std::stoul(r.arg)));
  if (r.kind == "sylow") return sylow_subgroup(g, std::stoull(r.arg));
  if (r.kind == "gens") {
    std::vector<Permutation> gens;
    std::stringstream ss(r.arg);
    std::string item;
    while (std::getline(ss, item, ';'))
      if (!item.empty()) gens.push_back(Permutation::from_cycles(item, g.degree()));
    return PermGroup::generated_by(g.degree(), gens);
  }
  throw InvalidInput("unsupported subgroup request: " + r.kind);
}

Outcome cmd_count_hgs(const json& in, const Globals& gl) {
  HgsOptions o;
  o.search = search_options(in, gl);
  auto r = count_hgs(parse_spec(in.at("gamma").get<std::string>()), parse_spec(in.at("g").get<std::string>()), o);
  Outcome out;
  out.result = {{"gamma", r.gamma},
                {"g", r.g},
                {"count", r.count},
                {"regular_subgroups", r.regular_subgroups},
                {"aut_gamma", num(r.aut_gamma)},
                {"aut_g", num(r.aut_g)},
                {"crosscheck", to_string(r.crosscheck)},
                {"crosscheck_matches", r.crosscheck_matches},
                {"nodes", r.nodes}};
  out.complete = r.complete;
  if (!r.complete) {
    out.status = kBudget;
    out.reason = "search budget exhausted; count is a lower bound";
  } else if (!r.crosscheck_matches) {
    out.status = kFail;
    out.reason = "count disagrees with the Aut-orbit crosscheck";
  }
  return out;
}

Outcome cmd_enumerate(const json& in, const Globals& gl) {
  auto g = build_group(in.at("g").get<std::string>());
  auto hol = Holomorph::of(index_group(g));
  auto e = enumerate_regular_subgroups(*hol, search_options(in, gl));
  label_iso_types(e, type_candidates(static_cast<std::uint64_t>(g.order())));
  Outcome out;
  json subs = json::array();
  std::map<std::string, std::uint64_t> by_type;
  for (const auto& rec : e.records) {
    std::string t = rec.iso_type.value_or("unlabelled");
    ++by_type[t];
    subs.push_back({{"type", t}, {"abelian", rec.subgroup.is_abelian()}, {"generators", cycles(rec.subgroup.generators())}});
  }
  out.result = {{"g", in.at("g")}, {"order", num(g.order())}, {"count", e.records.size()},
                {"by_type", by_type}, {"subgroups", subs}, {"nodes", e.nodes}};
  out.complete = e.complete;
  if (!e.complete) out.status = kBudget;
  return out;
}

Outcome cmd_delta_p(const json& in, const Globals& gl) {
  auto g = build_group(in.at("g").get<std::string>());
  const auto p = in.at("p").get<std::uint64_t>();
  auto hol = Holomorph::of(index_group(g));
  auto e = enumerate_regular_subgroups(*hol, search_options(in, gl));
  Outcome out;
  json rows = json::array();
  std::size_t failures = 0;
  const std::size_t limit = in.at("all_embeddings").get<bool>() ? e.records.size() : std::min<std::size_t>(1, e.records.size());
  for (std::size_t i = 0; i < limit; ++i) {
    const auto& rec = e.records[i];
    auto w = delta_p(*hol, inclusion_embedding(*hol, rec.subgroup), p);
    StructureOptions so;
    so.composition_factors = false;
    bool soluble = structure_report(rec.subgroup, so).is_soluble;
    bool ok = w.ok() && soluble;
    failures += !ok;
    rows.push_back({{"index", i},
                    {"delta_order", w.delta_elements.size()},
                    {"expected_order", w.expected_order},
                    {"is_subgroup", w.is_subgroup},
                    {"n_soluble", soluble},
                    {"ok", ok}});
  }
  out.result = {{"g", in.at("g")}, {"p", p}, {"regular_subgroups", e.records.size()}, {"checked", rows.size()},
                {"failures", failures}, {"embeddings", rows}};
  out.complete = e.complete;
  if (!e.complete)
    out.status = kBudget;
  else if (failures) {
    out.status = kFail;
    out.reason = "Delta_p is not a Hall p'-subgroup for some embedding";
  }
  return out;
}

Outcome cmd_a_value(const json& in, const Globals& gl) {
  auto g = build_group(in.at("group").get<std::string>());
  auto r = max_abelian_order(g, 50'000, gl.threads);
  Outcome out;
  out.result = {{"group", in.at("group")}, {"order", num(g.order())}, {"a_value", r.a_value},
                {"witness", cycles(r.witness)}, {"nodes", r.nodes}};
  return out;
}

Outcome cmd_check_a_ineq(const json& in, const Globals&) {
  auto k = known_aut_group(parse_spec(in.at("t").get<std::string>()));
  auto r = check_a_ineq(k.inner, k.aut);
  Outcome out;
  out.result = {{"t", in.at("t")},     {"order_t", num(r.order_t)}, {"aut_order", num(k.aut.order())},
                {"a_t", r.a_t},        {"a_aut", r.a_aut},          {"lhs", num(r.lhs)},
                {"rhs", num(r.rhs)},   {"pass", r.pass}};
  if (!r.pass) {
    out.status = kFail;
    out.reason = "3 (a(T) a(Aut T))^3 >= |T|^3";
  }
  return out;
}

json sweep_row(const SweepRow& r) {
  const auto& x = r.datum;
  return {{"family", family_tag(x.family)}, {"name", x.name},        {"n", x.n},     {"q", x.q},
          {"order_g", to_string(x.order_g)}, {"d", x.d},             {"epsilon", x.epsilon}, {"g", x.g},
          {"out", x.out},                    {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}, {"pass", r.pass}};
}

std::vector<LieFamily> parse_families(const std::string& list) {
  std::vector<LieFamily> fs;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all" || item == "classical" || item == "exceptional") {
      for (LieFamily f : all_lie_families())
        if (item == "all" || (item == "classical") == is_classical(f)) fs.push_back(f);
    } else if (!item.empty()) {
      fs.push_back(parse_lie_family(item));
    }
  }
  if (fs.empty()) throw InvalidInput("--families: empty list");
  return fs;
}

Outcome cmd_lie_sweep(const json& in, const Globals&) {
  auto fams = parse_families(in.at("families").get<std::string>());
  auto rep = sweep_ineq3(fams, in.at("max_n").get<unsigned>(), in.at("max_q").get<std::uint64_t>());
  Outcome out;
  json failures = json::array(), rows = json::array();
  for (const auto& r : rep.failures) failures.push_back(sweep_row(r));
  if (in.at("rows").get<bool>())
    for (const auto& r : rep.rows) rows.push_back(sweep_row(r));
  out.result = {{"families", in.at("families")}, {"max_n", in.at("max_n")}, {"max_q", in.at("max_q")},
                {"checked", rep.rows.size()},    {"failures", failures},    {"skipped", rep.skipped},
                {"all_pass", rep.all_pass()}};
  if (in.at("rows").get<bool>()) out.result["rows"] = rows;
  if (!rep.all_pass()) {
    out.status = kFail;
    out.reason = "3 d |Out T|^3 >= |G| for some row";
  }
  return out;
}

Outcome cmd_psl2_check(const json& in, const Globals&) {
  auto c = psl2_bound_check(in.at("q").get<std::uint64_t>());
  Outcome out;
  out.result = {{"q", c.q}, {"p", c.p}, {"e", c.e}, {"redirect", c.redirect}, {"pass", c.pass()}};
  if (c.redirect) {
    out.result["redirect_to"] = c.redirect_to;
  } else {
    out.result["lhs"] = num(c.lhs);
    out.result["rhs"] = num(c.rhs);
    out.result["reduced_pass"] = c.reduced_pass;
    out.result["full_pass"] = c.full_pass;
  }
  if (!c.pass()) out.status = kFail;
  return out;
}

Outcome cmd_untangle(const json& in, const Globals& gl) {
  ComplementaryPair pair;
  pair.g = build_group(in.at("g").get<std::string>());
  auto hreq = parse_request(in.at("h").get<std::string>());
  auto jreq = parse_request(in.at("j").get<std::string>());
  pair.h = hreq.kind == "type" ? pair.g.stabilizer(0) : subgroup_from(pair.g, hreq);
  Outcome out;
  if (jreq.kind == "type" || jreq.kind == "search") {
    auto c = find_complement(pair.g, pair.h, search_options(in, gl));
    if (!c.j) {
      out.complete = c.complete;
      out.status = c.complete ? kFail : kBudget;
      out.reason = c.complete ? "no complement to H exists" : "complement search budget exhausted";
      out.result = {{"h_order", num(pair.h.order())}, {"j_found", false}, {"nodes", c.nodes}};
      return out;
    }
    pair.j = *c.j;
  } else {
    pair.j = subgroup_from(pair.g, jreq);
  }
  json types = json::object();
  bool types_ok = true;
  for (const auto* r : {&hreq, &jreq}) {
    if (r->kind != "type") continue;
    bool ok = are_isomorphic(r == &hreq ? pair.h : pair.j, build_group(r->arg)).has_value();
    types[(r == &hreq ? "h ~ " : "j ~ ") + r->arg] = ok;
    types_ok &= ok;
  }
  out.result = {{"g_order", num(pair.g.order())}, {"h_order", num(pair.h.order())}, {"j_order", num(pair.j.order())},
                {"complementary", is_complementary(pair)}, {"type_checks", types}};
  if (!is_complementary(pair)) {
    out.status = kFail;
    out.reason = "H and J are not complementary";
    return out;
  }
  auto e = untangle_embedding(pair, verify_options(in));
  out.result["embedding"] = report_json(e.report);
  if (!e.report.ok() || !types_ok) {
    out.status = kFail;
    out.reason = !types_ok ? "subgroup type check failed" : "embedding failed verification";
  }
  return out;
}

Outcome cmd_an_gen(const json& in, const Globals&) {
  Outcome out;
  const auto n = in.at("n").get<std::uint64_t>();
  try {
    auto r = an_gen_embedding(n, verify_options(in));
    json parity = json::array();
    for (const auto& c : r.parity)
      parity.push_back({{"element", c.element}, {"two_cycles", c.two_cycles}, {"m_cycles", c.m_cycles},
                        {"even", c.even}, {"ok", c.ok}});
    out.result = {{"n", n},
                  {"e", r.e},
                  {"m", r.m},
                  {"h_order", num(r.pair.h.order())},
                  {"j_order", num(r.pair.j.order())},
                  {"degree", num(r.pair.g.order())},
                  {"parity", parity},
                  {"embedding", report_json(r.embedding.report)}};
    if (!r.embedding.report.ok()) {
      out.status = kFail;
      out.reason = "embedding failed verification";
    }
  } catch (const DomainError& err) {
    out.status = kFail;
    out.reason = err.what();
    out.result = {{"n", n}, {"rejected", true}};
  }
  return out;
}

Outcome cmd_psu42(const json& in, const Globals&) {
  auto [a, b] = su42_witness_matrices();
  auto g = su42_plane_group();
  auto j = PermGroup::from_generators({action_on_planes(a), action_on_planes(b)});
  json rel = {{"A9", a.pow(9).is_identity()},
              {"B3", b.pow(3).is_identity()},
              {"A3_ne_I", !a.pow(3).is_identity()},
              {"BA_eq_A4B", b * a == a.pow(4) * b}};
  bool ok = true;
  for (const auto& [k, v] : rel.items()) ok &= v.get<bool>();
  Outcome out;
  out.result = {{"planes", isotropic_planes().size()},
                {"group_order", num(g.order())},
                {"contains", {{"A", su42_contains(a)}, {"B", su42_contains(b)}}},
                {"j_order", num(j.order())},
                {"regular", j.is_regular() && j.degree() == isotropic_planes().size()},
                {"relations", rel}};
  ok &= isotropic_planes().size() == 27 && j.order() == 27 && j.is_regular() && su42_contains(a) && su42_contains(b);
  if (in.at("embedding").get<bool>()) {
    auto pair = guralnick_case_builder(GuralnickCase::E).pair;
    auto e = untangle_embedding(pair, verify_options(in));
    out.result["embedding"] = report_json(e.report);
    ok &= e.report.ok();
  }
  if (!ok) {
    out.status = kFail;
    out.reason = "a PSU(4,2) check failed";
  }
  return out;
}

Outcome cmd_sol_insol(const json& in, const Globals&) {
  auto r = sol_insol_verify(in.at("case").get<std::string>(), in.at("p").get<std::uint64_t>(),
                            in.at("allow_large").get<bool>(), verify_options(in));
  json isos = json::object();
  for (const auto& [k, v] : r.iso_checks) isos[k] = v;
  Outcome out;
  out.result = {{"case", r.which},
                {"p", r.p},
                {"h_order", num(r.pair.h.order())},
                {"j_order", num(r.pair.j.order())},
                {"gamma_soluble", r.gamma_soluble},
                {"gamma_factors", factor_names(r.gamma_structure)},
                {"g_factors", factor_names(r.g_structure)},
                {"g_nonabelian_factors", r.g_nonabelian_factors},
                {"factors_differ", r.factors_differ},
                {"iso_checks", isos},
                {"embedding", report_json(r.embedding.report)},
                {"pass", r.ok()}};
  if (!r.ok()) {
    out.status = kFail;
    out.reason = "sol-insol verification failed";
  }
  return out;
}

Outcome cmd_structure(const json& in, const Globals&) {
  auto g = build_group(in.at("group").get<std::string>());
  auto s = structure_report(g);
  json derived = json::array(), lower = json::array();
  for (const auto& v : s.derived_series_orders) derived.push_back(num(v));
  for (const auto& v : s.lower_central_series_orders) lower.push_back(num(v));
  Outcome out;
  out.result = {{"group", in.at("group")},  {"order", num(s.order)},       {"degree", g.degree()},
                {"abelian", s.is_abelian},  {"soluble", s.is_soluble},     {"nilpotent", s.is_nilpotent},
                {"derived_series", derived}, {"lower_central_series", lower}, {"composition_factors", factor_names(s)}};
  return out;
}

std::optional<json> cache_read(const fs::path& file, const std::string& key) {
  std::ifstream f(file);
  if (!f) return std::nullopt;
  try {
    json rec = json::parse(f);
    if (rec.value("tool_version", "") != kToolVersion || rec.value("cache_key", "") != key) return std::nullopt;
    return rec;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void cache_write(const fs::path& dir, const fs::path& file, const json& rec, std::ostream& err) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream f(tmp);
    if (!f) {
      err << "cache: cannot write " << tmp << "\n";
      return;
    }
    f << rec.dump(2) << "\n";
  }
  fs::rename(tmp, file, ec);
  if (ec) err << "cache: " << ec.message() << "\n";
}

void print_text(const json& rec, std::ostream& out) {
  out << "command: " << rec["command"].get<std::string>() << "\n";
  out << "status: " << rec["status"].get<std::string>() << "\n";
  if (rec.contains("reason")) out << "reason: " << rec["reason"].get<std::string>() << "\n";
  out << "complete: " << (rec["complete"].get<bool>() ? "true" : "false") << "\n";
  for (const auto& [k, v] : rec["result"].items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

}  // namespace

std::string digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf-Galois structure counts, regular embeddings and group-order bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  bool json_flag = false;
  app.add_option("--cache-dir", gl.cache_dir, "Directory for cached results (default: $HGL_CACHE_DIR)");
  app.add_option("--budget", gl.budget, "Search node budget");
  app.add_option("--threads", gl.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", gl.seed, "Seed for randomized verification");
  auto* text_opt = app.add_flag("--text", gl.text, "Human-readable output");
  app.add_flag("--json", json_flag, "JSON output (default)")->excludes(text_opt);

  std::map<std::string, Command> cmds;
  auto add = [&](const std::string& name, const std::string& help) -> Command& {
    auto& c = cmds[name];
    c.app = app.add_subcommand(name, help);
    return c;
  };
  auto with_run = [&gl](json j) {
    j["budget"] = gl.budget;
    j["seed"] = gl.seed;
    return j;
  };

  std::string gamma, gspec, group, t, h, j, families, which = "i";
  std::uint64_t p = 0, q = 0, n = 0, max_q = 64;
  unsigned max_n = 8;
  bool all_embeddings = false, rows = false, embedding = false, allow_large = false;

  {
    auto& c = add("count-hgs", "Count Hopf-Galois structures of type G on a Gamma-extension");
    c.app->add_option("--gamma", gamma, "Galois group spec")->required();
    c.app->add_option("--g", gspec, "Type spec")->required();
    c.inputs = [&] { return with_run({{"gamma", canonical_spec(gamma)}, {"g", canonical_spec(gspec)}}); };
    c.exec = [&](const json& in) { return cmd_count_hgs(in, gl); };
  }
  {
    auto& c = add("enumerate-regular", "List the regular subgroups of Hol(G)");
    c.app->add_option("--g", gspec, "Group spec")->required();
    c.inputs = [&] { return with_run({{"g", canonical_spec(gspec)}}); };
    c.exec = [&](const json& in) { return cmd_enumerate(in, gl); };
  }
  {
    auto& c = add("delta-p", "Check that Delta_p is a Hall p'-subgroup for regular embeddings into Hol(G)");
    c.app->add_option("--g", gspec, "Nilpotent group spec")->required();
    c.app->add_option("--p", p, "Prime")->required();
    c.app->add_flag("--all-embeddings", all_embeddings, "Check every regular subgroup");
    c.inputs = [&] { return with_run({{"g", canonical_spec(gspec)}, {"p", p}, {"all_embeddings", all_embeddings}}); };
    c.exec = [&](const json& in) { return cmd_delta_p(in, gl); };
  }
  {
    auto& c = add("a-value", "Largest order of an abelian subgroup");
    c.app->add_option("--group", group, "Group spec")->required();
    c.inputs = [&] { return with_run({{"group", canonical_spec(group)}}); };
    c.exec = [&](const json& in) { return cmd_a_value(in, gl); };
  }
  {
    auto& c = add("check-a-ineq", "3 (a(T) a(Aut T))^3 < |T|^3 for a catalog simple group");
    c.app->add_option("--t", t, "Simple group spec")->required();
    c.inputs = [&] { return with_run({{"t", canonical_spec(t)}}); };
    c.exec = [&](const json& in) { return cmd_check_a_ineq(in, gl); };
  }
  {
    auto& c = add("lie-sweep", "Sweep 3 d |Out T|^3 < |G| over Lie-type table rows");
    c.app->add_option("--families", families, "Comma list of tags, or all/classical/exceptional")->required();
    c.app->add_option("--max-n", max_n, "Largest classical n");
    c.app->add_option("--max-q", max_q, "Largest q")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1024}));
    c.app->add_flag("--rows", rows, "Include every row in the output");
    c.inputs = [&] {
      parse_families(families);
      return with_run({{"families", families}, {"max_n", max_n}, {"max_q", max_q}, {"rows", rows}});
    };
    c.exec = [&](const json& in) { return cmd_lie_sweep(in, gl); };
  }
  {
    auto& c = add("psl2-check", "Reduced PSL(2,q) inequality");
    c.app->add_option("--q", q, "Prime power q >= 4")->required();
    c.inputs = [&] { return with_run({{"q", q}}); };
    c.exec = [&](const json& in) { return cmd_psl2_check(in, gl); };
  }
  {
    auto& c = add("untangle", "Regular embedding of H x J into Hol(G) from complementary subgroups");
    c.app->set_help_flag("--help", "Print this help message and exit");
    c.app->add_option("--g", gspec, "Group spec")->required();
    c.app->add_option("--h", h, "stabilizer[:k], sylow:p, gens:CYCLES;..., or a spec checked on stabilizer(0)")
        ->required();
    c.app->add_option("--j", j, "search, sylow:p, gens:CYCLES;..., or a spec checked on the found complement")
        ->required();
    c.inputs = [&] {
      return with_run({{"g", canonical_spec(gspec)}, {"h", parse_request(h).kind == "type" ? canonical_spec(h) : h},
                       {"j", parse_request(j).kind == "type" ? canonical_spec(j) : j}});
    };
    c.exec = [&](const json& in) { return cmd_untangle(in, gl); };
  }
  {
    auto& c = add("an-gen", "A_{n-1} x C2^e x Cm regularly embedded in Hol(A_n)");
    c.app->add_option("--n", n, "Degree n >= 4")->required();
    c.inputs = [&] { return with_run({{"n", n}}); };
    c.exec = [&](const json& in) { return cmd_an_gen(in, gl); };
  }
  {
    auto& c = add("psu42-verify", "PSU(4,2) on 27 isotropic planes and the order-27 complement");
    c.app->add_flag("--embedding", embedding, "Also verify the untangle embedding into Hol(PSU(4,2))");
    c.inputs = [&] { return with_run({{"embedding", embedding}}); };
    c.exec = [&](const json& in) { return cmd_psu42(in, gl); };
  }
  {
    auto& c = add("sol-insol", "Soluble Gamma with insoluble type G");
    c.app->add_option("--case", which, "i, ii or iii")->check(CLI::IsMember({"i", "ii", "iii"}))->required();
    c.app->add_option("--p", p, "Mersenne prime for case iii (default 7)");
    c.app->add_flag("--allow-large", allow_large, "Permit p > 7 in case iii");
    c.inputs = [&] {
      return with_run({{"case", which}, {"p", which == "iii" ? (p ? p : 7) : 7}, {"allow_large", allow_large}});
    };
    c.exec = [&](const json& in) { return cmd_sol_insol(in, gl); };
  }
  {
    auto& c = add("structure", "Series, solubility and composition factors");
    c.app->add_option("--group", group, "Group spec")->required();
    c.inputs = [&] { return with_run({{"group", canonical_spec(group)}}); };
    c.exec = [&](const json& in) { return cmd_structure(in, gl); };
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsage;
  }

  std::string name;
  for (const auto& [k, c] : cmds)
    if (c.app->parsed()) name = k;
  Command& cmd = cmds.at(name);

  json inputs;
  try {
    inputs = cmd.inputs();
  } catch (const std::exception& e) {
    err << "hgl " << name << ": " << e.what() << "\n";
    return kUsage;
  }

  if (gl.cache_dir.empty())
    if (const char* env = std::getenv("HGL_CACHE_DIR")) gl.cache_dir = env;
  const std::string key = digest(name + "\n" + inputs.dump() + "\n" + kToolVersion);
  const fs::path cache_file = gl.cache_dir.empty() ? fs::path() : fs::path(gl.cache_dir) / (key + ".json");

  auto t0 = std::chrono::steady_clock::now();
  std::optional<json> record;
  if (!gl.cache_dir.empty()) record = cache_read(cache_file, key);
  const bool hit = record.has_value();
  if (!record) {
    Outcome o;
    try {
      o = cmd.exec(inputs);
    } catch (const BudgetExceeded& e) {
      o.status = kBudget;
      o.complete = false;
      o.reason = e.what();
    } catch (const DomainError& e) {
      o.status = kFail;
      o.reason = e.what();
    } catch (const InvalidInput& e) {
      err << "hgl " << name << ": " << e.what() << "\n";
      return kUsage;
    } catch (const CapExceeded& e) {
      err << "hgl " << name << ": " << e.what() << "\n";
      return kUsage;
    } catch (const std::exception& e) {
      o.status = kFail;
      o.reason = e.what();
    }
    if (o.status == kBudget) o.complete = false;
    json rec = {{"schema", kSchema},      {"tool_version", kToolVersion},  {"command", name},
                {"inputs", inputs},       {"result", o.result},            {"complete", o.complete},
                {"status", status_name(o.status)}, {"exit_code", static_cast<int>(o.status)}, {"cache_key", key}};
    if (!o.reason.empty()) rec["reason"] = o.reason;
    if (!gl.cache_dir.empty()) cache_write(gl.cache_dir, cache_file, rec, err);
    record = std::move(rec);
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  err << "hgl " << name << ": " << (*record)["status"].get<std::string>() << (hit ? " (cache hit)" : "")
      << ", wall time " << std::fixed << std::setprecision(3) << secs << " s\n";
  if ((*record).contains("reason")) err << "reason: " << (*record)["reason"].get<std::string>() << "\n";

  if (gl.text)
    print_text(*record, out);
  else
    out << record->dump(2) << "\n";
  return (*record)["exit_code"].get<int>();
}

}  // namespace hgl::cli
