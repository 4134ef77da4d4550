#include "leibniz/cli.hpp"

#include <cctype>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "leibniz/chains.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/lazy.hpp"
#include "leibniz/parse.hpp"
#include "leibniz/primes.hpp"
#include "leibniz/series.hpp"

namespace leibniz {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr const char* kToolVersion = "leibniz-kernel 0.1.0";

std::string fnv1a64(const std::string& data) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json subspace_json(const Subspace& s) {
  Json j;
  j["dim"] = s.dim();
  Json rows = Json::array();
  for (const auto& row : s.basis()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.value_str());
    rows.push_back(std::move(r));
  }
  j["basis"] = std::move(rows);
  return j;
}

Json vector_json(const Vector& v) {
  Json r = Json::array();
  for (const auto& x : v) r.push_back(x.value_str());
  return r;
}

AlgebraBlock block_from_algebra(const LeibnizAlgebra& g) {
  AlgebraBlock b;
  b.name = g.name();
  // derived names like "ex1/I" are not grammar identifiers; keep the
  // serialized table reparseable
  for (auto& c : b.name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) c = '_';
  b.field = g.field();
  b.dim = g.dim();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (!is_zero(g.table(i, j)))
        b.entries.push_back(
            {static_cast<int>(i + 1), static_cast<int>(j + 1), g.table(i, j)});
  return b;
}

// "e1,e2" -> generators; "0" -> no generators (the zero ideal).
std::vector<Vector> parse_generator_spec(const std::string& spec, const LeibnizAlgebra& g) {
  std::vector<Vector> gens;
  if (spec == "0") return gens;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.size() < 2 || tok[0] != 'e')
      throw InputError("bad generator '" + tok + "' in spec '" + spec + "' (expected e<k>)");
    long k = 0;
    try {
      k = std::stol(tok.substr(1));
    } catch (const std::exception&) {
      throw InputError("bad generator '" + tok + "' in spec '" + spec + "'");
    }
    if (k < 1 || static_cast<std::size_t>(k) > g.dim())
      throw IndexOutOfRange("generator " + tok + " outside [1, " + std::to_string(g.dim()) + "]");
    gens.push_back(unit_vector(g.field(), g.dim(), static_cast<std::size_t>(k - 1)));
  }
  if (gens.empty()) throw InputError("empty generator spec '" + spec + "'");
  return gens;
}

// Human-ordered plain rendering of the same payload tree.
void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array()))) {
        out << pad << k << ":\n";
        render_text(v, out, indent + 1);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        out << pad << "-\n";
        render_text(v, out, indent + 1);
      } else {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

struct Context {
  std::string format = "text";
  unsigned long long guard = 1000000;
  unsigned seed = 1;
  std::string echo;    // canonical command echo
  std::string digest_material;
};

void emit(const Context& ctx, const std::string& command, Json payload, std::ostream& out,
          double elapsed_ms) {
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["tool"] = kToolVersion;
  report["command"] = command;
  report["command_line"] = ctx.echo;
  report["inputs_digest"] = fnv1a64(ctx.digest_material);
  report["payload"] = std::move(payload);
  if (ctx.format == "json") {
    // wall-clock time is deliberately omitted from the machine format so that
    // identical inputs serialize byte-identically
    report["timing_ms"] = nullptr;
    out << report.dump(2) << "\n";
  } else {
    render_text(report, out, 0);
    out << "timing: " << elapsed_ms << " ms\n";
  }
}

LeibnizAlgebra load_algebra(Context& ctx, const std::string& file, const std::string& name) {
  const std::string text = read_file(file);
  ctx.digest_material += text;
  ctx.digest_material += '\0';
  return parse_algebra_file(text).find(name).build();
}

Json audit_json(const LeibnizAlgebra& g) {
  Json j;
  j["algebra"] = g.name();
  j["field"] = g.field().str();
  j["dim"] = g.dim();
  j["convention"] = to_string(g.convention());
  j["left_ok"] = g.audit().left_ok;
  j["right_ok"] = g.audit().right_ok;
  Json fails = Json::array();
  for (const auto& f : g.audit().failing_triples) {
    Json ff;
    ff["side"] = std::string(1, f.side);
    ff["triple"] = {"e" + std::to_string(f.i), "e" + std::to_string(f.j), "e" + std::to_string(f.k)};
    ff["residual"] = vector_json(f.residual);
    fails.push_back(std::move(ff));
  }
  j["failing_triples"] = std::move(fails);
  return j;
}

Json claim_json(const ClaimAuditReport& r) {
  Json j;
  j["claim_id"] = r.claim_id;
  j["statement"] = r.statement;
  j["status"] = to_string(r.status);
  j["detail"] = r.detail;
  j["depth_used"] = r.depth_used;
  if (r.witness_x) j["witness_x"] = lazy_str(*r.witness_x);
  if (r.witness_y) j["witness_y"] = lazy_str(*r.witness_y);
  if (r.witness_z) j["witness_z"] = lazy_str(*r.witness_z);
  if (r.witness_product) j["witness_product"] = lazy_str(*r.witness_product);
  if (!r.violation.empty()) j["violation"] = r.violation;
  return j;
}

Json witness_json(const WitnessReport& w) {
  Json j;
  if (w.witness_m) j["witness_m"] = *w.witness_m; else j["witness_m"] = nullptr;
  if (w.witness_left) j["witness_left"] = *w.witness_left; else j["witness_left"] = nullptr;
  if (w.witness_right) j["witness_right"] = *w.witness_right; else j["witness_right"] = nullptr;
  j["intersection"] = subspace_json(w.intersection);
  if (w.stabilization_index) j["stabilization_index"] = *w.stabilization_index;
  else j["stabilization_index"] = nullptr;
  j["search_depth"] = w.search_depth;
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic kernel for Leibniz algebras given by structure constants"};
  app.require_subcommand(1);
  Context ctx;
  {
    std::ostringstream echo;
    for (std::size_t i = 0; i < args.size(); ++i) echo << (i ? " " : "") << args[i];
    ctx.echo = echo.str();
  }
  app.add_option("--format", ctx.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--guard", ctx.guard, "Enumeration guard (max work)")->capture_default_str();
  app.add_option("--seed", ctx.seed, "Sampling seed")->capture_default_str();
  app.fallthrough();

  std::string file, name, kind = "derived", ideal_spec, by_spec, family;
  std::vector<std::string> term_specs, names;
  std::size_t depth = 0;
  bool do_audit = false;

  auto* c_check = app.add_subcommand("check", "Run the Leibniz identity audit");
  c_check->add_option("FILE", file)->required();
  c_check->add_option("-a,--algebra", name)->required();

  auto* c_series = app.add_subcommand("series", "Derived / lower-central / upper-central series");
  c_series->add_option("FILE", file)->required();
  c_series->add_option("-a,--algebra", name)->required();
  c_series->add_option("--kind", kind)->check(CLI::IsMember({"derived", "lower", "upper"}));

  auto* c_leib = app.add_subcommand("leib", "The ideal generated by all squares");
  c_leib->add_option("FILE", file)->required();
  c_leib->add_option("-a,--algebra", name)->required();

  auto* c_centers = app.add_subcommand("centers", "Left, right and two-sided centers");
  c_centers->add_option("FILE", file)->required();
  c_centers->add_option("-a,--algebra", name)->required();

  auto* c_radical = app.add_subcommand("radical", "Largest solvable two-sided ideal");
  c_radical->add_option("FILE", file)->required();
  c_radical->add_option("-a,--algebra", name)->required();

  auto* c_semi = app.add_subcommand("semisimple", "Whether the radical equals Leib");
  c_semi->add_option("FILE", file)->required();
  c_semi->add_option("-a,--algebra", name)->required();

  auto* c_ideals = app.add_subcommand("ideals", "Enumerate the two-sided ideal lattice (GF(p) only)");
  c_ideals->add_option("FILE", file)->required();
  c_ideals->add_option("-a,--algebra", name)->required();

  auto* c_primes = app.add_subcommand("primes", "Prime ideals over a given ideal (GF(p) only)");
  c_primes->add_option("FILE", file)->required();
  c_primes->add_option("-a,--algebra", name)->required();
  c_primes->add_option("--ideal", ideal_spec, "Generator list, e.g. e1,e2")->required();

  auto* c_prad = app.add_subcommand("prime-radical", "Intersection of minimal primes (GF(p) only)");
  c_prad->add_option("FILE", file)->required();
  c_prad->add_option("-a,--algebra", name)->required();
  c_prad->add_option("--ideal", ideal_spec, "Generator list, e.g. e1,e2")->required();

  auto* c_chain = app.add_subcommand("chain", "Validate a descending ideal chain and search witnesses");
  c_chain->add_option("FILE", file)->required();
  c_chain->add_option("-a,--algebra", name)->required();
  c_chain->add_option("--terms", term_specs, "Generator lists, one per term (closed to ideals)")
      ->required()
      ->expected(-1);

  auto* c_lazy = app.add_subcommand("lazy", "Truncate and audit a built-in rule family");
  c_lazy->add_option("FAMILY", family)->required();
  c_lazy->add_option("--depth", depth)->required();
  c_lazy->add_flag("--audit", do_audit, "Also run the family's claim audits");

  auto* c_quot = app.add_subcommand("quotient", "Quotient by the ideal closure of generators");
  c_quot->add_option("FILE", file)->required();
  c_quot->add_option("-a,--algebra", name)->required();
  c_quot->add_option("--by", by_spec, "Generator list, e.g. e1,e2")->required();

  auto* c_dsum = app.add_subcommand("dsum", "Direct sum of two algebras from the same file");
  c_dsum->add_option("FILE", file)->required();
  c_dsum->add_option("-a,--algebra", names, "Exactly two names")->required()->expected(2);

  try {
    std::vector<const char*> argv;
    argv.push_back("leibniz");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  ctx.digest_material = ctx.echo + '\0';
  const auto t0 = std::chrono::steady_clock::now();
  int exit_code = 0;

  try {
    Json payload;
    std::string command;

    if (app.got_subcommand(c_check)) {
      command = "check";
      payload = audit_json(load_algebra(ctx, file, name));
    } else if (app.got_subcommand(c_series)) {
      command = "series";
      const auto g = load_algebra(ctx, file, name);
      SeriesReport rep = kind == "derived"    ? derived_series(g)
                         : kind == "lower"    ? lower_central_series(g)
                                              : upper_central_series(g);
      payload["algebra"] = g.name();
      payload["kind"] = to_string(rep.kind);
      payload["dims"] = rep.dims();
      payload["stabilized_at"] = rep.stabilized_at;
      Json terms = Json::array();
      for (const auto& t : rep.terms) terms.push_back(subspace_json(t));
      payload["terms"] = std::move(terms);
      payload["solvable"] = is_solvable(g);
      payload["nilpotent"] = is_nilpotent(g);
      payload["hypercentral"] = is_hypercentral(g);
    } else if (app.got_subcommand(c_leib)) {
      command = "leib";
      const auto g = load_algebra(ctx, file, name);
      payload["algebra"] = g.name();
      payload["leib"] = subspace_json(g.leib());
    } else if (app.got_subcommand(c_centers)) {
      command = "centers";
      const auto g = load_algebra(ctx, file, name);
      const auto c = g.centers();
      payload["algebra"] = g.name();
      payload["left"] = subspace_json(c.left);
      payload["right"] = subspace_json(c.right);
      payload["center"] = subspace_json(c.center);
    } else if (app.got_subcommand(c_radical)) {
      command = "radical";
      const auto g = load_algebra(ctx, file, name);
      payload["algebra"] = g.name();
      payload["radical"] = subspace_json(solvable_radical(g, ctx.guard));
      payload["solvable"] = is_solvable(g);
    } else if (app.got_subcommand(c_semi)) {
      command = "semisimple";
      const auto g = load_algebra(ctx, file, name);
      payload["algebra"] = g.name();
      payload["semisimple"] = is_semisimple(g, ctx.guard);
      payload["radical"] = subspace_json(solvable_radical(g, ctx.guard));
      payload["leib"] = subspace_json(g.leib());
    } else if (app.got_subcommand(c_ideals)) {
      command = "ideals";
      const auto g = load_algebra(ctx, file, name);
      const auto lattice = enumerate_ideals(g, ctx.guard);
      payload["algebra"] = g.name();
      payload["count"] = lattice.ideals.size();
      Json items = Json::array();
      for (const auto& s : lattice.ideals) items.push_back(subspace_json(s));
      payload["ideals"] = std::move(items);
    } else if (app.got_subcommand(c_primes)) {
      command = "primes";
      const auto g = load_algebra(ctx, file, name);
      const auto lattice = enumerate_ideals(g, ctx.guard);
      const Subspace base = g.ideal_closure(parse_generator_spec(ideal_spec, g));
      payload["algebra"] = g.name();
      payload["base_ideal_spec"] = ideal_spec;
      payload["base_ideal"] = subspace_json(base);
      payload["is_prime"] = base.is_full() ? Json(nullptr) : Json(is_prime_ideal(g, lattice, base));
      payload["is_semiprime"] =
          base.is_full() ? Json(nullptr) : Json(is_semiprime_ideal(g, lattice, base));
      payload["is_maximal"] = is_maximal_ideal(g, lattice, base);
      Json primes = Json::array();
      for (const auto& p : prime_ideals_over(g, lattice, base)) primes.push_back(subspace_json(p));
      payload["primes_over"] = std::move(primes);
      Json minimal = Json::array();
      for (const auto& p : minimal_primes_over(g, lattice, base))
        minimal.push_back(subspace_json(p));
      payload["minimal_primes"] = std::move(minimal);
    } else if (app.got_subcommand(c_prad)) {
      command = "prime-radical";
      const auto g = load_algebra(ctx, file, name);
      const auto lattice = enumerate_ideals(g, ctx.guard);
      const Subspace base = g.ideal_closure(parse_generator_spec(ideal_spec, g));
      payload["algebra"] = g.name();
      payload["base_ideal_spec"] = ideal_spec;
      payload["base_ideal"] = subspace_json(base);
      payload["prime_radical"] = subspace_json(prime_radical(g, lattice, base));
      payload["minimal_prime_count"] = minimal_primes_over(g, lattice, base).size();
    } else if (app.got_subcommand(c_chain)) {
      command = "chain";
      const auto g = load_algebra(ctx, file, name);
      std::vector<Subspace> terms;
      Json closures = Json::array();
      for (const auto& spec : term_specs) {
        Subspace t = spec == "0" ? g.zero_subspace() : g.ideal_closure(parse_generator_spec(spec, g));
        Json c;
        c["generators"] = spec;
        c["closed_ideal"] = subspace_json(t);
        closures.push_back(std::move(c));
        terms.push_back(std::move(t));
      }
      ChainSpec chain(g, std::move(terms));
      chain.validate();
      payload["algebra"] = g.name();
      payload["terms"] = std::move(closures);
      payload["qa_witness"] = witness_json(qa_witness(chain, g.dim() + 1));
      const auto art = artinian_report(g, {chain});
      payload["artinian"] = art.artinian;
      payload["artinian_evidence"] = art.evidence;
    } else if (app.got_subcommand(c_lazy)) {
      command = "lazy";
      const auto fam = LazyFamily::instantiate(family);
      const Truncation trunc = fam.truncate(depth);
      payload["family"] = fam.name();
      payload["depth"] = depth;
      payload["truncation_dim"] = trunc.algebra.dim();
      payload["exact"] = trunc.exact;
      payload["escapes"] = trunc.escapes;
      payload["audit_summary"] = audit_json(trunc.algebra);
      if (family == "example2") {
        ChainSpec tail = fam.chain("tail", trunc);
        tail.validate();
        Json cj;
        Json dims = Json::array();
        for (const auto& t : tail.terms()) dims.push_back(t.dim());
        cj["rule"] = "tail";
        cj["dims"] = std::move(dims);
        cj["qa_witness"] = witness_json(qa_witness(tail, trunc.algebra.dim()));
        const auto art = artinian_report_bounded(tail);
        cj["artinian"] = art.artinian;
        cj["artinian_evidence"] = art.evidence;
        payload["chain"] = std::move(cj);
      } else if (family == "sum-simple") {
        Json chains = Json::array();
        for (const char* rule : {"tail-sum", "displayed"}) {
          Json cj;
          cj["rule"] = rule;
          try {
            ChainSpec c = fam.chain(rule, trunc);
            c.validate();
            Json dims = Json::array();
            for (const auto& t : c.terms()) dims.push_back(t.dim());
            cj["dims"] = std::move(dims);
            cj["valid"] = true;
          } catch (const NotDescending& e) {
            cj["valid"] = false;
            cj["error"] = e.what();
          }
          chains.push_back(std::move(cj));
        }
        payload["chains"] = std::move(chains);
      }
      if (do_audit) {
        Json claims = Json::array();
        bool any_failed = false;
        for (const auto& r : fam.audit_claims(depth, ctx.seed)) {
          any_failed = any_failed || r.status == ClaimStatus::FailedWithCounterexample;
          claims.push_back(claim_json(r));
        }
        payload["claims"] = std::move(claims);
        if (any_failed) exit_code = 3;
      }
    } else if (app.got_subcommand(c_quot)) {
      command = "quotient";
      const auto g = load_algebra(ctx, file, name);
      const Subspace I = g.ideal_closure(parse_generator_spec(by_spec, g));
      const auto q = g.quotient(I);
      payload["algebra"] = g.name();
      payload["by_spec"] = by_spec;
      payload["by_ideal"] = subspace_json(I);
      payload["quotient_dim"] = q.algebra.dim();
      payload["quotient_convention"] = to_string(q.algebra.convention());
      AlgebraFile qf;
      qf.blocks.push_back(block_from_algebra(q.algebra));
      payload["quotient_table"] = serialize_algebra_file(qf);
    } else if (app.got_subcommand(c_dsum)) {
      command = "dsum";
      const std::string text = read_file(file);
      ctx.digest_material += text;
      ctx.digest_material += '\0';
      const AlgebraFile parsed = parse_algebra_file(text);
      const auto a = parsed.find(names[0]).build();
      const auto b = parsed.find(names[1]).build();
      const auto s = LeibnizAlgebra::direct_sum(a, b);
      payload["summands"] = {a.name(), b.name()};
      payload["dim"] = s.dim();
      payload["convention"] = to_string(s.convention());
      AlgebraFile sf;
      sf.blocks.push_back(block_from_algebra(s));
      payload["table"] = serialize_algebra_file(sf);
    }

    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit(ctx, command, std::move(payload), out, ms);
    return exit_code;
  } catch (const EnumerationTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace leibniz
