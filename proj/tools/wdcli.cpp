// Command-line front end: parse JSON documents, dispatch the library
// operations, emit machine-readable reports.
//
// Exit codes: 0 success, 1 validation failure, 2 malformed input.

#include <CLI11.hpp>
#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

#include "wdtangent/json_io.hpp"

using namespace wdt;

namespace {

int constexpr EXIT_INVALID = 1;
int constexpr EXIT_MALFORMED = 2;

void emit(const std::string& output, const std::string& text) {
  if (output.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(output);
    if (!out) throw std::invalid_argument("cannot open output file: " + output);
    out << text << "\n";
  }
}

void emit_json(const std::string& output, const json& j) { emit(output, j.dump(2)); }

// "GL2", "SL3", "calG2", "GL1", or products joined with "x": "GL2xGL1"
GroupModel parse_group(const std::string& name) {
  auto parse_one = [](const std::string& s) -> GroupModel {
    if (s.rfind("calG", 0) == 0) return GroupModel::calG(std::stol(s.substr(4)));
    if (s.rfind("GL", 0) == 0) return GroupModel::GL(std::stol(s.substr(2)));
    if (s.rfind("SL", 0) == 0) return GroupModel::SL(std::stol(s.substr(2)));
    throw std::invalid_argument("unknown group \"" + s + "\"");
  };
  std::vector<GroupModel> factors;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, 'x')) factors.push_back(parse_one(part));
  if (factors.empty()) throw std::invalid_argument("empty group name");
  if (factors.size() == 1) return factors[0];
  return GroupModel::product(factors);
}

std::vector<long> parse_partition(const std::string& s) {
  std::vector<long> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) parts.push_back(std::stol(tok));
  return parts;
}

// partition-type nilpotent in the group's standard realization; for calG the
// partition lives in the gl_n part; "0" means N = 0
Vec parse_nilpotent(const GroupModel& G, const std::string& s) {
  if (s == "0") return Vec(G.group_dim(), Scalar(0));
  std::vector<long> part = parse_partition(s);
  long n = (G.kind() == GroupKind::CalG) ? G.n_param() : G.std_dim();
  long total = 0;
  for (long k : part) total += k;
  if (total != n)
    throw std::invalid_argument("--nilpotent partition must sum to " + std::to_string(n));
  Mat N(n, n);
  long off = 0;
  for (long k : part) {
    for (long i = 0; i + 1 < k; ++i) N.at(off + i, off + i + 1) = Scalar(1);
    off += k;
  }
  if (G.kind() == GroupKind::CalG) {
    Mat full(n + 1, n + 1);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) full.at(i, j) = N.at(i, j);
    return G.lie_coords(full);
  }
  return G.lie_coords(N);
}

// "det2", "tensor2x2", "incl2+1" (GL(2) into GL(3)), "sl2:GL3:2,1"
Morphism parse_morphism(const std::string& s) {
  if (s.rfind("det", 0) == 0) return morphism_det(std::stol(s.substr(3)));
  if (s.rfind("tensor", 0) == 0) {
    auto body = s.substr(6);
    auto xp = body.find('x');
    if (xp == std::string::npos) throw std::invalid_argument("tensor needs NxM");
    return morphism_tensor(std::stol(body.substr(0, xp)), std::stol(body.substr(xp + 1)));
  }
  if (s.rfind("incl", 0) == 0) {
    auto body = s.substr(4);
    auto pp = body.find('+');
    if (pp == std::string::npos) throw std::invalid_argument("incl needs N+K");
    return morphism_incl_block(std::stol(body.substr(0, pp)), std::stol(body.substr(pp + 1)));
  }
  if (s.rfind("sl2:", 0) == 0) {
    auto body = s.substr(4);
    auto cp = body.find(':');
    if (cp == std::string::npos) throw std::invalid_argument("sl2 needs GROUP:PARTITION");
    GroupModel G = parse_group(body.substr(0, cp));
    Vec N = parse_nilpotent(G, body.substr(cp + 1));
    SL2Triple t = jacobson_morozov(G, N);
    return morphism_sl2_from_triple(G, t.N, t.H, t.Y);
  }
  throw std::invalid_argument("unknown morphism \"" + s + "\"");
}

struct SweepRow {
  std::string orbit;
  CohomologyReport rep;
  bool very_smooth = false;
};

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "orbit,h0,h1,h2,smooth,very_smooth\n";
  for (const auto& r : rows)
    out << r.orbit << ',' << r.rep.h0 << ',' << r.rep.h1 << ',' << r.rep.h2 << ','
        << (r.rep.smooth ? "true" : "false") << ','
        << (r.very_smooth ? "true" : "false") << '\n';
  std::string text = out.str();
  text.pop_back();  // emit() appends the final newline
  return text;
}

int run(int argc, char** argv) {
  CLI::App app{"exact deformation diagnostics for G-valued Weil-Deligne representations"};
  app.require_subcommand(1);

  std::string input, output, group_name, nilpotent = "0", morphism_name, partitions = "all";
  std::string fontaine_mode = "roundtrip", dims_mode = "local", hodge = "none";
  long p = 2, fK = 1, fL = 0, count = 10, jobs = 1, degree = 1;
  std::uint64_t seed = 0;
  bool fixed_det = false, l_eq_p = false;

  auto add_io = [&](CLI::App* cmd, bool need_input) {
    auto* opt = cmd->add_option("--input", input, "input JSON document");
    if (need_input) opt->required();
    cmd->add_option("--output", output, "output path (default: stdout)");
  };

  auto* c_validate = app.add_subcommand("validate", "check a WD point document");
  add_io(c_validate, true);

  auto* c_cohom = app.add_subcommand("cohomology", "tangent-obstruction dimensions");
  add_io(c_cohom, true);

  auto* c_smooth = app.add_subcommand("smooth-point", "construct a certified smooth point");
  add_io(c_smooth, false);
  c_smooth->add_option("--group", group_name, "group name, e.g. GL2, calG2")->required();
  c_smooth->add_option("--nilpotent", nilpotent, "Jordan partition, e.g. 2,1 (or 0)");
  c_smooth->add_option("--p", p, "residue characteristic");
  c_smooth->add_option("--fK", fK, "residue degree of K");

  auto* c_vs = app.add_subcommand("very-smooth", "power + eigenvalue very-smooth test");
  add_io(c_vs, true);

  auto* c_push = app.add_subcommand("pushforward", "apply a group morphism to a point");
  add_io(c_push, true);
  c_push->add_option("--morphism", morphism_name, "det2 | tensor2x2 | incl2+1 | sl2:GL3:2,1")
      ->required();

  auto* c_font = app.add_subcommand("fontaine", "semilinear module bridge");
  add_io(c_font, true);
  c_font->add_option("mode", fontaine_mode, "to-wd | to-phimod | roundtrip")
      ->check(CLI::IsMember({"to-wd", "to-phimod", "roundtrip"}));
  c_font->add_option("--fL", fL, "number of embeddings (default inertia.d * fK)");

  auto* c_dims = app.add_subcommand("dims", "dimension formulas");
  add_io(c_dims, false);
  c_dims->add_option("mode", dims_mode, "local | global")
      ->check(CLI::IsMember({"local", "global"}));
  c_dims->add_option("--group", group_name, "group name (local mode)");
  c_dims->add_option("--hodge", hodge, "none | regular (local mode)");
  c_dims->add_option("--degree", degree, "[K:Q_p] (local mode)");
  c_dims->add_flag("--fixed-det", fixed_det, "fixed determinant variant");
  c_dims->add_flag("--l-eq-p", l_eq_p, "the l = p case (needs a Hodge type)");

  auto* c_sweep = app.add_subcommand("sweep", "batch verification table (CSV)");
  add_io(c_sweep, false);
  c_sweep->add_option("--group", group_name, "group name")->required();
  c_sweep->add_option("--partitions", partitions, "all | comma partition");
  c_sweep->add_option("--count", count, "sampled points per orbit");
  c_sweep->add_option("--seed", seed, "RNG seed");
  c_sweep->add_option("--jobs", jobs, "worker threads");
  c_sweep->add_option("--p", p, "residue characteristic");
  c_sweep->add_option("--fK", fK, "residue degree of K");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : EXIT_MALFORMED;
  }

  if (c_validate->parsed()) {
    WDPoint x = wdpoint_from_json(load_json_file(input));
    auto violations = validate(x);
    json rep{{"valid", violations.empty()}, {"violations", violations}};
    if (violations.empty()) rep["smooth"] = is_smooth(x);
    emit_json(output, rep);
    return violations.empty() ? 0 : EXIT_INVALID;
  }

  if (c_cohom->parsed()) {
    WDPoint x = wdpoint_from_json(load_json_file(input));
    emit_json(output, report_to_json(cohomology_dims(x)));
    return 0;
  }

  if (c_smooth->parsed()) {
    GroupModel G = parse_group(group_name);
    InertialData inertia = input.empty()
                               ? InertialData::trivial(G)
                               : wdpoint_from_json(load_json_file(input)).inertia;
    SmoothPointCertificate cert =
        smooth_point(G, inertia, parse_nilpotent(G, nilpotent), p, fK);
    emit_json(output, certificate_to_json(cert));
    return 0;
  }

  if (c_vs->parsed()) {
    WDPoint x = wdpoint_from_json(load_json_file(input));
    emit_json(output, json{{"smooth", is_smooth(x)}, {"very_smooth", is_very_smooth(x)}});
    return 0;
  }

  if (c_push->parsed()) {
    Morphism f = parse_morphism(morphism_name);
    WDPoint x = wdpoint_from_json(load_json_file(input));
    emit_json(output, wdpoint_to_json(pushforward(f, x)));
    return 0;
  }

  if (c_font->parsed()) {
    json doc = load_json_file(input);
    if (fontaine_mode == "to-wd") {
      emit_json(output, wdpoint_to_json(fontaine_to_wd(phimodule_from_json(doc))));
      return 0;
    }
    WDPoint x = wdpoint_from_json(doc);
    long use_fL = fL > 0 ? fL : x.inertia.d * x.fK;
    PhiModule M = wd_to_phi_module(x, use_fL);
    if (fontaine_mode == "to-phimod") {
      emit_json(output, phimodule_to_json(M));
      return 0;
    }
    WDPoint y = fontaine_to_wd(M);
    bool ok = y.Phi == x.Phi && y.N == x.N;
    for (long i = 0; ok && i < x.inertia.order(); ++i)
      ok = y.inertia.tau[i] == x.inertia.tau[i];
    emit_json(output, json{{"roundtrip", ok}, {"fL", use_fL}});
    return ok ? 0 : EXIT_INVALID;
  }

  if (c_dims->parsed()) {
    if (dims_mode == "global") {
      if (input.empty()) throw std::invalid_argument("dims global needs --input");
      GlobalLedgerInput in = ledger_input_from_json(load_json_file(input));
      emit_json(output, ledger_to_json(global_ledger(in)));
      return 0;
    }
    if (group_name.empty()) throw std::invalid_argument("dims local needs --group");
    GroupModel G = parse_group(group_name);
    std::optional<HodgeType> v;
    if (hodge == "regular") {
      // rho-like weights (n-1, n-2, ..., 0) in the standard realization
      Mat h(G.std_dim(), G.std_dim());
      for (long i = 0; i < G.std_dim(); ++i) h.at(i, i) = Scalar(G.std_dim() - 1 - i);
      Cocharacter lam;
      lam.H = G.lie_coords(h);
      v = HodgeType{std::vector<Cocharacter>(degree, lam)};
      l_eq_p = true;
    }
    json rep{{"local_dim", local_dim(G, v, fixed_det, l_eq_p)}};
    if (v) {
      rep["hodge_dim"] = hodge_dim(G, *v);
      rep["regular"] = is_regular(G, *v);
    }
    emit_json(output, rep);
    return 0;
  }

  if (c_sweep->parsed()) {
    GroupModel G = parse_group(group_name);
    long n = (G.kind() == GroupKind::CalG) ? G.n_param() : G.std_dim();
    std::vector<std::vector<long>> parts;
    if (partitions == "all") {
      parts = partitions_of(n);
    } else {
      parts.push_back(parse_partition(partitions));
    }

    struct Task {
      std::string orbit;
      WDPoint point;
    };
    std::vector<Task> tasks;
    InertialData inertia = InertialData::trivial(G);
    for (const auto& part : parts) {
      std::string label;
      for (size_t i = 0; i < part.size(); ++i)
        label += (i ? "+" : "") + std::to_string(part[i]);
      Vec N = parse_nilpotent(G, [&] {
        std::string s;
        for (size_t i = 0; i < part.size(); ++i) s += (i ? "," : "") + std::to_string(part[i]);
        return s;
      }());
      SmoothPointCertificate cert = smooth_point(G, inertia, N, p, fK);
      tasks.push_back({label + ":factory", cert.point});
      long idx = 0;
      for (const auto& x : sample_fiber(G, inertia, N, p, fK, count, seed))
        tasks.push_back({label + ":sample" + std::to_string(idx++), x});
    }

    std::vector<SweepRow> rows(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
        rows[i] = SweepRow{tasks[i].orbit, cohomology_dims(tasks[i].point),
                           is_very_smooth(tasks[i].point)};
    };
    long nthreads = std::max<long>(1, jobs);
    std::vector<std::thread> pool;
    for (long t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    emit(output, sweep_csv(rows));
    return 0;
  }

  return EXIT_MALFORMED;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_MALFORMED;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_INVALID;
  }
}
