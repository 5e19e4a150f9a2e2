#include "jung/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "jung/batch.hpp"
#include "jung/generator.hpp"
#include "jung/io.hpp"
#include "jung/parser.hpp"

namespace jung::cli {

namespace {

struct Options {
  bool json = false;
  double tol = 1e-7;
  unsigned trunc = 0;
  std::string field = "q";
  std::uint64_t seed = 1;
  unsigned depth = 3;
  unsigned tri_degree = 3;
  unsigned coeff_bound = 3;
  unsigned max_degree = 64;
  std::vector<std::string> inputs;

  Field fld() const { return field == "qi" ? Field::gaussian : Field::rational; }
};

/// Input text with the offset it had inside its source line, for error carets.
struct Source {
  std::string text;
  std::string origin;  // "argument" or "file:line"
};

// A single argument naming an existing file expands to its nonblank,
// non-'#' lines.
std::vector<Source> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<Source> out;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (in.find(';') == std::string::npos && std::filesystem::is_regular_file(in, ec)) {
      std::ifstream f(in);
      std::string line;
      for (int n = 1; std::getline(f, line); ++n) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (line.back() == '\r') line.pop_back();
        out.push_back({line, in + ":" + std::to_string(n)});
      }
    } else {
      out.push_back({in, "argument"});
    }
  }
  return out;
}

void report_parse_error(std::ostream& err, const Source& src, const ParseError& e) {
  err << "error: " << e.what() << " (" << src.origin << ")\n  " << src.text << "\n  "
      << std::string(std::min(e.pos(), src.text.size()), ' ') << "^\n";
}

std::string frac_text(Frac f) { return f.str(); }

int cmd_check(const Options& o, const std::vector<PolyMap>& maps, std::ostream& out) {
  int code = kOk;
  Json arr = Json::array();
  for (const auto& f : maps) {
    KellerCheck k = is_keller(f);
    bool ok = k.keller && !k.jacobian.is_zero();
    if (!ok) code = kRejected;
    if (o.json) {
      Json j;
      j["map"] = f.str();
      j["keller"] = ok;
      j["jacobian"] = k.jacobian.str();
      if (!ok) j["reason"] = k.jacobian.is_zero() ? "zero_jacobian" : "non_constant_jacobian";
      arr.push_back(j);
    } else if (ok) {
      out << "ok: constant jacobian " << k.jacobian.str() << "\n";
    } else {
      out << "rejected: " << (k.jacobian.is_zero() ? "zero_jacobian" : "non_constant_jacobian") << " (jacobian "
          << k.jacobian.str() << ")\n";
    }
  }
  if (o.json) out << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  return code;
}

int cmd_decompose(const Options& o, const std::vector<PolyMap>& maps, std::ostream& out) {
  int code = kOk;
  Json arr = Json::array();
  for (const auto& f : maps) {
    auto d = decompose(f);
    if (!d) {
      code = kRejected;
      if (o.json)
        arr.push_back(to_json(d.error()));
      else
        out << "rejected: " << d.error().str() << "\n";
      continue;
    }
    if (o.json) {
      arr.push_back(to_json(*d));
    } else {
      for (std::size_t i = 0; i < d->factors.size(); ++i) out << i + 1 << ". " << describe(d->factors[i]) << "\n";
    }
  }
  if (o.json) out << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  return code;
}

int cmd_invert(const Options& o, const std::vector<PolyMap>& maps, std::ostream& out) {
  int code = kOk;
  Json arr = Json::array();
  for (const auto& f : maps) {
    auto d = decompose(f);
    if (!d) {
      code = kRejected;
      if (o.json)
        arr.push_back(to_json(d.error()));
      else
        out << "rejected: " << d.error().str() << "\n";
      continue;
    }
    Decomposition inv = inverse(*d);
    PolyMap g = recompose(inv);
    if (o.json) {
      Json j;
      j["inverse"] = g.str();
      j["factors"] = to_json(inv);
      arr.push_back(j);
    } else {
      out << g.str() << "\n";
    }
  }
  if (o.json) out << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  return code;
}

int cmd_compose(const Options& o, const std::vector<PolyMap>& maps, std::ostream& out) {
  // maps[0] o maps[1] o ... o maps[n-1]
  PolyMap acc = maps.back();
  for (std::size_t i = maps.size() - 1; i-- > 0;) acc = compose(maps[i], acc);
  if (o.json)
    out << Json{{"map", acc.str()}}.dump(2) << "\n";
  else
    out << acc.str() << "\n";
  return kOk;
}

void print_report(const WitnessReport& r, std::ostream& out) {
  out << "map: " << r.input.str() << (r.swapped ? "  (components swapped)" : "") << "\n";
  out << "deg P = " << r.deg_p << ", deg Q = " << r.deg_q << ", jacobian = " << r.jacobian_const.str() << "\n";
  if (r.u) out << "u = " << r.u->str() << "\n";
  if (r.v) out << "v = " << r.v->str() << "\n";
  if (r.theta) out << "theta = " << frac_text(*r.theta) << "\n";
  if (r.phi) out << "phi = " << r.phi->str() << "  (m = " << r.phi->m_phi << ", n = " << r.phi->n_phi << ")\n";
  if (r.p_face) out << "P_phi = " << r.p_face->face_poly.str() << "  (a = " << r.p_face->a << ")\n";
  if (r.q_face) out << "Q_phi = " << r.q_face->face_poly.str() << "  (b = " << r.q_face->a << ")\n";
  out << "alpha_u = " << complex_str(r.alpha_u) << ", beta_v = " << complex_str(r.beta_v) << "\n";
  if (r.jphi) out << "J_phi = " << r.jphi->str() << "\n";
  for (const auto& v : r.verdicts)
    out << "  " << std::left << std::setw(18) << v.name << (v.pass ? "PASS" : "FAIL") << "  margin " << v.margin
        << "\n";
  if (!r.failure.empty()) out << "failure: " << r.failure << "\n";
  out << "conclusion: " << r.conclusion();
  if (r.all_pass()) {
    int lo = std::min(r.deg_p, r.deg_q), hi = std::max(r.deg_p, r.deg_q);
    out << " (" << lo << " | " << hi << ")";
  }
  out << "\n";
}

int cmd_verify(const Options& o, const std::vector<PolyMap>& maps, std::ostream& out) {
  WitnessConfig cfg;
  cfg.tol = o.tol;
  cfg.puiseux.trunc_terms = o.trunc;
  auto results = maps.size() > 1 ? verify_parallel(maps, cfg) : verify_serial(maps, cfg);
  int code = kOk;
  Json arr = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (!r) {
      code = kRejected;
      if (o.json) {
        Json j = to_json(r.error());
        j["input"] = maps[i].str();
        arr.push_back(j);
      } else {
        out << "map: " << maps[i].str() << "\nrejected: " << r.error().str() << "\n";
      }
      continue;
    }
    if (!r->all_pass()) code = kRejected;
    if (o.json)
      arr.push_back(to_json(*r));
    else
      print_report(*r, out);
  }
  if (o.json) out << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  return code;
}

int cmd_puiseux(const Options& o, const std::vector<Polynomial>& polys, std::ostream& out) {
  PuiseuxConfig cfg;
  cfg.trunc_terms = o.trunc;
  Json arr = Json::array();
  for (const auto& h : polys) {
    BranchSet b = expansions_at_infinity(h, cfg);
    if (o.json) {
      Json j;
      j["poly"] = h.str();
      j["total_ram"] = b.total_ram();
      Json br = Json::array();
      for (const auto& s : b.branches) br.push_back(to_json(s));
      j["branches"] = std::move(br);
      arr.push_back(j);
    } else {
      out << h.str() << ": " << b.branches.size() << " branch class(es), total ramification " << b.total_ram()
          << "\n";
      for (const auto& s : b.branches) out << "  [ram " << s.ram << "] y = " << s.str() << "\n";
    }
  }
  if (o.json) out << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  return kOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  GenConfig g;
  g.seed = o.seed;
  g.depth = o.depth;
  g.max_tri_degree = o.tri_degree;
  g.coeff_bound = o.coeff_bound;
  g.field = o.fld();
  g.max_degree = o.max_degree;
  Generated r = random_tame(g);
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << r.map.str() << "\n";
    for (std::size_t i = 0; i < r.truth.factors.size(); ++i)
      out << "  " << i + 1 << ". " << describe(r.truth.factors[i]) << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* env = std::getenv("JUNG_TAME_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0)) {
      err << "error: JUNG_TAME_TOL must be a positive number, got '" << env << "'\n";
      return kUsage;
    }
    o.tol = v;
  }

  CLI::App app{"Plane polynomial automorphisms: decomposition, inversion and division-lemma witnesses",
               "jung-tame"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--tol", o.tol, "Relative verification tolerance (default $JUNG_TAME_TOL or 1e-7)")
      ->check(CLI::PositiveNumber);
  app.add_option("--trunc", o.trunc, "Puiseux truncation: significant terms per branch (0 = 2 deg + 4)");
  app.add_option("--field", o.field, "Coefficient field: q (rationals) or qi (Gaussian rationals)")
      ->check(CLI::IsMember({"q", "qi"}));

  const char* map_help = "Map \"P; Q\" or a file with one map per line";
  auto* check = app.add_subcommand("check", "Test the Jacobian for a nonzero constant");
  check->add_option("map", o.inputs, map_help)->required();
  auto* decomp = app.add_subcommand("decompose", "Factor into affine and triangular maps");
  decomp->add_option("map", o.inputs, map_help)->required();
  auto* invert_cmd = app.add_subcommand("invert", "Compute the inverse map");
  invert_cmd->add_option("map", o.inputs, map_help)->required();
  auto* compose_cmd = app.add_subcommand("compose", "Compose maps: first o second o ...");
  compose_cmd->add_option("maps", o.inputs, "Two or more maps \"P; Q\"")->required()->expected(2, -1);
  auto* verify = app.add_subcommand("verify-division", "Build and check the division-lemma witness");
  verify->add_option("map", o.inputs, map_help)->required();
  auto* puiseux = app.add_subcommand("puiseux", "Puiseux expansions at infinity of h(x, y) = 0");
  puiseux->add_option("poly", o.inputs, "Polynomial monic in y, or a file with one per line")->required();
  auto* gen = app.add_subcommand("generate", "Emit a seeded random tame automorphism");
  gen->add_option("--seed", o.seed, "RNG seed");
  gen->add_option("--depth", o.depth, "Number of factors")->check(CLI::PositiveNumber);
  gen->add_option("--tri-degree", o.tri_degree, "Maximum triangular degree")->check(CLI::Range(2u, 64u));
  gen->add_option("--coeff-bound", o.coeff_bound, "Coefficient numerator/denominator bound")
      ->check(CLI::PositiveNumber);
  gen->add_option("--max-degree", o.max_degree, "Reject configurations above this worst-case degree");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(o, out);

    std::vector<Source> sources = expand_inputs(o.inputs);
    if (sources.empty()) {
      err << "error: no input\n";
      return kUsage;
    }
    if (puiseux->parsed()) {
      std::vector<Polynomial> polys;
      for (const auto& s : sources) {
        try {
          polys.push_back(parse_poly(s.text, o.fld()));
        } catch (const ParseError& e) {
          report_parse_error(err, s, e);
          return kUsage;
        }
      }
      return cmd_puiseux(o, polys, out);
    }

    std::vector<PolyMap> maps;
    for (const auto& s : sources) {
      try {
        maps.push_back(parse_map(s.text, o.fld()));
      } catch (const ParseError& e) {
        report_parse_error(err, s, e);
        return kUsage;
      }
    }
    if (check->parsed()) return cmd_check(o, maps, out);
    if (decomp->parsed()) return cmd_decompose(o, maps, out);
    if (invert_cmd->parsed()) return cmd_invert(o, maps, out);
    if (compose_cmd->parsed()) {
      if (maps.size() < 2) {
        err << "error: compose needs at least two maps\n";
        return kUsage;
      }
      return cmd_compose(o, maps, out);
    }
    if (verify->parsed()) return cmd_verify(o, maps, out);
  } catch (const PuiseuxError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRejected;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace jung::cli
