// geoledger: batch front-end for the prime-geodesic counting library.
//
// Subcommands: psi, zagier-l, local-poly, weights, orbital-count,
// expsum, pgt-scan, verify.  GEOLEDGER_THREADS sets the default thread
// count; an optional key=value config file is overridden by flags.

#include <CLI11.hpp>
#include <chrono>
#include <complex>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "geoledger/acceptance.hpp"
#include "geoledger/dirichlet.hpp"
#include "geoledger/parallel.hpp"
#include "geoledger/discriminant.hpp"
#include "geoledger/expsums.hpp"
#include "geoledger/geodesic.hpp"
#include "geoledger/local_factors.hpp"
#include "geoledger/orbital.hpp"
#include "geoledger/zagier.hpp"

namespace gl = geoledger;
using nlohmann::json;

namespace {

struct GlobalOpts {
  std::string ring = "q";
  int threads = gl::default_thread_count();
  std::int64_t q_max = 10000;
  std::string output;
  std::string format = "csv";
};

gl::Ring parse_ring(const std::string& r) {
  if (r == "q") return gl::Ring::RAT;
  if (r == "qi") return gl::Ring::GAUSS;
  throw CLI::ValidationError("--ring must be q or qi");
}

int parse_eps(const std::string& t) {
  if (t == "unr") return -1;
  if (t == "ram") return 0;
  if (t == "spl") return +1;
  throw CLI::ValidationError("--type must be unr, ram or spl");
}

std::complex<double> parse_s(const std::string& text) {
  std::istringstream is(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  is >> re;
  if (is >> comma && comma == ',') is >> im;
  return {re, im};
}

json to_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

// Writes to --output or stdout; appends a timing footer when threads > 1.
void emit(const GlobalOpts& g, const std::string& body, double seconds) {
  std::string out = body;
  if (g.threads > 1) {
    std::ostringstream foot;
    foot.precision(3);
    foot << "# elapsed " << seconds << " s\n";
    out += foot.str();
  }
  if (g.output.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(g.output);
    if (!f) throw std::runtime_error("cannot open output file " + g.output);
    f << out;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prime geodesic counting toolkit"};
  app.set_config("--config", "", "key=value config file (flags override)");
  GlobalOpts g;
  app.add_option("--ring", g.ring, "base ring: q or qi")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads")->capture_default_str();
  app.add_option("--q-max", g.q_max, "series truncation norm")->capture_default_str();
  app.add_option("--output", g.output, "output path (default stdout)");
  app.add_option("--format", g.format, "csv or json")->capture_default_str();

  // --- psi ---------------------------------------------------------------
  auto* psi = app.add_subcommand("psi", "counting function Psi(x)");
  psi->fallthrough();
  std::string psi_subgroup = "full", psi_level = "1";
  double psi_x = 0.0;
  bool psi_oriented = false;
  psi->add_option("--subgroup", psi_subgroup, "full or principal")->capture_default_str();
  psi->add_option("--level", psi_level, "level N (e.g. 2 or 1+i)")->capture_default_str();
  psi->add_option("--x", psi_x, "evaluation point")->required();
  psi->add_flag("--oriented", psi_oriented, "oriented counting (doubles the total)");

  // --- zagier-l ----------------------------------------------------------
  auto* zag = app.add_subcommand("zagier-l", "Zagier L-function values");
  zag->fallthrough();
  std::string zag_delta, zag_s = "2", zag_method = "both";
  zag->add_option("--delta", zag_delta, "discriminant (e.g. 5 or 32)")->required();
  zag->add_option("--s", zag_s, "evaluation point re[,im]")->capture_default_str();
  zag->add_option("--method", zag_method, "series, factored or both")->capture_default_str();

  // --- local-poly ----------------------------------------------------------
  auto* lp = app.add_subcommand("local-poly", "local Laurent polynomial factors");
  lp->fallthrough();
  std::int64_t lp_q = 2;
  int lp_l = 0, lp_n = 0;
  std::string lp_type = "unr", lp_check;
  lp->add_option("--q", lp_q, "residue cardinality")->required();
  lp->add_option("--l", lp_l, "conductor exponent")->required();
  lp->add_option("--n", lp_n, "level exponent (0 = principal)")->capture_default_str();
  lp->add_option("--type", lp_type, "unr, ram or spl")->capture_default_str();
  lp->add_option("--check", lp_check, "fe or rh");

  // --- weights -------------------------------------------------------------
  auto* wt = app.add_subcommand("weights", "Rankin-Selberg weights and Legendre functions");
  wt->fallthrough();
  std::int64_t wt_q = 2;
  int wt_r = 1;
  std::string wt_type = "unr", wt_s = "1";
  wt->add_option("--q", wt_q)->required();
  wt->add_option("--type", wt_type)->capture_default_str();
  wt->add_option("--r", wt_r)->capture_default_str();
  wt->add_option("--s", wt_s)->capture_default_str();

  // --- orbital-count ---------------------------------------------------------
  auto* oc = app.add_subcommand("orbital-count", "residue point counts");
  oc->fallthrough();
  std::int64_t oc_p = 3;
  int oc_n = 1, oc_l = 1, oc_r = 0;
  std::string oc_type = "unr";
  oc->add_option("--p", oc_p, "odd prime")->required();
  oc->add_option("--type", oc_type)->capture_default_str();
  oc->add_option("--n", oc_n)->capture_default_str();
  oc->add_option("--l", oc_l)->capture_default_str();
  oc->add_option("--r", oc_r)->capture_default_str();

  // --- expsum ------------------------------------------------------------
  auto* ex = app.add_subcommand("expsum", "exponential sums S_q(k, N)");
  ex->fallthrough();
  std::string ex_q, ex_k = "0", ex_n = "1";
  ex->add_option("--q", ex_q, "modulus")->required();
  ex->add_option("--k", ex_k, "frequency")->capture_default_str();
  ex->add_option("--N", ex_n, "level")->capture_default_str();

  // --- pgt-scan ----------------------------------------------------------
  auto* scan = app.add_subcommand("pgt-scan", "main-term ratio over an x grid");
  scan->fallthrough();
  std::string scan_grid = "100,1000,10000", scan_subgroup = "full", scan_level = "1";
  bool scan_oriented = false;
  scan->add_option("--x-grid", scan_grid, "comma-separated x values")->capture_default_str();
  scan->add_option("--subgroup", scan_subgroup)->capture_default_str();
  scan->add_option("--level", scan_level)->capture_default_str();
  scan->add_flag("--oriented", scan_oriented);

  // --- verify ------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "run the acceptance grid");
  ver->fallthrough();
  std::string ver_only;
  int ver_p = 0;
  ver->add_option("--only", ver_only, "run a single criterion by name");
  ver->add_option("--p", ver_p, "restrict the orbital oracle to one prime");

  app.require_subcommand(1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  try {
    gl::Ring ring = parse_ring(g.ring);

    if (*psi) {
      gl::PsiReport rep;
      gl::Orientation orient =
          psi_oriented ? gl::Orientation::ORIENTED : gl::Orientation::NON_ORIENTED;
      if (psi_subgroup == "full" && ring == gl::Ring::RAT) {
        rep = gl::psi_modular(psi_x, orient, g.threads);
      } else if (psi_subgroup == "full" || psi_subgroup == "principal") {
        gl::SubgroupSpec spec{ring,
                              psi_subgroup == "full" ? gl::SubgroupKind::FULL
                                                     : gl::SubgroupKind::PRINCIPAL,
                              gl::parse_elem(psi_level, ring)};
        rep = gl::psi_principal(spec, psi_x, orient, g.threads);
      } else {
        throw CLI::ValidationError("--subgroup must be full or principal");
      }
      std::ostringstream body;
      if (g.format == "json") {
        json j{{"x", rep.x},
               {"total", rep.total},
               {"main_term", rep.main_term},
               {"ratio", rep.ratio},
               {"oriented", rep.orientation == gl::Orientation::ORIENTED}};
        j["traces"] = json::array();
        for (const auto& row : rep.traces)
          j["traces"].push_back({{"t", gl::to_string(row.t)},
                                 {"delta", gl::to_string(row.delta.delta)},
                                 {"D", gl::to_string(row.delta.fundamental)},
                                 {"l", gl::to_string(row.delta.conductor)},
                                 {"L_value", row.L_value},
                                 {"term", row.term}});
        body << j.dump(2) << "\n";
      } else {
        gl::write_psi_csv(rep, body);
        body.precision(12);
        body << "# total," << rep.total << ",main," << rep.main_term << ",ratio," << rep.ratio
             << "\n";
      }
      emit(g, body.str(), elapsed());
      return 0;
    }

    if (*zag) {
      gl::RingElem delta = gl::parse_elem(zag_delta, ring);
      std::complex<double> s = parse_s(zag_s);
      gl::DiscriminantData dd = gl::fundamental_discriminant(delta);
      std::ostringstream body;
      json j{{"delta", gl::to_string(delta)},
             {"D", gl::to_string(dd.fundamental)},
             {"l", gl::to_string(dd.conductor)},
             {"s", to_json(s)}};
      if (zag_method == "series" || zag_method == "both") {
        gl::ZagierParams zp{dd, g.q_max, ring};
        j["series"] = to_json(gl::zagier_L_series(s, zp));
      }
      if (zag_method == "factored" || zag_method == "both")
        j["factored"] = to_json(gl::zagier_L_factored(s, dd));
      body << j.dump(2) << "\n";
      emit(g, body.str(), elapsed());
      return 0;
    }

    if (*lp) {
      gl::LaurentPoly poly;
      gl::LocalType t{lp_q, parse_eps(lp_type)};
      if (lp_n == 0)
        poly = gl::local_poly_principal(t, lp_l);
      else
        poly = gl::local_poly_hecke({t, lp_l, lp_n});
      std::ostringstream body;
      body << poly.serialize() << "\n";
      if (lp_check == "fe") {
        body << "fe: " << (gl::check_functional_equation(poly) ? "pass" : "FAIL") << "\n";
      } else if (lp_check == "rh") {
        bool rh = poly.is_zero() ? true : gl::roots_on_unit_circle(poly, 1e-9);
        body << "rh: " << (rh ? "pass" : "FAIL") << "\n";
      } else if (!lp_check.empty()) {
        throw CLI::ValidationError("--check must be fe or rh");
      }
      emit(g, body.str(), elapsed());
      return 0;
    }

    if (*wt) {
      gl::LocalType t{wt_q, parse_eps(wt_type)};
      std::complex<double> s = parse_s(wt_s);
      json j{{"q", wt_q},
             {"type", wt_type},
             {"r", wt_r},
             {"s", to_json(s)},
             {"rs_weight", to_json(gl::rs_weight(t, wt_r, s))},
             {"assemble_weight", to_json(gl::assemble_weight(t, wt_r, s))},
             {"legendre", to_json(gl::legendre_p(t, wt_r, s))},
             {"legendre_oracle", to_json(gl::legendre_p_oracle(t, wt_r, s))}};
      if (t.epsilon != +1) j["unit_index"] = gl::unit_index(t, wt_r);
      emit(g, j.dump(2) + "\n", elapsed());
      return 0;
    }

    if (*oc) {
      gl::HeckeLocalParams params{{oc_p, parse_eps(oc_type)}, oc_l, oc_n};
      auto models = gl::models_for(oc_p, params.local.epsilon, 1);
      json j{{"p", oc_p}, {"type", oc_type}, {"n", oc_n}, {"l", oc_l}, {"r", oc_r}};
      j["N0_closed"] = gl::count_N0_closed(params, oc_r);
      j["Ninf_closed"] = gl::count_Ninf_closed(params, oc_r);
      j["N0_bruteforce"] = gl::count_bruteforce(models[0], params, oc_r, gl::WhichCount::N0);
      j["Ninf_bruteforce"] = gl::count_bruteforce(models[0], params, oc_r, gl::WhichCount::NINF);
      j["rso"] = gl::to_string(gl::rso_value(params, oc_r));
      emit(g, j.dump(2) + "\n", elapsed());
      return 0;
    }

    if (*ex) {
      gl::ExpSumParams params{ring, gl::parse_elem(ex_q, ring), gl::parse_elem(ex_k, ring),
                              gl::parse_elem(ex_n, ring)};
      json j{{"q", gl::to_string(params.q)},
             {"k", gl::to_string(params.k)},
             {"N", gl::to_string(params.N)},
             {"S_q", to_json(gl::s_q_bruteforce(params))}};
      if (!params.k.is_zero()) {
        gl::WeilCheck chk = gl::s_q_weil_check(params);
        j["weil_bound"] = chk.bound;
        j["weil_ok"] = chk.ok;
      }
      emit(g, j.dump(2) + "\n", elapsed());
      return 0;
    }

    if (*scan) {
      std::ostringstream body;
      body << "x,total,main_term,ratio\n";
      body.precision(12);
      std::istringstream grid(scan_grid);
      std::string tok;
      gl::Orientation orient =
          scan_oriented ? gl::Orientation::ORIENTED : gl::Orientation::NON_ORIENTED;
      while (std::getline(grid, tok, ',')) {
        double x = std::stod(tok);
        gl::PsiReport rep;
        if (scan_subgroup == "full" && ring == gl::Ring::RAT) {
          rep = gl::psi_modular(x, orient, g.threads);
        } else {
          gl::SubgroupSpec spec{ring,
                                scan_subgroup == "full" ? gl::SubgroupKind::FULL
                                                        : gl::SubgroupKind::PRINCIPAL,
                                gl::parse_elem(scan_level, ring)};
          rep = gl::psi_principal(spec, x, orient, g.threads);
        }
        body << x << "," << rep.total << "," << rep.main_term << "," << rep.ratio << "\n";
      }
      emit(g, body.str(), elapsed());
      return 0;
    }

    if (*ver) {
      gl::AcceptanceOptions opts;
      opts.only = ver_only;
      opts.orbital_prime = ver_p;
      opts.threads = g.threads;
      bool ok = gl::run_acceptance(opts, std::cout);
      return ok ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
