#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cantor/analysis.hpp"
#include "cantor/certify.hpp"
#include "cantor/error.hpp"
#include "cantor/groups.hpp"
#include "cantor/io.hpp"
#include "cantor/reduction.hpp"

using namespace cantor;

namespace {

struct MapOptions {
  std::string preset;
  std::string a;
  std::string c;
  std::string num;
  std::string den;
};

struct Common {
  std::string out;
  MapOptions map;
  CertifyConfig cfg;
  int threads = 0;
};

Poly parse_coefficients(const std::string& text) {
  Poly out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
  if (out.empty()) throw Error(ErrorKind::Usage, "empty coefficient list");
  return out;
}

MapSpec resolve_map(const MapOptions& m) {
  if (!m.preset.empty()) {
    const std::string& param = m.preset == "quadratic" ? m.c : m.a;
    if (param.empty()) throw Error(ErrorKind::Usage, m.preset == "quadratic" ? "--c is required" : "--a is required");
    return make_preset(m.preset, parse_complex(param));
  }
  if (m.num.empty() || m.den.empty()) throw Error(ErrorKind::Usage, "give --preset or both --num and --den");
  MapSpec spec;
  spec.num = parse_coefficients(m.num);
  spec.den = parse_coefficients(m.den);
  spec.resolve();
  return spec;
}

void add_map_options(CLI::App* cmd, MapOptions& m) {
  cmd->add_option("--preset", m.preset, "kameyama-quartic (alias quartic) or quadratic");
  cmd->add_option("--a", m.a, "quartic parameter, e.g. 0+1.665i");
  cmd->add_option("--c", m.c, "quadratic parameter");
  cmd->add_option("--num", m.num, "numerator coefficients, ascending, comma separated");
  cmd->add_option("--den", m.den, "denominator coefficients, ascending, comma separated");
}

void add_config_options(CLI::App* cmd, CertifyConfig& cfg) {
  cmd->add_option("--closure-tol", cfg.closure_tol, "curve closure tolerance");
  cmd->add_option("--inside-margin", cfg.inside_margin, "required clearance of preimage samples");
  cmd->add_option("--tube-margin", cfg.tube_margin, "thickening of tube-disc candidates");
  cmd->add_option("--cutoff", cfg.cutoff, "postcritical truncation radius");
  cmd->add_option("--census-cap", cfg.census_cap, "pull-back depth for the basin census");
  cmd->add_option("--growth-samples", cfg.growth_samples, "samples for the growth check");
  cmd->add_option("--seed", cfg.seed, "seed for quasi-random sampling");
}

Json header(const std::string& command) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

void emit(const std::string& out, const Json& report) {
  const std::string text = report.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_atomic(out, text);
  }
}

Json fixed_json(const FixedPointReport& r) {
  Json out = Json::array();
  for (const auto& p : r.fixed_points) {
    out.push_back(Json{{"point", point_to_json(p.point)},
                       {"multiplier", complex_to_json(p.multiplier)},
                       {"class", to_string(p.kind)},
                       {"multiplicity", p.multiplicity}});
  }
  return out;
}

Json classify_json(const CondCReport& r) {
  Json j;
  j["cond_c"] = to_string(r.cond_c);
  j["attractor"] = r.attractor ? point_to_json(*r.attractor) : Json(nullptr);
  j["attracting_count"] = r.attracting_count;
  j["fixed_points"] = fixed_json(r.fixed);
  Json crit = Json::array();
  for (std::size_t i = 0; i < r.critical.critical_points.size(); ++i) {
    Json c;
    c["point"] = point_to_json(r.critical.critical_points[i].point);
    c["local_degree"] = r.critical.critical_points[i].local_degree;
    if (i < r.orbit_verdicts.size()) {
      c["converges"] = to_string(r.orbit_verdicts[i]);
      c["steps"] = r.orbit_steps[i];
    }
    crit.push_back(c);
  }
  j["critical_points"] = crit;
  return j;
}

int run_classify(const Common& co, int max_iter, double trap, const std::string& grid) {
  const MapSpec spec = resolve_map(co.map);
  Json report = header("classify");
  report["map"] = map_to_json(spec);
  report["max_iter"] = max_iter;
  report["trap"] = trap;
  if (grid.empty()) {
    const CondCReport r = cond_c_classify(spec.resolve(), max_iter, trap);
    report["result"] = classify_json(r);
    emit(co.out, report);
    return r.cond_c == Verdict::Undecided ? 2 : 0;
  }
  if (spec.preset.empty()) throw Error(ErrorKind::Usage, "--grid needs a preset");
  double x0, x1, y0, y1;
  int n;
  char sep;
  std::stringstream ss(grid);
  if (!(ss >> x0 >> sep >> x1 >> sep >> y0 >> sep >> y1 >> sep >> n) || n < 1 || n > 64) {
    throw Error(ErrorKind::Usage, "--grid expects re_min,re_max,im_min,im_max,n with 1 <= n <= 64");
  }
  Json cells = Json::array();
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double s = n == 1 ? 0.0 : static_cast<double>(k) / (n - 1);
      const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
      const Complex param(x0 + (x1 - x0) * s, y0 + (y1 - y0) * t);
      std::string verdict;
      try {
        verdict = to_string(cond_c_classify(make_preset(spec.preset, param).resolve(), max_iter, trap).cond_c);
      } catch (const Error& e) {
        verdict = std::string(to_string(e.kind()));
      }
      cells.push_back(Json{{"parameter", complex_to_json(param)}, {"cond_c", verdict}});
    }
  }
  report["grid"] = cells;
  emit(co.out, report);
  return 0;
}

int run_render(const Common& co, int width, int height, int max_iter, const std::string& view, const std::string& report_path) {
  if (co.out.empty() || co.out == "-") throw Error(ErrorKind::Usage, "render needs --out for the PPM image");
  if (width < 1 || height < 1 || width > 8192 || height > 8192) throw Error(ErrorKind::Usage, "image size out of range");
  Viewport vp;
  char sep;
  std::stringstream ss(view);
  if (!(ss >> vp.re_min >> sep >> vp.re_max >> sep >> vp.im_min >> sep >> vp.im_max) || vp.re_min >= vp.re_max || vp.im_min >= vp.im_max) {
    throw Error(ErrorKind::Usage, "--view expects re_min,re_max,im_min,im_max");
  }
  const MapSpec spec = resolve_map(co.map);
  const JuliaGrid g = julia_grid(spec.resolve(), vp, width, height, max_iter);
  write_atomic(co.out, to_ppm(g));
  Json report = header("render");
  report["map"] = map_to_json(spec);
  report["width"] = width;
  report["height"] = height;
  report["max_iter"] = max_iter;
  report["viewport"] = Json::array({vp.re_min, vp.re_max, vp.im_min, vp.im_max});
  report["capped_fraction"] = g.capped_fraction();
  report["image"] = co.out;
  if (!report_path.empty()) write_atomic(report_path, report.dump(2) + "\n");
  return 0;
}

struct Extraction {
  Radial radial;
  CutSystem cuts;
};

Extraction extract_setup(const MapSpec& spec, const RationalMap& f, const std::string& base, double cutoff) {
  if (spec.is_quartic() && base.empty()) return {standard_radial(f), quartic_cut_system(f, cutoff)};
  const SpherePoint b(parse_complex(base.empty() ? "1" : base));
  return {straight_radial(f, b), build_cut_system(finite_postcritical(f, cutoff), b)};
}

int run_monodromy(const Common& co, const std::string& base) {
  const MapSpec spec = resolve_map(co.map);
  const RationalMap f = spec.resolve();
  const Lifter lifter(f);
  const Extraction ex = extract_setup(spec, f, base, co.cfg.cutoff);
  Json report = header("monodromy");
  report["map"] = map_to_json(spec);
  report["basepoint"] = point_to_json(ex.radial.base);
  Json ends = Json::array();
  for (const auto& e : ex.radial.endpoints) ends.push_back(point_to_json(e));
  report["fibre"] = ends;
  Json gens = Json::array();
  for (int g = 0; g < ex.cuts.size(); ++g) {
    const MonodromyResult m = monodromy(lifter, ex.cuts.generator_loops[static_cast<std::size_t>(g)], ex.radial);
    gens.push_back(Json{{"generator", ex.cuts.labels[static_cast<std::size_t>(g)]},
                        {"puncture", point_to_json(ex.cuts.punctures[static_cast<std::size_t>(g)])},
                        {"permutation", m.perm.one_based()},
                        {"cycles", m.perm.to_string()}});
  }
  report["generators"] = gens;
  emit(co.out, report);
  return 0;
}

int run_recursion(const Common& co, const std::string& base) {
  const MapSpec spec = resolve_map(co.map);
  const RationalMap f = spec.resolve();
  const Lifter lifter(f);
  const Extraction ex = extract_setup(spec, f, base, co.cfg.cutoff);
  const RecursionTable table = wreath_recursion_extract(lifter, ex.radial, ex.cuts);
  Json report = header("recursion");
  report["map"] = map_to_json(spec);
  report["table"] = table_to_json(table);
  if (spec.is_quartic() && base.empty()) {
    const std::string shape = quartic_shape_mismatch(table);
    report["quartic_shape"] = shape.empty() ? "ok" : shape;
    if (shape.empty()) report["quotient"] = quotient_to_json(reduce_recursion(table));
  }
  emit(co.out, report);
  return 0;
}

int run_verify_claims(const Common& co) {
  const Claim1Report r = verify_claim1();
  const auto& dq = dihedral_quotient();
  Json report = header("verify-claims");
  Json t = Json::array();
  for (const auto& p : block_preserving_perms()) t.push_back(p.to_string());
  report["T"] = t;
  Json items;
  items["item1"] = r.item1;
  if (!r.item1) items["item1_counterexample"] = r.item1_counterexample;
  items["item2"] = Json{{"S_L_normal", r.sl_normal}, {"Q_L_normal", r.ql_normal}, {"Q_T_normal", r.qt_normal}};
  items["item3"] = Json{{"R_order", r.r_order}, {"R_klein", r.r_klein}};
  items["item4"] = Json{{"S_T_normal", r.st_normal},
                        {"zeta1_conjugate_to_zeta3", r.zeta1_conj_zeta3},
                        {"witness", r.witness >= 0 ? semidirect_name(r.witness) : ""},
                        {"zeta2_class_size", r.zeta2_class_size}};
  report["items"] = items;
  report["quotient"] = Json{{"order", r.quotient_order},
                            {"abelian", r.quotient_abelian},
                            {"exponent", r.quotient_exponent},
                            {"has_order4_element", r.has_order4},
                            {"zeta_cosets", Json::array({dq.zeta[1], dq.zeta[2], dq.zeta[3]})}};
  report["verdict"] = r.all_pass() ? "pass" : "fail";
  emit(co.out, report);
  return 0;
}

int emit_certificate(const Common& co, const Certificate& cert) {
  emit(co.out, cert.to_json());
  return 0;
}

int run_replay(const Common& co, const std::string& path) {
  const Json stored = Json::parse(read_file(path));
  const ReplayResult r = replay(stored);
  Json report = header("replay");
  report["certificate"] = path;
  report["kind"] = r.recomputed.kind;
  report["stored_verdict"] = stored.value("verdict", "");
  report["replayed_verdict"] = r.recomputed.verdict;
  report["identical"] = r.identical;
  report["winding_tables_checked"] = r.winding_tables;
  report["windings_ok"] = r.windings_ok;
  if (!r.detail.empty()) report["detail"] = r.detail;
  emit(co.out, report);
  return r.identical && r.windings_ok ? 0 : 1;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Undecided:
    case ErrorKind::ParabolicSuspected:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cantor_atlas: Cantor Julia sets, wreath recursions and certificates"};
  app.require_subcommand(1);
  Common co;
  int max_iter = 10000;
  double trap = 1e-2;
  std::string grid, view = "-2,2,-2,2", report_path, base, family = "all", disc, certificate;
  int width = 512, height = 512, render_iter = 200, n = 1;

  const auto common = [&](CLI::App* cmd, bool with_map) {
    cmd->add_option("--out", co.out, "output path (stdout when omitted)");
    cmd->add_option("--threads", co.threads, "worker threads (overrides CANTOR_ATLAS_THREADS)");
    if (with_map) add_map_options(cmd, co.map);
    add_config_options(cmd, co.cfg);
  };

  auto* classify = app.add_subcommand("classify", "fixed points, critical orbits and the Cond C verdict");
  common(classify, true);
  classify->add_option("--max-iter", max_iter, "orbit budget");
  classify->add_option("--trap", trap, "initial trap radius");
  classify->add_option("--grid", grid, "re_min,re_max,im_min,im_max,n over the preset parameter");

  auto* render = app.add_subcommand("render", "escape-time image of the Julia set (PPM P6)");
  common(render, true);
  render->add_option("--width", width);
  render->add_option("--height", height);
  render->add_option("--max-iter", render_iter);
  render->add_option("--view", view, "re_min,re_max,im_min,im_max");
  render->add_option("--report", report_path, "optional JSON report path");

  auto* mono = app.add_subcommand("monodromy", "fibre permutations of the generator loops");
  common(mono, true);
  mono->add_option("--base", base, "basepoint for the generic radial");

  auto* rec = app.add_subcommand("recursion", "extract the wreath recursion table");
  common(rec, true);
  rec->add_option("--base", base, "basepoint for the generic radial");

  auto* claims = app.add_subcommand("verify-claims", "brute-force check of the finite group claims");
  common(claims, false);

  auto* fig = app.add_subcommand("figure1", "level-1 and level-2 preimage topology of {|z| <= 3/2}");
  common(fig, true);

  auto* scantor = app.add_subcommand("certify-scantor", "search for a disc D with f^-n(D) inside D");
  common(scantor, true);
  scantor->add_option("--n", n, "iterate");
  scantor->add_option("--family", family, "round, tube, all or disc");
  scantor->add_option("--disc", disc, "center,radius for --family disc, e.g. 0+0i,3");

  auto* tc = app.add_subcommand("t-cantor", "coding-map injectivity verdict");
  common(tc, true);
  tc->add_option("--base", base, "basepoint for maps outside the quartic family");

  auto* rep = app.add_subcommand("replay", "recompute a stored certificate and compare");
  common(rep, false);
  rep->add_option("--certificate", certificate, "certificate JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    co.cfg.validate();
    if (co.threads > 0) setenv("CANTOR_ATLAS_THREADS", std::to_string(co.threads).c_str(), 1);
    if (*classify) return run_classify(co, max_iter, trap, grid);
    if (*render) return run_render(co, width, height, render_iter, view, report_path);
    if (*mono) return run_monodromy(co, base);
    if (*rec) return run_recursion(co, base);
    if (*claims) return run_verify_claims(co);
    if (*fig) return emit_certificate(co, figure1_report(resolve_map(co.map), co.cfg));
    if (*scantor) {
      RoundDisc d;
      if (!disc.empty()) {
        const auto comma = disc.find(',');
        if (comma == std::string::npos) throw Error(ErrorKind::Usage, "--disc expects center,radius");
        d.center = parse_complex(disc.substr(0, comma));
        d.radius = std::stod(disc.substr(comma + 1));
      }
      return emit_certificate(co, s_cantor_witness(resolve_map(co.map), n, family, co.cfg, d));
    }
    if (*tc) {
      return emit_certificate(co, t_cantor_test(resolve_map(co.map), co.cfg, parse_complex(base.empty() ? "1" : base)));
    }
    if (*rep) return run_replay(co, certificate);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
