// lieext: command-line front end for the extension library.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "lieext/lieext.hpp"

using namespace lieext;
using nlohmann::json;

namespace {

struct Source {
  std::string catalog;
  std::string file;
};

struct Weight {
  std::string gamma, alpha, beta, theta;
  bool given() const { return !gamma.empty() || !alpha.empty() || !beta.empty() || !theta.empty(); }
};

void add_source(CLI::App* c, Source& s) {
  auto* a = c->add_option("--catalog", s.catalog, "catalog id, e.g. nn1:7, s1:6:beta=3/2, s4:5:a3=1,a4=0");
  auto* b = c->add_option("--algebra", s.file, "algebra file (JSON or line format)");
  a->excludes(b);
}

void add_weight(CLI::App* c, Weight& w) {
  c->add_option("--gamma", w.gamma, "weight on x (codimension one)");
  c->add_option("--alpha", w.alpha, "weight on x1 (codimension two)");
  c->add_option("--beta", w.beta, "weight on x2 (codimension two)");
  c->add_option("--theta", w.theta, "full weight vector, comma separated");
}

LieAlgebra load(const Source& s) {
  if (!s.catalog.empty()) return make_catalog(parse_catalog_id(s.catalog));
  if (!s.file.empty()) return parse_algebra_file(s.file);
  throw Error(Errc::BadParams, "give --catalog or --algebra");
}

WeightAction weight_for(const LieAlgebra& L, const Weight& w) {
  const std::size_t d = L.dim();
  WeightAction th;
  if (!w.theta.empty()) {
    std::vector<Scalar> v;
    std::stringstream ss(w.theta);
    for (std::string part; std::getline(ss, part, ',');) v.push_back(parse_scalar(detail::trim(part)));
    if (v.size() != d) throw Error(Errc::DimensionMismatch, "--theta needs " + std::to_string(d) + " entries");
    th.weights = v;
  } else if (!w.gamma.empty()) {
    th = outer_weight(d, {parse_scalar(w.gamma)});
  } else if (!w.alpha.empty() && !w.beta.empty()) {
    th = outer_weight(d, {parse_scalar(w.alpha), parse_scalar(w.beta)});
  } else {
    throw Error(Errc::BadParams, "give --gamma, --alpha and --beta, or --theta");
  }
  validate_weight(L, th);
  return th;
}

json weights_json(const WeightAction& th) { return to_json(th.weights); }

void print_algebra(const LieAlgebra& L, const std::string& fmt) {
  if (fmt == "json")
    std::cout << algebra_to_json(L).dump(2) << '\n';
  else
    std::cout << algebra_to_text(L);
}

json h2_json(const LieAlgebra& L, const QuotientSpace& q) {
  json j;
  j["dim_z2"] = q.total.dim();
  j["dim_b2"] = q.sub.dim();
  j["dim_h2"] = q.dim();
  auto reps = json::array();
  for (const auto& v : q.coset_reps) reps.push_back(cocycle_to_text(Cocycle::from_flat(L.dim(), v), L.labels()));
  j["h2_basis"] = reps;
  return j;
}

void print_json_or_text(const json& j, const std::string& fmt) {
  if (fmt == "json") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : j.items()) {
    if (v.is_array()) {
      std::cout << k << ":\n";
      for (const auto& x : v) std::cout << "  " << (x.is_string() ? x.get<std::string>() : x.dump()) << '\n';
    } else {
      std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

json params_json(const AutParams& p) {
  json j = json::object();
  for (const auto& [k, v] : p.values) j[k] = to_string(v);
  return j;
}

std::uint64_t parse_seed(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw Error(Errc::ParseError, "bad seed '" + s + "'");
  return std::stoull(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact second cohomology, extensions and orbit normal forms for filiform Lie algebras"};
  app.require_subcommand(1);
  std::string fmt = "text";

  auto* cat = app.add_subcommand("catalog", "print a catalog algebra");
  std::string cat_id;
  cat->add_option("id", cat_id, "catalog id")->required();
  cat->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));

  Source src;
  Weight wt;
  std::string cocycle;

  auto* h2c = app.add_subcommand("h2-central", "Z^2, B^2 and H^2 with trivial coefficients");
  add_source(h2c, src);
  h2c->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));

  auto* h2t = app.add_subcommand("h2-twisted", "Z^2, B^2 and H^2 for a weight action");
  add_source(h2t, src);
  add_weight(h2t, wt);
  h2t->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));

  auto* extc = app.add_subcommand("extend-central", "central extension by a cocycle");
  add_source(extc, src);
  extc->add_option("--cocycle", cocycle, "e.g. \"D(e5,e1) + D(e2,e3)\"")->required();
  extc->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));

  auto* exts = app.add_subcommand("extend-solvable", "one-dimensional extension by a twisted cocycle");
  add_source(exts, src);
  add_weight(exts, wt);
  exts->add_option("--cocycle", cocycle)->required();
  exts->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));

  auto* norm = app.add_subcommand("normalize", "orbit representative of the line through a cocycle");
  std::string norm_id;
  norm->add_option("--catalog", norm_id, "nn1:n for central, or a solvable family with a weight")->required();
  add_weight(norm, wt);
  norm->add_option("--cocycle", cocycle)->required();
  norm->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));

  auto* ver = app.add_subcommand("verify", "run the verification suite");
  SuiteConfig cfg;
  std::string seed_text, families, output;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  ver->add_option("--n-min", cfg.n_min)->capture_default_str();
  ver->add_option("--n-max", cfg.n_max)->capture_default_str();
  ver->add_option("--seed", seed_text, "default: $LIEEXT_SEED, else 1");
  ver->add_option("--families", families, "comma separated sections: catalog,nn1,q,sn2,s1,s2,s3,s4,diagram");
  ver->add_option("--samples", cfg.cocycle_samples, "random cocycles per n")->capture_default_str();
  ver->add_option("--weight-samples", cfg.weight_samples, "random weights per n")->capture_default_str();
  ver->add_option("--jobs", jobs, "worker threads");
  ver->add_option("--output", output, "write the report here instead of stdout");
  ver->add_flag("--allow-large", cfg.allow_large, "permit n above 13");
  ver->add_option("--format", fmt)->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cat) {
      print_algebra(make_catalog(parse_catalog_id(cat_id)), fmt);
      return 0;
    }
    if (*h2c) {
      LieAlgebra L = load(src);
      print_json_or_text(h2_json(L, central_h2(L)), fmt);
      return 0;
    }
    if (*h2t) {
      LieAlgebra L = load(src);
      WeightAction th = weight_for(L, wt);
      json j = h2_json(L, twisted_h2(L, th));
      j["theta"] = weights_json(th);
      print_json_or_text(j, fmt);
      return 0;
    }
    if (*extc) {
      LieAlgebra L = load(src);
      print_algebra(central_extend(L, parse_cocycle(cocycle, L.labels())), fmt);
      return 0;
    }
    if (*exts) {
      LieAlgebra L = load(src);
      print_algebra(solvable_extend(L, weight_for(L, wt), parse_cocycle(cocycle, L.labels())), fmt);
      return 0;
    }
    if (*norm) {
      CatalogId id = parse_catalog_id(norm_id);
      LieAlgebra L = make_catalog(id);
      Cocycle psi = parse_cocycle(cocycle, L.labels());
      json j;
      j["algebra"] = to_string(id);
      if (id.family == Family::NN1 && !wt.given()) {
        auto r = normalize_nn1_line(id.n, psi);
        j["representative"] = to_string(r.rep);
        j["representative_cocycle"] = cocycle_to_text(nn1_representative(id.n, r.rep), L.labels());
        j["automorphism"] = params_json(r.params);
        j["extension"] = to_string(nn1_extension_target(id.n, r.rep));
      } else {
        WeightAction th = weight_for(L, wt);
        auto out = solve_twisted_normalization(id, psi, th);
        if (auto* root = std::get_if<NeedsRootExtension>(&out)) {
          j["needs_root_extension"] = root->constraint;
        } else {
          auto& r = std::get<TwistedNormalization>(out);
          j["representative"] = to_string(r.rep);
          j["representative_cocycle"] = cocycle_to_text(r.representative, L.labels());
          j["automorphism"] = params_json(r.params);
          j["extension"] = to_string(r.target);
          if (r.target_basis) j["extension_basis"] = "x1 + 2 x2, x2, e1, ..., e_{n+1}";
        }
      }
      print_json_or_text(j, fmt);
      return 0;
    }
    if (*ver) {
      if (!seed_text.empty()) {
        cfg.seed = parse_seed(seed_text);
        cfg.seed_source = "flag";
      } else if (const char* env = std::getenv("LIEEXT_SEED")) {
        cfg.seed = parse_seed(env);
        cfg.seed_source = "env:LIEEXT_SEED";
      }
      std::stringstream ss(families);
      for (std::string f; std::getline(ss, f, ',');) {
        f = detail::trim(f);
        std::transform(f.begin(), f.end(), f.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
        if (!f.empty()) cfg.families.insert(f);
      }
      cfg.jobs = jobs;
      Report r = run_suite(cfg);
      std::string text = emit_report(r, fmt == "json" ? ReportFormat::Json : ReportFormat::Text);
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw Error(Errc::BadParams, "cannot write " + output);
        f << text;
        std::cerr << r.records.size() << " checks, " << r.failed() << " failed; report written to " << output << '\n';
      }
      return r.all_pass() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "lieext: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "lieext: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
