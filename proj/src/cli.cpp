#include "bocalc/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "bocalc/chainduality.hpp"
#include "bocalc/classcalc.hpp"
#include "bocalc/forms.hpp"
#include "bocalc/geomverify.hpp"
#include "bocalc/grassring.hpp"
#include "bocalc/parse.hpp"
#include "bocalc/pontryagin.hpp"
#include "bocalc/suite.hpp"
#include "bocalc/symfun.hpp"
#include "bocalc/towers.hpp"

namespace bocalc::cli {

namespace {

struct Output {
  nlohmann::json json;
  std::string human;
  bool ok = true;
};

// Raised for verification failures that should still print their report.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json(const std::string& inline_text, const std::string& path, const std::string& what) {
  if (!inline_text.empty() && !path.empty()) throw UsageError("give either --spec or --input for " + what + ", not both");
  std::string text = inline_text;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  if (text.empty()) throw UsageError(what + " is required (--spec or --input)");
  return nlohmann::json::parse(text);
}

std::pair<int, int> pair_arg(const std::string& s, const std::string& name) {
  const auto v = parse::int_list(s);
  if (v.size() != 2) throw UsageError(name + " expects r,n");
  return {v[0], v[1]};
}

std::string bidegree_text(long w) {
  const auto [a, b] = grass::bidegree_of_weight(w);
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string checks_text(const nlohmann::json& checks) {
  std::string out;
  for (const auto& c : checks)
    out += std::string(c["passed"].get<bool>() ? "  pass  " : "  FAIL  ") + c["name"].get<std::string>() + "\n";
  return out;
}

// ---------------------------------------------------------------- subcommands

Output cmd_schur(const std::vector<int>& lambda, int r) {
  if (r < 1) throw ParameterError("r must be at least 1");
  const symfun::Partition p(lambda);
  const auto poly = symfun::schur_in_elementary(p, r);
  const auto names = symfun::generator_names(r);
  Output o;
  o.json = {{"lambda", symfun::to_json(p)},
            {"r", r},
            {"weight", p.weight()},
            {"bidegree", grass::bidegree_of_weight(p.weight())},
            {"generators", names},
            {"polynomial", poly_to_json(poly)},
            {"text", poly.to_string(names)}};
  o.human = "s_" + p.to_string() + " = " + poly.to_string(names) + "   weight " + std::to_string(p.weight()) +
            ", bidegree " + bidegree_text(p.weight()) + "\n";
  return o;
}

Output cmd_hgr_ring(int r, int n, const std::string& coeff) {
  const auto ring = grass::GrassRing::present(r, n, coeff_ring_from_string(coeff));
  Output o;
  o.json = ring.to_json();
  std::ostringstream h;
  h << "HGr(" << r << "," << n << ") over " << coeff << ": rank " << ring.rank() << "\n";
  const auto names = symfun::generator_names(r, "p");
  h << "ideal:\n";
  for (const auto& g : ring.ideal_generators()) h << "  " << g.to_string(names) << "\n";
  h << "Schur basis (weight, bidegree):\n";
  for (const auto& p : ring.basis()) h << "  s_" << p.to_string() << "   w=" << p.weight() << "  " << bidegree_text(p.weight()) << "\n";
  o.human = h.str();
  return o;
}

Output cmd_restriction(const std::string& from, const std::string& to, const std::string& kind) {
  const auto [r1, n1] = pair_arg(from, "--from");
  const auto [r2, n2] = pair_arg(to, "--to");
  const auto src = grass::GrassRing::present(r1, n1);
  const auto tgt = grass::GrassRing::present(r2, n2);
  const auto m = grass::restriction(src, tgt, grass::restriction_kind_from_string(kind));
  Output o;
  o.json = m.to_json();
  std::ostringstream h;
  h << "restriction HGr(" << r1 << "," << n1 << ") → HGr(" << r2 << "," << n2 << ") [" << kind << "]\n";
  std::vector<bool> kept(src.rank(), false);
  for (const auto& [i, j, v] : m.entries) kept[j] = true;
  for (std::size_t j = 0; j < src.rank(); ++j)
    h << "  s_" << src.basis()[j].to_string() << (kept[j] ? "  ↦ itself" : "  ↦ 0") << "\n";
  o.human = h.str();
  return o;
}

std::vector<IntPoly> poly_list(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw PresentationError(where + ": expected an array");
  std::vector<IntPoly> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& x = j[i];
    if (x.is_number_integer()) out.emplace_back(Int(x.get<long>()));
    else if (x.is_string()) {
      try {
        out.push_back(parse::int_polynomial(x.get<std::string>()));
      } catch (const PresentationError& e) {
        throw PresentationError(where + "/" + std::to_string(i) + ": " + e.what());
      }
    } else throw PresentationError(where + "/" + std::to_string(i) + ": expected a polynomial string");
  }
  return out;
}

pontryagin::FormalSymplecticBundle bundle_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_object()) throw PresentationError(where + ": expected an object");
  if (j.contains("split")) return pontryagin::FormalSymplecticBundle::split(poly_list(j["split"], where + "/split"));
  if (!j.contains("rank") || !j["rank"].is_number_integer()) throw PresentationError(where + "/rank: expected an integer");
  const long rank = j["rank"].get<long>();
  if (rank < 0 || rank % 2 != 0) throw PresentationError(where + "/rank: a symplectic rank must be even and nonnegative");
  const auto p = j.contains("p") ? poly_list(j["p"], where + "/p") : std::vector<IntPoly>{};
  return pontryagin::FormalSymplecticBundle::abstract(static_cast<int>(rank / 2), p);
}

Output cmd_pontryagin(const nlohmann::json& spec) {
  Output o;
  auto e = bundle_from_json(spec, "");
  if (spec.contains("sum")) {
    const auto f = bundle_from_json(spec["sum"], "/sum");
    o.json["summands"] = {e.to_json(), f.to_json()};
    e = pontryagin::cartan_sum(e, f);
  }
  o.json["bundle"] = e.to_json();
  std::ostringstream h;
  h << "rank " << e.rank() << (e.is_split() ? " (split)" : "") << "\n";
  const auto cls = e.classes();
  for (std::size_t k = 0; k < cls.size(); ++k) h << "  p" << k + 1 << " = " << cls[k].to_string() << "\n";
  o.human = h.str();
  return o;
}

Output cmd_tau(int n, int i) {
  const auto chk = pontryagin::tau_class_check(n, i);
  Output o;
  o.json = chk.to_json();
  o.ok = chk.holds;
  o.human = "p1(U_{n,2n}) + i·h vs [U_{n,2n}] + (i−n)[H] for n=" + std::to_string(n) + ", i=" + std::to_string(i) + ": " +
            (chk.holds ? "holds" : "FAILS") + "\n  computed: " + chk.computed.to_string() +
            "\n  expected: " + chk.expected.to_string() + "\n";
  return o;
}

Output cmd_classcheck(const std::string& name, int n, int i, int j) {
  Output o;
  if (name == "gw-formula" || name == "k0-formula") {
    const auto c = name == "gw-formula" ? classcalc::verify_gw_formula(n, i) : classcalc::verify_k0_formula(n, i);
    o.json = c.to_json();
    o.json["check"] = name;
    o.ok = c.ok();
    o.human = name + " n=" + std::to_string(n) + " i=" + std::to_string(i) + ": " + (o.ok ? "pass" : "FAIL") +
              "\n  lhs: " + c.lhs_normal.to_string() + "\n  rhs: " + c.rhs_normal.to_string() +
              "\n  ranks: " + c.lhs_rank.get_str() + ", " + c.rhs_rank.get_str() + "\n";
  } else if (name == "mu") {
    const auto rel = classcalc::mu_relations(n);
    const auto x = classcalc::mu_class(n, i, j);
    const auto swapped = classcalc::mu_class(n, j, i);
    const Int rank = rel.rank(x);
    const bool symmetric = classcalc::swap(x) == swapped;
    o.ok = rank == 4 * i * j && symmetric;
    o.json = {{"check", name}, {"n", n}, {"i", i}, {"j", j}, {"class", x.to_json()}, {"rank", rank.get_str()},
              {"rank_expected", std::to_string(4 * i * j)}, {"swap_symmetric", symmetric}, {"ok", o.ok}};
    o.human = "mu(" + std::to_string(i) + "," + std::to_string(j) + ") = " + x.to_string() + "\n  rank " +
              rank.get_str() + (o.ok ? "  pass" : "  FAIL") + "\n";
  } else if (name == "tensor-rule") {
    const auto v = classcalc::validate_hyperbolic_tensor_rule();
    o.json = v.to_json();
    o.ok = v.isometry_ok && v.invariants_ok;
    o.human = std::string("[H ⊠ H] = 2[H+]: ") + (o.ok ? "pass" : "FAIL") + "\n";
  } else {
    throw UsageError("unknown check '" + name + "' (gw-formula, k0-formula, mu, tensor-rule)");
  }
  return o;
}

template <class F>
Output diagonalize_over(const F& f, const nlohmann::json& gram) {
  const auto g = forms::matrix_from_json(f, gram, "/gram");
  const auto d = forms::diagonalize(f, g);
  nlohmann::json diag = nlohmann::json::array(), classes = nlohmann::json::array();
  for (const auto& x : d.diagonal) diag.push_back(f.to_string(x));
  for (const auto& x : d.classes) classes.push_back(f.to_string(x));
  Output o;
  o.json = {{"field", f.name()},
            {"diagonal", diag},
            {"classes", classes},
            {"P", forms::matrix_to_json(f, d.P)},
            {"radical_dimension", d.radical_dimension}};
  std::string h = "over " + f.name() + ": ⟨";
  for (std::size_t i = 0; i < d.classes.size(); ++i) h += (i ? ", " : "") + f.to_string(d.classes[i]);
  o.human = h + "⟩, radical dimension " + std::to_string(d.radical_dimension) + "\n";
  return o;
}

template <class F>
Output symplectic_basis_over(const F& f, const nlohmann::json& gram) {
  const auto g = forms::matrix_from_json(f, gram, "/gram");
  const auto p = forms::symplectic_basis(f, g);
  Output o;
  o.json = {{"field", f.name()}, {"P", forms::matrix_to_json(f, p)}};
  o.human = "symplectic basis over " + f.name() + " (columns):\n" + o.json["P"].dump() + "\n";
  return o;
}

template <class Fn>
Output with_field(const std::string& field, Fn&& fn) {
  if (field == "Q") return fn(forms::RationalField{});
  if (field == "R") return fn(forms::RealClosedField{});
  if (field.rfind("F_", 0) == 0) {
    long q = 0;
    try {
      q = std::stol(field.substr(2));
    } catch (const std::exception&) {
      throw UsageError("bad field '" + field + "'");
    }
    return fn(forms::FiniteFieldOps(q));
  }
  throw UsageError("unknown field '" + field + "' (Q, R, F_q)");
}

Output cmd_gw(const std::string& verb, const std::string& field, const std::string& gram_text,
              const std::string& input, const std::string& ring, const std::string& table_path) {
  if (verb == "diagonalize" || verb == "symplectic-basis") {
    const auto gram = read_json(gram_text, input, "a Gram matrix");
    if (verb == "diagonalize") return with_field(field, [&](const auto& f) { return diagonalize_over(f, gram); });
    return with_field(field, [&](const auto& f) { return symplectic_basis_over(f, gram); });
  }
  if (verb == "ko1") {
    const auto r = forms::ko1_euclidean(forms::EuclideanDescriptor::parse(ring));
    Output o;
    o.json = r.to_json();
    o.human = "KO1(" + r.ring.name() + ") = " + r.group.to_string() +
              (r.order() ? ", order " + r.order()->get_str() : ", infinite") + "\n";
    return o;
  }
  if (verb == "karoubi") {
    const auto table = table_path.empty() ? forms::karoubi_sample_table() : read_json("", table_path, "a table");
    const auto rep = forms::karoubi_check(table);
    Output o;
    o.json = rep.to_json();
    o.ok = rep.pass();
    std::string h;
    for (const auto& c : rep.checks) h += std::string(c.ok ? "  pass  " : "  FAIL  ") + c.name + "\n";
    o.human = h;
    return o;
  }
  throw UsageError("unknown gw verb '" + verb + "' (diagonalize, symplectic-basis, ko1, karoubi)");
}

Output cmd_koszul(int n) {
  if (n < 0) throw ParameterError("n must be nonnegative");
  const auto rep = chain::koszul_report(n);
  Output o;
  o.json = rep.to_json();
  o.json["koszul"] = chain::koszul(n).to_json();
  o.ok = rep.ok();
  std::ostringstream h;
  h << std::boolalpha << "K(" << n << "): ranks";
  for (int k = rep.k.x.lo(); k <= rep.k.x.hi(); ++k) h << " " << rep.k.x.rank(k);
  h << "\n  d² = 0: " << rep.d_squared_zero << "\n  Θ chain map: " << rep.theta_chain_map
    << "\n  Θ symmetric: " << rep.theta_symmetric << "\n  Θ unimodular: " << rep.theta_unimodular
    << "\n  H0 presentation: " << rep.h0_presentation_ok << "\n";
  o.human = h.str();
  return o;
}

Output cmd_tower(const nlohmann::json& spec, std::size_t window, std::optional<std::size_t> depth) {
  const auto t = towers::Tower::from_json(spec);
  const auto ml = towers::check_mittag_leffler(t, window);
  Output o;
  o.json = {{"tower", t.to_json()}, {"mittag_leffler", ml.to_json()}};
  std::size_t d = depth.value_or(window);
  if (auto known = t.known_levels()) d = std::min(d, *known - 1);
  nlohmann::json approx = nlohmann::json::array();
  std::string lim_note;
  for (std::size_t k = 0; k <= d; ++k) {
    try {
      approx.push_back(towers::lim_of_surjective(t, k).to_json());
    } catch (const ParameterError& e) {
      lim_note = e.what();
      break;
    }
  }
  o.json["limit_approximations"] = approx;
  if (!lim_note.empty()) o.json["limit_note"] = lim_note;
  o.human = "Mittag-Leffler: " + towers::to_string(ml.status) + "\n  " + ml.reason + "\n";
  if (ml.status == towers::MLStatus::Certificate) o.human += "  lim¹ = 0\n";
  if (ml.status == towers::MLStatus::Refutation) o.human += "  lim¹ ≠ 0\n";
  for (const auto& a : approx)
    o.human += "  depth " + std::to_string(a["depth"].get<std::size_t>()) + ": " + a["group"].get<std::string>() + "\n";
  if (!lim_note.empty()) o.human += "  " + lim_note + "\n";
  return o;
}

Output cmd_verify(const std::string& target) {
  geom::Report r;
  if (target == "m-path") r = geom::verify_M_path();
  else if (target == "m1-factorization") r = geom::verify_M1_factorization();
  else if (target == "quadratic-section") r = geom::quadratic_section_report(4);
  else if (target == "symplectic-lift") r = geom::verify_symplectic_lift_report();
  else throw UsageError("unknown target '" + target + "' (m-path, m1-factorization, quadratic-section, symplectic-lift)");
  Output o;
  o.json = r.to_json();
  o.ok = r.ok();
  o.human = r.title + ": " + (o.ok ? "pass" : "FAIL") + "\n" + checks_text(o.json["checks"]);
  return o;
}

Output cmd_suite() {
  const auto results = suite::run_acceptance();
  Output o;
  o.json = suite::to_json(results);
  o.ok = suite::all_passed(results);
  for (const auto& r : results)
    o.human += std::string(r.passed ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.title + ": " + r.detail + "\n";
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for quaternionic Grassmannians and hermitian K-theory"};
  app.require_subcommand(1);
  bool json = false;
  std::string out_path;
  app.add_flag("--json", json, "Emit JSON");
  app.add_option("--out", out_path, "Write output to a file");

  std::function<Output()> action;
  const auto sub = [&](const std::string& name, const std::string& desc) {
    auto* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  std::string lambda_text;
  int r = 0, n = 0, i = 0, j = 0;
  auto* schur = sub("schur", "Schur polynomial in elementary generators");
  schur->add_option("--lambda", lambda_text, "Partition, e.g. 2,1")->required();
  schur->add_option("--r", r, "Number of variables")->required();
  schur->callback([&] { action = [&] { return cmd_schur(parse::int_list(lambda_text), r); }; });

  std::string coeff = "Integers";
  auto* hgr = sub("hgr-ring", "Presentation of the cohomology of HGr(r,n)");
  hgr->add_option("--r", r)->required();
  hgr->add_option("--n", n)->required();
  hgr->add_option("--coeff", coeff, "Integers, Rationals or GWBase");
  hgr->callback([&] { action = [&] { return cmd_hgr_ring(r, n, coeff); }; });

  std::string from, to, kind = "composite";
  auto* res = sub("restriction", "Restriction map between Schur bases");
  res->add_option("--from", from, "r,n")->required();
  res->add_option("--to", to, "r,n")->required();
  res->add_option("--kind", kind, "alpha, beta or composite");
  res->callback([&] { action = [&] { return cmd_restriction(from, to, kind); }; });

  std::string spec_text, input_path;
  std::optional<int> tau_n;
  auto* pont = sub("pontryagin", "Pontryagin classes of a formal symplectic bundle");
  pont->add_option("--spec", spec_text, "Bundle JSON: {split:[roots]} or {rank, p:[...]}, optional sum");
  pont->add_option("--input", input_path, "Bundle JSON file");
  pont->add_option("--tau", tau_n, "Check the τ formula for this n instead");
  pont->add_option("--i", i);
  pont->callback([&] {
    action = [&] {
      if (tau_n) return cmd_tau(*tau_n, i);
      return cmd_pontryagin(read_json(spec_text, input_path, "a bundle"));
    };
  });

  std::string check_name;
  auto* cc = sub("classcheck", "Class identities: gw-formula, k0-formula, mu, tensor-rule");
  cc->add_option("check", check_name)->required();
  cc->add_option("--n", n);
  cc->add_option("--i", i);
  cc->add_option("--j", j);
  cc->callback([&] { action = [&] { return cmd_classcheck(check_name, n, i, j); }; });

  std::string verb, field = "Q", ring = "Z[1/2]", table_path;
  auto* gw = sub("gw", "Forms: diagonalize, symplectic-basis, ko1, karoubi");
  gw->add_option("verb", verb)->required();
  gw->add_option("--field", field, "Q, R or F_q");
  gw->add_option("--gram", spec_text, "Gram matrix JSON");
  gw->add_option("--input", input_path, "Gram matrix JSON file");
  gw->add_option("--ring", ring, "Z, Z[1/2], F_q, Q[x], F_q[x]");
  gw->add_option("--table", table_path, "Karoubi table JSON file");
  gw->callback([&] { action = [&] { return cmd_gw(verb, field, spec_text, input_path, ring, table_path); }; });

  auto* ksz = sub("koszul", "Koszul complex with its symmetric form");
  ksz->add_option("--n", n)->required();
  ksz->callback([&] { action = [&] { return cmd_koszul(n); }; });

  std::size_t window = 4;
  std::optional<std::size_t> depth;
  auto* tw = sub("tower", "Mittag-Leffler analysis of a tower of abelian groups");
  tw->add_option("--spec", spec_text, "Tower JSON");
  tw->add_option("--input", input_path, "Tower JSON file");
  tw->add_option("--window", window, "Image-chain window");
  tw->add_option("--depth", depth, "Depth of limit approximations");
  tw->callback([&] { action = [&] { return cmd_tower(read_json(spec_text, input_path, "a tower"), window, depth); }; });

  std::string target;
  auto* vf = sub("verify", "Matrix and section identities");
  vf->add_option("target", target, "m-path, m1-factorization, quadratic-section, symplectic-lift")->required();
  vf->callback([&] { action = [&] { return cmd_verify(target); }; });

  auto* st = sub("suite", "Run the acceptance battery");
  st->callback([&] { action = [&] { return cmd_suite(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Output o;
  try {
    o = action();
  } catch (const nlohmann::json::exception& e) {
    err << "error: invalid JSON: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PresentationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = json ? o.json.dump(2) + "\n" : o.human;
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << out_path << "\n";
      return 2;
    }
    f << text;
  }
  return o.ok ? 0 : 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"bocalc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bocalc::cli
