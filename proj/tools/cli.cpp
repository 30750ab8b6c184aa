#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "exotica/exotica.hpp"

namespace exotica::cli {

namespace {

struct Session {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
  bool json = false;
  std::string vars;

  std::optional<std::vector<std::string>> context() const {
    if (vars.empty()) return std::nullopt;
    std::vector<std::string> names;
    std::stringstream ss(vars);
    for (std::string name; std::getline(ss, name, ',');)
      if (!name.empty()) names.push_back(name);
    return names;
  }

  // "-" takes the next non-empty line of standard input.
  std::string resolve(const std::string& arg) {
    if (arg != "-") return arg;
    for (std::string line; std::getline(in, line);)
      if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    throw Error(ErrorCode::kInvalidArgument, "expected another line on standard input");
  }

  Polynomial poly(const std::string& arg) { return parse_polynomial(resolve(arg), context()); }

  // Parses several univariate inputs that must share one variable ("t" if
  // all are constant).
  std::vector<UniPoly> unipolys(const std::vector<std::string>& args) {
    std::vector<Polynomial> ps;
    std::string var;
    for (const auto& a : args) {
      ps.push_back(poly(a));
      for (const auto& v : ps.back().variables()) {
        if (!ps.back().depends_on(v)) continue;
        if (!var.empty() && v != var)
          throw Error(ErrorCode::kNotUnivariate, "inputs mix the variables '" + var + "' and '" + v + "'");
        var = v;
      }
    }
    if (var.empty()) var = "t";
    std::vector<UniPoly> out;
    for (const auto& p : ps) out.push_back(UniPoly::from_polynomial(p, var));
    return out;
  }
};

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void print_text(std::ostream& os, const Json& j, const std::string& indent = "") {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      bool nested = value.is_object() || (value.is_array() && !value.empty() && value.front().is_structured());
      if (nested) {
        os << indent << key << ":\n";
        print_text(os, value, indent + "  ");
      } else if (value.is_array()) {
        os << indent << key << ": [";
        for (std::size_t i = 0; i < value.size(); ++i) os << (i ? ", " : "") << scalar_text(value[i]);
        os << "]\n";
      } else {
        os << indent << key << ": " << scalar_text(value) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << indent << "- [" << i << "]\n";
      print_text(os, j[i], indent + "  ");
    }
  } else {
    os << indent << scalar_text(j) << '\n';
  }
}

void emit(Session& s, const Json& j) {
  if (s.json) s.out << j.dump() << '\n';
  else print_text(s.out, j);
}

int verdict(bool ok) { return ok ? kOk : kVerificationFailed; }

Json weights_json(const WeightedSurfaceData& w) {
  return Json{{"q0", w.q0}, {"q1", w.q1}, {"q2", w.q2}, {"d", w.d}};
}

// CLI11 reads "-t^3" as a cluster of short flags. A leading blank keeps
// such polynomial arguments positional; the parser ignores it.
std::vector<std::string> shield_negative_arguments(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a.size() < 2 || a[0] != '-' || a[1] == '-' || a == "-h") continue;
    a.insert(a.begin(), ' ');
  }
  return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err, std::istream& in) {
  Session s{out, err, in, false, {}};
  CLI::App app{"Exact verification of polynomial identities, abc bounds and surface classifications.",
               "exotica"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", s.json, "Emit JSON instead of text");
  app.add_option("--vars", s.vars, "Comma-separated variable order for parsing, e.g. x,y,z");

  std::function<int()> action;

  // mason
  std::string a_text, b_text, c_text;
  auto* mason = app.add_subcommand("mason", "Check max deg <= d0(abc) - 1 for a + b + c = 0");
  mason->add_option("A", a_text)->required();
  mason->add_option("B", b_text)->required();
  mason->add_option("C", c_text)->required();
  mason->callback([&] {
    action = [&] {
      auto p = s.unipolys({a_text, b_text, c_text});
      AbcReport r = mason_verify(p[0], p[1], p[2]);
      emit(s, to_json(r));
      return verdict(r.holds);
    };
  });

  // davenport
  std::string x_text, y_text, z_text;
  long k = 0, l = 0, m = 0, height = 0, n = 1;
  unsigned threads = 0;
  auto* dav = app.add_subcommand("davenport", "Check deg(x^k - y^l) > m(kl - k - l)");
  dav->add_option("X", x_text)->required();
  dav->add_option("Y", y_text)->required();
  dav->add_option("--k", k)->required();
  dav->add_option("--l", l)->required();
  dav->callback([&] {
    action = [&] {
      auto p = s.unipolys({x_text, y_text});
      DavenportReport r = davenport_verify(p[0], p[1], k, l);
      emit(s, to_json(r));
      return verdict(r.holds);
    };
  });

  auto* dsearch = app.add_subcommand("davenport-search", "Minimise deg(x^k - y^l) over a coefficient box");
  dsearch->add_option("--k", k)->required();
  dsearch->add_option("--l", l)->required();
  dsearch->add_option("--m", m)->required();
  dsearch->add_option("--height", height)->required();
  dsearch->add_option("--threads", threads, "Worker threads (0 = all cores)");
  dsearch->callback([&] {
    action = [&] {
      auto w = davenport_search(k, l, m, height, threads);
      if (!w) {
        emit(s, Json{{"found", false}});
        return int{kVerificationFailed};
      }
      Json j{{"found", true}};
      j.update(to_json(*w));
      emit(s, j);
      return verdict(w->report.holds);
    };
  });

  // genus / classify-weights
  long q0 = 0, q1 = 0, q2 = 0, d = 0;
  auto* genus = app.add_subcommand("genus", "Genus of the orbit curve of a weighted surface");
  auto* cweights = app.add_subcommand("classify-weights", "Quasirationality from weights and degree");
  for (auto* sub : {genus, cweights}) {
    sub->add_option("Q0", q0)->required();
    sub->add_option("Q1", q1)->required();
    sub->add_option("Q2", q2)->required();
    sub->add_option("D", d)->required();
  }
  genus->callback([&] {
    action = [&] {
      emit(s, Json{{"genus", rational_to_string(genus_quotient(WeightedSurfaceData(q0, q1, q2, d)))}});
      return int{kOk};
    };
  });
  cweights->callback([&] {
    action = [&] {
      WeightedSurfaceData w(q0, q1, q2, d);
      Json j = to_json(quasirational_by_weights(w));
      j["genus"] = rational_to_string(genus_quotient(w));
      emit(s, j);
      return int{kOk};
    };
  });

  // Brieskorn triples
  auto* cbries = app.add_subcommand("classify-brieskorn", "Classify x^k + y^l + z^m = 0");
  auto* halphen = app.add_subcommand("halphen", "A1-poor or A1-rich by 1/k + 1/l + 1/m");
  for (auto* sub : {cbries, halphen}) {
    sub->add_option("K", k)->required();
    sub->add_option("L", l)->required();
    sub->add_option("M", m)->required();
  }
  cbries->callback([&] {
    action = [&] {
      BrieskornTriple t(k, l, m);
      WeightedSurfaceData w = brieskorn_weights(t);
      Json j{{"triple", {k, l, m}}};
      j.update(to_json(quasirational_brieskorn(t)));
      j["weights"] = weights_json(w);
      j["genus"] = rational_to_string(genus_quotient(w));
      j["platonic"] = platonic_type(t).to_string();
      j["lnd_exists"] = lnd_exists(t);
      j["halphen"] = to_string(halphen_classify(t).verdict);
      emit(s, j);
      return int{kOk};
    };
  });
  halphen->callback([&] {
    action = [&] {
      emit(s, to_json(halphen_classify(BrieskornTriple(k, l, m))));
      return int{kOk};
    };
  });

  auto* schmidt = app.add_subcommand("schmidt", "Predicates for z^m = f_d(x, y)");
  schmidt->add_option("M", m)->required();
  schmidt->add_option("D", d)->required();
  schmidt->callback([&] {
    action = [&] {
      Json j{{"m", m}, {"d", d}};
      j.update(to_json(schmidt_predicates(m, d)));
      emit(s, j);
      return int{kOk};
    };
  });

  // curves
  auto* cverify = app.add_subcommand("curve-verify", "Check a polynomial curve on x^k + y^l + z^m = 0");
  cverify->add_option("--x", x_text)->required();
  cverify->add_option("--y", y_text)->required();
  cverify->add_option("--z", z_text)->required();
  cverify->add_option("--k", k)->required();
  cverify->add_option("--l", l)->required();
  cverify->add_option("--m", m)->required();
  cverify->callback([&] {
    action = [&] {
      auto p = s.unipolys({x_text, y_text, z_text});
      CurveReport r = curve_verify({p[0], p[1], p[2]}, BrieskornTriple(k, l, m));
      emit(s, to_json(r));
      return verdict(r.on_surface);
    };
  });

  long max_deg = 1;
  height = 1;
  auto* csearch = app.add_subcommand("curve-search", "Enumerate curves with bounded Gaussian coefficients");
  csearch->add_option("K", k)->required();
  csearch->add_option("L", l)->required();
  csearch->add_option("M", m)->required();
  csearch->add_option("--max-deg", max_deg, "Largest component degree")->capture_default_str();
  csearch->add_option("--height", height, "Bound on real and imaginary parts")->capture_default_str();
  csearch->add_option("--threads", threads, "Worker threads (0 = all cores)");
  csearch->callback([&] {
    action = [&] {
      auto found = curve_search(BrieskornTriple(k, l, m), {max_deg, height, threads});
      Json curves = Json::array();
      long avoiding = 0;
      for (const auto& f : found) {
        curves.push_back(to_json(f));
        avoiding += f.hits_origin ? 0 : 1;
      }
      emit(s, Json{{"triple", {k, l, m}},
                   {"max_deg", max_deg},
                   {"height", height},
                   {"count", found.size()},
                   {"origin_avoiding", avoiding},
                   {"curves", curves}});
      return int{kOk};
    };
  });

  auto* dihedral = app.add_subcommand("dihedral-curve", "Origin-avoiding curve on x^2 + y^2 + z^m = 0");
  dihedral->add_option("M", m)->required();
  dihedral->callback([&] {
    action = [&] {
      ParametrizedCurve c = dihedral_curve(m);
      CurveReport r = curve_verify(c, BrieskornTriple(2, 2, m));
      emit(s, Json{{"curve", to_json(c)}, {"report", to_json(r)}});
      return verdict(r.on_surface && !r.hits_origin);
    };
  });

  // exotic hypersurface
  auto* vexotic = app.add_subcommand("verify-exotic", "Identity suite for u^m v + q_{k,l} = 0");
  vexotic->add_option("K", k)->required();
  vexotic->add_option("L", l)->required();
  vexotic->add_option("M", m)->required();
  vexotic->add_option("--n", n, "Weight parameter")->capture_default_str();
  vexotic->callback([&] {
    action = [&] {
      auto reports = verify_exotic(ExoticParams(k, l, m, n));
      bool all = true;
      Json arr = Json::array();
      for (const auto& r : reports) {
        arr.push_back(to_json(r));
        all = all && r.pass;
      }
      if (s.json) {
        s.out << arr.dump() << '\n';
      } else {
        for (const auto& r : reports) {
          s.out << (r.pass ? "PASS  " : "FAIL  ") << r.check << '\n';
          for (const auto& w : r.witness) s.out << "      residual: " << w << '\n';
        }
      }
      return verdict(all);
    };
  });

  std::string expr, weights_text, mode, derivation_text, invariant_text, time_var = "t";
  auto* ppart = app.add_subcommand("principal-part", "Top weighted-degree part of a polynomial");
  ppart->add_option("EXPR", expr)->required();
  ppart->add_option("--weights", weights_text, R"(JSON such as {"x": {"a": "1", "b": "0"}})")->required();
  ppart->callback([&] {
    action = [&] {
      Polynomial f = s.poly(expr);
      WeightAssignment w = weights_from_json(nlohmann::json::parse(s.resolve(weights_text)));
      Polynomial top = principal_part(f, w);
      emit(s, Json{{"principal_part", top.to_string()},
                   {"degree", to_json(*weighted_degree(f, w))},
                   {"homogeneous", is_homogeneous(f, w)}});
      return int{kOk};
    };
  });

  auto* nform = app.add_subcommand("normal-form", "Reduce modulo u^m v (ahat) or z^m (b)");
  nform->add_option("EXPR", expr)->required();
  nform->add_option("--mode", mode)->required()->check(CLI::IsMember({"ahat", "b"}));
  nform->add_option("--k", k)->required();
  nform->add_option("--l", l)->required();
  nform->add_option("--m", m)->required();
  nform->callback([&] {
    action = [&] {
      Polynomial f = s.poly(expr);
      Polynomial nf = mode == "ahat" ? normal_form_Ahat(f, ExoticParams(k, l, m))
                                     : normal_form_B(f, BrieskornTriple(k, l, m));
      emit(s, Json{{"normal_form", nf.to_string()}});
      return int{kOk};
    };
  });

  int bound = 32;
  auto* flow = app.add_subcommand("flow", "Exponential of a locally nilpotent derivation");
  flow->add_option("--derivation", derivation_text, R"(JSON such as {"x": "0", "y": "x"})")->required();
  flow->add_option("--check-invariant", invariant_text, "Polynomial that the flow should preserve");
  flow->add_option("--bound", bound, "Nilpotency search bound")->capture_default_str();
  flow->add_option("--time", time_var, "Name of the time variable")->capture_default_str();
  flow->callback([&] {
    action = [&] {
      Derivation der = derivation_from_json(nlohmann::json::parse(s.resolve(derivation_text)));
      FlowMap f = exp_flow(der, bound, time_var);
      bool ok = flow_group_law(f);
      Json j = to_json(f);
      j["group_law"] = ok;
      if (!invariant_text.empty()) {
        Polynomial inv = s.poly(invariant_text);
        bool kept = preserves_hypersurface(f, inv);
        j["invariant"] = Json{{"polynomial", inv.to_string()}, {"preserved", kept}};
        ok = ok && kept;
      }
      emit(s, j);
      return verdict(ok);
    };
  });

  std::vector<std::string> args = shield_negative_arguments(raw_args);
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kUsageError};
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.message() << '\n';
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "invalid JSON: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace exotica::cli
