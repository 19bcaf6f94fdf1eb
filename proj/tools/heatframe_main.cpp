#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "heatframe/parser.hpp"
#include "heatframe/sigma.hpp"
#include "heatframe/suite.hpp"

namespace {

using namespace heatframe;

int write_out(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open " << out_path << "\n";
    return 3;
  }
  f << payload;
  return 0;
}

nlohmann::ordered_json operator_to_json(const DiffOperator& op) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [d, p] : op.terms()) {
    nlohmann::ordered_json t;
    t["coefficient"] = p.to_string();
    t["derivative"] = d.to_string();
    terms.push_back(std::move(t));
  }
  return terms;
}

std::string render_frame(int genus, const std::string& format) {
  TMatrix t = build_T(genus);
  std::vector<DiffOperator> ls = build_L(genus);
  if (format == "latex") {
    std::string s = "% T matrix, genus " + std::to_string(genus) + "\n" + t.to_latex();
    for (size_t k = 0; k < ls.size(); ++k)
      s += "% L_" + std::to_string(2 * k) + "\n$" + ls[k].to_latex() + "$\n";
    return s;
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["genus"] = genus;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int k = 1; k <= 2 * genus; ++k) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int m = 1; m <= 2 * genus; ++m) row.push_back(t.at(k, m).to_string());
      rows.push_back(std::move(row));
    }
    j["T"] = std::move(rows);
    nlohmann::ordered_json fields = nlohmann::ordered_json::array();
    for (size_t k = 0; k < ls.size(); ++k) {
      nlohmann::ordered_json f;
      f["name"] = "L" + std::to_string(2 * k);
      f["terms"] = operator_to_json(ls[k]);
      fields.push_back(std::move(f));
    }
    j["fields"] = std::move(fields);
    return j.dump(2) + "\n";
  }
  std::string s = "T matrix, genus " + std::to_string(genus) + "\n";
  for (int k = 1; k <= 2 * genus; ++k) {
    for (int m = 1; m <= 2 * genus; ++m)
      s += "  T[" + std::to_string(2 * k) + "," + std::to_string(2 * m) + "] = " +
           t.at(k, m).to_string() + "\n";
  }
  for (size_t k = 0; k < ls.size(); ++k)
    s += "L" + std::to_string(2 * k) + " = " + ls[k].to_string() + "\n";
  return s;
}

std::string render_ops(int genus, const std::string& format) {
  HeatOperatorFamily fam = build_Q(genus);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["genus"] = genus;
    nlohmann::ordered_json ops = nlohmann::ordered_json::array();
    for (int k = 0; k < 2 * genus; ++k) {
      nlohmann::ordered_json o;
      o["name"] = "Q" + std::to_string(2 * k);
      o["H"] = operator_to_json(fam.H[static_cast<size_t>(k)]);
      o["Q"] = operator_to_json(fam.Q[static_cast<size_t>(k)]);
      ops.push_back(std::move(o));
    }
    j["operators"] = std::move(ops);
    return j.dump(2) + "\n";
  }
  std::string s;
  for (int k = 0; k < 2 * genus; ++k) {
    std::string name = std::to_string(2 * k);
    if (format == "latex") {
      s += "% H_" + name + ", Q_" + name + "\n";
      s += "$H_{" + name + "} = " + fam.H[static_cast<size_t>(k)].to_latex() + "$\n";
      s += "$Q_{" + name + "} = " + fam.Q[static_cast<size_t>(k)].to_latex() + "$\n";
    } else {
      s += "H" + name + " = " + fam.H[static_cast<size_t>(k)].to_string() + "\n";
      s += "Q" + name + " = " + fam.Q[static_cast<size_t>(k)].to_string() + "\n";
    }
  }
  return s;
}

std::string render_commute(int genus, const std::string& format) {
  GenusContext ctx(genus);
  HeatOperatorFamily fam = build_Q(genus);
  std::string s;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < 2 * genus; ++i) {
    for (int j = i + 1; j < 2 * genus; ++j) {
      DiffOperator b = commutator(fam.Q[static_cast<size_t>(i)], fam.Q[static_cast<size_t>(j)]);
      StructureDecomposition d = decompose(b, fam.Q, ctx);
      std::string lhs = "[Q" + std::to_string(2 * i) + ",Q" + std::to_string(2 * j) + "]";
      std::string rhs;
      for (size_t k = 0; k < d.coefficients.size(); ++k) {
        if (d.coefficients[k].is_zero()) continue;
        if (!rhs.empty()) rhs += " + ";
        rhs += "(" + d.coefficients[k].to_string() + ")*Q" + std::to_string(2 * k);
      }
      if (rhs.empty()) rhs = "0";
      if (format == "json") {
        nlohmann::ordered_json r;
        r["bracket"] = lhs;
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (const Polynomial& c : d.coefficients) coeffs.push_back(c.to_string());
        r["coefficients"] = std::move(coeffs);
        r["unique"] = d.unique();
        rows.push_back(std::move(r));
      } else if (format == "latex") {
        s += "$" + lhs + " = " + rhs + "$\n";
      } else {
        s += lhs + " = " + rhs + (d.unique() ? "" : "   (not unique)") + "\n";
      }
    }
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["genus"] = genus;
    j["brackets"] = std::move(rows);
    return j.dump(2) + "\n";
  }
  return s;
}

std::string render_cole_hopf(int genus, SignConvention conv, const std::string& format) {
  ColeHopfSystem sys = build_cole_hopf_derived(genus, conv);
  GenusContext ctx(genus);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["genus"] = genus;
    j["convention"] = std::string(1, sign_char(conv));
    nlohmann::ordered_json ops = nlohmann::ordered_json::array();
    for (int k = 0; k < 2 * genus; ++k) {
      nlohmann::ordered_json o;
      o["name"] = "cL" + std::to_string(2 * k);
      nlohmann::ordered_json zp;
      for (const auto& [jj, p] : sys.z_parts[static_cast<size_t>(k)])
        zp["d/dz" + std::to_string(jj)] = p.to_string();
      o["first_order"] = std::move(zp);
      nlohmann::ordered_json w;
      for (const auto& [ss, p] : sys.sources[static_cast<size_t>(k)])
        w["w[" + std::to_string(2 * k) + "," + std::to_string(ss) + "]"] = p.to_string();
      o["sources"] = std::move(w);
      ops.push_back(std::move(o));
    }
    j["system"] = std::move(ops);
    return j.dump(2) + "\n";
  }
  std::string s = "nonlinear system, genus " + std::to_string(genus) + ", convention " +
                  sign_char(conv) + "\n";
  for (int k = 0; k < 2 * genus; ++k) {
    s += "cL" + std::to_string(2 * k) + " = L" + std::to_string(2 * k);
    for (const auto& [jj, p] : sys.z_parts[static_cast<size_t>(k)])
      s += " + (" + p.to_string() + ")*d/dz" + std::to_string(jj);
    s += "\n";
    for (const auto& [ss, p] : sys.sources[static_cast<size_t>(k)])
      s += "  w[" + std::to_string(2 * k) + "," + std::to_string(ss) + "] = " + p.to_string() +
           "\n";
  }
  return s;
}

std::string render_sigma(int genus, int max_weight, const std::vector<int>& ops,
                         const std::string& format) {
  SolutionBasis basis = kernel_basis(genus, ops, max_weight);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["genus"] = genus;
    j["max_weight"] = max_weight;
    j["ops"] = ops;
    nlohmann::ordered_json dims;
    for (const auto& [u, d] : basis.kernel_dims) dims[std::to_string(u)] = d;
    j["kernel_dims"] = std::move(dims);
    nlohmann::ordered_json elems = nlohmann::ordered_json::array();
    for (const GradedSeries& s : basis.elements) {
      nlohmann::ordered_json e;
      e["first_stratum"] = s.first_stratum;
      nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
      for (const auto& [m, c] : s.value.terms()) {
        nlohmann::ordered_json t;
        t["monomial"] = m.to_string();
        t["coefficient"] = c.to_string();
        coeffs.push_back(std::move(t));
      }
      e["terms"] = std::move(coeffs);
      elems.push_back(std::move(e));
    }
    j["basis"] = std::move(elems);
    return j.dump(2) + "\n";
  }
  std::string s;
  if (format == "latex") {
    for (const GradedSeries& e : basis.elements)
      s += "$\\varphi = " + e.value.to_latex() + "$\n";
    return s;
  }
  s = "basis of the (";
  for (size_t i = 0; i < ops.size(); ++i) s += (i ? "," : "") + std::string("Q") + std::to_string(ops[i]);
  s += ")-kernel, genus " + std::to_string(genus) + ", truncation " + std::to_string(max_weight) +
       "\n";
  for (const auto& [u, d] : basis.kernel_dims)
    s += "  stratum " + std::to_string(u) + ": dim " + std::to_string(d) + "\n";
  for (const GradedSeries& e : basis.elements)
    s += "phi = " + e.value.to_string() + "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact operator calculus for graded heat systems of hyperelliptic"
               " sigma functions"};
  app.require_subcommand(1);

  std::vector<int> genera;
  std::string convention = "+";
  int jet_order = 6;
  int max_weight = 10;
  std::string format = "text";
  std::string out_path;
  bool strict = false;
  bool no_timestamp = false;
  std::vector<std::string> suites = {"frame", "ops", "cole-hopf", "jets", "solve-sigma"};
  std::string ops_list = "0,2,4";

  auto add_common = [&](CLI::App* cmd, bool with_suite) {
    cmd->add_option("--genus", genera, "genus (repeatable)");
    cmd->add_option("--convention", convention, "sign convention + or -")
        ->check(CLI::IsMember({"+", "-"}));
    cmd->add_option("--jet-order", jet_order, "highest psi order used in jet checks");
    cmd->add_option("--max-weight", max_weight, "lambda-weight truncation of the series");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    cmd->add_option("--out", out_path, "write output to a file");
    cmd->add_flag("--strict", strict, "informational diffs become failures");
    cmd->add_flag("--no-timestamp", no_timestamp, "omit timestamp and timing for stable bytes");
    if (with_suite)
      cmd->add_option("--suite", suites, "suites to run (frame, ops, cole-hopf, jets,"
                                         " solve-sigma, all)");
  };

  CLI::App* cmd_frame = app.add_subcommand("frame", "print the T matrix and the lambda fields");
  CLI::App* cmd_ops = app.add_subcommand("ops", "print the heat operator family");
  CLI::App* cmd_commute = app.add_subcommand("commute", "print bracket decompositions");
  CLI::App* cmd_verify = app.add_subcommand("verify", "run verification suites");
  CLI::App* cmd_ch = app.add_subcommand("cole-hopf", "print the derived nonlinear system");
  CLI::App* cmd_jets = app.add_subcommand("jets", "verify the jet-ring bracket tables");
  CLI::App* cmd_sigma = app.add_subcommand("solve-sigma", "solve the heat system as a series");
  for (CLI::App* c : {cmd_frame, cmd_ops, cmd_commute, cmd_ch, cmd_jets, cmd_sigma})
    add_common(c, false);
  add_common(cmd_verify, true);
  CLI::Option* ops_opt = cmd_sigma->add_option("--ops", ops_list, "operator labels, e.g. 0,2,4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    heatframe::SignConvention conv =
        convention == "+" ? SignConvention::Plus : SignConvention::Minus;
    if (genera.empty()) genera = {1, 2, 3};

    if (cmd_verify->parsed()) {
      SuiteConfig cfg;
      cfg.genera = genera;
      cfg.convention = conv;
      cfg.jet_order = jet_order;
      cfg.max_weight = max_weight;
      cfg.format = format;
      cfg.out_path = out_path;
      cfg.strict = strict;
      cfg.with_timestamp = !no_timestamp;
      if (!(suites.size() == 1 && suites[0] == "all")) cfg.suites = suites;
      try {
        validate(cfg);
      } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
      }
      SuiteResult result = run_suites(cfg);
      int rc = write_out(emit(result, cfg.format), cfg.out_path);
      if (rc != 0) return rc;
      return result.overall() ? 0 : 1;
    }

    // the T matrix and the lambda fields exist for every genus; the
    // explicit heat families only for g = 1, 2, 3
    int genus_cap = cmd_frame->parsed() ? 1 << 20 : 3;
    for (int g : genera)
      if (g < 1 || g > genus_cap) {
        std::cerr << "config error: genus must be 1, 2 or 3\n";
        return 2;
      }

    std::string payload;
    for (int g : genera) {
      if (cmd_frame->parsed()) payload += render_frame(g, format);
      if (cmd_ops->parsed()) payload += render_ops(g, format);
      if (cmd_commute->parsed()) payload += render_commute(g, format);
      if (cmd_ch->parsed()) {
        payload += render_cole_hopf(g, conv, format);
        SuiteResult r;
        r.strict = strict;
        r.with_timestamp = false;
        r.command = "cole-hopf --genus " + std::to_string(g);
        r.report = diff_against_reference_tables(g, build_cole_hopf_derived(g, conv));
        payload += emit(r, format);
        if (!r.overall()) {
          write_out(payload, out_path);
          return 1;
        }
      }
      if (cmd_jets->parsed()) {
        JetScope scope(g, conv);
        SuiteResult r;
        r.strict = strict;
        r.with_timestamp = false;
        r.command = "jets --genus " + std::to_string(g);
        r.report.merge(derivation_commutator_tables(scope, jet_order));
        r.report.merge(closure_check(scope, std::max(2, std::min(jet_order, 5))));
        r.report.merge(homomorphism_check(scope));
        payload += emit(r, format);
        if (!r.overall()) {
          write_out(payload, out_path);
          return 1;
        }
      }
      if (cmd_sigma->parsed()) {
        std::vector<int> ops;
        size_t pos = 0;
        while (pos < ops_list.size()) {
          size_t comma = ops_list.find(',', pos);
          if (comma == std::string::npos) comma = ops_list.size();
          ops.push_back(std::stoi(ops_list.substr(pos, comma - pos)));
          pos = comma + 1;
        }
        if (ops_opt->count() == 0) {
          // default set trimmed to the operators the genus has
          std::vector<int> trimmed;
          for (int o : ops)
            if (o / 2 <= 2 * g - 1) trimmed.push_back(o);
          ops = trimmed;
        }
        payload += render_sigma(g, max_weight, ops, format);
      }
    }
    return write_out(payload, out_path);
  } catch (const heatframe::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
