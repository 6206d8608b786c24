#include "sag/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sag/abhomology.hpp"
#include "sag/errors.hpp"
#include "sag/fibersum.hpp"
#include "sag/fpgroup.hpp"
#include "sag/lefschetz.hpp"

namespace sag {

using nlohmann::json;

FgAbelian parse_group_spec(std::string_view text) {
  std::string s;
  std::vector<std::size_t> origin;  // position in `text` of each kept character
  for (std::size_t i = 0; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s += text[i];
      origin.push_back(i);
    }
  if (s.empty()) throw SyntaxError(0, "empty group spec");
  const auto at = [&](std::size_t i) { return i < origin.size() ? origin[i] : text.size(); };

  std::vector<Integer> orders;
  std::size_t i = 0;
  const auto read_number = [&](std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw SyntaxError(at(pos), "expected a number");
    return Integer(s.substr(start, pos - start));
  };
  for (;;) {
    if (i < s.size() && s[i] == 'Z') {
      ++i;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const Integer r = read_number(i);
        if (r > 4096) throw SyntaxError(at(i), "rank too large");
        for (unsigned long k = 0; k < r.get_ui(); ++k) orders.emplace_back(0);
      } else if (i < s.size() && s[i] == '/') {
        ++i;
        const Integer d = read_number(i);
        if (d == 0) throw SyntaxError(at(i), "Z/0 is not allowed; write Z");
        orders.push_back(d);
      } else {
        orders.emplace_back(0);
      }
    } else if (i < s.size() && s[i] == '0') {
      ++i;
    } else {
      throw SyntaxError(at(i), "expected 'Z', 'Z^r', 'Z/d' or '0'");
    }
    if (i == s.size()) break;
    if (s[i] != '+') throw SyntaxError(at(i), "expected '+'");
    ++i;
  }
  return FgAbelian::from_cyclic_orders(orders);
}

json verdict_to_json(const FgAbelian& gamma, const AsphericityVerdict& v) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = to_string(gamma);
  j["aspherical"] = v.aspherical;
  j["reason"] = to_string(v.reason);
  j["realizable_dims"] = std::vector<unsigned>(v.realizable_dims.begin(), v.realizable_dims.end());
  j["pi2_forced_nonzero_in_dim4"] = v.pi2_forced_nonzero_in_dim4;
  j["class_note"] = v.class_note ? json(*v.class_note) : json(nullptr);
  j["covering_note"] = v.covering_note ? json(*v.covering_note) : json(nullptr);
  j["citations"] = v.citations;
  return j;
}

AsphericityVerdict verdict_from_json(const json& j) {
  AsphericityVerdict v;
  v.aspherical = j.at("aspherical").get<bool>();
  const auto reason = parse_reason(j.at("reason").get<std::string>());
  if (!reason) throw FormatError(0, "unknown reason");
  v.reason = *reason;
  for (unsigned d : j.at("realizable_dims").get<std::vector<unsigned>>())
    v.realizable_dims.insert(d);
  v.pi2_forced_nonzero_in_dim4 = j.at("pi2_forced_nonzero_in_dim4").get<bool>();
  if (!j.at("class_note").is_null()) v.class_note = j.at("class_note").get<std::string>();
  if (!j.at("covering_note").is_null())
    v.covering_note = j.at("covering_note").get<std::string>();
  v.citations = j.at("citations").get<std::vector<std::string>>();
  return v;
}

std::string verdict_to_text(const FgAbelian& gamma, const AsphericityVerdict& v) {
  std::ostringstream out;
  out << "group: " << to_string(gamma) << "\n";
  out << "aspherical: " << (v.aspherical ? "yes" : "no") << "\n";
  out << "reason: " << to_string(v.reason) << "\n";
  out << "realizable_dims:";
  for (unsigned d : v.realizable_dims) out << " " << d;
  out << "\n";
  out << "pi2_forced_nonzero_in_dim4: " << (v.pi2_forced_nonzero_in_dim4 ? "yes" : "no")
      << "\n";
  out << "class_note: " << v.class_note.value_or("-") << "\n";
  out << "covering_note: " << v.covering_note.value_or("-") << "\n";
  for (const auto& c : v.citations) out << "citation: " << c << "\n";
  return out.str();
}

AsphericityVerdict verdict_from_text(std::string_view text) {
  AsphericityVerdict v;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  const auto yes_no = [&](const std::string& s) {
    if (s == "yes") return true;
    if (s == "no") return false;
    throw FormatError(line_no, "expected yes/no");
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw FormatError(line_no, "expected 'key: value'");
    const std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    if (!value.empty() && value[0] == ' ') value.erase(0, 1);
    if (key == "group") {
    } else if (key == "aspherical") {
      v.aspherical = yes_no(value);
    } else if (key == "reason") {
      const auto r = parse_reason(value);
      if (!r) throw FormatError(line_no, "unknown reason '" + value + "'");
      v.reason = *r;
    } else if (key == "realizable_dims") {
      std::istringstream dims(value);
      for (unsigned d; dims >> d;) v.realizable_dims.insert(d);
    } else if (key == "pi2_forced_nonzero_in_dim4") {
      v.pi2_forced_nonzero_in_dim4 = yes_no(value);
    } else if (key == "class_note") {
      if (value != "-") v.class_note = value;
    } else if (key == "covering_note") {
      if (value != "-") v.covering_note = value;
    } else if (key == "citation") {
      v.citations.push_back(value);
    } else {
      throw FormatError(line_no, "unknown key '" + key + "'");
    }
  }
  return v;
}

namespace {

enum class Format { Text, Json };

struct Options {
  std::string format = "text";
  std::size_t max_degree = kDefaultMaxDegree;
  std::string spec;
  std::string file;
  long positional_degree = -1;
  std::size_t base_genus = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit_json(std::ostream& out, json j, const std::string& command) {
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  out << j.dump(2) << "\n";
}

int cmd_classify(const Options& o, Format f, std::ostream& out) {
  const FgAbelian gamma = parse_group_spec(o.spec);
  const AsphericityVerdict v = classify(gamma);
  if (f == Format::Json)
    emit_json(out, verdict_to_json(gamma, v), "classify");
  else
    out << verdict_to_text(gamma, v);
  return v.aspherical ? kExitOk : kExitNotAspherical;
}

int cmd_homology(const Options& o, Format f, std::ostream& out, std::ostream& err) {
  const FgAbelian gamma = parse_group_spec(o.spec);
  std::size_t top = o.max_degree;
  if (o.positional_degree >= 0) top = static_cast<std::size_t>(o.positional_degree);
  if (top > kDefaultMaxDegree) {
    err << "error: max degree must be at most " << kDefaultMaxDegree << "\n";
    return kExitUsage;
  }
  const GradedAbelian h = group_homology_graded(gamma, top);
  const FgAbelian free_part = FgAbelian::free(gamma.free_rank());
  const FgAbelian torsion_part(0, gamma.torsion());
  const bool mixed = gamma.free_rank() > 0 && !gamma.torsion().empty();

  json degrees = json::array();
  std::ostringstream text;
  text << "group: " << to_string(gamma) << "\n";
  for (std::size_t k = 0; k <= top; ++k) {
    text << "H_" << k << " = " << to_string(h[k]) << "\n";
    degrees.push_back({{"degree", k}, {"group", to_string(h[k])}});
  }
  json ranks = json::array();
  for (std::size_t k = 0; k <= top; ++k) {
    const Integer b = real_cohomology_rank(gamma, k);
    text << "dim H^" << k << "(R) = " << b.get_str() << "\n";
    ranks.push_back({{"degree", k}, {"rank", b.get_str()}});
  }
  json summands = json::array();
  if (mixed) {
    for (std::size_t k = 1; k <= top; ++k) {
      const FgAbelian parts =
          direct_sum(group_homology(free_part, k), group_homology(torsion_part, k));
      if (parts.is_trivial()) continue;
      const bool ok = is_direct_summand(parts, h[k]);
      text << "summand_" << k << ": H_" << k << "(" << to_string(free_part) << ") + H_" << k
           << "(" << to_string(torsion_part) << ") = " << to_string(parts)
           << " is a direct summand of H_" << k << ": " << (ok ? "yes" : "no") << "\n";
      summands.push_back({{"degree", k}, {"summand", to_string(parts)}, {"contained", ok}});
    }
  }
  text << "real_cohomological_dimension: " << real_cohomological_dimension(gamma) << "\n";
  if (f == Format::Json) {
    emit_json(out,
              {{"group", to_string(gamma)},
               {"homology", degrees},
               {"real_cohomology_ranks", ranks},
               {"summand_checks", summands},
               {"real_cohomological_dimension", real_cohomological_dimension(gamma)}},
              "homology");
  } else {
    out << text.str();
  }
  return kExitOk;
}

int cmd_fibration(const Options& o, Format f, std::ostream& out) {
  const MonodromyFactorization m = parse_factorization(read_file(o.file));
  const TotalSpaceGroup g = total_space_pi1(m);
  const bool trivial = homology_trivial(m);
  const FgAbelian ab = abelianization(g.presentation);
  const long chi = euler_characteristic(m);
  const std::string caveat = "homological check only";
  if (f == Format::Json) {
    emit_json(out,
              {{"label", m.label()},
               {"fiber_genus", m.fiber_genus()},
               {"critical_points", m.twists().size()},
               {"presentation", render_presentation(g.presentation)},
               {"abelianization", to_string(ab)},
               {"homology_trivial", trivial},
               {"homology_trivial_caveat", caveat},
               {"presentation_conditional", g.caveat},
               {"euler_characteristic", chi}},
              "fibration");
  } else {
    out << render_presentation(g.presentation);
    out << "# abelianization: " << to_string(ab) << "\n";
    out << "# homology_trivial: " << (trivial ? "yes" : "no") << " (" << caveat << ")\n";
    if (g.caveat)
      out << "# warning: monodromy acts nontrivially on H_1; the presentation is "
             "conditional\n";
    out << "# euler_characteristic: " << chi << "\n";
  }
  return kExitOk;
}

int cmd_witness(const Options& o, Format f, std::ostream& out) {
  const FgAbelian gamma = parse_group_spec(o.spec);
  const AsphericityVerdict v = classify(gamma);
  if (!v.aspherical) {
    if (f == Format::Json) {
      emit_json(out, {{"group", to_string(gamma)}, {"aspherical", false},
                      {"reason", to_string(v.reason)}, {"citations", v.citations}},
                "witness");
    } else {
      out << "# " << to_string(gamma) << " is not symplectically aspherical\n";
      out << "# reason: " << to_string(v.reason) << "\n";
      for (const auto& c : v.citations) out << "# citation: " << c << "\n";
    }
    return kExitNotAspherical;
  }
  const Presentation p = witness_presentation(gamma);
  const FgAbelian ab = abelianization(p);
  const bool pass = ab == gamma;
  if (f == Format::Json) {
    emit_json(out,
              {{"group", to_string(gamma)},
               {"aspherical", true},
               {"reason", to_string(v.reason)},
               {"presentation", render_presentation(p)},
               {"generators", p.generator_count()},
               {"relators", p.relators().size()},
               {"abelianization", to_string(ab)},
               {"rank", rank(ab)},
               {"check", pass ? "PASS" : "FAIL"},
               {"citations", v.citations}},
              "witness");
  } else {
    out << render_presentation(p);
    out << "# abelianization: " << to_string(ab) << "\n";
    out << "# rank: " << rank(ab) << "\n";
    out << "# abelianization check: " << (pass ? "PASS" : "FAIL") << "\n";
    for (const auto& c : v.citations) out << "# citation: " << c << "\n";
  }
  return pass ? kExitOk : kExitNotAspherical;
}

int cmd_snf(const Options& o, Format f, std::ostream& out) {
  const IntMatrix a = parse_matrix(read_file(o.file));
  const SmithDecomposition s = smith_normal_form(a);
  const FgAbelian coker = cokernel(a);
  if (f == Format::Json) {
    const auto rows_of = [](const IntMatrix& m) {
      json rows = json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
        rows.push_back(row);
      }
      return rows;
    };
    emit_json(out,
              {{"d", rows_of(s.d)},
               {"u", rows_of(s.u)},
               {"v", rows_of(s.v)},
               {"cokernel", to_string(coker)}},
              "snf");
  } else {
    out << "D:\n" << render_matrix(s.d);
    out << "U:\n" << render_matrix(s.u);
    out << "V:\n" << render_matrix(s.v);
    out << "cokernel: " << to_string(coker) << "\n";
  }
  return kExitOk;
}

int cmd_fibersum(const Options& o, Format f, std::ostream& out) {
  const Presentation input = parse_presentation(read_file(o.file));
  const auto x = SurfaceFiberedPresentation::from_presentation(input);
  const Presentation sum = fiber_sum_with_trivial_bundle(x, o.base_genus);
  const FgAbelian ab = abelianization(sum);
  const FgAbelian expected =
      direct_sum(abelianization(x.presentation()), FgAbelian::free(2 * o.base_genus));
  const FgAbelian quotient = ssd_quotient(trivial_bundle_ssd(x, o.base_genus));
  const bool pass = ab == expected && quotient == ab;
  if (f == Format::Json) {
    emit_json(out,
              {{"fiber_genus", x.fiber_genus()},
               {"base_genus", o.base_genus},
               {"presentation", render_presentation(sum)},
               {"abelianization", to_string(ab)},
               {"expected_product", to_string(expected)},
               {"ssd_quotient", to_string(quotient)},
               {"check", pass ? "PASS" : "FAIL"}},
              "fibersum");
  } else {
    out << render_presentation(sum);
    out << "# abelianization: " << to_string(ab) << "\n";
    out << "# pi_1(X) x pi_" << o.base_genus << " abelianized: " << to_string(expected) << "\n";
    out << "# short surjectivity quotient: " << to_string(quotient) << "\n";
    out << "# check: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitNotAspherical;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectically aspherical groups: presentations, homology, fiber sums"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-degree", o.max_degree, "Highest homology degree (at most 8)");

  auto* classify_cmd = app.add_subcommand("classify", "Decide symplectic asphericity");
  classify_cmd->add_option("spec", o.spec, "Group, e.g. Z^4+Z/2")->required();
  auto* homology_cmd = app.add_subcommand("homology", "Integral homology via Kunneth");
  homology_cmd->add_option("spec", o.spec, "Group, e.g. Z^4+Z/2")->required();
  homology_cmd->add_option("degree", o.positional_degree, "Highest degree")
      ->check(CLI::NonNegativeNumber);
  auto* fibration_cmd = app.add_subcommand("fibration", "Analyze a monodromy factorization");
  fibration_cmd->add_option("file", o.file, "Factorization file")->required();
  auto* witness_cmd = app.add_subcommand("witness", "Emit a witness presentation");
  witness_cmd->add_option("spec", o.spec, "Group, e.g. Z^4+Z/2")->required();
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a matrix file");
  snf_cmd->add_option("file", o.file, "Matrix file")->required();
  auto* fibersum_cmd = app.add_subcommand("fibersum", "Fiber sum with a product bundle");
  fibersum_cmd->add_option("file", o.file, "Presentation on a1 b1 ... af bf")->required();
  fibersum_cmd->add_option("--base-genus", o.base_genus, "Genus e >= 1 of the base");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format f = o.format == "json" ? Format::Json : Format::Text;
  try {
    if (*classify_cmd) return cmd_classify(o, f, out);
    if (*homology_cmd) return cmd_homology(o, f, out, err);
    if (*fibration_cmd) return cmd_fibration(o, f, out);
    if (*witness_cmd) return cmd_witness(o, f, out);
    if (*snf_cmd) return cmd_snf(o, f, out);
    if (*fibersum_cmd) return cmd_fibersum(o, f, out);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotAspherical;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sag
