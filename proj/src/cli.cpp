#include "osa/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "osa/report.hpp"

namespace osa {

using nlohmann::json;

namespace {

struct CommonOptions {
  std::string file;
  std::string format;
  std::string json_path;
  unsigned threads = 0;
};

void add_common(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("file", opts.file, "Input file (.circuits, .matrix or .graph)")->required();
  sub->add_option("--format", opts.format, "Input format: circuits, matrix or graph (default: from extension)");
  sub->add_option("--json", opts.json_path, "Also write the JSON report to this path ('-' for stdout)");
  sub->add_option("--threads", opts.threads, "Worker threads for searches (0 = all cores)");
}

int max_ground_set() {
  const char* env = std::getenv("OSA_MAX_N");
  if (!env || !*env) return 12;
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 2)
    throw InputError("OSA_MAX_N must be an integer between 1 and 64, got '" + text + "'");
  const int value = std::stoi(text);
  if (value < 1 || value > 64) throw InputError("OSA_MAX_N must be an integer between 1 and 64, got '" + text + "'");
  return value;
}

ParsedInput load(const CommonOptions& opts) {
  InputFormat format;
  if (!opts.format.empty()) {
    format = parse_format(opts.format);
  } else if (auto guessed = format_from_extension(opts.file)) {
    format = *guessed;
  } else {
    throw InputError("cannot tell the format of '" + opts.file + "'; pass --format");
  }
  try {
    return parse_input_file(opts.file, format, max_ground_set());
  } catch (const ParseError& e) {
    throw InputError(opts.file + ":" + std::to_string(e.line()) + ": " + e.what());
  }
}

std::vector<Domain> parse_fields(const std::string& text) {
  std::vector<Domain> out;
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream ss(cleaned);
  for (std::string tag; ss >> tag;) {
    const Domain d = Domain::parse(tag);
    if (!d.is_field()) throw InputError("'" + tag + "' is not a field; use q or f<p>");
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  }
  if (out.empty()) throw InputError("no fields given");
  return out;
}

std::string set_text(const Matroid& m, Subset s, const VariableOrder* order = nullptr) {
  std::string out = "{";
  bool sep = false;
  for (const auto& label : circuit_labels(m, s, order)) {
    out += (sep ? "," : "") + label.get<std::string>();
    sep = true;
  }
  return out + "}";
}

std::string order_text(const Matroid& m, const VariableOrder& order) {
  std::string out;
  for (int e : order.sequence()) out += (out.empty() ? "" : " < ") + m.labels()[e];
  return out;
}

std::string divisors_text(const SNFResult& r) {
  std::string out = "Z^" + std::to_string(r.free_rank());
  for (const auto& d : r.torsion()) out += " + Z/" + d.get_str();
  return out;
}

void emit_json(const CommonOptions& opts, const json& doc, std::ostream& out) {
  if (opts.json_path.empty()) return;
  const std::string text = canonical_dump(doc);
  if (opts.json_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(opts.json_path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + opts.json_path + "'");
  file << text;
}

void print_summary(const Matroid& m, std::ostream& out) {
  out << "ground set: " << m.size() << " elements (";
  for (int i = 0; i < m.size(); ++i) out << (i ? " " : "") << m.labels()[i];
  out << "), rank " << m.rank() << "\n";
}

// Each command prints its text report (unless the JSON goes to stdout) and
// returns the document plus an exit status.
struct Outcome {
  json doc;
  int status = kExitOk;
};

Outcome cmd_circuits(const ParsedInput& in, std::ostream& text) {
  const Matroid& m = in.matroid;
  print_summary(m, text);
  text << "circuits: " << m.circuits().size() << "\n";
  for (Subset c : m.circuits()) text << "  " << set_text(m, c) << "\n";
  json list = json::array();
  for (Subset c : m.circuits()) list.push_back(circuit_labels(m, c));
  return {make_document("circuits", in, {{"circuits", list}})};
}

Outcome cmd_gb(const ParsedInput& in, const std::string& order_arg, const std::string& field_tag, std::ostream& text) {
  const Matroid& m = in.matroid;
  const VariableOrder order = order_arg.empty() ? VariableOrder::natural(m.size()) : parse_order(m, order_arg);
  const Domain field = parse_fields(field_tag).front();
  const GroebnerBasis forge = forge_basis(m, order, field);
  const GroebnerBasis oracle = reduced_gb_oracle(m, order, field);
  if (!same_elements(forge, oracle))
    throw InvariantViolation("forge basis and direct reduced Groebner basis differ over " + field.name());

  print_summary(m, text);
  text << "order: " << order_text(m, order) << "\n";
  text << "reduced Groebner basis over " << field.name() << ": " << forge.elements.size() << " elements\n";
  const auto leads = forge.leading_monomials();
  for (std::size_t i = 0; i < forge.elements.size(); ++i) {
    text << "  " << set_text(m, forge.circuits[i], &order) << "  in = " << set_text(m, leads[i].bits, &order)
         << "\n    " << render_element(m, forge.elements[i], order) << "\n";
  }
  json payload = basis_json(m, forge);
  payload["oracle_agrees"] = true;
  payload["field"] = field.tag();
  return {make_document("gb", in, payload)};
}

Outcome cmd_dims(const ParsedInput& in, const std::string& fields_arg, std::optional<int> max_degree,
                 std::ostream& text) {
  const Matroid& m = in.matroid;
  print_summary(m, text);
  json tables = json::array();
  for (const Domain& field : parse_fields(fields_arg)) {
    const GradedDims dims = graded_dims(m, field, max_degree);
    text << "over " << field.name() << ":\n";
    text << "   q  exterior  ideal  decomp  algebra  A+  I/L+I\n";
    for (const auto& d : dims.degrees)
      text << std::setw(4) << d.degree << std::setw(10) << d.ambient << std::setw(7) << d.ideal << std::setw(8)
           << d.decomposable << std::setw(9) << d.algebra << std::setw(4) << d.decomposable_algebra << std::setw(7)
           << d.quotient << "\n";
    tables.push_back(dims_json(dims));
  }
  return {make_document("dims", in, {{"tables", tables}})};
}

void print_torsion(const Matroid& m, const TorsionReport& report, std::ostream& text) {
  print_summary(m, text);
  text << "   q  A+                     I/L+I\n";
  for (const auto& d : report.degrees) {
    std::string a = divisors_text(d.decomposable_algebra);
    a.resize(std::max<std::size_t>(a.size(), 22), ' ');
    text << std::setw(4) << d.degree << "  " << a << " " << divisors_text(d.quotient) << "\n";
  }
  text << "free ranks match field dimensions: " << (report.ranks_match_fields ? "yes" : "no") << "\n";
  text << "torsion free: " << (report.torsion_free() ? "yes" : "no") << "\n";
}

Outcome cmd_torsion(const ParsedInput& in, std::ostream& text) {
  const TorsionReport report = torsion_report(in.matroid);
  print_torsion(in.matroid, report, text);
  const int status = report.torsion_free() && report.ranks_match_fields ? kExitOk : kExitInvariantViolation;
  return {make_document("torsion", in, torsion_json(report)), status};
}

struct SearchOptions {
  std::optional<int> degree;
  bool exhaustive = false;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  bool total = false;
};

Outcome cmd_search(const ParsedInput& in, const SearchOptions& s, unsigned threads, std::ostream& text) {
  const Matroid& m = in.matroid;
  if (s.total == s.degree.has_value()) throw InputError("search needs exactly one of --degree or --total");
  if (s.exhaustive == s.samples.has_value()) throw InputError("search needs exactly one of --exhaustive or --samples");
  SearchStrategy strategy = SearchStrategy::exhaustive();
  if (s.samples) {
    if (!s.seed) throw InputError("random search needs an explicit --seed");
    if (*s.samples == 0) throw InputError("--samples must be positive");
    strategy = SearchStrategy::random(*s.seed, *s.samples);
  } else if (s.seed) {
    throw InputError("--seed only applies with --samples");
  }
  const SearchResult r = s.total ? minimize_total_gb_size(m, strategy, threads)
                                 : minimize_forge_count(m, *s.degree, strategy, threads);
  print_summary(m, text);
  if (r.degree)
    text << "objective: number of basis elements of degree " << *r.degree << "\n";
  else
    text << "objective: total reduced Groebner basis size\n";
  if (strategy.kind == SearchStrategy::Kind::Exhaustive)
    text << "strategy: exhaustive\n";
  else
    text << "strategy: random, seed " << strategy.seed << ", " << strategy.samples << " samples\n";
  text << "orders examined: " << r.orders_examined << "\n";
  text << "minimum: " << r.best_count << "\n";
  text << "first minimizing order: " << order_text(m, r.best_order) << "\n";
  text << "histogram (count: orders):";
  for (auto [count, orders] : r.histogram) text << " " << count << ":" << orders;
  text << "\n";
  return {make_document("search", in, search_json(m, r))};
}

Outcome cmd_verify(const ParsedInput& in, int degree, const std::string& fields_arg, std::ostream& text) {
  const Matroid& m = in.matroid;
  const PropositionCheck check = verify_proposition(m, degree, parse_fields(fields_arg));
  print_summary(m, text);
  text << "degree " << degree << ": minimum over " << check.search.orders_examined << " orders = "
       << check.search.best_count << "\n";
  for (const auto& [field, dim] : check.dims) text << "  dim (I/L+I)^" << degree << " over " << field.name() << " = " << dim << "\n";
  text << "proposition-verified=" << (check.verified ? "true" : "false") << "\n";
  return {make_document("verify", in, verification_json(check)),
          check.verified ? kExitOk : kExitInvariantViolation};
}

Outcome cmd_report(const ParsedInput& in, std::ostream& text) {
  const Matroid& m = in.matroid;
  const VariableOrder order = VariableOrder::natural(m.size());
  json tables = json::array();
  for (const Domain& field : parse_fields("q,f2,f3,f5")) tables.push_back(dims_json(graded_dims(m, field)));
  const TorsionReport torsion = torsion_report(m);
  json circuits = json::array();
  for (Subset c : m.circuits()) circuits.push_back(circuit_labels(m, c));
  json payload = {{"circuits", circuits},
                  {"dims", tables},
                  {"forge_basis", basis_json(m, forge_basis(m, order))},
                  {"torsion", torsion_json(torsion)}};
  print_summary(m, text);
  text << "circuits: " << m.circuits().size() << ", forge basis (natural order): "
       << payload["forge_basis"]["size"].get<std::size_t>() << " elements, torsion free: "
       << (torsion.torsion_free() ? "yes" : "no") << "\n";
  return {make_document("report", in, payload), torsion.torsion_free() ? kExitOk : kExitInvariantViolation};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orlik-Solomon algebra toolkit: circuits, Groebner bases, graded dimensions and torsion", "osa"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  CommonOptions common;
  std::string order_arg, field_tag = "q", fields_arg = "q";
  std::optional<int> max_degree;
  int degree = 0;
  SearchOptions search;

  auto* circuits = app.add_subcommand("circuits", "List the circuits of the input matroid");
  add_common(circuits, common);

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of the Orlik-Solomon ideal for an order");
  add_common(gb, common);
  gb->add_option("--order", order_arg, "Ground elements from smallest to largest (default: input order)");
  gb->add_option("--field", field_tag, "Coefficient field: q or f<p>")->capture_default_str();

  auto* dims = app.add_subcommand("dims", "Graded dimensions of I, L+I, A, A+ and I/L+I");
  add_common(dims, common);
  dims->add_option("--fields", fields_arg, "Comma separated fields, e.g. q,f2,f3")->capture_default_str();
  dims->add_option("--max-degree", max_degree, "Highest degree to tabulate");

  auto* torsion = app.add_subcommand("torsion", "Smith normal forms of A+ and I/L+I over the integers");
  add_common(torsion, common);

  auto* search_cmd = app.add_subcommand("search", "Minimize the Groebner basis over variable orders");
  add_common(search_cmd, common);
  search_cmd->add_option("--degree", search.degree, "Minimize basis elements of this degree");
  search_cmd->add_flag("--total", search.total, "Minimize the total basis size");
  search_cmd->add_flag("--exhaustive", search.exhaustive, "Examine all n! orders (n <= 8)");
  search_cmd->add_option("--samples", search.samples, "Examine this many random orders");
  search_cmd->add_option("--seed", search.seed, "Seed for --samples");

  auto* verify = app.add_subcommand("verify", "Check that the minimal degree-q basis count equals dim (I/L+I)^q");
  add_common(verify, common);
  verify->add_option("--degree", degree, "Degree q")->required();
  verify->add_option("--fields", fields_arg, "Comma separated fields")->capture_default_str();

  auto* report = app.add_subcommand("report", "Full JSON report");
  add_common(report, common);
  report->get_option("--json")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolName << " " << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "osa: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    const ParsedInput in = load(common);
    // With `--json -` stdout carries only the document.
    std::ostringstream discard;
    std::ostream& text = common.json_path == "-" ? static_cast<std::ostream&>(discard) : out;
    Outcome outcome;
    if (*circuits)
      outcome = cmd_circuits(in, text);
    else if (*gb)
      outcome = cmd_gb(in, order_arg, field_tag, text);
    else if (*dims)
      outcome = cmd_dims(in, fields_arg, max_degree, text);
    else if (*torsion)
      outcome = cmd_torsion(in, text);
    else if (*search_cmd)
      outcome = cmd_search(in, search, common.threads, text);
    else if (*verify)
      outcome = cmd_verify(in, degree, fields_arg, text);
    else
      outcome = cmd_report(in, text);
    emit_json(common, outcome.doc, out);
    return outcome.status;
  } catch (const InputError& e) {
    err << "osa: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvariantViolation& e) {
    err << "osa: invariant violated: " << e.what() << "\n";
    return kExitInvariantViolation;
  } catch (const PreconditionError& e) {
    err << "osa: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "osa: internal error: " << e.what() << "\n";
    return kExitInvariantViolation;
  }
}

}  // namespace osa
