#include "osa/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace osa {

using nlohmann::json;

namespace {

std::vector<int> in_order(Subset s, const VariableOrder* order) {
  auto xs = elements(s);
  if (order) std::sort(xs.begin(), xs.end(), [order](int a, int b) { return order->less(a, b); });
  return xs;
}

json order_json(const Matroid& m, const VariableOrder& order) {
  json out = json::array();
  for (int e : order.sequence()) out.push_back(m.labels()[e]);
  return out;
}

json snf_json(const SNFResult& r) {
  json divisors = json::array();
  for (const auto& d : r.divisors) divisors.push_back(d.get_str());
  json torsion = json::array();
  for (const auto& d : r.torsion()) torsion.push_back(d.get_str());
  return {{"divisors", divisors},
          {"rank", r.rank},
          {"columns", r.cols},
          {"free_rank", r.free_rank()},
          {"torsion", torsion},
          {"torsion_free", r.torsion_free()}};
}

json strategy_json(const SearchStrategy& s) {
  if (s.kind == SearchStrategy::Kind::Exhaustive) return {{"kind", "exhaustive"}};
  return {{"kind", "random"}, {"seed", s.seed}, {"samples", s.samples}};
}

}  // namespace

json circuit_labels(const Matroid& m, Subset c, const VariableOrder* order) {
  json out = json::array();
  for (int e : in_order(c, order)) out.push_back(m.labels()[e]);
  return out;
}

json matroid_summary(const Matroid& m) {
  std::map<int, int> census;
  for (Subset c : m.circuits()) ++census[popcount(c)];
  json by_length = json::object();
  for (auto [len, count] : census) by_length[std::to_string(len)] = count;
  json summary = {{"n", m.size()}, {"rank", m.rank()}, {"circuits", m.circuits().size()},
                  {"circuits_by_length", by_length}};
  const auto p = homotopy_degree(m);
  summary["homotopy_degree"] = p ? json(*p) : json(nullptr);
  return summary;
}

json input_echo(const ParsedInput& input) {
  const Matroid& m = input.matroid;
  json circuits = json::array();
  for (Subset c : m.circuits()) circuits.push_back(circuit_labels(m, c));
  json echo = {{"format", format_name(input.format)}, {"n", m.size()}, {"labels", m.labels()},
               {"circuits", circuits}};
  if (input.arrangement) {
    json rows = json::array();
    for (const auto& row : input.arrangement->normals) {
      json r = json::array();
      for (const auto& v : row) r.push_back(v.get_str());
      rows.push_back(r);
    }
    echo["matrix"] = rows;
  }
  if (input.format == InputFormat::Graph) {
    json edges = json::array();
    for (auto [u, v] : input.edges) edges.push_back({u + 1, v + 1});
    echo["vertices"] = input.vertices;
    echo["edges"] = edges;
  }
  return echo;
}

std::string render_element(const Matroid& m, const ExtElement& f, const VariableOrder& order) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Subset, Coefficient>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [&order](const auto& a, const auto& b) {
    return compare(order, Monomial{a.first}, Monomial{b.first}) > 0;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : terms) {
    std::string coeff = c.to_string();
    const bool negative = coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (coeff != "1") os << coeff << (x ? "*" : "");
    if (x == 0) {
      if (coeff == "1") os << "1";
      continue;
    }
    os << "e[";
    bool sep = false;
    for (int e : elements(x)) {
      os << (sep ? " " : "") << m.labels()[e];
      sep = true;
    }
    os << "]";
  }
  return os.str();
}

json basis_json(const Matroid& m, const GroebnerBasis& gb) {
  json elements = json::array();
  const auto leads = gb.leading_monomials();
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    json e = {{"degree", gb.elements[i].degree()},
              {"leading_monomial", circuit_labels(m, leads[i].bits)},
              {"polynomial", render_element(m, gb.elements[i], gb.order)}};
    if (i < gb.circuits.size()) e["circuit"] = circuit_labels(m, gb.circuits[i], &gb.order);
    elements.push_back(e);
  }
  return {{"order", order_json(m, gb.order)},
          {"source", gb.source == BasisSource::Forge ? "forge" : "oracle"},
          {"coefficients", gb.elements.empty() ? "z" : gb.elements.front().domain().tag()},
          {"size", gb.elements.size()},
          {"elements", elements}};
}

json dims_json(const GradedDims& dims) {
  json rows = json::array();
  for (const auto& d : dims.degrees)
    rows.push_back({{"q", d.degree},
                    {"exterior", d.ambient},
                    {"ideal", d.ideal},
                    {"decomposable_ideal", d.decomposable},
                    {"algebra", d.algebra},
                    {"decomposable_algebra", d.decomposable_algebra},
                    {"ideal_mod_decomposable", d.quotient}});
  return {{"field", dims.field.tag()}, {"degrees", rows}};
}

json torsion_json(const TorsionReport& report) {
  json degrees = json::array();
  for (const auto& d : report.degrees)
    degrees.push_back({{"q", d.degree},
                       {"decomposable_algebra", snf_json(d.decomposable_algebra)},
                       {"ideal_mod_decomposable", snf_json(d.quotient)},
                       {"ideal_saturated", d.ideal_saturated},
                       {"torsion_free", d.torsion_free}});
  json fields = json::array();
  for (const auto& f : report.fields) fields.push_back(f.tag());
  return {{"degrees", degrees},
          {"fields_compared", fields},
          {"free_ranks_match_field_dims", report.ranks_match_fields},
          {"torsion_free", report.torsion_free()}};
}

json search_json(const Matroid& m, const SearchResult& r) {
  json histogram = json::object();
  for (auto [count, orders] : r.histogram) histogram[std::to_string(count)] = orders;
  return {{"objective", r.degree ? "forge_count_in_degree" : "total_basis_size"},
          {"degree", r.degree ? json(*r.degree) : json(nullptr)},
          {"best_order", order_json(m, r.best_order)},
          {"best_count", r.best_count},
          {"orders_examined", r.orders_examined},
          {"strategy", strategy_json(r.strategy)},
          {"histogram", histogram}};
}

json verification_json(const PropositionCheck& check) {
  json dims = json::object();
  for (const auto& [field, dim] : check.dims) dims[field.tag()] = dim;
  const int lowest = check.search.histogram.empty() ? 0 : check.search.histogram.begin()->first;
  return {{"degree", check.degree},
          {"best_count", check.search.best_count},
          {"min_count_over_orders", lowest},
          {"orders_examined", check.search.orders_examined},
          {"dims", dims},
          {"proposition_verified", check.verified}};
}

json make_document(const std::string& command, const ParsedInput& input, json payload) {
  return {{"command", command},
          {"input", input_echo(input)},
          {"matroid", matroid_summary(input.matroid)},
          {"result", std::move(payload)},
          {"tool", {{"name", kToolName}, {"version", kToolVersion}}}};
}

Matroid matroid_from_document(const json& doc) {
  try {
    const json& in = doc.at("input");
    const int n = in.at("n").get<int>();
    const auto labels = in.at("labels").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) index[labels[i]] = i;
    std::vector<Subset> circuits;
    for (const auto& c : in.at("circuits")) {
      Subset s = 0;
      for (const auto& label : c) s |= singleton(index.at(label.get<std::string>()));
      circuits.push_back(s);
    }
    return Matroid::from_circuits(n, circuits).with_labels(labels);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report document: ") + e.what());
  } catch (const std::out_of_range&) {
    throw InputError("report document names an unknown label");
  }
}

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace osa
