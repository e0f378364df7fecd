#include "switchlab/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "switchlab/degree_expr.hpp"
#include "switchlab/graph_io.hpp"
#include "switchlab/stability.hpp"
#include "switchlab/switch_ops.hpp"

namespace switchlab::cli {

using Json = nlohmann::ordered_json;

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::theorem: return 2;
    case ErrorKind::io: return 3;
    case ErrorKind::budget: return 4;
    default: return 1;
  }
}

namespace {

// Result of one subcommand: the report plus the exit status it implies.
struct Outcome {
  Json report;
  int status = 0;
};

Json header(std::string_view command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

Json degree_json(const DegreeVector& d) { return Json(d.values()); }

Json switch_json(const TwoSwitch& s) { return Json::array({s.a, s.b, s.c, s.d}); }

Json graph_json(const LabeledGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  Json j;
  j["n"] = g.order();
  j["edges"] = std::move(edges);
  return j;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

DegreeVector degree_of(const CliConfig& c) {
  if (c.degree_expression.empty()) throw ParseError("missing degree vector (--d)");
  return parse_degree_expression(c.degree_expression);
}

const std::string& input(const CliConfig& c, std::size_t i) {
  if (c.inputs.size() <= i) {
    throw ParseError(c.subcommand + " needs " + std::to_string(i + 1) + " graph file(s)");
  }
  return c.inputs[i];
}

std::vector<ParamId> params_of(const CliConfig& c) {
  if (c.params.empty()) throw ParseError("missing parameter list (--param)");
  return c.params;
}

// Two panels: a witness graph and its image under the witness switch.
std::string witness_dot(const std::vector<std::pair<std::string, StabilityWitness>>& ws) {
  std::ostringstream dot;
  dot << "graph witnesses {\n";
  int cluster = 0;
  for (const auto& [label, w] : ws) {
    const LabeledGraph image = apply(w.graph, w.sw);
    for (const auto& [graph, caption] :
         {std::pair{&w.graph, std::string(" before ") + std::to_string(w.before)},
          std::pair{&image, std::string(" after ") + std::to_string(w.after)}}) {
      dot << "  subgraph cluster_" << cluster << " {\n";
      dot << "    label=\"" << label << caption << " " << to_string(w.sw) << "\";\n";
      for (Vertex v = 1; v <= graph->order(); ++v) {
        dot << "    c" << cluster << "_" << v << " [label=\"" << v << "\"];\n";
      }
      for (const Edge& e : graph->edges()) {
        dot << "    c" << cluster << "_" << e.u << " -- c" << cluster << "_" << e.v << ";\n";
      }
      dot << "  }\n";
      ++cluster;
    }
  }
  dot << "}\n";
  return dot.str();
}

std::string realization_graph_dot(const RealizationGraph& rg) {
  std::ostringstream dot;
  dot << "graph realizations {\n";
  for (std::size_t i = 0; i < rg.vertex_count(); ++i) {
    dot << "  r" << i << " [label=\"" << edge_code(rg.vertex(i)) << "\"];\n";
  }
  for (std::size_t i = 0; i < rg.vertex_count(); ++i) {
    for (const Arc& a : rg.arcs(i)) {
      if (a.target > i) {
        dot << "  r" << i << " -- r" << a.target << " [label=\"" << to_string(a.sw) << "\"];\n";
      }
    }
  }
  dot << "}\n";
  return dot.str();
}

std::string trace_dot(const SwitchSequence& seq) {
  std::ostringstream dot;
  dot << "digraph trace {\n";
  for (std::size_t i = 0; i < seq.trace.size(); ++i) {
    std::string edges;
    for (const Edge& e : seq.trace[i].edges()) {
      if (!edges.empty()) edges += " ";
      edges += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    dot << "  s" << i << " [shape=box,label=\"" << edges << "\"];\n";
  }
  for (std::size_t i = 0; i < seq.switches.size(); ++i) {
    dot << "  s" << i << " -> s" << i + 1 << " [label=\"" << to_string(seq.switches[i])
        << "\"];\n";
  }
  dot << "}\n";
  return dot.str();
}

Outcome do_realize(const CliConfig& c) {
  const DegreeVector d = degree_of(c);
  const std::vector<LabeledGraph> graphs = enumerate_realizations(d, c.filter, c.enumeration_budget);
  Json j = header("realize");
  j["degree"] = degree_json(d);
  j["filter"] = to_string(c.filter);
  j["count"] = graphs.size();
  if (!c.count_only) {
    Json list = Json::array();
    for (const LabeledGraph& g : graphs) list.push_back(graph_json(g));
    j["graphs"] = std::move(list);
  }
  return {std::move(j), 0};
}

Outcome do_classify(const CliConfig& c) {
  const LabeledGraph g = read_graph_file(input(c, 0));
  if (c.switch_vertices.size() != 4) throw ParseError("classify needs four vertices a b c d");
  const TwoSwitch s{c.switch_vertices[0], c.switch_vertices[1], c.switch_vertices[2],
                    c.switch_vertices[3]};
  const bool valid = is_valid(g, s);
  const SwitchVerdict verdict = classify(g, s);
  Json j = header("classify");
  j["switch"] = switch_json(s);
  j["valid"] = valid;
  j["preserves"] = verdict.preserves;
  j["kind"] = to_string(verdict.kind);
  j["reason"] = verdict.reason;
  return {std::move(j), 0};
}

Outcome do_transit(const CliConfig& c) {
  const LabeledGraph source = read_graph_file(input(c, 0));
  const LabeledGraph target = read_graph_file(input(c, 1));
  const bool forests = is_forest(source) && is_forest(target);
  const SwitchSequence seq = forests
                                 ? forest_transition(source, target)
                                 : pseudoforest_transition(source, target, c.bridge_budget);
  Json j = header("transit");
  j["family"] = forests ? "forest" : "pseudoforest";
  j["length"] = seq.length();
  j["edge_difference"] = check_edge_difference(source, target);
  // The length bound is only established for forests.
  j["bound"] = forests ? Json(forest_transition_bound(source, target)) : Json(nullptr);
  j["within_bound"] = !forests || static_cast<int>(seq.length()) <= forest_transition_bound(source, target);
  j["trace_valid"] = trace_valid(seq, source, target, forests ? is_forest : is_pseudoforest);
  Json switches = Json::array();
  for (const TwoSwitch& s : seq.switches) switches.push_back(switch_json(s));
  j["switches"] = std::move(switches);
  Json trace = Json::array();
  for (const LabeledGraph& g : seq.trace) trace.push_back(edge_code(g));
  j["trace"] = std::move(trace);
  if (!c.dot_path.empty()) write_text_file(c.dot_path, trace_dot(seq));
  return {std::move(j), 0};
}

Outcome do_explore(const CliConfig& c) {
  const DegreeVector d = degree_of(c);
  const RealizationGraph rg = build_realization_graph(d, c.filter, c.enumeration_budget);
  const ExplorationReport r = connectivity(rg, c.with_diameter);
  Json j = header("explore");
  j["degree"] = degree_json(d);
  j["filter"] = to_string(c.filter);
  j["vertex_count"] = r.vertex_count;
  j["edge_count"] = r.edge_count;
  j["component_count"] = r.component_count;
  j["component_sizes"] = r.component_sizes;
  j["diameter_of_largest"] = optional_json(r.diameter_of_largest);
  if (!c.dot_path.empty()) write_text_file(c.dot_path, realization_graph_dot(rg));
  return {std::move(j), 0};
}

Outcome do_param(const CliConfig& c) {
  const LabeledGraph g = read_graph_file(input(c, 0));
  std::vector<ParamId> ids = c.params;
  if (ids.empty()) ids.assign(all_params().begin(), all_params().end());
  Json values = Json::object();
  Json undefined = Json::array();
  for (ParamId p : ids) {
    const auto v = try_evaluate(g, p);
    values[to_string(p)] = optional_json(v);
    if (!v) undefined.push_back(to_string(p));
  }
  Json j = header("param");
  j["graph"] = graph_json(g);
  j["values"] = std::move(values);
  j["undefined"] = std::move(undefined);
  return {std::move(j), 0};
}

Json report_json(const RealizationGraph& rg, const ParamReport& r, bool with_values) {
  Json j;
  j["param"] = to_string(r.param);
  j["proven_stable"] = proven_stable(r.param, r.filter);
  j["realization_count"] = r.values.size();
  j["excluded_count"] = r.excluded_count;
  j["edges_checked"] = r.edges_checked;
  j["min"] = optional_json(r.min);
  j["max"] = optional_json(r.max);
  j["max_jump"] = r.max_jump;
  j["is_stable"] = r.is_stable;
  if (r.witness) {
    const StabilityWitness& w = *r.witness;
    j["witness"] = {{"graph", graph_json(w.graph)},
                    {"switch", switch_json(w.sw)},
                    {"image", graph_json(apply(w.graph, w.sw))},
                    {"before", w.before},
                    {"after", w.after},
                    {"delta", w.delta()}};
  } else {
    j["witness"] = nullptr;
  }
  j["attained"] = r.attained;
  j["missing_values"] = r.missing_values;
  j["has_interval_property"] = r.has_interval_property;
  j["domain_connected"] = r.domain_connected;
  if (with_values) {
    Json values = Json::array();
    for (std::size_t i = 0; i < r.values.size(); ++i) {
      values.push_back({edge_code(rg.vertex(i)), optional_json(r.values[i])});
    }
    j["values"] = std::move(values);
  }
  return j;
}

Outcome do_stability(const CliConfig& c, bool interval_only) {
  const DegreeVector d = degree_of(c);
  const std::vector<ParamId> ids = params_of(c);
  const RealizationGraph rg = build_realization_graph(d, c.filter, c.enumeration_budget);
  Json reports = Json::array();
  std::vector<std::pair<std::string, StabilityWitness>> witnesses;
  int status = 0;
  for (ParamId p : ids) {
    const ParamReport r = check_stability(rg, p);
    if (interval_only) {
      Json j;
      j["param"] = to_string(p);
      j["attained"] = r.attained;
      j["min"] = optional_json(r.min);
      j["max"] = optional_json(r.max);
      j["missing_values"] = r.missing_values;
      j["has_interval_property"] = check_interval_property(r);
      j["is_stable"] = r.is_stable;
      j["domain_connected"] = r.domain_connected;
      reports.push_back(std::move(j));
    } else {
      reports.push_back(report_json(rg, r, c.with_values));
    }
    if (r.witness) witnesses.emplace_back(to_string(p), *r.witness);
    if (!r.is_stable && proven_stable(p, c.filter)) status = 2;
  }
  Json j = header(interval_only ? "interval" : "stability");
  j["degree"] = degree_json(d);
  j["filter"] = to_string(c.filter);
  j["realization_count"] = rg.vertex_count();
  j["reports"] = std::move(reports);
  if (!c.witness_dot_path.empty()) write_text_file(c.witness_dot_path, witness_dot(witnesses));
  return {std::move(j), status};
}

Outcome do_distance(const CliConfig& c) {
  const LabeledGraph g = read_graph_file(input(c, 0));
  const LabeledGraph h = read_graph_file(input(c, 1));
  const DegreeVector d = degree_vector(g);
  const RealizationGraph rg = build_realization_graph(d, c.filter, c.enumeration_budget);
  const std::optional<int> dist = distance(rg, g, h);
  Json j = header("distance");
  j["degree"] = degree_json(d);
  j["filter"] = to_string(c.filter);
  j["reachable"] = dist.has_value();
  j["distance"] = optional_json(dist);
  return {std::move(j), 0};
}

Outcome do_counterexample(const CliConfig& c) {
  const Counterexample which = parse_counterexample(c.construction);
  const LabeledGraph g = construct_counterexample(which, c.construction_parameter);
  Json j = header("counterexample");
  j["name"] = to_string(which);
  j["parameter"] = c.construction_parameter;
  j["degree"] = degree_json(degree_vector(g));
  j["bipartite"] = is_bipartite(g);
  j["graph"] = graph_json(g);
  if (!c.dot_path.empty()) write_text_file(c.dot_path, to_dot(g, to_string(which)));
  return {std::move(j), 0};
}

Outcome dispatch(const CliConfig& c) {
  if (c.enumeration_budget == 0 || c.bridge_budget == 0) {
    throw RangeError("budgets must be positive");
  }
  if (c.format != "json" && c.format != "text") {
    throw ParseError("unknown report format '" + c.format + "'");
  }
  const std::string& s = c.subcommand;
  if (s == "realize") return do_realize(c);
  if (s == "classify") return do_classify(c);
  if (s == "transit") return do_transit(c);
  if (s == "explore") return do_explore(c);
  if (s == "param") return do_param(c);
  if (s == "stability") return do_stability(c, false);
  if (s == "interval") return do_stability(c, true);
  if (s == "distance") return do_distance(c);
  if (s == "counterexample") return do_counterexample(c);
  throw ParseError("unknown subcommand '" + s + "'");
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render_text(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void print_error(std::ostream& out, std::string_view kind, std::string_view message) {
  Json j;
  j["schema"] = kSchema;
  j["error"] = {{"kind", kind}, {"message", message}};
  out << j.dump() << "\n";
}

}  // namespace

int run(const CliConfig& config, std::ostream& out) {
  if (config.verify) set_verification(*config.verify);
  try {
    const Outcome outcome = dispatch(config);
    if (config.format == "text") {
      render_text(outcome.report, "", out);
    } else {
      out << outcome.report.dump(2) << "\n";
    }
    return outcome.status;
  } catch (const Error& e) {
    print_error(out, to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    print_error(out, to_string(ErrorKind::budget), "out of memory");
    return exit_code(ErrorKind::budget);
  }
}

int main(const std::vector<std::string>& args, std::ostream& out) {
  CliConfig config;
  CLI::App app{"Degree-preserving 2-switch laboratory", "switchlab"};
  app.require_subcommand(1);
  // Subcommands hand unknown options such as --report back to the parent.
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string filter = "all";
  std::vector<std::string> params;
  std::string verify;
  std::string first_graph;
  std::string second_graph;
  app.add_option("--report", config.format, "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--verify", verify, "Cross-check fast paths against brute force: on or off")
      ->check(CLI::IsMember({"on", "off"}));

  auto add_degree = [&](CLI::App* sub) {
    sub->add_option("--d", config.degree_expression,
                    "Degree vector: \"1,1,2,2\" or \"3^1,2^6,1^3\"")
        ->required();
  };
  auto add_filter = [&](CLI::App* sub) {
    sub->add_option("--filter", filter,
                    "all, forest, connected, unicyclic, pseudoforest, bipartite or nonbipartite");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", config.enumeration_budget, "Maximum number of realizations");
  };

  CLI::App* realize = app.add_subcommand("realize", "List labeled realizations");
  add_degree(realize);
  add_filter(realize);
  add_budget(realize);
  realize->add_flag("--count-only", config.count_only, "Print only the number of graphs");

  CLI::App* classify_cmd = app.add_subcommand("classify", "Classify a 2-switch on a graph");
  classify_cmd->add_option("graph", first_graph, "Graph file")->required();
  classify_cmd->add_option("vertices", config.switch_vertices, "Switch vertices a b c d")
      ->required()
      ->expected(4);

  CLI::App* transit = app.add_subcommand("transit", "Switch sequence between two graphs");
  transit->add_option("source", first_graph, "Source graph file")->required();
  transit->add_option("target", second_graph, "Target graph file")->required();
  transit->add_option("--dot", config.dot_path, "Write the trace as DOT");
  transit->add_option("--bridge-budget", config.bridge_budget,
                      "Maximum BFS expansions for the unicyclic bridge");

  CLI::App* explore = app.add_subcommand("explore", "Connectivity of a realization graph");
  add_degree(explore);
  add_filter(explore);
  add_budget(explore);
  explore->add_flag("--diameter", config.with_diameter, "Also compute the largest component's diameter");
  explore->add_option("--dot", config.dot_path, "Write the realization graph as DOT");

  CLI::App* param = app.add_subcommand("param", "Evaluate graph parameters");
  param->add_option("graph", first_graph, "Graph file")->required();
  param->add_option("--param", params, "Parameter ids (default: all)")->delimiter(',');

  for (const auto& [name, text] :
       {std::pair{"stability", "Stability report over a realization graph"},
        std::pair{"interval", "Interval property over a realization graph"}}) {
    CLI::App* sub = app.add_subcommand(name, text);
    add_degree(sub);
    add_filter(sub);
    add_budget(sub);
    sub->add_option("--param", params, "Parameter ids")->required()->delimiter(',');
    if (std::string_view(name) == "stability") {
      sub->add_flag("--values", config.with_values, "Include every realization's value");
      sub->add_option("--witness-dot", config.witness_dot_path, "Write witnesses as DOT");
    }
  }

  CLI::App* dist = app.add_subcommand("distance", "Switch distance between two graphs");
  dist->add_option("first", first_graph, "First graph file")->required();
  dist->add_option("second", second_graph, "Second graph file")->required();
  add_filter(dist);
  add_budget(dist);

  CLI::App* counter = app.add_subcommand("counterexample", "Build B, Bprime, N or Nprime");
  counter->add_option("name", config.construction, "B, Bprime, N or Nprime")->required();
  counter->add_option("parameter", config.construction_parameter, "n for B, k for N")
      ->required();
  counter->add_option("--dot", config.dot_path, "Write the graph as DOT");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    config.subcommand = app.get_subcommands().front()->get_name();
    for (const std::string* path : {&first_graph, &second_graph}) {
      if (!path->empty()) config.inputs.push_back(*path);
    }
    config.filter = parse_filter(filter);
    for (const std::string& p : params) config.params.push_back(parse_param(p));
    if (!verify.empty()) config.verify = verify == "on";
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    print_error(out, to_string(ErrorKind::parse), e.what());
    return exit_code(ErrorKind::parse);
  } catch (const Error& e) {
    print_error(out, to_string(e.kind()), e.what());
    return exit_code(e.kind());
  }
  return run(config, out);
}

}  // namespace switchlab::cli
