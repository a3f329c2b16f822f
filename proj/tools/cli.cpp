#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "covermeasure/asymptotics/counting.hpp"
#include "covermeasure/asymptotics/ensemble.hpp"
#include "covermeasure/asymptotics/patterson_sullivan.hpp"
#include "covermeasure/core/error.hpp"
#include "covermeasure/core/rational.hpp"
#include "covermeasure/graph/automorphism.hpp"
#include "covermeasure/graph/canonical.hpp"
#include "covermeasure/graph/enumerate.hpp"
#include "covermeasure/invariants/functionals.hpp"
#include "covermeasure/invariants/pants.hpp"
#include "covermeasure/invariants/systole.hpp"
#include "covermeasure/measure/integrate_exact.hpp"
#include "covermeasure/measure/integrate_mc.hpp"
#include "covermeasure/measure/lattice.hpp"
#include "covermeasure/measure/mixture.hpp"
#include "covermeasure/measure/sampler.hpp"

namespace covermeasure::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string precision = "double";

  bool high_precision() const { return precision == "high"; }
};

/// What a command produces: a list of records plus optional summary.
struct Output {
  std::string command;
  Json parameters = Json::object();
  Json records = Json::array();
  Json summary = Json::object();
};

Json integer_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return n.convert_to<std::int64_t>();
  }
  return n.str();
}

// Float rendering under `name` (default "value") plus the exact fraction
// under <name>_exact_numerator / <name>_exact_denominator.
void put_exact(Json& j, const Rational& q, const std::string& name = "") {
  const std::string prefix = name.empty() ? "" : name + "_";
  j[name.empty() ? "value" : name] = to_double(q);
  j[prefix + "exact_numerator"] = integer_json(boost::multiprecision::numerator(q));
  j[prefix + "exact_denominator"] = integer_json(boost::multiprecision::denominator(q));
}

std::string decimal(const HighPrecision& x) { return x.str(40, std::ios_base::scientific); }

// Shortest round-trip decimal, as in the JSON output.
std::string format_double(double x) { return Json(x).dump(); }

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream stream(text);
  while (std::getline(stream, current, separator)) parts.push_back(current);
  return parts;
}

std::vector<double> parse_doubles(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  for (const auto& part : split(text, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "not a number: '" + part + "'");
    }
  }
  if (values.empty()) throw CLI::ValidationError(flag, "empty list");
  return values;
}

std::vector<Rational> parse_rationals(const std::string& text, const std::string& flag) {
  std::vector<Rational> values;
  for (const auto& part : split(text, ',')) {
    try {
      values.push_back(parse_rational(part));
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "not a rational number: '" + part + "'");
    }
  }
  if (values.empty()) throw CLI::ValidationError(flag, "empty list");
  return values;
}

Json graph_record(const TrivalentGraph& graph) {
  const SymmetryData symmetry = symmetry_data(graph);
  Json j;
  j["graph_id"] = graph_id(graph);
  j["name"] = common_name(graph);
  j["rank"] = graph.rank();
  j["vertices"] = graph.vertex_count();
  j["edges"] = graph.edge_count();
  j["aut_order"] = symmetry.aut_order;
  j["triv_order"] = symmetry.triv_order;
  j["edge_action_order"] = symmetry.edge_group.size();
  j["bridges"] = bridges(graph);
  j["text"] = graph.to_text();
  return j;
}

TrivalentGraph graph_with_rank(const std::string& id, std::optional<int> rank) {
  TrivalentGraph graph = graph_from_id(id);
  if (rank && graph.rank() != *rank) {
    throw Error(ErrorCode::InvalidGraph, "graph " + id + " has rank " + std::to_string(graph.rank()));
  }
  return graph;
}

// ----- rendering -----

std::string csv_cell(const Json& value) {
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else if (value.is_number_float()) {
    text = format_double(value.get<double>());
  } else if (value.is_array() && std::all_of(value.begin(), value.end(), [](const Json& v) { return v.is_primitive(); })) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i) text += ';';
      text += value[i].is_number_float() ? format_double(value[i].get<double>()) : value[i].dump();
    }
  } else {
    text = value.dump();
  }
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void render(const Output& output, const Config& config, std::ostream& out) {
  if (config.format == "json") {
    Json document;
    document["command"] = output.command;
    document["parameters"] = output.parameters;
    document["records"] = output.records;
    if (!output.summary.empty()) document["summary"] = output.summary;
    out << document.dump(2) << '\n';
    return;
  }
  if (config.format == "csv") {
    std::vector<std::string> columns;
    for (const auto& record : output.records) {
      for (const auto& item : record.items()) {
        if (std::find(columns.begin(), columns.end(), item.key()) == columns.end()) columns.push_back(item.key());
      }
    }
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
    out << '\n';
    for (const auto& record : output.records) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out << ',';
        if (record.contains(columns[c])) out << csv_cell(record[columns[c]]);
      }
      out << '\n';
    }
    return;
  }
  for (const auto& record : output.records) {
    if (record.contains("text")) {
      out << record["text"].get<std::string>() << '\n';
      continue;
    }
    bool first = true;
    for (const auto& item : record.items()) {
      out << (first ? "" : " ") << item.key() << '=' << csv_cell(item.value());
      first = false;
    }
    out << '\n';
  }
  for (const auto& item : output.summary.items()) out << "# " << item.key() << '=' << csv_cell(item.value()) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Limit measure on the moduli space of metric graphs", "covermeasure"};
  app.fallthrough();
  app.require_subcommand(1);
  Config config;
  app.add_option("--seed", config.seed, "Random seed (default 0)");
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--precision", config.precision, "Floating-point precision for asymptotic formulas")
      ->check(CLI::IsMember({"double", "high"}));

  Output output;
  std::function<void()> action;

  // graphs enumerate
  auto* graphs = app.add_subcommand("graphs", "Trivalent graph types")->require_subcommand(1);
  int rank = 0;
  auto* enumerate = graphs->add_subcommand("enumerate", "List rank-k types up to isomorphism");
  enumerate->add_option("--rank", rank, "Rank k")->required();
  enumerate->callback([&] {
    action = [&] {
      output.command = "graphs enumerate";
      output.parameters["rank"] = rank;
      for (const auto& graph : enumerate_trivalent(rank)) output.records.push_back(graph_record(graph));
    };
  });

  // measure weights | lattice
  auto* measure = app.add_subcommand("measure", "The limit measure and its lattice approximations")->require_subcommand(1);
  auto* weights = measure->add_subcommand("weights", "Block weights of m_k");
  weights->add_option("--rank", rank, "Rank k")->required();
  weights->callback([&] {
    action = [&] {
      output.command = "measure weights";
      output.parameters["rank"] = rank;
      const auto mixture = build_limit_measure(rank);
      for (const auto& wb : mixture.blocks) {
        Json j;
        j["graph_id"] = wb.block.graph_id;
        j["name"] = common_name(*wb.block.graph);
        put_exact(j, wb.weight);
        j["aut_order"] = wb.block.aut_order;
        j["triv_order"] = wb.block.triv_order;
        put_exact(j, wb.block.mass, "mass");
        output.records.push_back(std::move(j));
      }
      put_exact(output.summary, mixture.normalization, "normalization");
    };
  });

  std::string graph_id_arg;
  int lattice_n = 0;
  auto* lattice = measure->add_subcommand("lattice", "Atoms of the lattice measure sigma_X^N");
  lattice->add_option("--rank", rank, "Rank k")->required();
  lattice->add_option("--graph", graph_id_arg, "Canonical graph id")->required();
  lattice->add_option("--N", lattice_n, "Lattice resolution")->required()->check(CLI::NonNegativeNumber);
  lattice->callback([&] {
    action = [&] {
      output.command = "measure lattice";
      output.parameters["rank"] = rank;
      output.parameters["graph"] = graph_id_arg;
      output.parameters["N"] = lattice_n;
      const SimplexBlock block = make_block(graph_with_rank(graph_id_arg, rank));
      const auto orbits = lattice_points(block, lattice_n);
      const auto sigma = lattice_sigma(block, lattice_n);
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        Json j;
        j["graph_id"] = block.graph_id;
        j["representative"] = orbits[i].representative;
        j["multiplicity"] = orbits[i].multiplicity;
        Json lengths = Json::array();
        for (const auto& x : sigma.atoms[i].point.lengths()) lengths.push_back(to_double(x));
        j["lengths"] = lengths;
        put_exact(j, sigma.atoms[i].weight);
        output.records.push_back(std::move(j));
      }
      put_exact(output.summary, sigma.total_mass(), "total_mass");
    };
  });

  // expect
  std::string functional_name;
  std::string method = "exact";
  std::size_t samples = 1000000;
  auto* expect = app.add_subcommand("expect", "Expectation of a functional under m_k");
  expect->add_option("--rank", rank, "Rank k")->required();
  expect->add_option("--functional", functional_name, "Functional")
      ->required()
      ->check(CLI::IsMember(functional_names()));
  expect->add_option("--method", method, "exact or mc")->check(CLI::IsMember({"exact", "mc"}));
  expect->add_option("--samples", samples, "Monte Carlo sample count");
  expect->callback([&] {
    action = [&] {
      output.command = "expect";
      output.parameters["rank"] = rank;
      output.parameters["functional"] = functional_name;
      output.parameters["method"] = method;
      const auto mixture = build_limit_measure(rank);
      const Functional f = functional_by_name(functional_name);
      Json j;
      j["graph_id"] = "mixture";
      j["functional"] = functional_name;
      j["method"] = method;
      Json blocks = Json::array();
      if (method == "exact") {
        const auto result = expectation(mixture, f);
        j["estimate"] = to_double(result.value);
        j["stderr"] = 0.0;
        put_exact(j, result.value);
        for (const auto& b : result.blocks) {
          Json block;
          block["graph_id"] = b.graph_id;
          block["name"] = common_name(*mixture.find(b.graph_id)->block.graph);
          put_exact(block, b.weight, "weight");
          put_exact(block, b.integral.normalized, "block_expectation");
          put_exact(block, b.integral.sigma_integral, "sigma_integral");
          blocks.push_back(std::move(block));
        }
      } else {
        output.parameters["samples"] = samples;
        output.parameters["seed"] = config.seed;
        const auto result = integrate_mc(mixture, f, samples, config.seed);
        j["estimate"] = result.estimate;
        j["stderr"] = result.standard_error;
        j["samples"] = result.samples;
        for (std::size_t b = 0; b < mixture.blocks.size(); ++b) {
          Json block;
          block["graph_id"] = mixture.blocks[b].block.graph_id;
          block["name"] = common_name(*mixture.blocks[b].block.graph);
          block["count"] = result.block_counts[b];
          block["frequency"] = static_cast<double>(result.block_counts[b]) / static_cast<double>(samples);
          blocks.push_back(std::move(block));
        }
      }
      j["blocks"] = blocks;
      output.records.push_back(std::move(j));
    };
  });

  // sample
  std::size_t count = 1;
  auto* sample_cmd = app.add_subcommand("sample", "Draw points of m_k");
  sample_cmd->add_option("--rank", rank, "Rank k")->required();
  sample_cmd->add_option("--count", count, "Number of points")->required()->check(CLI::PositiveNumber);
  sample_cmd->callback([&] {
    action = [&] {
      output.command = "sample";
      output.parameters["rank"] = rank;
      output.parameters["count"] = count;
      output.parameters["seed"] = config.seed;
      const auto mixture = build_limit_measure(rank);
      for (const auto& point : sample_many(mixture, count, config.seed)) {
        Json j;
        j["graph_id"] = graph_id(point.graph());
        j["name"] = common_name(point.graph());
        j["lengths"] = std::vector<double>(point.lengths().begin(), point.lengths().end());
        output.records.push_back(std::move(j));
      }
    };
  });

  // invariant systole|bridge|minedge
  std::string lengths_arg;
  auto* invariant = app.add_subcommand("invariant", "Evaluate a functional on one metric graph")->require_subcommand(1);
  for (const auto& name : functional_names()) {
    auto* sub = invariant->add_subcommand(name, "Evaluate " + name);
    sub->add_option("--graph", graph_id_arg, "Canonical graph id")->required();
    sub->add_option("--lengths", lengths_arg, "Comma-separated edge lengths in canonical edge order")->required();
    sub->callback([&, name] {
      action = [&, name] {
        output.command = "invariant " + name;
        output.parameters["graph"] = graph_id_arg;
        output.parameters["lengths"] = lengths_arg;
        const auto graph = std::make_shared<const TrivalentGraph>(graph_with_rank(graph_id_arg, std::nullopt));
        const ExactMetricGraph point(graph, parse_rationals(lengths_arg, "--lengths"));
        Rational value;
        if (name == "systole") {
          value = systole<Rational>(*graph, point.lengths());
        } else if (name == "minedge") {
          value = min_edge_length<Rational>(point.lengths());
        } else {
          value = separating_edge_indicator(*graph) ? 1 : 0;
        }
        Json j;
        j["graph_id"] = graph_id_arg;
        j["name"] = common_name(*graph);
        j["functional"] = name;
        put_exact(j, value);
        output.records.push_back(std::move(j));
      };
    });
  }

  // pants ortho
  std::string boundaries_arg;
  bool with_oracle = false;
  auto* pants = app.add_subcommand("pants", "Pair of pants geometry")->require_subcommand(1);
  auto* ortho = pants->add_subcommand("ortho", "Separating orthogeodesic length");
  ortho->add_option("--boundaries", boundaries_arg, "l1,l2,l3")->required();
  ortho->add_flag("--oracle", with_oracle, "Also evaluate the matrix-model oracle");
  ortho->callback([&] {
    action = [&] {
      output.command = "pants ortho";
      output.parameters["boundaries"] = boundaries_arg;
      const auto l = parse_doubles(boundaries_arg, "--boundaries");
      if (l.size() != 3) throw CLI::ValidationError("--boundaries", "expected three lengths");
      const PantsBoundary b(l[0], l[1], l[2]);
      Json j;
      j["l1"] = b.l1;
      j["l2"] = b.l2;
      j["l3"] = b.l3;
      j["value"] = separating_orthogeodesic_length(b);
      if (with_oracle) {
        j["oracle"] = matrix_pants_oracle(b);
        j["difference"] = std::fabs(j["value"].get<double>() - j["oracle"].get<double>());
      }
      output.records.push_back(std::move(j));
    };
  });

  // count subgroups | crit
  int genus = 0;
  double L = 0;
  auto* count_cmd = app.add_subcommand("count", "Asymptotic counting formulas")->require_subcommand(1);
  auto* subgroups = count_cmd->add_subcommand("subgroups", "c_{g,k} L^{3k-4} e^L");
  subgroups->add_option("--genus", genus, "Genus g")->required();
  subgroups->add_option("--rank", rank, "Rank k")->required();
  subgroups->add_option("--L", L, "Length")->required();
  subgroups->callback([&] {
    action = [&] {
      output.command = "count subgroups";
      output.parameters["genus"] = genus;
      output.parameters["rank"] = rank;
      output.parameters["L"] = L;
      const CountingModel model(genus, rank);
      Json j;
      j["genus"] = genus;
      j["rank"] = rank;
      put_exact(j, model.aut_reciprocal_sum(), "aut_reciprocal_sum");
      j["c"] = model.c();
      j["c_prime"] = model.c_prime();
      j["unit_tangent_volume"] = model.unit_tangent_volume();
      j["value"] = subgroup_count_asymptotic(model, L);
      j["huber"] = huber_count(L);
      if (config.high_precision()) {
        j["c_decimal"] = decimal(model.c<HighPrecision>());
        j["value_decimal"] = decimal(subgroup_count_asymptotic<HighPrecision>(model, HighPrecision(L)));
      }
      output.records.push_back(std::move(j));
    };
  });
  auto* crit = count_cmd->add_subcommand("crit", "Critical graph maps of one type");
  crit->add_option("--graph", graph_id_arg, "Canonical graph id")->required();
  crit->add_option("--genus", genus, "Genus g")->required();
  crit->add_option("--L", L, "Length")->required();
  crit->callback([&] {
    action = [&] {
      output.command = "count crit";
      output.parameters["graph"] = graph_id_arg;
      output.parameters["genus"] = genus;
      output.parameters["L"] = L;
      const TrivalentGraph graph = graph_with_rank(graph_id_arg, std::nullopt);
      Json j;
      j["graph_id"] = graph_id_arg;
      j["name"] = common_name(graph);
      j["euler_characteristic"] = graph.euler_characteristic();
      j["exponent"] = -3 * graph.euler_characteristic() - 1;
      j["value"] = crit_count_asymptotic(graph, genus, L);
      if (config.high_precision()) {
        j["value_decimal"] = decimal(crit_count_asymptotic<HighPrecision>(graph, genus, HighPrecision(L)));
      }
      output.records.push_back(std::move(j));
    };
  });

  // ps sum | model | converge
  auto* ps = app.add_subcommand("ps", "Patterson-Sullivan series")->require_subcommand(1);
  std::string lengths_file;
  double s = 0;
  double cutoff = std::numeric_limits<double>::infinity();
  auto* ps_sum = ps->add_subcommand("sum", "Partial Poincare sum of a length list");
  ps_sum->add_option("--lengths-file", lengths_file, "One length per line")->required()->check(CLI::ExistingFile);
  ps_sum->add_option("--s", s, "Exponent")->required();
  auto* cutoff_option = ps_sum->add_option("--L", cutoff, "Length cutoff (default: no cutoff)");
  ps_sum->callback([&] {
    action = [&] {
      output.command = "ps sum";
      output.parameters["lengths_file"] = lengths_file;
      output.parameters["s"] = s;
      std::ifstream in(lengths_file);
      std::vector<double> lengths;
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto parsed = parse_doubles(line, "--lengths-file");
        if (parsed.size() != 1 || !(parsed[0] > 0)) throw CLI::ValidationError("--lengths-file", "bad line: " + line);
        lengths.push_back(parsed[0]);
      }
      const bool has_cutoff = cutoff_option->count() > 0;
      if (has_cutoff) output.parameters["L"] = cutoff;
      const double stieltjes_limit =
          has_cutoff ? cutoff : (lengths.empty() ? 0.0 : *std::max_element(lengths.begin(), lengths.end()));
      Json j;
      j["count"] = lengths.size();
      j["value"] = ps_partial_sum(lengths, s, cutoff);
      j["stieltjes"] = ps_via_stieltjes(lengths, s, stieltjes_limit);
      output.records.push_back(std::move(j));
    };
  });
  auto* ps_model = ps->add_subcommand("model", "Poincare series of the counting model");
  ps_model->add_option("--genus", genus, "Genus g")->required();
  ps_model->add_option("--rank", rank, "Rank k")->required();
  ps_model->add_option("--s", s, "Exponent")->required();
  ps_model->callback([&] {
    action = [&] {
      output.command = "ps model";
      output.parameters["genus"] = genus;
      output.parameters["rank"] = rank;
      output.parameters["s"] = s;
      const CountingModel model(genus, rank);
      Json j;
      j["value"] = ps_model_closed_form(model, s);
      if (config.high_precision()) j["value_decimal"] = decimal(ps_model_closed_form<HighPrecision>(model, HighPrecision(s)));
      output.records.push_back(std::move(j));
    };
  });
  double L_max = 0;
  std::string s_list = "1.5,1.1,1.02";
  std::string markers = "lattice";
  std::size_t cap = 100000;
  auto* converge = ps->add_subcommand("converge", "Patterson-Sullivan expectation of the systole on a synthetic ensemble");
  converge->add_option("--genus", genus, "Genus g")->required();
  converge->add_option("--rank", rank, "Rank k")->required();
  converge->add_option("--Lmax", L_max, "Largest length")->required();
  converge->add_option("--s-list", s_list, "Comma-separated exponents");
  converge->add_option("--markers", markers, "lattice or exact")->check(CLI::IsMember({"lattice", "exact"}));
  converge->add_option("--cap", cap, "Maximum ensemble size")->check(CLI::PositiveNumber);
  converge->callback([&] {
    action = [&] {
      output.command = "ps converge";
      output.parameters["genus"] = genus;
      output.parameters["rank"] = rank;
      output.parameters["Lmax"] = L_max;
      output.parameters["seed"] = config.seed;
      output.parameters["markers"] = markers;
      const auto exponents = parse_doubles(s_list, "--s-list");
      const CountingModel model(genus, rank);
      const auto mixture = build_limit_measure(rank);
      const Functional f = systole_functional();
      const Rational exact = expectation(mixture, f).value;
      const EnsembleOptions options{L_max, markers == "exact" ? MarkerMode::Exact : MarkerMode::Lattice, config.seed, cap};
      const auto ensemble = synthesize_ensemble(model, mixture, options);
      for (double exponent : exponents) {
        Json j;
        j["s"] = exponent;
        j["estimate"] = ps_measure_expectation(ensemble, f, exponent);
        put_exact(j, exact, "limit");
        j["error"] = std::fabs(j["estimate"].get<double>() - to_double(exact));
        output.records.push_back(std::move(j));
      }
      output.summary["ensemble_size"] = ensemble.size();
      output.summary["longest"] = ensemble.empty() ? 0.0 : ensemble.back().length;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!action) throw CLI::CallForHelp();
    action();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  render(output, config, out);
  return 0;
}

}  // namespace covermeasure::cli
