#include "unicyclic/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "unicyclic/bounds.hpp"
#include "unicyclic/enumeration.hpp"
#include "unicyclic/errors.hpp"
#include "unicyclic/extremal.hpp"
#include "unicyclic/graph.hpp"
#include "unicyclic/indices.hpp"
#include "unicyclic/text.hpp"
#include "unicyclic/verification.hpp"

namespace unicyclic {

namespace {

enum class Output { text, tabular };

struct Config {
  double tolerance = kDefaultTolerance;
  std::string alpha;
  std::string base;
  Output output = Output::text;
  unsigned jobs = 0;
  std::optional<int> max_degree;
  std::optional<int> pendants;
};

// Exit-code carrying failure for problems found after parsing succeeded.
struct Failure {
  int code;
  std::string message;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitDomain, path + ": cannot open"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Graph> read_graphs(const std::string& path) {
  try {
    auto graphs = parse_edge_list_stream(read_file(path));
    if (graphs.empty()) throw Failure{kExitDomain, path + ": no graph records"};
    return graphs;
  } catch (const ParseError& e) {
    throw Failure{kExitDomain, path + ": " + e.what()};
  }
}

std::vector<double> alphas_of(const Config& cfg) { return cfg.alpha.empty() ? std::vector<double>{} : parse_real_list(cfg.alpha); }
std::vector<double> bases_of(const Config& cfg) { return cfg.base.empty() ? std::vector<double>{} : parse_real_list(cfg.base); }

AuditOptions audit_options(const Config& cfg) {
  AuditOptions opts;
  opts.tolerance = cfg.tolerance;
  if (!cfg.alpha.empty()) opts.grid.alphas = alphas_of(cfg);
  if (!cfg.base.empty()) opts.grid.bases = bases_of(cfg);
  return opts;
}

// Bare "M1a", "M2a" and "SEI" take their parameters from --alpha / --a.
std::vector<Objective> expand_indices(const std::string& list, const Config& cfg) {
  std::vector<Objective> out;
  for (const auto& raw : split(list, ',')) {
    std::string token = raw;
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) throw ParameterError("empty index name in '" + list + "'");
    if (token == "M1a" || token == "M2a") {
      const auto alphas = alphas_of(cfg);
      if (alphas.empty()) throw ParameterError(token + " needs --alpha or " + token + ":<alpha>");
      for (double a : alphas) out.emplace_back(token == "M1a" ? IndexSpec::m1_alpha(a) : IndexSpec::m2_alpha(a));
    } else if (token == "SEI") {
      const auto bases = bases_of(cfg);
      if (bases.empty()) throw ParameterError("SEI needs --a or SEI:<a>");
      for (double a : bases) out.emplace_back(IndexSpec::sei(a));
    } else {
      out.push_back(parse_objective(token));
    }
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, n};
    }
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw ParameterError("malformed range '" + text + "' (expected N or A..B)");
  }
}

EnumerationFilter filter_of(const Config& cfg) {
  EnumerationFilter f{cfg.max_degree, cfg.pendants};
  f.validate();
  return f;
}

// ---- subcommands -------------------------------------------------------------

int cmd_compute(const std::string& file, const std::string& indices, const Config& cfg, std::ostream& out) {
  const auto objectives = expand_indices(indices, cfg);
  const auto graphs = read_graphs(file);
  if (cfg.output == Output::tabular) out << "graph_id,index,value,mode\n";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (const auto& obj : objectives) {
      IndexValue v;
      try {
        v = eval(obj, graphs[i]);
      } catch (const DomainError& e) {
        throw Failure{kExitDomain, file + ": graph " + std::to_string(i) + ": " + e.what()};
      }
      if (cfg.output == Output::tabular) {
        out << i << ',' << name(obj) << ',' << v.to_decimal() << ',' << to_string(v.mode()) << '\n';
      } else {
        out << "graph " << i << ' ' << name(obj) << " = " << v.to_string();
        if (v.mode() == IndexValue::Mode::exact_rational && v.to_string() != v.to_decimal()) {
          out << " = " << v.to_decimal();
        }
        out << " [" << to_string(v.mode()) << "]\n";
      }
    }
  }
  return kExitOk;
}

int cmd_audit(const std::string& file, const Config& cfg, std::ostream& out) {
  const auto graphs = read_graphs(file);
  const auto opts = audit_options(cfg);
  bool clean = true;
  if (cfg.output == Output::tabular) out << kAuditTabularHeader << '\n';
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    AuditReport report;
    try {
      report = audit(graphs[i], opts);
    } catch (const DomainError& e) {
      throw Failure{kExitDomain, file + ": graph " + std::to_string(i) + ": " + e.what()};
    }
    clean = clean && report.clean();
    const auto id = std::to_string(i);
    out << (cfg.output == Output::tabular ? render_tabular(report, id) : render_text(report, id));
  }
  return clean ? kExitOk : kExitVerification;
}

int cmd_verify(const std::string& range, const Config& cfg, std::ostream& out) {
  VerifyOptions opts;
  std::tie(opts.n_min, opts.n_max) = parse_range(range);
  opts.filter = filter_of(cfg);
  opts.audit = audit_options(cfg);
  opts.jobs = cfg.jobs;
  const auto report = run_verification(opts);
  out << (cfg.output == Output::tabular ? render_tabular(report) : render_text(report));
  return report.clean() ? kExitOk : kExitVerification;
}

int cmd_enumerate(int n, const Config& cfg, std::ostream& out) {
  const auto graphs = enumerate_unicyclic(n, filter_of(cfg));
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    if (i) out << '\n';
    out << "# graph " << i << '\n'
        << "# n=" << g.order() << " Delta=" << max_degree(g) << " p=" << pendant_count(g) << '\n'
        << "# degrees " << degree_sequence(g).to_string() << '\n'
        << "# code " << canonical_code(g).hex() << '\n'
        << serialize_edge_list(g);
  }
  if (graphs.empty()) out << "# empty class\n";
  return kExitOk;
}

void print_entries(const char* label, const std::vector<ExtremalEntry>& entries, const Config& cfg,
                   std::ostream& out) {
  for (const auto& e : entries) {
    if (cfg.output == Output::tabular) {
      out << label << ',' << e.value.to_decimal() << ',' << e.code.hex() << ','
          << '"' << degree_sequence(e.graph).to_string() << "\"\n";
    } else {
      out << "  " << label << ' ' << e.value.to_string() << " code=" << e.code.hex()
          << " degrees=" << degree_sequence(e.graph).to_string() << '\n';
    }
  }
}

int cmd_extremal(const std::string& objective, int n, const Config& cfg, std::ostream& out) {
  const auto obj = expand_indices(objective, cfg);
  if (obj.size() != 1) throw ParameterError("extremal-search takes exactly one objective");
  const auto result = extremal_search(obj.front(), n, filter_of(cfg), cfg.tolerance);
  if (cfg.output == Output::tabular) {
    out << "kind,value,code,degrees\n";
  } else {
    out << name(result.objective) << " n=" << n;
    if (cfg.max_degree) out << " Delta=" << *cfg.max_degree;
    if (cfg.pendants) out << " p=" << *cfg.pendants;
    out << ": " << result.class_size << " graphs";
    if (result.empty()) {
      out << " (empty class)\n";
      return kExitOk;
    }
    out << ", min " << result.minimizers.front().value.to_string() << " (" << result.minimizers.size()
        << "), max " << result.maximizers.front().value.to_string() << " (" << result.maximizers.size() << ")\n";
  }
  print_entries("min", result.minimizers, cfg, out);
  print_entries("max", result.maximizers, cfg, out);
  return kExitOk;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

int cmd_construct(const std::string& family_name, const std::vector<int>& params, std::optional<int> cycle,
                  const std::string& paths, std::ostream& out) {
  const auto fam = lower(family_name);
  auto need = [&](std::size_t k, const char* usage) {
    if (params.size() != k) throw ParameterError(std::string("usage: construct ") + usage);
  };
  if ((cycle || !paths.empty()) && fam != "h") throw ParameterError("--cycle/--paths apply to family H only");

  ExtremalFamily descriptor;
  Graph g(1, {});
  if (fam == "cycle" || fam == "c") {
    need(1, "Cycle n");
    descriptor = family::Cycle{params[0]};
    validate(descriptor);
    g = build_cycle(params[0]);
  } else if (fam == "unthree" || fam == "u") {
    need(1, "UnThree n");
    descriptor = family::UnThree{params[0]};
    validate(descriptor);
    g = build_un3(params[0]);
  } else if (fam == "h") {
    need(2, "H n Delta [--cycle k --paths l1,l2,...]");
    descriptor = family::H{params[0], params[1]};
    validate(descriptor);
    if (cycle || !paths.empty()) {
      if (!cycle || paths.empty()) throw ParameterError("--cycle and --paths must be given together");
      const auto lengths = parse_int_list(paths);
      g = build_H_member(params[0], params[1], *cycle, lengths);
    } else {
      g = build_H_member(params[0], params[1]);
    }
  } else if (fam == "k") {
    need(2, "K n Delta");
    descriptor = family::K{params[0], params[1]};
    validate(descriptor);
    g = build_K_member(params[0], params[1]);
  } else if (fam == "b" || fam == "seqb") {
    need(2, "B n p");
    descriptor = family::SeqB{params[0], params[1]};
    validate(descriptor);
    g = build_b_member(params[0], params[1]);
  } else if (fam == "a" || fam == "seqa") {
    need(2, "A n p");
    descriptor = family::SeqA{params[0], params[1]};
    validate(descriptor);
    throw ParameterError("no constructor for " + to_string(descriptor) + " (defining sequence " +
                         defining_sequence(descriptor).to_string() +
                         "); use extremal-search or enumerate --pendants to find members");
  } else {
    throw ParameterError("unknown family '" + family_name + "' (Cycle, UnThree, H, K, B, A)");
  }
  out << "# family " << to_string(descriptor) << '\n'
      << "# degrees " << degree_sequence(g).to_string() << '\n'
      << "# defining " << defining_sequence(descriptor).to_string() << '\n'
      << serialize_edge_list(g);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree-based topological indices of unicyclic graphs: bounds, audits, enumeration"};
  app.require_subcommand(1);
  Config cfg;

  const std::map<std::string, Output> outputs{{"text", Output::text}, {"tabular", Output::tabular}};
  auto add_tolerance = [&](CLI::App* sub) {
    sub->add_option("--tolerance", cfg.tolerance, "relative float tolerance")->check(CLI::PositiveNumber);
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "comma-separated alpha values (use --alpha=-1,2 for negatives)");
    sub->add_option("--a", cfg.base, "comma-separated SEI bases a; e^x is accepted");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "text or tabular")->transform(CLI::CheckedTransformer(outputs));
  };
  auto add_filter = [&](CLI::App* sub) {
    sub->add_option("--max-degree", cfg.max_degree, "keep graphs with this maximum degree");
    sub->add_option("--pendants", cfg.pendants, "keep graphs with this many pendant vertices");
  };

  std::string file, indices, range, objective, family_name, paths;
  int n = 0;
  std::vector<int> params;
  std::optional<int> cycle;

  auto* compute = app.add_subcommand("compute", "evaluate indices on every graph in FILE ('-' for stdin)");
  compute->add_option("file", file)->required();
  compute->add_option("indices", indices, "e.g. M1,F,ID,NK,NK*,SEI:2,M1a:0.5,I:exdeg:2,II:self_power")->required();
  add_grid(compute);
  add_output(compute);

  auto* audit_cmd = app.add_subcommand("audit", "check every applicable bound on every graph in FILE");
  audit_cmd->add_option("file", file)->required();
  add_tolerance(audit_cmd);
  add_grid(audit_cmd);
  add_output(audit_cmd);

  auto* verify = app.add_subcommand("verify", "audit every unicyclic graph for n in RANGE (N or A..B)");
  verify->add_option("range", range)->required();
  add_tolerance(verify);
  add_grid(verify);
  add_output(verify);
  add_filter(verify);
  verify->add_option("--jobs", cfg.jobs, "worker threads, 0 = all cores");

  auto* enumerate = app.add_subcommand("enumerate", "list unicyclic graphs on N vertices up to isomorphism");
  enumerate->add_option("n", n)->required();
  add_filter(enumerate);

  auto* search = app.add_subcommand("extremal-search", "minimum and maximum of OBJECTIVE over the class");
  search->add_option("objective", objective)->required();
  search->add_option("n", n)->required();
  add_tolerance(search);
  add_grid(search);
  add_output(search);
  add_filter(search);

  auto* construct = app.add_subcommand("construct", "build an extremal graph: Cycle n | UnThree n | H n D | K n D | B n p");
  construct->add_option("family", family_name)->required();
  construct->add_option("params", params)->required();
  construct->add_option("--cycle", cycle, "cycle length for H");
  construct->add_option("--paths", paths, "comma-separated path lengths for H");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(file, indices, cfg, out);
    if (*audit_cmd) return cmd_audit(file, cfg, out);
    if (*verify) return cmd_verify(range, cfg, out);
    if (*enumerate) return cmd_enumerate(n, cfg, out);
    if (*search) return cmd_extremal(objective, n, cfg, out);
    if (*construct) return cmd_construct(family_name, params, cycle, paths, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace unicyclic
