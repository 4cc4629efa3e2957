#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "actcond/errors.hpp"
#include "actcond/parser.hpp"

namespace actcond::cli {

namespace {

struct Options {
  std::string base_file;
  std::string session_file;
  std::string query;
  std::string theta = "2.3";
  std::string delta = "0.2";
  std::string schedule;
  std::string format = "table";
  std::size_t depth = 0;
  bool no_forget = false;
  bool exact = false;
  bool trace = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BeliefBase load_base(const Options& opt) { return parse_belief_base(read_file(opt.base_file)).base; }

Conditional load_query(const Options& opt, const BeliefBase& base) {
  if (opt.query.empty()) throw Error("a query conditional is required (--query)");
  return parse_conditional(opt.query, "q", base.signature());
}

std::string join(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : " ") + id;
  return out;
}

std::string step_text(std::size_t step) {
  return step == TriggeringLabels::kUnreachedStep ? "∞" : std::to_string(step);
}

// Levels loaded from --session, reset when the file belongs to a different
// version of the belief base.
struct LoadedSession {
  ActivationState state;
  SessionMeta meta;
  bool was_reset = false;
};

LoadedSession load_session(const Options& opt, const KnowledgeBase& kb, std::ostream& err) {
  LoadedSession loaded{{kb.initial_levels(), 0}, {kb.fingerprint(), 0}, false};
  if (opt.session_file.empty() || !std::filesystem::exists(opt.session_file)) return loaded;

  SessionDocument doc = parse_session_document(read_file(opt.session_file));
  if (!doc.meta.base_fingerprint.empty() && doc.meta.base_fingerprint != kb.fingerprint()) {
    err << "note: belief base changed since the session was written; base levels reset\n";
    loaded.meta.resets = doc.meta.resets + 1;
    loaded.was_reset = true;
    return loaded;
  }
  check_session_ids(doc.state, kb.base());
  loaded.state = std::move(doc.state);
  loaded.meta.resets = doc.meta.resets;
  return loaded;
}

EngineConfig engine_config(const Options& opt) {
  EngineConfig cfg;
  cfg.theta = parse_rational(opt.theta);
  cfg.delta = parse_rational(opt.delta);
  cfg.forgetting_enabled = !opt.no_forget;
  if (!opt.schedule.empty()) {
    std::stringstream ss(opt.schedule);
    for (std::string item; std::getline(ss, item, ',');) cfg.schedule.push_back(parse_rational(item));
  }
  return cfg;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const PartitionResult result = z_partition(load_base(opt));
  if (result.consistent()) {
    out << "consistent\n";
    return kOk;
  }
  out << "inconsistent: " << join(result.stuck) << "\n";
  return kNegative;
}

int cmd_zpartition(const Options& opt, std::ostream& out) {
  const PartitionResult result = z_partition(load_base(opt));
  if (!result.consistent()) {
    out << "inconsistent: " << join(result.stuck) << "\n";
    return kNegative;
  }
  const ZPartition& zp = *result.partition;
  for (std::size_t i = 0; i < zp.layers.size(); ++i) out << i << "\t" << join(zp.layers[i]) << "\n";
  if (!zp.vacuous.empty()) out << "vacuous\t" << join(zp.vacuous) << "\n";
  return kOk;
}

int cmd_activation(const Options& opt, std::ostream& out, std::ostream& err) {
  const KnowledgeBase kb(load_base(opt));
  const Conditional q = load_query(opt, kb.base());
  const Rational theta = parse_rational(opt.theta);
  if (theta < 0) throw RangeError("threshold must be non-negative");
  const LoadedSession session = load_session(opt, kb, err);
  const TriggeringLabels labels = label_network(kb.network(), q);
  const ActivationProfile profile = activation_profile(kb.base(), session.state.base_levels, kb.associations(), labels);
  out << render_activation(kb, profile, theta, opt.format == "tsv", opt.exact);
  return kOk;
}

int cmd_query(const Options& opt, std::ostream& out, std::ostream& err) {
  auto kb = std::make_shared<const KnowledgeBase>(load_base(opt));
  const Conditional q = load_query(opt, kb->base());
  const EngineConfig cfg = engine_config(opt);
  LoadedSession loaded = load_session(opt, *kb, err);
  Session session(kb, loaded.state);

  const QueryResult result = answer_query(session, q, cfg);
  out << to_string(result.response) << "\n";
  for (std::size_t i = 0; i < result.trace.steps.size(); ++i) {
    const auto& step = result.trace.steps[i];
    out << "step\t" << i + 1 << "\t" << to_compact_string(step.theta) << "\t" << to_string(step.response) << "\t"
        << join(step.selected) << "\n";
  }
  if (opt.trace) out << render_trace(result.trace);

  if (result.trace.memory_updated && !opt.session_file.empty()) {
    write_atomically(opt.session_file, serialize_session(session.state(), loaded.meta));
    out << "memory\t" << join(result.trace.memory_selection) << "\n";
  }
  return kOk;
}

int cmd_focus(const Options& opt, std::ostream& out) {
  const BeliefBase base = load_base(opt);
  const Conditional q = load_query(opt, base);
  out << join(iterated_focus(base, q, opt.depth)) << "\n";
  return kOk;
}

int cmd_export_dot(const Options& opt, std::ostream& out) {
  const BeliefBase base = load_base(opt);
  const SpreadingNetwork net = build_network(base);
  if (opt.query.empty()) {
    out << render_dot(net, nullptr);
  } else {
    const TriggeringLabels labels = label_network(net, load_query(opt, base));
    out << render_dot(net, &labels);
  }
  return kOk;
}

int cmd_session_show(const Options& opt, std::ostream& out, std::ostream& err) {
  const KnowledgeBase kb(load_base(opt));
  const LoadedSession session = load_session(opt, kb, err);
  out << "queries\t" << session.state.query_count << "\n";
  for (const auto& r : kb.base().conditionals()) {
    const Rational& level = session.state.base_levels.at(r.id());
    out << r.id() << "\t" << (opt.exact ? to_compact_string(level) : to_decimal_string(level)) << "\n";
  }
  return kOk;
}

}  // namespace

std::string render_activation(const KnowledgeBase& kb, const ActivationProfile& profile, const Rational& theta,
                              bool tsv, bool exact) {
  std::ostringstream out;
  if (tsv) {
    out << "id\tZ\tB\tW\tS\tA\tselected\n";
    for (const auto& e : profile.entries) {
      out << e.id << "\t" << z_rank(kb.partition(), e.id) << "\t" << to_compact_string(e.base_level) << "\t"
          << to_compact_string(e.weighting) << "\t" << to_compact_string(e.spreading) << "\t"
          << to_compact_string(e.total) << "\t" << (e.total >= theta ? 1 : 0) << "\n";
    }
    return out.str();
  }

  auto decimal = [exact](const Rational& v) { return exact ? to_compact_string(v) : to_decimal_string(v); };
  std::vector<std::vector<std::string>> rows{{"id", "Z", "B", "W", "S", "A", ""}};
  for (const auto& e : profile.entries) {
    rows.push_back({e.id, std::to_string(z_rank(kb.partition(), e.id)),
                    exact ? to_compact_string(e.base_level) : to_decimal_string(e.base_level),
                    to_compact_string(e.weighting), decimal(e.spreading), decimal(e.total),
                    e.total >= theta ? "*" : ""});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c] + std::string(width[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  out << "selected at theta=" << to_compact_string(theta) << ": " << join(select(profile, theta)) << "\n";
  return out.str();
}

std::string render_dot(const SpreadingNetwork& net, const TriggeringLabels* labels) {
  std::vector<std::string> vertices = net.vertices();
  std::sort(vertices.begin(), vertices.end());
  std::ostringstream out;
  out << "graph spreading_network {\n";
  for (const auto& v : vertices) {
    out << "  " << v;
    if (labels)
      out << " [label=\"" << v << " τ=" << to_compact_string(labels->tau.at(v)) << " ("
          << step_text(labels->step.at(v)) << ")\"]";
    out << ";\n";
  }
  for (const auto& [a, b] : net.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string render_trace(const QueryTrace& trace) {
  std::ostringstream out;
  out << "query\t" << trace.query.to_string() << "\n";
  for (const auto& [atom, tau] : trace.labels.tau)
    out << "tau\t" << atom << "\t" << to_compact_string(tau) << "\t" << step_text(trace.labels.step.at(atom)) << "\n";
  for (const auto& e : trace.profile.entries)
    out << "activation\t" << e.id << "\t" << to_compact_string(e.base_level) << "\t" << to_compact_string(e.weighting)
        << "\t" << to_compact_string(e.spreading) << "\t" << to_compact_string(e.total) << "\n";
  return out.str();
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + temp.string() + "'");
    out << text;
    out.flush();
    if (!out) throw Error("failed writing '" + temp.string() + "'");
  }
  std::filesystem::rename(temp, target);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Activation-based conditional inference over conditional belief bases", "actcond"};
  app.require_subcommand(1);
  Options opt;

  auto add_base = [&opt](CLI::App* sub) { sub->add_option("--base", opt.base_file, "Belief-base file")->required(); };
  auto add_query = [&opt](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--query,-q", opt.query, "Query conditional, e.g. \"(f | c && !s)\"");
    if (required) o->required();
  };
  auto add_format = [&opt](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "tsv"}));
    sub->add_flag("--exact", opt.exact, "Print exact rationals instead of rounded decimals");
  };

  auto* check = app.add_subcommand("check", "Decide consistency of a belief base");
  add_base(check);
  auto* zpart = app.add_subcommand("zpartition", "Print the Z-partition");
  add_base(zpart);

  auto* activation = app.add_subcommand("activation", "Print the activation table for a query");
  add_base(activation);
  add_query(activation, true);
  add_format(activation);
  activation->add_option("--theta", opt.theta, "Selection threshold (decimal or p/q)");
  activation->add_option("--session", opt.session_file, "Use base levels from this session file");

  auto* query = app.add_subcommand("query", "Answer a query with activation-based focusing");
  add_base(query);
  add_query(query, true);
  query->add_option("--session", opt.session_file, "Session file to read and update");
  query->add_option("--theta", opt.theta, "Initial selection threshold");
  query->add_option("--delta", opt.delta, "Forgetting rate in [0,1)");
  query->add_option("--schedule", opt.schedule, "Comma-separated decreasing thresholds ending at 0");
  query->add_flag("--no-forget", opt.no_forget, "Do not update base levels");
  query->add_flag("--trace", opt.trace, "Print triggering values and activations");

  auto* focus = app.add_subcommand("focus", "Print the syntactic focus of a query");
  add_base(focus);
  add_query(focus, true);
  focus->add_option("--depth,-i", opt.depth, "Focus iteration (0 = direct focus)");

  auto* dot = app.add_subcommand("export-dot", "Export the spreading activation network");
  add_base(dot);
  add_query(dot, false);

  auto* show = app.add_subcommand("session-show", "Print the base levels stored in a session");
  add_base(show);
  add_format(show);
  show->add_option("--session", opt.session_file, "Session file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(opt, out);
    if (zpart->parsed()) return cmd_zpartition(opt, out);
    if (activation->parsed()) return cmd_activation(opt, out, err);
    if (query->parsed()) return cmd_query(opt, out, err);
    if (focus->parsed()) return cmd_focus(opt, out);
    if (dot->parsed()) return cmd_export_dot(opt, out);
    if (show->parsed()) return cmd_session_show(opt, out, err);
  } catch (const InconsistentBase& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace actcond::cli
