#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "logquant/error.hpp"
#include "logquant/toricmodel.hpp"

namespace logquant::cli {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

std::string show(const Weight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.rank(); ++i) s += (i ? ", " : "") + w[i].str();
  return s + "]";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::int64_t int_field(const Json& payload, const char* key) {
  if (!payload.is_object() || !payload.contains(key)) malformed(std::string("payload needs '") + key + "'");
  return to_int64(integer_from_json(payload[key]), key);
}

// Toric data for every kind that describes a manifold.
ToricLogData resolve_toric(const JobConfig& job, const PolyhedraLimits& limits) {
  if (job.kind == "toric") return toric_from_json(job.payload);
  if (job.kind == "s2_family") {
    return s2_family(int_field(job.payload, "n1"), int_field(job.payload, "n2")).first;
  }
  if (job.kind == "delzant") return delzant(polyhedron_from_json(job.payload), limits);
  malformed("kind '" + job.kind + "' does not describe a toric log symplectic manifold");
}

std::string character_table(const Character& c) {
  std::ostringstream t;
  t << pad("weight", 16) << "mult\n";
  for (const auto& [w, m] : c.terms()) t << pad(show(w), 16) << m.str() << "\n";
  return t.str();
}

CommandResult error_result(const Error& e) {
  CommandResult r;
  r.exit_code = exit_code_for(e.kind());
  r.json = {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
  r.table = std::string("error: ") + e.what() + "\n";
  return r;
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) return std::nullopt;
  return read_all(f);
}

using Command = CommandResult (*)(const JobConfig&, const PolyhedraLimits&);

// Loads a job from text and runs it, converting library errors to results.
CommandResult execute(Command cmd, const std::string& text, const std::optional<Integer>& flag_cap,
                      std::optional<std::string>* format_from_config) {
  try {
    const JobConfig job = parse_job(parse_json(text));
    if (format_from_config && job.output_format) *format_from_config = job.output_format;
    PolyhedraLimits limits;
    if (const char* env = std::getenv("LOGQ_BOX_CAP"); env && *env) {
      limits.max_box_volume = parse_integer(env);
    }
    if (job.box_cap) limits.max_box_volume = *job.box_cap;
    if (flag_cap) limits.max_box_volume = *flag_cap;
    return cmd(job, limits);
  } catch (const Error& e) {
    return error_result(e);
  }
}

void emit(const CommandResult& r, const std::string& format, std::ostream& out) {
  if (format == "table") {
    out << r.table;
  } else if (format == "both") {
    out << r.table << "```json\n" << r.json.dump(2) << "\n```\n";
  } else {
    out << r.json.dump(2) << "\n";
  }
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return kMalformed;
    case ErrorKind::InfiniteSupport: return kInfiniteSupport;
    case ErrorKind::ParityInconsistent:
    case ErrorKind::NotProper:
    case ErrorKind::EmptyPiece:
    case ErrorKind::Unbounded:
    case ErrorKind::NotDelzant:
    case ErrorKind::NotFinite:
    case ErrorKind::RankMismatch: return kValidation;
    case ErrorKind::SizeLimit:
    case ErrorKind::NotSU2Character: return kOtherError;
  }
  return kOtherError;
}

JobConfig parse_job(const Json& j) {
  if (!j.is_object()) malformed("a job config must be a JSON object");
  JobConfig job;
  if (!j.contains("kind") || !j["kind"].is_string()) malformed("job config needs a string 'kind'");
  job.kind = j["kind"].get<std::string>();
  static const std::vector<std::string> kinds = {"toric", "s2_family", "delzant", "mincoupling"};
  if (std::find(kinds.begin(), kinds.end(), job.kind) == kinds.end()) malformed("unknown kind '" + job.kind + "'");
  if (!j.contains("payload")) malformed("job config needs a 'payload'");
  job.payload = j["payload"];
  if (j.contains("fixed_terms")) job.fixed_terms = fixed_terms_from_json(j["fixed_terms"]);
  if (j.contains("options")) {
    const Json& o = j["options"];
    if (!o.is_object()) malformed("'options' must be an object");
    if (o.contains("box_cap")) job.box_cap = integer_from_json(o["box_cap"]);
    if (o.contains("output_format")) {
      if (!o["output_format"].is_string()) malformed("output_format must be a string");
      job.output_format = o["output_format"].get<std::string>();
    }
  }
  return job;
}

CommandResult cmd_validate(const JobConfig& job, const PolyhedraLimits& limits) {
  const ToricLogData d = resolve_toric(job, limits);
  const ValidationReport report = validate(d, limits);
  CommandResult r;
  r.exit_code = report.ok() ? kOk : kValidation;
  r.json = to_json(report);
  std::ostringstream t;
  t << "parity: " << (report.parity_ok ? "pass" : "FAIL " + report.parity_detail) << "\n";
  for (const auto& s : report.strata) {
    std::string names;
    for (const auto& w : s.walls) names += (names.empty() ? "" : ",") + w;
    t << "stratum {" << names << "}: " << (s.proper ? "proper" : "NOT PROPER") << "\n";
  }
  for (std::size_t i = 0; i < report.pieces_nonempty.size(); ++i) {
    t << "piece " << i << ": " << (report.pieces_nonempty[i] ? "nonempty" : "EMPTY") << "\n";
  }
  t << "verdict: " << (report.ok() ? "pass" : "fail") << "\n";
  r.table = t.str();
  return r;
}

CommandResult cmd_quantize(const JobConfig& job, const PolyhedraLimits& limits) {
  const Character c = quantize_lattice(resolve_toric(job, limits), limits);
  return {kOk, to_json(c), character_table(c)};
}

CommandResult cmd_qr_check(const JobConfig& job, const PolyhedraLimits& limits) {
  const ToricLogData d = resolve_toric(job, limits);
  std::vector<FixedPointTerm> terms;
  if (job.fixed_terms) {
    terms = *job.fixed_terms;
  } else if (job.kind == "s2_family") {
    terms = fixed_terms_s2(int_field(job.payload, "n1"), int_field(job.payload, "n2"));
  } else if (job.kind == "delzant") {
    terms = fixed_terms_delzant(d.pieces.front().region, limits);
  } else {
    malformed("kind 'toric' needs explicit fixed_terms for qr-check");
  }
  const QRReport report = qr_check(d, terms, limits);
  std::ostringstream t;
  t << pad("weight", 16) << pad("lattice", 10) << pad("fixed_point", 13) << "reduced\n";
  for (const auto& row : report.per_weight_table) {
    t << pad(show(row.lambda), 16) << pad(row.lattice.str(), 10) << pad(row.fixed_point.str(), 13)
      << row.reduced.str();
    if (row.lattice != row.fixed_point) t << "   <-- differs";
    t << "\n";
  }
  t << "agree: " << (report.agree ? "yes" : "no") << "\n";
  return {report.agree ? kOk : kMismatch, to_json(report), t.str()};
}

CommandResult cmd_mincoupling(const JobConfig& job, const PolyhedraLimits&) {
  if (job.kind != "mincoupling") malformed("mincoupling needs a config of kind 'mincoupling'");
  const auto base = int_field(job.payload, "base_degree");
  if (!job.payload.contains("fibre")) malformed("payload needs 'fibre'");
  const SU2Char s = mincoupling_index(base, character_from_json(job.payload["fibre"]));
  std::ostringstream t;
  t << pad("irrep", 10) << "mult\n";
  for (const auto& [j, m] : s.mults()) t << pad("V_" + std::to_string(j), 10) << m.str() << "\n";
  return {kOk, to_json(s), t.str()};
}

CommandResult cmd_prequant(const JobConfig& job, const PolyhedraLimits& limits) {
  const ToricLogData d = resolve_toric(job, limits);
  const bool ok = prequant_check(d, limits);
  CommandResult r;
  r.json = {{"prequantizable", ok}};
  std::ostringstream t;
  t << "prequantizable: " << (ok ? "yes" : "no") << "\n";
  if (job.kind == "s2_family") {
    const auto params = s2_family(int_field(job.payload, "n1"), int_field(job.payload, "n2")).second;
    const std::string a = params.a.str(12, std::ios_base::fixed);
    const std::string a_prime = params.a_prime.str(12, std::ios_base::fixed);
    r.json["n"] = params.n;
    r.json["a"] = std::stod(a);
    r.json["a_prime"] = std::stod(a_prime);
    r.json["log_ratio_residual"] = params.integrality_residual().convert_to<double>();
    t << "n = " << params.n << "\n" << "a = " << a << "\n" << "a' = " << a_prime << "\n";
  }
  r.table = t.str();
  return r;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant quantization of toric and rank-1 log symplectic manifolds", "logq"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string config_path;
  bool use_stdin = false;
  std::string format = "json";
  std::string box_cap;
  std::string batch_dir;
  bool quiet = false;
  auto* config_opt = app.add_option("--config", config_path, "Job config file (JSON)");
  auto* stdin_opt = app.add_flag("--stdin", use_stdin, "Read the job config from standard input");
  config_opt->excludes(stdin_opt);
  auto* format_opt = app.add_option("--format", format, "Output format")
                         ->check(CLI::IsMember({"json", "table", "both"}));
  app.add_option("--box-cap", box_cap, "Maximum lattice box volume");
  app.add_option("--batch", batch_dir, "Run every *.json job in a directory (qr-check)");
  app.add_flag("--quiet", quiet, "Suppress diagnostics on stderr");

  struct Sub {
    const char* name;
    const char* help;
    Command cmd;
  };
  const std::vector<Sub> subs = {
      {"validate", "Check parity, properness and nonempty pieces", cmd_validate},
      {"quantize", "Signed lattice-point quantization", cmd_quantize},
      {"qr-check", "Compare lattice counting with the fixed-point formula", cmd_qr_check},
      {"mincoupling", "SU(2) index of a minimal-coupling space", cmd_mincoupling},
      {"prequant", "Prequantizability verdict and S^2 parameters", cmd_prequant},
  };
  for (const auto& s : subs) app.add_subcommand(s.name, s.help);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (!quiet) err << "logq: " << e.what() << "\n";
    return kMalformed;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  Command cmd = nullptr;
  for (const auto& s : subs) {
    if (chosen->get_name() == s.name) cmd = s.cmd;
  }

  std::optional<Integer> flag_cap;
  if (!box_cap.empty()) {
    try {
      flag_cap = parse_integer(box_cap);
    } catch (const Error& e) {
      if (!quiet) err << "logq: " << e.what() << "\n";
      return kMalformed;
    }
  }
  const bool explicit_format = format_opt->count() > 0;

  if (!batch_dir.empty()) {
    if (chosen->get_name() != "qr-check") {
      if (!quiet) err << "logq: --batch is only supported by qr-check\n";
      return kMalformed;
    }
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(batch_dir, ec)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    if (ec) {
      if (!quiet) err << "logq: cannot read batch directory " << batch_dir << "\n";
      return kMalformed;
    }
    std::sort(files.begin(), files.end());
    Json results = Json::array();
    std::string table;
    int overall = kOk;
    for (const auto& f : files) {
      const auto text = read_file(f.string());
      CommandResult r = text ? execute(cmd, *text, flag_cap, nullptr)
                             : error_result(Error(ErrorKind::MalformedInput, "cannot read " + f.string()));
      if (overall == kOk) overall = r.exit_code;
      results.push_back({{"file", f.filename().string()}, {"exit_code", r.exit_code}, {"result", r.json}});
      table += pad(f.filename().string(), 32) + (r.exit_code == kOk ? "agree" : "exit " + std::to_string(r.exit_code)) + "\n";
    }
    emit({overall, {{"results", std::move(results)}}, table}, format, out);
    return overall;
  }

  std::optional<std::string> text;
  if (use_stdin) {
    text = read_all(in);
  } else if (!config_path.empty()) {
    text = read_file(config_path);
    if (!text) {
      if (!quiet) err << "logq: cannot read " << config_path << "\n";
      return kMalformed;
    }
  } else {
    if (!quiet) err << "logq: one of --config PATH or --stdin is required\n";
    return kMalformed;
  }

  std::optional<std::string> config_format;
  const CommandResult r = execute(cmd, *text, flag_cap, &config_format);
  std::string effective = format;
  if (!explicit_format && config_format) {
    if (*config_format != "json" && *config_format != "table" && *config_format != "both") {
      if (!quiet) err << "logq: unknown output_format '" << *config_format << "'\n";
      return kMalformed;
    }
    effective = *config_format;
  }
  emit(r, effective, out);
  if (!quiet && r.json.contains("error")) err << "logq: " << r.json["error"]["message"].get<std::string>() << "\n";
  return r.exit_code;
}

}  // namespace logquant::cli
