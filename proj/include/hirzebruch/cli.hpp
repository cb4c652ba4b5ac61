#pragma once

// Command-line front end. `run` takes the argument vector (program name
// first) and writes one serialized OutputRecord to `out`; diagnostics go to
// `err`. Exit codes: 0 ok, 1 oracle mismatch, 2 usage error, 3 domain error.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "audit.hpp"
#include "bundles.hpp"
#include "cohomology.hpp"
#include "natural.hpp"
#include "oracle.hpp"
#include "picard.hpp"
#include "sheaves.hpp"

namespace hirzebruch::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kDomain = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One invocation's result. Every result row is a flat object of scalars
/// (integer, boolean, string or null) so that CSV and JSON carry the same data.
struct OutputRecord {
  std::string command;
  json inputs = json::object();
  std::vector<json> results;
  std::vector<std::string> findings;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline json to_json(const OutputRecord& r) {
  json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["results"] = json::array();
  for (const auto& row : r.results) j["results"].push_back(row);
  j["findings"] = r.findings;
  return j;
}

inline OutputRecord record_from_json(const json& j) {
  OutputRecord r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  for (const auto& row : j.at("results")) r.results.push_back(row);
  r.findings = j.at("findings").get<std::vector<std::string>>();
  return r;
}

enum class Format { Json, Csv, Table };

inline Format parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  throw UsageError("unknown format '" + std::string(s) + "' (expected json, csv or table)");
}

inline std::string scalar_text(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline std::string csv_field(const json& v) {
  std::string s = scalar_text(v);
  if (!v.is_string() || s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

/// Header from the first row's keys; every row has the same keys by construction.
inline void write_csv(std::ostream& out, const OutputRecord& r) {
  if (r.results.empty()) return;
  bool first = true;
  for (const auto& item : r.results.front().items()) {
    out << (first ? "" : ",") << item.key();
    first = false;
  }
  out << '\n';
  for (const auto& row : r.results) {
    first = true;
    for (const auto& item : row.items()) {
      out << (first ? "" : ",") << csv_field(item.value());
      first = false;
    }
    out << '\n';
  }
}

inline void write_table(std::ostream& out, const OutputRecord& r) {
  for (const auto& row : r.results) {
    bool first = true;
    for (const auto& item : row.items()) {
      out << (first ? "" : " ") << item.key() << '=' << (item.value().is_null() ? "-" : scalar_text(item.value()));
      first = false;
    }
    out << '\n';
  }
  for (const auto& f : r.findings) out << "finding: " << f << '\n';
}

inline void write_record(std::ostream& out, std::ostream& err, const OutputRecord& r, Format f) {
  switch (f) {
    case Format::Json: out << to_json(r).dump(2) << '\n'; break;
    case Format::Table: write_table(out, r); break;
    case Format::Csv:
      write_csv(out, r);
      for (const auto& finding : r.findings) err << "finding: " << finding << '\n';
      break;
  }
}

// ---------------------------------------------------------------------------
// Argument grammar

inline std::int64_t parse_int(std::string_view token, std::string_view flag) {
  std::int64_t v = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (token.empty() || ec != std::errc{} || ptr != last)
    throw UsageError("malformed integer '" + std::string(token) + "' for " + std::string(flag));
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (std::size_t pos = 0;;) {
    const std::size_t next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) return parts;
    pos = next + 1;
  }
}

/// FROM..TO, inclusive; a bare integer N means N..N.
inline IntRange parse_range(std::string_view token, std::string_view flag) {
  const std::size_t dots = token.find("..");
  if (dots == std::string_view::npos) {
    const std::int64_t v = parse_int(token, flag);
    return {v, v};
  }
  const auto bad = [&] { return UsageError("malformed range '" + std::string(token) + "' for " + std::string(flag)); };
  IntRange r;
  try {
    r = {parse_int(token.substr(0, dots), flag), parse_int(token.substr(dots + 2), flag)};
  } catch (const UsageError&) {
    throw bad();
  }
  if (r.from > r.to) throw UsageError("empty range '" + std::string(token) + "' for " + std::string(flag));
  return r;
}

inline Divisor parse_class(std::string_view token, std::string_view flag) {
  const auto parts = split(token, ',');
  if (parts.size() != 2) throw UsageError("malformed class '" + std::string(token) + "' for " + std::string(flag));
  try {
    return {parse_int(parts[0], flag), parse_int(parts[1], flag)};
  } catch (const UsageError&) {
    throw UsageError("malformed class '" + std::string(token) + "' for " + std::string(flag));
  }
}

inline std::vector<Divisor> parse_sum(std::string_view token, std::string_view flag) {
  std::vector<Divisor> out;
  for (auto part : split(token, ';')) out.push_back(parse_class(part, flag));
  return out;
}

inline IdealSheafModel parse_ideal(std::string_view token, std::string_view flag) {
  const auto parts = split(token, ':');
  if (parts.size() != 3) throw UsageError("malformed ideal '" + std::string(token) + "' for " + std::string(flag));
  Locus locus;
  try {
    locus = parse_locus(parts[0]);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown locus '" + std::string(parts[0]) + "' for " + std::string(flag));
  }
  return make_ideal(locus, parse_int(parts[1], flag), parse_class(parts[2], flag));
}

struct ExtensionArgs {
  std::int64_t u, v, m, s;
};

inline ExtensionArgs parse_extension(std::string_view token, std::string_view flag) {
  const auto parts = split(token, ',');
  if (parts.size() != 4)
    throw UsageError("malformed extension '" + std::string(token) + "' for " + std::string(flag) + " (want U,V,M,S)");
  return {parse_int(parts[0], flag), parse_int(parts[1], flag), parse_int(parts[2], flag), parse_int(parts[3], flag)};
}

struct Twisting {
  std::string name;
  Divisor by;
};

inline Twisting parse_wrt(const Surface& S, std::string_view token) {
  if (token == "M") return {"M", m_class(S)};
  if (token == "R") return {"R", r_class(S)};
  return {to_string(parse_class(token, "--wrt")), parse_class(token, "--wrt")};
}

inline std::string ranges_text(const std::vector<IntRange>& ranges) {
  std::string s;
  for (const auto& r : ranges) s += (s.empty() ? "" : ";") + std::to_string(r.from) + ".." + std::to_string(r.to);
  return s;
}

inline json optional_int(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

// ---------------------------------------------------------------------------
// Subcommands

struct CohArgs {
  std::string e, cls, twist_by, t;
};

inline OutputRecord cmd_coh(const CohArgs& a) {
  const Surface S = make_surface(parse_int(a.e, "--e"));
  const Divisor c = parse_class(a.cls, "--class");
  OutputRecord r{"coh", {{"e", a.e}, {"class", a.cls}}, {}, {}};
  auto row_of = [](Divisor d, const CohomologyTriple& x) {
    return json{{"a", d.a}, {"b", d.b}, {"h0", x.h0}, {"h1", x.h1}, {"h2", x.h2}, {"chi", x.euler()}};
  };
  if (a.t.empty()) {
    if (!a.twist_by.empty()) throw UsageError("--twist-by needs --t FROM..TO");
    r.results.push_back(row_of(c, cohomology(S, c)));
    return r;
  }
  const Divisor by = a.twist_by.empty() ? m_class(S) : parse_class(a.twist_by, "--twist-by");
  const IntRange t = parse_range(a.t, "--t");
  r.inputs["twist_by"] = to_string(by);
  r.inputs["t"] = a.t;
  for (const auto& p : cohomology_profile(S, c, by, t.from, t.to)) {
    json row{{"t", p.t}};
    row.update(row_of(p.twisted, p.triple));
    r.results.push_back(row);
  }
  return r;
}

struct CheckArgs {
  std::string e, line, sum, ideal, extension, wrt = "M";
  bool pp = false;
  bool evidence = false;
  std::string extra_window = "1";
};

inline OutputRecord cmd_check(const CheckArgs& a) {
  const Surface S = make_surface(parse_int(a.e, "--e"));
  const int given = !a.line.empty() + !a.sum.empty() + !a.ideal.empty() + !a.extension.empty();
  if (given != 1) throw UsageError("check needs exactly one of --line, --sum, --ideal, --extension");
  const std::int64_t extra = parse_int(a.extra_window, "--extra-window");
  if (extra < 0) throw UsageError("--extra-window must be >= 0, got '" + a.extra_window + "'");
  const Twisting wrt = parse_wrt(S, a.wrt);
  const Property property = a.pp ? Property::Vanishing : Property::Natural;

  OutputRecord r{"check", {{"e", a.e}}, {}, {}};
  if (!a.extension.empty()) {
    if (a.pp) throw UsageError("--pp is not available for --extension");
    if (wrt.name != "M") throw UsageError("--extension is audited w.r.t. M only, got --wrt '" + a.wrt + "'");
    const auto x = parse_extension(a.extension, "--extension");
    r.inputs["extension"] = a.extension;
    r.inputs["wrt"] = wrt.name;
    const ExtensionDatum d = construct_extension(S, x.u, x.v, x.m, x.s);
    const ExtensionAudit audit = audit_extension_pounds(d, extra);
    const Verdict& v = audit.verdict;
    json row{{"model", "extension"},
             {"wrt", wrt.name},
             {"property", "natural"},
             {"value", v.outcome == Outcome::Indeterminate ? json(nullptr) : json(v.holds())},
             {"verdict", to_string(v.outcome)},
             {"witness_t", optional_int(v.witness_t)},
             {"witness_h0", v.witness_t ? json(v.witness_h0) : json(nullptr)},
             {"witness_h1", v.witness_t ? json(v.witness_h1) : json(nullptr)},
             {"t_from", audit.t_from},
             {"t_to", audit.t_to}};
    if (a.evidence) {
      std::string ev;
      for (const auto& row_t : audit.rows) {
        const auto& i = row_t.interval;
        ev += (ev.empty() ? "" : " ") + std::to_string(row_t.t) + ":h0[" + std::to_string(i.h0_min) + "," +
              std::to_string(i.h0_max) + "]h1[" + std::to_string(i.h1_min) + "," + std::to_string(i.h1_max) +
              "]:" + std::string(to_string(row_t.outcome));
      }
      row["evidence"] = ev;
    }
    if (v.fails()) r.findings.push_back("extension " + a.extension + " fails at t=" + std::to_string(*v.witness_t));
    r.results.push_back(row);
    return r;
  }

  SheafModel model;
  std::string kind, key, text;
  if (!a.line.empty()) {
    model = Line{parse_class(a.line, "--line")};
    kind = "line", key = "line", text = a.line;
  } else if (!a.sum.empty()) {
    model = DirectSum{parse_sum(a.sum, "--sum")};
    kind = "sum", key = "sum", text = a.sum;
  } else {
    model = parse_ideal(a.ideal, "--ideal");
    kind = "ideal", key = "ideal", text = a.ideal;
  }
  r.inputs[key] = text;
  r.inputs["wrt"] = wrt.name;
  r.inputs["property"] = a.pp ? "vanishing" : "natural";

  const bool value = decide(S, model, wrt.by, property);
  const ScanEvidence scan = scan_verdict(S, model, wrt.by, extra, property);
  const Verdict& v = scan.verdict;
  json row{{"model", kind},
           {"wrt", wrt.name},
           {"property", a.pp ? "vanishing" : "natural"},
           {"value", value},
           {"verdict", to_string(v.outcome)},
           {"witness_t", optional_int(v.witness_t)},
           {"witness_h0", v.witness_t ? json(v.witness_h0) : json(nullptr)},
           {"witness_h1", v.witness_t ? json(v.witness_h1) : json(nullptr)},
           {"m0", m0(S, model, wrt.by)},
           {"stabilization_bound", scan.stabilization_bound}};
  if (a.evidence) {
    std::string ev;
    for (const auto& s : scan.rows)
      ev += (ev.empty() ? "" : " ") + std::to_string(s.t) + ":" + std::to_string(s.h0) + ":" + std::to_string(s.h1);
    row["evidence"] = ev;
  }
  if (value != v.holds()) r.findings.push_back("closed form and scan disagree for " + kind + " " + text);
  r.results.push_back(row);
  return r;
}

struct ConstructArgs {
  std::string e, u, v, m, s;
};

inline std::string candidates_text(const StabilityReport& rep) {
  std::string s;
  for (const auto& c : rep.candidates)
    s += (s.empty() ? "" : ";") + to_string(c.n) + (c.excluded ? ":excluded" : ":open") +
         (c.represents_tail ? ":tail" : "");
  return s;
}

inline OutputRecord cmd_construct(const ConstructArgs& a) {
  const Surface S = make_surface(parse_int(a.e, "--e"));
  const ExtensionDatum d =
      construct_extension(S, parse_int(a.u, "--u"), parse_int(a.v, "--v"), parse_int(a.m, "--m"), parse_int(a.s, "--s"));
  OutputRecord r{"construct", {{"e", a.e}, {"u", a.u}, {"v", a.v}, {"m", a.m}, {"s", a.s}}, {}, {}};
  const ExtensionAudit audit = audit_extension_pounds(d);
  json row{{"e", S.e()},
           {"u", d.u},
           {"v", d.v},
           {"m", d.m},
           {"s", d.s},
           {"a_tilde", d.range.a_tilde},
           {"b_tilde", d.range.b_tilde},
           {"sub", to_string(d.sub)},
           {"quotient", to_string(d.quotient.twist_class)},
           {"c1", to_string(d.c1())},
           {"c2", d.c2},
           {"section_min", d.section_min},
           {"cayley_bacharach", d.cayley_bacharach},
           {"ext_forced_split", d.ext_forced_split},
           {"pounds", to_string(audit.verdict.outcome)},
           {"pounds_witness_t", optional_int(audit.verdict.witness_t)}};
  std::vector<std::string> warnings;
  for (Polarization p : {Polarization::R, Polarization::M}) {
    const std::string tag(to_string(p));
    if (d.m != 0) {
      row["stable_" + tag] = nullptr;
      row["candidates_" + tag] = "";
      continue;
    }
    const StabilityReport rep = stability_certificate(d, p);
    row["stable_" + tag] = rep.certified;
    row["candidates_" + tag] = candidates_text(rep);
    for (const auto& w : rep.warnings)
      if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
  }
  std::string w;
  for (const auto& x : warnings) w += (w.empty() ? "" : "; ") + x;
  row["warnings"] = w;
  if (d.m != 0) r.findings.push_back("stability certificate skipped: needs m = 0");
  if (audit.verdict.fails())
    r.findings.push_back("extension fails the conditional property at t=" + std::to_string(*audit.verdict.witness_t));
  r.results.push_back(row);
  return r;
}

struct ClassifyArgs {
  std::string e, r = "2", u, v, m_max = "3";
};

inline OutputRecord cmd_classify(const std::string& name, const ClassifyArgs& a) {
  const Surface S = make_surface(parse_int(a.e, "--e"));
  const std::int64_t rank = parse_int(a.r, "--r");
  const IntRange u = parse_range(a.u, "--u"), v = parse_range(a.v, "--v");
  const std::int64_t m_max = parse_int(a.m_max, "--m-max");
  OutputRecord r{name, {{"e", a.e}, {"r", a.r}, {"u", a.u}, {"v", a.v}, {"m_max", a.m_max}}, {}, {}};
  for (const auto& cell : classify_region(S, rank, u, v, m_max))
    r.results.push_back(json{{"e", S.e()},
                             {"r", rank},
                             {"u", cell.u},
                             {"v", cell.v},
                             {"label", to_string(cell.label)},
                             {"c2_witness", ranges_text(cell.c2_witness)}});
  return r;
}

struct AuditArgs {
  std::string claims, e = "1..4";
};

inline OutputRecord cmd_audit(const AuditArgs& a) {
  std::vector<std::string> claims;
  if (a.claims.empty() || a.claims == "all") claims = audit_claims();
  else
    for (auto c : split(a.claims, ',')) {
      if (std::find(audit_claims().begin(), audit_claims().end(), c) == audit_claims().end())
        throw UsageError("unknown claim '" + std::string(c) + "' for --claims");
      claims.emplace_back(c);
    }
  const IntRange e = parse_range(a.e, "--e");
  if (e.from <= 0) throw DomainError("e must be >= 1, got range starting at " + std::to_string(e.from));
  OutputRecord r{"audit", {{"claims", a.claims.empty() ? "all" : a.claims}, {"e", a.e}}, {}, {}};
  const AuditReport rep = run_audit(claims, e);
  for (const auto& row : rep.rows)
    r.results.push_back(json{{"claim", row.claim},
                             {"e", row.e},
                             {"check", row.check},
                             {"status", to_string(row.status)},
                             {"cases", row.cases},
                             {"mismatches", row.mismatches},
                             {"detail", row.detail}});
  r.findings = rep.findings;
  return r;
}

struct OracleArgs {
  std::string e, a, b;
};

inline OutputRecord cmd_oracle(const OracleArgs& x) {
  const IntRange er = parse_range(x.e, "--e"), ar = parse_range(x.a, "--a"), br = parse_range(x.b, "--b");
  if (er.from <= 0) throw DomainError("e must be >= 1, got range starting at " + std::to_string(er.from));
  OutputRecord r{"oracle", {{"e", x.e}, {"a", x.a}, {"b", x.b}}, {}, {}};
  for (std::int64_t e = er.from; e <= er.to; ++e) {
    const Surface S = make_surface(e);
    std::int64_t classes = 0, bad_h0 = 0, bad_h2 = 0, bad_chi = 0, bad_van = 0;
    for (std::int64_t a = ar.from; a <= ar.to; ++a)
      for (std::int64_t b = br.from; b <= br.to; ++b) {
        const Divisor c{a, b};
        ++classes;
        const std::int64_t o0 = oracle_h0(S, c), o2 = oracle_h2(S, c), oc = oracle_chi(S, c);
        bool counted = false;
        auto note = [&](std::int64_t& counter, const std::string& what) {
          ++counter;
          if (!counted) r.findings.push_back("e=" + std::to_string(e) + " class " + to_string(c) + ": " + what);
          counted = true;
        };
        if (h0(S, c) != o0) note(bad_h0, "h0 differs from oracle");
        if (h2(S, c) != o2) note(bad_h2, "h2 differs from oracle");
        if (chi(S, c) != oc) note(bad_chi, "chi differs from oracle");
        const std::int64_t oracle_h1 = o0 + o2 - oc;
        if (oracle_h1 < 0) note(bad_chi, "oracle h1 negative");
        else if (h1_vanishes(S, c) != (oracle_h1 == 0)) note(bad_van, "h1_vanishes differs from oracle");
      }
    r.results.push_back(json{{"e", e},
                             {"classes", classes},
                             {"h0_mismatches", bad_h0},
                             {"h2_mismatches", bad_h2},
                             {"chi_mismatches", bad_chi},
                             {"vanishing_mismatches", bad_van}});
  }
  return r;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cohomology, natural-cohomology checks and bundle constructions on Hirzebruch surfaces",
               args.empty() ? "hirzebruch" : args.front()};
  app.require_subcommand(1);

  std::string format;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv or table");
  };

  CohArgs coh;
  auto* c_coh = app.add_subcommand("coh", "cohomology of one class or of a twist profile");
  c_coh->add_option("--e", coh.e, "surface index e >= 1")->required();
  c_coh->add_option("--class", coh.cls, "class A,B")->required();
  c_coh->add_option("--twist-by", coh.twist_by, "twisting class A2,B2 (default M)");
  c_coh->add_option("--t", coh.t, "twist range FROM..TO");
  add_format(c_coh);

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "decide the conditional (or, with --pp, unconditional) h1 property");
  c_check->add_option("--e", check.e)->required();
  c_check->add_option("--line", check.line, "line bundle U,V");
  c_check->add_option("--sum", check.sum, "direct sum \"U1,V1;U2,V2;...\"");
  c_check->add_option("--ideal", check.ideal, "ideal sheaf LOCUS:Z:U,V with LOCUS general|section|fiber");
  c_check->add_option("--extension", check.extension, "extension datum U,V,M,S");
  c_check->add_option("--wrt", check.wrt, "twisting class M, R or A,B");
  c_check->add_flag("--pp", check.pp, "require h1 = 0 for every twist");
  c_check->add_flag("--evidence", check.evidence, "include the scanned twists");
  c_check->add_option("--extra-window", check.extra_window, "extra twists scanned past the stabilization bound");
  add_format(c_check);

  ConstructArgs construct;
  auto* c_construct = app.add_subcommand("construct", "build an extension datum with certificates");
  for (auto [flag, target] : {std::pair{"--e", &construct.e}, {"--u", &construct.u}, {"--v", &construct.v},
                              {"--m", &construct.m}, {"--s", &construct.s}})
    c_construct->add_option(flag, *target)->required();
  add_format(c_construct);

  ClassifyArgs classify;
  auto setup_classify = [&](CLI::App* sub) {
    sub->add_option("--e", classify.e)->required();
    sub->add_option("--r", classify.r, "rank, 1 or 2");
    sub->add_option("--u", classify.u, "u range FROM..TO")->required();
    sub->add_option("--v", classify.v, "v range FROM..TO")->required();
    sub->add_option("--m-max", classify.m_max, "largest m used for c2 witnesses");
    add_format(sub);
  };
  auto* c_classify = app.add_subcommand("classify", "label (u,v) cells as nonexistent, existent or unknown");
  setup_classify(c_classify);
  auto* c_enumerate = app.add_subcommand("enumerate", "classify with CSV output by default");
  setup_classify(c_enumerate);

  AuditArgs audit;
  auto* c_audit = app.add_subcommand("audit", "re-derive the claim inventory and report findings");
  c_audit->add_option("--claims", audit.claims, "comma-separated claim ids (default all)");
  c_audit->add_option("--e", audit.e, "e range FROM..TO");
  add_format(c_audit);

  OracleArgs oracle;
  auto* c_oracle = app.add_subcommand("oracle", "compare closed forms with brute force over a grid");
  c_oracle->add_option("--e", oracle.e)->required();
  c_oracle->add_option("--a", oracle.a)->required();
  c_oracle->add_option("--b", oracle.b)->required();
  add_format(c_oracle);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("hirzebruch");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    Format fmt = c_enumerate->parsed() ? Format::Csv : Format::Table;
    if (const char* env = std::getenv("HIRZEBRUCH_FORMAT"); env && *env) fmt = parse_format(env);
    if (!format.empty()) fmt = parse_format(format);

    OutputRecord rec;
    if (c_coh->parsed()) rec = cmd_coh(coh);
    else if (c_check->parsed()) rec = cmd_check(check);
    else if (c_construct->parsed()) rec = cmd_construct(construct);
    else if (c_classify->parsed()) rec = cmd_classify("classify", classify);
    else if (c_enumerate->parsed()) rec = cmd_classify("enumerate", classify);
    else if (c_audit->parsed()) rec = cmd_audit(audit);
    else rec = cmd_oracle(oracle);

    write_record(out, err, rec, fmt);
    if (rec.command == "oracle" && !rec.findings.empty()) return kMismatch;
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::overflow_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace hirzebruch::cli
