#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "polyshare/polyshare.hpp"

namespace polyshare::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  std::string g;
  std::string delta;
  std::string blocks;
  std::string format = "text";
  std::string prime = "auto";
  std::string amplify = "add1,scale2";
  std::string archive;
  std::string instance;
  std::string bundle;
  std::string set;
  int m = 0;
  int tries = 200;
  std::uint64_t seed = 1;
  std::uint64_t secret = 0;
};

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string join(const std::vector<int>& v, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

inline std::string format_g(const UniformPolymatroid& z) { return "(" + join(z.increments()) + ")"; }

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  UniformPolymatroid polymatroid() const {
    detail::require(!o_.g.empty(), "--g is required");
    std::vector<int> g = parse_int_list(o_.g);
    if (o_.m == 0 || static_cast<int>(g.size()) == o_.m) return UniformPolymatroid(g);
    if (static_cast<int>(g.size()) == o_.m + 1) return UniformPolymatroid::from_full_sequence(g);
    throw InvalidArgument("--g has " + std::to_string(g.size()) + " entries but --m is " + std::to_string(o_.m));
  }

  DeltaFamily delta(int m) const {
    detail::require(!o_.delta.empty(), "--delta is required");
    return DeltaFamily::parse(o_.delta, m);
  }

  std::optional<Partition> blocks() const {
    if (o_.blocks.empty()) return std::nullopt;
    return Partition(parse_int_list(o_.blocks));
  }

  std::uint64_t prime(int m) const {
    if (o_.prime == "auto") return default_prime(m);
    const int p = detail::parse_int(o_.prime);
    detail::require(p >= 2 && is_prime(static_cast<std::uint64_t>(p)), "--prime must be 'auto' or a prime");
    return static_cast<std::uint64_t>(p);
  }

  bool json() const { return o_.format == "json"; }
  bool csv() const { return o_.format == "csv"; }

  void emit(Json j) const {
    j["schema_version"] = kSchemaVersion;
    out_ << j.dump(2) << "\n";
  }

  static Json witness_json(const CompatibilityWitness& w) {
    return {{"X", subset_to_json(w.x)}, {"Y", subset_to_json(w.y)}, {"condition", w.condition}};
  }

  static std::string witness_text(const CompatibilityWitness& w) {
    return "condition " + std::to_string(w.condition) + " fails for X=" + format_subset(w.x) +
           ", Y=" + format_subset(w.y);
  }

  int check_compat() const {
    const auto z = polymatroid();
    const auto d = delta(z.m());
    const auto r = is_compatible(z, d);
    if (json()) {
      Json j = {{"g", z.increments()}, {"delta", d.to_string()}, {"compatible", r.compatible}};
      if (r.witness) j["witness"] = witness_json(*r.witness);
      emit(j);
    } else if (csv()) {
      out_ << "compatible,X,Y,condition\n" << (r.compatible ? "true" : "false");
      if (r.witness)
        out_ << "," << csv_field(format_subset(r.witness->x)) << "," << csv_field(format_subset(r.witness->y))
             << "," << r.witness->condition;
      else
        out_ << ",,,";
      out_ << "\n";
    } else {
      out_ << (r.compatible ? "compatible" : "incompatible: " + witness_text(*r.witness)) << "\n";
    }
    return r.compatible ? kExitOk : kExitDomain;
  }

  int min_gamma() const {
    const auto z = polymatroid();
    const auto g = build_gamma(z, delta(z.m()), blocks());
    if (json()) {
      Json vs = Json::array();
      for (const auto& v : g.min_vectors()) vs.push_back(v.coords());
      emit({{"g", z.increments()}, {"delta", g.delta().to_string()}, {"blocks", g.blocks().sizes()},
            {"vectors", vs}});
    } else {
      for (const auto& v : g.min_vectors()) out_ << (csv() ? join(v.coords()) : format_vector(v)) << "\n";
    }
    return kExitOk;
  }

  static Json type_json(const HierarchyReport& h, int m) {
    Json j = {{"type", to_string(h.type.kind)},
              {"X", subset_to_json(h.type.upper)},
              {"Y", subset_to_json(h.type.lower)},
              {"maxChain", h.max_chain}};
    if (m == 4) j["code"] = table_code(h.type, m);
    return j;
  }

  int hierarchy() const {
    const auto z = polymatroid();
    const auto g = build_gamma(z, delta(z.m()), blocks());
    const auto h = analyze_hierarchy(g);
    const int m = z.m();
    if (json()) {
      Json j = type_json(h, m);
      j["g"] = z.increments();
      j["delta"] = g.delta().to_string();
      j["blocks"] = g.blocks().sizes();
      j["relation"] = relation_to_json(h.relation);
      emit(j);
    } else if (csv()) {
      out_ << "type,X,Y,code,max_chain\n"
           << to_string(h.type.kind) << "," << csv_field(format_subset(h.type.upper)) << ","
           << csv_field(format_subset(h.type.lower)) << "," << (m == 4 ? table_code(h.type, m) : "") << ","
           << h.max_chain << "\n";
    } else {
      out_ << "type " << to_string(h.type.kind);
      if (m == 4) out_ << " (" << table_code(h.type, m) << ")";
      out_ << "  X=" << format_subset(h.type.upper) << "  Y=" << format_subset(h.type.lower)
           << "  max chain " << h.max_chain << "\n";
      out_ << "relation (row y, column x, 1 when y is below or equivalent to x):\n";
      for (int y = 0; y < m; ++y) {
        for (int x = 0; x < m; ++x) out_ << (x ? " " : "  ") << (h.relation.at(y, x) ? 1 : 0);
        out_ << "\n";
      }
    }
    return kExitOk;
  }

  int classify() const {
    const auto z = polymatroid();
    const auto d = delta(z.m());
    const auto c = classify_instance(z, d, blocks());
    if (json()) {
      Json j = {{"g", z.increments()}, {"delta", d.to_string()}, {"compatible", c.compatible()}};
      if (c.compatible()) {
        Json t = type_json(*c.hierarchy, z.m());
        j.update(t);
        if (!t.contains("code")) j["code"] = to_string(c.hierarchy->type.kind);
      } else {
        j["code"] = "-";
        j["witness"] = witness_json(*c.compat.witness);
      }
      emit(j);
    } else if (csv()) {
      out_ << "compatible,code,X,Y,max_chain\n" << (c.compatible() ? "true" : "false") << "," << c.cell();
      if (c.compatible())
        out_ << "," << csv_field(format_subset(c.hierarchy->type.upper)) << ","
             << csv_field(format_subset(c.hierarchy->type.lower)) << "," << c.hierarchy->max_chain;
      else
        out_ << ",,,";
      out_ << "\n";
    } else if (c.compatible()) {
      out_ << c.cell() << "  " << to_string(c.hierarchy->type.kind) << "  X=" << format_subset(c.hierarchy->type.upper)
           << "  Y=" << format_subset(c.hierarchy->type.lower) << "  max chain " << c.hierarchy->max_chain << "\n";
    } else {
      out_ << "-  incompatible: " << witness_text(*c.compat.witness) << "\n";
    }
    return kExitOk;
  }

  int table() const {
    detail::require(o_.m >= 2 && o_.m <= 5, "--m must be between 2 and 5");
    const auto t = build_table(o_.m);
    if (json()) {
      Json cols = Json::array();
      for (const auto& z : t.columns) cols.push_back(z.increments());
      Json rows = Json::array();
      for (const auto& d : t.rows) rows.push_back(d.to_string());
      emit({{"m", t.m}, {"columns", cols}, {"rows", rows}, {"cells", t.cells}});
    } else if (csv()) {
      out_ << "row,delta";
      for (const auto& z : t.columns) out_ << "," << csv_field(format_g(z));
      out_ << "\n";
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out_ << r + 1 << "," << csv_field(t.rows[r].to_string());
        for (const auto& c : t.cells[r]) out_ << "," << c;
        out_ << "\n";
      }
    } else {
      for (std::size_t c = 0; c < t.columns.size(); ++c)
        out_ << "column " << std::setw(2) << c + 1 << "  g=" << format_g(t.columns[c]) << "\n";
      std::size_t width = 0;
      for (const auto& d : t.rows) width = std::max(width, d.to_string().size());
      out_ << "\n" << std::string(width + 5, ' ');
      for (std::size_t c = 0; c < t.columns.size(); ++c) out_ << std::setw(3) << c + 1;
      out_ << "\n";
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out_ << std::setw(3) << r + 1 << "  " << std::left << std::setw(static_cast<int>(width))
             << t.rows[r].to_string() << std::right;
        for (const auto& c : t.cells[r]) out_ << std::setw(3) << c;
        out_ << "\n";
      }
    }
    return kExitOk;
  }

  int enumerate_delta() const {
    detail::require(o_.m >= 2 && o_.m <= 5, "--m must be between 2 and 5");
    const auto classes = enumerate_deltas(o_.m);
    if (json()) {
      Json list = Json::array();
      for (std::size_t i = 0; i < classes.size(); ++i)
        list.push_back({{"index", i + 1},
                        {"delta", classes[i].representative.to_string()},
                        {"orbit_size", classes[i].orbit_size}});
      emit({{"m", o_.m}, {"count", classes.size()}, {"classes", list}});
    } else if (csv()) {
      out_ << "index,delta,orbit_size\n";
      for (std::size_t i = 0; i < classes.size(); ++i)
        out_ << i + 1 << "," << csv_field(classes[i].representative.to_string()) << "," << classes[i].orbit_size
             << "\n";
    } else {
      for (std::size_t i = 0; i < classes.size(); ++i)
        out_ << std::setw(3) << i + 1 << "  " << classes[i].representative.to_string() << "  (orbit "
             << classes[i].orbit_size << ")\n";
      out_ << classes.size() << " classes\n";
    }
    return kExitOk;
  }

  int conjecture_scan() const {
    detail::require(o_.m >= 2 && o_.m <= 5, "--m must be between 2 and 5");
    std::vector<Transform> transforms;
    for (const auto& name : detail::split(o_.amplify, ','))
      if (!detail::trim(name).empty()) transforms.push_back(parse_transform(detail::trim(name)));
    detail::require(!transforms.empty(), "--amplify needs at least one transform");
    const auto report = polyshare::conjecture_scan(o_.m, transforms);
    const Json j = scan_report_to_json(report);
    if (!o_.archive.empty()) {
      std::ofstream f(o_.archive);
      if (!f) throw DomainError("cannot write " + o_.archive);
      f << j.dump(2) << "\n";
    }
    if (json()) {
      emit(j);
    } else if (csv()) {
      out_ << "transform,g,g_amplified,delta\n";
      for (const auto& mm : report.mismatches)
        out_ << mm.transform << "," << csv_field(format_g(mm.base)) << "," << csv_field(format_g(mm.amplified))
             << "," << csv_field(mm.delta.to_string()) << "\n";
    } else {
      out_ << "m=" << report.m << "  pairs compared " << report.pairs_compared << "  compatibility disagreements "
           << report.compatibility_disagreements << "  mismatches " << report.mismatches.size() << "\n";
      for (const auto& mm : report.mismatches)
        out_ << "  " << mm.transform << ": g=" << format_g(mm.base) << " vs " << format_g(mm.amplified)
             << "  delta " << mm.delta.to_string() << "\n";
    }
    return kExitOk;
  }

  static Json search_failure_json(const BetaSearch& s) {
    Json forbidden = Json::array();
    for (Mask y : s.forbidden) forbidden.push_back(subset_to_json(y));
    Json containing = Json::array();
    for (Mask y : s.containing_w) containing.push_back(subset_to_json(y));
    return {{"found", false},         {"reason", s.reason},
            {"tries", s.tries},       {"dim_w", s.dim_w},
            {"forbidden", forbidden}, {"forbidden_containing_w", containing},
            {"capture_counts", s.capture_counts}};
  }

  int represent() const {
    const auto z = polymatroid();
    const auto d = delta(z.m());
    const auto p = prime(z.m());
    std::mt19937_64 rng(o_.seed);
    const auto search = search_extension(z, d, p, o_.tries, rng);
    if (!search) {
      if (json())
        emit(search_failure_json(search));
      else
        out_ << "no extension vector found: " << search.reason << " (dim W = " << search.dim_w << ")\n";
      return kExitDomain;
    }
    const Extension& e = *search.extension;
    const Representation& rep = e.base;
    const auto port = verify_port(e, d);
    if (json()) {
      Json bases = Json::array();
      for (const auto& b : rep.block_bases) bases.push_back(matrix_to_json(b));
      Json transcript = Json::array();
      for (const auto& row : port.transcript)
        transcript.push_back({{"X", subset_to_json(row.x)},
                              {"rank", row.rank},
                              {"rank_with_beta", row.rank_with_beta},
                              {"beta_in_span", row.beta_in_span},
                              {"in_delta", row.in_family}});
      Json pj = {{"ok", port.ok}, {"transcript", transcript}};
      if (port.counterexample) pj["counterexample"] = subset_to_json(*port.counterexample);
      emit({{"found", true},
            {"g", z.increments()},
            {"delta", d.to_string()},
            {"p", p},
            {"construction", rep.construction},
            {"ambient_dim", rep.ambient_dim},
            {"bases", bases},
            {"beta", e.beta},
            {"realized_delta", e.realized.to_string()},
            {"tries", search.tries},
            {"dim_w", search.dim_w},
            {"port", pj}});
    } else if (csv()) {
      out_ << "X,rank,rank_with_beta,beta_in_span,in_delta\n";
      for (const auto& row : port.transcript)
        out_ << csv_field(format_subset(row.x)) << "," << row.rank << "," << row.rank_with_beta << ","
             << row.beta_in_span << "," << row.in_family << "\n";
    } else {
      out_ << "p=" << p << "  D=" << rep.ambient_dim << "  beta=(";
      for (std::size_t i = 0; i < e.beta.size(); ++i) out_ << (i ? "," : "") << e.beta[i];
      out_ << ")  realized " << e.realized.to_string() << "  port " << (port.ok ? "ok" : "FAILED") << "  (" << rep.construction
           << " representation)\n";
    }
    return port.ok ? kExitOk : kExitDomain;
  }

  int share() const {
    const auto z = polymatroid();
    const auto d = delta(z.m());
    const auto p = prime(z.m());
    const Partition part = blocks() ? *blocks() : Partition::smallest_for(z);
    detail::require(o_.secret < p, "--secret must be below p = " + std::to_string(p));
    std::mt19937_64 rng(o_.seed);
    const auto search = search_extension(z, d, p, o_.tries, rng);
    if (!search) {
      if (json()) emit(search_failure_json(search));
      else out_ << "no extension vector found: " << search.reason << "\n";
      return kExitDomain;
    }
    const auto s = assign_vectors(*search.extension, part, rng, 50, kDefaultVerifyCap, o_.seed);
    const auto b = distribute(s, o_.secret, o_.seed);
    if (json()) {
      emit({{"instance", instance_to_json(s)}, {"bundle", bundle_to_json(b)}});
    } else {
      if (csv()) out_ << "participant,share\n";
      for (int k = 0; k < s.participants(); ++k)
        out_ << s.label(k) << (csv() ? "," : ": ") << b.shares[static_cast<std::size_t>(k)] << "\n";
    }
    return kExitOk;
  }

  static Json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidArgument("cannot read " + path);
    try {
      return Json::parse(f);
    } catch (const Json::parse_error& e) {
      throw InvalidArgument(path + ": " + e.what());
    }
  }

  int reconstruct() const {
    detail::require(!o_.instance.empty(), "--instance is required");
    detail::require(!o_.set.empty(), "--set is required");
    const Json file = read_json(o_.instance);
    const bool combined = file.contains("instance");
    const auto s = instance_from_json(combined ? file.at("instance") : file);
    Json bundle_json;
    if (!o_.bundle.empty())
      bundle_json = read_json(o_.bundle);
    else if (combined)
      bundle_json = file.at("bundle");
    else
      throw InvalidArgument("--bundle is required unless the instance file also holds the bundle");
    if (bundle_json.contains("bundle")) bundle_json = bundle_json.at("bundle");
    const auto b = bundle_from_json(bundle_json);
    const auto subset = parse_participants(s, o_.set);
    const Element secret = polyshare::reconstruct(s, subset, b.shares);
    if (json()) {
      std::vector<std::string> labels;
      for (int k : subset) labels.push_back(s.label(k));
      emit({{"set", labels}, {"secret", secret}});
    } else {
      if (csv()) out_ << "secret\n";
      out_ << secret << "\n";
    }
    return kExitOk;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Uniform polymatroid access structures and ideal linear secret sharing", "polyshare"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  };
  auto add_instance = [&](CLI::App* c, bool with_blocks) {
    c->add_option("--g", o.g, "Increment sequence g_0,...,g_{m-1}")->required();
    c->add_option("--delta", o.delta, "Minimal sets, e.g. \"{1};{2,3}\"")->required();
    c->add_option("--m", o.m, "Number of blocks (allows a trailing g_m = 0 in --g)");
    if (with_blocks) c->add_option("--blocks", o.blocks, "Block sizes, default g_0 + 1 each");
    add_format(c);
  };
  auto add_field = [&](CLI::App* c) {
    c->add_option("--prime", o.prime, "Field size: 'auto' or a prime");
    c->add_option("--seed", o.seed, "Random seed");
    c->add_option("--tries", o.tries, "Attempts for the extension vector search")->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check-compat", "Test compatibility of a support family");
  add_instance(check, false);
  auto* gamma = app.add_subcommand("min-gamma", "Minimal authorized vectors");
  add_instance(gamma, true);
  auto* hier = app.add_subcommand("hierarchy", "Hierarchical preorder on the blocks");
  add_instance(hier, true);
  auto* cls = app.add_subcommand("classify", "Compatibility, access structure and order type");
  add_instance(cls, true);
  auto* table = app.add_subcommand("table", "Classification grid for m blocks");
  table->add_option("--m", o.m, "Number of blocks")->required();
  add_format(table);
  auto* enumd = app.add_subcommand("enumerate-delta", "Support families up to relabeling");
  enumd->add_option("--m", o.m, "Number of blocks")->required();
  add_format(enumd);
  auto* scan = app.add_subcommand("conjecture-scan", "Compare preorders under sign-preserving changes of g");
  scan->add_option("--m", o.m, "Number of blocks")->required();
  scan->add_option("--amplify", o.amplify, "Comma-separated transforms: add<k>, scale<k>");
  scan->add_option("--archive", o.archive, "Write the full report to this JSON file");
  add_format(scan);
  auto* rep = app.add_subcommand("represent", "Linear representation and extension vector");
  add_instance(rep, false);
  add_field(rep);
  auto* share = app.add_subcommand("share", "Build a scheme and split a secret");
  add_instance(share, true);
  add_field(share);
  share->add_option("--secret", o.secret, "Secret field element")->required();
  auto* rec = app.add_subcommand("reconstruct", "Recover the secret from a set of shares");
  rec->add_option("--instance", o.instance, "Instance JSON (or combined share output)")->required();
  rec->add_option("--bundle", o.bundle, "Bundle JSON");
  rec->add_option("--set", o.set, "Participants as block.index, e.g. \"1.1,2.2\"")->required();
  add_format(rec);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Runner r(o, out);
  try {
    if (check->parsed()) return r.check_compat();
    if (gamma->parsed()) return r.min_gamma();
    if (hier->parsed()) return r.hierarchy();
    if (cls->parsed()) return r.classify();
    if (table->parsed()) return r.table();
    if (enumd->parsed()) return r.enumerate_delta();
    if (scan->parsed()) return r.conjecture_scan();
    if (rep->parsed()) return r.represent();
    if (share->parsed()) return r.share();
    if (rec->parsed()) return r.reconstruct();
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace polyshare::cli
