#pragma once

// The linkage-lab command line. run() parses argv, dispatches to the library
// and writes one JSON document (or a text rendering of it) to `out`.
//
// Exit codes: 0 ok, 1 a checked property failed, 2 invalid input.

#include "grid_config.hpp"
#include "linkage_lab/linkage_lab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef LINKAGELAB_DEFAULT_CONFIG
#define LINKAGELAB_DEFAULT_CONFIG "config/grids.json"
#endif

namespace linkage_lab::cli {

using nlohmann::json;

enum Exit { kOk = 0, kPropertyFailure = 1, kInvalidInput = 2 };

namespace detail {

inline json to_json(const Weight& w) { return json(w.coords()); }
inline json to_json(const RootVector& r) { return json(r.coords()); }

inline json to_json(const Character& ch) {
  json j = json::object();
  for (const auto& [w, m] : ch.terms()) j[to_string(w)] = m;
  return j;
}

// Finite Weyl words and affine words share the numbering s1..sn, with s0 the affine generator.
inline json word_json(const std::vector<int>& zero_based_finite) {
  json j = json::array();
  for (int i : zero_based_finite) j.push_back(i + 1);
  return j;
}

inline json step_json(const AffineReflectionStep& s) { return {{"beta", to_json(s.beta)}, {"m", s.m}}; }

inline json validity_json(const EllValidity& v) {
  return {{"ell", v.ell}, {"odd", v.odd}, {"g2_coprime_to_3", v.g2_coprime_to_3}, {"above_coxeter", v.above_coxeter}};
}

inline json report_json(const CheckReport& r) {
  json stats = json::object();
  for (const auto& [k, v] : r.stats) stats[k] = v;
  return {{"check", r.check},         {"instances", r.instances}, {"passes", r.passes},
          {"failures", r.failures},   {"stats", stats},          {"ok", r.ok()}};
}

// "s0 s1 s2", "s0,s1,s2" or "0 1 2"
inline std::vector<int> parse_affine_word(const std::string& text, std::size_t generators) {
  std::vector<int> out;
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::string tok;
  std::size_t pos = 0;
  while (in >> tok) {
    pos = spaced.find(tok, pos);
    std::string digits = tok;
    if (!digits.empty() && (digits[0] == 's' || digits[0] == 'S')) digits.erase(0, 1);
    bool ok = !digits.empty() && digits.size() < 4;
    for (char c : digits) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    if (!ok || static_cast<std::size_t>(std::stoi(digits)) >= generators)
      throw InvalidInput("bad generator \"" + tok + "\" at position " + std::to_string(pos) + " in word \"" + text +
                         "\" (expected s0..s" + std::to_string(generators - 1) + ")");
    out.push_back(std::stoi(digits));
    pos += tok.size();
  }
  return out;
}

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

// "2..12"
inline std::pair<Int, Int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw InvalidInput("bad range \"" + s + "\" (expected a..b)");
  try {
    std::size_t used = 0;
    Int a = std::stoll(s.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("");
    std::string rest = s.substr(dots + 2);
    Int b = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
    if (a > b) throw InvalidInput("empty range \"" + s + "\"");
    return {a, b};
  } catch (const std::logic_error&) {
    throw InvalidInput("bad range \"" + s + "\" (expected a..b)");
  }
}

inline Matrix read_cartan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open Cartan matrix file " + path);
  std::vector<std::vector<Int>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& c : line)
      if (c == ',' || c == '[' || c == ']' || c == ';') c = ' ';
    std::istringstream ls(line);
    std::vector<Int> row;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        Int v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
        row.push_back(v);
      } catch (const std::logic_error&) {
        throw InvalidInput(path + ":" + std::to_string(lineno) + ": bad entry \"" + tok + "\"");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InvalidInput(path + ": empty Cartan matrix");
  Matrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw InvalidInput(path + ": Cartan matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

inline void render_text(std::ostream& out, const json& j, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() && !v.empty()) {
        out << prefix << k << ":\n";
        render_text(out, v, prefix + "  ");
      } else {
        out << prefix << k << ": " << v.dump() << "\n";
      }
    }
  } else {
    out << prefix << j.dump() << "\n";
  }
}

}  // namespace detail

/// What a command needs from ell before it will run.
struct Requirement {
  bool ell = false;
  bool odd = false;
  bool g2_coprime_to_3 = false;
  bool above_coxeter = false;
};

class App {
 public:
  App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Exact computations with root systems, affine Weyl groups and linkage."};
    app.name("linkage-lab");
    app.require_subcommand(1);
    app.fallthrough();
    add_globals(app);
    register_commands(app);
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kInvalidInput;
    }
    try {
      return handler_();
    } catch (const InvalidInput& e) {
      err_ << "invalid input: " << e.what() << "\n";
      return kInvalidInput;
    } catch (const std::overflow_error& e) {
      err_ << "invalid input: " << e.what() << " (values too large for exact 64-bit arithmetic)\n";
      return kInvalidInput;
    } catch (const PropertyViolation& e) {
      emit({{"error", "property violation"}, {"detail", e.what()}});
      return kPropertyFailure;
    }
  }

 private:
  // -- global options --------------------------------------------------------

  void add_globals(CLI::App& app) {
    app.add_option("--type", type_, "Cartan type, e.g. A2 or G2 (or a series letter with --rank)");
    app.add_option("--rank", rank_, "Rank when --type is a bare series letter");
    app.add_option("--cartan", cartan_file_, "File holding an explicit Cartan matrix, one row per line");
    app.add_option("--ell", ell_, "The order ell of the root of unity");
    app.add_option("--variant", variant_, "Translation lattice: Wl, WDl (default) or WlVee");
    app.add_flag("--json", json_flag_, "JSON output (default)");
    app.add_flag("--text", text_flag_, "Plain text output");
    app.add_flag("--force", force_, "Run even when ell fails a validity condition the command needs");
    app.add_option("--config", config_path_, "Verification grid file")->default_val(LINKAGELAB_DEFAULT_CONFIG);
  }

  RootSystem roots() const {
    if (cartan_file_ && type_) throw InvalidInput("--type and --cartan are mutually exclusive");
    if (cartan_file_) return RootSystem::build(CartanSpec::explicit_matrix(detail::read_cartan_file(*cartan_file_)));
    if (!type_) throw InvalidInput("a root system is required (--type or --cartan)");
    std::string label = *type_;
    if (label.size() == 1) {
      if (!rank_) throw InvalidInput("--type " + label + " needs --rank");
      label += std::to_string(*rank_);
    } else if (rank_ && CartanSpec::parse(label).rank != *rank_) {
      throw InvalidInput("--rank " + std::to_string(*rank_) + " contradicts --type " + label);
    }
    return RootSystem::of_type(label);
  }

  AffineVariant variant() const { return variant_ ? parse_variant(*variant_) : AffineVariant::WDl; }

  /// Validity report for ell; refuses (exit 2) on a failed requirement unless --force.
  std::optional<EllValidity> check_ell(const RootSystem& rs, const Requirement& req) const {
    if (!ell_) {
      if (req.ell) throw InvalidInput("--ell is required");
      return std::nullopt;
    }
    auto v = rs.validate_ell(*ell_);
    std::vector<std::string> failed;
    if (req.odd && !v.odd) failed.push_back("ell odd");
    if (req.g2_coprime_to_3 && !v.g2_coprime_to_3) failed.push_back("3 does not divide ell (G2)");
    if (req.above_coxeter && !v.above_coxeter)
      failed.push_back("ell > h = " + std::to_string(rs.coxeter_number()));
    if (!failed.empty()) {
      std::string msg = "ell=" + std::to_string(*ell_) + " violates:";
      for (const auto& f : failed) msg += " [" + f + "]";
      if (!force_) throw InvalidInput(msg + "; pass --force to run anyway");
      err_ << "warning: " << msg << " (forced)\n";
    }
    return v;
  }

  void emit(const json& j) const {
    if (text_flag_) detail::render_text(out_, j);
    else out_ << j.dump(2) << "\n";
  }

  // -- commands --------------------------------------------------------------

  void register_commands(CLI::App& app) {
    auto* info = app.add_subcommand("info", "Root system summary");
    info->callback([this] { handler_ = [this] { return cmd_info(); }; });

    auto* link = app.add_subcommand("linkage", "Is --to in the same linkage class as --from?");
    link->add_option("--from", from_)->required();
    link->add_option("--to", to_)->required();
    link->callback([this] { handler_ = [this] { return cmd_linkage(); }; });

    auto* strong = app.add_subcommand("strong-linkage", "Is --from strongly linked to --to?");
    strong->add_option("--from", from_)->required();
    strong->add_option("--to", to_)->required();
    strong->add_flag("--chain", chain_, "Print the witnessing chain");
    strong->callback([this] { handler_ = [this] { return cmd_strong_linkage(); }; });

    auto* block = app.add_subcommand("block", "Weights linked to --weight (default 0) in a box");
    block->add_option("--box", box_, "Coordinate bound")->required();
    block->add_option("--weight", weight_);
    block->callback([this] { handler_ = [this] { return cmd_block(); }; });

    auto* alcove = app.add_subcommand("alcove", "Position of a weight relative to the fundamental alcove");
    alcove->add_option("--weight", weight_)->required();
    alcove->callback([this] { handler_ = [this] { return cmd_alcove(); }; });

    auto* bwb = app.add_subcommand("bwb", "Borel-Weil-Bott degree and dominant representative");
    bwb->add_option("--weight", weight_)->required();
    bwb->callback([this] { handler_ = [this] { return cmd_bwb(); }; });

    auto* chr = app.add_subcommand("char", "Weyl character of a dominant weight");
    chr->add_option("--highest", weight_)->required();
    chr->callback([this] { handler_ = [this] { return cmd_char(); }; });

    auto* euler = app.add_subcommand("euler", "Euler characteristic of the line bundle of --weight");
    euler->add_option("--weight", weight_)->required();
    euler->callback([this] { handler_ = [this] { return cmd_euler(); }; });

    auto* kostant = app.add_subcommand("kostant", "Kostant partition function");
    kostant->add_option("--root", root_, "Element of the root lattice, e.g. r[1,1]")->required();
    kostant->add_option("--parts", parts_, "Count partitions into exactly this many positive roots");
    kostant->callback([this] { handler_ = [this] { return cmd_kostant(); }; });

    auto* stab = app.add_subcommand("stabilize", "Where Verma and Weyl weight multiplicities agree");
    stab->add_option("--mu", mu_)->required();
    stab->add_option("--tau", tau_)->required();
    stab->callback([this] { handler_ = [this] { return cmd_stabilize(); }; });

    auto* ext = app.add_subcommand("ext-dim", "Predicted Ext dimension between one-dimensional B-modules");
    ext->add_option("--zeta", zeta_)->required();
    ext->add_option("--eta", eta_)->required();
    ext->add_option("--n", n_)->required();
    ext->callback([this] { handler_ = [this] { return cmd_ext_dim(); }; });

    auto* tr = app.add_subcommand("translate", "Translation functor weight analysis");
    tr->require_subcommand(1);
    tr->fallthrough();
    auto* an = tr->add_subcommand("analyze", "To-wall and out-of-wall weights for one affine element");
    an->add_option("--lambda", lambda_)->required();
    an->add_option("--mu", mu_)->required();
    an->add_option("--word", word_, "Word in s0..sn, s0 the affine generator")->default_val("");
    an->callback([this] { handler_ = [this] { return cmd_translate_analyze(); }; });
    auto* tw = tr->add_subcommand("word", "Reduced word for the translation by ell * nu");
    tw->add_option("--nu", root_, "Dominant element of the root lattice, e.g. r[1,1]")->required();
    tw->callback([this] { handler_ = [this] { return cmd_translate_word(); }; });

    auto* q = app.add_subcommand("quantum", "Quantum numbers");
    q->require_subcommand(1);
    q->fallthrough();
    auto* qb = q->add_subcommand("qbinom", "Quantum binomial [n over t]_d, optionally at a root of unity");
    qb->add_option("--n", qn_)->required();
    qb->add_option("--t", qt_)->required();
    qb->add_option("--d", qd_)->default_val(1);
    qb->callback([this] { handler_ = [this] { return cmd_qbinom(); }; });

    auto* verify = app.add_subcommand("verify", "Run a verification grid");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto* pa = verify->add_subcommand("prop-aff", "Translation lattices against the gcd criterion");
    pa->add_option("--types", types_);
    pa->add_option("--ell-range", ell_range_);
    pa->callback([this] { handler_ = [this] { return cmd_verify("prop-aff"); }; });
    auto* tri = verify->add_subcommand("triangle", "Wall-crossing weight analysis grid");
    tri->add_option("--grid", grid_name_)->default_val("rank2");
    tri->callback([this] { handler_ = [this] { return cmd_verify("triangle"); }; });
    for (const char* name : {"bwb-grid", "quantum-integrality", "alcove-walls", "strong-linkage", "characters",
                             "stabilize", "all"}) {
      auto* sc = verify->add_subcommand(name);
      std::string n = name;
      sc->callback([this, n] { handler_ = [this, n] { return cmd_verify(n); }; });
    }
  }

  int cmd_info() {
    auto rs = roots();
    json j;
    j["label"] = rs.label();
    j["rank"] = rs.rank();
    json cartan = json::array();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < rs.rank(); ++k) row.push_back(rs.cartan()(i, k));
      cartan.push_back(row);
    }
    j["cartan"] = cartan;
    j["symmetrizer"] = rs.symmetrizer();
    json pos = json::array();
    for (const auto& pr : rs.positive_roots()) pos.push_back(detail::to_json(pr.root));
    j["positive_roots"] = pos;
    j["rho"] = detail::to_json(rs.rho());
    j["coxeter_number"] = rs.coxeter_number();
    j["indecomposable"] = rs.indecomposable();
    if (rs.indecomposable()) {
      j["highest_root"] = detail::to_json(rs.highest_root().root);
      j["highest_short_root"] = detail::to_json(rs.highest_short_root().root);
    }
    if (auto v = check_ell(rs, {})) j["validity"] = detail::validity_json(*v);
    emit(j);
    return kOk;
  }

  int cmd_linkage() {
    auto rs = roots();
    check_ell(rs, {true, true, true, false});
    Weight a = parse_weight(from_), b = parse_weight(to_);
    rs.check_rank(a.size());
    rs.check_rank(b.size());
    emit({{"linked", linked(rs, *ell_, a, b, variant())}});
    return kOk;
  }

  int cmd_strong_linkage() {
    auto rs = roots();
    check_ell(rs, {true, true, true, false});
    Weight mu = parse_weight(from_), lambda = parse_weight(to_);
    auto chain = strongly_linked(rs, *ell_, mu, lambda);
    json j{{"strongly_linked", chain.has_value()}};
    if (chain_) {
      if (chain && !verify_chain(rs, *ell_, *chain, mu, lambda))
        throw PropertyViolation("returned chain does not re-verify");
      json steps = json::array();
      if (chain)
        for (std::size_t i = 0; i < chain->steps.size(); ++i)
          steps.push_back({{"from", detail::to_json(chain->weights[i])},
                           {"to", detail::to_json(chain->weights[i + 1])},
                           {"beta", detail::to_json(chain->steps[i].beta)},
                           {"m", chain->steps[i].m}});
      j["chain"] = chain ? steps : json(nullptr);
    }
    emit(j);
    return kOk;
  }

  int cmd_block() {
    auto rs = roots();
    check_ell(rs, {true, true, true, false});
    if (box_ < 0 || box_ > 64) throw InvalidInput("--box must lie in 0..64");
    Weight w0 = weight_.empty() ? Weight(rs.rank()) : parse_weight(weight_);
    rs.check_rank(w0.size());
    auto block = enumerate_block(rs, *ell_, w0, box_, variant());
    json ws = json::array();
    for (const auto& w : block) ws.push_back(detail::to_json(w));
    emit({{"representative", detail::to_json(w0)}, {"box", box_}, {"count", block.size()}, {"weights", ws}});
    return kOk;
  }

  int cmd_alcove() {
    auto rs = roots();
    check_ell(rs, {true, true, true, true});
    Weight lambda = parse_weight(weight_);
    rs.check_rank(lambda.size());
    auto pos = fundamental_alcove_position(rs, *ell_, lambda);
    static const char* kinds[] = {"interior", "wall", "outside"};
    json walls = json::array();
    for (const auto& w : pos.walls) walls.push_back(detail::step_json(w));
    json j{{"position", kinds[static_cast<int>(pos.kind)]}, {"walls", walls}};
    bool regular = is_regular(rs, *ell_, lambda);
    j["regular"] = regular;
    j["located"] = nullptr;
    if (regular) {
      AlcoveGeometry geo(rs, *ell_);
      auto loc = geo.locate(lambda);
      j["located"] = {{"word", loc.word}, {"base", detail::to_json(loc.base)}, {"length", geo.length(loc.element)}};
    }
    emit(j);
    return kOk;
  }

  int cmd_bwb() {
    auto rs = roots();
    Weight mu = parse_weight(weight_);
    auto b = bwb_analysis(rs, mu);
    if (b.singular) {
      emit({{"status", "singular"}, {"lambda", nullptr}, {"degree", nullptr}, {"word", nullptr}});
    } else {
      emit({{"status", "regular"},
            {"lambda", detail::to_json(b.lambda)},
            {"degree", b.degree},
            {"word", detail::word_json(b.word)}});
    }
    return kOk;
  }

  int cmd_char() {
    auto rs = roots();
    Weight lambda = parse_weight(weight_);
    auto ch = weyl_character(rs, lambda);
    emit({{"highest", detail::to_json(lambda)},
          {"dimension", ch.dimension()},
          {"multiplicities", detail::to_json(ch)}});
    return kOk;
  }

  int cmd_euler() {
    auto rs = roots();
    Weight mu = parse_weight(weight_);
    auto b = bwb_analysis(rs, mu);
    emit({{"weight", detail::to_json(mu)},
          {"status", b.singular ? "singular" : "regular"},
          {"degree", b.singular ? json(nullptr) : json(b.degree)},
          {"character", detail::to_json(euler_characteristic(rs, mu))}});
    return kOk;
  }

  int cmd_kostant() {
    auto rs = roots();
    RootVector sigma = parse_root(root_);
    rs.check_rank(sigma.size());
    Int count = parts_ ? kostant_partition_with_parts(rs, sigma, *parts_) : kostant_partition(rs, sigma);
    emit({{"root", detail::to_json(sigma)}, {"parts", parts_ ? json(*parts_) : json(nullptr)}, {"count", count}});
    return kOk;
  }

  int cmd_stabilize() {
    auto rs = roots();
    auto c = stabilization_nu(rs, parse_weight(mu_), parse_weight(tau_));
    emit({{"n", c.n},
          {"nu", detail::to_json(c.nu)},
          {"weight", detail::to_json(c.weight)},
          {"verma", c.verma},
          {"weyl", c.weyl},
          {"previous_verma", c.previous_verma},
          {"previous_weyl", c.previous_weyl}});
    return kOk;
  }

  int cmd_ext_dim() {
    auto rs = roots();
    auto ell = check_ell(rs, {});
    Int d = ext_b_dimension(rs, ell ? ell->ell : 0, parse_weight(zeta_), parse_weight(eta_), n_);
    emit({{"dimension", d}});
    return kOk;
  }

  int cmd_translate_analyze() {
    auto rs = roots();
    check_ell(rs, {true, true, true, true});
    AlcoveGeometry geo(rs, *ell_);
    WallCrossing wc(geo, parse_weight(lambda_), parse_weight(mu_));
    auto wa = geo.element(detail::parse_affine_word(word_, geo.num_generators()));
    auto a = wc.analyze(wa);
    emit({{"nu1", detail::to_json(a.nu1)},
          {"word", geo.reduced_word(wa)},
          {"to_wall", detail::to_json(a.to_wall)},
          {"out_of_wall", {detail::to_json(a.out_of_wall.first), detail::to_json(a.out_of_wall.second)}},
          {"w_lambda", detail::to_json(a.w_lambda)},
          {"ws_lambda", detail::to_json(a.ws_lambda)},
          {"w_mu", detail::to_json(a.w_mu)},
          {"crossing", to_string(a.crossing)},
          {"euler",
           {{"pass", a.euler.pass}, {"lhs", detail::to_json(a.euler.lhs)}, {"rhs", detail::to_json(a.euler.rhs)}}}});
    return a.euler.pass ? kOk : kPropertyFailure;
  }

  int cmd_translate_word() {
    auto rs = roots();
    check_ell(rs, {true, true, true, true});
    AlcoveGeometry geo(rs, *ell_);
    auto tw = translation_reduced_word(geo, parse_root(root_));
    json images = json::array();
    for (const auto& w : tw.images) images.push_back(detail::to_json(w));
    emit({{"word", tw.word}, {"length", tw.word.size()}, {"images", images}, {"increasing", tw.increasing}});
    return tw.increasing ? kOk : kPropertyFailure;
  }

  int cmd_qbinom() {
    auto p = qbinom(qn_, qt_, qd_);
    json j{{"n", qn_}, {"t", qt_}, {"d", qd_}};
    if (ell_) {
      auto z = specialize(p, *ell_);
      j["ell"] = *ell_;
      j["residue"] = z.coeffs();
      j["is_zero"] = z.is_zero();
    } else {
      json poly = json::object();
      for (const auto& [e, c] : p.terms()) poly[std::to_string(e)] = c;
      j["poly"] = poly;
    }
    emit(j);
    return kOk;
  }

  int cmd_verify(const std::string& which) {
    GridConfig cfg = load_grid_config(config_path_);
    if (which == "all") {
      auto s = verify_all(cfg);
      json checks = json::array();
      Int inst = 0, passes = 0;
      for (const auto& c : s.checks) {
        checks.push_back(detail::report_json(c));
        inst += c.instances;
        passes += c.passes;
      }
      emit({{"checks", checks}, {"instances", inst}, {"passes", passes}, {"ok", s.ok()}});
      return s.ok() ? kOk : kPropertyFailure;
    }
    CheckReport r;
    if (which == "prop-aff") {
      if (!types_.empty()) cfg.prop_aff.types = detail::split_csv(types_);
      if (!ell_range_.empty()) std::tie(cfg.prop_aff.ell_min, cfg.prop_aff.ell_max) = detail::parse_range(ell_range_);
      for (const auto& t : cfg.prop_aff.types) RootSystem::of_type(t);
      r = verify_prop_aff(cfg.prop_aff);
    } else if (which == "triangle") {
      auto it = cfg.triangle.find(grid_name_);
      if (it == cfg.triangle.end()) throw InvalidInput("no triangle grid named \"" + grid_name_ + "\"");
      r = verify_triangle(it->second);
      r.check = "triangle:" + grid_name_;
    } else if (which == "bwb-grid") {
      r = verify_bwb(cfg.bwb);
    } else if (which == "quantum-integrality") {
      r = verify_quantum(cfg.quantum);
    } else if (which == "alcove-walls") {
      r = verify_alcove(cfg.alcove);
    } else if (which == "strong-linkage") {
      r = verify_strong_linkage(cfg.strong_linkage);
    } else if (which == "characters") {
      r = verify_characters(cfg.characters);
    } else {
      r = verify_stabilization(cfg.stabilization);
    }
    emit(detail::report_json(r));
    return r.ok() ? kOk : kPropertyFailure;
  }

  std::ostream& out_;
  std::ostream& err_;
  std::function<int()> handler_;

  std::optional<std::string> type_, cartan_file_, variant_;
  std::optional<int> rank_;
  std::optional<Int> ell_;
  bool json_flag_ = false, text_flag_ = false, force_ = false;
  std::string config_path_;

  std::string from_, to_, weight_, root_, mu_, tau_, zeta_, eta_, lambda_, word_;
  bool chain_ = false;
  Int box_ = 0, n_ = 0, qn_ = 0, qt_ = 0, qd_ = 1;
  std::optional<Int> parts_;
  std::string types_, ell_range_, grid_name_;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  App app(out, err);
  return app.run(argc, argv);
}

}  // namespace linkage_lab::cli
