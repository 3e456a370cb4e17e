// Command-line surface for homometry computations in Z_n and D_n: single-shot
// queries, census runs, the bundled reference tables and verification suites.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "dihom/enumeration.hpp"
#include "dihom/lift.hpp"
#include "dihom/music.hpp"
#include "dihom/verify.hpp"

namespace {

using dihom::Side;
using json = nlohmann::ordered_json;

struct Output {
  std::string format = "text";  // text | json | tsv
  std::string out_path;         // empty: stdout
  bool quiet = false;

  std::string text;
  json body = {{"command", ""},
               {"inputs", json::object()},
               {"verdicts", json::object()},
               {"vectors", json::object()},
               {"counts", json::object()}};
  std::string tsv;

  void emit() const {
    const std::string& payload = format == "json" ? json_payload() : format == "tsv" ? tsv : text;
    if (out_path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file '" + out_path + "'");
      file << payload;
    }
  }

 private:
  mutable std::string cached_json;
  const std::string& json_payload() const {
    cached_json = body.dump();
    cached_json += '\n';
    return cached_json;
  }
};

void add_output_options(CLI::App* cmd, Output& output, bool with_tsv = false) {
  cmd->add_option("--format", output.format, "output format")
      ->check(CLI::IsMember(with_tsv ? std::vector<std::string>{"text", "json", "tsv"}
                                     : std::vector<std::string>{"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", output.out_path, "write the primary output to a file");
  cmd->add_flag("--quiet", output.quiet, "suppress diagnostics on stderr");
}

int default_jobs() {
  if (const char* env = std::getenv("DIHOM_JOBS")) {
    const int value = std::atoi(env);
    if (value >= 1) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

dihom::DihedralSet parse_dn_input(int n, const std::string& text, bool music) {
  if (music) {
    if (n != 12) throw std::domain_error("--music requires modulus 12");
    return dihom::parse_chord_set(text);
  }
  return dihom::DihedralSet::parse(n, text);
}

std::string render_dn(const dihom::DihedralSet& s, bool music) {
  return music ? dihom::render_chord_set(s) : s.to_string();
}

json counts_json(const std::map<int, std::int64_t>& tuples) {
  json out = json::object();
  for (const auto& [t, count] : tuples) out[std::to_string(t)] = count;
  return out;
}

class StderrTimer {
 public:
  StderrTimer(std::string label, bool quiet)
      : label_(std::move(label)), quiet_(quiet), start_(std::chrono::steady_clock::now()) {}
  ~StderrTimer() {
    if (quiet_) return;
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
    std::cerr << "[dihom] " << label_ << " finished in " << elapsed.count() << " ms\n";
  }

 private:
  std::string label_;
  bool quiet_;
  std::chrono::steady_clock::time_point start_;
};

std::string verdict_line(const dihom::HomometryVerdict& verdict, bool music) {
  std::string line = "homometric: ";
  line += verdict.homometric ? "true" : "false";
  line += ", trivial: ";
  line += verdict.trivial_witness.has_value() ? "true" : "false";
  if (verdict.trivial_witness.has_value()) {
    line += ", witness: ";
    line += music ? dihom::render_triad(*verdict.trivial_witness)
                  : verdict.trivial_witness->to_string();
  }
  return line;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"exact homometry in the cyclic and dihedral groups"};
  app.require_subcommand(1);

  Output output;
  int exit_code = 0;

  // ---- iv ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("iv", "interval vector of a set");
    auto zn = std::make_shared<int>(0);
    auto dn = std::make_shared<int>(0);
    auto side_name = std::make_shared<std::string>("right");
    auto set_text = std::make_shared<std::string>();
    auto music = std::make_shared<bool>(false);
    cmd->add_option("--zn", *zn, "modulus of Z_n");
    cmd->add_option("--dn", *dn, "modulus of D_n");
    cmd->add_option("--side", *side_name, "left or right (D_n only)")
        ->check(CLI::IsMember({"left", "right"}));
    cmd->add_flag("--music", *music, "chord-name input for D_12");
    cmd->add_option("set", *set_text, "the set")->required();
    add_output_options(cmd, output);
    cmd->callback([=, &output] {
      if ((*zn == 0) == (*dn == 0))
        throw std::domain_error("exactly one of --zn and --dn is required");
      output.body["command"] = "iv";
      if (*zn != 0) {
        const dihom::ZnSet set = dihom::ZnSet::parse(*zn, *set_text);
        const dihom::IntervalVector v = dihom::iv(set);
        output.text = v.to_string() + "\n";
        output.body["inputs"] = {{"n", *zn}, {"set", set.to_string()}};
        output.body["vectors"] = {{"iv", v.counts}};
      } else {
        const Side side = dihom::parse_side(*side_name);
        const dihom::DihedralSet set = parse_dn_input(*dn, *set_text, *music);
        const dihom::DihedralIntervalVector v =
            side == Side::right ? right_iv(set) : left_iv(set);
        output.text = v.to_string() + "\n";
        output.body["inputs"] = {{"n", *dn}, {"side", *side_name}, {"set", set.to_string()}};
        output.body["vectors"] = {{"iv", v.counts}};
      }
    });
  }

  // ---- ifunc ------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("ifunc", "interval function between two Z_n sets");
    auto zn = std::make_shared<int>(12);
    auto text_a = std::make_shared<std::string>();
    auto text_b = std::make_shared<std::string>();
    cmd->add_option("--zn", *zn, "modulus of Z_n")->required();
    cmd->add_option("a", *text_a, "first set")->required();
    cmd->add_option("b", *text_b, "second set")->required();
    add_output_options(cmd, output);
    cmd->callback([=, &output] {
      const dihom::ZnSet a = dihom::ZnSet::parse(*zn, *text_a);
      const dihom::ZnSet b = dihom::ZnSet::parse(*zn, *text_b);
      const dihom::IntervalVector v = dihom::ifunc(a, b);
      output.body["command"] = "ifunc";
      output.text = v.to_string() + "\n";
      output.body["inputs"] = {{"n", *zn}, {"a", a.to_string()}, {"b", b.to_string()}};
      output.body["vectors"] = {{"ifunc", v.counts}};
    });
  }

  // ---- check ------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("check", "homometry and triviality verdict for a pair");
    auto zn = std::make_shared<int>(0);
    auto dn = std::make_shared<int>(0);
    auto side_name = std::make_shared<std::string>("right");
    auto text_a = std::make_shared<std::string>();
    auto text_b = std::make_shared<std::string>();
    auto music = std::make_shared<bool>(false);
    cmd->add_option("--zn", *zn, "modulus of Z_n");
    cmd->add_option("--dn", *dn, "modulus of D_n");
    cmd->add_option("--side", *side_name, "left or right (D_n only)")
        ->check(CLI::IsMember({"left", "right"}));
    cmd->add_flag("--music", *music, "chord-name input for D_12");
    cmd->add_option("a", *text_a, "first set")->required();
    cmd->add_option("b", *text_b, "second set")->required();
    add_output_options(cmd, output);
    cmd->callback([=, &output] {
      if ((*zn == 0) == (*dn == 0))
        throw std::domain_error("exactly one of --zn and --dn is required");
      output.body["command"] = "check";
      if (*zn != 0) {
        const dihom::ZnSet a = dihom::ZnSet::parse(*zn, *text_a);
        const dihom::ZnSet b = dihom::ZnSet::parse(*zn, *text_b);
        const bool homometric = dihom::is_homometric(a, b);
        const auto witness = homometric ? dihom::trivial_relation(a, b) : std::nullopt;
        std::string line = "homometric: ";
        line += homometric ? "true" : "false";
        line += ", trivial: ";
        line += witness.has_value() ? "true" : "false";
        if (witness.has_value()) line += ", witness: " + witness->to_string();
        output.text = line + "\n";
        output.body["inputs"] = {{"n", *zn}, {"a", a.to_string()}, {"b", b.to_string()}};
        output.body["verdicts"] = {{"homometric", homometric},
                                   {"trivial", witness.has_value()}};
        if (witness.has_value()) output.body["verdicts"]["witness"] = witness->to_string();
      } else {
        const Side side = dihom::parse_side(*side_name);
        const dihom::DihedralSet a = parse_dn_input(*dn, *text_a, *music);
        const dihom::DihedralSet b = parse_dn_input(*dn, *text_b, *music);
        const dihom::HomometryVerdict verdict = dihom::classify_homometry(a, b, side);
        output.text = verdict_line(verdict, *music) + "\n";
        output.body["inputs"] = {{"n", *dn},
                                 {"side", *side_name},
                                 {"a", a.to_string()},
                                 {"b", b.to_string()}};
        output.body["verdicts"] = {{"homometric", verdict.homometric},
                                   {"trivial", verdict.trivial_witness.has_value()}};
        if (verdict.trivial_witness.has_value())
          output.body["verdicts"]["witness"] = verdict.trivial_witness->to_string();
      }
    });
  }

  // ---- dual -------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("dual", "inversion transport between right and left homometry");
    auto dn = std::make_shared<int>(12);
    auto text_a = std::make_shared<std::string>();
    auto text_b = std::make_shared<std::string>();
    auto music = std::make_shared<bool>(false);
    cmd->add_option("--dn", *dn, "modulus of D_n")->required();
    cmd->add_flag("--music", *music, "chord-name input for D_12");
    cmd->add_option("a", *text_a, "first set")->required();
    cmd->add_option("b", *text_b, "second set")->required();
    add_output_options(cmd, output);
    cmd->callback([=, &output] {
      const dihom::DihedralSet a = parse_dn_input(*dn, *text_a, *music);
      const dihom::DihedralSet b = parse_dn_input(*dn, *text_b, *music);
      const auto [ia, ib] = dihom::duality_transport(a, b);
      output.body["command"] = "dual";
      output.text = render_dn(ia, *music) + "\n" + render_dn(ib, *music) + "\n";
      output.body["inputs"] = {{"n", *dn}, {"a", a.to_string()}, {"b", b.to_string()}};
      output.body["verdicts"] = {{"a", ia.to_string()}, {"b", ib.to_string()}};
    });
  }

  // ---- lift -------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("lift", "lift homometric Z_n sets into D_n");
    cmd->require_subcommand(1);

    auto* construct = cmd->add_subcommand("construct", "lift a conforming decomposition");
    auto zn = std::make_shared<int>(12);
    auto a1 = std::make_shared<std::string>();
    auto a2 = std::make_shared<std::string>();
    auto b1 = std::make_shared<std::string>();
    auto b2 = std::make_shared<std::string>();
    auto music = std::make_shared<bool>(false);
    construct->add_option("--zn", *zn, "modulus of Z_n")->required();
    construct->add_option("--a1", *a1, "first part of A")->required();
    construct->add_option("--a2", *a2, "second part of A")->required();
    construct->add_option("--b1", *b1, "first part of B")->required();
    construct->add_option("--b2", *b2, "second part of B")->required();
    construct->add_flag("--music", *music, "chord-name output for D_12");
    add_output_options(construct, output);
    construct->callback([=, &output] {
      const dihom::Decomposition d{
          dihom::ZnSet::parse(*zn, *a1), dihom::ZnSet::parse(*zn, *a2),
          dihom::ZnSet::parse(*zn, *b1), dihom::ZnSet::parse(*zn, *b2)};
      const dihom::LiftResult lift = dihom::construct_lift(d);
      output.body["command"] = "lift construct";
      output.text = "lifted_a: " + render_dn(lift.lifted_a, *music) + "\n" +
                    "lifted_b: " + render_dn(lift.lifted_b, *music) + "\n" +
                    "side: " + to_string(lift.side) + "\n" +
                    "nontrivial: " + (lift.nontrivial ? "true" : "false") + "\n";
      output.body["inputs"] = {{"n", *zn}, {"a1", *a1}, {"a2", *a2}, {"b1", *b1}, {"b2", *b2}};
      output.body["verdicts"] = {{"lifted_a", lift.lifted_a.to_string()},
                                 {"lifted_b", lift.lifted_b.to_string()},
                                 {"side", to_string(lift.side)},
                                 {"nontrivial", lift.nontrivial}};
    });

    auto* enumerate = cmd->add_subcommand("enumerate", "exhaust the sign assignments");
    auto ezn = std::make_shared<int>(12);
    auto eside = std::make_shared<std::string>("right");
    auto etext_a = std::make_shared<std::string>();
    auto etext_b = std::make_shared<std::string>();
    auto emusic = std::make_shared<bool>(false);
    enumerate->add_option("--zn", *ezn, "modulus of Z_n")->required();
    enumerate->add_option("--side", *eside, "left or right")
        ->check(CLI::IsMember({"left", "right"}));
    enumerate->add_flag("--music", *emusic, "chord-name output for D_12");
    enumerate->add_option("a", *etext_a, "first set")->required();
    enumerate->add_option("b", *etext_b, "second set")->required();
    add_output_options(enumerate, output);
    enumerate->callback([=, &output] {
      const dihom::ZnSet a = dihom::ZnSet::parse(*ezn, *etext_a);
      const dihom::ZnSet b = dihom::ZnSet::parse(*ezn, *etext_b);
      const Side side = dihom::parse_side(*eside);
      const auto lifts = dihom::enumerate_lifts(a, b, side);
      output.body["command"] = "lift enumerate";
      output.text = "count: " + std::to_string(lifts.size()) + "\n";
      json listing = json::array();
      for (const dihom::LiftResult& lift : lifts) {
        output.text += render_dn(lift.lifted_a, *emusic) + " & " +
                       render_dn(lift.lifted_b, *emusic) + "\n";
        listing.push_back({{"a", lift.lifted_a.to_string()}, {"b", lift.lifted_b.to_string()}});
      }
      output.body["inputs"] = {{"n", *ezn},
                               {"side", *eside},
                               {"a", a.to_string()},
                               {"b", b.to_string()}};
      output.body["counts"] = {{"lifts", lifts.size()}};
      output.body["verdicts"] = {{"lifts", std::move(listing)}};
    });
  }

  // ---- rosenblatt ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("rosenblatt",
                                   "the four-element homometric family in Z_4N");
    auto big_n = std::make_shared<int>(0);
    auto shift = std::make_shared<int>(0);
    auto with_lift = std::make_shared<bool>(false);
    cmd->add_option("--N", *big_n, "family parameter N >= 2")->required();
    cmd->add_option("--a", *shift, "shift a in [1, N-1]")->required();
    cmd->add_flag("--lift", *with_lift, "also print a right-homometric lift");
    add_output_options(cmd, output);
    cmd->callback([=, &output] {
      const auto [a, b] = dihom::rosenblatt_pair(*big_n, *shift);
      output.body["command"] = "rosenblatt";
      output.text = "a: " + a.to_string() + "\n" + "b: " + b.to_string() + "\n" +
                    "modulus: " + std::to_string(a.modulus()) + "\n";
      output.body["inputs"] = {{"N", *big_n}, {"a", *shift}};
      output.body["verdicts"] = {{"a", a.to_string()},
                                 {"b", b.to_string()},
                                 {"modulus", a.modulus()}};
      if (*with_lift) {
        const dihom::LiftResult lift =
            dihom::construct_lift(dihom::rosenblatt_decomposition(*big_n, *shift));
        output.text += "lifted_a: " + lift.lifted_a.to_string() + "\n" +
                       "lifted_b: " + lift.lifted_b.to_string() + "\n";
        output.body["verdicts"]["lifted_a"] = lift.lifted_a.to_string();
        output.body["verdicts"]["lifted_b"] = lift.lifted_b.to_string();
      }
    });
  }

  // ---- enumerate ----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("enumerate", "census of homometric t-uples");
    auto n = std::make_shared<int>(0);
    auto card = std::make_shared<int>(0);
    auto side_name = std::make_shared<std::string>("right");
    auto simultaneous = std::make_shared<bool>(false);
    auto convention = std::make_shared<std::string>("any");
    auto zn = std::make_shared<bool>(false);
    auto jobs = std::make_shared<int>(default_jobs());
    auto classes = std::make_shared<bool>(false);
    cmd->add_option("--n", *n, "modulus")->required();
    cmd->add_option("--card", *card, "cardinality")->required();
    cmd->add_option("--side", *side_name, "left or right")
        ->check(CLI::IsMember({"left", "right"}));
    cmd->add_flag("--simultaneous", *simultaneous, "restrict to both-side homometry");
    cmd->add_option("--convention", *convention, "simultaneous convention")
        ->check(CLI::IsMember({"frozen", "any"}))
        ->capture_default_str();
    cmd->add_flag("--zn", *zn, "census over Z_n instead of D_n");
    cmd->add_option("--jobs", *jobs, "worker threads")->capture_default_str();
    cmd->add_flag("--classes", *classes, "list the class representatives");
    add_output_options(cmd, output, true);
    cmd->callback([=, &output] {
      StderrTimer timer("enumerate n=" + std::to_string(*n) + " p=" + std::to_string(*card),
                        output.quiet);
      output.body["command"] = "enumerate";
      const auto conv = *convention == "frozen"
                            ? dihom::SimultaneousConvention::frozen_representatives
                            : dihom::SimultaneousConvention::any_representative;
      if (*zn) {
        const dihom::ZnCensus census = dihom::enumerate_zn(*n, *card, *jobs);
        output.text = "n=" + std::to_string(*n) + " p=" + std::to_string(*card) +
                      " zn: " + dihom::tuples_text(census.tuples) + "\n";
        output.tsv = std::to_string(*card) + "\t" + std::to_string(*n) + "\t" +
                     dihom::tuples_compact(census.tuples) + "\n";
        output.body["inputs"] = {{"n", *n}, {"p", *card}, {"space", "zn"}};
        output.body["counts"] = {{"tuples", counts_json(census.tuples)},
                                 {"orbits", census.orbit_count},
                                 {"subsets", census.subset_count}};
        if (*classes) {
          json listing = json::array();
          for (const auto& cls : census.classes) {
            json orbits = json::array();
            for (const auto& orbit : cls.orbits) orbits.push_back(orbit.to_string());
            listing.push_back({{"iv", cls.iv_counts}, {"orbits", std::move(orbits)}});
            output.text += "class:";
            for (const auto& orbit : cls.orbits) output.text += " {" + orbit.to_string() + "}";
            output.text += "\n";
          }
          output.body["verdicts"]["classes"] = std::move(listing);
        }
        return;
      }
      const Side side = dihom::parse_side(*side_name);
      if (*simultaneous) {
        const dihom::SimCensus census =
            dihom::enumerate_simultaneous(*n, *card, conv, side, *jobs);
        output.text = "n=" + std::to_string(*n) + " p=" + std::to_string(*card) +
                      " simultaneous(" + *side_name + "," + *convention +
                      "): " + dihom::tuples_text(census.tuples) + "\n";
        output.tsv = std::to_string(*card) + "\t" + std::to_string(*n) + "\t" +
                     dihom::tuples_compact(census.tuples) + "\n";
        output.body["inputs"] = {{"n", *n},
                                 {"p", *card},
                                 {"side", *side_name},
                                 {"simultaneous", true},
                                 {"convention", *convention}};
        output.body["counts"] = {{"tuples", counts_json(census.tuples)}};
        if (*classes) {
          for (const auto& cls : census.classes) {
            output.text += "class:";
            for (const auto& orbit : cls.orbits) output.text += " {" + orbit.to_string() + "}";
            output.text += "\n";
          }
        }
        return;
      }
      const dihom::DnCensus census = dihom::enumerate_dn(*n, *card, side, *jobs);
      output.text = "n=" + std::to_string(*n) + " p=" + std::to_string(*card) + " " +
                    *side_name + ": " + dihom::tuples_text(census.tuples) + "\n";
      output.tsv = std::to_string(*card) + "\t" + std::to_string(*n) + "\t" +
                   dihom::tuples_compact(census.tuples) + "\n";
      output.body["inputs"] = {{"n", *n}, {"p", *card}, {"side", *side_name}};
      output.body["counts"] = {{"tuples", counts_json(census.tuples)},
                               {"degenerate_tuples", counts_json(census.degenerate_tuples)},
                               {"orbits", census.orbit_count},
                               {"subsets", census.subset_count}};
      if (*classes) {
        json listing = json::array();
        for (const auto& cls : census.classes) {
          json orbits = json::array();
          for (const auto& orbit : cls.orbits) orbits.push_back(orbit.to_string());
          listing.push_back({{"iv", cls.iv_counts}, {"orbits", std::move(orbits)}});
          output.text += "class:";
          for (const auto& orbit : cls.orbits) output.text += " {" + orbit.to_string() + "}";
          output.text += "\n";
        }
        output.body["verdicts"]["classes"] = std::move(listing);
      }
    });
  }

  // ---- table1 -------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("table1", "musical listing for D_12 (p = 4 and 5)");
    auto jobs = std::make_shared<int>(default_jobs());
    cmd->add_option("--jobs", *jobs, "worker threads")->capture_default_str();
    add_output_options(cmd, output);
    cmd->callback([=, &output] {
      output.body["command"] = "table1";
      output.text = dihom::table1_listing(*jobs);
      json listing = json::object();
      for (int cardinality : {4, 5})
        for (Side side : {Side::left, Side::right}) {
          json column = json::array();
          for (const auto& cls : dihom::table1_classes(cardinality, side, *jobs))
            column.push_back(cls);
          listing["p" + std::to_string(cardinality) + "_" + to_string(side)] = std::move(column);
        }
      output.body["verdicts"] = std::move(listing);
    });
  }

  // ---- table2 -------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("table2", "reference census table");
    auto n = std::make_shared<int>(0);
    auto card = std::make_shared<int>(0);
    auto side_name = std::make_shared<std::string>("right");
    auto simultaneous = std::make_shared<bool>(false);
    auto convention = std::make_shared<std::string>("any");
    auto full = std::make_shared<bool>(false);
    auto jobs = std::make_shared<int>(default_jobs());
    cmd->add_option("--n", *n, "modulus (single cell)");
    cmd->add_option("--card", *card, "cardinality (single cell)");
    cmd->add_option("--side", *side_name, "left or right")
        ->check(CLI::IsMember({"left", "right"}));
    cmd->add_flag("--simultaneous", *simultaneous, "simultaneous column");
    cmd->add_option("--convention", *convention, "simultaneous convention")
        ->check(CLI::IsMember({"frozen", "any"}))
        ->capture_default_str();
    cmd->add_flag("--full", *full, "every cell of the bundled table");
    cmd->add_option("--jobs", *jobs, "worker threads")->capture_default_str();
    add_output_options(cmd, output, true);
    cmd->callback([=, &output] {
      output.body["command"] = "table2";
      const auto conv = *convention == "frozen"
                            ? dihom::SimultaneousConvention::frozen_representatives
                            : dihom::SimultaneousConvention::any_representative;
      if (*full) {
        StderrTimer timer("table2 --full", output.quiet);
        output.tsv = dihom::census_grid_tsv(*jobs, conv);
        json rows = json::array();
        for (const auto& [cardinality, cell_n] : dihom::census_grid()) {
          const dihom::DnCensus right = dihom::enumerate_dn(cell_n, cardinality, Side::right, *jobs);
          const dihom::SimCensus sim = dihom::simultaneous_from(right, conv);
          output.text += "p=" + std::to_string(cardinality) + " n=" + std::to_string(cell_n) +
                         ": " + dihom::tuples_text(right.tuples) +
                         " | simultaneous: " + dihom::tuples_text(sim.tuples) + "\n";
          rows.push_back({{"p", cardinality},
                          {"n", cell_n},
                          {"tuples", counts_json(right.tuples)},
                          {"simultaneous", counts_json(sim.tuples)}});
        }
        output.body["counts"] = {{"rows", std::move(rows)}};
        return;
      }
      if (*n == 0 || *card == 0)
        throw std::domain_error("either --full or both --n and --card are required");
      StderrTimer timer("table2 n=" + std::to_string(*n) + " p=" + std::to_string(*card),
                        output.quiet);
      const Side side = dihom::parse_side(*side_name);
      std::map<int, std::int64_t> tuples;
      if (*simultaneous)
        tuples = dihom::enumerate_simultaneous(*n, *card, conv, side, *jobs).tuples;
      else
        tuples = dihom::enumerate_dn(*n, *card, side, *jobs).tuples;
      output.text = dihom::tuples_text(tuples) + "\n";
      output.tsv = std::to_string(*card) + "\t" + std::to_string(*n) + "\t" +
                   dihom::tuples_compact(tuples) + "\n";
      output.body["inputs"] = {{"n", *n},
                               {"p", *card},
                               {"side", *side_name},
                               {"simultaneous", *simultaneous}};
      output.body["counts"] = {{"tuples", counts_json(tuples)}};
    });
  }

  // ---- verify ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("verify", "run a verification suite");
    auto suite = std::make_shared<std::string>();
    auto jobs = std::make_shared<int>(default_jobs());
    cmd->add_option("suite", *suite, "prop2|prop4|prop6|cor2|thm1|thm4|all")->required();
    cmd->add_option("--jobs", *jobs, "worker threads")->capture_default_str();
    add_output_options(cmd, output);
    cmd->callback([=, &output, &exit_code] {
      dihom::VerifyOptions options;
      options.jobs = *jobs;
      std::vector<std::string> names;
      if (*suite == "all")
        names = dihom::verification_suite_names();
      else
        names.push_back(*suite);
      output.body["command"] = "verify";
      output.body["inputs"] = {{"suite", *suite}};
      json verdicts = json::array();
      int failures = 0;
      for (const std::string& name : names) {
        StderrTimer timer("verify " + name, output.quiet);
        for (const dihom::CheckResult& result : dihom::run_verification_suite(name, options)) {
          output.text += result.passed ? "PASS" : "FAIL";
          output.text += " [" + name + "] " + result.name;
          if (!result.detail.empty()) output.text += " (" + result.detail + ")";
          output.text += "\n";
          verdicts.push_back(
              {{"suite", name}, {"check", result.name}, {"passed", result.passed}});
          if (!result.passed) ++failures;
        }
      }
      output.text += failures == 0 ? "all checks passed\n"
                                   : std::to_string(failures) + " check(s) failed\n";
      output.body["verdicts"] = {{"checks", std::move(verdicts)}};
      output.body["counts"] = {{"failures", failures}};
      if (failures != 0) exit_code = 2;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  output.emit();
  return exit_code;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
