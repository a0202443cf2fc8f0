#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exlogic/axioms.hpp"
#include "exlogic/constructions.hpp"
#include "exlogic/enumeration.hpp"
#include "exlogic/formula.hpp"
#include "exlogic/lattice.hpp"
#include "exlogic/lattice_io.hpp"
#include "exlogic/model_check.hpp"
#include "exlogic/provers.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct OutputOptions {
  bool json = false;
  bool timings = false;
};

void emit(const ordered_json& report, const OutputOptions& opts, const std::string& text) {
  if (opts.json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

ordered_json witness_json(const exlogic::Counterexample& w, const exlogic::FiniteLattice& L) {
  ordered_json j;
  ordered_json assignment = ordered_json::object();
  for (const auto& [letter, element] : w.assignment) assignment[letter] = L.name(element);
  j["assignment"] = assignment;
  if (w.lhs >= 0) j["lhs"] = L.name(w.lhs);
  if (w.rhs >= 0) j["rhs"] = L.name(w.rhs);
  j["detail"] = w.detail;
  return j;
}

int run_check_lattice(const std::string& path, const OutputOptions& opts) {
  const exlogic::FiniteLattice lattice = exlogic::load_lattice(path);
  const exlogic::LatticeClassReport report = exlogic::classify(lattice);

  ordered_json j;
  std::ostringstream text;
  j["command"] = "check-lattice";
  j["input"] = path;
  j["size"] = lattice.size();
  j["elements"] = lattice.names();
  ordered_json flags = ordered_json::object();
  ordered_json witnesses = ordered_json::object();
  text << path << ": " << lattice.size() << " elements\n";
  for (const auto& name : exlogic::LatticeClassReport::flag_names()) {
    const bool value = report.flag(name);
    flags[name] = value;
    text << "  " << name << ": " << (value ? "yes" : "no") << "\n";
    auto it = report.witnesses.find(name);
    if (it != report.witnesses.end()) {
      witnesses[name] = witness_json(it->second, lattice);
      if (!value) text << "    witness: " << it->second.detail << "\n";
    }
  }
  j["flags"] = flags;
  j["witnesses"] = witnesses;
  emit(j, opts, text.str());
  return kExitTrue;
}

int run_decide(const std::string& sequent_text, const std::string& logic_name, bool trace,
               int depth, const OutputOptions& opts) {
  const exlogic::Sequent sequent = exlogic::parse_sequent(sequent_text);
  const exlogic::LogicId logic = exlogic::logic_from_name(logic_name);

  ordered_json j;
  std::ostringstream text;
  j["command"] = "decide";
  j["sequent"] = exlogic::print(sequent);
  j["logic"] = logic_name;
  text << "sequent: " << exlogic::print(sequent) << "\n";
  text << "logic: " << logic_name << "\n";

  bool valid = false;
  if (logic == exlogic::LogicId::Ex) {
    const exlogic::ExVerdict verdict = exlogic::decide_ex(sequent);
    valid = verdict.ex_valid();
    j["ortho"] = verdict.ortho_valid;
    j["int"] = verdict.int_valid;
    text << "ortho: " << (verdict.ortho_valid ? "valid" : "invalid") << "\n";
    text << "int: " << (verdict.int_valid ? "valid" : "invalid") << "\n";
  } else if (logic == exlogic::LogicId::Fundamental) {
    exlogic::SaturationOptions options;
    options.negation_depth = depth;
    const exlogic::SaturationTable table = exlogic::saturate(sequent, logic, options);
    valid = table.goal_derivable();
    if (trace) {
      if (valid) {
        const std::vector<std::string> lines = table.explain_goal();
        j["trace"] = lines;
        text << "trace:\n";
        for (const auto& line : lines) text << "  " << line << "\n";
      } else {
        j["trace"] = ordered_json::array();
        text << "trace: goal not derivable within the bounded universe\n";
      }
    }
  } else {
    valid = exlogic::decide(logic, sequent);
  }
  j["valid"] = valid;
  text << "verdict: " << (valid ? "valid" : "invalid") << "\n";
  emit(j, opts, text.str());
  return valid ? kExitTrue : kExitFalse;
}

int run_countermodel(const std::string& sequent_text, int max_size,
                     const std::string& class_name, unsigned long long budget,
                     const OutputOptions& opts) {
  const exlogic::Sequent sequent = exlogic::parse_sequent(sequent_text);
  exlogic::EnumerationSpec spec;
  spec.max_size = max_size;
  spec.class_filter = class_name;
  const exlogic::CorpusTable table = exlogic::classify_corpus(spec);
  std::vector<exlogic::FiniteLattice> lattices;
  lattices.reserve(table.rows.size());
  for (const auto& row : table.rows) lattices.push_back(row.lattice);

  const exlogic::CountermodelResult result =
      exlogic::countermodel_search(sequent, lattices, budget);

  ordered_json j;
  std::ostringstream text;
  j["command"] = "countermodel";
  j["sequent"] = exlogic::print(sequent);
  j["class"] = class_name;
  j["max_size"] = max_size;
  j["lattices_checked"] = result.lattices_checked;
  if (result.witness) {
    const auto& row = table.rows[result.lattice_index];
    j["found"] = true;
    j["lattice_index"] = result.lattice_index;
    j["lattice_key"] = row.key;
    j["lattice_size"] = row.lattice.size();
    j["lattice"] = ordered_json::parse(exlogic::lattice_to_json(row.lattice));
    ordered_json assignment = ordered_json::object();
    for (const auto& [letter, element] : result.witness->assignment)
      assignment[letter] = row.lattice.name(element);
    j["assignment"] = assignment;
    j["detail"] = result.witness->detail(row.lattice);
    text << "countermodel found: lattice " << result.lattice_index << " of "
         << result.lattices_checked << " (size " << row.lattice.size() << ", class "
         << class_name << ")\n";
    text << "key: " << row.key << "\n";
    text << "witness: " << result.witness->detail(row.lattice) << "\n";
    text << exlogic::lattice_to_json(row.lattice);
    emit(j, opts, text.str());
    return kExitFalse;
  }
  j["found"] = false;
  text << "no countermodel: exhausted " << result.lattices_checked << " lattices of class "
       << class_name << " with size <= " << max_size << "\n";
  emit(j, opts, text.str());
  return kExitTrue;
}

int run_embed(const std::string& path, const std::string& out_dir, const OutputOptions& opts) {
  const exlogic::FiniteLattice lattice = exlogic::load_lattice(path);
  const exlogic::EmbeddingResult result = exlogic::ex_embedding(lattice);
  const auto& d = result.diagnostics;

  const fs::path input(path);
  fs::path dir = out_dir.empty() ? input.parent_path() : fs::path(out_dir);
  if (dir.empty()) dir = ".";
  if (!out_dir.empty()) fs::create_directories(dir);
  const std::string stem = input.stem().string();

  std::vector<std::string> written;
  if (result.ortho_part) {
    const fs::path file = dir / (stem + "_ortho.json");
    exlogic::save_lattice(*result.ortho_part, file.string());
    written.push_back(file.string());
  }
  {
    const fs::path file = dir / (stem + "_heyting.json");
    exlogic::save_lattice(result.heyting_part.algebra, file.string());
    written.push_back(file.string());
  }
  if (result.product_part) {
    const fs::path file = dir / (stem + "_map.tsv");
    std::ofstream out(file);
    if (!out) throw exlogic::LatticeError("io", "cannot write " + file.string());
    out << "element\timage\n";
    for (int i = 0; i < lattice.size(); ++i)
      out << lattice.name(i) << "\t" << result.product_part->name(result.map[i]) << "\n";
    written.push_back(file.string());
  }

  ordered_json j;
  std::ostringstream text;
  j["command"] = "embed";
  j["input"] = path;
  j["congruence_compatible"] = d.congruence_compatible;
  j["classes"] = result.congruence.class_count();
  j["quotient_built"] = d.quotient_built;
  j["quotient_is_ortholattice"] = d.quotient_is_ortholattice;
  j["downset_is_heyting"] = d.downset_is_heyting;
  j["downset_size"] = result.heyting_part.algebra.size();
  j["homomorphism"] = d.homomorphism;
  j["injective"] = d.injective;
  j["order_reflecting"] = d.order_reflecting;
  j["notes"] = d.notes;
  j["written"] = written;
  j["verified"] = d.all_pass();

  text << path << ": " << lattice.size() << " elements, "
       << result.congruence.class_count() << " negation-kernel classes\n";
  text << "  congruence compatible: " << (d.congruence_compatible ? "yes" : "no") << "\n";
  text << "  quotient: "
       << (d.quotient_built
               ? std::string(d.quotient_is_ortholattice ? "ortholattice" : "not an ortholattice")
               : std::string("not built"))
       << "\n";
  text << "  down-set algebra: " << result.heyting_part.algebra.size() << " elements, "
       << (d.downset_is_heyting ? "Heyting" : "not Heyting") << "\n";
  text << "  map: homomorphism " << (d.homomorphism ? "yes" : "no") << ", injective "
       << (d.injective ? "yes" : "no") << ", order-reflecting "
       << (d.order_reflecting ? "yes" : "no") << "\n";
  for (const auto& note : d.notes) text << "  note: " << note << "\n";
  for (const auto& file : written) text << "  wrote: " << file << "\n";
  text << (d.all_pass() ? "embedding verified\n"
                        : "embedding failed: input is not an Ex-lattice\n");
  emit(j, opts, text.str());
  return d.all_pass() ? kExitTrue : kExitFalse;
}

std::vector<exlogic::Sequent> read_sequent_file(const std::string& path) {
  std::vector<exlogic::Sequent> sequents;
  std::ifstream in(path);
  if (!in) throw exlogic::LatticeError("io", "cannot open " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    try {
      sequents.push_back(exlogic::parse_sequent(line));
    } catch (const exlogic::ParseError& error) {
      throw exlogic::ParseError(error.position, path + ":" + std::to_string(lineno) + ": " +
                                                    error.what());
    }
  }
  return sequents;
}

int run_translate(const std::string& ortho_path, const std::string& int_path,
                  const OutputOptions& opts) {
  exlogic::AxiomatizationPair pair;
  if (!ortho_path.empty()) pair.ortho_axioms = read_sequent_file(ortho_path);
  if (!int_path.empty()) pair.int_axioms = read_sequent_file(int_path);
  const std::vector<exlogic::Sequent> translated = exlogic::translate(pair);

  ordered_json j;
  std::ostringstream text;
  j["command"] = "translate";
  ordered_json axioms = ordered_json::array();
  for (const auto& sequent : translated) {
    axioms.push_back(exlogic::print(sequent));
    text << exlogic::print(sequent) << "\n";
  }
  j["axioms"] = axioms;
  emit(j, opts, text.str());
  return kExitTrue;
}

int run_dot(const std::string& path) {
  const exlogic::FiniteLattice lattice = exlogic::load_lattice(path);
  std::cout << exlogic::lattice_to_dot(lattice);
  return kExitTrue;
}

int run_corpus(int max_size, const std::string& class_name, const std::string& out_dir,
               const OutputOptions& opts) {
  exlogic::EnumerationSpec spec;
  spec.max_size = max_size;
  spec.class_filter = class_name;
  exlogic::CorpusTable table = exlogic::classify_corpus(spec);

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    std::map<int, int> index_in_size;
    for (auto& row : table.rows) {
      std::ostringstream name;
      name << "lat" << row.lattice.size() << "_" << std::setw(3) << std::setfill('0')
           << index_in_size[row.lattice.size()]++ << ".json";
      row.lattice.set_metadata("key", row.key);
      exlogic::save_lattice(row.lattice, (fs::path(out_dir) / name.str()).string());
    }
    std::ofstream csv(fs::path(out_dir) / "table.csv");
    if (!csv) throw exlogic::LatticeError("io", "cannot write table.csv under " + out_dir);
    csv << table.to_csv();
  }

  if (opts.json) {
    ordered_json j;
    j["command"] = "corpus";
    j["class"] = class_name;
    j["max_size"] = max_size;
    j["lattices"] = table.rows.size();
    ordered_json counts = ordered_json::object();
    for (const auto& [flag, count] : table.flag_counts) counts[flag] = count;
    j["flag_counts"] = counts;
    ordered_json combos = ordered_json::object();
    for (const auto& [combo, summary] : table.combos) {
      ordered_json s;
      s["count"] = summary.count;
      s["min_size"] = summary.min_size;
      s["min_key"] = summary.min_key;
      combos[combo] = s;
    }
    j["combos"] = combos;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << table.to_csv();
  }
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-lattice and sequent workbench for the shared fragment of "
               "orthologic and intuitionistic propositional logic"};
  app.require_subcommand(1);

  OutputOptions opts;
  int exit_code = kExitTrue;

  auto add_output_flags = [&opts](CLI::App* cmd) {
    cmd->add_flag("--json", opts.json, "machine-readable report");
    cmd->add_flag("--timings", opts.timings, "append elapsed wall time");
  };

  auto* check = app.add_subcommand("check-lattice", "validate a lattice file and classify it");
  std::string check_path;
  check->add_option("file", check_path, "lattice JSON file")->required();
  add_output_flags(check);
  check->callback([&]() { exit_code = run_check_lattice(check_path, opts); });

  auto* decide = app.add_subcommand("decide", "decide a sequent in a chosen logic");
  std::string decide_sequent, decide_logic = "ex";
  bool decide_trace = false;
  int decide_depth = 2;
  decide->add_option("sequent", decide_sequent, "sequent text, e.g. \"~~a |- a\"")->required();
  decide->add_option("--logic", decide_logic,
                     "fundamental|ortho|int|ex|classical (default ex)");
  decide->add_flag("--trace", decide_trace, "print a derivation (fundamental logic only)");
  decide->add_option("--depth", decide_depth,
                     "negation closure depth of the saturation universe (fundamental only)");
  add_output_flags(decide);
  decide->callback([&]() {
    if (decide_trace && decide_logic != "fundamental")
      throw CLI::ValidationError("--trace", "trace is available for --logic fundamental only");
    exit_code = run_decide(decide_sequent, decide_logic, decide_trace, decide_depth, opts);
  });

  auto* counter = app.add_subcommand("countermodel",
                                     "search enumerated lattices for a failing valuation");
  std::string counter_sequent, counter_class = "ex";
  int counter_max = 6;
  unsigned long long counter_budget = exlogic::kDefaultEvaluationBudget;
  counter->add_option("sequent", counter_sequent, "sequent text")->required();
  counter->add_option("--max-size", counter_max, "largest lattice size to search (default 6)");
  counter->add_option("--class", counter_class,
                      "lattice class to search: fundamental|ex|ortho|heyting|nu|vi|cl "
                      "(default ex)");
  counter->add_option("--budget", counter_budget, "valuation budget per lattice");
  add_output_flags(counter);
  counter->callback([&]() {
    exit_code = run_countermodel(counter_sequent, counter_max, counter_class, counter_budget,
                                 opts);
  });

  auto* embed = app.add_subcommand("embed",
                                   "factor a lattice through an ortholattice x Heyting product");
  std::string embed_path, embed_out;
  embed->add_option("file", embed_path, "lattice JSON file")->required();
  embed->add_option("--out-dir", embed_out,
                    "directory for the factor files (default: alongside the input)");
  add_output_flags(embed);
  embed->callback([&]() { exit_code = run_embed(embed_path, embed_out, opts); });

  auto* translate = app.add_subcommand(
      "translate", "reduce orthologic + intuitionistic axioms to one fundamental-logic theory");
  std::string translate_ortho, translate_int;
  translate->add_option("--ortho-axioms", translate_ortho,
                        "file of sequents extending orthologic, one per line");
  translate->add_option("--int-axioms", translate_int,
                        "file of sequents extending intuitionistic logic, one per line");
  add_output_flags(translate);
  translate->callback(
      [&]() { exit_code = run_translate(translate_ortho, translate_int, opts); });

  auto* dot = app.add_subcommand("dot", "render a lattice file as Graphviz DOT");
  std::string dot_path;
  dot->add_option("file", dot_path, "lattice JSON file")->required();
  dot->callback([&]() { exit_code = run_dot(dot_path); });

  auto* corpus = app.add_subcommand("corpus", "enumerate and classify small lattices");
  int corpus_max = 6;
  std::string corpus_class = "fundamental", corpus_out;
  corpus->add_option("--max-size", corpus_max, "largest lattice size (default 6)");
  corpus->add_option("--class", corpus_class, "keep only this class (default fundamental)");
  corpus->add_option("--out-dir", corpus_out, "write per-lattice files and table.csv here");
  add_output_flags(corpus);
  corpus->callback(
      [&]() { exit_code = run_corpus(corpus_max, corpus_class, corpus_out, opts); });

  const auto started = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitTrue : kExitInput;
  } catch (const exlogic::ParseError& e) {
    std::cerr << "error: " << e.what() << " (position " << e.position << ")\n";
    return kExitInput;
  } catch (const exlogic::EnumerationLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const exlogic::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const exlogic::LatticeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.law == "resource" ? kExitResource : kExitInput;
  } catch (const exlogic::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  if (opts.timings) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cout << "elapsed_ms: " << elapsed.count() << "\n";
  }
  return exit_code;
}
