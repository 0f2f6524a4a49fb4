#include "brandt/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>

#include "CLI11.hpp"

#include "brandt/cache.hpp"
#include "brandt/error.hpp"
#include "brandt/report.hpp"
#include "brandt/structure.hpp"

namespace brandt::cli {

  using nlohmann::json;

  namespace {
    std::map<std::string, Command> const command_names{
        {"gen", Command::gen},
        {"endos", Command::endos},
        {"congruences", Command::congruences},
        {"rightideals", Command::rightideals},
        {"annihilators", Command::annihilators},
        {"radicals", Command::radicals},
        {"verify", Command::verify}};

    bool is_heavy(Command c) {
      return c == Command::congruences || c == Command::rightideals
             || c == Command::radicals || c == Command::verify;
    }

    NearSemiringTable obtain_table(RunConfig const& config) {
      if (!config.cache_path) {
        return build_nsr(config.n);
      }
      std::filesystem::path const path(*config.cache_path);
      if (std::filesystem::exists(path)) {
        NearSemiringTable t = load_cache(path);
        if (t.n() != config.n) {
          throw CacheError(path.string() + " holds n = " + std::to_string(t.n())
                           + ", not n = " + std::to_string(config.n));
        }
        return t;
      }
      NearSemiringTable t = build_nsr(config.n);
      save_cache(t, path);
      return t;
    }

    std::string join(json const& names) {
      std::string out = "{";
      bool        first = true;
      for (auto const& x : names) {
        out += (first ? "" : ", ") + x.get<std::string>();
        first = false;
      }
      return out + "}";
    }

    ////////////////////////////////////////////////////////////////////////
    // Text renderers, each reading the JSON report.
    ////////////////////////////////////////////////////////////////////////

    void print_generation(json const& j, std::ostream& out) {
      out << "n = " << j["n"] << '\n';
      if (j.contains("formula_only")) {
        out << "|A+(B_n)| = " << j["count"] << " (formula only)\n";
      } else {
        out << "|End(B_n)| = " << j["endomorphisms"] << '\n'
            << "|Aff(B_n)| = " << j["affine"] << '\n'
            << "|A+(B_n)| = " << j["count"] << '\n'
            << "|N| = " << j["total"] << '\n';
      }
      auto const& b = j["breakdown"];
      out << "constants = " << b["constants"]
          << ", singletons = " << b["singletons"]
          << ", n-support = " << b["n_support"] << '\n';
      if (j.contains("elements")) {
        for (auto const& name : j["elements"]) {
          out << "  " << name.get<std::string>() << '\n';
        }
      }
    }

    void print_endos(json const& j, std::ostream& out) {
      out << "|End(B_" << j["n"] << ")| = " << j["count"] << '\n';
      for (auto const& images : j["maps"]) {
        out << " ";
        for (std::size_t x = 0; x < images.size(); ++x) {
          out << ' ' << j["domain"][x].get<std::string>() << "->"
              << images[x].get<std::string>();
        }
        out << '\n';
      }
    }

    void print_lattice(json const& j, std::ostream& out) {
      out << "mode = " << j["mode"].get<std::string>()
          << ", congruences = " << j["count"] << '\n';
      for (auto const& c : j["congruences"]) {
        out << "  classes = " << c["classes"];
        if (c["is_equality"].get<bool>()) {
          out << " (equality)";
        }
        if (c["is_universal"].get<bool>()) {
          out << " (universal)";
        }
        out << ", kernel size = " << c["kernel"].size() << '\n';
      }
    }

    void print_right_ideals(json const& j, std::ostream& out) {
      out << "right-action congruences = " << j["congruences"]
          << ", right ideals = " << j["count"] << '\n';
      for (auto const& ideal : j["right_ideals"]) {
        out << "  size " << ideal.size() << ": " << join(ideal) << '\n';
      }
    }

    void print_annihilators(json const& j, std::ostream& out) {
      out << "C = " << join(j["carrier"]) << '\n';
      for (auto const& a : j["annihilators"]) {
        out << "  A(" << a["element"].get<std::string>()
            << ") = " << join(a["annihilator"]) << '\n';
      }
      out << "A(C) = " << join(j["annihilator_of_C"]) << '\n'
          << "strongly monogenic: "
          << (j["strongly_monogenic"].get<bool>() ? "yes" : "no") << '\n'
          << "N-subsemigroups of C: " << j["n_subsemigroups"].size() << '\n';
      for (auto const& sub : j["n_subsemigroups"]) {
        out << "  " << join(sub) << '\n';
      }
    }

    void print_radicals(json const& j, std::ostream& out) {
      auto value = [](json const& v) {
        return v.is_null() ? std::string("(blocked)") : v.get<std::string>();
      };
      for (auto const& [name, v] : j["J"].items()) {
        out << "J" << name << " = " << value(v) << '\n';
      }
      for (auto const& [name, v] : j["R"].items()) {
        out << name << " = " << value(v) << '\n';
      }
      out << "premises:\n";
      for (auto const& p : j["premises"]) {
        out << "  [" << (p["holds"].get<bool>() ? "ok" : "FAIL") << "] "
            << p["claim"].get<std::string>();
        if (!p["witness"].is_null()) {
          out << " -- " << p["witness"].get<std::string>();
        }
        out << '\n';
      }
      for (auto const& note : j["notes"]) {
        out << "note: " << note.get<std::string>() << '\n';
      }
    }

    void print_verification(json const& j, std::ostream& out) {
      for (auto const& c : j["checks"]) {
        out << (c["passed"].get<bool>() ? "PASS " : "FAIL ")
            << c["id"].get<std::string>() << " (n = " << c["n"]
            << "): " << c["detail"].get<std::string>() << '\n';
      }
      out << (j["passed"].get<bool>() ? "all checks passed" : "checks failed")
          << '\n';
    }

    void emit(RunConfig const& config, json const& report,
              void (*text)(json const&, std::ostream&), std::ostream& out) {
      if (config.output == OutputFormat::json) {
        out << report.dump(2) << '\n';
      } else {
        text(report, out);
      }
    }
  }  // namespace

  int run(RunConfig const& config, std::ostream& out, std::ostream& err) {
    if (config.n < 1) {
      err << "error: --n must be at least 1\n";
      return usage_error;
    }
    if (config.n > max_table_n) {
      if (config.command == Command::gen && config.n >= 2) {
        try {
          emit(config, formula_json(config.n), print_generation, out);
          return success;
        } catch (InvalidArgument const& e) {
          err << "error: " << e.what() << '\n';
          return usage_error;
        }
      }
      err << "error: tables are only built for n <= " << max_table_n
          << "; use `gen` for the size formula\n";
      return usage_error;
    }
    if (config.n == max_table_n && is_heavy(config.command)
        && !config.allow_heavy) {
      err << "error: congruence lattices for n = " << max_table_n
          << " take minutes; pass --allow-heavy to run them\n";
      return usage_error;
    }

    try {
      if (config.command == Command::endos) {
        BrandtSemigroup const b(config.n);
        emit(config, endomorphisms_json(b, endomorphisms(b)), print_endos, out);
        return success;
      }

      NearSemiringTable const t = obtain_table(config);
      switch (config.command) {
        case Command::gen: {
          BrandtSemigroup const b(config.n);
          emit(config,
               generation_json(t, endomorphisms(b).size(), affine_maps(b).size()),
               print_generation,
               out);
          return success;
        }
        case Command::congruences: {
          auto const lattice = congruence_lattice(t, config.mode);
          emit(config,
               lattice_json(t, config.mode, lattice,
                            t.size() <= partition_size_limit),
               print_lattice,
               out);
          return success;
        }
        case Command::rightideals: {
          auto const lattice
              = congruence_lattice(t, CompatibilityMode::right_action);
          emit(config, right_ideals_json(t, lattice), print_right_ideals, out);
          return success;
        }
        case Command::annihilators:
          emit(config, annihilators_json(t), print_annihilators, out);
          return success;
        case Command::radicals: {
          RadicalReport const r = radical_report(t);
          emit(config, radicals_json(r), print_radicals, out);
          if (!r.complete()) {
            err << "error: radical premises failed:";
            for (auto const& id : r.failed_premises()) {
              err << ' ' << id;
            }
            err << '\n';
            return check_failed;
          }
          return success;
        }
        case Command::verify: {
          VerificationReport const r = verify_all(t);
          emit(config, verification_json(t.n(), r), print_verification, out);
          return r.passed() ? success : check_failed;
        }
        case Command::endos:
          break;
      }
    } catch (InvalidArgument const& e) {
      err << "error: " << e.what() << '\n';
      return usage_error;
    } catch (Error const& e) {
      err << "internal error: " << e.what() << '\n';
      return internal_error;
    }
    return internal_error;
  }

  int main(std::vector<std::string> const& args,
           std::ostream&                   out,
           std::ostream&                   err) {
    CLI::App app{"Affine near-semirings over Brandt semigroups: generation, "
                 "congruences, right ideals, annihilators and radicals"};
    app.name("brandt-nsr");

    RunConfig   config;
    std::string command;
    std::string mode   = "twosided";
    std::string output = "text";
    std::string cache;

    std::vector<std::string> command_list;
    for (auto const& [name, c] : command_names) {
      command_list.push_back(name);
    }
    app.add_option("command", command, "What to compute")
        ->required()
        ->check(CLI::IsMember(command_list));
    app.add_option("--n", config.n, "Index of the Brandt semigroup B_n")
        ->required();
    app.add_option("--mode", mode, "Congruence compatibility mode")
        ->check(CLI::IsMember({"plus", "right", "twosided"}));
    app.add_option("--output", output, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cache", cache, "Load the tables from, or save them to, this JSON file");
    app.add_flag("--allow-heavy", config.allow_heavy,
                 "Allow congruence lattices for n = 4");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return success;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n' << app.help();
      return usage_error;
    }

    config.command = command_names.at(command);
    config.mode    = mode_from_string(mode);
    config.output  = output == "json" ? OutputFormat::json : OutputFormat::text;
    if (!cache.empty()) {
      config.cache_path = cache;
    }
    return run(config, out, err);
  }

}  // namespace brandt::cli
